#include "kunzlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "kunzlab/bounds.hpp"
#include "kunzlab/count_query.hpp"
#include "kunzlab/engine.hpp"
#include "kunzlab/families.hpp"
#include "kunzlab/graph.hpp"
#include "kunzlab/refdata.hpp"
#include "kunzlab/stats.hpp"
#include "kunzlab/verify.hpp"

namespace kunzlab::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  unsigned threads = 0;
  std::string format = "json";
  std::optional<std::string> ref_data;
  bool meta = false;
};

struct QueryFlags {
  std::optional<int> f, m, ell, depth, depth_max, contains;
  bool stressed = false, med = false;

  void attach(CLI::App* app) {
    app->add_option("--f", f, "Frobenius number");
    auto* mo = app->add_option("--m", m, "multiplicity");
    auto* lo = app->add_option("--ell", ell, "word length (multiplicity - 1)");
    mo->excludes(lo);
    app->add_option("--depth", depth, "exact depth");
    app->add_option("--depth-max", depth_max, "largest allowed depth");
    app->add_flag("--stressed", stressed, "last entry equals --depth");
    app->add_flag("--med", med, "maximal embedding dimension only");
    app->add_option("--contains", contains, "semigroup must contain this value");
  }

  CountQuery query() const {
    CountQuery q;
    q.frobenius = f;
    if (m) {
      if (*m < 1) throw UsageError("--m must be at least 1");
      q.length = *m - 1;
    }
    if (ell) q.length = ell;
    q.depth_exact = depth;
    q.depth_max = depth_max;
    q.stressed = stressed;
    q.med = med;
    q.contains = contains;
    if (!q.is_finite()) throw UsageError("need --f, or --m/--ell together with --depth or --depth-max");
    if (stressed && !depth) throw UsageError("--stressed requires --depth");
    try {
      q.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return q;
  }

  Json echo() const {
    Json j = Json::object();
    if (f) j["f"] = *f;
    if (m) j["m"] = *m;
    if (ell) j["ell"] = *ell;
    if (depth) j["depth"] = *depth;
    if (depth_max) j["depth_max"] = *depth_max;
    if (stressed) j["stressed"] = true;
    if (med) j["med"] = true;
    if (contains) j["contains"] = *contains;
    return j;
  }
};

unsigned workers(const Globals& g) {
  if (g.threads) return g.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

void print_json(std::ostream& out, Json record, const Globals& g, Clock::time_point start) {
  if (g.meta)
    record["meta"] = {{"elapsed_ms", std::chrono::duration<double, std::milli>(Clock::now() - start).count()},
                      {"workers", workers(g)}};
  out << record.dump(2) << '\n';
}

Json bracket_json(const ExactBracket& b, int digits) {
  return {{"lower_num", numerator(b.lower).str()},
          {"lower_den", denominator(b.lower).str()},
          {"upper_num", numerator(b.upper).str()},
          {"upper_den", denominator(b.upper).str()},
          {"decimal_lower", to_decimal(b.lower, digits, Rounding::down)},
          {"decimal_upper", to_decimal(b.upper, digits, Rounding::up)}};
}

void emit_distribution(std::ostream& out, const Distribution& d, const std::string& what, int f, const Globals& g,
                       Clock::time_point start) {
  if (g.format == "csv") {
    out << "key,count,probability_num,probability_den\n";
    for (const auto& [key, n] : d.counts) {
      const Rational p = d.probability(key);
      out << key << ',' << n.str() << ',' << numerator(p).str() << ',' << denominator(p).str() << '\n';
    }
    return;
  }
  Json rows = Json::array();
  for (const auto& [key, n] : d.counts) {
    const Rational p = d.probability(key);
    rows.push_back({{"key", key},
                    {"count", n.str()},
                    {"probability_num", numerator(p).str()},
                    {"probability_den", denominator(p).str()}});
  }
  print_json(out,
             {{"command", "dist"}, {"query", {{"statistic", what}, {"f", f}}}, {"total", d.total.str()}, {"rows", rows}},
             g, start);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counting of numerical semigroups through Kunz words", "kunzlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every subcommand");

  Globals g;
  app.add_option("--threads", g.threads, "worker threads (default: available parallelism)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--ref-data", g.ref_data, "directory holding table1.csv and table2.csv");
  app.add_flag("--meta", g.meta, "append elapsed time and worker count to JSON output");

  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  QueryFlags count_flags;
  auto* count_cmd = sub("count", "count Kunz words matching a query");
  count_flags.attach(count_cmd);

  QueryFlags enum_flags;
  std::optional<long> limit;
  auto* enum_cmd = sub("enumerate", "list Kunz words matching a query in lexicographic order");
  enum_flags.attach(enum_cmd);
  enum_cmd->add_option("--limit", limit, "stop after this many words")->check(CLI::NonNegativeNumber);

  std::string table_which;
  int table_max = 0;
  auto* table_cmd = sub("table", "recompute a reference table");
  table_cmd->add_option("which", table_which, "stressed3 or fm")->required()->check(CLI::IsMember({"stressed3", "fm"}));
  table_cmd->add_option("--max", table_max, "largest ell (stressed3, default 24) or f (fm, default 20)");

  std::string which;
  int cut = 0;
  auto* const_cmd = sub("constants", "exact brackets for the limiting constants");
  const_cmd->add_option("--which", which, "constant")
      ->required()
      ->check(CLI::IsMember({"c0", "c1", "mu0", "mu1", "gamma0", "gamma1"}));
  const_cmd->add_option("--cut", cut, "series cut-off (default 56 for c0/c1, 8 otherwise)");

  std::string statistic;
  int dist_f = 0;
  auto* dist_cmd = sub("dist", "exact distribution over semigroups with a given Frobenius number");
  dist_cmd->add_option("statistic", statistic, "mult or genus")->required()->check(CLI::IsMember({"mult", "genus"}));
  dist_cmd->add_option("--f", dist_f, "Frobenius number")->required()->check(CLI::PositiveNumber);

  int hom_d = 0, hom_q = 0;
  std::optional<std::string> graph_file;
  auto* hom_cmd = sub("hom", "homomorphism counts into threshold graphs");
  hom_cmd->add_option("--d", hom_d, "degree / side of K_{d,d}")->required()->check(CLI::PositiveNumber);
  hom_cmd->add_option("--q", hom_q, "threshold graph size")->required()->check(CLI::PositiveNumber);
  hom_cmd->add_option("--graph", graph_file, "edge-list file; also regularize it and count admissible homs");

  std::optional<int> b_f, b_ell, b_q, b_tail;
  auto* bounds_cmd = sub("bounds", "upper bounds next to exact counts");
  bounds_cmd->add_option("--f", b_f, "Frobenius number (with --depth)");
  bounds_cmd->add_option("--ell", b_ell, "word length");
  bounds_cmd->add_option("--depth", b_q, "depth q");
  bounds_cmd->add_option("--tail", b_tail, "tail length for the tail-heavy bound (with --ell, --depth)");

  std::string figure;
  double x_min = 0, x_max = 8, step = 0.05;
  auto* plot_cmd = sub("plot", "CSV data behind the figures");
  plot_cmd->add_option("which", figure, "growth, table1-ratio or fm-scatter")
      ->required()
      ->check(CLI::IsMember({"growth", "table1-ratio", "fm-scatter"}));
  plot_cmd->add_option("--x-min", x_min, "growth: first x");
  plot_cmd->add_option("--x-max", x_max, "growth: last x");
  plot_cmd->add_option("--step", step, "growth: spacing")->check(CLI::PositiveNumber);

  std::string suite = "acceptance";
  auto* verify_cmd = sub("verify", "run a verification suite, one PASS/FAIL line per check");
  verify_cmd->add_option("--suite", suite, "suite name")->check(CLI::IsMember(verify::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  const auto start = Clock::now();
  const CountOptions opts{g.threads, true};
  try {
    if (*count_cmd) {
      const CountQuery q = count_flags.query();
      const BigInt n = count(q, opts);
      if (g.format == "csv") {
        out << "query,count\n" << q.describe() << ',' << n.str() << '\n';
      } else {
        print_json(out, {{"command", "count"}, {"query", count_flags.echo()}, {"count", n.str()}}, g, start);
      }
    } else if (*enum_cmd) {
      const CountQuery q = enum_flags.query();
      WordStream stream(q);
      if (g.format == "csv") {
        out << "word,multiplicity,genus,frobenius\n";
        long emitted = 0;
        while (!limit || emitted < *limit) {
          auto w = stream.next();
          if (!w) break;
          const auto inv = invariants(*w);
          out << '"' << w->str() << "\"," << inv.multiplicity << ',' << inv.genus << ',' << inv.frobenius << '\n';
          ++emitted;
        }
      } else {
        Json words = Json::array();
        while (!limit || static_cast<long>(words.size()) < *limit) {
          auto w = stream.next();
          if (!w) break;
          words.push_back(w->str());
        }
        const std::size_t n = words.size();
        print_json(out, {{"command", "enumerate"}, {"query", enum_flags.echo()}, {"emitted", n}, {"words", words}}, g,
                   start);
      }
    } else if (*table_cmd) {
      const auto dir = resolve_ref_dir(g.ref_data);
      if (table_which == "stressed3") {
        const int top = table_max ? table_max : 24;
        if (top < 1 || top > 62) throw UsageError("--max must lie in 1..62 for stressed3");
        const Table1 ref = load_table1(dir);
        out << "ell,count,reference\n";
        for (int len = 1; len <= top; ++len) {
          const BigInt k = count_stressed3(len);
          auto it = ref.find(len);
          out << len << ',' << k.str() << ',' << (it == ref.end() ? "none" : it->second == k ? "match" : "MISMATCH")
              << '\n';
        }
      } else {
        const int top = table_max ? table_max : 20;
        if (top < 1) throw UsageError("--max must be positive");
        const Table2 ref = load_table2(dir);
        out << "f,m,count,table\n";
        for (int f = 1; f <= top; ++f)
          for (int len = 1; len <= f; ++len) {
            CountQuery q;
            q.frobenius = f;
            q.length = len;
            const BigInt k = count(q, opts);
            auto it = ref.find({f, len + 1});
            out << f << ',' << len + 1 << ',' << k.str() << ',' << (it == ref.end() ? "" : it->second.str()) << '\n';
          }
      }
    } else if (*const_cmd) {
      const Table1 t1 = load_table1(resolve_ref_dir(g.ref_data));
      const bool odd = which == "c1" || which == "mu1" || which == "gamma1";
      const Parity parity = odd ? Parity::odd : Parity::even;
      ExactBracket b;
      int used_cut;
      if (which == "c0" || which == "c1") {
        used_cut = cut ? cut : 56;
        b = backelin_bracket(parity, used_cut, t1);
      } else {
        used_cut = cut ? cut : 8;
        const ExactBracket c = backelin_bracket(parity, 56, t1);
        const SeriesKind kind = which == "mu0"   ? SeriesKind::mu0
                                : which == "mu1" ? SeriesKind::mu1
                                : which == "gamma0" ? SeriesKind::gamma0
                                                    : SeriesKind::gamma1;
        b = mu_gamma_partial(kind, used_cut, c, t1);
      }
      Json record = {{"command", "constants"},
                     {"query", {{"which", which}, {"cut", used_cut}}},
                     {"quantity", which == "c1" ? "C1/sqrt2" : which}};
      const Json bracket = bracket_json(b, 4);
      for (const auto& [k, v] : bracket.items()) record[k] = v;
      print_json(out, record, g, start);
    } else if (*dist_cmd) {
      if (statistic == "mult") {
        emit_distribution(out, mult_distribution(dist_f), "f-2m", dist_f, g, start);
      } else {
        const GenusStats s = genus_stats(dist_f);
        if (g.format == "csv") {
          emit_distribution(out, s.distribution, "genus", dist_f, g, start);
        } else {
          std::ostringstream tmp;
          Globals quiet = g;
          quiet.meta = false;
          emit_distribution(tmp, s.distribution, "genus", dist_f, quiet, start);
          Json record = Json::parse(tmp.str());
          record["mean"] = to_decimal(s.mean, 6, Rounding::down);
          record["mean_minus_3f_4"] = to_decimal(s.mean_deviation, 6, Rounding::down);
          record["variance"] = to_decimal(s.variance, 6, Rounding::down);
          record["skewness"] = fixed(s.skewness(), 6);
          record["kurtosis"] = to_decimal(s.kurtosis, 6, Rounding::down);
          print_json(out, record, g, start);
        }
      }
    } else if (*hom_cmd) {
      const LabeledGraph h = threshold_graph(hom_q);
      Json record = {{"command", "hom"},
                     {"query", {{"d", hom_d}, {"q", hom_q}}},
                     {"hom_kdd", hom_kdd(hom_d, hom_q).str()},
                     {"bound", kdd_hom_bound(hom_d, hom_q).str()}};
      if (graph_file) {
        std::ifstream in(*graph_file);
        if (!in) throw UsageError("--graph: cannot open " + *graph_file);
        std::stringstream ss;
        ss << in.rdbuf();
        const LabeledGraph gr = LabeledGraph::parse(ss.str());
        const LabeledGraph reg = regularize(gr, hom_d);
        record["graph"] = {{"vertices", gr.vertex_count()}, {"edges", gr.edge_count()}};
        if (gr.vertex_count() <= kHomGuard) record["graph"]["hom"] = hom_count(gr, h).str();
        record["regularized"] = {{"vertices", reg.vertex_count()},
                                 {"edges", reg.edge_count()},
                                 {"vertex_bound", to_decimal(regularize_vertex_bound(gr, hom_d), 3, Rounding::down)},
                                 {"admissible_hom", admissible_hom_count(reg, h, hom_q - 1).str()}};
      }
      print_json(out, record, g, start);
    } else if (*bounds_cmd) {
      Json record = {{"command", "bounds"}};
      Json query = Json::object();
      if (b_f) query["f"] = *b_f;
      if (b_ell) query["ell"] = *b_ell;
      if (b_q) query["depth"] = *b_q;
      if (b_tail) query["tail"] = *b_tail;
      record["query"] = query;
      bool any = false;
      if (b_f && b_q) {
        if (*b_q < 2) throw UsageError("--depth must be at least 2 with --f");
        CountQuery q;
        q.frobenius = b_f;
        q.depth_exact = b_q;
        record["frobenius_depth"] = {{"count", count(q, opts).str()},
                                     {"bound_log", fixed(frobenius_depth_bound(*b_f, *b_q).log(), 6)}};
        any = true;
      }
      if (b_ell && b_q && !b_tail) {
        CountQuery q;
        q.length = b_ell;
        q.depth_max = b_q;
        record["depth_capped"] = {{"count", count(q, opts).str()}, {"bound", depth_capped_bound(*b_ell, *b_q).str()}};
        any = true;
      }
      if (b_ell && b_tail && b_q) {
        const BigInt n = tail_heavy_count(TailHeavySpec::make(*b_ell, *b_tail, *b_q));
        record["tail_heavy"] = {{"count", n.str()}, {"bound_log", fixed(tail_heavy_bound(*b_ell, *b_tail, *b_q).log(), 6)}};
        any = true;
      }
      if (b_ell && !b_q && !b_f) {
        const Stressed3Bounds sb = stressed3_upper_bounds(*b_ell);
        record["stressed3"] = {{"count", count_stressed3(*b_ell).str()},
                               {"backelin", to_decimal(sb.backelin, 3, Rounding::up)},
                               {"naive", sb.naive.str()}};
        any = true;
      }
      if (!any) throw UsageError("bounds needs --f with --depth, --ell with --depth [--tail], or --ell alone");
      print_json(out, record, g, start);
    } else if (*plot_cmd) {
      if (figure == "growth") {
        if (x_max < x_min) throw UsageError("--x-max is below --x-min");
        out << "x,rate\n";
        const long steps = std::lround(std::floor((x_max - x_min) / step + 1e-9));
        for (long i = 0; i <= steps; ++i) {
          const double x = x_min + static_cast<double>(i) * step;
          out << fixed(x, 4) << ',' << fixed(growth_rate(x), 6) << '\n';
        }
      } else if (figure == "table1-ratio") {
        out << "ell,ratio\n";
        for (const auto& [len, k] : load_table1(resolve_ref_dir(g.ref_data)))
          out << len << ',' << fixed(std::exp(PowerProduct(k).log() - 0.5 * len * std::log(6.0)), 6) << '\n';
      } else {
        out << "f,m,f_over_m,root\n";
        for (const auto& [key, k] : load_table2(resolve_ref_dir(g.ref_data))) {
          const auto [f, m] = key;
          if (k == 0) continue;
          out << f << ',' << m << ',' << fixed(static_cast<double>(f) / m, 6) << ','
              << fixed(std::exp(PowerProduct(k).log() / m), 6) << '\n';
        }
      }
    } else if (*verify_cmd) {
      const verify::Context ctx = verify::load_context(resolve_ref_dir(g.ref_data), g.threads);
      bool ok = true;
      verify::run_suite(suite, ctx, [&](const verify::CheckResult& r) {
        out << verify::format_line(r) << '\n' << std::flush;
        ok = ok && r.passed;
      });
      return ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace kunzlab::cli
