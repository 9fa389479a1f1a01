#include "kunzlab/count_query.hpp"

#include <stdexcept>

namespace kunzlab {

bool CountQuery::is_finite() const {
  return frobenius.has_value() || (length.has_value() && (depth_max || depth_exact));
}

void CountQuery::validate() const {
  if (!is_finite())
    throw std::invalid_argument("unbounded query: give a Frobenius number, or a length with a depth cap");
  if (length && *length < 0) throw std::invalid_argument("length must be nonnegative");
  if (depth_max && *depth_max < 0) throw std::invalid_argument("depth cap must be nonnegative");
  if (depth_exact && *depth_exact < 0) throw std::invalid_argument("depth must be nonnegative");
  if (contains && *contains < 1) throw std::invalid_argument("contains value must be at least 1");
  if (stressed && !depth_exact) throw std::invalid_argument("stressed queries need an exact depth");
}

std::string CountQuery::describe() const {
  std::string s;
  auto add = [&](const char* key, const std::optional<int>& v) {
    if (!v) return;
    if (!s.empty()) s += ' ';
    s += key;
    s += '=';
    s += std::to_string(*v);
  };
  add("f", frobenius);
  add("len", length);
  add("depth_max", depth_max);
  add("depth", depth_exact);
  add("contains", contains);
  if (stressed) s += s.empty() ? "stressed" : " stressed";
  if (med) s += s.empty() ? "med" : " med";
  return s;
}

}  // namespace kunzlab
