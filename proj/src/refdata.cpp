#include "kunzlab/refdata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace kunzlab {
namespace {

std::vector<std::vector<std::string>> read_csv(const std::string& path, const std::string& header) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference file " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + " is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw std::runtime_error(path + ": expected header '" + header + "'");
  std::vector<std::vector<std::string>> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != static_cast<std::size_t>(std::count(header.begin(), header.end(), ',') + 1))
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": wrong number of columns");
    rows.push_back(std::move(cells));
  }
  return rows;
}

int to_int(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(where + ": bad integer '" + s + "'");
  }
}

BigInt to_big(const std::string& s, const std::string& where) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::runtime_error(where + ": bad count '" + s + "'");
  return BigInt(s);
}

}  // namespace

std::string resolve_ref_dir(const std::optional<std::string>& override_dir) {
  if (const char* env = std::getenv("KUNZLAB_REF_DATA"); env && *env) return env;
  if (override_dir) return *override_dir;
  return KUNZLAB_DEFAULT_REF_DATA;
}

Table1 load_table1(const std::string& dir) {
  const std::string path = dir + "/table1.csv";
  Table1 t;
  for (const auto& row : read_csv(path, "ell,count")) t[to_int(row[0], path)] = to_big(row[1], path);
  return t;
}

Table2 load_table2(const std::string& dir) {
  const std::string path = dir + "/table2.csv";
  Table2 t;
  for (const auto& row : read_csv(path, "f,m,count"))
    t[{to_int(row[0], path), to_int(row[1], path)}] = to_big(row[2], path);
  return t;
}

}  // namespace kunzlab
