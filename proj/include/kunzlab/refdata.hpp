#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "kunzlab/exact.hpp"

namespace kunzlab {

/// Stressed depth-3 counts by length, from table1.csv (ell,count).
using Table1 = std::map<int, BigInt>;
/// Counts by (Frobenius number, multiplicity), from table2.csv (f,m,count).
using Table2 = std::map<std::pair<int, int>, BigInt>;

/// KUNZLAB_REF_DATA if set, then `override_dir`, then the compiled-in default.
std::string resolve_ref_dir(const std::optional<std::string>& override_dir = std::nullopt);

/// Throws std::runtime_error on missing files or malformed rows.
Table1 load_table1(const std::string& dir);
Table2 load_table2(const std::string& dir);

}  // namespace kunzlab
