#pragma once

// Universality checks and the exhaustive search for minimal n-universal
// shapes (ordinary, redleaf and d-ary).

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "utk/shape.hpp"

namespace utk {

/// True iff every shape of enumerate_shapes(n, d, redleaf) is an induced
/// subtree of `t`. d = 0 means t.arity(). Cheap necessary conditions run
/// first (caterpillar, complete tree); stops at the first missing pattern.
/// Throws ShapeError if t has a node with more than d children.
bool is_universal(const Shape& t, int n, int d = 0, bool redleaf = false);

struct SearchConfig {
  std::int64_t max_candidates = 0;  // 0: unlimited
  double max_seconds = 0;           // 0: unlimited
  int threads = 0;                  // 0: hardware concurrency
};

struct SearchReport {
  int n = 0;
  int d = 2;
  bool redleaf = false;
  int u_value = 0;  // white leaves of the minimal shapes; 0 if not reached
  std::vector<CanonicalCode> minimal_shapes;  // sorted, duplicate-free
  std::int64_t candidates_examined = 0;
  double wall_time = 0;  // seconds
  bool authoritative = false;  // false when a resource limit stopped the sweep
  std::string stopped_by;      // "", "max_candidates" or "max_seconds"
};

/// Sweeps candidate sizes m = n, n+1, ... over every shape with m white
/// leaves (and one red leaf if `redleaf`) until some size has a universal
/// shape, then returns all universal shapes of that size.
SearchReport find_min_universal(int n, int d = 2, bool redleaf = false,
                                const SearchConfig& config = {});

/// True iff some minimal shape of the report has all leaves at depth <= n-1.
/// Throws std::invalid_argument if the report is incomplete, empty, or lists
/// a shape that is not n-universal.
bool check_depth_conjecture(const SearchReport& report);

nlohmann::json to_json(const SearchReport& report);

/// One canonical code per line.
std::string catalog_text(const SearchReport& report);

/// Horizontal table in the layout of the published u(n) table:
/// a header row of n, then rows for u(n), the Kalmar sequence and the
/// number of minimal shapes.
std::string format_reports_table(const std::vector<SearchReport>& reports);

}  // namespace utk
