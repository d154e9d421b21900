#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsg/grid.hpp"
#include "hsg/report.hpp"

namespace hsg::grid {

// "x depends on y" edges over grid tokens.
struct DepGraph {
  std::vector<std::pair<std::string, std::string>> edges;
};

// Designates one integer axis as time; τ(x) is the projection onto it.
struct TimeBinding {
  std::string axis;
};

void validate_temporal_inputs(const Grid &g, const DepGraph &d,
                              const TimeBinding &tb);

long long tau(const Grid &g, const TimeBinding &tb, const std::string &token);

// Edges (x, y) with τ(y) > τ(x), sorted lexicographically. Ties are not
// violations; the relation uses strict >.
std::vector<std::pair<std::string, std::string>>
future_violations(const Grid &g, const DepGraph &d, const TimeBinding &tb);

enum class EnforceMode { report, apply, apply_transitive };

struct EnforceResult {
  Grid grid;
  Report report; // one finding per affected token
};

// report: leaves the grid unchanged. apply: sets δ(x) = ⊥ exactly for the
// tokens with a direct future dependency. apply_transitive: additionally
// propagates ⊥ backwards along dep to a fixed point.
EnforceResult enforce_no_future(const Grid &g, const DepGraph &d,
                                const TimeBinding &tb, EnforceMode mode);

struct EvalResult {
  bool nonempty = false;
  std::vector<std::string> witness; // tokens consulted (reachability closure)
};

// J_t semantics: nonempty iff every token reachable from x along dep
// (including x) has τ ≤ t and δ = ⊤.
EvalResult evaluate_at_time(const Grid &g, const DepGraph &d,
                            const TimeBinding &tb, long long t,
                            const std::string &token);

// true iff evaluability at t implies evaluability at every t' ≥ t up to the
// axis maximum.
bool check_time_monotonicity(const Grid &g, const DepGraph &d,
                             const TimeBinding &tb, const std::string &token);

} // namespace hsg::grid
