#include "hsg/temporal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hsg/error.hpp"

namespace hsg::grid {

void validate_temporal_inputs(const Grid &g, const DepGraph &d,
                              const TimeBinding &tb) {
  const Axis *a = g.axis(tb.axis);
  if (!a)
    fail(ErrorCode::not_found, "time axis " + tb.axis + " not in grid");
  if (a->type != IndexType::integer)
    fail(ErrorCode::precondition,
         "time axis " + tb.axis + " must have integer indices");
  for (const auto &[x, y] : d.edges)
    if (!g.has_token(x) || !g.has_token(y))
      fail(ErrorCode::malformed_input,
           "dep edge (" + x + ", " + y + ") references unknown token");
}

long long tau(const Grid &g, const TimeBinding &tb, const std::string &token) {
  return std::get<long long>(project(g, token, tb.axis));
}

std::vector<std::pair<std::string, std::string>>
future_violations(const Grid &g, const DepGraph &d, const TimeBinding &tb) {
  validate_temporal_inputs(g, d, tb);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto &e : d.edges)
    if (tau(g, tb, e.second) > tau(g, tb, e.first))
      out.push_back(e);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EnforceResult enforce_no_future(const Grid &g, const DepGraph &d,
                                const TimeBinding &tb, EnforceMode mode) {
  validate_temporal_inputs(g, d, tb);
  EnforceResult result{g, {}};

  const auto direct = future_violations(g, d, tb);
  std::set<std::string> flipped;
  for (const auto &[x, y] : direct) {
    if (flipped.insert(x).second)
      result.report.add("no-future-reference",
                        "token " + x + " depends on future token " + y +
                            " (τ " + std::to_string(tau(g, tb, y)) + " > " +
                            std::to_string(tau(g, tb, x)) + ")",
                        "token " + x);
  }
  if (mode == EnforceMode::report)
    return result;

  for (const auto &x : flipped)
    result.grid.delta[x] = false;

  if (mode == EnforceMode::apply_transitive) {
    // δ(x) = ⊥ whenever x depends on an undefined token, to a fixed point
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto &[x, y] : d.edges) {
        if (result.grid.delta.at(x) && !result.grid.delta.at(y)) {
          result.grid.delta[x] = false;
          result.report.add("undefined-dependency",
                            "token " + x + " depends on undefined token " + y,
                            "token " + x);
          changed = true;
        }
      }
    }
  }
  return result;
}

EvalResult evaluate_at_time(const Grid &g, const DepGraph &d,
                            const TimeBinding &tb, long long t,
                            const std::string &token) {
  validate_temporal_inputs(g, d, tb);
  if (!g.has_token(token))
    fail(ErrorCode::not_found, "unknown token " + token);

  // reachability closure along dep, including the token itself
  std::set<std::string> reached{token};
  std::deque<std::string> queue{token};
  while (!queue.empty()) {
    std::string cur = queue.front();
    queue.pop_front();
    for (const auto &[x, y] : d.edges)
      if (x == cur && reached.insert(y).second)
        queue.push_back(y);
  }

  EvalResult out;
  out.witness.assign(reached.begin(), reached.end());
  out.nonempty = true;
  for (const auto &y : out.witness)
    if (tau(g, tb, y) > t || !g.delta.at(y)) {
      out.nonempty = false;
      break;
    }
  return out;
}

bool check_time_monotonicity(const Grid &g, const DepGraph &d,
                             const TimeBinding &tb, const std::string &token) {
  const Axis *a = g.axis(tb.axis);
  if (!a)
    fail(ErrorCode::not_found, "time axis " + tb.axis + " not in grid");
  std::vector<long long> times;
  for (const auto &v : a->indices)
    times.push_back(std::get<long long>(v));
  std::sort(times.begin(), times.end());

  bool was_nonempty = false;
  for (long long t : times) {
    bool now = evaluate_at_time(g, d, tb, t, token).nonempty;
    if (was_nonempty && !now)
      return false;
    was_nonempty = was_nonempty || now;
  }
  return true;
}

} // namespace hsg::grid
