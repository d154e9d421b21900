#include "hsg/grid.hpp"

#include <algorithm>
#include <set>

#include "hsg/error.hpp"

namespace hsg::grid {

std::string value_to_string(const IndexValue &v) {
  if (std::holds_alternative<long long>(v))
    return std::to_string(std::get<long long>(v));
  return std::get<std::string>(v);
}

const Axis *Grid::axis(const std::string &name) const {
  for (const auto &a : axes)
    if (a.name == name)
      return &a;
  return nullptr;
}

bool Grid::has_token(const std::string &id) const {
  return std::find(tokens.begin(), tokens.end(), id) != tokens.end();
}

namespace {

bool value_in_axis(const Axis &a, const IndexValue &v) {
  if ((a.type == IndexType::integer) !=
      std::holds_alternative<long long>(v))
    return false;
  return std::find(a.indices.begin(), a.indices.end(), v) != a.indices.end();
}

} // namespace

Grid build_grid(const std::vector<Axis> &axes,
                const std::vector<TokenSpec> &tokens) {
  Grid g;
  std::set<std::string> axis_names;
  for (const auto &a : axes) {
    if (a.indices.empty())
      fail(ErrorCode::malformed_input, "axis " + a.name + " has no indices");
    std::set<std::string> distinct;
    for (const auto &v : a.indices) {
      if ((a.type == IndexType::integer) !=
          std::holds_alternative<long long>(v))
        fail(ErrorCode::malformed_input,
             "axis " + a.name + ": index value type mismatch");
      if (!distinct.insert(value_to_string(v)).second)
        fail(ErrorCode::malformed_input,
             "axis " + a.name + ": duplicate index " + value_to_string(v));
    }
    if (!axis_names.insert(a.name).second)
      fail(ErrorCode::malformed_input, "duplicate axis name " + a.name);
  }
  g.axes = axes;

  std::set<std::string> seen;
  for (const auto &t : tokens) {
    if (!seen.insert(t.id).second)
      fail(ErrorCode::malformed_input, "duplicate token id " + t.id);
    g.tokens.push_back(t.id);
    for (const auto &a : axes) {
      auto it = t.coords.find(a.name);
      if (it == t.coords.end())
        fail(ErrorCode::malformed_input,
             "token " + t.id + ": missing coordinate on axis " + a.name);
      if (!value_in_axis(a, it->second))
        fail(ErrorCode::malformed_input,
             "token " + t.id + ": coordinate " + value_to_string(it->second) +
                 " outside index set of axis " + a.name);
      g.coords[{t.id, a.name}] = it->second;
    }
    for (const auto &[axis_name, _] : t.coords)
      if (!g.axis(axis_name))
        fail(ErrorCode::malformed_input,
             "token " + t.id + ": coordinate on undeclared axis " + axis_name);
    g.delta[t.id] = t.delta.value_or(true);
  }
  return g;
}

IndexValue project(const Grid &g, const std::string &token,
                   const std::string &axis) {
  if (!g.has_token(token))
    fail(ErrorCode::not_found, "unknown token " + token);
  if (!g.axis(axis))
    fail(ErrorCode::not_found, "unknown axis " + axis);
  return g.coords.at({token, axis});
}

std::vector<std::string> def_subuniverse(const Grid &g) {
  std::vector<std::string> out;
  for (const auto &t : g.tokens)
    if (g.delta.at(t))
      out.push_back(t);
  return out;
}

Report check_state_identity(const Grid &g) {
  Report report;
  std::map<std::string, std::vector<std::string>> classes;
  for (const auto &t : def_subuniverse(g)) {
    std::string key;
    for (const auto &a : g.axes)
      key += value_to_string(g.coords.at({t, a.name})) + "\x1f";
    classes[key].push_back(t);
  }
  for (const auto &[key, members] : classes) {
    if (members.size() < 2)
      continue;
    std::string msg = "coordinate-duplicate class {";
    for (std::size_t i = 0; i < members.size(); ++i)
      msg += (i ? ", " : "") + members[i];
    msg += "}";
    report.add("state-identity", msg, "token " + members.front());
  }
  return report;
}

} // namespace hsg::grid
