#pragma once

#include <string>
#include <vector>

#include "hsg/grid.hpp"
#include "hsg/temporal.hpp"
#include "rng.hpp"

// random (grid, dep) instances shared by the temporal property tests and the
// acceptance suite
inline hsg::grid::Grid random_time_grid(TestRng &rng, int n_tokens,
                                        long long t_max) {
  using namespace hsg::grid;
  Axis time{"time", IndexType::integer, {}};
  for (long long t = 0; t <= t_max; ++t)
    time.indices.push_back(t);
  Axis site{"site", IndexType::integer, {}};
  for (long long s = 0; s < n_tokens; ++s)
    site.indices.push_back(s);

  std::vector<TokenSpec> tokens;
  for (int i = 0; i < n_tokens; ++i) {
    TokenSpec t;
    t.id = "t" + std::to_string(i);
    t.coords["time"] = static_cast<long long>(rng.below(t_max + 1));
    t.coords["site"] = static_cast<long long>(i);
    t.delta = rng.below(4) != 0; // mostly defined
    tokens.push_back(t);
  }
  return build_grid({time, site}, tokens);
}

inline hsg::grid::DepGraph random_dep(TestRng &rng, const hsg::grid::Grid &g,
                                      int n_edges) {
  hsg::grid::DepGraph d;
  const auto &toks = g.tokens;
  for (int i = 0; i < n_edges; ++i) {
    const std::string &x = toks[rng.below(toks.size())];
    const std::string &y = toks[rng.below(toks.size())];
    d.edges.emplace_back(x, y);
  }
  return d;
}
