#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hsg/report.hpp"

namespace hsg::grid {

// Axis indices are either integers or symbolic labels, declared per axis.
using IndexValue = std::variant<long long, std::string>;

enum class IndexType { integer, symbol };

std::string value_to_string(const IndexValue &v);

struct Axis {
  std::string name;
  IndexType type = IndexType::integer;
  std::vector<IndexValue> indices; // nonempty, distinct, declaration order
};

struct TokenSpec {
  std::string id;
  std::map<std::string, IndexValue> coords; // axis name -> value
  std::optional<bool> delta;                // defaults to ⊤ when omitted
};

// The HSG₀ grid plus the definability predicate δ. Tokens are explicit
// entities carrying coordinates, so coordinate-injectivity on the defined
// subuniverse is a real check rather than a tautology.
struct Grid {
  std::vector<Axis> axes;
  std::vector<std::string> tokens; // input order preserved
  std::map<std::pair<std::string, std::string>, IndexValue> coords;
  std::map<std::string, bool> delta; // true = ⊤, false = ⊥

  const Axis *axis(const std::string &name) const;
  bool has_token(const std::string &id) const;
};

Grid build_grid(const std::vector<Axis> &axes,
                const std::vector<TokenSpec> &tokens);

// π_a: pure coordinate lookup.
IndexValue project(const Grid &g, const std::string &token,
                   const std::string &axis);

// Def_δ: tokens with δ = ⊤, in grid order.
std::vector<std::string> def_subuniverse(const Grid &g);

// "definition = state": empty report iff the coordinate-tuple map is
// injective on Def_δ. Tokens with δ = ⊥ are never flagged.
Report check_state_identity(const Grid &g);

} // namespace hsg::grid
