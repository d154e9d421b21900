#include <doctest.h>

#include "hsg/error.hpp"
#include "hsg/grid.hpp"

using namespace hsg;
using namespace hsg::grid;

namespace {

Grid small_grid() {
  Axis depth{"depth", IndexType::integer, {0ll, 1ll}};
  Axis time{"time", IndexType::integer, {0ll, 1ll, 2ll}};
  std::vector<TokenSpec> toks = {
      {"x", {{"depth", 0ll}, {"time", 0ll}}, true},
      {"y", {{"depth", 1ll}, {"time", 2ll}}, true},
      {"z", {{"depth", 0ll}, {"time", 1ll}}, std::nullopt},
  };
  return build_grid({depth, time}, toks);
}

} // namespace

TEST_CASE("build_grid") {
  SUBCASE("valid construction preserves token order") {
    Grid g = small_grid();
    CHECK(g.tokens == std::vector<std::string>{"x", "y", "z"});
    CHECK(g.delta.at("z") == true); // δ defaults to ⊤
  }
  SUBCASE("coordinate outside the index set is rejected") {
    Axis time{"time", IndexType::integer, {0ll, 1ll, 2ll}};
    std::vector<TokenSpec> toks = {{"t", {{"time", 5ll}}, true}};
    CHECK_THROWS_AS(build_grid({time}, toks), Error);
  }
  SUBCASE("duplicate token id is rejected") {
    Axis a{"a", IndexType::integer, {0ll, 1ll}};
    std::vector<TokenSpec> toks = {{"t", {{"a", 0ll}}, true},
                                   {"t", {{"a", 1ll}}, true}};
    CHECK_THROWS_AS(build_grid({a}, toks), Error);
  }
  SUBCASE("missing coordinate is rejected") {
    Axis a{"a", IndexType::integer, {0ll}};
    Axis b{"b", IndexType::integer, {0ll}};
    std::vector<TokenSpec> toks = {{"t", {{"a", 0ll}}, true}};
    CHECK_THROWS_AS(build_grid({a, b}, toks), Error);
  }
  SUBCASE("symbolic axes hold symbol values") {
    Axis s{"label", IndexType::symbol, {std::string("lo"), std::string("hi")}};
    Grid g = build_grid({s}, {{"t", {{"label", std::string("hi")}}, true}});
    CHECK(value_to_string(project(g, "t", "label")) == "hi");
  }
}

TEST_CASE("project") {
  Grid g = small_grid();
  CHECK(std::get<long long>(project(g, "y", "time")) == 2);
  CHECK(std::get<long long>(project(g, "y", "depth")) == 1);
  CHECK_THROWS_AS(project(g, "y", "mass"), Error);
  CHECK_THROWS_AS(project(g, "ghost", "time"), Error);

  SUBCASE("round-trip: projections return exactly the input coordinates") {
    for (const auto &t : g.tokens)
      for (const auto &a : g.axes)
        CHECK(value_to_string(project(g, t, a.name)) ==
              value_to_string(g.coords.at({t, a.name})));
  }
}

TEST_CASE("def_subuniverse") {
  Axis a{"a", IndexType::integer, {0ll, 1ll, 2ll}};
  SUBCASE("all ⊥ gives the empty set") {
    Grid g = build_grid({a}, {{"x", {{"a", 0ll}}, false},
                              {"y", {{"a", 1ll}}, false}});
    CHECK(def_subuniverse(g).empty());
  }
  SUBCASE("all ⊤ gives all tokens") {
    Grid g = build_grid({a}, {{"x", {{"a", 0ll}}, true},
                              {"y", {{"a", 1ll}}, true}});
    CHECK(def_subuniverse(g).size() == 2);
  }
  SUBCASE("mixed δ keeps grid order") {
    Grid g = build_grid({a}, {{"x", {{"a", 0ll}}, false},
                              {"y", {{"a", 1ll}}, true},
                              {"z", {{"a", 2ll}}, true}});
    CHECK(def_subuniverse(g) == std::vector<std::string>{"y", "z"});
  }
  SUBCASE("flipping one δ ⊥→⊤ grows the set by exactly that token") {
    Grid g = build_grid({a}, {{"x", {{"a", 0ll}}, false},
                              {"y", {{"a", 1ll}}, true}});
    auto before = def_subuniverse(g);
    g.delta["x"] = true;
    auto after = def_subuniverse(g);
    CHECK(after.size() == before.size() + 1);
    CHECK(after.front() == "x");
  }
}

TEST_CASE("check_state_identity") {
  Axis a{"a", IndexType::integer, {0ll, 1ll}};
  SUBCASE("two defined tokens sharing coordinates form one duplicate class") {
    Grid g = build_grid({a}, {{"x", {{"a", 0ll}}, true},
                              {"y", {{"a", 0ll}}, true}});
    Report r = check_state_identity(g);
    REQUIRE(r.findings.size() == 1);
    CHECK(r.findings[0].message.find("x") != std::string::npos);
    CHECK(r.findings[0].message.find("y") != std::string::npos);
  }
  SUBCASE("a δ=⊥ token never counts") {
    Grid g = build_grid({a}, {{"x", {{"a", 0ll}}, true},
                              {"y", {{"a", 0ll}}, false}});
    CHECK(check_state_identity(g).pass());
  }
  SUBCASE("injective grid passes") {
    Grid g = small_grid();
    CHECK(check_state_identity(g).pass());
  }
  SUBCASE("passing grid: tokens are reconstructible from their tuples") {
    Grid g = small_grid();
    REQUIRE(check_state_identity(g).pass());
    for (const auto &t : def_subuniverse(g)) {
      // find the unique defined token with these coordinates
      std::string found;
      int hits = 0;
      for (const auto &u : def_subuniverse(g)) {
        bool same = true;
        for (const auto &ax : g.axes)
          if (value_to_string(g.coords.at({t, ax.name})) !=
              value_to_string(g.coords.at({u, ax.name})))
            same = false;
        if (same) {
          found = u;
          ++hits;
        }
      }
      CHECK(hits == 1);
      CHECK(found == t);
    }
  }
}
