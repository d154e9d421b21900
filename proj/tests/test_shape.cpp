#include <doctest.h>

#include "hsg/error.hpp"
#include "hsg/shape.hpp"

using namespace hsg;
using namespace hsg::sim;

namespace {

SimplicialShape tetrahedron() {
  return make_shape({"a", "b", "c", "d"}, {{"a", "b", "c", "d"}});
}

SimplicialShape triangle_boundary() {
  return make_shape({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

SimplicialShape filled_triangle() {
  return make_shape({"a", "b", "c"}, {{"a", "b", "c"}});
}

SimplicialShape edge() { return make_shape({"a", "b"}, {{"a", "b"}}); }

SimplicialShape point() { return make_shape({"a"}, {}); }

} // namespace

TEST_CASE("make_shape closes faces") {
  SimplicialShape t = tetrahedron();
  CHECK(t.count_of_dimension(0) == 4);
  CHECK(t.count_of_dimension(1) == 6);
  CHECK(t.count_of_dimension(2) == 4);
  CHECK(t.count_of_dimension(3) == 1);
  CHECK(validate_shape(t).pass());

  SUBCASE("unknown vertices and oversized simplices are malformed") {
    CHECK_THROWS_AS(make_shape({"a"}, {{"a", "ghost"}}), Error);
    CHECK_THROWS_AS(make_shape({"a", "b", "c", "d", "e"},
                               {{"a", "b", "c", "d", "e"}}),
                    Error);
  }
  SUBCASE("validate catches a broken closure") {
    SimplicialShape bad = filled_triangle();
    bad.simplices.erase({"a", "b"});
    CHECK_FALSE(validate_shape(bad).pass());
  }
}

TEST_CASE("skeleton") {
  SUBCASE("tetrahedron at n=1 keeps vertices and edges only") {
    SimplicialShape sk = skeleton(tetrahedron(), 1);
    CHECK(sk.count_of_dimension(0) == 4);
    CHECK(sk.count_of_dimension(1) == 6);
    CHECK(sk.count_of_dimension(2) == 0);
    CHECK(sk.count_of_dimension(3) == 0);
  }
  SUBCASE("n=3 is the identity") {
    SimplicialShape t = tetrahedron();
    CHECK(skeleton(t, 3).simplices == t.simplices);
  }
  SUBCASE("idempotent and deflationary") {
    for (const SimplicialShape &s :
         {tetrahedron(), triangle_boundary(), filled_triangle(), edge()})
      for (int n = 0; n <= 3; ++n) {
        SimplicialShape once = skeleton(s, n);
        CHECK(skeleton(once, n).simplices == once.simplices);
        for (const auto &simplex : once.simplices)
          CHECK(s.simplices.count(simplex));
      }
  }
}

TEST_CASE("coskeleton") {
  SUBCASE("triangle boundary at n=1 gets filled") {
    SimplicialShape cosk = coskeleton(triangle_boundary(), 1);
    CHECK(cosk.count_of_dimension(2) == 1);
    CHECK(cosk.has_simplex({"a", "b", "c"}));
  }
  SUBCASE("tetrahedron boundary at n=1 fills faces and the solid") {
    SimplicialShape boundary = skeleton(tetrahedron(), 1);
    SimplicialShape cosk = coskeleton(boundary, 1);
    CHECK(cosk.count_of_dimension(2) == 4);
    CHECK(cosk.count_of_dimension(3) == 1); // fixed point fills upward
  }
  SUBCASE("idempotent and inflationary") {
    for (const SimplicialShape &s :
         {tetrahedron(), triangle_boundary(), filled_triangle(), edge()})
      for (int n = 0; n <= 3; ++n) {
        SimplicialShape once = coskeleton(s, n);
        CHECK(coskeleton(once, n).simplices == once.simplices);
        for (const auto &simplex : s.simplices)
          CHECK(once.simplices.count(simplex));
      }
  }
}

TEST_CASE("check_sk_cosk_adjunction") {
  SUBCASE("edge against triangle boundary at n=1") {
    CHECK(check_sk_cosk_adjunction(edge(), triangle_boundary(), 1).pass());
  }
  SUBCASE("a point maps to every vertex on both sides") {
    SimplicialShape y = triangle_boundary();
    CHECK(count_simplicial_maps(skeleton(point(), 1), y) ==
          static_cast<long>(y.vertices.size()));
    CHECK(check_sk_cosk_adjunction(point(), y, 1).pass());
  }
  SUBCASE("filled triangle against an edge at n=1") {
    CHECK(check_sk_cosk_adjunction(filled_triangle(), edge(), 1).pass());
  }
  SUBCASE("exhaustive over the fixture family at n ∈ {1, 2}") {
    std::vector<SimplicialShape> shapes = {point(), edge(), triangle_boundary(),
                                           filled_triangle(), tetrahedron()};
    for (const auto &x : shapes)
      for (const auto &y : shapes)
        for (int n : {1, 2})
          CHECK(check_sk_cosk_adjunction(x, y, n).pass());
  }
  SUBCASE("vertex cap") {
    SimplicialShape big = make_shape({"a", "b", "c", "d", "e", "f"}, {});
    CHECK_THROWS_AS(check_sk_cosk_adjunction(big, edge(), 1), Error);
  }
}
