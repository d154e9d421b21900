#pragma once

#include <set>
#include <string>
#include <vector>

#include "hsg/report.hpp"

namespace hsg::sim {

// Abstract simplicial complex on named vertices, dimensions 0..3.
// Simplices are sorted vertex-id vectors; the family is face-closed and
// contains every vertex as a 0-simplex.
struct SimplicialShape {
  std::vector<std::string> vertices;
  std::set<std::vector<std::string>> simplices;

  bool has_simplex(std::vector<std::string> verts) const;
  int dimension() const;
  std::size_t count_of_dimension(int d) const;
};

// Builds a shape from generating simplices: faces and vertex 0-simplices are
// added automatically. Simplices above dimension 3 or with unknown vertices
// are malformed input.
SimplicialShape make_shape(const std::vector<std::string> &vertices,
                           const std::vector<std::vector<std::string>> &simplices);

Report validate_shape(const SimplicialShape &s);

// skeleton: drop simplices of dimension > n.
SimplicialShape skeleton(const SimplicialShape &s, int n);

// coskeleton: add, to a fixed point, every simplex of dimension in (n, 3]
// whose full boundary is present.
SimplicialShape coskeleton(const SimplicialShape &s, int n);

// Vertex maps under which the image of every simplex is a simplex (collapses
// allowed).
long count_simplicial_maps(const SimplicialShape &x, const SimplicialShape &y);

struct ShapeHomOptions {
  std::size_t max_vertices = 5;
};

// |Maps(Sk_n x, y)| = |Maps(x, CoSk_n y)| by full enumeration of vertex maps.
Report check_sk_cosk_adjunction(const SimplicialShape &x,
                                const SimplicialShape &y, int n,
                                const ShapeHomOptions &opts = {});

} // namespace hsg::sim
