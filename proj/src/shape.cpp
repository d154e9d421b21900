#include "hsg/shape.hpp"

#include <algorithm>

#include "hsg/error.hpp"

namespace hsg::sim {

bool SimplicialShape::has_simplex(std::vector<std::string> verts) const {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return simplices.count(verts) > 0;
}

int SimplicialShape::dimension() const {
  int d = -1;
  for (const auto &s : simplices)
    d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::size_t SimplicialShape::count_of_dimension(int d) const {
  std::size_t n = 0;
  for (const auto &s : simplices)
    if (static_cast<int>(s.size()) == d + 1)
      ++n;
  return n;
}

namespace {

// all nonempty proper subsets of a sorted simplex
std::vector<std::vector<std::string>> faces_of(const std::vector<std::string> &s) {
  std::vector<std::vector<std::string>> out;
  const std::size_t n = s.size();
  for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<std::string> face;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i))
        face.push_back(s[i]);
    out.push_back(std::move(face));
  }
  return out;
}

} // namespace

SimplicialShape make_shape(
    const std::vector<std::string> &vertices,
    const std::vector<std::vector<std::string>> &simplices) {
  SimplicialShape s;
  std::set<std::string> known;
  for (const auto &v : vertices) {
    if (!known.insert(v).second)
      fail(ErrorCode::malformed_input, "shape: duplicate vertex " + v);
    s.vertices.push_back(v);
    s.simplices.insert({v});
  }
  for (auto simplex : simplices) {
    std::sort(simplex.begin(), simplex.end());
    simplex.erase(std::unique(simplex.begin(), simplex.end()), simplex.end());
    if (simplex.empty())
      fail(ErrorCode::malformed_input, "shape: empty simplex");
    if (simplex.size() > 4)
      fail(ErrorCode::malformed_input,
           "shape: simplices above dimension 3 are out of range");
    for (const auto &v : simplex)
      if (!known.count(v))
        fail(ErrorCode::malformed_input, "shape: unknown vertex " + v);
    s.simplices.insert(simplex);
    for (auto &face : faces_of(simplex))
      s.simplices.insert(face);
  }
  return s;
}

Report validate_shape(const SimplicialShape &s) {
  Report report;
  std::set<std::string> known(s.vertices.begin(), s.vertices.end());
  for (const auto &v : s.vertices)
    if (!s.simplices.count({v}))
      report.add("vertex-simplex", "vertex " + v + " is not a 0-simplex",
                 "shape");
  for (const auto &simplex : s.simplices) {
    if (!std::is_sorted(simplex.begin(), simplex.end()))
      report.add("simplex-order", "simplex is not sorted", "shape");
    for (const auto &v : simplex)
      if (!known.count(v))
        report.add("simplex-vertex", "simplex uses unknown vertex " + v,
                   "shape");
    for (const auto &face : faces_of(simplex))
      if (!s.simplices.count(face))
        report.add("face-closure", "missing face of a simplex", "shape");
  }
  return report;
}

SimplicialShape skeleton(const SimplicialShape &s, int n) {
  SimplicialShape out;
  out.vertices = s.vertices;
  for (const auto &simplex : s.simplices)
    if (static_cast<int>(simplex.size()) <= n + 1)
      out.simplices.insert(simplex);
  return out;
}

SimplicialShape coskeleton(const SimplicialShape &s, int n) {
  SimplicialShape out = s;
  bool changed = true;
  while (changed) {
    changed = false;
    // candidate simplices of each dimension above n with complete boundary
    for (int d = n + 1; d <= 3; ++d) {
      const std::size_t size = static_cast<std::size_t>(d) + 1;
      if (out.vertices.size() < size)
        continue;
      std::vector<std::size_t> idx(size);
      for (std::size_t i = 0; i < size; ++i)
        idx[i] = i;
      while (true) {
        std::vector<std::string> candidate;
        for (std::size_t i : idx)
          candidate.push_back(out.vertices[i]);
        std::sort(candidate.begin(), candidate.end());
        if (!out.simplices.count(candidate)) {
          bool boundary_complete = true;
          for (std::size_t skip = 0; skip < size && boundary_complete; ++skip) {
            std::vector<std::string> facet;
            for (std::size_t i = 0; i < size; ++i)
              if (i != skip)
                facet.push_back(candidate[i]);
            if (!out.simplices.count(facet))
              boundary_complete = false;
          }
          if (boundary_complete) {
            out.simplices.insert(candidate);
            changed = true;
          }
        }
        // next combination
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == out.vertices.size() - size + i - 1)
          --i;
        if (i == 0)
          break;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j)
          idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return out;
}

long count_simplicial_maps(const SimplicialShape &x, const SimplicialShape &y) {
  if (x.vertices.empty())
    return 1;
  if (y.vertices.empty())
    return 0;

  long count = 0;
  std::vector<std::size_t> choice(x.vertices.size(), 0);
  while (true) {
    bool simplicial = true;
    for (const auto &simplex : x.simplices) {
      std::vector<std::string> image;
      for (const auto &v : simplex) {
        const std::size_t vi = static_cast<std::size_t>(
            std::find(x.vertices.begin(), x.vertices.end(), v) -
            x.vertices.begin());
        image.push_back(y.vertices[choice[vi]]);
      }
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!y.simplices.count(image)) {
        simplicial = false;
        break;
      }
    }
    if (simplicial)
      ++count;
    std::size_t i = 0;
    while (i < choice.size()) {
      if (++choice[i] < y.vertices.size())
        break;
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size())
      break;
  }
  return count;
}

Report check_sk_cosk_adjunction(const SimplicialShape &x,
                                const SimplicialShape &y, int n,
                                const ShapeHomOptions &opts) {
  if (x.vertices.size() > opts.max_vertices ||
      y.vertices.size() > opts.max_vertices)
    fail(ErrorCode::capacity, "check_sk_cosk_adjunction: too many vertices");
  Report report;
  const long left = count_simplicial_maps(skeleton(x, n), y);
  const long right = count_simplicial_maps(x, coskeleton(y, n));
  if (left != right)
    report.add("sk-cosk-hom",
               "|Maps(Sk_" + std::to_string(n) + " x, y)| = " +
                   std::to_string(left) + " but |Maps(x, CoSk_" +
                   std::to_string(n) + " y)| = " + std::to_string(right),
               "shape-adjunction");
  return report;
}

} // namespace hsg::sim
