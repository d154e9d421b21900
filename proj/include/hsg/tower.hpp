#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hsg/rational.hpp"
#include "hsg/report.hpp"
#include "hsg/ring.hpp"

namespace hsg::tower {

enum class EdgeKind { internal, j_relative };

struct TowerNode {
  int level = 0; // 0..6
  std::string label;
  bool has_witness = false;
  std::string witness; // short description of the concrete carrier
};

struct TowerEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::internal;
  std::string witness;
  bool verified = false; // symbolic edges stay unverified by design
};

struct Tower {
  std::vector<TowerNode> nodes;
  std::vector<TowerEdge> edges;
  Report report;
};

// The seven-stage state-depth tower with verified witnesses where finite
// ones exist: adjunction checks on edges 1→2 and 2→3, the free-ring and
// fraction-field universal properties on 3→4 and 4→5, a j-relative marker
// on 0→1 and a symbolic completion node on 5→6.
Tower build_numeric_tower();

// A ring hom out of ℤ: either exact into ℚ, or n ↦ n·1 into a finite ring.
struct IntegerHom {
  std::string name;
  std::function<Rational(const BigInt &)> to_q; // exact branch
  const FinRing *finite_field = nullptr;        // finite branch
};

IntegerHom canonical_z_to_q();

struct ExtensionFixture {
  std::string name;
  std::function<Rational(const Rational &)> map;
};

struct FracExtensionOptions {
  long long injectivity_range = 24; // check hom(n) pairwise distinct here
  int sample_values = 12;           // rationals exercised per law
};

// Builds the canonical extension a/b ↦ hom(a)·hom(b)⁻¹, verifies it is a
// field hom agreeing with hom on the embedded integers, and rejects any
// supplied alternative extension that agrees on ℤ but differs on ℚ.
// A non-injective hom (every finite branch) is a precondition error.
Report check_frac_extension(const IntegerHom &hom,
                            const std::vector<ExtensionFixture> &alternatives,
                            const FracExtensionOptions &opts = {});

struct CompletionDescriptor {
  int level = 6;
  bool idempotent = true; // completion stabilizes: applying it twice is inert
  bool numeric = false;   // symbolic node only
  std::string law = "K̂̂ ≅ K̂";
};

CompletionDescriptor completion_descriptor();

} // namespace hsg::tower
