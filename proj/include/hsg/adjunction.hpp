#pragma once

#include <cstddef>
#include <string>

#include "hsg/category.hpp"
#include "hsg/grid.hpp"
#include "hsg/report.hpp"

namespace hsg::cat {

// F ⊣ G with unit η: Id ⇒ G∘F and counit ε: F∘G ⇒ Id.
struct Adjunction {
  std::string name;
  FinFunctor left;    // F: C -> D
  FinFunctor right;   // G: D -> C
  FinNatTrans unit;   // η
  FinNatTrans counit; // ε
};

struct Monad {
  std::string name;
  FinFunctor endofunctor;     // T: C -> C
  FinNatTrans unit;           // η: Id ⇒ T
  FinNatTrans multiplication; // μ: T∘T ⇒ T
};

struct VerifyOptions {
  std::size_t max_objects = 6;
  std::size_t max_morphisms = 64;
};

// Exhaustive adjunction check: typing, both triangle identities, and the
// hom-set bijection witnessed by the transposition φ(f) = G(f)∘η_x together
// with its naturality in both variables. Empty report iff everything holds.
Report verify_adjunction(const Adjunction &adj, const VerifyOptions &opts = {});

// T = G∘F with unit η and multiplication GεF.
Monad monad_of(const Adjunction &adj);

// Monad unit and associativity laws, checked extensionally.
Report validate_monad(const Monad &m);

struct IdempotencyResult {
  bool idempotent = false;
  std::string witness; // object where μ is not invertible, when !idempotent
};

// A monad is idempotent (reflective) iff every multiplication component is
// an isomorphism.
IdempotencyResult check_idempotent(const Monad &m);

// --- builtins ---------------------------------------------------------------

// Skeletal finite-set category: objects "0".."n" (one set per size,
// elements 0..k-1), morphisms all functions. Ids are "map:j>k:<images>".
FinCategory finset_category(int n, const std::string &name = "FinSet");

// Σ_def^δ ⊣ ι₀^δ on the thin token category T_δ of a grid. Representatives
// ⊥_δ / ⊤_δ are freely adjoined when a δ-fiber is empty.
Adjunction definability_adjunction(const grid::Grid &g);

// Σ_emp ⊣ ι₁ between finite sets of size ≤ n and C₁ = {Empty → NonEmpty}.
Adjunction emptiness_adjunction(int n);

// Δ ⊣ U_pos between finite sets of size ≤ n and a poset fixture holding the
// discrete posets of size ≤ n plus one 2-chain.
Adjunction discrete_order_adjunction(int n);

enum class BuiltinAdjunction { definability, emptiness, discrete_order };

struct BuiltinParams {
  const grid::Grid *grid = nullptr; // definability
  int bound = 3;                    // emptiness / discrete_order
};

Adjunction builtin_adjunction(BuiltinAdjunction which,
                              const BuiltinParams &params);

// Id ⊣ Id; its monad is the identity monad.
Adjunction identity_adjunction(const CategoryPtr &c);

// Non-idempotent fixture: the free-monoid (writer) monad over the saturating
// one-generator monoid, presented on the finite window {A, M×A, M×M×A} with
// A a one-element set. The multiplication at A is the genuine monoid
// collapse M×M×A -> M×A and is not invertible. Monad laws hold at the window
// base object A; at the clamped boundary objects they cannot (no finite
// category hosts a lawful size-growing free monad), which the fixture's test
// documents.
Monad counterexample_monad();

} // namespace hsg::cat
