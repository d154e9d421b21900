#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hsg/grid.hpp"
#include "hsg/report.hpp"
#include "hsg/temporal.hpp"

namespace hsg::jguard {

enum class CmpOp { lt, le, eq, ne, ge, gt };

// Guard expression tree. Grammar (s-expressions, canonical print form):
//   expr := atom | (and expr+) | (or expr+) | (not expr)
//   atom := (true) | (false) | (delta_is ⊤|⊥)
//         | (coord_cmp <axis> <op> <value>) | (reachable_within <t>)
struct GuardExpr;
using GuardPtr = std::shared_ptr<const GuardExpr>;

struct GuardExpr {
  enum class Kind {
    truth,
    delta_is,
    coord_cmp,
    reachable_within,
    conj,
    disj,
    neg
  };
  Kind kind = Kind::truth;
  bool truth_value = true;    // truth
  bool delta_value = true;    // delta_is: true = ⊤
  std::string axis;           // coord_cmp
  CmpOp op = CmpOp::eq;       // coord_cmp
  grid::IndexValue cmp_value; // coord_cmp
  long long horizon = 0;      // reachable_within
  std::vector<GuardPtr> children;
};

GuardPtr parse_guard(const std::string &text);
std::string print_guard(const GuardExpr &e);

struct GuardContext {
  const grid::Grid *g = nullptr;
  const grid::DepGraph *dep = nullptr;   // needed by reachable_within
  const grid::TimeBinding *time = nullptr;
};

// External criterion J: a guard (intensional) or an extensional table,
// plus per-token carrier sets used when the guard holds.
struct ExternalCriterion {
  std::string name;
  GuardPtr guard;
  std::optional<std::map<std::string, bool>> table;
  std::map<std::string, std::vector<std::string>> carrier;
  std::vector<std::string> default_carrier{"•"};
};

// Static well-typedness of the guard against the grid's axes. Runs before
// any evaluation.
Report validate_criterion(const ExternalCriterion &j, const GuardContext &ctx);

// J(x): carrier(x) when the guard holds, ∅ otherwise.
std::vector<std::string> guard_eval(const ExternalCriterion &j,
                                    const GuardContext &ctx,
                                    const std::string &token);

// κ^δ: Σ_emp∘J ⇒ Tr∘Σ_def^δ. Exists iff (J0) holds; the witness is the
// first token with δ = ⊥ and J(x) ≠ ∅ otherwise. Components live in
// C₁ = {Empty → NonEmpty}.
struct KappaResult {
  bool exists = false;
  std::string witness;
  std::map<std::string, std::string> components; // token -> C₁ morphism id
  bool composite_functorial = false; // Σ_emp∘J preserves the thin order
  Report naturality;
};

KappaResult kappa_transform(const ExternalCriterion &j, const GuardContext &ctx);

enum class QuasiMode { isomorphism, implication, fails };

inline const char *quasi_mode_name(QuasiMode m) {
  switch (m) {
  case QuasiMode::isomorphism:
    return "isomorphism";
  case QuasiMode::implication:
    return "implication";
  case QuasiMode::fails:
    return "fails";
  }
  return "unknown";
}

struct HomEntry {
  std::string token;
  std::string b; // Empty or NonEmpty
  int left;      // |Hom_C1(Σ_emp J(x), b)|
  int right;     // |Hom_C0(Σ_def x, Tr⁻¹ b)|
};

// Classifies J: isomorphism under J0+J1 (hom counts equal at every (x, b)),
// implication under J0 alone (right side nonempty forces left nonempty),
// fails with the κ-nonexistence witness otherwise.
struct QuasiReport {
  QuasiMode mode = QuasiMode::fails;
  std::string witness;
  std::vector<HomEntry> table;
  Report findings;
};

QuasiReport check_quasi_adjunction(const ExternalCriterion &j,
                                   const GuardContext &ctx);

enum class PresetGuard { observation, reachability, authorization };

struct PresetParams {
  std::vector<std::string> tokens; // observed / granted sets
  long long horizon = 0;           // reachability
};

ExternalCriterion preset_guard(PresetGuard which, const PresetParams &params);
ExternalCriterion preset_guard(const std::string &name,
                               const PresetParams &params);

} // namespace hsg::jguard
