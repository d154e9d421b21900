#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsg/category.hpp"
#include "hsg/report.hpp"

namespace hsg::cat {

// Functor into finite sets, presented by element lists and action tables.
struct SetValuedFunctor {
  std::string name;
  CategoryPtr source;
  std::map<std::string, std::vector<std::string>> value;
  // morphism id -> (element -> element), total on value(src)
  std::map<std::string, std::map<std::string, std::string>> action;

  const std::vector<std::string> &at(const std::string &object) const;
  const std::string &apply(const std::string &morphism,
                           const std::string &element) const;
};

Report validate_set_functor(const SetValuedFunctor &f);

// F∘K for K: C -> D and F on D; the result lives on C.
SetValuedFunctor restrict_along(const SetValuedFunctor &f, const FinFunctor &k,
                                const std::string &name);

// Comma category (K ↓ d) (direction == below) or (d ↓ K) (direction == above),
// with its projection to the source of K. Object ids are "(c|arrow)".
enum class CommaDirection { below, above }; // below: arrows K(c) -> d

struct CommaObject {
  std::string id;
  std::string c;     // object of K's source
  std::string arrow; // morphism of K's target
};

struct CommaCategory {
  FinCategory category;
  std::vector<CommaObject> objects;
  FinFunctor projection; // CommaCategory -> source of K
};

CommaCategory comma_category(const FinFunctor &k, const std::string &d,
                             CommaDirection direction = CommaDirection::below);

// Colimit of a finite-set diagram: disjoint union quotiented by the zigzag
// closure of the action. Class labels are "object#element" of the smallest
// (object id, element index) representative.
struct Colimit {
  std::vector<std::string> elements;
  // object -> (element -> colimit element)
  std::map<std::string, std::map<std::string, std::string>> injections;
};

Colimit finset_colimit(const SetValuedFunctor &f);

// Limit: matching families in the product of the values. Family labels are
// "<e1,e2,...>" in source-object order; the empty diagram has one family "<>".
struct Limit {
  std::vector<std::string> elements;
  // object -> (family -> element)
  std::map<std::string, std::map<std::string, std::string>> projections;
  // family -> (object -> element), the defining assignment
  std::map<std::string, std::map<std::string, std::string>> family;
};

Limit finset_limit(const SetValuedFunctor &f);

enum class KanSide { left, right };

// Pointwise Kan extension of f along k: left via colimits over (K ↓ d),
// right via limits over (d ↓ K); the action re-anchors comma objects.
SetValuedFunctor kan_extend(KanSide side, const SetValuedFunctor &f,
                            const FinFunctor &k);

// Universal-property check against a finite candidate family: searches for a
// (co)unit transformation making ext initial/terminal among the candidates,
// i.e. for every candidate G and every comparison transformation the unique
// factorization exists. An empty candidate family passes vacuously with a
// "weak-check" warning.
Report verify_kan_universal(const SetValuedFunctor &ext,
                            const SetValuedFunctor &f, const FinFunctor &k,
                            KanSide side,
                            const std::vector<SetValuedFunctor> &candidates);

// Beck–Chevalley base change over the strictly commuting square r∘p = s∘q:
// compares Lan_q(F∘p) with (Lan_r F)∘s pointwise up to natural isomorphism.
Report beck_chevalley_check(const FinFunctor &p, const FinFunctor &q,
                            const FinFunctor &r, const FinFunctor &s,
                            const SetValuedFunctor &f);

// All natural transformations A ⇒ B between set-valued functors on one
// category, as per-object element maps (enumeration order deterministic).
using SetNatTrans = std::map<std::string, std::map<std::string, std::string>>;
std::vector<SetNatTrans> enumerate_set_nat_trans(const SetValuedFunctor &a,
                                                 const SetValuedFunctor &b);

} // namespace hsg::cat
