#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsg/report.hpp"

namespace hsg::cat {

struct Morphism {
  std::string id;
  std::string src;
  std::string tgt;
  unsigned grade = 0; // 0 for identities; composite grade = max of parts
};

// Finite presentation of a category: explicit object/morphism ids, an
// identity table and a composition table. Ids are opaque strings and
// equality is id equality throughout.
struct FinCategory {
  std::string name;
  std::vector<std::string> objects;
  std::vector<Morphism> morphisms;
  std::map<std::string, std::string> identity; // object -> morphism id
  // (g, f) -> g∘f, defined exactly when tgt(f) == src(g)
  std::map<std::pair<std::string, std::string>, std::string> compose_table;

  bool has_object(const std::string &x) const;
  const Morphism *morphism(const std::string &id) const;
  const std::string &id_of(const std::string &object) const;

  // Composite g∘f; nullptr when the pair is not in the table.
  const Morphism *compose(const std::string &g, const std::string &f) const;

  std::vector<std::string> hom(const std::string &x,
                               const std::string &y) const;
  bool is_iso(const std::string &f) const;
  unsigned max_grade() const;

  bool operator==(const FinCategory &other) const;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

struct FinFunctor {
  std::string name;
  CategoryPtr source;
  CategoryPtr target;
  std::map<std::string, std::string> object_map;
  std::map<std::string, std::string> morphism_map;

  const std::string &on_object(const std::string &x) const;
  const std::string &on_morphism(const std::string &f) const;
};

// Components indexed by source-category object; each component lives in the
// target category of the two parallel functors.
struct FinNatTrans {
  std::string name;
  FinFunctor source;
  FinFunctor target;
  std::map<std::string, std::string> components; // object -> morphism id

  const std::string &at(const std::string &object) const;
};

struct Preorder {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq; // x ≤ y pairs

  bool holds(const std::string &x, const std::string &y) const;
};

// --- law checks -----------------------------------------------------------

// Empty report iff identity laws, associativity and the grade invariants all
// hold. Dangling id references throw malformed-input instead of reporting.
Report validate_category(const FinCategory &c);

Report validate_functor(const FinFunctor &f);

Report validate_nat_trans(const FinNatTrans &a);

// --- constructions --------------------------------------------------------

// Thin category of a preorder: exactly one morphism x→y when x ≤ y.
// Morphism ids are "le:x:y"; identities are the reflexive arrows.
FinCategory thin_from_preorder(const Preorder &p, const std::string &name);

// Product of finitely many categories; the empty product is the terminal
// category. Tuple ids are "(a|b|...)"; grades are componentwise maxima.
FinCategory product_category(const std::vector<FinCategory> &factors,
                             const std::string &name);

// Projection of a product built by product_category onto one factor.
FinFunctor product_projection(const CategoryPtr &product, std::size_t index,
                              const CategoryPtr &factor);

struct GradeExtendOptions {
  unsigned max_path_length = 8; // formal composite length bound
};

// Free extension by generators at grade max+1: path closure of the old
// morphisms plus the generators, quotiented by old relations and identity
// laws. Paths longer than the bound raise a capacity (truncation) error.
FinCategory grade_extend(
    const FinCategory &c,
    const std::vector<std::pair<std::string, std::string>> &generators,
    const GradeExtendOptions &opts = {});

// Keep morphisms of grade ≤ k; composition-closed by the max-grade invariant.
FinCategory grade_truncate(const FinCategory &c, unsigned k);

// --- small helpers used across modules ------------------------------------

FinCategory terminal_category(const std::string &name = "terminal");

// Identity functor on c.
FinFunctor identity_functor(const CategoryPtr &c);

FinFunctor compose_functors(const FinFunctor &outer, const FinFunctor &inner,
                            const std::string &name);

// Identity natural transformation on f.
FinNatTrans identity_nat_trans(const FinFunctor &f);

} // namespace hsg::cat
