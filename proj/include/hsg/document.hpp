#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsg/adjunction.hpp"
#include "hsg/category.hpp"
#include "hsg/grid.hpp"
#include "hsg/jguard.hpp"
#include "hsg/kan.hpp"
#include "hsg/neuro.hpp"
#include "hsg/registry.hpp"
#include "hsg/report.hpp"
#include "hsg/ring.hpp"
#include "hsg/temporal.hpp"

namespace hsg::doc {

// One document: a canonical-JSON envelope {body, format_version, kind} whose
// body validates against the kind's schema. Canonical form is key-sorted,
// two-space indented UTF-8 with LF endings and a trailing newline.
struct Document {
  std::string kind;
  int format_version = 1;
  nlohmann::json body;
};

inline const std::vector<std::string> &document_kinds() {
  static const std::vector<std::string> kinds = {
      "category", "functor",  "adjunction", "diagram", "grid",
      "criterion", "registry", "package",    "ring",    "world"};
  return kinds;
}

// Parse + schema-validate. Errors carry line/column where the input text
// admits them. When `registry` is given, every symbol the document declares
// in body.symbols must be a notational axiom of the registry (error);
// without a registry the undeclared symbols become warnings on `warnings`.
Document parse_document(const std::string &text,
                        const reg::Registry *registry = nullptr,
                        Report *warnings = nullptr);

std::string serialize(const Document &d);

// parse ∘ serialize; a fixed point of itself.
std::string canonicalize(const std::string &text);

// --- typed loaders (schema validation happens here) ---------------------------

struct GridBundle {
  grid::Grid grid;
  grid::DepGraph dep;
  std::optional<grid::TimeBinding> time;
};

GridBundle grid_from_body(const nlohmann::json &body);
nlohmann::json grid_to_body(const grid::Grid &g, const grid::DepGraph &dep = {},
                            const std::optional<grid::TimeBinding> &time = {});

cat::FinCategory category_from_body(const nlohmann::json &body,
                                    const std::string &name);

struct FunctorBundle {
  cat::CategoryPtr source;
  cat::CategoryPtr target;
  cat::FinFunctor functor;
};

FunctorBundle functor_from_body(const nlohmann::json &body);

cat::Adjunction adjunction_from_body(const nlohmann::json &body);

struct DiagramBundle {
  cat::CategoryPtr index;
  cat::CategoryPtr target;
  cat::FinFunctor along; // K
  cat::SetValuedFunctor diagram;
  cat::KanSide side = cat::KanSide::left;
};

DiagramBundle diagram_from_body(const nlohmann::json &body);

struct CriterionBundle {
  GridBundle grid;
  jguard::ExternalCriterion criterion;
  std::optional<jguard::QuasiMode> expect;
};

CriterionBundle criterion_from_body(const nlohmann::json &body);

tower::FinRing ring_from_body(const nlohmann::json &body);

sim::World world_from_body(const nlohmann::json &body);

reg::Registry registry_from_body(const nlohmann::json &body);
reg::AxiomPackage package_from_body(const nlohmann::json &body);

// Reads a whole registry document from text (envelope included).
reg::Registry registry_from_text(const std::string &text);

} // namespace hsg::doc
