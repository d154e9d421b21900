#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hsg/report.hpp"

namespace hsg::reg {

// Explicit declaration of a notation: the symbol, its arity and meaning.
struct NotationalAxiom {
  std::string symbol;
  unsigned arity = 0;
  std::string meaning;
  std::string rendering;
};

struct AxiomStatement {
  std::string name;
  std::string text;
  std::string hook; // optional machine-checkable hook id; empty = none
};

struct AxiomPackage {
  std::string id;
  std::string version;
  std::vector<std::string> dependencies;
  std::vector<NotationalAxiom> symbols;
  std::vector<AxiomStatement> axioms;
};

// CES-rooted package registry. The root package "ces" is always present,
// carries no dependencies and is not detachable.
struct Registry {
  std::vector<AxiomPackage> packages; // insertion order, "ces" first

  const AxiomPackage *find(const std::string &id) const;
  bool declares_symbol(const std::string &symbol) const;
};

Registry init_registry();

struct AttachResult {
  Registry registry;
  Report report; // identical symbol redeclarations surface as warnings
};

AttachResult attach_package(const Registry &r, const AxiomPackage &p);

Registry detach_package(const Registry &r, const std::string &id);

// Topological order, dependencies first, ties broken lexicographically.
std::vector<std::string> resolve_order(const Registry &r);

// E(t): S(t) is defined and reproduces t byte-for-byte. No normalization.
bool ces_holds(const std::string &term,
               const std::map<std::string, std::string> &s_table);

// Canonical registry document: key-sorted JSON, two-space indent, UTF-8,
// LF line endings, trailing newline. Bit-stable across runs.
std::string canonical_serialization(const Registry &r);

struct Attestation {
  std::string instance_id;
  std::string package_digest; // sha256 hex of the canonical serialization
  std::string statement;
  std::string echo; // independent re-serialization; must equal statement
};

Attestation attest_internal(const Registry &r, const std::string &instance_id,
                            unsigned long long counter);

bool verify_attestation(const Attestation &a);

// --- institutions ------------------------------------------------------------

struct Institution {
  std::string name;
  std::vector<std::string> signatures;
  std::map<std::string, std::vector<std::string>> sentences; // per signature
  std::map<std::string, std::vector<std::string>> models;    // per signature
  // signature -> (model, sentence) -> satisfied
  std::map<std::string, std::map<std::pair<std::string, std::string>, bool>>
      satisfies;

  bool sat(const std::string &sig, const std::string &model,
           const std::string &sentence) const;
};

struct InstitutionMorphism {
  std::string name;
  Institution source;
  Institution target;
  std::map<std::string, std::string> signature_map;
  // per source signature: sentence and model translations
  std::map<std::string, std::map<std::string, std::string>> sentence_map;
  std::map<std::string, std::map<std::string, std::string>> model_map;
};

// Satisfaction preservation: M ⊨ φ at the source forces the translated
// model to satisfy the translated sentence. Counterexamples are listed.
Report check_institution_morphism(const InstitutionMorphism &m);

} // namespace hsg::reg
