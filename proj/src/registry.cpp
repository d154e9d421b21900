#include "hsg/registry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hsg/error.hpp"
#include "hsg/sha256.hpp"

namespace hsg::reg {

using nlohmann::json;

const AxiomPackage *Registry::find(const std::string &id) const {
  for (const auto &p : packages)
    if (p.id == id)
      return &p;
  return nullptr;
}

bool Registry::declares_symbol(const std::string &symbol) const {
  for (const auto &p : packages)
    for (const auto &s : p.symbols)
      if (s.symbol == symbol)
        return true;
  return false;
}

Registry init_registry() {
  AxiomPackage ces;
  ces.id = "ces";
  ces.version = "1";
  ces.symbols = {
      {"E", 1, "existence predicate: E(t) holds when S(t) = t", "E"},
      {"S", 1, "unary reflective referential operator", "S"},
      {"=", 2, "identity of reflexive reference", "="},
      {":=", 2, "definitional assignment", ":="},
  };
  ces.axioms = {{"ces", "E(t) := (S(t) = t)", "ces_holds"}};
  Registry r;
  r.packages.push_back(std::move(ces));
  return r;
}

AttachResult attach_package(const Registry &r, const AxiomPackage &p) {
  if (r.find(p.id))
    fail(ErrorCode::conflict, "package id " + p.id + " already attached");
  for (const auto &dep : p.dependencies)
    if (!r.find(dep))
      fail(ErrorCode::conflict,
           "package " + p.id + " has unresolved dependency " + dep);
  std::set<std::string> own;
  for (const auto &s : p.symbols)
    if (!own.insert(s.symbol).second)
      fail(ErrorCode::malformed_input,
           "package " + p.id + " declares symbol " + s.symbol + " twice");

  AttachResult out{r, {}};
  for (const auto &s : p.symbols)
    for (const auto &q : r.packages)
      for (const auto &existing : q.symbols) {
        if (existing.symbol != s.symbol)
          continue;
        if (existing.arity != s.arity || existing.meaning != s.meaning)
          fail(ErrorCode::conflict,
               "symbol collision: " + s.symbol + " declared by " + q.id +
                   " with different arity or meaning");
        out.report.add("symbol-redeclared",
                       "package " + p.id + " redeclares symbol " + s.symbol +
                           " identically to " + q.id,
                       "package " + p.id, Severity::warning);
      }
  out.registry.packages.push_back(p);
  return out;
}

Registry detach_package(const Registry &r, const std::string &id) {
  if (id == "ces")
    fail(ErrorCode::conflict, "the root package ces is not detachable");
  if (!r.find(id))
    fail(ErrorCode::not_found, "package " + id + " is not attached");
  std::vector<std::string> dependents;
  for (const auto &p : r.packages)
    for (const auto &dep : p.dependencies)
      if (dep == id)
        dependents.push_back(p.id);
  if (!dependents.empty()) {
    std::string list;
    for (const auto &d : dependents)
      list += (list.empty() ? "" : ", ") + d;
    fail(ErrorCode::conflict,
         "package " + id + " has dependents: " + list);
  }
  Registry out;
  for (const auto &p : r.packages)
    if (p.id != id)
      out.packages.push_back(p);
  return out;
}

std::vector<std::string> resolve_order(const Registry &r) {
  std::map<std::string, std::vector<std::string>> deps;
  std::map<std::string, int> indegree;
  for (const auto &p : r.packages) {
    indegree[p.id];
    for (const auto &d : p.dependencies) {
      if (!r.find(d))
        fail(ErrorCode::conflict,
             "package " + p.id + " has unresolved dependency " + d);
      deps[d].push_back(p.id); // d must come before p
      ++indegree[p.id];
    }
  }

  std::set<std::string> ready;
  for (const auto &[id, n] : indegree)
    if (n == 0)
      ready.insert(id);

  std::vector<std::string> order;
  while (!ready.empty()) {
    const std::string id = *ready.begin(); // lexicographic tie-break
    ready.erase(ready.begin());
    order.push_back(id);
    for (const auto &next : deps[id])
      if (--indegree[next] == 0)
        ready.insert(next);
  }

  if (order.size() != r.packages.size()) {
    // walk the residual graph to print one cycle path [a, b, ..., a]
    std::set<std::string> remaining;
    for (const auto &[id, n] : indegree)
      if (n > 0)
        remaining.insert(id);
    std::vector<std::string> path;
    std::set<std::string> on_path;
    std::string cur = *remaining.begin();
    while (!on_path.count(cur)) {
      path.push_back(cur);
      on_path.insert(cur);
      for (const auto &d : r.find(cur)->dependencies)
        if (remaining.count(d)) {
          cur = d;
          break;
        }
    }
    path.push_back(cur);
    while (path.front() != cur)
      path.erase(path.begin());
    std::string msg = "dependency cycle: [";
    for (std::size_t i = 0; i < path.size(); ++i)
      msg += (i ? ", " : "") + path[i];
    msg += "]";
    fail(ErrorCode::conflict, msg);
  }
  return order;
}

bool ces_holds(const std::string &term,
               const std::map<std::string, std::string> &s_table) {
  auto it = s_table.find(term);
  return it != s_table.end() && it->second == term;
}

std::string canonical_serialization(const Registry &r) {
  json doc;
  doc["format_version"] = 1;
  doc["kind"] = "registry";
  json body;
  json packages = json::array();
  for (const auto &p : r.packages) {
    json jp;
    jp["id"] = p.id;
    jp["version"] = p.version;
    jp["dependencies"] = p.dependencies;
    json symbols = json::array();
    for (const auto &s : p.symbols)
      symbols.push_back({{"symbol", s.symbol},
                         {"arity", s.arity},
                         {"meaning", s.meaning},
                         {"rendering", s.rendering}});
    jp["symbols"] = symbols;
    json axioms = json::array();
    for (const auto &a : p.axioms) {
      json ja{{"name", a.name}, {"text", a.text}};
      if (!a.hook.empty())
        ja["hook"] = a.hook;
      axioms.push_back(ja);
    }
    jp["axioms"] = axioms;
    packages.push_back(jp);
  }
  body["packages"] = packages;
  doc["body"] = body;
  return doc.dump(2) + "\n";
}

Attestation attest_internal(const Registry &r, const std::string &instance_id,
                            unsigned long long counter) {
  Attestation a;
  a.instance_id = instance_id;
  a.package_digest = sha256_hex(canonical_serialization(r));
  a.statement = "instance " + instance_id + " with digest " +
                a.package_digest + " is operating at " +
                std::to_string(counter);

  // independent re-serialization: recompute the digest from a fresh pass and
  // rebuild the sentence through a different formatting route
  std::ostringstream echo;
  echo << "instance " << instance_id << " with digest "
       << sha256_hex(canonical_serialization(r)) << " is operating at "
       << counter;
  a.echo = echo.str();

  if (a.echo != a.statement)
    fail(ErrorCode::internal, "attestation echo differs from statement");
  return a;
}

bool verify_attestation(const Attestation &a) {
  if (a.package_digest.size() != 64)
    return false;
  for (char c : a.package_digest)
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')))
      return false;
  return a.echo == a.statement &&
         a.statement.find(a.package_digest) != std::string::npos;
}

// --- institutions ---------------------------------------------------------------

bool Institution::sat(const std::string &sig, const std::string &model,
                      const std::string &sentence) const {
  auto it = satisfies.find(sig);
  if (it == satisfies.end())
    fail(ErrorCode::malformed_input,
         "institution " + name + ": no table for signature " + sig);
  auto jt = it->second.find({model, sentence});
  if (jt == it->second.end())
    fail(ErrorCode::malformed_input,
         "institution " + name + ": table not total at (" + model + ", " +
             sentence + ")");
  return jt->second;
}

Report check_institution_morphism(const InstitutionMorphism &m) {
  Report report;
  const std::string loc = "institution-morphism " + m.name;

  for (const auto &sig : m.source.signatures) {
    auto sigit = m.signature_map.find(sig);
    if (sigit == m.signature_map.end())
      fail(ErrorCode::malformed_input,
           loc + ": signature_map undefined at " + sig);
    const std::string &tsig = sigit->second;
    if (std::find(m.target.signatures.begin(), m.target.signatures.end(),
                  tsig) == m.target.signatures.end())
      fail(ErrorCode::malformed_input,
           loc + ": signature_map hits unknown target signature " + tsig);

    const auto &sen_map = m.sentence_map.at(sig);
    const auto &mod_map = m.model_map.at(sig);
    for (const auto &model : m.source.models.at(sig)) {
      if (!mod_map.count(model))
        fail(ErrorCode::malformed_input,
             loc + ": model_map undefined at " + model);
      for (const auto &sentence : m.source.sentences.at(sig)) {
        if (!sen_map.count(sentence))
          fail(ErrorCode::malformed_input,
               loc + ": sentence_map undefined at " + sentence);
        if (!m.source.sat(sig, model, sentence))
          continue;
        if (!m.target.sat(tsig, mod_map.at(model), sen_map.at(sentence)))
          report.add("satisfaction-broken",
                     "(" + model + " ⊨ " + sentence + ") at " + sig +
                         " but (" + mod_map.at(model) + " ⊭ " +
                         sen_map.at(sentence) + ") at " + tsig,
                     loc);
      }
    }
  }
  return report;
}

} // namespace hsg::reg
