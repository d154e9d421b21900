#include "hsg/suite.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hsg/error.hpp"
#include "hsg/tower.hpp"

namespace hsg::doc {

using nlohmann::json;

Suite suite_from_name(const std::string &name) {
  if (name == "all")
    return Suite::all;
  if (name == "category")
    return Suite::category;
  if (name == "adjunction")
    return Suite::adjunction;
  if (name == "kan")
    return Suite::kan;
  if (name == "grid")
    return Suite::grid;
  if (name == "temporal")
    return Suite::temporal;
  if (name == "jguard")
    return Suite::jguard;
  if (name == "tower")
    return Suite::tower;
  if (name == "registry")
    return Suite::registry;
  fail(ErrorCode::not_found, "unknown suite '" + name + "'");
}

namespace {

Suite owning_suite(const std::string &kind) {
  if (kind == "category" || kind == "functor")
    return Suite::category;
  if (kind == "adjunction")
    return Suite::adjunction;
  if (kind == "diagram")
    return Suite::kan;
  if (kind == "grid")
    return Suite::grid;
  if (kind == "criterion")
    return Suite::jguard;
  if (kind == "ring")
    return Suite::tower;
  if (kind == "registry" || kind == "package")
    return Suite::registry;
  if (kind == "world")
    return Suite::grid; // structural checks only
  fail(ErrorCode::not_found, "no suite owns documents of kind '" + kind + "'");
}

Report check_category_doc(const Document &d) {
  if (d.kind == "functor") {
    FunctorBundle f = functor_from_body(d.body);
    Report r = cat::validate_category(*f.source);
    r.merge(cat::validate_category(*f.target));
    r.merge(cat::validate_functor(f.functor));
    return r;
  }
  return cat::validate_category(category_from_body(d.body, "doc"));
}

Report check_adjunction_doc(const Document &d) {
  cat::Adjunction adj = adjunction_from_body(d.body);
  cat::VerifyOptions opts;
  if (d.body.contains("max_objects"))
    opts.max_objects = d.body["max_objects"].get<std::size_t>();
  if (d.body.contains("max_morphisms"))
    opts.max_morphisms = d.body["max_morphisms"].get<std::size_t>();
  return cat::verify_adjunction(adj, opts);
}

Report check_kan_doc(const Document &d) {
  DiagramBundle diagram = diagram_from_body(d.body);
  Report r = cat::validate_set_functor(diagram.diagram);
  r.merge(cat::validate_functor(diagram.along));
  if (!r.pass())
    return r;

  cat::SetValuedFunctor ext =
      cat::kan_extend(diagram.side, diagram.diagram, diagram.along);

  // candidate family: the extension plus one deleted- and one
  // duplicated-element perturbation at the first nonempty anchor
  std::vector<cat::SetValuedFunctor> candidates = {ext};
  for (const auto &dobj : diagram.target->objects) {
    if (ext.at(dobj).empty())
      continue;
    const std::string elem = ext.at(dobj).front();
    cat::SetValuedFunctor deleted = ext;
    deleted.name += "-del";
    auto &dv = deleted.value.at(dobj);
    dv.erase(std::find(dv.begin(), dv.end(), elem));
    for (const auto &m : diagram.target->morphisms) {
      if (m.src == dobj)
        deleted.action.at(m.id).erase(elem);
    }
    candidates.push_back(deleted);

    cat::SetValuedFunctor duplicated = ext;
    duplicated.name += "-dup";
    duplicated.value.at(dobj).push_back(elem + "'");
    for (const auto &m : diagram.target->morphisms) {
      if (m.src == dobj)
        duplicated.action.at(m.id)[elem + "'"] =
            duplicated.action.at(m.id).at(elem);
    }
    duplicated.action.at(diagram.target->identity.at(dobj))[elem + "'"] =
        elem + "'";
    candidates.push_back(duplicated);
    break;
  }

  r.merge(cat::verify_kan_universal(ext, diagram.diagram, diagram.along,
                                    diagram.side, candidates));
  // the perturbed candidates must be rejected
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Report perturbed =
        cat::verify_kan_universal(candidates[i], diagram.diagram,
                                  diagram.along, diagram.side, candidates);
    if (perturbed.pass())
      r.add("kan-perturbation-missed",
            "perturbed extension " + candidates[i].name +
                " passed the universal property",
            "kan " + ext.name);
  }
  return r;
}

Report check_grid_doc(const Document &d) {
  if (d.kind == "world") {
    world_from_body(d.body); // structural validation happens in the loader
    return {};
  }
  GridBundle g = grid_from_body(d.body);
  return grid::check_state_identity(g.grid);
}

Report check_temporal_doc(const Document &d) {
  GridBundle g = grid_from_body(d.body);
  if (!g.time)
    fail(ErrorCode::malformed_input,
         "temporal checks need a grid document with a time_axis");
  Report r;
  for (const auto &[x, y] : grid::future_violations(g.grid, g.dep, *g.time))
    r.add("no-future-reference",
          "token " + x + " depends on future token " + y, "token " + x);
  return r;
}

Report check_jguard_doc(const Document &d) {
  CriterionBundle c = criterion_from_body(d.body);
  jguard::GuardContext ctx{&c.grid.grid,
                           c.grid.dep.edges.empty() ? nullptr : &c.grid.dep,
                           c.grid.time ? &*c.grid.time : nullptr};
  jguard::QuasiReport q = jguard::check_quasi_adjunction(c.criterion, ctx);
  Report r = q.findings;
  if (c.expect && q.mode != *c.expect)
    r.add("jguard-mode",
          std::string("expected mode ") + jguard::quasi_mode_name(*c.expect) +
              " but classified as " + jguard::quasi_mode_name(q.mode),
          "criterion " + c.criterion.name);
  else if (!c.expect && q.mode == jguard::QuasiMode::fails)
    r.add("jguard-fails",
          "criterion fails J0 with witness " + q.witness,
          "criterion " + c.criterion.name);
  return r;
}

Report check_tower_doc(const Document &d) {
  tower::FinRing ring = ring_from_body(d.body);
  Report r = tower::validate_ring(ring);
  if (auto witness = tower::find_zero_divisors(ring))
    r.add("zero-divisors",
          "ring has zero divisors: " + witness->a + " · " + witness->b + " = 0",
          "ring " + ring.name, Severity::info);
  return r;
}

Report check_registry_doc(const Document &d) {
  Report r;
  if (d.kind == "package") {
    package_from_body(d.body); // schema only; attachment is a CLI action
    return r;
  }
  reg::Registry registry = registry_from_body(d.body);
  const reg::AxiomPackage &root = registry.packages.front();
  if (!root.dependencies.empty())
    r.add("ces-root", "the ces root must not have dependencies", "registry");
  if (root.symbols.size() != 4)
    r.add("ces-root", "the ces root must declare exactly its four symbols",
          "registry");
  if (root.axioms.size() != 1)
    r.add("ces-root", "the ces root carries exactly one axiom", "registry");
  reg::resolve_order(registry); // throws on cycles / unresolved deps
  return r;
}

} // namespace

Report check_document(const Document &d, Suite suite) {
  if (suite == Suite::all)
    suite = owning_suite(d.kind);
  switch (suite) {
  case Suite::category:
    return check_category_doc(d);
  case Suite::adjunction:
    return check_adjunction_doc(d);
  case Suite::kan:
    return check_kan_doc(d);
  case Suite::grid:
    return check_grid_doc(d);
  case Suite::temporal:
    return check_temporal_doc(d);
  case Suite::jguard:
    return check_jguard_doc(d);
  case Suite::tower:
    return check_tower_doc(d);
  case Suite::registry:
    return check_registry_doc(d);
  case Suite::all:
    break;
  }
  fail(ErrorCode::internal, "unhandled suite");
}

SuiteResult run_suite(const std::vector<std::string> &paths, Suite suite) {
  SuiteResult result;

  std::vector<std::string> sorted_paths = paths;
  std::sort(sorted_paths.begin(), sorted_paths.end());

  for (const auto &path : sorted_paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      result.exit_code = 4;
      DocumentResult dr;
      dr.path = path;
      dr.verdict = "fail";
      dr.report.add("io", "cannot open file", path);
      result.documents.push_back(std::move(dr));
      continue;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    DocumentResult dr;
    dr.path = path;
    try {
      Report warnings;
      Document d = parse_document(buffer.str(), nullptr, &warnings);
      dr.report = check_document(d, suite);
      dr.report.merge(warnings);
    } catch (const Error &e) {
      if (e.code() == ErrorCode::io)
        result.exit_code = 4;
      dr.report.add(error_code_name(e.code()), e.what(), path);
    }
    std::sort(dr.report.findings.begin(), dr.report.findings.end(),
              [](const Finding &a, const Finding &b) {
                return std::tie(a.code, a.message) < std::tie(b.code, b.message);
              });
    dr.verdict = dr.report.pass()
                     ? (dr.report.findings.empty() ? "pass" : "warn")
                     : "fail";
    result.documents.push_back(std::move(dr));
  }

  bool any_fail = false;
  for (const auto &dr : result.documents)
    if (dr.verdict == "fail")
      any_fail = true;
  if (result.exit_code == 0 && any_fail)
    result.exit_code = 2;

  json out;
  out["suite"] = "report";
  json docs = json::array();
  for (const auto &dr : result.documents) {
    json jd;
    jd["path"] = dr.path;
    jd["verdict"] = dr.verdict;
    json findings = json::array();
    for (const auto &f : dr.report.findings)
      findings.push_back({{"code", f.code},
                          {"message", f.message},
                          {"location", f.location},
                          {"severity", severity_name(f.severity)}});
    jd["findings"] = findings;
    docs.push_back(jd);
  }
  out["documents"] = docs;
  out["verdict"] = any_fail ? "fail" : "pass";
  result.rendered = out.dump(2) + "\n";
  return result;
}

} // namespace hsg::doc
