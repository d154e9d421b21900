#include "hsg/document.hpp"

#include <algorithm>

#include "hsg/error.hpp"

namespace hsg::doc {

using nlohmann::json;

namespace {

void line_col(const std::string &text, std::size_t byte, std::size_t &line,
              std::size_t &col) {
  line = 1;
  col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

const json &field(const json &body, const std::string &name) {
  auto it = body.find(name);
  if (it == body.end())
    fail(ErrorCode::malformed_input, "schema: missing field '" + name + "'");
  return *it;
}

std::string str_field(const json &body, const std::string &name) {
  const json &f = field(body, name);
  if (!f.is_string())
    fail(ErrorCode::malformed_input, "schema: field '" + name + "' must be a string");
  return f.get<std::string>();
}

// kind-specific schema validation by construction
void validate_body(const std::string &kind, const json &body) {
  if (kind == "grid")
    grid_from_body(body);
  else if (kind == "category")
    category_from_body(body, "doc");
  else if (kind == "functor")
    functor_from_body(body);
  else if (kind == "adjunction")
    adjunction_from_body(body);
  else if (kind == "diagram")
    diagram_from_body(body);
  else if (kind == "criterion")
    criterion_from_body(body);
  else if (kind == "ring")
    ring_from_body(body);
  else if (kind == "world")
    world_from_body(body);
  else if (kind == "registry")
    registry_from_body(body);
  else if (kind == "package")
    package_from_body(body);
}

} // namespace

Document parse_document(const std::string &text, const reg::Registry *registry,
                        Report *warnings) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    std::size_t line = 0, col = 0;
    line_col(text, e.byte ? e.byte - 1 : 0, line, col);
    fail(ErrorCode::malformed_input,
         "syntax error at line " + std::to_string(line) + ", column " +
             std::to_string(col) + ": " + e.what());
  }
  if (!root.is_object())
    fail(ErrorCode::malformed_input, "document must be a JSON object");

  Document d;
  if (!root.contains("kind") || !root["kind"].is_string())
    fail(ErrorCode::malformed_input, "document needs a string 'kind'");
  d.kind = root["kind"].get<std::string>();
  const auto &kinds = document_kinds();
  if (std::find(kinds.begin(), kinds.end(), d.kind) == kinds.end())
    fail(ErrorCode::malformed_input, "unknown document kind '" + d.kind + "'");
  if (!root.contains("format_version") ||
      !root["format_version"].is_number_integer())
    fail(ErrorCode::malformed_input, "document needs an integer 'format_version'");
  d.format_version = root["format_version"].get<int>();
  if (d.format_version != 1)
    fail(ErrorCode::malformed_input,
         "unsupported format_version " + std::to_string(d.format_version));
  if (!root.contains("body") || !root["body"].is_object())
    fail(ErrorCode::malformed_input, "document needs an object 'body'");
  d.body = root["body"];

  validate_body(d.kind, d.body);

  // notational-symbol discipline: declared symbol uses must resolve against
  // the referenced registry; standalone documents only warn
  if (d.body.contains("uses_symbols")) {
    const json &symbols = d.body["uses_symbols"];
    if (!symbols.is_array())
      fail(ErrorCode::malformed_input,
           "'uses_symbols' must be an array of strings");
    for (const auto &s : symbols) {
      if (!s.is_string())
        fail(ErrorCode::malformed_input,
             "'uses_symbols' must be an array of strings");
      const std::string sym = s.get<std::string>();
      if (registry) {
        if (!registry->declares_symbol(sym))
          fail(ErrorCode::malformed_input,
               "undeclared symbol '" + sym +
                   "': no notational axiom in the referenced registry");
      } else if (warnings) {
        warnings->add("symbol-unchecked",
                      "symbol '" + sym + "' used without a registry reference",
                      "document", Severity::warning);
      }
    }
  }
  return d;
}

std::string serialize(const Document &d) {
  json root;
  root["kind"] = d.kind;
  root["format_version"] = d.format_version;
  root["body"] = d.body;
  return root.dump(2) + "\n";
}

std::string canonicalize(const std::string &text) {
  return serialize(parse_document(text));
}

// --- grid ------------------------------------------------------------------------

GridBundle grid_from_body(const json &body) {
  GridBundle out;
  std::vector<grid::Axis> axes;
  for (const auto &ja : field(body, "axes")) {
    grid::Axis a;
    a.name = str_field(ja, "name");
    const std::string type = ja.contains("type") ? str_field(ja, "type") : "int";
    if (type == "int")
      a.type = grid::IndexType::integer;
    else if (type == "symbol")
      a.type = grid::IndexType::symbol;
    else
      fail(ErrorCode::malformed_input, "axis type must be 'int' or 'symbol'");
    for (const auto &v : field(ja, "indices")) {
      if (a.type == grid::IndexType::integer) {
        if (!v.is_number_integer())
          fail(ErrorCode::malformed_input,
               "axis " + a.name + ": integer index expected");
        a.indices.push_back(v.get<long long>());
      } else {
        if (!v.is_string())
          fail(ErrorCode::malformed_input,
               "axis " + a.name + ": symbol index expected");
        a.indices.push_back(v.get<std::string>());
      }
    }
    axes.push_back(std::move(a));
  }

  std::vector<grid::TokenSpec> tokens;
  for (const auto &jt : field(body, "tokens")) {
    grid::TokenSpec t;
    t.id = str_field(jt, "id");
    for (const auto &[axis, value] : field(jt, "coords").items()) {
      if (value.is_number_integer())
        t.coords[axis] = value.get<long long>();
      else if (value.is_string())
        t.coords[axis] = value.get<std::string>();
      else
        fail(ErrorCode::malformed_input,
             "token " + t.id + ": coordinate must be integer or string");
    }
    if (jt.contains("delta")) {
      const std::string d = str_field(jt, "delta");
      if (d != "⊤" && d != "⊥")
        fail(ErrorCode::malformed_input, "delta must be ⊤ or ⊥");
      t.delta = (d == "⊤");
    }
    tokens.push_back(std::move(t));
  }
  out.grid = grid::build_grid(axes, tokens);

  if (body.contains("dep")) {
    for (const auto &edge : body["dep"]) {
      if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() ||
          !edge[1].is_string())
        fail(ErrorCode::malformed_input, "dep edges are [from, to] pairs");
      out.dep.edges.emplace_back(edge[0].get<std::string>(),
                                 edge[1].get<std::string>());
    }
  }
  if (body.contains("time_axis")) {
    out.time = grid::TimeBinding{str_field(body, "time_axis")};
    grid::validate_temporal_inputs(out.grid, out.dep, *out.time);
  } else if (!out.dep.edges.empty()) {
    for (const auto &[x, y] : out.dep.edges)
      if (!out.grid.has_token(x) || !out.grid.has_token(y))
        fail(ErrorCode::malformed_input, "dep edge references unknown token");
  }
  return out;
}

json grid_to_body(const grid::Grid &g, const grid::DepGraph &dep,
                  const std::optional<grid::TimeBinding> &time) {
  json body;
  json axes = json::array();
  for (const auto &a : g.axes) {
    json ja;
    ja["name"] = a.name;
    ja["type"] = (a.type == grid::IndexType::integer) ? "int" : "symbol";
    json idx = json::array();
    for (const auto &v : a.indices) {
      if (std::holds_alternative<long long>(v))
        idx.push_back(std::get<long long>(v));
      else
        idx.push_back(std::get<std::string>(v));
    }
    ja["indices"] = idx;
    axes.push_back(ja);
  }
  body["axes"] = axes;
  json tokens = json::array();
  for (const auto &t : g.tokens) {
    json jt;
    jt["id"] = t;
    json coords;
    for (const auto &a : g.axes) {
      const grid::IndexValue &v = g.coords.at({t, a.name});
      if (std::holds_alternative<long long>(v))
        coords[a.name] = std::get<long long>(v);
      else
        coords[a.name] = std::get<std::string>(v);
    }
    jt["coords"] = coords;
    jt["delta"] = g.delta.at(t) ? "⊤" : "⊥";
    tokens.push_back(jt);
  }
  body["tokens"] = tokens;
  if (!dep.edges.empty()) {
    json edges = json::array();
    for (const auto &[x, y] : dep.edges)
      edges.push_back(json::array({x, y}));
    body["dep"] = edges;
  }
  if (time)
    body["time_axis"] = time->axis;
  return body;
}

// --- category / functor / adjunction ------------------------------------------------

cat::FinCategory category_from_body(const json &body, const std::string &name) {
  cat::FinCategory c;
  c.name = body.contains("name") ? str_field(body, "name") : name;
  for (const auto &o : field(body, "objects")) {
    if (!o.is_string())
      fail(ErrorCode::malformed_input, "category objects must be strings");
    c.objects.push_back(o.get<std::string>());
  }
  for (const auto &m : field(body, "morphisms")) {
    cat::Morphism mor;
    mor.id = str_field(m, "id");
    mor.src = str_field(m, "src");
    mor.tgt = str_field(m, "tgt");
    if (m.contains("grade")) {
      if (!m["grade"].is_number_unsigned())
        fail(ErrorCode::malformed_input, "morphism grade must be a natural number");
      mor.grade = m["grade"].get<unsigned>();
    }
    c.morphisms.push_back(std::move(mor));
  }
  for (const auto &[obj, mor] : field(body, "identity").items()) {
    if (!mor.is_string())
      fail(ErrorCode::malformed_input, "identity table entries must be strings");
    c.identity[obj] = mor.get<std::string>();
  }
  for (const auto &entry : field(body, "compose")) {
    if (!entry.is_array() || entry.size() != 3)
      fail(ErrorCode::malformed_input, "compose entries are [g, f, g∘f] triples");
    c.compose_table[{entry[0].get<std::string>(), entry[1].get<std::string>()}] =
        entry[2].get<std::string>();
  }
  return c;
}

namespace {

void map_from_json(const json &j, std::map<std::string, std::string> &out,
                   const std::string &what) {
  if (!j.is_object())
    fail(ErrorCode::malformed_input, what + " must be an object");
  for (const auto &[k, v] : j.items()) {
    if (!v.is_string())
      fail(ErrorCode::malformed_input, what + " values must be strings");
    out[k] = v.get<std::string>();
  }
}

} // namespace

FunctorBundle functor_from_body(const json &body) {
  FunctorBundle out;
  out.source = std::make_shared<cat::FinCategory>(
      category_from_body(field(body, "source"), "source"));
  out.target = std::make_shared<cat::FinCategory>(
      category_from_body(field(body, "target"), "target"));
  out.functor.name = body.contains("name") ? str_field(body, "name") : "F";
  out.functor.source = out.source;
  out.functor.target = out.target;
  map_from_json(field(body, "object_map"), out.functor.object_map, "object_map");
  map_from_json(field(body, "morphism_map"), out.functor.morphism_map,
                "morphism_map");
  return out;
}

cat::Adjunction adjunction_from_body(const json &body) {
  if (body.contains("builtin")) {
    const std::string which = str_field(body, "builtin");
    cat::BuiltinParams params;
    if (body.contains("bound")) {
      if (!body["bound"].is_number_integer())
        fail(ErrorCode::malformed_input, "bound must be an integer");
      params.bound = body["bound"].get<int>();
    }
    if (which == "definability") {
      GridBundle g = grid_from_body(field(body, "grid"));
      return cat::definability_adjunction(g.grid);
    }
    if (which == "emptiness")
      return cat::builtin_adjunction(cat::BuiltinAdjunction::emptiness, params);
    if (which == "discrete_order")
      return cat::builtin_adjunction(cat::BuiltinAdjunction::discrete_order,
                                     params);
    fail(ErrorCode::not_found, "unknown builtin adjunction '" + which + "'");
  }

  auto source = std::make_shared<cat::FinCategory>(
      category_from_body(field(body, "source"), "C"));
  auto target = std::make_shared<cat::FinCategory>(
      category_from_body(field(body, "target"), "D"));

  cat::Adjunction adj;
  adj.name = body.contains("name") ? str_field(body, "name") : "adjunction";
  adj.left.name = "F";
  adj.left.source = source;
  adj.left.target = target;
  map_from_json(field(field(body, "left"), "object_map"), adj.left.object_map,
                "left.object_map");
  map_from_json(field(field(body, "left"), "morphism_map"),
                adj.left.morphism_map, "left.morphism_map");
  adj.right.name = "G";
  adj.right.source = target;
  adj.right.target = source;
  map_from_json(field(field(body, "right"), "object_map"), adj.right.object_map,
                "right.object_map");
  map_from_json(field(field(body, "right"), "morphism_map"),
                adj.right.morphism_map, "right.morphism_map");

  adj.unit.name = "unit";
  adj.unit.source = cat::identity_functor(source);
  adj.unit.target = cat::compose_functors(adj.right, adj.left, "GF");
  map_from_json(field(body, "unit"), adj.unit.components, "unit");
  adj.counit.name = "counit";
  adj.counit.source = cat::compose_functors(adj.left, adj.right, "FG");
  adj.counit.target = cat::identity_functor(target);
  map_from_json(field(body, "counit"), adj.counit.components, "counit");
  return adj;
}

// --- kan diagram --------------------------------------------------------------------

DiagramBundle diagram_from_body(const json &body) {
  DiagramBundle out;
  out.index = std::make_shared<cat::FinCategory>(
      category_from_body(field(body, "index"), "index"));
  out.target = std::make_shared<cat::FinCategory>(
      category_from_body(field(body, "target"), "target"));
  out.along.name = "K";
  out.along.source = out.index;
  out.along.target = out.target;
  map_from_json(field(field(body, "along"), "object_map"),
                out.along.object_map, "along.object_map");
  map_from_json(field(field(body, "along"), "morphism_map"),
                out.along.morphism_map, "along.morphism_map");

  out.diagram.name = "F";
  out.diagram.source = out.index;
  for (const auto &[obj, elems] : field(field(body, "diagram"), "value").items()) {
    std::vector<std::string> v;
    for (const auto &e : elems)
      v.push_back(e.get<std::string>());
    out.diagram.value[obj] = v;
  }
  for (const auto &[mor, act] : field(field(body, "diagram"), "action").items()) {
    std::map<std::string, std::string> a;
    map_from_json(act, a, "diagram.action." + mor);
    out.diagram.action[mor] = a;
  }

  const std::string side =
      body.contains("side") ? str_field(body, "side") : "left";
  if (side == "left")
    out.side = cat::KanSide::left;
  else if (side == "right")
    out.side = cat::KanSide::right;
  else
    fail(ErrorCode::malformed_input, "side must be 'left' or 'right'");
  return out;
}

// --- criterion ------------------------------------------------------------------------

CriterionBundle criterion_from_body(const json &body) {
  CriterionBundle out;
  out.grid = grid_from_body(field(body, "grid"));
  out.criterion.name = body.contains("name") ? str_field(body, "name") : "J";
  if (body.contains("guard"))
    out.criterion.guard = jguard::parse_guard(str_field(body, "guard"));
  if (body.contains("table")) {
    std::map<std::string, bool> table;
    for (const auto &[token, holds] : body["table"].items()) {
      if (!holds.is_boolean())
        fail(ErrorCode::malformed_input, "criterion table values must be booleans");
      table[token] = holds.get<bool>();
    }
    out.criterion.table = std::move(table);
  }
  if (body.contains("carrier"))
    for (const auto &[token, elems] : body["carrier"].items()) {
      std::vector<std::string> v;
      for (const auto &e : elems)
        v.push_back(e.get<std::string>());
      out.criterion.carrier[token] = v;
    }
  if (body.contains("default_carrier")) {
    out.criterion.default_carrier.clear();
    for (const auto &e : body["default_carrier"])
      out.criterion.default_carrier.push_back(e.get<std::string>());
  }
  if (body.contains("expect")) {
    const std::string e = str_field(body, "expect");
    if (e == "isomorphism")
      out.expect = jguard::QuasiMode::isomorphism;
    else if (e == "implication")
      out.expect = jguard::QuasiMode::implication;
    else if (e == "fails")
      out.expect = jguard::QuasiMode::fails;
    else
      fail(ErrorCode::malformed_input, "expect must name a quasi-adjunction mode");
  }

  jguard::GuardContext ctx{&out.grid.grid,
                           out.grid.dep.edges.empty() ? nullptr : &out.grid.dep,
                           out.grid.time ? &*out.grid.time : nullptr};
  Report v = jguard::validate_criterion(out.criterion, ctx);
  if (!v.pass())
    fail(ErrorCode::malformed_input,
         "criterion schema: " + v.findings.front().message);
  return out;
}

// --- ring ------------------------------------------------------------------------------

tower::FinRing ring_from_body(const json &body) {
  if (body.contains("zmod")) {
    if (!body["zmod"].is_number_integer())
      fail(ErrorCode::malformed_input, "zmod takes an integer modulus");
    return tower::zmod(body["zmod"].get<int>());
  }
  tower::FinRing r;
  r.name = body.contains("name") ? str_field(body, "name") : "ring";
  for (const auto &e : field(body, "elements"))
    r.elements.push_back(e.get<std::string>());
  auto table = [&](const char *key) {
    std::vector<std::vector<int>> t;
    for (const auto &row : field(body, key)) {
      std::vector<int> out_row;
      for (const auto &v : row) {
        if (!v.is_number_integer())
          fail(ErrorCode::malformed_input,
               std::string(key) + " entries must be element indices");
        out_row.push_back(v.get<int>());
      }
      t.push_back(std::move(out_row));
    }
    return t;
  };
  r.add = table("add");
  r.mul = table("mul");
  r.zero = field(body, "zero").get<int>();
  r.one = field(body, "one").get<int>();
  Report laws = tower::validate_ring(r);
  if (!laws.pass())
    fail(ErrorCode::malformed_input,
         "ring tables break the axioms: " + laws.findings.front().message);
  return r;
}

// --- world -----------------------------------------------------------------------------

sim::World world_from_body(const json &body) {
  std::vector<std::pair<std::string, sim::Point3>> points;
  std::vector<json> decorations;
  for (const auto &jp : field(body, "points")) {
    sim::Point3 pos;
    pos.x = field(jp, "x").get<double>();
    pos.y = field(jp, "y").get<double>();
    pos.z = field(jp, "z").get<double>();
    points.emplace_back(str_field(jp, "id"), pos);
    decorations.push_back(jp);
  }
  sim::NF0Body body_points = sim::free_body(points);
  for (std::size_t i = 0; i < decorations.size(); ++i) {
    const json &jp = decorations[i];
    sim::BodyPoint &p = body_points.points[i];
    if (jp.contains("potential"))
      p.state.values["potential"] = jp["potential"].get<double>();
    if (jp.contains("neuron")) {
      const json &n = jp["neuron"];
      if (n.contains("threshold"))
        p.neuron.threshold = n["threshold"].get<double>();
      if (n.contains("amplitude"))
        p.neuron.amplitude = n["amplitude"].get<double>();
      if (n.contains("baseline"))
        p.neuron.baseline = n["baseline"].get<double>();
      if (n.contains("delay"))
        p.neuron.delay = n["delay"].get<int>();
      if (n.contains("refractory"))
        p.neuron.refractory = n["refractory"].get<int>();
      if (n.contains("input_gain"))
        p.neuron.weight = {{n["input_gain"].get<double>()}};
      if (n.contains("offset"))
        p.neuron.offset = {n["offset"].get<double>()};
    }
  }

  std::vector<std::string> vertex_ids;
  for (const auto &[id, pos] : points)
    vertex_ids.push_back(id);
  std::vector<std::vector<std::string>> simplices;
  if (body.contains("shape"))
    for (const auto &s : body["shape"]) {
      std::vector<std::string> simplex;
      for (const auto &v : s)
        simplex.push_back(v.get<std::string>());
      simplices.push_back(std::move(simplex));
    }
  sim::SimplicialShape shape = sim::make_shape(vertex_ids, simplices);

  sim::NeuralFiberConfig neural;
  if (body.contains("neural")) {
    const json &n = body["neural"];
    if (n.contains("enabled"))
      neural.enabled = n["enabled"].get<bool>();
    if (n.contains("default_weight"))
      neural.default_synapse_weight = n["default_weight"].get<double>();
  }
  if (body.contains("synapses"))
    for (const auto &s : body["synapses"]) {
      if (!s.is_array() || s.size() != 3)
        fail(ErrorCode::malformed_input, "synapses are [from, to, weight]");
      neural.synapses.emplace_back(s[0].get<std::string>(),
                                   s[1].get<std::string>(),
                                   s[2].get<double>());
    }

  sim::LearningFiberConfig learning;
  if (body.contains("learning")) {
    const json &l = body["learning"];
    if (l.contains("enabled"))
      learning.enabled = l["enabled"].get<bool>();
    if (l.contains("rate"))
      learning.rate = l["rate"].get<double>();
    if (l.contains("w_max"))
      learning.w_max = l["w_max"].get<double>();
  }
  sim::ModulatorFiberConfig modulator;
  if (body.contains("modulator")) {
    const json &m = body["modulator"];
    if (m.contains("enabled"))
      modulator.enabled = m["enabled"].get<bool>();
    if (m.contains("delay"))
      modulator.delay = m["delay"].get<int>();
    if (m.contains("window"))
      modulator.window = m["window"].get<int>();
    if (m.contains("gain"))
      modulator.gain = m["gain"].get<double>();
    if (m.contains("channel"))
      modulator.channel = m["channel"].get<std::string>();
  }

  sim::ReconcilePolicy policy = sim::ReconcilePolicy::sum_clamp;
  if (body.contains("policy")) {
    const std::string p = str_field(body, "policy");
    if (p == "sum_clamp")
      policy = sim::ReconcilePolicy::sum_clamp;
    else if (p == "last_writer")
      policy = sim::ReconcilePolicy::last_writer;
    else if (p == "max")
      policy = sim::ReconcilePolicy::max_value;
    else
      fail(ErrorCode::malformed_input, "unknown reconciliation policy " + p);
  }
  std::uint64_t seed = 0;
  if (body.contains("seed"))
    seed = body["seed"].get<std::uint64_t>();

  return sim::make_world(std::move(body_points), std::move(shape), neural,
                         learning, modulator, policy, seed);
}

// --- registry / package ------------------------------------------------------------------

reg::AxiomPackage package_from_body(const json &body) {
  reg::AxiomPackage p;
  p.id = str_field(body, "id");
  p.version = body.contains("version") ? str_field(body, "version") : "1";
  if (body.contains("dependencies"))
    for (const auto &d : body["dependencies"])
      p.dependencies.push_back(d.get<std::string>());
  if (body.contains("symbols"))
    for (const auto &s : body["symbols"]) {
      reg::NotationalAxiom a;
      a.symbol = str_field(s, "symbol");
      a.arity = field(s, "arity").get<unsigned>();
      a.meaning = s.contains("meaning") ? str_field(s, "meaning") : "";
      a.rendering = s.contains("rendering") ? str_field(s, "rendering") : a.symbol;
      p.symbols.push_back(std::move(a));
    }
  if (body.contains("axioms"))
    for (const auto &a : body["axioms"]) {
      reg::AxiomStatement st;
      st.name = str_field(a, "name");
      st.text = a.contains("text") ? str_field(a, "text") : "";
      st.hook = a.contains("hook") ? str_field(a, "hook") : "";
      p.axioms.push_back(std::move(st));
    }
  return p;
}

reg::Registry registry_from_body(const json &body) {
  reg::Registry r;
  for (const auto &jp : field(body, "packages"))
    r.packages.push_back(package_from_body(jp));
  if (r.packages.empty() || r.packages.front().id != "ces")
    fail(ErrorCode::malformed_input,
         "registry documents must carry the ces root package first");
  return r;
}

reg::Registry registry_from_text(const std::string &text) {
  Document d = parse_document(text);
  if (d.kind != "registry")
    fail(ErrorCode::malformed_input, "expected a registry document");
  return registry_from_body(d.body);
}

} // namespace hsg::doc
