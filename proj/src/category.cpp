#include "hsg/category.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "hsg/error.hpp"

namespace hsg::cat {

bool FinCategory::has_object(const std::string &x) const {
  return std::find(objects.begin(), objects.end(), x) != objects.end();
}

const Morphism *FinCategory::morphism(const std::string &id) const {
  for (const auto &m : morphisms)
    if (m.id == id)
      return &m;
  return nullptr;
}

const std::string &FinCategory::id_of(const std::string &object) const {
  auto it = identity.find(object);
  if (it == identity.end())
    fail(ErrorCode::malformed_input,
         "category " + name + ": no identity for object " + object);
  return it->second;
}

const Morphism *FinCategory::compose(const std::string &g,
                                     const std::string &f) const {
  auto it = compose_table.find({g, f});
  if (it == compose_table.end())
    return nullptr;
  return morphism(it->second);
}

std::vector<std::string> FinCategory::hom(const std::string &x,
                                          const std::string &y) const {
  std::vector<std::string> out;
  for (const auto &m : morphisms)
    if (m.src == x && m.tgt == y)
      out.push_back(m.id);
  return out;
}

bool FinCategory::is_iso(const std::string &f) const {
  const Morphism *m = morphism(f);
  if (!m)
    return false;
  for (const auto &g : hom(m->tgt, m->src)) {
    const Morphism *gf = compose(g, f);
    const Morphism *fg = compose(f, g);
    if (gf && fg && gf->id == id_of(m->src) && fg->id == id_of(m->tgt))
      return true;
  }
  return false;
}

unsigned FinCategory::max_grade() const {
  unsigned k = 0;
  for (const auto &m : morphisms)
    k = std::max(k, m.grade);
  return k;
}

bool FinCategory::operator==(const FinCategory &other) const {
  if (objects != other.objects || identity != other.identity ||
      compose_table != other.compose_table)
    return false;
  if (morphisms.size() != other.morphisms.size())
    return false;
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const Morphism &a = morphisms[i];
    const Morphism &b = other.morphisms[i];
    if (a.id != b.id || a.src != b.src || a.tgt != b.tgt || a.grade != b.grade)
      return false;
  }
  return true;
}

const std::string &FinFunctor::on_object(const std::string &x) const {
  auto it = object_map.find(x);
  if (it == object_map.end())
    fail(ErrorCode::malformed_input,
         "functor " + name + ": object_map undefined at " + x);
  return it->second;
}

const std::string &FinFunctor::on_morphism(const std::string &f) const {
  auto it = morphism_map.find(f);
  if (it == morphism_map.end())
    fail(ErrorCode::malformed_input,
         "functor " + name + ": morphism_map undefined at " + f);
  return it->second;
}

const std::string &FinNatTrans::at(const std::string &object) const {
  auto it = components.find(object);
  if (it == components.end())
    fail(ErrorCode::malformed_input,
         "nat-trans " + name + ": missing component at " + object);
  return it->second;
}

bool Preorder::holds(const std::string &x, const std::string &y) const {
  return std::find(leq.begin(), leq.end(), std::make_pair(x, y)) != leq.end();
}

// --- validate_category ------------------------------------------------------

namespace {

void check_wellformed(const FinCategory &c) {
  std::set<std::string> objs(c.objects.begin(), c.objects.end());
  if (objs.size() != c.objects.size())
    fail(ErrorCode::malformed_input, "category " + c.name + ": duplicate object id");
  std::set<std::string> mors;
  for (const auto &m : c.morphisms) {
    if (!mors.insert(m.id).second)
      fail(ErrorCode::malformed_input,
           "category " + c.name + ": duplicate morphism id " + m.id);
    if (!objs.count(m.src) || !objs.count(m.tgt))
      fail(ErrorCode::malformed_input, "category " + c.name + ": morphism " +
                                           m.id + " references undeclared object");
  }
  for (const auto &x : c.objects) {
    auto it = c.identity.find(x);
    if (it == c.identity.end())
      fail(ErrorCode::malformed_input,
           "category " + c.name + ": identity table missing object " + x);
    if (!mors.count(it->second))
      fail(ErrorCode::malformed_input, "category " + c.name + ": identity of " +
                                           x + " is undeclared morphism " +
                                           it->second);
  }
  for (const auto &[pair, h] : c.compose_table) {
    if (!mors.count(pair.first) || !mors.count(pair.second) || !mors.count(h))
      fail(ErrorCode::malformed_input,
           "category " + c.name + ": compose entry (" + pair.first + "," +
               pair.second + ")=" + h + " references undeclared morphism");
  }
}

} // namespace

Report validate_category(const FinCategory &c) {
  check_wellformed(c);
  Report report;
  const std::string loc = "category " + c.name;

  // identity table: id_x must be an endomorphism of x with grade 0
  for (const auto &x : c.objects) {
    const Morphism *idm = c.morphism(c.identity.at(x));
    if (idm->src != x || idm->tgt != x)
      report.add("identity-typing",
                 "identity of " + x + " is " + idm->id + ": " + idm->src +
                     " -> " + idm->tgt,
                 loc);
    if (idm->grade != 0)
      report.add("grade-identity",
                 "grade(" + idm->id + ") = " + std::to_string(idm->grade) +
                     ", expected 0 for an identity",
                 loc);
  }

  auto is_identity = [&](const std::string &id) {
    const Morphism *m = c.morphism(id);
    return m && c.identity.count(m->src) && c.identity.at(m->src) == id &&
           m->src == m->tgt;
  };

  // composition table: total on composable pairs and only on them,
  // well-typed, grade(g∘f) = max(grade g, grade f). Missing pairs that
  // involve an identity are identity-law violations, reported below.
  for (const auto &g : c.morphisms) {
    for (const auto &f : c.morphisms) {
      const bool composable = (f.tgt == g.src);
      auto it = c.compose_table.find({g.id, f.id});
      if (!composable) {
        if (it != c.compose_table.end())
          report.add("compose-domain",
                     "compose(" + g.id + ", " + f.id +
                         ") defined on a non-composable pair",
                     loc);
        continue;
      }
      if (it == c.compose_table.end()) {
        if (!is_identity(g.id) && !is_identity(f.id))
          report.add("compose-total",
                     "compose(" + g.id + ", " + f.id + ") missing", loc);
        continue;
      }
      const Morphism *h = c.morphism(it->second);
      if (h->src != f.src || h->tgt != g.tgt) {
        report.add("compose-typing",
                   "compose(" + g.id + ", " + f.id + ") = " + h->id +
                       " has wrong endpoints",
                   loc);
        continue;
      }
      if (h->grade != std::max(g.grade, f.grade))
        report.add("grade-composite",
                   "grade(" + h->id + ") != max(grade " + g.id + ", grade " +
                       f.id + ")",
                   loc);
    }
  }

  // identity laws; a missing identity-composite counts as a violation too
  for (const auto &f : c.morphisms) {
    const Morphism *left = c.compose(c.identity.at(f.tgt), f.id);
    if (!left || left->id != f.id)
      report.add("identity-law",
                 "identity law (" + c.identity.at(f.tgt) + ", " + f.id + ")",
                 loc);
    const Morphism *right = c.compose(f.id, c.identity.at(f.src));
    if (!right || right->id != f.id)
      report.add("identity-law",
                 "identity law (" + f.id + ", " + c.identity.at(f.src) + ")",
                 loc);
  }

  // associativity over all composable triples
  for (const auto &h : c.morphisms)
    for (const auto &g : c.morphisms) {
      if (g.tgt != h.src)
        continue;
      for (const auto &f : c.morphisms) {
        if (f.tgt != g.src)
          continue;
        const Morphism *gf = c.compose(g.id, f.id);
        const Morphism *hg = c.compose(h.id, g.id);
        if (!gf || !hg)
          continue; // totality already reported
        const Morphism *a = c.compose(h.id, gf->id);
        const Morphism *b = c.compose(hg->id, f.id);
        if (a && b && a->id != b->id)
          report.add("associativity",
                     "associativity (" + h.id + ", " + g.id + ", " + f.id +
                         "): " + a->id + " != " + b->id,
                     loc);
      }
    }

  return report;
}

// --- validate_functor -------------------------------------------------------

Report validate_functor(const FinFunctor &f) {
  if (!f.source || !f.target)
    fail(ErrorCode::malformed_input, "functor " + f.name + ": missing category");
  const FinCategory &src = *f.source;
  const FinCategory &tgt = *f.target;
  Report report;
  const std::string loc = "functor " + f.name;

  for (const auto &x : src.objects) {
    auto it = f.object_map.find(x);
    if (it == f.object_map.end())
      fail(ErrorCode::malformed_input,
           loc + ": object_map undefined at " + x);
    if (!tgt.has_object(it->second))
      fail(ErrorCode::malformed_input,
           loc + ": object_map hits undeclared object " + it->second);
  }
  for (const auto &m : src.morphisms) {
    auto it = f.morphism_map.find(m.id);
    if (it == f.morphism_map.end())
      fail(ErrorCode::malformed_input,
           loc + ": morphism_map undefined at " + m.id);
    if (!tgt.morphism(it->second))
      fail(ErrorCode::malformed_input,
           loc + ": morphism_map hits undeclared morphism " + it->second);
  }

  // sources/targets
  for (const auto &m : src.morphisms) {
    const Morphism *fm = tgt.morphism(f.on_morphism(m.id));
    if (fm->src != f.on_object(m.src) || fm->tgt != f.on_object(m.tgt))
      report.add("functor-typing",
                 "image of " + m.id + " is " + fm->id +
                     ", endpoints disagree with mapped objects",
                 loc);
  }
  // identities
  for (const auto &x : src.objects) {
    const std::string &img = f.on_morphism(src.identity.at(x));
    const std::string &expected = tgt.identity.at(f.on_object(x));
    if (img != expected)
      report.add("functor-identity",
                 "identity of " + x + " maps to " + img + ", expected " +
                     expected,
                 loc);
  }
  // composition
  for (const auto &[pair, h] : src.compose_table) {
    const Morphism *img = tgt.compose(f.on_morphism(pair.first),
                                      f.on_morphism(pair.second));
    if (!img || img->id != f.on_morphism(h))
      report.add("functor-compose",
                 "F(" + pair.first + " ∘ " + pair.second + ") != F(" +
                     pair.first + ") ∘ F(" + pair.second + ")",
                 loc);
  }
  return report;
}

// --- validate_nat_trans -----------------------------------------------------

Report validate_nat_trans(const FinNatTrans &a) {
  const FinFunctor &F = a.source;
  const FinFunctor &G = a.target;
  if (!F.source || !G.source || !(*F.source == *G.source) ||
      !(*F.target == *G.target))
    fail(ErrorCode::malformed_input,
         "nat-trans " + a.name + ": functors are not parallel");
  const FinCategory &src = *F.source;
  const FinCategory &tgt = *F.target;
  Report report;
  const std::string loc = "nat-trans " + a.name;

  for (const auto &x : src.objects) {
    auto it = a.components.find(x);
    if (it == a.components.end())
      fail(ErrorCode::malformed_input, loc + ": missing component at " + x);
    const Morphism *comp = tgt.morphism(it->second);
    if (!comp)
      fail(ErrorCode::malformed_input,
           loc + ": component at " + x + " is undeclared morphism " +
               it->second);
    if (comp->src != F.on_object(x) || comp->tgt != G.on_object(x))
      report.add("component-typing",
                 "component at " + x + " is " + comp->id + ": " + comp->src +
                     " -> " + comp->tgt + ", expected F(" + x + ") -> G(" + x +
                     ")",
                 loc);
  }
  if (!report.pass())
    return report;

  // naturality squares: G(f) ∘ a_x = a_y ∘ F(f) for every f: x -> y
  for (const auto &m : src.morphisms) {
    const Morphism *left = tgt.compose(G.on_morphism(m.id), a.at(m.src));
    const Morphism *right = tgt.compose(a.at(m.tgt), F.on_morphism(m.id));
    if (!left || !right || left->id != right->id)
      report.add("naturality",
                 "naturality square fails at " + m.id + " (" + m.src + " -> " +
                     m.tgt + ")",
                 loc);
  }
  return report;
}

// --- thin_from_preorder -----------------------------------------------------

namespace {
std::string le_id(const std::string &x, const std::string &y) {
  return "le:" + x + ":" + y;
}
} // namespace

FinCategory thin_from_preorder(const Preorder &p, const std::string &name) {
  std::set<std::string> elems(p.elements.begin(), p.elements.end());
  for (const auto &[x, y] : p.leq)
    if (!elems.count(x) || !elems.count(y))
      fail(ErrorCode::malformed_input,
           "preorder: relation references undeclared element");
  for (const auto &x : p.elements)
    if (!p.holds(x, x))
      fail(ErrorCode::precondition, "preorder is not reflexive at " + x);
  for (const auto &[x, y] : p.leq)
    for (const auto &[y2, z] : p.leq)
      if (y == y2 && !p.holds(x, z))
        fail(ErrorCode::precondition, "preorder is not transitive: " + x +
                                          " <= " + y + " <= " + z);

  FinCategory c;
  c.name = name;
  c.objects = p.elements;
  for (const auto &x : p.elements)
    for (const auto &y : p.elements)
      if (p.holds(x, y))
        c.morphisms.push_back({le_id(x, y), x, y, 0});
  for (const auto &x : p.elements)
    c.identity[x] = le_id(x, x);
  for (const auto &g : c.morphisms)
    for (const auto &f : c.morphisms)
      if (f.tgt == g.src)
        c.compose_table[{g.id, f.id}] = le_id(f.src, g.tgt);
  return c;
}

// --- product_category -------------------------------------------------------

namespace {

std::string tuple_id(const std::vector<std::string> &parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i)
      out += "|";
    out += parts[i];
  }
  return out + ")";
}

// all index tuples over the given sizes, lexicographic
std::vector<std::vector<std::size_t>>
index_tuples(const std::vector<std::size_t> &sizes) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (std::size_t s : sizes) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto &t : out)
      for (std::size_t i = 0; i < s; ++i) {
        auto u = t;
        u.push_back(i);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

} // namespace

FinCategory product_category(const std::vector<FinCategory> &factors,
                             const std::string &name) {
  if (factors.empty())
    return terminal_category(name);

  FinCategory c;
  c.name = name;

  std::vector<std::size_t> osizes, msizes;
  for (const auto &f : factors) {
    osizes.push_back(f.objects.size());
    msizes.push_back(f.morphisms.size());
  }

  for (const auto &t : index_tuples(osizes)) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < t.size(); ++i)
      parts.push_back(factors[i].objects[t[i]]);
    c.objects.push_back(tuple_id(parts));
  }

  for (const auto &t : index_tuples(msizes)) {
    std::vector<std::string> ids, srcs, tgts;
    unsigned grade = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Morphism &m = factors[i].morphisms[t[i]];
      ids.push_back(m.id);
      srcs.push_back(m.src);
      tgts.push_back(m.tgt);
      grade = std::max(grade, m.grade);
    }
    c.morphisms.push_back({tuple_id(ids), tuple_id(srcs), tuple_id(tgts), grade});
  }

  for (const auto &t : index_tuples(osizes)) {
    std::vector<std::string> objs, ids;
    for (std::size_t i = 0; i < t.size(); ++i) {
      const std::string &x = factors[i].objects[t[i]];
      objs.push_back(x);
      ids.push_back(factors[i].identity.at(x));
    }
    c.identity[tuple_id(objs)] = tuple_id(ids);
  }

  for (const auto &tg : index_tuples(msizes)) {
    for (const auto &tf : index_tuples(msizes)) {
      std::vector<std::string> gs, fs, hs;
      bool composable = true;
      for (std::size_t i = 0; i < factors.size() && composable; ++i) {
        const Morphism &g = factors[i].morphisms[tg[i]];
        const Morphism &f = factors[i].morphisms[tf[i]];
        if (f.tgt != g.src) {
          composable = false;
          break;
        }
        gs.push_back(g.id);
        fs.push_back(f.id);
        hs.push_back(factors[i].compose_table.at({g.id, f.id}));
      }
      if (composable)
        c.compose_table[{tuple_id(gs), tuple_id(fs)}] = tuple_id(hs);
    }
  }
  return c;
}

FinFunctor product_projection(const CategoryPtr &product, std::size_t index,
                              const CategoryPtr &factor) {
  // parse component `index` out of "(a|b|...)" ids produced above
  auto component = [index](const std::string &id) -> std::string {
    if (id.size() < 2 || id.front() != '(' || id.back() != ')')
      fail(ErrorCode::malformed_input, "not a product id: " + id);
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 1; i + 1 < id.size(); ++i) {
      char ch = id[i];
      if (ch == '(')
        ++depth;
      if (ch == ')')
        --depth;
      if (ch == '|' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    if (index >= parts.size())
      fail(ErrorCode::malformed_input, "projection index out of range");
    return parts[index];
  };

  FinFunctor pr;
  pr.name = "pi" + std::to_string(index);
  pr.source = product;
  pr.target = factor;
  for (const auto &x : product->objects)
    pr.object_map[x] = component(x);
  for (const auto &m : product->morphisms)
    pr.morphism_map[m.id] = component(m.id);
  return pr;
}

// --- grade_extend / grade_truncate ------------------------------------------

namespace {

struct Edge {
  std::string id;
  std::string src;
  std::string tgt;
  bool generator;
};

} // namespace

FinCategory grade_extend(
    const FinCategory &c,
    const std::vector<std::pair<std::string, std::string>> &generators,
    const GradeExtendOptions &opts) {
  if (generators.empty())
    return c;
  for (const auto &[s, t] : generators)
    if (!c.has_object(s) || !c.has_object(t))
      fail(ErrorCode::malformed_input,
           "grade_extend: generator endpoints undeclared: " + s + " -> " + t);

  const unsigned new_grade = c.max_grade() + 1;

  std::vector<Edge> edges;
  for (const auto &m : c.morphisms)
    if (m.id != c.identity.at(m.src)) // identities are dropped in paths
      edges.push_back({m.id, m.src, m.tgt, false});
  for (std::size_t i = 0; i < generators.size(); ++i)
    edges.push_back({"gen" + std::to_string(i) + ":" + generators[i].first +
                         ":" + generators[i].second,
                     generators[i].first, generators[i].second, true});

  // Normal form of a formal composite: nonempty composable sequence of
  // non-identity steps with no two consecutive old morphisms (those merge
  // through the old compose table). Every normal form containing at least
  // one generator becomes a new morphism; no relations hold between
  // generators, so distinct normal forms are distinct morphisms.
  struct Path {
    std::vector<std::string> steps; // applied first-to-last
    std::vector<bool> gen;
    std::string src, tgt;
  };

  auto path_key = [](const Path &p) {
    std::string k; // composite written outermost-first: last∘...∘first
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
      if (!k.empty())
        k += "*";
      k += *it;
    }
    return k;
  };

  std::map<std::string, Path> paths;
  std::deque<Path> queue;

  // Enumerate all normal forms by extending on the right; seeding with every
  // single edge covers the (at most one-step) old prefix before the first
  // generator.
  std::set<std::string> seen;
  for (const auto &e : edges)
    queue.push_back({{e.id}, {e.generator}, e.src, e.tgt});
  while (!queue.empty()) {
    Path p = queue.front();
    queue.pop_front();
    const std::string key = path_key(p);
    if (!seen.insert(key).second)
      continue;
    bool has_gen = false;
    for (bool b : p.gen)
      has_gen = has_gen || b;
    if (has_gen && !paths.count(key))
      paths[key] = p;
    for (const auto &e : edges) {
      if (p.tgt != e.src)
        continue;
      if (!e.generator && !p.gen.back())
        continue; // old-old adjacency is not a normal form
      Path q = p;
      q.steps.push_back(e.id);
      q.gen.push_back(e.generator);
      q.tgt = e.tgt;
      if (q.steps.size() > opts.max_path_length)
        fail(ErrorCode::capacity,
             "grade_extend: formal path exceeds length bound " +
                 std::to_string(opts.max_path_length) +
                 " (generator graph has a cycle?)");
      queue.push_back(std::move(q));
    }
  }

  FinCategory out = c;
  out.name = c.name + "+gen";
  for (const auto &[key, p] : paths)
    out.morphisms.push_back({key, p.src, p.tgt, new_grade});

  // composition with and among paths: concatenate, renormalize, look up
  auto normalize = [&](std::vector<std::string> steps,
                       std::vector<bool> gen) -> std::pair<std::string, bool> {
    // merge adjacent old morphisms, drop identities
    bool change = true;
    while (change) {
      change = false;
      for (std::size_t i = 0; i < steps.size(); ++i) {
        const Morphism *m = c.morphism(steps[i]);
        if (m && !gen[i] && steps[i] == c.identity.at(m->src)) {
          steps.erase(steps.begin() + static_cast<long>(i));
          gen.erase(gen.begin() + static_cast<long>(i));
          change = true;
          break;
        }
        if (i + 1 < steps.size() && !gen[i] && !gen[i + 1]) {
          auto it = c.compose_table.find({steps[i + 1], steps[i]});
          if (it == c.compose_table.end())
            fail(ErrorCode::internal, "grade_extend: old table not total");
          steps[i] = it->second;
          steps.erase(steps.begin() + static_cast<long>(i) + 1);
          gen.erase(gen.begin() + static_cast<long>(i) + 1);
          change = true;
          break;
        }
      }
    }
    bool has_gen = false;
    for (bool b : gen)
      has_gen = has_gen || b;
    std::string key;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      if (!key.empty())
        key += "*";
      key += *it;
    }
    return {key, has_gen};
  };

  auto steps_of = [&](const std::string &id) -> std::pair<std::vector<std::string>, std::vector<bool>> {
    auto it = paths.find(id);
    if (it != paths.end())
      return {it->second.steps, it->second.gen};
    const Morphism *m = c.morphism(id);
    if (m->id == c.identity.at(m->src))
      return {{}, {}};
    return {{id}, {false}};
  };

  auto lookup = [&](const std::string &key, const std::string &src,
                    const std::string &tgt) -> std::string {
    if (key.empty())
      return c.identity.at(src);
    if (paths.count(key))
      return key;
    if (c.morphism(key))
      return key;
    (void)tgt;
    fail(ErrorCode::internal, "grade_extend: composite " + key +
                                  " missing from path closure");
  };

  for (const auto &g : out.morphisms)
    for (const auto &f : out.morphisms) {
      if (f.tgt != g.src)
        continue;
      if (out.compose_table.count({g.id, f.id}))
        continue;
      auto [fs, fg] = steps_of(f.id);
      auto [gs, gg] = steps_of(g.id);
      std::vector<std::string> steps = fs;
      steps.insert(steps.end(), gs.begin(), gs.end());
      std::vector<bool> gen = fg;
      gen.insert(gen.end(), gg.begin(), gg.end());
      auto [key, has_gen] = normalize(std::move(steps), std::move(gen));
      (void)has_gen;
      out.compose_table[{g.id, f.id}] = lookup(key, f.src, g.tgt);
    }
  return out;
}

FinCategory grade_truncate(const FinCategory &c, unsigned k) {
  FinCategory out;
  out.name = c.name;
  out.objects = c.objects;
  std::set<std::string> kept;
  for (const auto &m : c.morphisms)
    if (m.grade <= k) {
      out.morphisms.push_back(m);
      kept.insert(m.id);
    }
  out.identity = c.identity; // identities have grade 0
  for (const auto &[pair, h] : c.compose_table)
    if (kept.count(pair.first) && kept.count(pair.second) && kept.count(h))
      out.compose_table[pair] = h;
  return out;
}

// --- helpers ----------------------------------------------------------------

FinCategory terminal_category(const std::string &name) {
  FinCategory c;
  c.name = name;
  c.objects = {"*"};
  c.morphisms = {{"id:*", "*", "*", 0}};
  c.identity["*"] = "id:*";
  c.compose_table[{"id:*", "id:*"}] = "id:*";
  return c;
}

FinFunctor identity_functor(const CategoryPtr &c) {
  FinFunctor f;
  f.name = "Id(" + c->name + ")";
  f.source = c;
  f.target = c;
  for (const auto &x : c->objects)
    f.object_map[x] = x;
  for (const auto &m : c->morphisms)
    f.morphism_map[m.id] = m.id;
  return f;
}

FinFunctor compose_functors(const FinFunctor &outer, const FinFunctor &inner,
                            const std::string &name) {
  if (!(*inner.target == *outer.source))
    fail(ErrorCode::malformed_input,
         "compose_functors: " + outer.name + " ∘ " + inner.name +
             " is not composable");
  FinFunctor f;
  f.name = name;
  f.source = inner.source;
  f.target = outer.target;
  for (const auto &[x, y] : inner.object_map)
    f.object_map[x] = outer.on_object(y);
  for (const auto &[m, n] : inner.morphism_map)
    f.morphism_map[m] = outer.on_morphism(n);
  return f;
}

FinNatTrans identity_nat_trans(const FinFunctor &f) {
  FinNatTrans a;
  a.name = "id(" + f.name + ")";
  a.source = f;
  a.target = f;
  for (const auto &x : f.source->objects)
    a.components[x] = f.target->identity.at(f.on_object(x));
  return a;
}

} // namespace hsg::cat
