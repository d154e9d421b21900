#include "hsg/adjunction.hpp"

#include <algorithm>
#include <set>

#include "hsg/error.hpp"

namespace hsg::cat {

namespace {

std::string map_id(const std::string &kind, const std::string &src,
                   const std::string &tgt, const std::vector<int> &images) {
  std::string id = kind + ":" + src + ">" + tgt + ":";
  for (int i : images)
    id += static_cast<char>('0' + i);
  return id;
}

// all functions j -> k as image vectors, lexicographic
std::vector<std::vector<int>> all_functions(int j, int k) {
  std::vector<std::vector<int>> out{{}};
  for (int step = 0; step < j; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto &f : out)
      for (int i = 0; i < k; ++i) {
        auto g = f;
        g.push_back(i);
        next.push_back(std::move(g));
      }
    out = std::move(next);
  }
  if (j > 0 && k == 0)
    out.clear(); // no maps from a nonempty set to the empty set
  return out;
}

} // namespace

FinCategory finset_category(int n, const std::string &name) {
  if (n < 0 || n > 9)
    fail(ErrorCode::capacity, "finset_category: bound out of range");
  FinCategory c;
  c.name = name;

  struct Fn {
    int src, tgt;
    std::vector<int> images;
  };
  std::vector<Fn> fns;
  for (int j = 0; j <= n; ++j) {
    c.objects.push_back(std::to_string(j));
    for (int k = 0; k <= n; ++k)
      for (auto &f : all_functions(j, k))
        fns.push_back({j, k, f});
  }
  for (const auto &f : fns)
    c.morphisms.push_back({map_id("map", std::to_string(f.src),
                                  std::to_string(f.tgt), f.images),
                           std::to_string(f.src), std::to_string(f.tgt), 0});
  for (int j = 0; j <= n; ++j) {
    std::vector<int> idimg(static_cast<std::size_t>(j));
    for (int i = 0; i < j; ++i)
      idimg[static_cast<std::size_t>(i)] = i;
    c.identity[std::to_string(j)] =
        map_id("map", std::to_string(j), std::to_string(j), idimg);
  }
  for (const auto &g : fns)
    for (const auto &f : fns) {
      if (f.tgt != g.src)
        continue;
      std::vector<int> comp(f.images.size());
      for (std::size_t i = 0; i < f.images.size(); ++i)
        comp[i] = g.images[static_cast<std::size_t>(f.images[i])];
      c.compose_table[{map_id("map", std::to_string(g.src),
                              std::to_string(g.tgt), g.images),
                       map_id("map", std::to_string(f.src),
                              std::to_string(f.tgt), f.images)}] =
          map_id("map", std::to_string(f.src), std::to_string(g.tgt), comp);
    }
  return c;
}

// --- verify_adjunction ------------------------------------------------------

namespace {

bool same_maps(const FinFunctor &a, const FinFunctor &b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

void check_caps(const FinCategory &c, const VerifyOptions &opts) {
  if (c.objects.size() > opts.max_objects ||
      c.morphisms.size() > opts.max_morphisms)
    fail(ErrorCode::capacity,
         "category " + c.name + " exceeds enumeration cap (" +
             std::to_string(c.objects.size()) + " objects, " +
             std::to_string(c.morphisms.size()) + " morphisms)");
}

} // namespace

Report verify_adjunction(const Adjunction &adj, const VerifyOptions &opts) {
  const FinFunctor &F = adj.left;
  const FinFunctor &G = adj.right;
  if (!F.source || !F.target || !G.source || !G.target)
    fail(ErrorCode::malformed_input, "adjunction " + adj.name + ": missing category");
  if (!(*F.source == *G.target) || !(*F.target == *G.source))
    fail(ErrorCode::malformed_input,
         "adjunction " + adj.name + ": F and G do not run in opposite directions");
  const FinCategory &C = *F.source;
  const FinCategory &D = *F.target;
  check_caps(C, opts);
  check_caps(D, opts);

  Report report;
  const std::string loc = "adjunction " + adj.name;
  report.merge(validate_functor(F));
  report.merge(validate_functor(G));

  // unit must run Id_C ⇒ G∘F, counit F∘G ⇒ Id_D
  if (!same_maps(adj.unit.source, identity_functor(F.source)) ||
      !same_maps(adj.unit.target, compose_functors(G, F, "GF")))
    report.add("unit-shape", "unit is not of shape Id ⇒ G∘F", loc);
  if (!same_maps(adj.counit.source, compose_functors(F, G, "FG")) ||
      !same_maps(adj.counit.target, identity_functor(G.source)))
    report.add("counit-shape", "counit is not of shape F∘G ⇒ Id", loc);
  report.merge(validate_nat_trans(adj.unit));
  report.merge(validate_nat_trans(adj.counit));
  if (!report.pass())
    return report; // typing is broken; law checks would throw

  // triangle identities
  for (const auto &x : C.objects) {
    const std::string fx = F.on_object(x);
    const Morphism *t =
        D.compose(adj.counit.at(fx), F.on_morphism(adj.unit.at(x)));
    if (!t || t->id != D.identity.at(fx))
      report.add("triangle-left",
                 "(εF)∘(Fη) != id at object " + x + " (component " +
                     adj.unit.at(x) + ")",
                 loc);
  }
  for (const auto &a : D.objects) {
    const std::string ga = G.on_object(a);
    const Morphism *t =
        C.compose(G.on_morphism(adj.counit.at(a)), adj.unit.at(ga));
    if (!t || t->id != C.identity.at(ga))
      report.add("triangle-right",
                 "(Gε)∘(ηG) != id at object " + a + " (component " +
                     adj.counit.at(a) + ")",
                 loc);
  }

  // hom-set bijection via the transposition φ(f) = G(f)∘η_x
  for (const auto &x : C.objects)
    for (const auto &a : D.objects) {
      const auto hom_d = D.hom(F.on_object(x), a);
      const auto hom_c = C.hom(x, G.on_object(a));
      if (hom_d.size() != hom_c.size()) {
        report.add("hom-count",
                   "|Hom(F" + x + ", " + a + ")| = " +
                       std::to_string(hom_d.size()) + " but |Hom(" + x +
                       ", G" + a + ")| = " + std::to_string(hom_c.size()),
                   loc);
        continue;
      }
      std::set<std::string> image;
      for (const auto &f : hom_d) {
        const Morphism *phi = C.compose(G.on_morphism(f), adj.unit.at(x));
        if (!phi) {
          report.add("transpose-typing", "φ(" + f + ") undefined", loc);
          continue;
        }
        if (!image.insert(phi->id).second)
          report.add("transpose-injective",
                     "φ is not injective on Hom(F" + x + ", " + a + ")", loc);
      }
      for (const auto &g : hom_c)
        if (!image.count(g))
          report.add("transpose-surjective",
                     "φ misses " + g + " in Hom(" + x + ", G" + a + ")", loc);
    }

  // naturality of φ in both variables:
  // φ(k∘f∘F(h)) = G(k)∘φ(f)∘h for h: x'→x in C, k: a→a' in D
  for (const auto &x : C.objects)
    for (const auto &a : D.objects)
      for (const auto &f : D.hom(F.on_object(x), a))
        for (const auto &h : C.morphisms) {
          if (h.tgt != x)
            continue;
          const Morphism *f_fh = D.compose(f, F.on_morphism(h.id));
          for (const auto &k : D.morphisms) {
            if (k.src != a)
              continue;
            const Morphism *kf_fh = D.compose(k.id, f_fh->id);
            const Morphism *lhs =
                C.compose(G.on_morphism(kf_fh->id), adj.unit.at(h.src));
            const Morphism *phi_f = C.compose(G.on_morphism(f), adj.unit.at(x));
            const Morphism *phi_h = C.compose(phi_f->id, h.id);
            const Morphism *rhs = C.compose(G.on_morphism(k.id), phi_h->id);
            if (!lhs || !rhs || lhs->id != rhs->id) {
              report.add("transpose-naturality",
                         "φ naturality fails at (f=" + f + ", h=" + h.id +
                             ", k=" + k.id + ")",
                         loc);
            }
          }
        }

  return report;
}

// --- monad ------------------------------------------------------------------

Monad monad_of(const Adjunction &adj) {
  const FinFunctor &F = adj.left;
  const FinFunctor &G = adj.right;
  Monad m;
  m.name = "T(" + adj.name + ")";
  m.endofunctor = compose_functors(G, F, m.name);

  m.unit = adj.unit;
  m.unit.name = "eta(" + adj.name + ")";
  m.unit.target = m.endofunctor;

  FinNatTrans mu;
  mu.name = "mu(" + adj.name + ")";
  mu.source = compose_functors(m.endofunctor, m.endofunctor,
                               m.name + "∘" + m.name);
  mu.target = m.endofunctor;
  for (const auto &x : F.source->objects)
    mu.components[x] = G.on_morphism(adj.counit.at(F.on_object(x)));
  m.multiplication = mu;
  return m;
}

Report validate_monad(const Monad &m) {
  const FinFunctor &T = m.endofunctor;
  if (!T.source || !(*T.source == *T.target))
    fail(ErrorCode::malformed_input, "monad " + m.name + ": T is not an endofunctor");
  const FinCategory &C = *T.source;
  Report report;
  const std::string loc = "monad " + m.name;
  report.merge(validate_functor(T));
  report.merge(validate_nat_trans(m.unit));
  report.merge(validate_nat_trans(m.multiplication));
  if (!report.pass())
    return report;

  for (const auto &x : C.objects) {
    const std::string tx = T.on_object(x);
    const std::string &mu_x = m.multiplication.at(x);
    // μ ∘ Tη = id_T
    const Morphism *a = C.compose(mu_x, T.on_morphism(m.unit.at(x)));
    if (!a || a->id != C.identity.at(tx))
      report.add("monad-unit-left", "μ∘Tη != id at " + x, loc);
    // μ ∘ ηT = id_T
    const Morphism *b = C.compose(mu_x, m.unit.at(tx));
    if (!b || b->id != C.identity.at(tx))
      report.add("monad-unit-right", "μ∘ηT != id at " + x, loc);
    // μ ∘ Tμ = μ ∘ μT
    const Morphism *l = C.compose(mu_x, T.on_morphism(m.multiplication.at(x)));
    const Morphism *r = C.compose(mu_x, m.multiplication.at(tx));
    if (!l || !r || l->id != r->id)
      report.add("monad-assoc", "μ∘Tμ != μ∘μT at " + x, loc);
  }
  return report;
}

IdempotencyResult check_idempotent(const Monad &m) {
  const FinCategory &C = *m.endofunctor.source;
  for (const auto &x : C.objects)
    if (!C.is_iso(m.multiplication.at(x)))
      return {false, x};
  return {true, ""};
}

// --- definability builtin ---------------------------------------------------

Adjunction definability_adjunction(const grid::Grid &g) {
  // T_δ: tokens preordered by δ(x) ≤ δ(y), with representatives adjoined
  // for empty fibers
  std::vector<std::string> elems = g.tokens;
  std::map<std::string, bool> delta = g.delta;
  std::string bot_rep, top_rep;
  for (const auto &t : g.tokens) {
    if (!g.delta.at(t) && bot_rep.empty())
      bot_rep = t;
    if (g.delta.at(t) && top_rep.empty())
      top_rep = t;
  }
  if (bot_rep.empty()) {
    bot_rep = "⊥_δ";
    elems.push_back(bot_rep);
    delta[bot_rep] = false;
  }
  if (top_rep.empty()) {
    top_rep = "⊤_δ";
    elems.push_back(top_rep);
    delta[top_rep] = true;
  }

  Preorder p;
  p.elements = elems;
  for (const auto &x : elems)
    for (const auto &y : elems)
      if (!delta.at(x) || delta.at(y)) // δ(x) ≤ δ(y) with ⊥ < ⊤
        p.leq.emplace_back(x, y);
  auto t_delta = std::make_shared<FinCategory>(thin_from_preorder(p, "T_δ"));

  Preorder c0p;
  c0p.elements = {"Undef", "Define"};
  c0p.leq = {{"Undef", "Undef"}, {"Undef", "Define"}, {"Define", "Define"}};
  auto c0 = std::make_shared<FinCategory>(thin_from_preorder(c0p, "C0"));

  auto cls = [&](const std::string &x) {
    return delta.at(x) ? std::string("Define") : std::string("Undef");
  };
  auto rep = [&](const std::string &a) {
    return a == "Undef" ? bot_rep : top_rep;
  };

  FinFunctor sigma;
  sigma.name = "Σ_def";
  sigma.source = t_delta;
  sigma.target = c0;
  for (const auto &x : elems)
    sigma.object_map[x] = cls(x);
  for (const auto &m : t_delta->morphisms)
    sigma.morphism_map[m.id] = "le:" + cls(m.src) + ":" + cls(m.tgt);

  FinFunctor iota;
  iota.name = "ι0";
  iota.source = c0;
  iota.target = t_delta;
  for (const auto &a : c0->objects)
    iota.object_map[a] = rep(a);
  for (const auto &m : c0->morphisms)
    iota.morphism_map[m.id] = "le:" + rep(m.src) + ":" + rep(m.tgt);

  Adjunction adj;
  adj.name = "definability";
  adj.left = sigma;
  adj.right = iota;

  adj.unit.name = "eta";
  adj.unit.source = identity_functor(t_delta);
  adj.unit.target = compose_functors(iota, sigma, "ι0∘Σ_def");
  for (const auto &x : elems)
    adj.unit.components[x] = "le:" + x + ":" + rep(cls(x));

  adj.counit.name = "epsilon";
  adj.counit.source = compose_functors(sigma, iota, "Σ_def∘ι0");
  adj.counit.target = identity_functor(c0);
  for (const auto &a : c0->objects)
    adj.counit.components[a] = "le:" + a + ":" + a; // Σ_def(rep(a)) = a
  return adj;
}

// --- emptiness builtin ------------------------------------------------------

Adjunction emptiness_adjunction(int n) {
  if (n < 1 || n > 3)
    fail(ErrorCode::capacity, "emptiness_adjunction: bound must be 1..3");
  auto c2 = std::make_shared<FinCategory>(finset_category(n, "FinSet"));

  Preorder c1p;
  c1p.elements = {"Empty", "NonEmpty"};
  c1p.leq = {{"Empty", "Empty"}, {"Empty", "NonEmpty"}, {"NonEmpty", "NonEmpty"}};
  auto c1 = std::make_shared<FinCategory>(thin_from_preorder(c1p, "C1"));

  auto cls = [](const std::string &obj) {
    return obj == "0" ? std::string("Empty") : std::string("NonEmpty");
  };

  FinFunctor sigma; // Σ_emp: FinSet -> C1
  sigma.name = "Σ_emp";
  sigma.source = c2;
  sigma.target = c1;
  for (const auto &x : c2->objects)
    sigma.object_map[x] = cls(x);
  for (const auto &m : c2->morphisms)
    sigma.morphism_map[m.id] = "le:" + cls(m.src) + ":" + cls(m.tgt);

  FinFunctor iota; // ι1: C1 -> FinSet, Empty ↦ ∅, NonEmpty ↦ 1
  iota.name = "ι1";
  iota.source = c1;
  iota.target = c2;
  iota.object_map["Empty"] = "0";
  iota.object_map["NonEmpty"] = "1";
  iota.morphism_map["le:Empty:Empty"] = map_id("map", "0", "0", {});
  iota.morphism_map["le:Empty:NonEmpty"] = map_id("map", "0", "1", {});
  iota.morphism_map["le:NonEmpty:NonEmpty"] = map_id("map", "1", "1", {0});

  Adjunction adj;
  adj.name = "emptiness";
  adj.left = sigma;
  adj.right = iota;

  adj.unit.name = "eta";
  adj.unit.source = identity_functor(c2);
  adj.unit.target = compose_functors(iota, sigma, "ι1∘Σ_emp");
  for (const auto &x : c2->objects) {
    int size = std::stoi(x);
    std::vector<int> img(static_cast<std::size_t>(size), 0); // unique A -> 1
    adj.unit.components[x] =
        map_id("map", x, size == 0 ? "0" : "1", size == 0 ? std::vector<int>{} : img);
  }

  adj.counit.name = "epsilon";
  adj.counit.source = compose_functors(sigma, iota, "Σ_emp∘ι1");
  adj.counit.target = identity_functor(c1);
  adj.counit.components["Empty"] = "le:Empty:Empty";
  adj.counit.components["NonEmpty"] = "le:NonEmpty:NonEmpty";
  return adj;
}

// --- discrete-order builtin -------------------------------------------------

namespace {

struct Poset {
  std::string id;
  int size;
  bool chain; // chain on 0..size-1; otherwise discrete
  bool leq(int a, int b) const { return chain ? a <= b : a == b; }
};

} // namespace

Adjunction discrete_order_adjunction(int n) {
  if (n < 2 || n > 3) // the chain witness C2 needs its underlying set present
    fail(ErrorCode::capacity, "discrete_order_adjunction: bound must be 2..3");
  auto set_cat = std::make_shared<FinCategory>(finset_category(n, "FinSet"));

  std::vector<Poset> posets;
  for (int j = 0; j <= n; ++j)
    posets.push_back({"D" + std::to_string(j), j, false});
  posets.push_back({"C2", 2, true}); // one non-discrete witness

  FinCategory ord;
  ord.name = "FinOrd";
  struct Mono {
    std::string src, tgt;
    std::vector<int> images;
  };
  std::vector<Mono> monos;
  for (const auto &p : posets) {
    ord.objects.push_back(p.id);
    for (const auto &q : posets)
      for (auto &f : all_functions(p.size, q.size)) {
        bool monotone = true;
        for (int a = 0; a < p.size && monotone; ++a)
          for (int b = 0; b < p.size && monotone; ++b)
            if (p.leq(a, b) &&
                !q.leq(f[static_cast<std::size_t>(a)],
                       f[static_cast<std::size_t>(b)]))
              monotone = false;
        if (monotone)
          monos.push_back({p.id, q.id, f});
      }
  }
  for (const auto &f : monos)
    ord.morphisms.push_back(
        {map_id("mono", f.src, f.tgt, f.images), f.src, f.tgt, 0});
  for (const auto &p : posets) {
    std::vector<int> idimg(static_cast<std::size_t>(p.size));
    for (int i = 0; i < p.size; ++i)
      idimg[static_cast<std::size_t>(i)] = i;
    ord.identity[p.id] = map_id("mono", p.id, p.id, idimg);
  }
  for (const auto &g : monos)
    for (const auto &f : monos) {
      if (f.tgt != g.src)
        continue;
      std::vector<int> comp(f.images.size());
      for (std::size_t i = 0; i < f.images.size(); ++i)
        comp[i] = g.images[static_cast<std::size_t>(f.images[i])];
      ord.compose_table[{map_id("mono", g.src, g.tgt, g.images),
                         map_id("mono", f.src, f.tgt, f.images)}] =
          map_id("mono", f.src, g.tgt, comp);
    }
  auto ord_cat = std::make_shared<FinCategory>(std::move(ord));

  auto underlying = [&](const std::string &poset_id) {
    for (const auto &p : posets)
      if (p.id == poset_id)
        return std::to_string(p.size);
    fail(ErrorCode::internal, "unknown poset " + poset_id);
  };

  FinFunctor delta; // Δ: FinSet -> FinOrd, X ↦ (X, =)
  delta.name = "Δ";
  delta.source = set_cat;
  delta.target = ord_cat;
  for (const auto &x : set_cat->objects)
    delta.object_map[x] = "D" + x;
  for (const auto &m : set_cat->morphisms) {
    // reuse the image digits: map:j>k:img ↦ mono:Dj>Dk:img
    std::string img = m.id.substr(m.id.rfind(':') + 1);
    delta.morphism_map[m.id] = "mono:D" + m.src + ">D" + m.tgt + ":" + img;
  }

  FinFunctor upos; // U_pos: FinOrd -> FinSet
  upos.name = "U_pos";
  upos.source = ord_cat;
  upos.target = set_cat;
  for (const auto &p : posets)
    upos.object_map[p.id] = std::to_string(p.size);
  for (const auto &m : ord_cat->morphisms) {
    std::string img = m.id.substr(m.id.rfind(':') + 1);
    upos.morphism_map[m.id] =
        "map:" + underlying(m.src) + ">" + underlying(m.tgt) + ":" + img;
  }

  Adjunction adj;
  adj.name = "discrete_order";
  adj.left = delta;
  adj.right = upos;

  adj.unit.name = "eta"; // X -> U_pos(ΔX) is the identity function
  adj.unit.source = identity_functor(set_cat);
  adj.unit.target = compose_functors(upos, delta, "U∘Δ");
  for (const auto &x : set_cat->objects)
    adj.unit.components[x] = set_cat->identity.at(x);

  adj.counit.name = "epsilon"; // Δ(U_pos P) -> P, identity on elements
  adj.counit.source = compose_functors(delta, upos, "Δ∘U");
  adj.counit.target = identity_functor(ord_cat);
  for (const auto &p : posets) {
    std::vector<int> idimg(static_cast<std::size_t>(p.size));
    for (int i = 0; i < p.size; ++i)
      idimg[static_cast<std::size_t>(i)] = i;
    adj.counit.components[p.id] =
        map_id("mono", "D" + std::to_string(p.size), p.id, idimg);
  }
  return adj;
}

Adjunction builtin_adjunction(BuiltinAdjunction which,
                              const BuiltinParams &params) {
  switch (which) {
  case BuiltinAdjunction::definability:
    if (!params.grid)
      fail(ErrorCode::malformed_input, "definability builtin needs a grid");
    return definability_adjunction(*params.grid);
  case BuiltinAdjunction::emptiness:
    return emptiness_adjunction(params.bound);
  case BuiltinAdjunction::discrete_order:
    return discrete_order_adjunction(params.bound);
  }
  fail(ErrorCode::not_found, "unknown builtin adjunction");
}

Adjunction identity_adjunction(const CategoryPtr &c) {
  Adjunction adj;
  adj.name = "identity";
  adj.left = identity_functor(c);
  adj.right = identity_functor(c);
  adj.unit = identity_nat_trans(adj.left);
  adj.unit.target = compose_functors(adj.right, adj.left, "Id∘Id");
  adj.counit = identity_nat_trans(adj.left);
  adj.counit.source = compose_functors(adj.left, adj.right, "Id∘Id");
  return adj;
}

// --- non-idempotent counterexample ------------------------------------------

Monad counterexample_monad() {
  // Window of the free-monoid monad over M = {e, s | s·s = s} at a
  // one-element set: objects are A (size 1), M×A (size 2), M×M×A (size 4),
  // realized as a non-full subcategory of FinSet.
  auto cat = std::make_shared<FinCategory>();
  cat->name = "ListWindow";
  cat->objects = {"1", "2", "4"};
  cat->morphisms = {
      {"id:1", "1", "1", 0},       {"id:2", "2", "2", 0},
      {"id:4", "4", "4", 0},       {"unit:1", "1", "2", 0},
      {"unit:2", "2", "4", 0},     {"incl:1", "1", "4", 0},
      {"mult:1", "4", "2", 0},     {"collapse:4", "4", "4", 0},
  };
  cat->identity = {{"1", "id:1"}, {"2", "id:2"}, {"4", "id:4"}};
  auto &t = cat->compose_table;
  for (const auto &m : cat->morphisms) {
    t[{cat->identity.at(m.tgt), m.id}] = m.id;
    t[{m.id, cat->identity.at(m.src)}] = m.id;
  }
  t[{"unit:2", "unit:1"}] = "incl:1";
  t[{"mult:1", "unit:2"}] = "id:2";
  t[{"mult:1", "incl:1"}] = "unit:1";
  t[{"unit:2", "mult:1"}] = "collapse:4";
  t[{"collapse:4", "collapse:4"}] = "collapse:4";
  t[{"collapse:4", "unit:2"}] = "unit:2";
  t[{"mult:1", "collapse:4"}] = "mult:1";
  t[{"collapse:4", "incl:1"}] = "incl:1";

  FinFunctor T;
  T.name = "List≤";
  T.source = cat;
  T.target = cat;
  T.object_map = {{"1", "2"}, {"2", "4"}, {"4", "4"}};
  T.morphism_map = {
      {"id:1", "id:2"},     {"id:2", "id:4"},       {"id:4", "id:4"},
      {"unit:1", "unit:2"}, {"unit:2", "id:4"},     {"incl:1", "unit:2"},
      {"mult:1", "id:4"},   {"collapse:4", "id:4"},
  };

  Monad m;
  m.name = "list-window";
  m.endofunctor = T;

  m.unit.name = "eta";
  m.unit.source = identity_functor(cat);
  m.unit.target = T;
  m.unit.components = {{"1", "unit:1"}, {"2", "unit:2"}, {"4", "collapse:4"}};

  m.multiplication.name = "mu";
  m.multiplication.source = compose_functors(T, T, "T∘T");
  m.multiplication.target = T;
  m.multiplication.components = {
      {"1", "mult:1"}, {"2", "collapse:4"}, {"4", "collapse:4"}};
  return m;
}

} // namespace hsg::cat
