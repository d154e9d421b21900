#include "hsg/kan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hsg/error.hpp"

namespace hsg::cat {

const std::vector<std::string> &
SetValuedFunctor::at(const std::string &object) const {
  auto it = value.find(object);
  if (it == value.end())
    fail(ErrorCode::malformed_input,
         "set-functor " + name + ": no value at object " + object);
  return it->second;
}

const std::string &SetValuedFunctor::apply(const std::string &morphism,
                                           const std::string &element) const {
  auto it = action.find(morphism);
  if (it == action.end())
    fail(ErrorCode::malformed_input,
         "set-functor " + name + ": no action for morphism " + morphism);
  auto jt = it->second.find(element);
  if (jt == it->second.end())
    fail(ErrorCode::malformed_input, "set-functor " + name + ": action of " +
                                         morphism + " undefined at element " +
                                         element);
  return jt->second;
}

Report validate_set_functor(const SetValuedFunctor &f) {
  if (!f.source)
    fail(ErrorCode::malformed_input, "set-functor " + f.name + ": no source");
  const FinCategory &c = *f.source;
  Report report;
  const std::string loc = "set-functor " + f.name;

  for (const auto &x : c.objects) {
    const auto &elems = f.at(x);
    std::set<std::string> distinct(elems.begin(), elems.end());
    if (distinct.size() != elems.size())
      fail(ErrorCode::malformed_input, loc + ": duplicate element at " + x);
  }
  for (const auto &m : c.morphisms) {
    const auto &dom = f.at(m.src);
    const auto &cod = f.at(m.tgt);
    std::set<std::string> codset(cod.begin(), cod.end());
    for (const auto &e : dom)
      if (!codset.count(f.apply(m.id, e)))
        fail(ErrorCode::malformed_input, loc + ": action of " + m.id +
                                             " sends " + e +
                                             " outside the target value set");
  }
  // identities act as identities
  for (const auto &x : c.objects)
    for (const auto &e : f.at(x))
      if (f.apply(c.identity.at(x), e) != e)
        report.add("functoriality",
                   "identity of " + x + " does not fix element " + e, loc);
  // composites act as composites
  for (const auto &[pair, h] : c.compose_table)
    for (const auto &e : f.at(c.morphism(pair.second)->src))
      if (f.apply(h, e) != f.apply(pair.first, f.apply(pair.second, e)))
        report.add("functoriality",
                   "action of " + h + " disagrees with " + pair.first + " ∘ " +
                       pair.second + " at element " + e,
                   loc);
  return report;
}

SetValuedFunctor restrict_along(const SetValuedFunctor &f, const FinFunctor &k,
                                const std::string &name) {
  if (!(*f.source == *k.target))
    fail(ErrorCode::malformed_input,
         "restrict_along: functor targets do not match");
  SetValuedFunctor out;
  out.name = name;
  out.source = k.source;
  for (const auto &x : k.source->objects)
    out.value[x] = f.at(k.on_object(x));
  for (const auto &m : k.source->morphisms)
    out.action[m.id] = f.action.at(k.on_morphism(m.id));
  return out;
}

// --- comma categories ---------------------------------------------------------

CommaCategory comma_category(const FinFunctor &k, const std::string &d,
                             CommaDirection direction) {
  if (!k.source || !k.target)
    fail(ErrorCode::malformed_input, "comma_category: functor has no categories");
  const FinCategory &C = *k.source;
  const FinCategory &D = *k.target;
  if (!D.has_object(d))
    fail(ErrorCode::malformed_input, "comma_category: anchor " + d +
                                         " is not an object of " + D.name);

  CommaCategory out;
  out.category.name = (direction == CommaDirection::below)
                          ? "(" + k.name + "↓" + d + ")"
                          : "(" + d + "↓" + k.name + ")";

  for (const auto &c : C.objects) {
    const auto arrows = (direction == CommaDirection::below)
                            ? D.hom(k.on_object(c), d)
                            : D.hom(d, k.on_object(c));
    for (const auto &m : arrows) {
      CommaObject o{"(" + c + "|" + m + ")", c, m};
      out.objects.push_back(o);
      out.category.objects.push_back(o.id);
    }
  }

  // morphisms (c,m) -> (c',m'): f: c -> c' making the triangle commute
  struct Arrow {
    std::string id, src, tgt, f;
  };
  std::vector<Arrow> arrows;
  for (const auto &a : out.objects)
    for (const auto &b : out.objects)
      for (const auto &f : C.hom(a.c, b.c)) {
        const Morphism *left =
            (direction == CommaDirection::below)
                ? D.compose(b.arrow, k.on_morphism(f)) // m' ∘ K(f) = m
                : D.compose(k.on_morphism(f), a.arrow); // K(f) ∘ m = m'
        if (!left)
          continue;
        const std::string &want =
            (direction == CommaDirection::below) ? a.arrow : b.arrow;
        if (left->id != want)
          continue;
        arrows.push_back({"[" + f + ":" + a.id + ">" + b.id + "]", a.id, b.id, f});
      }

  for (const auto &a : arrows)
    out.category.morphisms.push_back({a.id, a.src, a.tgt, 0});
  for (const auto &o : out.objects)
    out.category.identity[o.id] =
        "[" + C.identity.at(o.c) + ":" + o.id + ">" + o.id + "]";
  for (const auto &g : arrows)
    for (const auto &f : arrows) {
      if (f.tgt != g.src)
        continue;
      const Morphism *gf = C.compose(g.f, f.f);
      out.category.compose_table[{g.id, f.id}] =
          "[" + gf->id + ":" + f.src + ">" + g.tgt + "]";
    }

  out.projection.name = "proj" + out.category.name;
  out.projection.source = std::make_shared<FinCategory>(out.category);
  out.projection.target = k.source;
  for (const auto &o : out.objects)
    out.projection.object_map[o.id] = o.c;
  for (const auto &a : arrows)
    out.projection.morphism_map[a.id] = a.f;
  return out;
}

// --- colimit ----------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b); // keep the smallest index
  }
};

} // namespace

Colimit finset_colimit(const SetValuedFunctor &f) {
  const FinCategory &c = *f.source;

  // flat indexing of pairs (object, element), object order then element order;
  // the smallest flat index in a class is its canonical representative when
  // objects are visited in id-sorted order
  std::vector<std::pair<std::string, std::string>> pairs;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  std::vector<std::string> sorted_objects = c.objects;
  std::sort(sorted_objects.begin(), sorted_objects.end());
  for (const auto &x : sorted_objects)
    for (const auto &e : f.at(x)) {
      index[{x, e}] = pairs.size();
      pairs.emplace_back(x, e);
    }

  UnionFind uf(pairs.size());
  for (const auto &m : c.morphisms)
    for (const auto &e : f.at(m.src))
      uf.unite(index.at({m.src, e}), index.at({m.tgt, f.apply(m.id, e)}));

  Colimit out;
  std::map<std::size_t, std::string> label;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (uf.find(i) == i) {
      label[i] = pairs[i].first + "#" + pairs[i].second;
      out.elements.push_back(label[i]);
    }
  }
  for (const auto &x : c.objects)
    for (const auto &e : f.at(x))
      out.injections[x][e] = label.at(uf.find(index.at({x, e})));
  return out;
}

// --- limit --------------------------------------------------------------------

Limit finset_limit(const SetValuedFunctor &f) {
  const FinCategory &c = *f.source;
  Limit out;

  std::vector<std::map<std::string, std::string>> families{{}};
  for (const auto &x : c.objects) {
    std::vector<std::map<std::string, std::string>> next;
    for (const auto &fam : families)
      for (const auto &e : f.at(x)) {
        auto g = fam;
        g[x] = e;
        next.push_back(std::move(g));
      }
    families = std::move(next);
  }

  for (const auto &fam : families) {
    bool matching = true;
    for (const auto &m : c.morphisms)
      if (f.apply(m.id, fam.at(m.src)) != fam.at(m.tgt)) {
        matching = false;
        break;
      }
    if (!matching)
      continue;
    std::string lbl = "<";
    for (const auto &x : c.objects) {
      if (lbl.size() > 1)
        lbl += ",";
      lbl += fam.at(x);
    }
    lbl += ">";
    out.elements.push_back(lbl);
    out.family[lbl] = fam;
    for (const auto &x : c.objects)
      out.projections[x][lbl] = fam.at(x);
  }
  return out;
}

// --- Kan extension --------------------------------------------------------------

SetValuedFunctor kan_extend(KanSide side, const SetValuedFunctor &f,
                            const FinFunctor &k) {
  if (!(*f.source == *k.source))
    fail(ErrorCode::malformed_input,
         "kan_extend: diagram and functor must share their source");
  const FinCategory &D = *k.target;
  const CommaDirection dir =
      (side == KanSide::left) ? CommaDirection::below : CommaDirection::above;

  SetValuedFunctor out;
  out.name = (side == KanSide::left ? "Lan_" : "Ran_") + k.name + "(" + f.name + ")";
  out.source = k.target;

  std::map<std::string, CommaCategory> commas;
  std::map<std::string, Colimit> colims;
  std::map<std::string, Limit> lims;
  for (const auto &d : D.objects) {
    CommaCategory comma = comma_category(k, d, dir);
    SetValuedFunctor restricted = restrict_along(f, comma.projection, "F|" + d);
    if (side == KanSide::left) {
      colims[d] = finset_colimit(restricted);
      out.value[d] = colims[d].elements;
    } else {
      lims[d] = finset_limit(restricted);
      out.value[d] = lims[d].elements;
    }
    commas[d] = std::move(comma);
  }

  for (const auto &g : D.morphisms) {
    std::map<std::string, std::string> act;
    if (side == KanSide::left) {
      // (c, m: Kc -> d) re-anchors to (c, g∘m: Kc -> d')
      const auto &src_comma = commas.at(g.src);
      const auto &src_col = colims.at(g.src);
      const auto &dst_col = colims.at(g.tgt);
      for (const auto &o : src_comma.objects) {
        const Morphism *gm = D.compose(g.id, o.arrow);
        const std::string target_obj = "(" + o.c + "|" + gm->id + ")";
        for (const auto &e : f.at(o.c)) {
          const std::string &from = src_col.injections.at(o.id).at(e);
          const std::string &to = dst_col.injections.at(target_obj).at(e);
          auto it = act.find(from);
          if (it != act.end() && it->second != to)
            fail(ErrorCode::internal,
                 "kan_extend: induced colimit map is not well-defined");
          act[from] = to;
        }
      }
    } else {
      // a family over (d ↓ K) restricts along (c, m: d' -> Kc) ↦ (c, m∘g)
      const auto &dst_comma = commas.at(g.tgt);
      const auto &src_lim = lims.at(g.src);
      const auto &dst_lim = lims.at(g.tgt);
      for (const auto &fam : src_lim.elements) {
        std::map<std::string, std::string> reindexed;
        for (const auto &o : dst_comma.objects) {
          const Morphism *mg = D.compose(o.arrow, g.id);
          reindexed[o.id] =
              src_lim.family.at(fam).at("(" + o.c + "|" + mg->id + ")");
        }
        bool found = false;
        for (const auto &[lbl, assignment] : dst_lim.family)
          if (assignment == reindexed) {
            act[fam] = lbl;
            found = true;
            break;
          }
        if (!found)
          fail(ErrorCode::internal,
               "kan_extend: reindexed family is not matching");
      }
    }
    out.action[g.id] = std::move(act);
  }
  return out;
}

// --- natural transformation enumeration -----------------------------------------

std::vector<SetNatTrans> enumerate_set_nat_trans(const SetValuedFunctor &a,
                                                 const SetValuedFunctor &b) {
  if (!(*a.source == *b.source))
    fail(ErrorCode::malformed_input,
         "enumerate_set_nat_trans: functors not parallel");
  const FinCategory &c = *a.source;
  std::vector<SetNatTrans> result;
  SetNatTrans current;

  // naturality constraints incrementally: a component assignment at x must
  // commute with every morphism whose endpoints are both assigned
  std::function<void(std::size_t)> assign = [&](std::size_t oi) {
    if (oi == c.objects.size()) {
      result.push_back(current);
      return;
    }
    const std::string &x = c.objects[oi];
    const auto &dom = a.at(x);
    const auto &cod = b.at(x);
    if (dom.empty()) {
      current[x] = {};
      assign(oi + 1);
      current.erase(x);
      return;
    }
    if (cod.empty())
      return; // no map from a nonempty set into ∅

    std::vector<std::size_t> choice(dom.size(), 0);
    while (true) {
      std::map<std::string, std::string> comp;
      for (std::size_t i = 0; i < dom.size(); ++i)
        comp[dom[i]] = cod[choice[i]];
      current[x] = comp;
      bool natural = true;
      for (const auto &m : c.morphisms) {
        if (!current.count(m.src) || !current.count(m.tgt))
          continue;
        for (const auto &e : a.at(m.src)) {
          if (b.apply(m.id, current.at(m.src).at(e)) !=
              current.at(m.tgt).at(a.apply(m.id, e))) {
            natural = false;
            break;
          }
        }
        if (!natural)
          break;
      }
      if (natural)
        assign(oi + 1);
      current.erase(x);

      std::size_t i = 0;
      while (i < choice.size()) {
        if (++choice[i] < cod.size())
          break;
        choice[i] = 0;
        ++i;
      }
      if (i == choice.size())
        break;
    }
  };
  assign(0);
  return result;
}

// --- universal property -----------------------------------------------------------

namespace {

// transformations F ⇒ G∘K (left) or G∘K ⇒ F (right) for G on K's target
std::vector<SetNatTrans> comparisons(const SetValuedFunctor &f,
                                     const SetValuedFunctor &g,
                                     const FinFunctor &k, KanSide side) {
  SetValuedFunctor gk = restrict_along(g, k, g.name + "∘K");
  return (side == KanSide::left) ? enumerate_set_nat_trans(f, gk)
                                 : enumerate_set_nat_trans(gk, f);
}

// (γK)∘α for the left side, α∘(γK) for the right side
SetNatTrans whisker_then(const SetNatTrans &alpha, const SetNatTrans &gamma,
                         const FinFunctor &k, KanSide side) {
  SetNatTrans out;
  for (const auto &x : k.source->objects) {
    const std::string kx = k.on_object(x);
    std::map<std::string, std::string> comp;
    if (side == KanSide::left) {
      for (const auto &[e, mid] : alpha.at(x))
        comp[e] = gamma.at(kx).at(mid);
    } else {
      for (const auto &[e, mid] : gamma.at(kx))
        comp[e] = alpha.at(x).at(mid);
    }
    out[x] = std::move(comp);
  }
  return out;
}

} // namespace

Report verify_kan_universal(const SetValuedFunctor &ext,
                            const SetValuedFunctor &f, const FinFunctor &k,
                            KanSide side,
                            const std::vector<SetValuedFunctor> &candidates) {
  Report report;
  const std::string loc = "kan " + ext.name;

  if (candidates.empty()) {
    report.add("weak-check",
               "empty candidate family: universal property passes vacuously",
               loc, Severity::warning);
    return report;
  }

  // candidate (co)units
  const std::vector<SetNatTrans> units = comparisons(f, ext, k, side);
  if (units.empty()) {
    report.add("kan-unit-existence",
               side == KanSide::left
                   ? "no natural transformation F ⇒ Ext∘K exists"
                   : "no natural transformation Ext∘K ⇒ F exists",
               loc);
    return report;
  }

  // factorization targets per candidate
  struct Failure {
    std::string code, message;
  };
  std::vector<Failure> first_profile;
  bool any_unit_works = false;

  for (std::size_t ui = 0; ui < units.size() && !any_unit_works; ++ui) {
    const SetNatTrans &alpha = units[ui];
    std::vector<Failure> profile;
    bool ok = true;
    for (const auto &g : candidates) {
      const std::vector<SetNatTrans> betas = comparisons(f, g, k, side);
      const std::vector<SetNatTrans> gammas =
          (side == KanSide::left) ? enumerate_set_nat_trans(ext, g)
                                  : enumerate_set_nat_trans(g, ext);
      for (const auto &beta : betas) {
        int count = 0;
        for (const auto &gamma : gammas)
          if (whisker_then(alpha, gamma, k, side) == beta)
            ++count;
        if (count == 0) {
          ok = false;
          profile.push_back(
              {"kan-factor-existence",
               "no factorization through candidate " + g.name});
        } else if (count > 1) {
          ok = false;
          profile.push_back({"kan-factor-uniqueness",
                             "factorization through candidate " + g.name +
                                 " is not unique (" + std::to_string(count) +
                                 " found)"});
        }
      }
    }
    if (ok)
      any_unit_works = true;
    else if (ui == 0)
      first_profile = std::move(profile);
  }

  if (!any_unit_works) {
    if (first_profile.empty())
      report.add("kan-universal", "no (co)unit satisfies the universal property",
                 loc);
    std::set<std::string> seen;
    for (const auto &fl : first_profile)
      if (seen.insert(fl.code + fl.message).second)
        report.add(fl.code, fl.message, loc);
  }
  return report;
}

// --- Beck–Chevalley ------------------------------------------------------------------

namespace {

// natural isomorphism search: backtracking over per-object bijections
bool natural_iso_exists(const SetValuedFunctor &a, const SetValuedFunctor &b) {
  const FinCategory &c = *a.source;
  for (const auto &x : c.objects)
    if (a.at(x).size() != b.at(x).size())
      return false;

  SetNatTrans current;
  std::function<bool(std::size_t)> assign = [&](std::size_t oi) -> bool {
    if (oi == c.objects.size())
      return true;
    const std::string &x = c.objects[oi];
    const auto &dom = a.at(x);
    std::vector<std::string> cod = b.at(x);
    std::sort(cod.begin(), cod.end());
    do {
      std::map<std::string, std::string> comp;
      for (std::size_t i = 0; i < dom.size(); ++i)
        comp[dom[i]] = cod[i];
      current[x] = comp;
      bool natural = true;
      for (const auto &m : c.morphisms) {
        if (!current.count(m.src) || !current.count(m.tgt))
          continue;
        for (const auto &e : a.at(m.src))
          if (b.apply(m.id, current.at(m.src).at(e)) !=
              current.at(m.tgt).at(a.apply(m.id, e))) {
            natural = false;
            break;
          }
        if (!natural)
          break;
      }
      if (natural && assign(oi + 1))
        return true;
      current.erase(x);
    } while (std::next_permutation(cod.begin(), cod.end()));
    return false;
  };
  return assign(0);
}

} // namespace

Report beck_chevalley_check(const FinFunctor &p, const FinFunctor &q,
                            const FinFunctor &r, const FinFunctor &s,
                            const SetValuedFunctor &f) {
  // square: p: A -> B, q: A -> C, r: B -> D, s: C -> D with r∘p = s∘q
  FinFunctor rp = compose_functors(r, p, "r∘p");
  FinFunctor sq = compose_functors(s, q, "s∘q");
  if (rp.object_map != sq.object_map || rp.morphism_map != sq.morphism_map)
    fail(ErrorCode::precondition,
         "beck_chevalley_check: the square does not commute strictly");
  if (!(*f.source == *r.source))
    fail(ErrorCode::malformed_input,
         "beck_chevalley_check: diagram must live on the source of r");

  Report report;
  const std::string loc = "beck-chevalley";

  SetValuedFunctor restricted = restrict_along(f, p, f.name + "∘p");
  SetValuedFunctor route1 = kan_extend(KanSide::left, restricted, q);
  SetValuedFunctor lan = kan_extend(KanSide::left, f, r);
  SetValuedFunctor route2 = restrict_along(lan, s, lan.name + "∘s");

  bool sizes_ok = true;
  for (const auto &cobj : q.target->objects)
    if (route1.at(cobj).size() != route2.at(cobj).size()) {
      sizes_ok = false;
      report.add("bc-mismatch",
                 "anchor " + cobj + ": |Lan_q(F∘p)| = " +
                     std::to_string(route1.at(cobj).size()) +
                     " but |(Lan_r F)∘s| = " +
                     std::to_string(route2.at(cobj).size()),
                 loc);
    }
  if (sizes_ok && !natural_iso_exists(route1, route2))
    report.add("bc-not-natural",
               "pointwise sizes agree but no natural isomorphism exists", loc);
  return report;
}

} // namespace hsg::cat
