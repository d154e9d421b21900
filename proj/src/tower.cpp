#include "hsg/tower.hpp"

#include "hsg/adjunction.hpp"
#include "hsg/error.hpp"
#include "hsg/jguard.hpp"

namespace hsg::tower {

IntegerHom canonical_z_to_q() {
  IntegerHom h;
  h.name = "Z->Q";
  h.to_q = [](const BigInt &n) { return embed_integer(n); };
  return h;
}

Report check_frac_extension(const IntegerHom &hom,
                            const std::vector<ExtensionFixture> &alternatives,
                            const FracExtensionOptions &opts) {
  if (hom.finite_field) {
    // n ↦ n·1 into a finite ring collapses the characteristic
    const FinRing &k = *hom.finite_field;
    RingHom unit = free_ring_hom({}, k);
    for (long n = 1; n <= static_cast<long>(k.elements.size()); ++n)
      if (unit.eval(FreeRingElement::constant(BigInt(n), 0)) == k.zero)
        fail(ErrorCode::precondition,
             "hom " + hom.name + " is not injective: " + std::to_string(n) +
                 " ↦ 0 in " + k.name);
    fail(ErrorCode::internal, "finite ring without characteristic");
  }
  if (!hom.to_q)
    fail(ErrorCode::malformed_input, "hom " + hom.name + " has no carrier");

  Report report;
  const std::string loc = "frac-extension " + hom.name;

  // injectivity on the declared range
  for (long long a = -opts.injectivity_range; a <= opts.injectivity_range; ++a)
    for (long long b = a + 1; b <= opts.injectivity_range; ++b)
      if (hom.to_q(BigInt(static_cast<long>(a))) ==
          hom.to_q(BigInt(static_cast<long>(b))))
        fail(ErrorCode::precondition, "hom " + hom.name +
                                          " is not injective: " +
                                          std::to_string(a) + " and " +
                                          std::to_string(b) + " collide");

  auto extension = [&](const Rational &q) {
    return hom.to_q(q.num()) / hom.to_q(q.den());
  };

  // sample rationals: small numerators and denominators, both signs
  std::vector<Rational> sample;
  for (int n = -opts.sample_values / 2; n <= opts.sample_values / 2; ++n)
    for (int d = 1; d <= 4; ++d)
      sample.push_back(Rational(BigInt(n), BigInt(d)));

  // agreement with hom on the embedded integers
  for (long long n = -4; n <= 4; ++n)
    if (extension(embed_integer(BigInt(static_cast<long>(n)))) !=
        hom.to_q(BigInt(static_cast<long>(n))))
      report.add("extension-restriction",
                 "extension disagrees with hom at " + std::to_string(n), loc);

  // field hom laws, exact
  for (const auto &p : sample)
    for (const auto &q : sample) {
      if (extension(p + q) != extension(p) + extension(q))
        report.add("extension-additive",
                   "q(p+q) != q(p)+q(q) at " + p.str() + ", " + q.str(), loc);
      if (extension(p * q) != extension(p) * extension(q))
        report.add("extension-multiplicative",
                   "q(p·q) != q(p)·q(q) at " + p.str() + ", " + q.str(), loc);
      if (!q.is_zero() && extension(p / q) != extension(p) / extension(q))
        report.add("extension-division",
                   "q(p/q) != q(p)/q(q) at " + p.str() + ", " + q.str(), loc);
    }

  // uniqueness against supplied alternatives
  for (const auto &alt : alternatives) {
    bool agrees_on_z = true;
    for (long long n = -opts.injectivity_range; n <= opts.injectivity_range;
         ++n)
      if (alt.map(embed_integer(BigInt(static_cast<long>(n)))) !=
          hom.to_q(BigInt(static_cast<long>(n))))
        agrees_on_z = false;
    if (!agrees_on_z)
      continue; // not an extension of hom at all
    for (const auto &q : sample)
      if (alt.map(q) != extension(q)) {
        report.add("extension-uniqueness",
                   "alternative " + alt.name + " agrees on ℤ but differs at " +
                       q.str(),
                   loc);
        break;
      }
  }
  return report;
}

CompletionDescriptor completion_descriptor() { return {}; }

Tower build_numeric_tower() {
  Tower t;
  t.nodes = {
      {0, "Definability", true, "two-point thin category Undef → Define"},
      {1, "Emptiness", true, "two-point thin category Empty → NonEmpty"},
      {2, "Set", true, "skeletal finite sets of size ≤ 3"},
      {3, "OrdSet", true, "discrete posets of size ≤ 3 plus one 2-chain"},
      {4, "Ring", true, "Z[S] with |S| ≤ 2 and tabled rings of size ≤ 8"},
      {5, "Field", true, "exact rationals; finite domains as fields"},
      {6, "CompleteField", false, "symbolic only"},
  };

  const std::string loc = "tower";

  // 0 → 1: j-relative, resolved by the quasi-adjunction classifier on a
  // small J0+J1 instance
  {
    grid::Axis level{"level", grid::IndexType::integer, {0ll, 1ll}};
    grid::Grid g = grid::build_grid(
        {level},
        {{"u", {{"level", 0ll}}, false}, {"v", {{"level", 1ll}}, true}});
    jguard::ExternalCriterion j;
    j.name = "tower-j";
    j.table = std::map<std::string, bool>{{"v", true}};
    jguard::GuardContext ctx{&g, nullptr, nullptr};
    jguard::QuasiReport q = jguard::check_quasi_adjunction(j, ctx);
    t.edges.push_back({0, 1, EdgeKind::j_relative,
                       "J-relative quasi-adjunction, mode " +
                           std::string(jguard::quasi_mode_name(q.mode)),
                       q.mode == jguard::QuasiMode::isomorphism});
    if (q.mode != jguard::QuasiMode::isomorphism)
      t.report.add("tower-edge-0-1", "j-relative edge failed to classify", loc);
  }

  // 1 → 2: Σ_emp ⊣ ι₁
  {
    cat::Adjunction adj = cat::emptiness_adjunction(3);
    Report r = cat::verify_adjunction(adj);
    t.edges.push_back(
        {1, 2, EdgeKind::internal, "Σ_emp ⊣ ι₁ on finite sets of size ≤ 3",
         r.pass()});
    t.report.merge(r);
  }

  // 2 → 3: Δ ⊣ U_pos
  {
    cat::Adjunction adj = cat::discrete_order_adjunction(3);
    cat::VerifyOptions opts;
    opts.max_morphisms = 128;
    Report r = cat::verify_adjunction(adj, opts);
    t.edges.push_back({2, 3, EdgeKind::internal,
                       "Δ ⊣ U_pos against the poset fixture", r.pass()});
    t.report.merge(r);
  }

  // 3 → 4: free-ring universal property
  {
    FinRing z2 = zmod(2);
    Report r = check_free_ring_universal(1, z2);
    t.edges.push_back({3, 4, EdgeKind::internal,
                       "free commutative ring universal property on Z/2",
                       r.pass()});
    t.report.merge(r);
  }

  // 4 → 5: Frac and its unique extension
  {
    Report r = check_frac_extension(canonical_z_to_q(), {});
    t.edges.push_back(
        {4, 5, EdgeKind::internal,
         "Frac(Z) = Q with the unique extension of Z → Q", r.pass()});
    t.report.merge(r);
  }

  // 5 → 6: completion, symbolic
  {
    CompletionDescriptor d = completion_descriptor();
    t.edges.push_back({5, 6, EdgeKind::internal,
                       "completion reflection, recorded as " + d.law +
                           " (no numeric content)",
                       false});
  }
  return t;
}

} // namespace hsg::tower
