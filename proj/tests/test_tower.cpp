#include <doctest.h>

#include "hsg/error.hpp"
#include "hsg/tower.hpp"
#include "rng.hpp"

using namespace hsg;
using namespace hsg::tower;

TEST_CASE("Rational") {
  SUBCASE("reduction and sign normalization") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(3), BigInt(-6)).den() > 0);
    CHECK(Rational(BigInt(3), BigInt(-6)) == Rational(BigInt(-1), BigInt(2)));
    CHECK(Rational(BigInt(0), BigInt(7)).den() == 1);
  }
  SUBCASE("zero denominator is rejected") {
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  }
  SUBCASE("field axioms on randomized rationals, exact") {
    TestRng rng(0xabcd);
    auto random_rational = [&rng]() {
      long long n = static_cast<long long>(rng.below(41)) - 20;
      long long d = static_cast<long long>(rng.below(20)) + 1;
      return Rational(BigInt(static_cast<long>(n)),
                      BigInt(static_cast<long>(d)));
    };
    for (int trial = 0; trial < 200; ++trial) {
      Rational a = random_rational(), b = random_rational(),
               c = random_rational();
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Rational(0) == a);
      CHECK(a * Rational(1) == a);
      CHECK(a + (-a) == Rational(0));
      if (!a.is_zero())
        CHECK(a * a.inverse() == Rational(1));
    }
  }
  SUBCASE("no floating point: huge values stay exact") {
    Rational big(BigInt("123456789012345678901234567890"), BigInt(7));
    CHECK(big * Rational(7) ==
          Rational(BigInt("123456789012345678901234567890")));
  }
}

TEST_CASE("FinRing") {
  SUBCASE("zmod passes the ring axioms") {
    for (int n : {1, 2, 3, 4, 6})
      CHECK(validate_ring(zmod(n)).pass());
  }
  SUBCASE("a broken table is caught") {
    FinRing bad = zmod(2);
    bad.mul[1][1] = 0; // 1·1 = 0 breaks the unit law
    CHECK_FALSE(validate_ring(bad).pass());
  }
  SUBCASE("zero divisors of Z/6") {
    auto witness = find_zero_divisors(zmod(6));
    REQUIRE(witness);
    CHECK(witness->a == "2");
    CHECK(witness->b == "3");
  }
  SUBCASE("Z/3 is a domain") {
    CHECK_FALSE(find_zero_divisors(zmod(3)));
  }
}

TEST_CASE("FreeRingElement") {
  SUBCASE("canonical form merges and prunes") {
    auto x = FreeRingElement::generator(0, 1);
    auto p = x + x + FreeRingElement::constant(-1, 1) +
             FreeRingElement::constant(1, 1);
    CHECK(p.str({"x"}) == "2·x");
    CHECK((p + -p).str({"x"}) == "0");
  }
  SUBCASE("evaluation x ↦ 1 in Z/2 sends x²+x to 0") {
    FinRing z2 = zmod(2);
    auto x = FreeRingElement::generator(0, 1);
    RingHom h = free_ring_hom({1}, z2);
    CHECK(h.eval(x * x + x) == z2.zero);
  }
  SUBCASE("the empty generator set gives the unital constant image") {
    FinRing z5 = zmod(5);
    RingHom h = free_ring_hom({}, z5);
    CHECK(h.eval(FreeRingElement::constant(3, 0)) == z5.index("3"));
    CHECK(h.eval(FreeRingElement::constant(-1, 0)) == z5.index("4"));
    CHECK(h.eval(FreeRingElement::constant(12, 0)) == z5.index("2"));
  }
  SUBCASE("x ↦ 0 kills elements with zero constant term") {
    FinRing z4 = zmod(4);
    auto x = FreeRingElement::generator(0, 1);
    RingHom h = free_ring_hom({0}, z4);
    CHECK(h.eval(x * x + x + x) == z4.zero);
  }
  SUBCASE("evaluate-then-reduce equals reduce-then-evaluate") {
    FinRing z3 = zmod(3);
    auto x = FreeRingElement::generator(0, 1);
    RingHom h = free_ring_hom({2}, z3);
    auto raw_sum = x * x + x + x * x; // collapses to 2x² + x canonically
    CHECK(h.eval(raw_sum) ==
          z3.add_at(h.eval(x * x + x * x), h.eval(x)));
  }
}

TEST_CASE("check_free_ring_universal") {
  SUBCASE("one generator into Z/2 gives two homs") {
    CHECK(check_free_ring_universal(1, zmod(2)).pass());
  }
  SUBCASE("two generators into Z/3 gives nine homs") {
    CHECK(check_free_ring_universal(2, zmod(3)).pass());
  }
  SUBCASE("no generators is the initial hom") {
    CHECK(check_free_ring_universal(0, zmod(4)).pass());
  }
  SUBCASE("cap is enforced") {
    CHECK_THROWS_AS(check_free_ring_universal(3, zmod(2)), Error);
  }
}

TEST_CASE("fraction_field") {
  SUBCASE("a finite domain is its own fraction field") {
    FinRing f3 = zmod(3);
    FinRing k = fraction_field(f3);
    CHECK(k.elements == f3.elements);
  }
  SUBCASE("Z/6 is rejected with the witness pair") {
    try {
      fraction_field(zmod(6));
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::precondition);
      const std::string msg = e.what();
      CHECK(msg.find("2") != std::string::npos);
      CHECK(msg.find("3") != std::string::npos);
    }
  }
}

TEST_CASE("check_frac_extension") {
  SUBCASE("the canonical Z → Q extension is the identity on Q") {
    CHECK(check_frac_extension(canonical_z_to_q(), {}).pass());
  }
  SUBCASE("a planted alternative differing at 1/2 is a uniqueness violation") {
    ExtensionFixture alt;
    alt.name = "tweaked-at-half";
    alt.map = [](const Rational &q) {
      if (q == Rational(BigInt(1), BigInt(2)))
        return Rational(BigInt(2), BigInt(3));
      return q;
    };
    Report r = check_frac_extension(canonical_z_to_q(), {alt});
    REQUIRE_FALSE(r.pass());
    bool named = false;
    for (const auto &f : r.findings)
      if (f.code == "extension-uniqueness" &&
          f.message.find("tweaked-at-half") != std::string::npos)
        named = true;
    CHECK(named);
  }
  SUBCASE("Z → F5 is not injective and fails the precondition") {
    FinRing f5 = zmod(5);
    IntegerHom hom;
    hom.name = "Z->F5";
    hom.finite_field = &f5;
    try {
      check_frac_extension(hom, {});
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::precondition);
      CHECK(std::string(e.what()).find("5") != std::string::npos);
    }
  }
}

TEST_CASE("completion_descriptor") {
  CompletionDescriptor d = completion_descriptor();
  CHECK(d.idempotent);
  CHECK_FALSE(d.numeric);
  CHECK(d.level == 6);
  CHECK(d.law == "K̂̂ ≅ K̂");
}

TEST_CASE("build_numeric_tower") {
  Tower t = build_numeric_tower();
  CHECK(t.nodes.size() == 7);
  CHECK(t.edges.size() == 6);
  CHECK(t.report.pass());
  CHECK(t.edges[0].kind == EdgeKind::j_relative);
  for (std::size_t i = 1; i < t.edges.size(); ++i)
    CHECK(t.edges[i].kind == EdgeKind::internal);
  // internal edges with finite witnesses verify; the completion edge is
  // symbolic and stays unverified
  for (std::size_t i = 0; i + 1 < t.edges.size(); ++i)
    CHECK(t.edges[i].verified);
  CHECK_FALSE(t.edges.back().verified);
  CHECK(t.nodes.back().label == "CompleteField");
  CHECK_FALSE(t.nodes.back().has_witness);
}
