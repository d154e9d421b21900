#include <doctest.h>

#include <memory>
#include <set>

#include "hsg/category.hpp"
#include "hsg/error.hpp"

using namespace hsg;
using namespace hsg::cat;

namespace {

// chain a -> b -> c with the composite filled in
FinCategory chain3() {
  FinCategory c;
  c.name = "chain3";
  c.objects = {"a", "b", "c"};
  c.morphisms = {
      {"id:a", "a", "a", 0}, {"id:b", "b", "b", 0}, {"id:c", "c", "c", 0},
      {"f", "a", "b", 0},    {"g", "b", "c", 0},    {"gf", "a", "c", 0},
  };
  c.identity = {{"a", "id:a"}, {"b", "id:b"}, {"c", "id:c"}};
  auto &t = c.compose_table;
  for (const auto &m : c.morphisms) {
    t[{c.identity.at(m.tgt), m.id}] = m.id;
    t[{m.id, c.identity.at(m.src)}] = m.id;
  }
  t[{"g", "f"}] = "gf";
  return c;
}

Preorder two_point() {
  Preorder p;
  p.elements = {"⊥", "⊤"};
  p.leq = {{"⊥", "⊥"}, {"⊥", "⊤"}, {"⊤", "⊤"}};
  return p;
}

FinCategory c0() {
  Preorder p;
  p.elements = {"Undef", "Define"};
  p.leq = {{"Undef", "Undef"}, {"Undef", "Define"}, {"Define", "Define"}};
  return thin_from_preorder(p, "C0");
}

FinCategory c1() {
  Preorder p;
  p.elements = {"Empty", "NonEmpty"};
  p.leq = {{"Empty", "Empty"}, {"Empty", "NonEmpty"}, {"NonEmpty", "NonEmpty"}};
  return thin_from_preorder(p, "C1");
}

} // namespace

TEST_CASE("validate_category: one object, identity only") {
  FinCategory c;
  c.name = "pt";
  c.objects = {"x"};
  c.morphisms = {{"id:x", "x", "x", 0}};
  c.identity = {{"x", "id:x"}};
  c.compose_table[{"id:x", "id:x"}] = "id:x";
  CHECK(validate_category(c).pass());
}

TEST_CASE("validate_category: omitted identity composite is an identity-law violation") {
  FinCategory c;
  c.name = "broken";
  c.objects = {"a", "b"};
  c.morphisms = {{"id:a", "a", "a", 0}, {"id:b", "b", "b", 0}, {"f", "a", "b", 0}};
  c.identity = {{"a", "id:a"}, {"b", "id:b"}};
  auto &t = c.compose_table;
  t[{"id:a", "id:a"}] = "id:a";
  t[{"id:b", "id:b"}] = "id:b";
  t[{"f", "id:a"}] = "f";
  // id:b ∘ f deliberately missing
  Report r = validate_category(c);
  REQUIRE_FALSE(r.pass());
  bool named = false;
  for (const auto &f : r.findings)
    if (f.code == "identity-law" && f.message.find("id:b") != std::string::npos &&
        f.message.find("f") != std::string::npos)
      named = true;
  CHECK(named);
}

TEST_CASE("validate_category: chain filled by path composition is valid") {
  FinCategory c = chain3();
  CHECK(validate_category(c).pass());

  // oracle: every composable triple associates
  for (const auto &h : c.morphisms)
    for (const auto &g : c.morphisms)
      for (const auto &f : c.morphisms) {
        if (f.tgt != g.src || g.tgt != h.src)
          continue;
        const Morphism *gf = c.compose(g.id, f.id);
        const Morphism *hg = c.compose(h.id, g.id);
        REQUIRE(gf);
        REQUIRE(hg);
        CHECK(c.compose(h.id, gf->id)->id == c.compose(hg->id, f.id)->id);
      }
}

TEST_CASE("validate_category: dangling reference is malformed input, not a violation") {
  FinCategory c;
  c.name = "dangling";
  c.objects = {"a"};
  c.morphisms = {{"id:a", "a", "a", 0}, {"f", "a", "ghost", 0}};
  c.identity = {{"a", "id:a"}};
  CHECK_THROWS_AS(validate_category(c), Error);
}

TEST_CASE("thin_from_preorder") {
  SUBCASE("two-point preorder gives C1 with one non-identity arrow") {
    FinCategory c = thin_from_preorder(two_point(), "2");
    CHECK(c.objects.size() == 2);
    CHECK(c.morphisms.size() == 3);
    CHECK(c.hom("⊥", "⊤").size() == 1);
    CHECK(c.hom("⊤", "⊥").empty());
    CHECK(validate_category(c).pass());
  }
  SUBCASE("discrete relation gives discrete category") {
    Preorder p;
    p.elements = {"x", "y", "z"};
    p.leq = {{"x", "x"}, {"y", "y"}, {"z", "z"}};
    FinCategory c = thin_from_preorder(p, "disc");
    CHECK(c.morphisms.size() == 3);
    CHECK(validate_category(c).pass());
  }
  SUBCASE("chain 0..5 has 21 morphisms") {
    Preorder p;
    for (int i = 0; i <= 5; ++i)
      p.elements.push_back(std::to_string(i));
    int expected = 0; // oracle: |{(i,j): i <= j <= 5}| by enumeration
    for (int i = 0; i <= 5; ++i)
      for (int j = 0; j <= 5; ++j)
        if (i <= j) {
          p.leq.emplace_back(std::to_string(i), std::to_string(j));
          ++expected;
        }
    FinCategory c = thin_from_preorder(p, "N<=5");
    CHECK(expected == 21);
    CHECK(c.morphisms.size() == 21);
    CHECK(validate_category(c).pass());
  }
  SUBCASE("non-transitive input is a precondition error") {
    Preorder p;
    p.elements = {"x", "y", "z"};
    p.leq = {{"x", "x"}, {"y", "y"}, {"z", "z"}, {"x", "y"}, {"y", "z"}};
    CHECK_THROWS_AS(thin_from_preorder(p, "bad"), Error);
  }
  SUBCASE("hom sets have at most one element") {
    FinCategory c = thin_from_preorder(two_point(), "2");
    for (const auto &x : c.objects)
      for (const auto &y : c.objects)
        CHECK(c.hom(x, y).size() <= 1);
  }
}

TEST_CASE("product_category") {
  SUBCASE("C0 × C1 has 4 objects and 9 morphisms") {
    FinCategory p = product_category({c0(), c1()}, "C0xC1");
    CHECK(p.objects.size() == 4);
    CHECK(p.morphisms.size() == 9); // (#mor C0)·(#mor C1) = 3·3
    CHECK(validate_category(p).pass());
  }
  SUBCASE("empty factor list gives the terminal category") {
    FinCategory p = product_category({}, "empty");
    CHECK(p.objects.size() == 1);
    CHECK(p.morphisms.size() == 1);
    CHECK(validate_category(p).pass());
  }
  SUBCASE("X × terminal is isomorphic to X") {
    FinCategory x = chain3();
    FinCategory p = product_category({x, terminal_category()}, "Xx1");
    CHECK(p.objects.size() == x.objects.size());
    CHECK(p.morphisms.size() == x.morphisms.size());
    CHECK(validate_category(p).pass());
  }
  SUBCASE("C0 × C0 contains the diagonal arrow") {
    FinCategory p = product_category({c0(), c0()}, "C0xC0");
    CHECK(p.hom("(Undef|Undef)", "(Define|Define)").size() == 1);
  }
  SUBCASE("projections recover the factors") {
    auto a = std::make_shared<FinCategory>(c0());
    auto b = std::make_shared<FinCategory>(c1());
    auto p = std::make_shared<FinCategory>(product_category({*a, *b}, "P"));
    FinFunctor pi0 = product_projection(p, 0, a);
    FinFunctor pi1 = product_projection(p, 1, b);
    CHECK(validate_functor(pi0).pass());
    CHECK(validate_functor(pi1).pass());
    std::set<std::string> hit0, hit1;
    for (const auto &[_, v] : pi0.object_map)
      hit0.insert(v);
    for (const auto &[_, v] : pi1.object_map)
      hit1.insert(v);
    CHECK(hit0.size() == a->objects.size());
    CHECK(hit1.size() == b->objects.size());
  }
}

TEST_CASE("validate_functor") {
  auto c = std::make_shared<FinCategory>(chain3());
  SUBCASE("identity functor is valid") {
    CHECK(validate_functor(identity_functor(c)).pass());
  }
  SUBCASE("monotone classification into 2 is a functor") {
    // send a,b to the ⊥ side and c to the ⊤ side of the two-point thin category
    auto two = std::make_shared<FinCategory>(thin_from_preorder(two_point(), "2"));
    FinFunctor tau;
    tau.name = "tau";
    tau.source = c;
    tau.target = two;
    tau.object_map = {{"a", "⊥"}, {"b", "⊥"}, {"c", "⊤"}};
    tau.morphism_map = {{"id:a", "le:⊥:⊥"}, {"id:b", "le:⊥:⊥"},
                        {"id:c", "le:⊤:⊤"}, {"f", "le:⊥:⊥"},
                        {"g", "le:⊥:⊤"},    {"gf", "le:⊥:⊤"}};
    CHECK(validate_functor(tau).pass());
  }
  SUBCASE("collapsing an arrow to the wrong identity is reported") {
    FinFunctor bad = identity_functor(c);
    bad.name = "bad";
    bad.morphism_map["f"] = "id:a"; // f: a->b collapsed to id:a
    Report r = validate_functor(bad);
    REQUIRE_FALSE(r.pass());
    bool named = false;
    for (const auto &fd : r.findings)
      if (fd.message.find("f") != std::string::npos)
        named = true;
    CHECK(named);
  }
  SUBCASE("object_map to undeclared object is malformed input") {
    FinFunctor bad = identity_functor(c);
    bad.object_map["a"] = "ghost";
    CHECK_THROWS_AS(validate_functor(bad), Error);
  }
}

TEST_CASE("validate_nat_trans") {
  auto two = std::make_shared<FinCategory>(thin_from_preorder(two_point(), "2"));
  FinFunctor id2 = identity_functor(two);
  SUBCASE("identity transformation is valid") {
    CHECK(validate_nat_trans(identity_nat_trans(id2)).pass());
  }
  SUBCASE("missing component is malformed input") {
    FinNatTrans a = identity_nat_trans(id2);
    a.components.erase("⊥");
    CHECK_THROWS_AS(validate_nat_trans(a), Error);
  }
  SUBCASE("swapped components are reported on the square") {
    // constant-at-⊥ vs constant-at-⊤ functors: components must be le:⊥:⊤
    FinFunctor lo, hi;
    lo.name = "lo";
    lo.source = two;
    lo.target = two;
    lo.object_map = {{"⊥", "⊥"}, {"⊤", "⊥"}};
    lo.morphism_map = {{"le:⊥:⊥", "le:⊥:⊥"},
                       {"le:⊥:⊤", "le:⊥:⊥"},
                       {"le:⊤:⊤", "le:⊥:⊥"}};
    hi.name = "hi";
    hi.source = two;
    hi.target = two;
    hi.object_map = {{"⊥", "⊤"}, {"⊤", "⊤"}};
    hi.morphism_map = {{"le:⊥:⊥", "le:⊤:⊤"},
                       {"le:⊥:⊤", "le:⊤:⊤"},
                       {"le:⊤:⊤", "le:⊤:⊤"}};
    FinNatTrans good;
    good.name = "good";
    good.source = lo;
    good.target = hi;
    good.components = {{"⊥", "le:⊥:⊤"}, {"⊤", "le:⊥:⊤"}};
    CHECK(validate_nat_trans(good).pass());

    FinNatTrans bad = good;
    bad.components["⊤"] = "le:⊤:⊤"; // wrong typing at ⊤
    CHECK_FALSE(validate_nat_trans(bad).pass());
  }
}

TEST_CASE("grade_extend") {
  FinCategory disc;
  disc.name = "disc2";
  disc.objects = {"a", "b"};
  disc.morphisms = {{"id:a", "a", "a", 0}, {"id:b", "b", "b", 0}};
  disc.identity = {{"a", "id:a"}, {"b", "id:b"}};
  disc.compose_table[{"id:a", "id:a"}] = "id:a";
  disc.compose_table[{"id:b", "id:b"}] = "id:b";

  SUBCASE("one generator on a discrete 2-object category gives 3 morphisms") {
    FinCategory e = grade_extend(disc, {{"a", "b"}});
    CHECK(e.morphisms.size() == 3);
    CHECK(validate_category(e).pass());
    CHECK(e.hom("a", "b").size() == 1);
    CHECK(e.morphism(e.hom("a", "b")[0])->grade == 1);
  }
  SUBCASE("no generators returns the input unchanged") {
    FinCategory e = grade_extend(disc, {});
    CHECK(e == disc);
  }
  SUBCASE("a generator cycle overflows the path bound") {
    CHECK_THROWS_AS(grade_extend(disc, {{"a", "b"}, {"b", "a"}}), Error);
    try {
      grade_extend(disc, {{"a", "b"}, {"b", "a"}});
    } catch (const Error &err) {
      CHECK(err.code() == ErrorCode::capacity);
    }
  }
  SUBCASE("undeclared generator endpoint is malformed input") {
    CHECK_THROWS_AS(grade_extend(disc, {{"a", "ghost"}}), Error);
  }
  SUBCASE("extension through existing morphisms closes paths") {
    FinCategory base = chain3();
    FinCategory e = grade_extend(base, {{"b", "c"}});
    CHECK(validate_category(e).pass());
    // new: gen (b->c) and gen∘f (a->c); gf stays distinct from gen∘f
    CHECK(e.morphisms.size() == base.morphisms.size() + 2);
    CHECK(e.hom("b", "c").size() == 2);
    CHECK(e.hom("a", "c").size() == 2);
  }
}

TEST_CASE("grade_truncate") {
  FinCategory disc;
  disc.name = "disc2";
  disc.objects = {"a", "b"};
  disc.morphisms = {{"id:a", "a", "a", 0}, {"id:b", "b", "b", 0}};
  disc.identity = {{"a", "id:a"}, {"b", "id:b"}};
  disc.compose_table[{"id:a", "id:a"}] = "id:a";
  disc.compose_table[{"id:b", "id:b"}] = "id:b";

  FinCategory e = grade_extend(disc, {{"a", "b"}});

  SUBCASE("truncate to 0 gives the discrete category on the same objects") {
    FinCategory t = grade_truncate(e, 0);
    t.name = disc.name;
    CHECK(t == disc);
  }
  SUBCASE("truncate to the max grade is the identity") {
    FinCategory t = grade_truncate(e, e.max_grade());
    CHECK(t.morphisms.size() == e.morphisms.size());
  }
  SUBCASE("truncate after extend is a retraction (element-for-element)") {
    FinCategory base = chain3();
    FinCategory ext = grade_extend(base, {{"b", "c"}});
    FinCategory back = grade_truncate(ext, base.max_grade());
    back.name = base.name;
    CHECK(back == base);
    CHECK(validate_category(back).pass());
  }
}
