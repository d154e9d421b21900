#include "hsg/ring.hpp"

#include <algorithm>

#include "hsg/error.hpp"

namespace hsg::tower {

int FinRing::index(const std::string &element) const {
  auto it = std::find(elements.begin(), elements.end(), element);
  if (it == elements.end())
    fail(ErrorCode::not_found, "ring " + name + ": unknown element " + element);
  return static_cast<int>(it - elements.begin());
}

std::optional<int> FinRing::negate(int a) const {
  for (int b = 0; b < static_cast<int>(elements.size()); ++b)
    if (add_at(a, b) == zero)
      return b;
  return std::nullopt;
}

Report validate_ring(const FinRing &r) {
  const int n = static_cast<int>(r.elements.size());
  if (n == 0)
    fail(ErrorCode::malformed_input, "ring " + r.name + " has no elements");
  if (static_cast<int>(r.add.size()) != n || static_cast<int>(r.mul.size()) != n)
    fail(ErrorCode::malformed_input, "ring " + r.name + ": table size mismatch");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(r.add[a].size()) != n ||
        static_cast<int>(r.mul[a].size()) != n)
      fail(ErrorCode::malformed_input, "ring " + r.name + ": table row size");
    for (int b = 0; b < n; ++b)
      if (r.add[a][b] < 0 || r.add[a][b] >= n || r.mul[a][b] < 0 ||
          r.mul[a][b] >= n)
        fail(ErrorCode::malformed_input,
             "ring " + r.name + ": table entry out of range");
  }

  Report report;
  const std::string loc = "ring " + r.name;
  auto el = [&](int i) { return r.elements[static_cast<std::size_t>(i)]; };

  for (int a = 0; a < n; ++a) {
    if (r.add_at(a, r.zero) != a)
      report.add("add-identity", el(a) + " + 0 != " + el(a), loc);
    if (r.mul_at(a, r.one) != a)
      report.add("mul-identity", el(a) + " · 1 != " + el(a), loc);
    if (!r.negate(a))
      report.add("add-inverse", el(a) + " has no additive inverse", loc);
    for (int b = 0; b < n; ++b) {
      if (r.add_at(a, b) != r.add_at(b, a))
        report.add("add-commutative", el(a) + " + " + el(b), loc);
      if (r.mul_at(a, b) != r.mul_at(b, a))
        report.add("mul-commutative", el(a) + " · " + el(b), loc);
      for (int c = 0; c < n; ++c) {
        if (r.add_at(r.add_at(a, b), c) != r.add_at(a, r.add_at(b, c)))
          report.add("add-associative",
                     "(" + el(a) + "+" + el(b) + ")+" + el(c), loc);
        if (r.mul_at(r.mul_at(a, b), c) != r.mul_at(a, r.mul_at(b, c)))
          report.add("mul-associative",
                     "(" + el(a) + "·" + el(b) + ")·" + el(c), loc);
        if (r.mul_at(a, r.add_at(b, c)) !=
            r.add_at(r.mul_at(a, b), r.mul_at(a, c)))
          report.add("distributive",
                     el(a) + "·(" + el(b) + "+" + el(c) + ")", loc);
      }
    }
  }
  return report;
}

FinRing zmod(int n) {
  if (n < 1 || n > 32)
    fail(ErrorCode::capacity, "zmod: modulus out of range");
  FinRing r;
  r.name = "Z/" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    r.elements.push_back(std::to_string(i));
  r.add.assign(n, std::vector<int>(n));
  r.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      r.add[a][b] = (a + b) % n;
      r.mul[a][b] = (a * b) % n;
    }
  r.zero = 0;
  r.one = (n == 1) ? 0 : 1;
  return r;
}

std::optional<ZeroDivisorWitness> find_zero_divisors(const FinRing &r) {
  const int n = static_cast<int>(r.elements.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != r.zero && b != r.zero && r.mul_at(a, b) == r.zero)
        return ZeroDivisorWitness{r.elements[static_cast<std::size_t>(a)],
                                  r.elements[static_cast<std::size_t>(b)]};
  return std::nullopt;
}

// --- free ring ---------------------------------------------------------------

void FreeRingElement::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

FreeRingElement FreeRingElement::constant(const BigInt &c, std::size_t arity) {
  FreeRingElement e(arity);
  if (c != 0)
    e.terms_[std::vector<unsigned>(arity, 0)] = c;
  return e;
}

FreeRingElement FreeRingElement::generator(std::size_t i, std::size_t arity) {
  if (i >= arity)
    fail(ErrorCode::malformed_input, "free ring: generator index out of range");
  FreeRingElement e(arity);
  std::vector<unsigned> mono(arity, 0);
  mono[i] = 1;
  e.terms_[mono] = 1;
  return e;
}

FreeRingElement operator+(const FreeRingElement &a, const FreeRingElement &b) {
  if (a.arity_ != b.arity_)
    fail(ErrorCode::malformed_input, "free ring: arity mismatch in +");
  FreeRingElement out = a;
  for (const auto &[mono, coeff] : b.terms_)
    out.terms_[mono] += coeff;
  out.prune();
  return out;
}

FreeRingElement operator*(const FreeRingElement &a, const FreeRingElement &b) {
  if (a.arity_ != b.arity_)
    fail(ErrorCode::malformed_input, "free ring: arity mismatch in *");
  FreeRingElement out(a.arity_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      std::vector<unsigned> mono(a.arity_);
      for (std::size_t i = 0; i < a.arity_; ++i)
        mono[i] = ma[i] + mb[i];
      out.terms_[mono] += ca * cb;
    }
  out.prune();
  return out;
}

FreeRingElement FreeRingElement::operator-() const {
  FreeRingElement out(arity_);
  for (const auto &[mono, coeff] : terms_)
    out.terms_[mono] = -coeff;
  return out;
}

std::string
FreeRingElement::str(const std::vector<std::string> &generators) const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &[mono, coeff] : terms_) {
    if (!out.empty())
      out += " + ";
    std::string monostr;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0)
        continue;
      if (!monostr.empty())
        monostr += "·";
      monostr += generators[i];
      if (mono[i] > 1)
        monostr += "^" + std::to_string(mono[i]);
    }
    if (monostr.empty())
      out += coeff.get_str();
    else if (coeff == 1)
      out += monostr;
    else
      out += coeff.get_str() + "·" + monostr;
  }
  return out;
}

// --- evaluation -----------------------------------------------------------------

namespace {

// c·1 in the ring, for an arbitrary-precision integer c
int scale_one(const FinRing &r, const BigInt &c) {
  BigInt n = c;
  bool negative = n < 0;
  if (negative)
    n = -n;
  int acc = r.zero;
  // binary ladder on repeated addition
  int power = r.one;
  mp_bitcnt_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (mp_bitcnt_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i))
      acc = r.add_at(acc, power);
    power = r.add_at(power, power);
  }
  if (negative) {
    auto neg = r.negate(acc);
    if (!neg)
      fail(ErrorCode::malformed_input,
           "ring " + r.name + " has no additive inverse for scaled one");
    return *neg;
  }
  return acc;
}

} // namespace

int RingHom::eval(const FreeRingElement &e) const {
  if (!target)
    fail(ErrorCode::malformed_input, "ring hom has no target");
  if (e.arity() != images.size())
    fail(ErrorCode::malformed_input,
         "element arity does not match the generator images");
  int acc = target->zero;
  for (const auto &[mono, coeff] : e.terms()) {
    int term = scale_one(*target, coeff);
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (unsigned p = 0; p < mono[i]; ++p)
        term = target->mul_at(term, images[i]);
    acc = target->add_at(acc, term);
  }
  return acc;
}

RingHom free_ring_hom(const std::vector<int> &generator_images,
                      const FinRing &target) {
  for (int img : generator_images)
    if (img < 0 || img >= static_cast<int>(target.elements.size()))
      fail(ErrorCode::malformed_input, "generator image out of range");
  return RingHom{&target, generator_images};
}

// --- universal property -----------------------------------------------------------

namespace {

// deterministic polynomial sample: constants, generators, and their small
// sums/products, enough to separate and to exercise the hom laws
std::vector<FreeRingElement> polynomial_sample(std::size_t arity) {
  std::vector<FreeRingElement> out;
  out.push_back(FreeRingElement::constant(0, arity));
  out.push_back(FreeRingElement::constant(1, arity));
  out.push_back(FreeRingElement::constant(-1, arity));
  out.push_back(FreeRingElement::constant(3, arity));
  for (std::size_t i = 0; i < arity; ++i) {
    auto x = FreeRingElement::generator(i, arity);
    out.push_back(x);
    out.push_back(x * x);
    out.push_back(x * x + x);
    out.push_back(x + FreeRingElement::constant(2, arity));
  }
  if (arity == 2) {
    auto x = FreeRingElement::generator(0, arity);
    auto y = FreeRingElement::generator(1, arity);
    out.push_back(x * y);
    out.push_back(x * y + -y);
    out.push_back((x + y) * (x + -y));
  }
  return out;
}

} // namespace

Report check_free_ring_universal(std::size_t n_generators, const FinRing &target,
                                 const UniversalCheckOptions &opts) {
  if (n_generators > opts.max_generators ||
      target.elements.size() > opts.max_ring)
    fail(ErrorCode::capacity, "check_free_ring_universal: fixture above cap");

  Report report;
  const std::string loc =
      "free-ring Z[" + std::to_string(n_generators) + "] -> " + target.name;
  const int n = static_cast<int>(target.elements.size());

  // all assignments S -> |target|
  std::vector<std::vector<int>> assignments{{}};
  for (std::size_t g = 0; g < n_generators; ++g) {
    std::vector<std::vector<int>> next;
    for (const auto &a : assignments)
      for (int i = 0; i < n; ++i) {
        auto b = a;
        b.push_back(i);
        next.push_back(std::move(b));
      }
    assignments = std::move(next);
  }

  const auto sample = polynomial_sample(n_generators);
  for (const auto &assignment : assignments) {
    RingHom hom = free_ring_hom(assignment, target);
    // hom laws on the sample, pairwise
    for (const auto &p : sample)
      for (const auto &q : sample) {
        if (hom.eval(p + q) != target.add_at(hom.eval(p), hom.eval(q)))
          report.add("hom-additive",
                     "h(p+q) != h(p)+h(q) for p=" + p.str({"x", "y"}) +
                         ", q=" + q.str({"x", "y"}),
                     loc);
        if (hom.eval(p * q) != target.mul_at(hom.eval(p), hom.eval(q)))
          report.add("hom-multiplicative",
                     "h(p·q) != h(p)·h(q) for p=" + p.str({"x", "y"}) +
                         ", q=" + q.str({"x", "y"}),
                     loc);
      }
    if (hom.eval(FreeRingElement::constant(1, n_generators)) != target.one)
      report.add("hom-unital", "h(1) != 1", loc);
  }

  // distinctness: separated on generators
  for (std::size_t i = 0; i < assignments.size(); ++i)
    for (std::size_t j = i + 1; j < assignments.size(); ++j) {
      bool separated = n_generators == 0 ? false : true;
      if (n_generators > 0) {
        separated = false;
        RingHom hi = free_ring_hom(assignments[i], target);
        RingHom hj = free_ring_hom(assignments[j], target);
        for (std::size_t g = 0; g < n_generators; ++g) {
          auto x = FreeRingElement::generator(g, n_generators);
          if (hi.eval(x) != hj.eval(x))
            separated = true;
        }
        if (!separated)
          report.add("hom-distinct",
                     "two distinct assignments give the same hom", loc);
      }
    }

  // count law |target|^|S|
  std::size_t expected = 1;
  for (std::size_t g = 0; g < n_generators; ++g)
    expected *= static_cast<std::size_t>(n);
  if (assignments.size() != expected)
    report.add("hom-count",
               "assignment count " + std::to_string(assignments.size()) +
                   " != " + std::to_string(expected),
               loc);
  return report;
}

FinRing fraction_field(const FinRing &domain) {
  Report laws = validate_ring(domain);
  if (!laws.pass())
    fail(ErrorCode::precondition,
         "fraction_field: input is not a commutative ring: " +
             laws.findings.front().message);
  if (auto witness = find_zero_divisors(domain))
    fail(ErrorCode::precondition, "fraction_field: not an integral domain: " +
                                      witness->a + " · " + witness->b +
                                      " = 0");
  if (domain.elements.size() == 1)
    fail(ErrorCode::precondition,
         "fraction_field: the zero ring is not an integral domain");
  // a finite integral domain is a field; the embedding is the identity
  return domain;
}

} // namespace hsg::tower
