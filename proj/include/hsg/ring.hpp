#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsg/rational.hpp"
#include "hsg/report.hpp"

namespace hsg::tower {

// Finite commutative ring presented by element labels and operation tables.
struct FinRing {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> add; // index tables
  std::vector<std::vector<int>> mul;
  int zero = 0;
  int one = 0;

  int index(const std::string &element) const;
  int add_at(int a, int b) const { return add[a][b]; }
  int mul_at(int a, int b) const { return mul[a][b]; }
  std::optional<int> negate(int a) const; // additive inverse, if any
};

// Commutative ring axioms, checked extensionally over the whole tables.
Report validate_ring(const FinRing &r);

// ℤ/n with elements "0".."n-1".
FinRing zmod(int n);

struct ZeroDivisorWitness {
  std::string a;
  std::string b;
};

std::optional<ZeroDivisorWitness> find_zero_divisors(const FinRing &r);

// Element of ℤ[x₀..x_{k-1}] in canonical form: exponent-vector monomials in
// sorted order, no zero coefficients.
class FreeRingElement {
public:
  explicit FreeRingElement(std::size_t arity) : arity_(arity) {}
  static FreeRingElement constant(const BigInt &c, std::size_t arity);
  static FreeRingElement generator(std::size_t i, std::size_t arity);

  std::size_t arity() const { return arity_; }
  const std::map<std::vector<unsigned>, BigInt> &terms() const {
    return terms_;
  }

  friend FreeRingElement operator+(const FreeRingElement &a,
                                   const FreeRingElement &b);
  friend FreeRingElement operator*(const FreeRingElement &a,
                                   const FreeRingElement &b);
  FreeRingElement operator-() const;

  bool operator==(const FreeRingElement &other) const {
    return arity_ == other.arity_ && terms_ == other.terms_;
  }

  std::string str(const std::vector<std::string> &generators) const;

private:
  std::size_t arity_;
  std::map<std::vector<unsigned>, BigInt> terms_;
  void prune();
};

// Evaluation hom ℤ[S] -> target determined by generator images.
struct RingHom {
  const FinRing *target = nullptr;
  std::vector<int> images; // one per generator

  int eval(const FreeRingElement &e) const;
};

RingHom free_ring_hom(const std::vector<int> &generator_images,
                      const FinRing &target);

struct UniversalCheckOptions {
  std::size_t max_generators = 2;
  std::size_t max_ring = 8;
};

// The free-ring universal property at desk scale: every generator assignment
// S -> |target| extends to a hom, distinct assignments stay distinct, and the
// hom count equals |target|^|S|, cross-checked against brute-force
// enumeration of assignments with the hom laws verified on a polynomial
// sample.
Report check_free_ring_universal(std::size_t n_generators, const FinRing &target,
                                 const UniversalCheckOptions &opts = {});

// Frac on a finite integral domain: a finite domain is already a field, so
// the carrier is returned unchanged (identity embedding). Zero divisors are
// rejected with a witness pair.
FinRing fraction_field(const FinRing &domain);

} // namespace hsg::tower
