#pragma once

#include <span>
#include <string>
#include <vector>

#include "sdepth/ring.hpp"

namespace sdepth {

struct Term {
  Coeff coeff;
  Monomial mono;
};

// Element of a PolyRing in canonical form: nonzero coefficients, distinct
// monomials, strictly descending in the ring's order. Zero is the empty
// term list. Values are immutable once built.
class Polynomial {
 public:
  // Ring-less zero; only useful as a placeholder before assignment.
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Coeff& c, const Monomial& m);
  // Sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  // Trusts the caller: terms already canonical.
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::uint32_t total_degree() const noexcept;

  Polynomial operator-() const;
  Polynomial scaled(const Coeff& c) const;
  Polynomial times_term(const Coeff& c, const Monomial& m) const;
  // Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Ring mismatches throw StructuralError.
Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, unsigned e);

// Order-maximal term. Throws DomainError on the zero polynomial.
Term leading_term(const Polynomial& f);

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division: f = sum q_i d_i + r with no term of r divisible by
// any lt(d_i). The first divisor whose leading term divides wins.
// Throws DomainError on a zero divisor polynomial.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace sdepth
