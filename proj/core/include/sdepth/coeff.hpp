#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace sdepth {

// A field element. Rationals that fit in a pair of int64 are held inline;
// larger values spill to a shared immutable mpq. Prime-field elements are
// always inline, reduced into [0, p).
//
// Representation is canonical for a fixed field: a value is inline iff it
// fits, so structural equality is value equality.
class Coeff {
 public:
  Coeff() = default;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_inline() const noexcept { return !big_; }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    if (a.big_ || b.big_) {
      if (!a.big_ || !b.big_) return false;
      return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  friend class CoefField;
  Coeff(std::int64_t n, std::int64_t d) : num_(n), den_(d) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

// Coefficient field: the rationals or Z/p for a prime 2 <= p < 2^31.
class CoefField {
 public:
  enum class Kind { Rationals, PrimeField };

  static CoefField rationals() { return CoefField(Kind::Rationals, 0); }
  // Throws DomainError unless p is prime and below 2^31.
  static CoefField prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  // 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff zero() const { return {}; }
  Coeff one() const { return Coeff(1, 1); }
  Coeff from_int(std::int64_t v) const;
  Coeff from_mpz(const mpz_class& v) const;
  // Throws DomainError when den == 0 or (over Z/p) den is divisible by p.
  Coeff from_mpq(const mpq_class& v) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  // Throws DomainError on zero.
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  bool is_one(const Coeff& a) const noexcept { return !a.big_ && a.num_ == 1 && a.den_ == 1; }
  // Sign for display: over Z/p values above p/2 print as negatives.
  bool prints_negative(const Coeff& a) const;

  mpq_class to_mpq(const Coeff& a) const;
  std::string to_string(const Coeff& a) const;

  friend bool operator==(const CoefField& a, const CoefField& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  std::string name() const;

 private:
  CoefField(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Coeff make_rational(const mpq_class& v) const;

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace sdepth
