#include "sdepth/coeff.hpp"

#include <atomic>
#include <limits>

#include "sdepth/errors.hpp"

namespace sdepth {

namespace {

std::atomic<bool> g_verify{false};

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits64(i128 v) { return v <= kMax64 && v >= -kMax64; }

mpz_class mpz_from_i128(i128 v) {
  const bool negative = v < 0;
  u128 mag = abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

void set_verification(bool on) noexcept { g_verify.store(on, std::memory_order_relaxed); }
bool verification_enabled() noexcept { return g_verify.load(std::memory_order_relaxed); }

CoefField CoefField::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw DomainError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return CoefField(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

Coeff CoefField::make_rational(const mpq_class& v) const {
  if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p()) {
    long n = v.get_num().get_si();
    if (n != std::numeric_limits<long>::min()) return Coeff(n, v.get_den().get_si());
  }
  Coeff c;
  c.big_ = std::make_shared<const mpq_class>(v);
  return c;
}

Coeff CoefField::from_int(std::int64_t v) const {
  if (kind_ == Kind::PrimeField) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Coeff(r, 1);
  }
  if (v == std::numeric_limits<std::int64_t>::min()) return make_rational(mpq_class(mpz_class(std::to_string(v))));
  return Coeff(v, 1);
}

Coeff CoefField::from_mpz(const mpz_class& v) const {
  if (kind_ == Kind::PrimeField) {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return Coeff(r.get_si(), 1);
  }
  return make_rational(mpq_class(v));
}

Coeff CoefField::from_mpq(const mpq_class& v) const {
  if (v.get_den() == 0) throw DomainError("zero denominator");
  if (kind_ == Kind::PrimeField) {
    Coeff den = from_mpz(v.get_den());
    if (den.is_zero()) throw DomainError("denominator vanishes in characteristic " + std::to_string(p_));
    return div(from_mpz(v.get_num()), den);
  }
  mpq_class c(v);
  c.canonicalize();
  return make_rational(c);
}

mpq_class CoefField::to_mpq(const Coeff& a) const {
  if (a.big_) return *a.big_;
  return mpq_class(mpz_class(static_cast<long>(a.num_)), mpz_class(static_cast<long>(a.den_)));
}

Coeff CoefField::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::PrimeField) {
    std::uint64_t s = static_cast<std::uint64_t>(a.num_) + static_cast<std::uint64_t>(b.num_);
    if (s >= p_) s -= p_;
    return Coeff(static_cast<std::int64_t>(s), 1);
  }
  if (a.big_ || b.big_) return make_rational(to_mpq(a) + to_mpq(b));
  if (a.den_ == 1 && b.den_ == 1) {
    i128 s = static_cast<i128>(a.num_) + b.num_;
    if (fits64(s)) return Coeff(static_cast<std::int64_t>(s), 1);
    return make_rational(mpq_class(mpz_from_i128(s)));
  }
  i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  if (n == 0) return {};
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  n /= static_cast<i128>(g);
  d /= static_cast<i128>(g);
  if (fits64(n) && fits64(d)) return Coeff(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  return make_rational(q);
}

Coeff CoefField::neg(const Coeff& a) const {
  if (kind_ == Kind::PrimeField) return Coeff(a.num_ == 0 ? 0 : p_ - a.num_, 1);
  if (a.big_) return make_rational(-*a.big_);
  return Coeff(-a.num_, a.den_);
}

Coeff CoefField::sub(const Coeff& a, const Coeff& b) const { return add(a, neg(b)); }

Coeff CoefField::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::PrimeField) {
    std::uint64_t m = static_cast<std::uint64_t>(a.num_) * static_cast<std::uint64_t>(b.num_) % p_;
    return Coeff(static_cast<std::int64_t>(m), 1);
  }
  if (a.is_zero() || b.is_zero()) return {};
  if (a.big_ || b.big_) return make_rational(to_mpq(a) * to_mpq(b));
  i128 n = static_cast<i128>(a.num_) * b.num_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  if (d != 1) {
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits64(n) && fits64(d)) return Coeff(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
  return make_rational(q);
}

Coeff CoefField::inv(const Coeff& a) const {
  if (a.is_zero()) throw DomainError("division by zero");
  if (kind_ == Kind::PrimeField) {
    // Extended Euclid on (num, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a.num_;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return Coeff(t, 1);
  }
  if (a.big_) return make_rational(1 / *a.big_);
  if (a.num_ < 0) return Coeff(-a.den_, -a.num_);
  return Coeff(a.den_, a.num_);
}

bool CoefField::prints_negative(const Coeff& a) const {
  if (kind_ == Kind::PrimeField) return p_ > 2 && static_cast<std::uint64_t>(a.num_) > p_ / 2;
  if (a.big_) return sgn(*a.big_) < 0;
  return a.num_ < 0;
}

std::string CoefField::to_string(const Coeff& a) const {
  if (kind_ == Kind::PrimeField) {
    if (prints_negative(a)) return "-" + std::to_string(p_ - a.num_);
    return std::to_string(a.num_);
  }
  if (a.big_) return a.big_->get_str();
  if (a.den_ == 1) return std::to_string(a.num_);
  return std::to_string(a.num_) + "/" + std::to_string(a.den_);
}

std::string CoefField::name() const {
  if (kind_ == Kind::Rationals) return "QQ";
  return "FF(" + std::to_string(p_) + ")";
}

}  // namespace sdepth
