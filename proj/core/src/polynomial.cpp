#include "sdepth/polynomial.hpp"

#include <algorithm>

#include "sdepth/errors.hpp"

namespace sdepth {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b) throw StructuralError("polynomial without a ring");
  if (!same_ring(a, b)) throw StructuralError("ring mismatch: " + a->description() + " vs " + b->description());
}

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) { return monomial(std::move(ring), c, Monomial::one()); }

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Coeff k = ring->field().from_int(c);
  return monomial(std::move(ring), k, Monomial::one());
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw StructuralError("variable index out of range");
  Coeff one = ring->field().one();
  return monomial(std::move(ring), one, Monomial::variable(index));
}

Polynomial Polynomial::monomial(RingPtr ring, const Coeff& c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = r.field().add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

std::uint32_t Polynomial::total_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({ring_->field().neg(t.coeff), t.mono});
  return p;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({ring_->field().mul(t.coeff, c), t.mono});
  return p;
}

Polynomial Polynomial::times_term(const Coeff& c, const Monomial& m) const {
  Polynomial p(ring_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({ring_->field().mul(t.coeff, c), t.mono * m});
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const CoefField& field = ring_->field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = field.prints_negative(t.coeff);
    Coeff mag = negative ? field.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += field.to_string(mag);
    } else {
      if (!field.is_one(mag)) out += field.to_string(mag) + "*";
      out += ring_->monomial_to_string(t.mono);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (!a.terms_.empty() && !same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  return true;
}

namespace {

// f + c*m*g for canonical f, g.
std::vector<Term> merge_axpy(const PolyRing& ring, const std::vector<Term>& f, const Coeff& c, const Monomial& m,
                             const std::vector<Term>& g) {
  const CoefField& field = ring.field();
  std::vector<Term> out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == f.size() ? -1 : ring.compare(f[i].mono, gm);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({field.mul(c, g[j].coeff), gm});
      ++j;
    } else {
      Coeff s = field.add(f[i].coeff, field.mul(c, g[j].coeff));
      if (!s.is_zero()) out.push_back({s, gm});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  return Polynomial::from_sorted(f.ring(),
                                 merge_axpy(*f.ring(), f.terms(), f.ring()->field().one(), Monomial::one(), g.terms()));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  const CoefField& field = f.ring()->field();
  return Polynomial::from_sorted(f.ring(),
                                 merge_axpy(*f.ring(), f.terms(), field.neg(field.one()), Monomial::one(), g.terms()));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  const CoefField& field = f.ring()->field();
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) terms.push_back({field.mul(a.coeff, b.coeff), a.mono * b.mono});
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial pow(const Polynomial& f, unsigned e) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Term leading_term(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  return f.terms().front();
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& d : divisors) {
    if (d.is_zero()) throw DomainError("division by the zero polynomial");
    require_same_ring(f.ring(), d.ring());
  }
  const RingPtr& ring = f.ring();
  const CoefField& field = ring->field();
  DivisionResult out;
  out.quotients.assign(divisors.size(), Polynomial(ring));
  std::vector<std::vector<Term>> q(divisors.size());
  std::vector<Term> rem;
  std::vector<Term> p = f.terms();
  while (!p.empty()) {
    const Term lead = p.front();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& dl = divisors[i].terms().front();
      if (!dl.mono.divides(lead.mono)) continue;
      Coeff c = field.div(lead.coeff, dl.coeff);
      Monomial m = lead.mono / dl.mono;
      q[i].push_back({c, m});
      p = merge_axpy(*ring, p, field.neg(c), m, divisors[i].terms());
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(lead);
      p.erase(p.begin());
    }
  }
  for (std::size_t i = 0; i < divisors.size(); ++i) out.quotients[i] = Polynomial::from_sorted(ring, std::move(q[i]));
  out.remainder = Polynomial::from_sorted(ring, std::move(rem));

  if (verification_enabled()) {
    Polynomial check = out.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) check = check + out.quotients[i] * divisors[i];
    if (!(check == f)) throw ContractError("division identity failed");
  }
  return out;
}

}  // namespace sdepth
