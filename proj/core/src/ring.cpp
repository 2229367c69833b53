#include "sdepth/ring.hpp"

#include <cctype>
#include <set>

#include "sdepth/errors.hpp"

namespace sdepth {

Monomial Monomial::variable(std::size_t index, std::uint16_t power) {
  Monomial m;
  m.exp[index] = power;
  m.degree = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = std::uint32_t{exp[i]} + other.exp[i];
    if (e > 0xFFFF) throw DomainError("exponent overflow");
    m.exp[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = degree + other.degree;
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exp[i] = static_cast<std::uint16_t>(exp[i] - divisor.exp[i]);
  m.degree = degree - divisor.degree;
  return m;
}

std::uint32_t Monomial::support() const noexcept {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exp[i] != 0) s |= 1u << i;
  return s;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
    m.degree += m.exp[i];
  }
  return m;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept { return (a.support() & b.support()) == 0; }

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

PolyRing::PolyRing(CoefField field, std::vector<std::string> vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  if (vars_.empty() || vars_.size() > kMaxVars)
    throw StructuralError("a ring needs between 1 and 12 variables, got " + std::to_string(vars_.size()));
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_identifier(v)) throw StructuralError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw StructuralError("duplicate variable name '" + v + "'");
  }
}

int PolyRing::var_index(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string PolyRing::monomial_to_string(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_[i];
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

std::string PolyRing::description() const {
  std::string out = field_.name() + "[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ',';
    out += vars_[i];
  }
  out += "] ";
  out += order_ == MonomialOrder::Lex ? "lex" : "grevlex";
  return out;
}

RingPtr make_ring(CoefField field, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(vars), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace sdepth
