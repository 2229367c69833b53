#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sdepth/coeff.hpp"

namespace sdepth {

inline constexpr std::size_t kMaxVars = 12;

enum class MonomialOrder { Lex, GrevLex };

// Exponent vector. Unused trailing slots are zero, so monomials from rings
// with different variable counts never compare equal by accident.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};
  std::uint32_t degree = 0;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t index, std::uint16_t power = 1);

  bool is_one() const noexcept { return degree == 0; }
  bool divides(const Monomial& other) const noexcept;
  // Throws DomainError on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  // Precondition: divisor divides *this.
  Monomial operator/(const Monomial& divisor) const;
  // Bitmask of variables with a positive exponent.
  std::uint32_t support() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exp == b.exp; }
};

Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
bool coprime(const Monomial& a, const Monomial& b) noexcept;

// k[x_1..x_n] with a fixed monomial order; 1 <= n <= 12.
class PolyRing {
 public:
  // Throws StructuralError on bad variable names or counts.
  PolyRing(CoefField field, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::GrevLex);

  const CoefField& field() const noexcept { return field_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  MonomialOrder order() const noexcept { return order_; }

  // Index of a variable name, or -1.
  int var_index(std::string_view name) const noexcept;

  // Three-way comparison in the ring's order: negative, zero or positive.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    if (order_ == MonomialOrder::GrevLex) {
      if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
      for (std::size_t i = vars_.size(); i-- > 0;)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
      return 0;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
    return 0;
  }

  std::string monomial_to_string(const Monomial& m) const;
  std::string description() const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  CoefField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(CoefField field, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::GrevLex);

// Pointer-equal or structurally equal.
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

}  // namespace sdepth
