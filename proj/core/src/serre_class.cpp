#include "sdepth/serre_class.hpp"

#include "sdepth/errors.hpp"

namespace sdepth {

SerreClass SerreClass::dim_le(int k) {
  if (k < 0) throw DomainError("dim<=k needs k >= 0");
  return {Kind::DimLE, k};
}

std::string SerreClass::to_string() const {
  if (kind == Kind::Zero) return "zero";
  return "dim<=" + std::to_string(k);
}

bool membership(const PresentedModule& m, const SerreClass& s) {
  if (s.kind == SerreClass::Kind::Zero) return is_zero(m);
  return krull_dim(m) <= s.k;
}

}  // namespace sdepth
