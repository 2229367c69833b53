#pragma once

// Sparse vectors of R^s as single sorted term lists. This is the working
// representation of the Groebner engine; Polynomial is the rank-1 case.

#include <cstdint>
#include <vector>

#include "sdepth/polynomial.hpp"

namespace sdepth::detail {

struct VTerm {
  Coeff coeff;
  Monomial mono;
  std::uint32_t comp = 0;
};

using ModVec = std::vector<VTerm>;

enum class ModuleOrderKind { TermOverPosition, PositionOverTerm };

// Module term order. Components below `split` rank above every component at
// or beyond it (block elimination); inside a block the kind decides.
// Lower component index is the larger basis vector.
struct ModuleOrder {
  const PolyRing* ring = nullptr;
  ModuleOrderKind kind = ModuleOrderKind::TermOverPosition;
  std::uint32_t split = 0;

  int compare(const Monomial& ma, std::uint32_t ca, const Monomial& mb, std::uint32_t cb) const noexcept {
    if (split != 0) {
      bool ha = ca < split, hb = cb < split;
      if (ha != hb) return ha ? 1 : -1;
    }
    if (kind == ModuleOrderKind::PositionOverTerm) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return ring->compare(ma, mb);
    }
    int c = ring->compare(ma, mb);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const VTerm& a, const VTerm& b) const noexcept { return compare(a.mono, a.comp, b.mono, b.comp); }
};

// f + c * m * g, both sorted under `ord`.
ModVec axpy(const ModVec& f, const Coeff& c, const Monomial& m, const ModVec& g, const ModuleOrder& ord);
ModVec add(const ModVec& f, const ModVec& g, const ModuleOrder& ord);
ModVec scale(const ModVec& f, const Coeff& c, const CoefField& field);
ModVec times_poly(const Polynomial& p, const ModVec& v, const ModuleOrder& ord);
void make_monic(ModVec& f, const CoefField& field);
void sort_terms(ModVec& f, const ModuleOrder& ord);
// Shift every component by `offset`.
ModVec shifted(const ModVec& f, std::int64_t offset);

ModVec from_poly(const Polynomial& p, std::uint32_t comp = 0);
// Component `comp` of v as a polynomial.
Polynomial component(const ModVec& v, std::uint32_t comp, const RingPtr& ring);
ModVec from_components(const std::vector<Polynomial>& comps, const ModuleOrder& ord);
std::vector<Polynomial> to_components(const ModVec& v, std::size_t rank, const RingPtr& ring);

}  // namespace sdepth::detail
