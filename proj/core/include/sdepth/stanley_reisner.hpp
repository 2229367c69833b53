#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdepth/groebner.hpp"
#include "sdepth/homology.hpp"

namespace sdepth {

// Faces are bitmasks over vertices 0..n-1.
using Face = std::uint32_t;

inline int face_size(Face f) noexcept { return __builtin_popcount(f); }

// Simplicial complex given by its facets on at most 12 vertices. The void
// complex has no faces at all; the empty complex {∅} has only the empty
// face. Links of facets are the empty complex, never the void one.
class SimplicialComplex {
 public:
  // Non-maximal facets are discarded. Throws StructuralError for vertices
  // outside [0, n) or n > 12.
  SimplicialComplex(std::size_t vertex_count, std::vector<Face> facets);

  static SimplicialComplex void_complex(std::size_t n) { return {n, {}}; }
  static SimplicialComplex empty_complex(std::size_t n) { return {n, {0}}; }
  static SimplicialComplex simplex(std::size_t n);
  static SimplicialComplex simplex_boundary(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool contains(Face f) const noexcept;
  // Every face, including ∅ for a non-void complex; by size, then value.
  std::vector<Face> faces() const;
  // -1 for {∅}; the void complex reports -2.
  int dimension() const noexcept;

  // `{1,2,3}, {1,4}` with 1-based vertices.
  std::string facets_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t n_;
  std::vector<Face> facets_;
};

// Squarefree monomial ideal of the minimal non-faces. Throws StructuralError
// when the ring's variable count differs from the vertex count.
Ideal stanley_reisner_ideal(const SimplicialComplex& complex, const RingPtr& ring);

// lk(σ) = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}. Throws ContractError if σ is not a face.
SimplicialComplex link(const SimplicialComplex& complex, Face sigma);

// Ranks of reduced simplicial cohomology in degrees -1 .. dim.
struct CohomologyProfile {
  std::vector<std::size_t> ranks;  // ranks[d + 1] is the rank in degree d

  std::size_t rank(int degree) const noexcept;
  int max_degree() const noexcept { return static_cast<int>(ranks.size()) - 2; }
  long euler_characteristic() const noexcept;
  bool vanishes() const noexcept;
};

CohomologyProfile reduced_cohomology(const SimplicialComplex& complex, const CoefField& field);

// Σ over faces (∅ included) of (-1)^dim.
long reduced_euler_characteristic(const SimplicialComplex& complex);

// Least i with H^i_m(k[Δ]) != 0, decided face by face: some σ has nonzero
// reduced cohomology of lk(σ) in degree i - |σ| - 1. Infinite for the void
// complex (k[Δ] = 0).
ScanResult hochster_depth(const SimplicialComplex& complex, const CoefField& field, std::size_t bound);

}  // namespace sdepth
