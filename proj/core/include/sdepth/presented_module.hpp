#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sdepth/groebner.hpp"

namespace sdepth {

// Dense matrix of polynomials, row-major.
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> entries;

  static PolyMatrix zeros(const RingPtr& ring, std::size_t rows, std::size_t cols);
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries.at(r * cols + c); }
  Polynomial& at(std::size_t r, std::size_t c) { return entries.at(r * cols + c); }
  PolyMatrix transposed() const;
  FreeModuleElement column(std::size_t c) const;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

// M = coker(R^m -> R^s), relations are the images of the m basis vectors.
// Ambient rank 0 is the zero module.
class PresentedModule {
 public:
  PresentedModule(RingPtr ring, std::size_t ambient_rank, const std::vector<FreeModuleElement>& relations);

  static PresentedModule free(RingPtr ring, std::size_t rank);
  static PresentedModule zero(RingPtr ring) { return free(std::move(ring), 0); }
  // R/J as a cyclic module.
  static PresentedModule quotient_ring(const Ideal& ideal);
  // Relations already in TOP order; zero vectors are dropped.
  static PresentedModule from_vectors(RingPtr ring, std::size_t ambient_rank, std::vector<detail::ModVec> relations);
  // As from_vectors, with the relation Groebner basis already known.
  static PresentedModule with_known_gb(RingPtr ring, std::size_t ambient_rank, std::vector<detail::ModVec> relations,
                                       std::vector<detail::ModVec> gb);
  // M^copies, block diagonal; the basis is assembled from M's basis.
  static PresentedModule power(const PresentedModule& m, std::size_t copies);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t ambient_rank() const noexcept { return rank_; }
  std::size_t relation_count() const noexcept { return relations_.size(); }
  std::vector<FreeModuleElement> relations() const;
  const std::vector<detail::ModVec>& relation_vectors() const noexcept { return relations_; }

  // Reduced TOP Groebner basis of the relation submodule, computed once.
  const std::vector<detail::ModVec>& relation_gb() const;

  // `coker [[row0...],[row1...]]`; rows index the ambient basis.
  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<detail::ModVec> gb;
  };
  RingPtr ring_;
  std::size_t rank_;
  std::vector<detail::ModVec> relations_;
  std::shared_ptr<Cache> cache_;
};

// Homomorphism of presented modules, given on ambient free modules by the
// images of the source basis vectors (columns in the target ambient).
struct ModuleMap {
  PresentedModule source;
  PresentedModule target;
  std::vector<detail::ModVec> columns;

  static ModuleMap from_matrix(PresentedModule source, PresentedModule target, const PolyMatrix& matrix);
  static ModuleMap identity(const PresentedModule& m);
  static ModuleMap zero(const PresentedModule& source, const PresentedModule& target);
  // m -> a m.
  static ModuleMap multiplication(const PresentedModule& m, const Polynomial& a);

  // Image of an ambient vector of the source.
  detail::ModVec apply(const detail::ModVec& v) const;
};

// f(relations(source)) lies in relations(target).
bool is_well_defined(const ModuleMap& f);

bool is_zero(const PresentedModule& m);
Ideal annihilator(const PresentedModule& m);
// dim R/Ann(M), read off the leading terms of the relation basis; -1 for 0.
int krull_dim(const PresentedModule& m);

// 0 :_M a = ker(M -a-> M). For a = 0 this is M itself.
PresentedModule colon_by_element(const PresentedModule& m, const Polynomial& a);
// M / J M.
PresentedModule quotient_by_ideal(const PresentedModule& m, const Ideal& j);
// Throws ContractError if f is not well defined.
PresentedModule kernel_of_map(const ModuleMap& f);
// ker(d_out) / im(d_in). Throws ContractError unless d_out o d_in = 0.
PresentedModule homology_at(const ModuleMap& d_in, const ModuleMap& d_out);
PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

namespace detail {

// (U + span rels) / span rels presented on the generators of U, where
// `rels_gb` is a TOP Groebner basis of the relation span.
PresentedModule subquotient(const RingPtr& ring, std::vector<ModVec> gens, const std::vector<ModVec>& rels_gb);

}  // namespace detail

}  // namespace sdepth
