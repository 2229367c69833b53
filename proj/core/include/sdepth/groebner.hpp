#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "sdepth/detail/modvec.hpp"
#include "sdepth/polynomial.hpp"

namespace sdepth {

using detail::ModuleOrderKind;

// Element of the free module R^rank.
struct FreeModuleElement {
  std::vector<Polynomial> components;

  std::size_t rank() const noexcept { return components.size(); }
  bool is_zero() const noexcept;
  std::string to_string() const;

  static FreeModuleElement zero(const RingPtr& ring, std::size_t rank);
  static FreeModuleElement basis_vector(const RingPtr& ring, std::size_t rank, std::size_t index);

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
    return a.components == b.components;
  }
};

// Reduced Groebner basis of an ideal (rank 1) or of a submodule of R^rank.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::size_t rank, ModuleOrderKind kind, std::vector<detail::ModVec> elements);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  ModuleOrderKind module_order() const noexcept { return kind_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  // Rank-1 view. Throws StructuralError for rank > 1.
  std::vector<Polynomial> polynomials() const;
  std::vector<FreeModuleElement> elements() const;
  // Leading monomials of the elements whose lead sits in `comp`.
  std::vector<Monomial> leading_monomials(std::size_t comp = 0) const;

  const std::vector<detail::ModVec>& vectors() const noexcept { return elements_; }
  detail::ModuleOrder order() const noexcept { return {ring_.get(), kind_, 0}; }
  detail::ModVec reduce(detail::ModVec f) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  RingPtr ring_;
  std::size_t rank_;
  ModuleOrderKind kind_;
  std::vector<detail::ModVec> elements_;
};

// Reduced Groebner basis of the ideal generated by `gens` (zero allowed).
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens);
// Reduced Groebner basis of a submodule of R^rank. Mixed ranks throw
// StructuralError.
GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, std::span<const FreeModuleElement> gens,
                         ModuleOrderKind kind = ModuleOrderKind::TermOverPosition);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);
FreeModuleElement normal_form(const FreeModuleElement& f, const GroebnerBasis& gb);

// Generators of the kernel of R^m -> R^s, e_i -> gens_i. Throws
// StructuralError on an empty list or mixed ranks.
std::vector<FreeModuleElement> syzygies(std::span<const Polynomial> gens);
std::vector<FreeModuleElement> syzygies(std::span<const FreeModuleElement> gens);

// Krull dimension of R / (monomials): the size of the largest variable set T
// such that no monomial has support inside T. -1 when a monomial is 1.
int monomial_dim(std::span<const Monomial> monomials, std::size_t nvars);

// Ideal with a lazily computed, shared reduced Groebner basis.
class Ideal {
 public:
  // Zero generators are dropped; ring mismatches throw StructuralError.
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal maximal(const RingPtr& ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }

  const GroebnerBasis& groebner() const;
  bool contains(const Polynomial& f) const;
  bool is_unit() const;
  // dim R/I; -1 when I is the whole ring.
  int dim() const;

  std::string to_string() const;

  // Same ideal (reduced Groebner bases agree).
  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  struct Cache {
    std::once_flag once;
    std::unique_ptr<const GroebnerBasis> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// (I : f) = {g : g f in I}. Throws DomainError when f = 0.
Ideal colon_ideal(const Ideal& ideal, const Polynomial& f);

namespace detail {

// Generators of {c in R^k : sum_j c_j gens_j lies in the span of `rels`},
// where gens and rels live in R^rank under TOP. `rels_gb`, when given, is a
// TOP Groebner basis seeded as-is; `rels` are added on top of it.
// The result is pruned of generators lying in the span of the others.
std::vector<ModVec> relation_module(const RingPtr& ring, std::size_t rank, std::span<const ModVec> gens,
                                    std::span<const ModVec> rels, const std::vector<ModVec>* rels_gb = nullptr);

// Greedy pass in increasing lead order that drops generators lying in the
// span of the ones kept so far. Minimal for homogeneous input.
std::vector<ModVec> prune_generators(const RingPtr& ring, std::vector<ModVec> gens);

// TOP Groebner basis of the span of `gens` in R^rank.
std::vector<ModVec> module_gb(const RingPtr& ring, std::span<const ModVec> gens);

inline ModuleOrder top_order(const RingPtr& ring) { return {ring.get(), ModuleOrderKind::TermOverPosition, 0}; }

}  // namespace detail

}  // namespace sdepth
