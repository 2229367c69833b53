#pragma once

#include <span>
#include <vector>

#include "sdepth/detail/modvec.hpp"

namespace sdepth::detail {

// Fully reduce f against `basis` (any set of monic-or-not vectors sorted
// under `ord`). Terms whose monomial no leading term divides are kept.
// basis[skip] is ignored, which lets a basis element be tail-reduced
// against the rest in place.
ModVec reduce_full(ModVec f, std::span<const ModVec> basis, const ModuleOrder& ord,
                   std::size_t skip = static_cast<std::size_t>(-1));

// Buchberger's algorithm with the normal selection strategy (least lcm
// degree first) and the Gebauer-Moeller installation of Buchberger's
// criteria. Incremental: generators may be added after complete().
class GBEngine {
 public:
  GBEngine(RingPtr ring, ModuleOrder order);

  // Queue a generator.
  void add(ModVec f);
  // Install vectors that already form a Groebner basis under this order.
  // Pairs among them are treated as processed.
  void seed_basis(std::span<const ModVec> gb);
  void complete();

  // Valid after complete(): reduced, monic, sorted by descending lead.
  const std::vector<ModVec>& basis() const noexcept { return basis_; }
  ModVec normal_form(ModVec f) const { return reduce_full(std::move(f), basis_, order_); }
  const ModuleOrder& order() const noexcept { return order_; }
  std::size_t pairs_reduced() const noexcept { return pairs_reduced_; }

 private:
  struct Pair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint32_t comp;
    std::uint32_t sugar;
  };

  void insert(ModVec h, std::uint32_t sugar);
  void interreduce();

  RingPtr ring_;
  ModuleOrder order_;
  std::vector<ModVec> basis_;
  std::vector<char> redundant_;
  // Element lives in one component; Buchberger's product criterion only
  // applies to pairs of such elements.
  std::vector<char> single_;
  // Sugar degree of each basis element; pairs are taken lowest sugar first.
  std::vector<std::uint32_t> sugar_;
  std::vector<Pair> pairs_;
  std::vector<ModVec> pending_;
  std::size_t pairs_reduced_ = 0;
};

// Every S-pair of `gb` reduces to zero. Used by verification mode.
bool audit_groebner(std::span<const ModVec> gb, const ModuleOrder& ord);

}  // namespace sdepth::detail
