#include "sdepth/groebner.hpp"

#include <algorithm>
#include <bit>

#include "sdepth/detail/gb_engine.hpp"
#include "sdepth/errors.hpp"

namespace sdepth {

using detail::ModVec;

bool FreeModuleElement::is_zero() const noexcept {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::string FreeModuleElement::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ", ";
    out += components[i].to_string();
  }
  return out + ")";
}

FreeModuleElement FreeModuleElement::zero(const RingPtr& ring, std::size_t rank) {
  return {std::vector<Polynomial>(rank, Polynomial(ring))};
}

FreeModuleElement FreeModuleElement::basis_vector(const RingPtr& ring, std::size_t rank, std::size_t index) {
  FreeModuleElement e = zero(ring, rank);
  e.components.at(index) = Polynomial::constant(ring, 1);
  return e;
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::size_t rank, ModuleOrderKind kind, std::vector<ModVec> elements)
    : ring_(std::move(ring)), rank_(rank), kind_(kind), elements_(std::move(elements)) {}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank_ != 1) throw StructuralError("polynomial view of a rank " + std::to_string(rank_) + " basis");
  std::vector<Polynomial> out;
  for (const auto& v : elements_) out.push_back(detail::component(v, 0, ring_));
  return out;
}

std::vector<FreeModuleElement> GroebnerBasis::elements() const {
  std::vector<FreeModuleElement> out;
  for (const auto& v : elements_) out.push_back({detail::to_components(v, rank_, ring_)});
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials(std::size_t comp) const {
  std::vector<Monomial> out;
  for (const auto& v : elements_)
    if (v.front().comp == comp) out.push_back(v.front().mono);
  return out;
}

ModVec GroebnerBasis::reduce(ModVec f) const { return detail::reduce_full(std::move(f), elements_, order()); }

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.rank_ != b.rank_ || a.kind_ != b.kind_ || a.elements_.size() != b.elements_.size()) return false;
  if (!same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    const ModVec& x = a.elements_[i];
    const ModVec& y = b.elements_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x[j].comp != y[j].comp || !(x[j].mono == y[j].mono) || !(x[j].coeff == y[j].coeff)) return false;
  }
  return true;
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens) {
  detail::GBEngine engine(ring, detail::top_order(ring));
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    engine.add(detail::from_poly(g));
  }
  engine.complete();
  return GroebnerBasis(ring, 1, ModuleOrderKind::TermOverPosition, engine.basis());
}

GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank, std::span<const FreeModuleElement> gens,
                         ModuleOrderKind kind) {
  detail::ModuleOrder ord{ring.get(), kind, 0};
  detail::GBEngine engine(ring, ord);
  for (const auto& g : gens) {
    if (g.rank() != rank)
      throw StructuralError("module generator of rank " + std::to_string(g.rank()) + " in a rank " +
                            std::to_string(rank) + " computation");
    for (const auto& c : g.components) require_same_ring(ring, c.ring());
    engine.add(detail::from_components(g.components, ord));
  }
  engine.complete();
  return GroebnerBasis(ring, rank, kind, engine.basis());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (gb.rank() != 1) throw StructuralError("normal form of a polynomial against a module basis");
  require_same_ring(f.ring(), gb.ring());
  return detail::component(gb.reduce(detail::from_poly(f)), 0, gb.ring());
}

FreeModuleElement normal_form(const FreeModuleElement& f, const GroebnerBasis& gb) {
  if (f.rank() != gb.rank())
    throw StructuralError("rank mismatch in normal form: " + std::to_string(f.rank()) + " vs " +
                          std::to_string(gb.rank()));
  ModVec v = detail::from_components(f.components, gb.order());
  return {detail::to_components(gb.reduce(std::move(v)), gb.rank(), gb.ring())};
}

namespace detail {

std::vector<ModVec> module_gb(const RingPtr& ring, std::span<const ModVec> gens) {
  GBEngine engine(ring, top_order(ring));
  for (const auto& g : gens) engine.add(g);
  engine.complete();
  return engine.basis();
}

std::vector<ModVec> prune_generators(const RingPtr& ring, std::vector<ModVec> gens) {
  const ModuleOrder ord = top_order(ring);
  std::erase_if(gens, [](const ModVec& v) { return v.empty(); });
  std::stable_sort(gens.begin(), gens.end(), [&](const ModVec& a, const ModVec& b) {
    if (a.front().mono.degree != b.front().mono.degree) return a.front().mono.degree < b.front().mono.degree;
    return ord.compare(a.front(), b.front()) < 0;
  });
  if (gens.size() <= 1) return gens;
  std::vector<ModVec> kept;
  GBEngine engine(ring, ord);
  for (auto& g : gens) {
    if (!kept.empty() && engine.normal_form(g).empty()) continue;
    kept.push_back(g);
    if (kept.size() < gens.size()) {
      engine.add(std::move(g));
      engine.complete();
    }
  }
  return kept;
}

std::vector<ModVec> relation_module(const RingPtr& ring, std::size_t rank, std::span<const ModVec> gens,
                                    std::span<const ModVec> rels, const std::vector<ModVec>* rels_gb) {
  const auto split = static_cast<std::uint32_t>(rank);
  ModuleOrder ord{ring.get(), ModuleOrderKind::TermOverPosition, split};
  GBEngine engine(ring, ord);
  if (rels_gb) engine.seed_basis(*rels_gb);
  for (const auto& r : rels) engine.add(r);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    ModVec v = gens[j];
    v.push_back({ring->field().one(), Monomial::one(), split + static_cast<std::uint32_t>(j)});
    sort_terms(v, ord);
    engine.add(std::move(v));
  }
  engine.complete();
  std::vector<ModVec> out;
  for (const auto& g : engine.basis())
    if (g.front().comp >= split) out.push_back(shifted(g, -static_cast<std::int64_t>(split)));
  return prune_generators(ring, std::move(out));
}

}  // namespace detail

std::vector<FreeModuleElement> syzygies(std::span<const FreeModuleElement> gens) {
  if (gens.empty()) throw StructuralError("syzygies of an empty generator list");
  const std::size_t rank = gens.front().rank();
  RingPtr ring;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw StructuralError("mixed ranks among module generators");
    if (rank == 0) continue;
    if (!ring) ring = g.components.front().ring();
    for (const auto& c : g.components) require_same_ring(ring, c.ring());
  }
  if (!ring) throw StructuralError("syzygies of rank-0 generators need a ring");
  const auto ord = detail::top_order(ring);
  std::vector<ModVec> vecs;
  for (const auto& g : gens) vecs.push_back(detail::from_components(g.components, ord));
  std::vector<FreeModuleElement> out;
  for (const auto& v : detail::relation_module(ring, rank, vecs, {}))
    out.push_back({detail::to_components(v, gens.size(), ring)});
  return out;
}

std::vector<FreeModuleElement> syzygies(std::span<const Polynomial> gens) {
  std::vector<FreeModuleElement> as_vectors;
  for (const auto& g : gens) as_vectors.push_back({{g}});
  return syzygies(as_vectors);
}

int monomial_dim(std::span<const Monomial> monomials, std::size_t nvars) {
  std::vector<std::uint32_t> supports;
  for (const auto& m : monomials) {
    if (m.is_one()) return -1;
    supports.push_back(m.support());
  }
  int best = 0;
  const std::uint32_t full = nvars >= 32 ? ~0u : (1u << nvars) - 1u;
  for (std::uint32_t set = 0; set <= full; ++set) {
    int size = std::popcount(set);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~set) == 0; });
    if (independent) best = size;
    if (set == full) break;
  }
  return best;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::maximal(const RingPtr& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [&] { cache_->gb = std::make_unique<const GroebnerBasis>(buchberger(ring_, gens_)); });
  return *cache_->gb;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, groebner()).is_zero(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.vectors().front().front().mono.is_one();
}

int Ideal::dim() const {
  auto leads = groebner().leading_monomials();
  return monomial_dim(leads, ring_->nvars());
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  return same_ring(a.ring_, b.ring_) && a.groebner() == b.groebner();
}

Ideal colon_ideal(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  require_same_ring(ideal.ring(), f.ring());
  const RingPtr& ring = ideal.ring();
  std::vector<ModVec> gens{detail::from_poly(f)};
  std::vector<ModVec> gb = ideal.groebner().vectors();
  std::vector<Polynomial> out;
  for (const auto& v : detail::relation_module(ring, 1, gens, {}, &gb)) out.push_back(detail::component(v, 0, ring));
  return Ideal(ring, std::move(out));
}

}  // namespace sdepth
