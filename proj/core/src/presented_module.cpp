#include "sdepth/presented_module.hpp"

#include <algorithm>

#include "sdepth/detail/gb_engine.hpp"
#include "sdepth/errors.hpp"

namespace sdepth {

using detail::ModVec;

PolyMatrix PolyMatrix::zeros(const RingPtr& ring, std::size_t rows, std::size_t cols) {
  return {rows, cols, std::vector<Polynomial>(rows * cols, Polynomial(ring))};
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t{cols, rows, std::vector<Polynomial>(entries.size())};
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

FreeModuleElement PolyMatrix::column(std::size_t c) const {
  FreeModuleElement v;
  for (std::size_t r = 0; r < rows; ++r) v.components.push_back(at(r, c));
  return v;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols != b.rows) throw StructuralError("matrix shape mismatch in product");
  if (a.entries.empty() || b.entries.empty()) {
    if (a.rows * b.cols == 0) return {a.rows, b.cols, {}};
    const RingPtr& ring = a.entries.empty() ? b.entries.front().ring() : a.entries.front().ring();
    return PolyMatrix::zeros(ring, a.rows, b.cols);
  }
  PolyMatrix out = PolyMatrix::zeros(a.entries.front().ring(), a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t c = 0; c < b.cols; ++c)
      for (std::size_t k = 0; k < a.cols; ++k)
        if (!a.at(r, k).is_zero() && !b.at(k, c).is_zero()) out.at(r, c) = out.at(r, c) + a.at(r, k) * b.at(k, c);
  return out;
}

PresentedModule::PresentedModule(RingPtr ring, std::size_t ambient_rank,
                                 const std::vector<FreeModuleElement>& relations)
    : ring_(std::move(ring)), rank_(ambient_rank), cache_(std::make_shared<Cache>()) {
  const auto ord = detail::top_order(ring_);
  for (const auto& r : relations) {
    if (r.rank() != rank_)
      throw StructuralError("relation of rank " + std::to_string(r.rank()) + " in a module of ambient rank " +
                            std::to_string(rank_));
    for (const auto& c : r.components) require_same_ring(ring_, c.ring());
    ModVec v = detail::from_components(r.components, ord);
    if (!v.empty()) relations_.push_back(std::move(v));
  }
}

PresentedModule PresentedModule::free(RingPtr ring, std::size_t rank) { return PresentedModule(std::move(ring), rank, {}); }

PresentedModule PresentedModule::quotient_ring(const Ideal& ideal) {
  std::vector<ModVec> rels;
  for (const auto& g : ideal.generators()) rels.push_back(detail::from_poly(g));
  return from_vectors(ideal.ring(), 1, std::move(rels));
}

PresentedModule PresentedModule::from_vectors(RingPtr ring, std::size_t ambient_rank, std::vector<ModVec> relations) {
  PresentedModule m(std::move(ring), ambient_rank, {});
  for (auto& r : relations)
    if (!r.empty()) m.relations_.push_back(std::move(r));
  return m;
}

PresentedModule PresentedModule::with_known_gb(RingPtr ring, std::size_t ambient_rank, std::vector<ModVec> relations,
                                               std::vector<ModVec> gb) {
  PresentedModule m = from_vectors(std::move(ring), ambient_rank, std::move(relations));
  std::call_once(m.cache_->once, [&] { m.cache_->gb = std::move(gb); });
  return m;
}

PresentedModule PresentedModule::power(const PresentedModule& m, std::size_t copies) {
  std::vector<ModVec> rels, gb;
  const auto& base_gb = m.relation_gb();
  for (std::size_t i = 0; i < copies; ++i) {
    const auto offset = static_cast<std::int64_t>(i * m.ambient_rank());
    for (const auto& r : m.relation_vectors()) rels.push_back(detail::shifted(r, offset));
    for (const auto& g : base_gb) gb.push_back(detail::shifted(g, offset));
  }
  // Block-diagonal shifts keep TOP order within a vector but the global
  // sort by lead must be restored.
  const auto ord = detail::top_order(m.ring());
  std::stable_sort(gb.begin(), gb.end(), [&](const ModVec& a, const ModVec& b) { return ord.compare(a.front(), b.front()) > 0; });
  return with_known_gb(m.ring(), m.ambient_rank() * copies, std::move(rels), std::move(gb));
}

std::vector<FreeModuleElement> PresentedModule::relations() const {
  std::vector<FreeModuleElement> out;
  for (const auto& r : relations_) out.push_back({detail::to_components(r, rank_, ring_)});
  return out;
}

const std::vector<ModVec>& PresentedModule::relation_gb() const {
  std::call_once(cache_->once, [&] { cache_->gb = detail::module_gb(ring_, relations_); });
  return cache_->gb;
}

std::string PresentedModule::to_string() const {
  std::string out = "coker [";
  auto rels = relations();
  for (std::size_t r = 0; r < rank_; ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < rels.size(); ++c) {
      if (c) out += ", ";
      out += rels[c].components[r].to_string();
    }
    out += "]";
  }
  return out + "]";
}

ModuleMap ModuleMap::from_matrix(PresentedModule source, PresentedModule target, const PolyMatrix& matrix) {
  if (matrix.rows != target.ambient_rank() || matrix.cols != source.ambient_rank())
    throw StructuralError("matrix shape does not match the ambient ranks of the map");
  const auto ord = detail::top_order(source.ring());
  std::vector<ModVec> cols;
  for (std::size_t c = 0; c < matrix.cols; ++c) cols.push_back(detail::from_components(matrix.column(c).components, ord));
  return {std::move(source), std::move(target), std::move(cols)};
}

ModuleMap ModuleMap::identity(const PresentedModule& m) {
  std::vector<ModVec> cols;
  for (std::size_t i = 0; i < m.ambient_rank(); ++i)
    cols.push_back({{m.ring()->field().one(), Monomial::one(), static_cast<std::uint32_t>(i)}});
  return {m, m, std::move(cols)};
}

ModuleMap ModuleMap::zero(const PresentedModule& source, const PresentedModule& target) {
  return {source, target, std::vector<ModVec>(source.ambient_rank())};
}

ModuleMap ModuleMap::multiplication(const PresentedModule& m, const Polynomial& a) {
  std::vector<ModVec> cols;
  for (std::size_t i = 0; i < m.ambient_rank(); ++i) cols.push_back(detail::from_poly(a, static_cast<std::uint32_t>(i)));
  return {m, m, std::move(cols)};
}

ModVec ModuleMap::apply(const ModVec& v) const {
  const auto ord = detail::top_order(source.ring());
  ModVec out;
  for (const auto& t : v) out = detail::axpy(out, t.coeff, t.mono, columns.at(t.comp), ord);
  return out;
}

namespace {

void require_map_shape(const ModuleMap& f) {
  require_same_ring(f.source.ring(), f.target.ring());
  if (f.columns.size() != f.source.ambient_rank()) throw StructuralError("map has the wrong number of columns");
  for (const auto& c : f.columns)
    for (const auto& t : c)
      if (t.comp >= f.target.ambient_rank()) throw StructuralError("map column outside the target ambient module");
}

bool in_span(const ModVec& v, const PresentedModule& m) {
  return detail::reduce_full(v, m.relation_gb(), detail::top_order(m.ring())).empty();
}

}  // namespace

bool is_well_defined(const ModuleMap& f) {
  require_map_shape(f);
  for (const auto& r : f.source.relation_vectors())
    if (!in_span(f.apply(r), f.target)) return false;
  return true;
}

bool is_zero(const PresentedModule& m) {
  if (m.ambient_rank() == 0) return true;
  std::vector<char> unit(m.ambient_rank(), 0);
  for (const auto& g : m.relation_gb())
    if (g.front().mono.is_one()) unit[g.front().comp] = 1;
  for (char u : unit)
    if (!u) return false;
  return true;
}

int krull_dim(const PresentedModule& m) {
  const std::size_t s = m.ambient_rank();
  std::vector<std::vector<Monomial>> leads(s);
  for (const auto& g : m.relation_gb()) leads[g.front().comp].push_back(g.front().mono);
  int best = -1;
  for (const auto& l : leads) best = std::max(best, monomial_dim(l, m.ring()->nvars()));
  return best;
}

Ideal annihilator(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  const std::size_t s = m.ambient_rank();
  if (s == 0) return Ideal(ring, {Polynomial::constant(ring, 1)});
  // Ann(M) is the colon of the diagonal element (e_1, ..., e_s) of M^s.
  ModVec diagonal;
  for (std::size_t i = 0; i < s; ++i)
    diagonal.push_back({ring->field().one(), Monomial::one(), static_cast<std::uint32_t>(i * s + i)});
  detail::sort_terms(diagonal, detail::top_order(ring));
  std::vector<ModVec> block_gb;
  for (std::size_t i = 0; i < s; ++i)
    for (const auto& g : m.relation_gb()) block_gb.push_back(detail::shifted(g, static_cast<std::int64_t>(i * s)));
  std::vector<ModVec> gens{diagonal};
  std::vector<Polynomial> out;
  for (const auto& v : detail::relation_module(ring, s * s, gens, {}, &block_gb))
    out.push_back(detail::component(v, 0, ring));
  return Ideal(ring, std::move(out));
}

namespace detail {

PresentedModule subquotient(const RingPtr& ring, std::vector<ModVec> gens, const std::vector<ModVec>& rels_gb) {
  const auto ord = top_order(ring);
  std::vector<ModVec> kept;
  for (auto& g : gens) {
    ModVec r = reduce_full(std::move(g), rels_gb, ord);
    if (!r.empty()) kept.push_back(std::move(r));
  }
  if (kept.empty()) return PresentedModule::zero(ring);
  std::size_t rank = 0;
  for (const auto& g : kept)
    for (const auto& t : g) rank = std::max<std::size_t>(rank, t.comp + 1);
  for (const auto& g : rels_gb)
    for (const auto& t : g) rank = std::max<std::size_t>(rank, t.comp + 1);
  auto rels = relation_module(ring, rank, kept, {}, &rels_gb);
  return PresentedModule::from_vectors(ring, kept.size(), std::move(rels));
}

}  // namespace detail

PresentedModule colon_by_element(const PresentedModule& m, const Polynomial& a) {
  require_same_ring(m.ring(), a.ring());
  if (a.is_zero() || m.ambient_rank() == 0) return m;
  const RingPtr& ring = m.ring();
  std::vector<ModVec> images;
  bool acts_as_zero = true;
  for (std::size_t i = 0; i < m.ambient_rank(); ++i) {
    images.push_back(detail::from_poly(a, static_cast<std::uint32_t>(i)));
    if (acts_as_zero && !in_span(images.back(), m)) acts_as_zero = false;
  }
  if (acts_as_zero) return m;
  auto preimage = detail::relation_module(ring, m.ambient_rank(), images, {}, &m.relation_gb());
  return detail::subquotient(ring, std::move(preimage), m.relation_gb());
}

PresentedModule quotient_by_ideal(const PresentedModule& m, const Ideal& j) {
  require_same_ring(m.ring(), j.ring());
  std::vector<ModVec> rels = m.relation_vectors();
  for (std::size_t i = 0; i < m.ambient_rank(); ++i)
    for (const auto& g : j.generators()) rels.push_back(detail::from_poly(g, static_cast<std::uint32_t>(i)));
  return PresentedModule::from_vectors(m.ring(), m.ambient_rank(), std::move(rels));
}

PresentedModule kernel_of_map(const ModuleMap& f) {
  if (!is_well_defined(f)) throw ContractError("kernel_of_map: the matrix does not induce a map of modules");
  const RingPtr& ring = f.source.ring();
  if (f.source.ambient_rank() == 0) return f.source;
  auto preimage = detail::relation_module(ring, std::max<std::size_t>(f.target.ambient_rank(), 1), f.columns, {},
                                          &f.target.relation_gb());
  return detail::subquotient(ring, std::move(preimage), f.source.relation_gb());
}

PresentedModule homology_at(const ModuleMap& d_in, const ModuleMap& d_out) {
  require_map_shape(d_in);
  require_map_shape(d_out);
  if (d_in.target.ambient_rank() != d_out.source.ambient_rank())
    throw StructuralError("homology_at: maps do not compose");
  for (const auto& c : d_in.columns)
    if (!in_span(d_out.apply(c), d_out.target))
      throw ContractError("homology_at: d_out o d_in is not zero");
  if (verification_enabled() && (!is_well_defined(d_in) || !is_well_defined(d_out)))
    throw ContractError("homology_at: a differential is not a module map");

  const RingPtr& ring = d_out.source.ring();
  const PresentedModule& middle = d_out.source;
  if (middle.ambient_rank() == 0) return middle;
  auto cycles = detail::relation_module(ring, std::max<std::size_t>(d_out.target.ambient_rank(), 1), d_out.columns,
                                        {}, &d_out.target.relation_gb());
  // Boundaries plus the relations of the middle module.
  detail::GBEngine engine(ring, detail::top_order(ring));
  engine.seed_basis(middle.relation_gb());
  for (const auto& c : d_in.columns) engine.add(c);
  engine.complete();
  return detail::subquotient(ring, std::move(cycles), engine.basis());
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<ModVec> rels = a.relation_vectors();
  for (const auto& r : b.relation_vectors()) rels.push_back(detail::shifted(r, static_cast<std::int64_t>(a.ambient_rank())));
  return PresentedModule::from_vectors(a.ring(), a.ambient_rank() + b.ambient_rank(), std::move(rels));
}

}  // namespace sdepth
