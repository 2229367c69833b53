#include "sdepth/homology.hpp"

#include <algorithm>

#include "sdepth/detail/gb_engine.hpp"
#include "sdepth/errors.hpp"

namespace sdepth {

using detail::ModVec;

namespace {

std::vector<ModVec> matrix_columns(const PolyMatrix& m, const RingPtr& ring) {
  const auto ord = detail::top_order(ring);
  std::vector<ModVec> cols;
  for (std::size_t c = 0; c < m.cols; ++c) cols.push_back(detail::from_components(m.column(c).components, ord));
  return cols;
}

PolyMatrix matrix_from_columns(const std::vector<ModVec>& cols, std::size_t rows, const RingPtr& ring) {
  PolyMatrix m = PolyMatrix::zeros(ring, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto comps = detail::to_components(cols[c], rows, ring);
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = std::move(comps[r]);
  }
  return m;
}

// Appends d_{k+1} to a resolution that currently ends at d_k.
void extend_once(FreeResolution& res, const Ideal& ideal) {
  const RingPtr& ring = res.ring;
  if (res.differentials.empty()) {
    std::vector<ModVec> gens;
    for (const auto& g : ideal.generators()) gens.push_back(detail::from_poly(g));
    gens = detail::prune_generators(ring, std::move(gens));
    res.ranks = {1, gens.size()};
    res.differentials.push_back(matrix_from_columns(gens, 1, ring));
    return;
  }
  const PolyMatrix& last = res.differentials.back();
  std::vector<ModVec> syz;
  if (last.cols > 0) syz = detail::relation_module(ring, last.rows, matrix_columns(last, ring), {});
  res.ranks.push_back(syz.size());
  res.differentials.push_back(matrix_from_columns(syz, last.cols, ring));
}

// Transposed differential d^T tensored with the identity of R^s, acting
// M^{rows} -> M^{cols} on ambient bases.
std::vector<ModVec> hom_columns(const PolyMatrix& d, std::size_t s, const RingPtr& ring) {
  const auto ord = detail::top_order(ring);
  std::vector<ModVec> cols;
  cols.reserve(d.rows * s);
  for (std::size_t j = 0; j < d.rows; ++j)
    for (std::size_t r = 0; r < s; ++r) {
      ModVec v;
      for (std::size_t k = 0; k < d.cols; ++k)
        for (const auto& t : d.at(j, k).terms()) v.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(k * s + r)});
      detail::sort_terms(v, ord);
      cols.push_back(std::move(v));
    }
  return cols;
}

}  // namespace

bool FreeResolution::is_complex() const {
  for (std::size_t i = 0; i + 1 < differentials.size(); ++i) {
    PolyMatrix prod = differentials[i] * differentials[i + 1];
    for (const auto& e : prod.entries)
      if (!e.is_zero()) return false;
  }
  return true;
}

FreeResolution free_resolution(const Ideal& ideal, std::size_t length) {
  ExtCalculator calc(ideal);
  return *calc.resolution(length);
}

PresentedModule cohomology_of_hom(const FreeResolution& res, std::size_t i, const PresentedModule& m) {
  require_same_ring(res.ring, m.ring());
  if (i + 1 > res.length()) throw StructuralError("resolution too short for the requested cohomology");
  const RingPtr& ring = m.ring();
  const std::size_t s = m.ambient_rank();
  PresentedModule here = PresentedModule::power(m, res.ranks[i]);
  PresentedModule next = PresentedModule::power(m, res.ranks[i + 1]);
  ModuleMap d_out{here, next, hom_columns(res.differentials[i], s, ring)};
  ModuleMap d_in = [&] {
    if (i == 0) return ModuleMap::zero(PresentedModule::zero(ring), here);
    PresentedModule prev = PresentedModule::power(m, res.ranks[i - 1]);
    return ModuleMap{prev, here, hom_columns(res.differentials[i - 1], s, ring)};
  }();
  return homology_at(d_in, d_out);
}

ExtCalculator::ExtCalculator(Ideal ideal) : ideal_(std::move(ideal)) {
  auto empty = std::make_shared<FreeResolution>();
  empty->ring = ideal_.ring();
  res_ = std::move(empty);
}

std::shared_ptr<const FreeResolution> ExtCalculator::resolution(std::size_t length) {
  std::lock_guard lock(mutex_);
  length = std::min(length, max_length());
  if (res_->length() >= length) return res_;
  auto res = std::make_shared<FreeResolution>(*res_);
  const std::size_t before = res->length();
  while (res->length() < length) extend_once(*res, ideal_);
  for (std::size_t i = before == 0 ? 0 : before - 1; i + 1 < res->length(); ++i) {
    PolyMatrix prod = res->differentials[i] * res->differentials[i + 1];
    for (const auto& e : prod.entries)
      if (!e.is_zero()) throw ContractError("free resolution: d o d is not zero");
  }
  if (before == 0 && verification_enabled()) {
    auto gb = detail::module_gb(res->ring, matrix_columns(res->differentials[0], res->ring));
    if (!(GroebnerBasis(res->ring, 1, ModuleOrderKind::TermOverPosition, gb) == ideal_.groebner()))
      throw ContractError("free resolution: d_1 does not generate the ideal");
  }
  res_ = std::move(res);
  return res_;
}

PresentedModule ExtCalculator::ext(std::size_t i, const PresentedModule& m) {
  if (i + 1 > max_length()) return PresentedModule::zero(m.ring());
  return cohomology_of_hom(*resolution(i + 1), i, m);
}

PresentedModule ext_module(std::size_t i, const Ideal& ideal, const PresentedModule& m) {
  ExtCalculator calc(ideal);
  return calc.ext(i, m);
}

std::string ScanResult::to_string() const {
  switch (kind_) {
    case Kind::Finite:
      return std::to_string(value_);
    case Kind::Infinite:
      return "inf";
    case Kind::BoundExceeded:
      return "bound_exceeded(" + std::to_string(value_) + ")";
  }
  return {};
}

ScanResult ScanResult::parse(const std::string& text) {
  if (text == "inf") return infinite();
  auto digits = [](const std::string& t) {
    return !t.empty() && t.size() < 10 && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (digits(text)) return finite(std::stoul(text));
  const std::string prefix = "bound_exceeded(";
  if (text.size() > prefix.size() + 1 && text.compare(0, prefix.size(), prefix) == 0 && text.back() == ')') {
    std::string inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (digits(inner)) return bound_exceeded(std::stoul(inner));
  }
  throw StructuralError("not a scan result: '" + text + "'");
}

ScanResult ext_scan(ExtCalculator& calc, const PresentedModule& m, const SerreClass& s, const ExtScanOptions& opts) {
  const Ideal& ideal = calc.ideal();
  const std::size_t bound = std::min(opts.bound, ideal.ring()->nvars() + 1);
  if (membership(quotient_by_ideal(m, ideal), s)) {
    if (opts.verify_infinite) {
      for (std::size_t i = 0; i <= bound; ++i)
        if (!membership(calc.ext(i, m), s))
          throw ContractError("M/IM lies in S but Ext^" + std::to_string(i) + "(R/I, M) does not");
    }
    return ScanResult::infinite();
  }
  for (std::size_t i = 0; i <= bound; ++i)
    if (!membership(calc.ext(i, m), s)) return ScanResult::finite(i);
  return ScanResult::bound_exceeded(opts.bound);
}

ScanResult ext_scan(const Ideal& ideal, const PresentedModule& m, const SerreClass& s, std::size_t bound,
                    bool verify_infinite) {
  ExtCalculator calc(ideal);
  return ext_scan(calc, m, s, {bound, verify_infinite});
}

}  // namespace sdepth
