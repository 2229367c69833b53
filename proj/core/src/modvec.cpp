#include "sdepth/detail/modvec.hpp"

#include <algorithm>

namespace sdepth::detail {

ModVec axpy(const ModVec& f, const Coeff& c, const Monomial& m, const ModVec& g, const ModuleOrder& ord) {
  const CoefField& field = ord.ring->field();
  ModVec out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].mono * m;
    int cmp = i == f.size() ? -1 : ord.compare(f[i].mono, f[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({field.mul(c, g[j].coeff), gm, g[j].comp});
      ++j;
    } else {
      Coeff s = field.add(f[i].coeff, field.mul(c, g[j].coeff));
      if (!s.is_zero()) out.push_back({s, gm, g[j].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

ModVec add(const ModVec& f, const ModVec& g, const ModuleOrder& ord) {
  return axpy(f, ord.ring->field().one(), Monomial::one(), g, ord);
}

ModVec scale(const ModVec& f, const Coeff& c, const CoefField& field) {
  ModVec out;
  if (c.is_zero()) return out;
  out.reserve(f.size());
  for (const auto& t : f) out.push_back({field.mul(t.coeff, c), t.mono, t.comp});
  return out;
}

ModVec times_poly(const Polynomial& p, const ModVec& v, const ModuleOrder& ord) {
  ModVec out;
  for (const auto& t : p.terms()) out = axpy(out, t.coeff, t.mono, v, ord);
  return out;
}

void make_monic(ModVec& f, const CoefField& field) {
  if (f.empty() || field.is_one(f.front().coeff)) return;
  Coeff inv = field.inv(f.front().coeff);
  for (auto& t : f) t.coeff = field.mul(t.coeff, inv);
}

void sort_terms(ModVec& f, const ModuleOrder& ord) {
  std::sort(f.begin(), f.end(), [&](const VTerm& a, const VTerm& b) { return ord.compare(a, b) > 0; });
  const CoefField& field = ord.ring->field();
  ModVec out;
  out.reserve(f.size());
  for (auto& t : f) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  f = std::move(out);
}

ModVec shifted(const ModVec& f, std::int64_t offset) {
  ModVec out = f;
  for (auto& t : out) t.comp = static_cast<std::uint32_t>(static_cast<std::int64_t>(t.comp) + offset);
  return out;
}

ModVec from_poly(const Polynomial& p, std::uint32_t comp) {
  ModVec out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.coeff, t.mono, comp});
  return out;
}

Polynomial component(const ModVec& v, std::uint32_t comp, const RingPtr& ring) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.coeff, t.mono});
  return Polynomial::from_terms(ring, std::move(terms));
}

ModVec from_components(const std::vector<Polynomial>& comps, const ModuleOrder& ord) {
  ModVec out;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto& t : comps[c].terms()) out.push_back({t.coeff, t.mono, static_cast<std::uint32_t>(c)});
  sort_terms(out, ord);
  return out;
}

std::vector<Polynomial> to_components(const ModVec& v, std::size_t rank, const RingPtr& ring) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts.at(t.comp).push_back({t.coeff, t.mono});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

}  // namespace sdepth::detail
