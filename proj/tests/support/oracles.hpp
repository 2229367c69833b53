#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sdepth/homology.hpp"
#include "sdepth/script.hpp"
#include "sdepth/serre_depth.hpp"

namespace sdepth::testing {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

inline RingPtr ring_of(CoefField field, std::vector<std::string> vars,
                       MonomialOrder order = MonomialOrder::GrevLex) {
  return make_ring(std::move(field), std::move(vars), order);
}

inline Polynomial P(const RingPtr& ring, const std::string& text) { return parse_polynomial(ring, text); }

inline std::vector<Polynomial> polys(const RingPtr& ring, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(ring, t));
  return out;
}

inline Ideal ideal(const RingPtr& ring, std::initializer_list<const char*> texts) {
  return Ideal(ring, polys(ring, texts));
}

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, std::uint32_t min_deg,
                                std::uint32_t max_deg) {
  Monomial m;
  const auto deg = min_deg + draw(rng, max_deg - min_deg + 1);
  for (std::uint64_t d = 0; d < deg; ++d) m = m * Monomial::variable(draw(rng, nvars));
  return m;
}

inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937_64& rng, std::size_t max_terms,
                                    std::uint32_t max_deg) {
  std::vector<Term> terms;
  const CoefField& field = ring->field();
  const auto count = 1 + draw(rng, max_terms);
  for (std::uint64_t t = 0; t < count; ++t) {
    const auto c = static_cast<std::int64_t>(draw(rng, 19)) - 9;
    terms.push_back({field.from_int(c), random_monomial(rng, ring->nvars(), 0, max_deg)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

inline std::vector<Polynomial> random_monomials(const RingPtr& ring, std::mt19937_64& rng, std::size_t min_count,
                                                std::size_t max_count, std::uint32_t max_deg) {
  std::vector<Polynomial> out;
  const auto count = min_count + draw(rng, max_count - min_count + 1);
  for (std::uint64_t i = 0; i < count; ++i)
    out.push_back(Polynomial::monomial(ring, ring->field().one(), random_monomial(rng, ring->nvars(), 1, max_deg)));
  return out;
}

inline Monomial lead_monomial(const Polynomial& p) { return p.terms().front().mono; }

// Taylor resolution of R/(m_1..m_r) for monomials m_i: basis of F_k is the
// k-subsets, d(e_S) = sum_j (-1)^j lcm(S)/lcm(S - s_j) e_{S - s_j}. Padded
// with zero maps up to `length`.
inline FreeResolution taylor_resolution(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                        std::size_t length) {
  const std::size_t r = gens.size();
  std::vector<std::vector<std::uint32_t>> subsets(r + 1);
  for (std::uint32_t s = 0; s < (1u << r); ++s) subsets[static_cast<std::size_t>(__builtin_popcount(s))].push_back(s);
  auto lcm_of = [&](std::uint32_t s) {
    Monomial m;
    for (std::size_t i = 0; i < r; ++i)
      if (s >> i & 1) m = lcm(m, lead_monomial(gens[i]));
    return m;
  };
  FreeResolution res;
  res.ring = ring;
  res.ranks.push_back(1);
  for (std::size_t k = 1; k <= length; ++k) {
    static const std::vector<std::uint32_t> none;
    const auto& rows = k - 1 <= r ? subsets[k - 1] : none;
    const auto& cols = k <= r ? subsets[k] : none;
    PolyMatrix d = PolyMatrix::zeros(ring, rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::uint32_t s = cols[c];
      int sign = 1;
      for (std::size_t j = 0; j < r; ++j) {
        if (!(s >> j & 1)) continue;
        const std::uint32_t t = s & ~(1u << j);
        const std::size_t row = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), t) - rows.begin());
        const Coeff coeff = ring->field().from_int(sign);
        d.at(row, c) = Polynomial::monomial(ring, coeff, lcm_of(s) / lcm_of(t));
        sign = -sign;
      }
    }
    res.ranks.push_back(cols.size());
    res.differentials.push_back(std::move(d));
  }
  return res;
}

// I ∩ J by eliminating t from t I + (1 - t) J in a lex ring with t first.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  const RingPtr& ring = a.ring();
  std::vector<std::string> vars{"t_elim"};
  for (const auto& v : ring->vars()) vars.push_back(v);
  RingPtr big = make_ring(ring->field(), vars, MonomialOrder::Lex);
  auto lift = [&](const Polynomial& f) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m;
      for (std::size_t v = 0; v < ring->nvars(); ++v) m.exp[v + 1] = t.mono.exp[v];
      m.degree = t.mono.degree;
      terms.push_back({t.coeff, m});
    }
    return Polynomial::from_terms(big, std::move(terms));
  };
  const Polynomial t = Polynomial::variable(big, 0);
  const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * lift(g));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * lift(g));
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(big, gens).polynomials()) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [](const Term& term) { return term.mono.exp[0] > 0; });
    if (has_t) continue;
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      Monomial m;
      for (std::size_t v = 0; v < ring->nvars(); ++v) m.exp[v] = term.mono.exp[v + 1];
      m.degree = term.mono.degree;
      terms.push_back({term.coeff, m});
    }
    out.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return Ideal(ring, std::move(out));
}

// 0 :_M (g_1..g_k) by iterated colons.
inline PresentedModule iterated_colon(const PresentedModule& m, const Ideal& i) {
  PresentedModule current = m;
  for (const auto& g : i.generators()) current = colon_by_element(current, g);
  return current;
}

// Equality by membership of each generator in both directions.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

inline PresentedModule stanley_reisner_module(const SimplicialComplex& d, const RingPtr& ring) {
  return PresentedModule::quotient_ring(stanley_reisner_ideal(d, ring));
}

// Complexes on 1-based vertex lists.
inline SimplicialComplex complex_of(std::size_t n, std::initializer_list<std::initializer_list<int>> facets) {
  std::vector<Face> fs;
  for (const auto& f : facets) {
    Face face = 0;
    for (int v : f) face |= Face{1} << (v - 1);
    fs.push_back(face);
  }
  return SimplicialComplex(n, fs);
}

inline SimplicialComplex rp2_6() {
  return complex_of(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                        {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

inline std::vector<std::string> var_names(std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v", "s", "t", "p", "q", "r", "o"};
  return {names, names + n};
}

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

// Test corpus for the local cohomology route.
inline std::vector<NamedComplex> hochster_corpus() {
  return {
      {"simplex2", SimplicialComplex::simplex(2)},
      {"simplex3", SimplicialComplex::simplex(3)},
      {"simplex4", SimplicialComplex::simplex(4)},
      {"triangle_boundary", SimplicialComplex::simplex_boundary(3)},
      {"two_points", complex_of(2, {{1}, {2}})},
      {"path3", complex_of(3, {{1, 2}, {2, 3}})},
      {"bowtie", complex_of(5, {{1, 2, 3}, {3, 4, 5}})},
      {"rp2_6", rp2_6()},
  };
}

}  // namespace sdepth::testing
