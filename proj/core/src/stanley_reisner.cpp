#include "sdepth/stanley_reisner.hpp"

#include <algorithm>
#include <map>

#include "sdepth/errors.hpp"

namespace sdepth {

SimplicialComplex::SimplicialComplex(std::size_t vertex_count, std::vector<Face> facets) : n_(vertex_count) {
  if (n_ > kMaxVars) throw StructuralError("simplicial complexes are limited to 12 vertices");
  const Face all = n_ == 0 ? 0 : static_cast<Face>((1u << n_) - 1u);
  for (Face f : facets)
    if ((f & ~all) != 0) throw StructuralError("facet uses a vertex outside the complex");
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (Face f : facets) {
    bool maximal = std::none_of(facets.begin(), facets.end(), [&](Face g) { return g != f && (f & g) == f; });
    if (maximal) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), [](Face a, Face b) {
    return face_size(a) != face_size(b) ? face_size(a) > face_size(b) : a < b;
  });
}

SimplicialComplex SimplicialComplex::simplex(std::size_t n) {
  return {n, {n == 0 ? 0 : static_cast<Face>((1u << n) - 1u)}};
}

SimplicialComplex SimplicialComplex::simplex_boundary(std::size_t n) {
  const Face all = static_cast<Face>((1u << n) - 1u);
  std::vector<Face> facets;
  for (std::size_t v = 0; v < n; ++v) facets.push_back(all & ~(1u << v));
  return {n, facets};
}

bool SimplicialComplex::contains(Face f) const noexcept {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return (f & g) == f; });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::vector<Face> out;
  for (Face f : facets_)
    for (Face sub = f;; sub = (sub - 1) & f) {
      out.push_back(sub);
      if (sub == 0) break;
    }
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    return face_size(a) != face_size(b) ? face_size(a) < face_size(b) : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int SimplicialComplex::dimension() const noexcept {
  if (facets_.empty()) return -2;
  int d = -1;
  for (Face f : facets_) d = std::max(d, face_size(f) - 1);
  return d;
}

std::string SimplicialComplex::facets_string() const {
  std::string out;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    bool first = true;
    for (std::size_t v = 0; v < n_; ++v)
      if (facets_[i] & (1u << v)) {
        if (!first) out += ",";
        out += std::to_string(v + 1);
        first = false;
      }
    out += "}";
  }
  return out;
}

Ideal stanley_reisner_ideal(const SimplicialComplex& complex, const RingPtr& ring) {
  const std::size_t n = complex.vertex_count();
  if (ring->nvars() != n)
    throw StructuralError("complex on " + std::to_string(n) + " vertices needs a ring with as many variables");
  std::vector<Polynomial> gens;
  for (Face f = 0; f < (1u << n); ++f) {
    if (complex.contains(f)) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v)
      if ((f & (1u << v)) && !complex.contains(f & ~(1u << v))) minimal = false;
    if (!minimal) continue;
    Monomial m;
    for (std::size_t v = 0; v < n; ++v)
      if (f & (1u << v)) m = m * Monomial::variable(v);
    gens.push_back(Polynomial::monomial(ring, ring->field().one(), m));
  }
  return Ideal(ring, std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& complex, Face sigma) {
  if (!complex.contains(sigma)) throw ContractError("link of a set that is not a face");
  std::vector<Face> facets;
  for (Face f : complex.facets())
    if ((f & sigma) == sigma) facets.push_back(f & ~sigma);
  return {complex.vertex_count(), facets};
}

std::size_t CohomologyProfile::rank(int degree) const noexcept {
  if (degree < -1 || degree > max_degree()) return 0;
  return ranks[static_cast<std::size_t>(degree + 1)];
}

long CohomologyProfile::euler_characteristic() const noexcept {
  long chi = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    long sign = (i % 2 == 1) ? 1 : -1;  // degree i - 1
    chi += sign * static_cast<long>(ranks[i]);
  }
  return chi;
}

bool CohomologyProfile::vanishes() const noexcept {
  return std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 0; });
}

namespace {

// Rank by Gaussian elimination over the field.
std::size_t matrix_rank(std::vector<std::vector<Coeff>> rows, const CoefField& field) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    Coeff inv = field.inv(rows[rank][c]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      Coeff factor = field.mul(rows[r][c], inv);
      for (std::size_t k = c; k < cols; ++k)
        if (!rows[rank][k].is_zero()) rows[r][k] = field.sub(rows[r][k], field.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

CohomologyProfile reduced_cohomology(const SimplicialComplex& complex, const CoefField& field) {
  CohomologyProfile profile;
  if (complex.is_void()) return profile;
  const int dim = complex.dimension();
  // faces_by_dim[d + 1] lists the faces of dimension d.
  std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(dim + 2));
  for (Face f : complex.faces()) by_dim[static_cast<std::size_t>(face_size(f))].push_back(f);

  // boundary_rank[d + 1] = rank of the boundary C_d -> C_{d-1}; zero for d = -1.
  std::vector<std::size_t> boundary_rank(by_dim.size() + 1, 0);
  for (int d = 0; d <= dim; ++d) {
    const auto& src = by_dim[static_cast<std::size_t>(d + 1)];
    const auto& dst = by_dim[static_cast<std::size_t>(d)];
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
    std::vector<std::vector<Coeff>> rows(src.size(), std::vector<Coeff>(dst.size(), field.zero()));
    for (std::size_t r = 0; r < src.size(); ++r) {
      int position = 0;
      for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
        if (!(src[r] & (1u << v))) continue;
        Face sub = src[r] & ~(1u << v);
        rows[r][index.at(sub)] = position % 2 == 0 ? field.one() : field.neg(field.one());
        ++position;
      }
    }
    boundary_rank[static_cast<std::size_t>(d + 1)] = matrix_rank(std::move(rows), field);
  }
  for (int d = -1; d <= dim; ++d) {
    std::size_t chains = by_dim[static_cast<std::size_t>(d + 1)].size();
    std::size_t out = boundary_rank[static_cast<std::size_t>(d + 1)];
    std::size_t in = boundary_rank[static_cast<std::size_t>(d + 2)];
    profile.ranks.push_back(chains - out - in);
  }
  return profile;
}

long reduced_euler_characteristic(const SimplicialComplex& complex) {
  long chi = 0;
  for (Face f : complex.faces()) chi += (face_size(f) % 2 == 1) ? 1 : -1;  // dim = size - 1
  return chi;
}

ScanResult hochster_depth(const SimplicialComplex& complex, const CoefField& field, std::size_t bound) {
  if (complex.is_void()) return ScanResult::infinite();
  std::size_t best = static_cast<std::size_t>(-1);
  for (Face sigma : complex.faces()) {
    const auto size = static_cast<std::size_t>(face_size(sigma));
    if (size >= best) continue;  // σ only contributes at i >= |σ|
    CohomologyProfile profile = reduced_cohomology(link(complex, sigma), field);
    for (int j = -1; j <= profile.max_degree(); ++j) {
      if (profile.rank(j) == 0) continue;
      std::size_t i = static_cast<std::size_t>(j + 1) + size;
      best = std::min(best, i);
      break;
    }
  }
  if (best > bound) return ScanResult::bound_exceeded(bound);
  return ScanResult::finite(best);
}

}  // namespace sdepth
