#include "sdepth/serre_depth.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sdepth/errors.hpp"

namespace sdepth {

RegularityWitness is_s_regular(const Polynomial& a, const PresentedModule& m, const SerreClass& s) {
  PresentedModule colon = colon_by_element(m, a);
  bool regular = membership(colon, s);
  return {regular, std::move(colon)};
}

std::vector<Polynomial> SequenceCertificate::elements() const {
  std::vector<Polynomial> out;
  for (const auto& step : steps) out.push_back(step.element);
  return out;
}

namespace {

PresentedModule quotient_by_element(const PresentedModule& m, const Polynomial& a) {
  return quotient_by_ideal(m, Ideal(m.ring(), {a}));
}

}  // namespace

SequenceCheck verify_s_sequence(std::span<const Polynomial> seq, const PresentedModule& m, const Ideal& ideal,
                                const SerreClass& s) {
  for (const auto& a : seq) {
    require_same_ring(ideal.ring(), a.ring());
    if (!ideal.contains(a)) throw ContractError("sequence element " + a.to_string() + " is not in the ideal");
  }
  SequenceCheck out{true, 0, {}};
  PresentedModule current = m;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    RegularityWitness w = is_s_regular(seq[i], current, s);
    out.certificate.steps.push_back({seq[i], w.colon, w.regular});
    if (!w.regular) {
      out.valid = false;
      out.failed_step = i;
      return out;
    }
    current = quotient_by_element(current, seq[i]);
  }
  return out;
}

namespace {

// Deterministic across standard libraries, unlike std::uniform_int_distribution.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

template <class T>
void seeded_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw(rng, i)]);
}

Coeff random_coeff(const CoefField& field, std::mt19937_64& rng, std::int64_t range) {
  if (!field.is_rationals()) return field.from_int(static_cast<std::int64_t>(draw(rng, field.characteristic())));
  return field.from_int(static_cast<std::int64_t>(draw(rng, static_cast<std::uint64_t>(2 * range + 1))) - range);
}

Monomial random_monomial(std::size_t nvars, std::uint32_t degree, std::mt19937_64& rng) {
  Monomial m;
  for (std::uint32_t d = 0; d < degree; ++d) m = m * Monomial::variable(draw(rng, nvars));
  return m;
}

}  // namespace

std::vector<Polynomial> candidate_pool(const Ideal& ideal, std::uint64_t seed, const PoolConfig& config) {
  const RingPtr& ring = ideal.ring();
  const CoefField& field = ring->field();
  const auto& gens = ideal.generators();
  std::mt19937_64 rng(seed);

  std::vector<Polynomial> tier1(gens.begin(), gens.end());
  seeded_shuffle(tier1, rng);

  std::vector<Polynomial> tier2;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      tier2.push_back(gens[i] * gens[j]);
      if (i != j) tier2.push_back(gens[i] + gens[j]);
    }
  seeded_shuffle(tier2, rng);

  std::vector<Polynomial> tier3;
  for (std::size_t r = 0; r < config.retries && !gens.empty(); ++r) {
    Polynomial combo(ring);
    for (const auto& g : gens) combo = combo + g.scaled(random_coeff(field, rng, config.coefficient_range));
    tier3.push_back(std::move(combo));
  }

  // Coefficients of g have degree target - deg(g), so homogeneous
  // generators give homogeneous candidates.
  std::uint32_t top = 0;
  for (const auto& g : gens) top = std::max(top, g.total_degree());
  std::vector<Polynomial> tier4;
  for (std::size_t r = 0; r < config.poly_retries && !gens.empty(); ++r) {
    const auto target = top + static_cast<std::uint32_t>(draw(rng, 3));
    Polynomial combo(ring);
    for (const auto& g : gens) {
      const auto terms = 1 + draw(rng, 3);
      for (std::uint64_t t = 0; t < terms; ++t)
        combo = combo + g.times_term(random_coeff(field, rng, config.coefficient_range),
                                     random_monomial(ring->nvars(), target - g.total_degree(), rng));
    }
    tier4.push_back(std::move(combo));
  }

  std::vector<Polynomial> pool;
  std::set<std::string> seen;
  for (auto* tier : {&tier1, &tier2, &tier3, &tier4})
    for (auto& p : *tier)
      if (!p.is_zero() && seen.insert(p.to_string()).second) pool.push_back(std::move(p));
  return pool;
}

MaximalSequence extend_to_maximal(std::span<const Polynomial> seq, const PresentedModule& m, const Ideal& ideal,
                                  const SerreClass& s, std::uint64_t seed, const PoolConfig& config,
                                  ExtCalculator* calc) {
  SequenceCheck check = verify_s_sequence(seq, m, ideal, s);
  if (!check.valid)
    throw ContractError("starting sequence is not an S-sequence (step " + std::to_string(check.failed_step + 1) + ")");
  SequenceCertificate cert = std::move(check.certificate);
  if (membership(quotient_by_ideal(m, ideal), s)) return {ScanResult::infinite(), std::move(cert)};

  const std::size_t nvars = ideal.ring()->nvars();
  const std::size_t cap = nvars + 1;
  PresentedModule current = m;
  for (const auto& a : seq) current = quotient_by_element(current, a);

  const std::vector<Polynomial> pool = candidate_pool(ideal, seed, config);
  while (cert.length() < cap) {
    // 0 :_N I lies in 0 :_N f for every f in I.
    PresentedModule torsion = current;
    for (const auto& g : ideal.generators()) torsion = colon_by_element(torsion, g);
    if (!membership(torsion, s)) break;
    bool extended = false;
    for (const auto& candidate : pool) {
      RegularityWitness w = is_s_regular(candidate, current, s);
      if (!w.regular) continue;
      cert.steps.push_back({candidate, std::move(w.colon), true});
      current = quotient_by_element(current, candidate);
      extended = true;
      break;
    }
    if (!extended) break;
  }

  std::optional<ExtCalculator> own;
  if (!calc) calc = &own.emplace(ideal);
  ScanResult ext = ext_scan(*calc, m, s, {nvars + 1, false});
  cert.maximality = ext;
  if (!ext.is_finite())
    throw SearchIncomplete("Ext scan gave no finite depth to certify a sequence of length " +
                           std::to_string(cert.length()));
  if (ext.value() > cert.length())
    throw SearchIncomplete("candidate pool exhausted at length " + std::to_string(cert.length()) +
                           " but the Ext scan certifies depth " + std::to_string(ext.value()) +
                           "; rerun with a larger pool or another seed");
  return {ScanResult::finite(cert.length()), std::move(cert)};
}

std::string route_name(Route r) {
  switch (r) {
    case Route::Sequence:
      return "seq";
    case Route::Ext:
      return "ext";
    case Route::Hochster:
      return "hochster";
  }
  return {};
}

std::string verdict_name(DepthReport::Verdict v) {
  switch (v) {
    case DepthReport::Verdict::Consistent:
      return "consistent";
    case DepthReport::Verdict::Mismatch:
      return "mismatch";
    case DepthReport::Verdict::Inconclusive:
      return "inconclusive";
  }
  return {};
}

const RouteOutcome* DepthReport::find(Route r) const {
  for (const auto& o : routes)
    if (o.route == r) return &o;
  return nullptr;
}

std::optional<SimplicialComplex> monomial_quotient_complex(const PresentedModule& m) {
  if (m.ambient_rank() != 1) return std::nullopt;
  const std::size_t n = m.ring()->nvars();
  std::vector<Face> nonfaces;
  for (const auto& v : m.relation_gb()) {
    if (v.size() != 1) return std::nullopt;
    const Monomial& mono = v.front().mono;
    if (static_cast<std::size_t>(face_size(mono.support())) != mono.degree) return std::nullopt;
    nonfaces.push_back(mono.support());
  }
  const Face count = Face{1} << n;
  std::vector<bool> is_face(count, true);
  for (Face f = 0; f < count; ++f)
    for (Face g : nonfaces)
      if ((g & f) == g) {
        is_face[f] = false;
        break;
      }
  std::vector<Face> faces;
  for (Face f = 0; f < count; ++f) {
    if (!is_face[f]) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(f >> v & 1) && is_face[f | Face{1} << v]) maximal = false;
    if (maximal) faces.push_back(f);
  }
  return SimplicialComplex(n, std::move(faces));
}

namespace {

std::optional<SimplicialComplex> applicable_complex(const Ideal& ideal, const PresentedModule& m,
                                                    const SerreClass& s, const SimplicialComplex* complex) {
  if (!(s == SerreClass::zero())) return std::nullopt;
  const RingPtr& ring = ideal.ring();
  if (!(ideal == Ideal::maximal(ring))) return std::nullopt;
  auto derived = monomial_quotient_complex(m);
  if (!derived) return std::nullopt;
  if (complex && !(*complex == *derived)) return std::nullopt;
  return derived;
}

}  // namespace

bool hochster_applicable(const Ideal& ideal, const PresentedModule& m, const SerreClass& s,
                         const SimplicialComplex* complex) {
  return applicable_complex(ideal, m, s, complex).has_value();
}

DepthReport s_depth(const Ideal& ideal, const PresentedModule& m, const SerreClass& s, const DepthOptions& options) {
  require_same_ring(ideal.ring(), m.ring());
  const std::size_t nvars = ideal.ring()->nvars();
  const std::size_t bound = options.bound.value_or(nvars + 1);
  const auto complex = applicable_complex(ideal, m, s, options.complex);
  const bool hochster_ok = complex.has_value();

  std::vector<Route> routes = options.routes;
  if (routes.empty()) {
    routes = {Route::Sequence, Route::Ext};
    if (hochster_ok) routes.push_back(Route::Hochster);
  }
  std::sort(routes.begin(), routes.end());
  routes.erase(std::unique(routes.begin(), routes.end()), routes.end());
  if (std::find(routes.begin(), routes.end(), Route::Hochster) != routes.end() && !hochster_ok)
    throw ContractError("the hochster route needs S = zero, I = the graded maximal ideal and M = k[complex]");

  DepthReport report;
  report.instance = "I = " + ideal.to_string() + ", M = " + m.to_string() + ", S = " + s.to_string();
  ExtCalculator calc(ideal);
  for (Route r : routes) {
    RouteOutcome outcome{r, std::nullopt, {}, std::nullopt};
    switch (r) {
      case Route::Sequence:
        try {
          MaximalSequence result = extend_to_maximal({}, m, ideal, s, options.seed, options.pool, &calc);
          outcome.value = result.value;
          outcome.certificate = std::move(result.certificate);
        } catch (const SearchIncomplete& e) {
          outcome.error = e.what();
        }
        break;
      case Route::Ext:
        outcome.value = ext_scan(calc, m, s, {bound, options.verify_infinite});
        break;
      case Route::Hochster:
        outcome.value = hochster_depth(*complex, ideal.ring()->field(), bound);
        break;
    }
    report.routes.push_back(std::move(outcome));
  }

  const RouteOutcome* reference = nullptr;
  bool inconclusive = false;
  for (const auto& o : report.routes) {
    if (!o.value || o.value->kind() == ScanResult::Kind::BoundExceeded) {
      inconclusive = true;
      continue;
    }
    if (!reference) {
      reference = &o;
    } else if (!(*reference->value == *o.value)) {
      report.verdict = DepthReport::Verdict::Mismatch;
      report.details = route_name(reference->route) + " = " + reference->value->to_string() + " but " +
                       route_name(o.route) + " = " + o.value->to_string() +
                       "; these routes must agree, so this indicates an implementation bug";
      return report;
    }
  }
  if (inconclusive) {
    report.verdict = DepthReport::Verdict::Inconclusive;
    report.details = "at least one route produced no definite value";
  }
  return report;
}

}  // namespace sdepth
