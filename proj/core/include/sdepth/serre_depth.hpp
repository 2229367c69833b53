#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdepth/homology.hpp"
#include "sdepth/serre_class.hpp"
#include "sdepth/stanley_reisner.hpp"

namespace sdepth {

struct RegularityWitness {
  bool regular;
  // Presentation of 0 :_M a.
  PresentedModule colon;
};

// a is S-regular on M when 0 :_M a lies in S.
RegularityWitness is_s_regular(const Polynomial& a, const PresentedModule& m, const SerreClass& s);

struct SequenceStep {
  Polynomial element;
  // 0 :_{M/(a_1..a_{i-1})M} a_i and its verdict.
  PresentedModule colon;
  bool in_class;
};

struct SequenceCertificate {
  std::vector<SequenceStep> steps;
  // Ext-scan value the length was checked against, when maximality was
  // certified.
  std::optional<ScanResult> maximality;

  std::size_t length() const noexcept { return steps.size(); }
  std::vector<Polynomial> elements() const;
};

struct SequenceCheck {
  bool valid;
  // Index of the first failing step when !valid.
  std::size_t failed_step;
  SequenceCertificate certificate;
};

// Checks each a_i against M/(a_1..a_{i-1})M. Throws ContractError when an
// element lies outside I.
SequenceCheck verify_s_sequence(std::span<const Polynomial> seq, const PresentedModule& m, const Ideal& ideal,
                                const SerreClass& s);

// Candidate pool for the randomized search. Tiers, in order: generators of
// I; pairwise products and sums; `retries` random linear combinations of
// the generators; `poly_retries` combinations sum c_i m_i g_i with m_i a
// random monomial chosen so that every term m_i g_i has the same degree,
// at most 2 above the largest generator degree. Order inside the first two
// tiers is a seeded shuffle.
struct PoolConfig {
  std::size_t retries = 64;
  std::size_t poly_retries = 32;
  // Over QQ, linear coefficients are drawn from [-range, range]. Over F_p
  // they are drawn from all of F_p.
  std::int64_t coefficient_range = 16;
};

std::vector<Polynomial> candidate_pool(const Ideal& ideal, std::uint64_t seed, const PoolConfig& config);

struct MaximalSequence {
  // Infinite (M/IM in S) or Finite(length).
  ScanResult value;
  SequenceCertificate certificate;
};

// Extends a valid S-sequence in I greedily from the candidate pool until no
// candidate is S-regular on the current quotient, then certifies maximality
// against the Ext scan. Throws SearchIncomplete when the scan shows a longer
// sequence exists, and ContractError when `seq` is not an S-sequence in I.
// `calc`, when given, must be built for `ideal` and is reused.
MaximalSequence extend_to_maximal(std::span<const Polynomial> seq, const PresentedModule& m, const Ideal& ideal,
                                  const SerreClass& s, std::uint64_t seed, const PoolConfig& config = {},
                                  ExtCalculator* calc = nullptr);

enum class Route { Sequence, Ext, Hochster };

std::string route_name(Route r);

struct RouteOutcome {
  Route route;
  // Empty when the route failed to produce a value (see error).
  std::optional<ScanResult> value;
  std::string error;
  std::optional<SequenceCertificate> certificate;
};

struct DepthReport {
  enum class Verdict { Consistent, Mismatch, Inconclusive };

  std::string instance;
  std::vector<RouteOutcome> routes;
  Verdict verdict = Verdict::Consistent;
  std::string details;

  const RouteOutcome* find(Route r) const;
};

std::string verdict_name(DepthReport::Verdict v);

struct DepthOptions {
  // Empty selects Sequence and Ext, plus Hochster when applicable.
  std::vector<Route> routes;
  std::uint64_t seed = 0;
  // Defaults to nvars + 1.
  std::optional<std::size_t> bound;
  PoolConfig pool;
  // Stanley-Reisner instance: M must be k[Δ] for this complex. When null,
  // the complex is read off M if M is a squarefree monomial quotient of R.
  const SimplicialComplex* complex = nullptr;
  // Ext scan confirms Ext^i in S up to the bound on the infinite branch.
  bool verify_infinite = true;
};

// Δ with M = k[Δ], when M = R/J for a squarefree monomial ideal J.
std::optional<SimplicialComplex> monomial_quotient_complex(const PresentedModule& m);

// Whether the Hochster route applies: S = zero, I the graded maximal ideal
// and M = k[Δ] (for `complex`, or for the complex of M when null).
bool hochster_applicable(const Ideal& ideal, const PresentedModule& m, const SerreClass& s,
                         const SimplicialComplex* complex);

// Runs each requested route on (I, M, S). Verdict is Mismatch when two
// definite values (finite or infinite) differ, Inconclusive when a route has
// no definite value, Consistent otherwise. Throws ContractError when the
// Hochster route is requested on an instance it does not apply to.
DepthReport s_depth(const Ideal& ideal, const PresentedModule& m, const SerreClass& s, const DepthOptions& options = {});

}  // namespace sdepth
