#include <benchmark/benchmark.h>

#include "sdepth/script.hpp"
#include "sdepth/serre_depth.hpp"

namespace {

using namespace sdepth;

SimplicialComplex rp2() {
  const std::vector<std::vector<int>> facets = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                                {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}};
  std::vector<Face> fs;
  for (const auto& f : facets) {
    Face face = 0;
    for (int v : f) face |= Face{1} << (v - 1);
    fs.push_back(face);
  }
  return SimplicialComplex(6, fs);
}

RingPtr ring6(CoefField field) { return make_ring(field, {"a", "b", "c", "d", "e", "f"}); }

void BM_BuchbergerCyclic4(benchmark::State& state) {
  auto r = make_ring(CoefField::prime(32003), {"a", "b", "c", "d"});
  std::vector<Polynomial> gens;
  for (const char* g : {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - 1"})
    gens.push_back(parse_polynomial(r, g));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(r, gens));
}
BENCHMARK(BM_BuchbergerCyclic4)->Unit(benchmark::kMillisecond);

void BM_BuchbergerKatsura3(benchmark::State& state) {
  auto r = make_ring(CoefField::rationals(), {"x", "y", "z", "w"});
  std::vector<Polynomial> gens;
  for (const char* g : {"x + 2*y + 2*z + 2*w - 1", "x^2 + 2*y^2 + 2*z^2 + 2*w^2 - x", "2*x*y + 2*y*z + 2*z*w - y",
                        "y^2 + 2*x*z + 2*y*w - z"})
    gens.push_back(parse_polynomial(r, g));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(r, gens));
}
BENCHMARK(BM_BuchbergerKatsura3)->Unit(benchmark::kMillisecond);

void BM_ExtScanRP2(benchmark::State& state) {
  auto r = ring6(state.range(0) ? CoefField::prime(2) : CoefField::rationals());
  PresentedModule m = PresentedModule::quotient_ring(stanley_reisner_ideal(rp2(), r));
  for (auto _ : state) benchmark::DoNotOptimize(ext_scan(Ideal::maximal(r), m, SerreClass::zero(), 7));
}
BENCHMARK(BM_ExtScanRP2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_HochsterRP2(benchmark::State& state) {
  const SimplicialComplex d = rp2();
  const CoefField field = state.range(0) ? CoefField::prime(2) : CoefField::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(hochster_depth(d, field, 7));
}
BENCHMARK(BM_HochsterRP2)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_SequenceRouteRP2(benchmark::State& state) {
  auto r = ring6(CoefField::prime(2));
  PresentedModule m = PresentedModule::quotient_ring(stanley_reisner_ideal(rp2(), r));
  for (auto _ : state)
    benchmark::DoNotOptimize(extend_to_maximal({}, m, Ideal::maximal(r), SerreClass::zero(), 0));
}
BENCHMARK(BM_SequenceRouteRP2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
