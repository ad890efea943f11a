#include <benchmark/benchmark.h>

#include "sigbasis/critical.hpp"
#include "sigbasis/engine.hpp"
#include "sigbasis/problem.hpp"
#include "sigbasis/text.hpp"
#include "sigbasis/verify.hpp"

using namespace sigbasis;

namespace {

Problem load(const std::string& name, SigInit init = SigInit::shifted) {
  ProblemSpec spec = builtin_problem(name);
  spec.sig_init = init;
  return instantiate(spec);
}

const std::vector<Strategy>& strategies() {
  static const std::vector<Strategy> s = {Strategy::in_order(), Strategy::min_lm(), Strategy::f5(),
                                          Strategy::f5_pruned(), Strategy::f4(4)};
  return s;
}

void BM_MonomialCompare(benchmark::State& state) {
  Problem p = load("katsura6");
  Monomial a = parse_monomial("a^2*c*d^3", *p.part_space);
  Monomial b = parse_monomial("a*b^2*d*e^2", *p.part_space);
  for (auto _ : state)
    benchmark::DoNotOptimize(p.part_space->less(a, b));
}
BENCHMARK(BM_MonomialCompare);

void BM_MoraCriticalSet(benchmark::State& state) {
  Problem p = load("mora");
  SigSet g = p.prebasis();
  for (auto _ : state)
    benchmark::DoNotOptimize(critical_set(g));
}
BENCHMARK(BM_MoraCriticalSet);

void BM_Run(benchmark::State& state, const char* name) {
  Problem p = load(name);
  SigSet pre = p.prebasis();
  RunOptions o;
  o.strategy = strategies()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(o.strategy.name());
  for (auto _ : state)
    benchmark::DoNotOptimize(run(pre, o));
}
BENCHMARK_CAPTURE(BM_Run, mora, "mora")->DenseRange(0, 4);
BENCHMARK_CAPTURE(BM_Run, katsura5, "katsura5")->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, katsura6, "katsura6")->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Buchberger(benchmark::State& state, const char* name) {
  Problem p = load(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(buchberger(p.generators));
}
BENCHMARK_CAPTURE(BM_Buchberger, katsura5, "katsura5")->Unit(benchmark::kMillisecond);

void BM_BoundedSignatureCheck(benchmark::State& state) {
  Problem p = load("mora");
  RunResult r = run(p.prebasis(), RunOptions{});
  for (auto _ : state)
    benchmark::DoNotOptimize(bounded_signature_basis_check(r.basis, 8));
}
BENCHMARK(BM_BoundedSignatureCheck)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
