#include <benchmark/benchmark.h>

#include <hypcheck/catalog.hpp>
#include <hypcheck/limits.hpp>
#include <hypcheck/suite.hpp>

using namespace hypcheck;

namespace {

void BM_pochhammer(benchmark::State& state) {
    const Rational a(3, 7);
    const long k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pochhammer(a, k));
}
BENCHMARK(BM_pochhammer)->Arg(8)->Arg(32)->Arg(128);

void BM_eval_terminating(benchmark::State& state) {
    SeriesSpecQ s;
    s.numerators = {Rational(-state.range(0)), Rational(1, 2), Rational(2, 3), Rational(5, 3)};
    s.denominators = {Rational(5, 7), Rational(9, 2), Rational(13, 5)};
    s.argument = Rational(1, 4);
    for (auto _ : state) benchmark::DoNotOptimize(eval_terminating(s));
}
BENCHMARK(BM_eval_terminating)->Arg(8)->Arg(64);

void BM_check_identity(benchmark::State& state) {
    const IdentityEntry& e = find_entry("P3.2");
    const std::vector<Rational> params = {Rational(1, 3), Rational(1, 5), Rational(2, 7)};
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(check_identity<Rational>(e, n, params));
}
BENCHMARK(BM_check_identity)->Arg(2)->Arg(8);

void BM_check_identity_perturbed(benchmark::State& state) {
    const PerturbedSample s =
        perturb_param(state.range(0), {Rational(1, 3), Rational(1, 5), Rational(2, 7)}, 2);
    for (auto _ : state) benchmark::DoNotOptimize(check_identity_perturbed("RI5", s));
}
BENCHMARK(BM_check_identity_perturbed)->Arg(2)->Arg(6);

void BM_omega_chu(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(omega_chu(state.range(0), -2));
}
BENCHMARK(BM_omega_chu)->Arg(2)->Arg(6);

void BM_suite_one_id(benchmark::State& state) {
    SuiteConfig cfg;
    cfg.ids = {"TI3"};
    cfg.samples = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg));
}
BENCHMARK(BM_suite_one_id)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
