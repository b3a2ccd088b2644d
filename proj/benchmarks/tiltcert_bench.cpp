#include "tiltcert/certify.hpp"
#include "tiltcert/heart.hpp"
#include "tiltcert/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace tiltcert;

void BM_Enclosure(benchmark::State& state) {
    const BivariatePoly f = BivariatePoly::parse("a*((1 + b)^2 - a^2)*(2*b^2 - 2*a^2 - 1)");
    const RationalInterval alpha = RationalInterval::open(Rational(0), Rational(1, 3));
    const RationalInterval beta(Rational(-1, 2), Rational(0));
    for (auto _ : state) benchmark::DoNotOptimize(f.enclosure(alpha, beta));
}
BENCHMARK(BM_Enclosure);

void BM_PointEval(benchmark::State& state) {
    const BivariatePoly f = cross_polynomial(generator_ch(HeartGenerator::OShift1, quadric_threefold()),
                                             generator_ch(HeartGenerator::OOne, quadric_threefold()), Rational(1, 6),
                                             quadric_threefold());
    for (auto _ : state) benchmark::DoNotOptimize(f.eval(Rational(1, 8), Rational(-3, 8)));
}
BENCHMARK(BM_PointEval);

void BM_CertifySubdivision(benchmark::State& state) {
    const BivariatePoly f = BivariatePoly::parse("b^2 + 2*b + 1 - a^2");
    const FactoredClaim c{"f", f, {{f, SignTarget::Positive, Strategy::IntervalSubdivision}}, SignTarget::Positive};
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(certify_sign(c, Region::standard(), 16, threads));
}
BENCHMARK(BM_CertifySubdivision)->Arg(1)->Arg(4);

void BM_SkyscraperReduction(benchmark::State& state) {
    const std::vector<SignFact> facts{{HeartGenerator::SpinorShift2, SignScope::FullRegion, true, true},
                                      {HeartGenerator::OShift1, SignScope::AlphaAtMostMinusBeta, true, false},
                                      {HeartGenerator::OShift1, SignScope::AlphaAtLeastMinusBeta, false, false}};
    const CandidateSet cands = skyscraper_candidates();
    for (auto _ : state) benchmark::DoNotOptimize(reduce_candidates(cands, facts));
}
BENCHMARK(BM_SkyscraperReduction);

void BM_VerifyAll(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_all());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
