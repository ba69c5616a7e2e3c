// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "igusa/counting.hpp"
#include "igusa/kernels.hpp"

using namespace igusa;

namespace {

const PolynomialMapping& mapping() {
    static const PolynomialMapping ff{{parse_polynomial("x^2*y + z^3 - x", 3), parse_polynomial("y*z + x^2", 3)}};
    return ff;
}

const Measure& measure() {
    static const Measure g = parse_polynomial("x*y*z + y^2 - z", 3);
    return g;
}

void BM_CountTriple(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_triple(mapping(), measure(), p));
}

void BM_CountTripleSerial(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_triple_serial(mapping(), measure(), p));
}

struct ResidueSetup {
    std::vector<kernels::CompiledPolynomial> fs;
    kernels::CompiledPolynomial g;
    kernels::ResidueDomain domain;

    ResidueSetup(std::uint64_t p, unsigned level) {
        std::uint64_t modulus = 1;
        for (unsigned i = 0; i < level; ++i) modulus *= p;
        for (const auto& f : mapping().components) fs.emplace_back(f, modulus);
        g = kernels::CompiledPolynomial(*measure(), modulus);
        domain.p = p;
        domain.level = level;
        std::vector<std::uint64_t> all;
        for (std::uint64_t r = 0; r < p; ++r) all.push_back(r);
        domain.allowed_mod_p.assign(3, all);
    }
};

void BM_Residues(benchmark::State& state) {
    ResidueSetup s(2, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::integrate_residues(s.fs, &s.g, s.domain, 1));
}

void BM_ResiduesSerial(benchmark::State& state) {
    ResidueSetup s(2, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::integrate_residues(s.fs, &s.g, s.domain, 1));
}

} // namespace

BENCHMARK(BM_CountTriple)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountTripleSerial)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Residues)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResiduesSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
