#include <benchmark/benchmark.h>

#include <sqcx/complexbuilder.hpp>
#include <sqcx/endo.hpp>
#include <sqcx/gbs.hpp>
#include <sqcx/linkcheck.hpp>
#include <sqcx/matdecomp.hpp>

using namespace sqcx;

namespace {

AutWord word_of_length(int n)
{
    AutWord w;
    for (int i = 0; i < n; ++i)
        w.body.push_back(i % 3 == 2 ? Eta::Rho : Eta::Lambda);
    w.tail = Tail::Psi2;
    return w;
}

void BM_Decompose(benchmark::State& st)
{
    Mat2Z g = Mat2Z::I();
    for (int i = 0; i < st.range(0); ++i)
        g = g * (i % 2 ? Mat2Z::L() : Mat2Z::R());
    for (auto _ : st)
        benchmark::DoNotOptimize(decompose(g));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(16)->Arg(40);

void BM_BuildSquareComplex(benchmark::State& st)
{
    AutWord w = word_of_length(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(build_square_complex(w));
}
BENCHMARK(BM_BuildSquareComplex)->Arg(3)->Arg(9)->Arg(27);

void BM_CheckNpc(benchmark::State& st)
{
    PE2Complex x = build_pe_complex(word_of_length(static_cast<int>(st.range(0))));
    for (auto _ : st)
        benchmark::DoNotOptimize(check_npc(x));
}
BENCHMARK(BM_CheckNpc)->Arg(3)->Arg(9)->Arg(27);

void BM_Homology(benchmark::State& st)
{
    PE2Complex x = build_square_complex(word_of_length(static_cast<int>(st.range(0))));
    for (auto _ : st)
        benchmark::DoNotOptimize(homology_h1(x));
}
BENCHMARK(BM_Homology)->Arg(3)->Arg(9)->Arg(27);

void BM_GbsSweep(benchmark::State& st)
{
    for (auto _ : st) {
        long n = 0;
        for_each_gbs_graph(2, 2, static_cast<int>(st.range(0)), [&](const GbsGraph& g) {
            benchmark::DoNotOptimize(classify(g));
            ++n;
        });
        st.counters["graphs"] = static_cast<double>(n);
    }
}
BENCHMARK(BM_GbsSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PeriodicSearch(benchmark::State& st)
{
    auto theta = Endomorphism::parse({"ab", "ba"}, 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(periodic_conjugacy_search(theta, static_cast<int>(st.range(0)), 3));
}
BENCHMARK(BM_PeriodicSearch)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
