#include <benchmark/benchmark.h>

#include "carleson/carleson.hpp"
#include "carleson/sparse.hpp"
#include "carleson/verify.hpp"

using namespace carleson;

namespace {

Collection boxes_instance(int n, int d, std::uint64_t seed = 11) {
    GeneratorSpec spec;
    spec.kind = GenKind::boxes;
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    return generate(spec);
}

void BM_BuildFromBoxes(benchmark::State& state) {
    GeneratorSpec spec;
    spec.kind = GenKind::boxes;
    spec.n = static_cast<int>(state.range(0));
    spec.d = 2;
    spec.seed = 11;
    Instance inst = generate_instance(spec);
    for (auto _ : state) {
        Collection c = build(inst);
        benchmark::DoNotOptimize(c.atoms.size());
    }
}
BENCHMARK(BM_BuildFromBoxes)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_MaxFlow(benchmark::State& state) {
    Collection c = boxes_instance(static_cast<int>(state.range(0)), 2);
    Rat lambda = carleson_constant(c).lambda;
    for (auto _ : state) {
        FlowNetwork net = build_network(c, lambda);
        Flow f = max_flow(net);
        benchmark::DoNotOptimize(f.value);
    }
}
BENCHMARK(BM_MaxFlow)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_CarlesonConstant(benchmark::State& state) {
    Collection c = boxes_instance(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        CarlesonResult r = carleson_constant(c);
        benchmark::DoNotOptimize(r.lambda);
    }
}
BENCHMARK(BM_CarlesonConstant)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_SparseWitness(benchmark::State& state) {
    Collection c = boxes_instance(static_cast<int>(state.range(0)), 2);
    Rat lambda = carleson_constant(c).lambda;
    for (auto _ : state) {
        Selection sel = construct_selection(c, lambda);
        BoxRealization r = realize_boxes(c, sel);
        benchmark::DoNotOptimize(r.pieces.size());
    }
}
BENCHMARK(BM_SparseWitness)->Arg(25)->Arg(50)->Arg(100)->Arg(200);

void BM_BruteLambda(benchmark::State& state) {
    Collection c = boxes_instance(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        BruteLambda r = brute_lambda(c);
        benchmark::DoNotOptimize(r.lambda);
    }
}
BENCHMARK(BM_BruteLambda)->Arg(8)->Arg(12)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
