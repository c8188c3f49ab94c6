#include "braidlab/hopf.hpp"
#include "braidlab/operad.hpp"
#include "braidlab/specfile.hpp"

#include <benchmark/benchmark.h>

using namespace braidlab;

namespace {

void BM_SymmetrizerMatrix(benchmark::State& state) {
    YDSpace v = builtin_space("s3-rack-sign");
    const size_t n = (size_t)state.range(0);
    TensorComponent comp = TensorComponent::power(v, n);
    for (auto _ : state) {
        Matrix m = comp.sum_matrix(cached_symmetrizer(n));
        benchmark::DoNotOptimize(m);
    }
    state.SetComplexityN((int64_t)comp.dim());
}
BENCHMARK(BM_SymmetrizerMatrix)->DenseRange(2, 5)->Unit(benchmark::kMillisecond)->Complexity();

void BM_NicholsComponent(benchmark::State& state) {
    YDSpace v = builtin_space("s3-rack-sign");
    const unsigned n = (unsigned)state.range(0);
    for (auto _ : state) {
        NicholsComponent c = nichols_component(v, n);
        benchmark::DoNotOptimize(c.dim);
    }
}
BENCHMARK(BM_NicholsComponent)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_KernelRational(benchmark::State& state) {
    // kernel of 1 + braiding on the rack square power, a structured sparse case
    YDSpace v = builtin_space("s3-rack-sign");
    const size_t n = (size_t)state.range(0);
    TensorComponent comp = TensorComponent::power(v, n);
    Matrix m = comp.sum_matrix(shuffle_sum(1, n - 1));
    for (auto _ : state) {
        Subspace k = kernel_basis(m);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_KernelRational)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_GarsiaSymmetric(benchmark::State& state) {
    const size_t n = (size_t)state.range(0);
    BraidQuotient q = symmetric_quotient(n);
    Subspace ideal = brprim_level(q);
    for (auto _ : state) {
        GroupAlgebraElement e = garsia_idempotent(q.group(), ideal);
        benchmark::DoNotOptimize(e);
    }
}
BENCHMARK(BM_GarsiaSymmetric)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_FreePrimitives(benchmark::State& state) {
    YDSpace v = builtin_space("s3-rack-sign");
    const unsigned n = (unsigned)state.range(0);
    for (auto _ : state) {
        Subspace p = free_primitives(v, n);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_FreePrimitives)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
