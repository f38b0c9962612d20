#include "occam/coder.hpp"
#include "occam/kernels.hpp"
#include "occam/network.hpp"
#include "occam/projector.hpp"
#include "occam/rng.hpp"

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

using namespace occam;

namespace {

kernels::Matrix<float> random_matrix(Eigen::Index r, Eigen::Index c, std::uint64_t seed) {
  RandomStream rng(seed, 0);
  kernels::Matrix<float> m(r, c);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = static_cast<float>(rng.normal());
  return m;
}

void BM_GemmParallel(benchmark::State& st) {
  const auto n = st.range(0);
  const auto a = random_matrix(n, n, 1), b = random_matrix(n, 4 * n, 2);
  kernels::Matrix<float> c(n, 4 * n);
  for (auto _ : st) {
    kernels::gemm<float>(a, false, b, false, c);
    benchmark::DoNotOptimize(c.data());
  }
  st.SetItemsProcessed(st.iterations() * 2 * n * n * 4 * n);
}

void BM_GemmSerial(benchmark::State& st) {
  const auto n = st.range(0);
  const auto a = random_matrix(n, n, 1), b = random_matrix(n, 4 * n, 2);
  kernels::Matrix<float> c(n, 4 * n);
  for (auto _ : st) {
    kernels::serial::gemm<float>(a, false, b, false, c);
    benchmark::DoNotOptimize(c.data());
  }
  st.SetItemsProcessed(st.iterations() * 2 * n * n * 4 * n);
}

void BM_Im2colParallel(benchmark::State& st) {
  const auto in = random_matrix(16, 128 * 14 * 14, 3);
  kernels::Matrix<float> cols;
  for (auto _ : st) {
    kernels::im2col3x3<float>(in, 128, 14, 14, cols);
    benchmark::DoNotOptimize(cols.data());
  }
}

void BM_Im2colSerial(benchmark::State& st) {
  const auto in = random_matrix(16, 128 * 14 * 14, 3);
  kernels::Matrix<float> cols;
  for (auto _ : st) {
    kernels::serial::im2col3x3<float>(in, 128, 14, 14, cols);
    benchmark::DoNotOptimize(cols.data());
  }
}

void projector_apply(benchmark::State& st, ProjectorKind kind) {
  ProjectorSpec s;
  s.kind = kind;
  s.D = static_cast<std::size_t>(st.range(0));
  s.d = static_cast<std::size_t>(st.range(1));
  s.seed = 1;
  const Projector p(s);
  std::vector<double> w(s.d, 0.5), out(s.D);
  for (auto _ : st) {
    p.apply(w, out);
    benchmark::DoNotOptimize(out.data());
  }
}

void BM_ProjectKronProduct(benchmark::State& st) { projector_apply(st, ProjectorKind::kron_product); }
void BM_ProjectKronSum(benchmark::State& st) { projector_apply(st, ProjectorKind::kron_sum); }
void BM_ProjectSparse(benchmark::State& st) { projector_apply(st, ProjectorKind::sparse); }
void BM_ProjectDense(benchmark::State& st) { projector_apply(st, ProjectorKind::dense); }

void BM_EncodeDecode(benchmark::State& st) {
  const auto d = static_cast<std::size_t>(st.range(0));
  RandomStream rng(4, 0);
  std::vector<std::uint32_t> q(d);
  for (auto& s : q) s = static_cast<std::uint32_t>(std::min<std::uint64_t>(rng.below(7), rng.below(7)));
  const auto model = symbol_counts(q, 7);
  for (auto _ : st) {
    const auto bits = encode(q, model);
    benchmark::DoNotOptimize(decode(bits, model, d));
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(d));
}

void train_step(benchmark::State& st, const ModelSpec& spec) {
  Network<float> net(spec);
  const auto theta = init_params(spec, 1);
  Dataset data;
  data.channels = spec.channels;
  data.height = spec.height;
  data.width = spec.image_width;
  data.classes = spec.classes;
  const int n = 128;
  RandomStream rng(5, 0);
  data.inputs.resize(static_cast<std::size_t>(n) * spec.input_size());
  for (auto& v : data.inputs) v = static_cast<float>(rng.uniform());
  data.labels.resize(n);
  for (auto& y : data.labels) y = static_cast<std::int32_t>(rng.below(10));
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  const auto x = net.pack(data, idx);
  std::vector<float> grad(theta.size());
  for (auto _ : st) {
    net.forward(theta.span(), x, n, Mode::train, nullptr);
    benchmark::DoNotOptimize(net.backward(theta.span(), data.labels, grad));
  }
}

void BM_TrainStepMlp(benchmark::State& st) { train_step(st, ModelSpec{}); }

void BM_TrainStepConvNet(benchmark::State& st) {
  ModelSpec s;
  s.arch = Architecture::convnet;
  s.width = static_cast<int>(st.range(0));
  s.batchnorm = true;
  train_step(st, s);
}

}  // namespace

BENCHMARK(BM_GemmParallel)->Arg(64)->Arg(256);
BENCHMARK(BM_GemmSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_Im2colParallel);
BENCHMARK(BM_Im2colSerial);
BENCHMARK(BM_ProjectKronProduct)->Args({25450, 1000})->Args({1000000, 10000});
BENCHMARK(BM_ProjectKronSum)->Args({25450, 1000})->Args({1000000, 10000});
BENCHMARK(BM_ProjectSparse)->Args({25450, 1000});
BENCHMARK(BM_ProjectDense)->Args({25450, 1000});
BENCHMARK(BM_EncodeDecode)->Arg(1000)->Arg(100000);
BENCHMARK(BM_TrainStepMlp);
BENCHMARK(BM_TrainStepConvNet)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
