// Copyright 2026 The wulist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP for the hot kernels and batch decoding.
// Argument 0 runs serially, 1 in parallel.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wulist/goppa.hpp"
#include "wulist/grs.hpp"
#include "wulist/kernels.hpp"
#include "wulist/oracles.hpp"

using namespace wulist;

namespace {

kernels::Exec exec_of(const benchmark::State& st) {
  return st.range(0) ? kernels::Exec::parallel : kernels::Exec::serial;
}

Poly random_poly(const Field& f, int deg, std::mt19937& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = static_cast<Elem>(rng() % f.order());
  c.back() = 1;
  return Poly(f, c);
}

const FieldPtr& gf2_16() {
  static const FieldPtr f = Field::make(2, 16);
  return f;
}

void BM_EvaluateMany(benchmark::State& st) {
  std::mt19937 rng(1);
  const Poly p = random_poly(*gf2_16(), 255, rng);
  std::vector<Elem> xs(gf2_16()->order());
  std::iota(xs.begin(), xs.end(), Elem{0});
  for (auto _ : st) benchmark::DoNotOptimize(kernels::evaluate_many(p, xs, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(xs.size()));
}

void BM_FieldRoots(benchmark::State& st) {
  std::mt19937 rng(2);
  const Poly p = random_poly(*gf2_16(), 64, rng);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::field_roots(p, exec_of(st)));
}

void BM_BallScan(benchmark::State& st) {
  static const CodebookOracle book(GrsCode::standard(Field::make(2, 4), 15, 4));
  std::vector<Elem> r = book.words()[12345];
  r[0] ^= 1;
  r[7] ^= 3;
  for (auto _ : st) benchmark::DoNotOptimize(kernels::ball_scan(book.words(), r, 5, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(book.size()));
}

GoppaCode goppa(int m, int t, int n, std::uint64_t seed) {
  auto f = Field::make(2, static_cast<std::uint32_t>(m));
  std::vector<Elem> sup(static_cast<std::size_t>(n));
  std::iota(sup.begin(), sup.end(), Elem{0});
  return GoppaCode(f, random_goppa_poly(*f, t, seed), sup);
}

void BM_BallScanPacked(benchmark::State& st) {
  static const std::vector<std::uint64_t> packed = [] {
    const CodebookOracle book(goppa(5, 3, 32, 1));
    std::vector<std::uint64_t> out;
    for (const auto& w : book.words()) {
      std::uint64_t v = 0;
      for (std::size_t i = 0; i < w.size(); ++i) v |= std::uint64_t{w[i]} << i;
      out.push_back(v);
    }
    return out;
  }();
  const std::uint64_t r = packed[777] ^ 0x10204ULL;
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::ball_scan_packed(packed, r, 3, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(packed.size()));
}

template <class Code>
std::vector<std::vector<Elem>> noisy_words(const Code& code, std::size_t count, int w,
                                           std::mt19937& rng);

template <>
std::vector<std::vector<Elem>> noisy_words(const GrsCode& code, std::size_t count, int w,
                                           std::mt19937& rng) {
  const Field& f = code.field();
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto c = encode(code, random_poly(f, code.k() - 1, rng));
    std::vector<std::size_t> idx(c.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int e = 0; e < w; ++e) c[idx[e]] = f.add(c[idx[e]], 1 + rng() % (f.order() - 1));
    out.push_back(std::move(c));
  }
  return out;
}

template <>
std::vector<std::vector<Elem>> noisy_words(const GoppaCode& code, std::size_t count, int w,
                                           std::mt19937& rng) {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Elem> bits(static_cast<std::size_t>(code.k()));
    for (auto& b : bits) b = rng() & 1;
    auto c = goppa_encode(code, bits);
    std::vector<std::size_t> idx(c.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int e = 0; e < w; ++e) c[idx[e]] ^= 1;
    out.push_back(std::move(c));
  }
  return out;
}

void BM_DecodeBatchGrs(benchmark::State& st) {
  static const GrsCode code = GrsCode::standard(Field::make(13, 1), 12, 3);
  std::mt19937 rng(3);
  const auto words = noisy_words(code, 256, 6, rng);
  for (auto _ : st) benchmark::DoNotOptimize(decode_batch(code, words, 6, {}, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(words.size()));
}

void BM_DecodeBatchGoppa(benchmark::State& st) {
  static const GoppaCode code = goppa(6, 6, 64, 1);
  std::mt19937 rng(4);
  const auto words = noisy_words(code, 16, 7, rng);
  for (auto _ : st) benchmark::DoNotOptimize(decode_batch(code, words, 7, {}, exec_of(st)));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(words.size()));
}

}  // namespace

BENCHMARK(BM_EvaluateMany)->ArgName("parallel")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(BM_FieldRoots)->ArgName("parallel")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(BM_BallScan)->ArgName("parallel")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(BM_BallScanPacked)->ArgName("parallel")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(BM_DecodeBatchGrs)->ArgName("parallel")->Arg(0)->Arg(1)->UseRealTime();
BENCHMARK(BM_DecodeBatchGoppa)
    ->ArgName("parallel")
    ->Arg(0)
    ->Arg(1)
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
