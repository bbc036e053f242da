// Copyright 2026 The lars Authors
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

#include <benchmark/benchmark.h>

#include "lars/catalog.hpp"
#include "lars/certificates.hpp"
#include "lars/double_ext.hpp"
#include "lars/unitary.hpp"
#include "lars/weyl.hpp"

namespace {

using namespace lars;

void BM_VerifyAxioms(benchmark::State& state) {
  const auto desc = RootSystemDesc::make(Family::BC, Level::Twisted, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(desc, desc.J, -4, 4));
}
BENCHMARK(BM_VerifyAxioms)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RootSpaces(benchmark::State& state) {
  const auto real = Realization::make(RootSystemDesc::parse("C3:2"));
  for (auto _ : state) benchmark::DoNotOptimize(root_spaces(real, state.range(0)));
}
BENCHMARK(BM_RootSpaces)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_WeightSetAffine(benchmark::State& state) {
  const FormSpec form = FormSpec::for_family(Family::A);
  const Weight a = Weight::root({{"1", Rational(1)}, {"2", Rational(-1)}}, 0);
  const Weight lambda{Rational(1), {}, Rational(0)};
  for (auto _ : state) benchmark::DoNotOptimize(weight_set(lambda, {a, Weight::delta() - a}, form, state.range(0)));
}
BENCHMARK(BM_WeightSetAffine)->Arg(8)->Arg(16)->Arg(32);

void BM_EmbeddingCheck(benchmark::State& state) {
  const auto maps = iso_pair_maps(IsoPair::BD, 3);
  const auto basis = window_basis(Realization::make(maps[0].source), 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_embedding(maps[0], basis));
}
BENCHMARK(BM_EmbeddingCheck)->Unit(benchmark::kMillisecond);

void BM_CoreGram(benchmark::State& state) {
  const auto real = Realization::make(RootSystemDesc::parse("A3:1"));
  const auto rs = root_spaces(real, state.range(0));
  const auto star = StarInvolution::make(real);
  const auto basis = core_basis(real, rs);
  for (auto _ : state) benchmark::DoNotOptimize(is_psd_hermitian(kappa_sigma_gram(real, basis, star)));
}
BENCHMARK(BM_CoreGram)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
