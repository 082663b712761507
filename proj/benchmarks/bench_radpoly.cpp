#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "radpoly/basis.hpp"
#include "radpoly/geometry.hpp"
#include "radpoly/interpolation.hpp"
#include "radpoly/linalg.hpp"
#include "radpoly/radial_profile.hpp"
#include "radpoly/subspace_distance.hpp"

namespace {

using namespace radpoly;

PointSet centers_for(int n) {
  return halton_set(static_cast<int>(dim_h(n, 2)), unit_box(2));
}

void BM_assemble(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PointSet centers = centers_for(n);
  BasisFamily fam = make_regularized_basis(centers, n, RegularizedKind::chebyshev);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble(fam, centers));
  }
  state.SetComplexityN(static_cast<std::int64_t>(centers.size()));
}
BENCHMARK(BM_assemble)->Arg(4)->Arg(8)->Arg(12)->Complexity(benchmark::oNSquared);

void BM_fit(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PointSet centers = centers_for(n);
  BasisFamily fam = make_regularized_basis(centers, n, RegularizedKind::chebyshev);
  Vector vals(static_cast<Eigen::Index>(centers.size()));
  for (std::size_t i = 0; i < centers.size(); ++i) {
    vals(static_cast<Eigen::Index>(i)) = std::sin(centers.points[i][0] + centers.points[i][1]);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit(fam, centers, vals));
  }
}
BENCHMARK(BM_fit)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_profile_eval(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  RadialProfile prof = RadialProfile::from_roots(chebyshev_roots(n));
  double s = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prof(s));
    s = s < 1.0 ? s + 1e-6 : 0.0;
  }
}
BENCHMARK(BM_profile_eval)->Arg(5)->Arg(20)->Arg(60);

void BM_distance(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Box box{Point(-1.0, -1.0), Point(1.0, 1.0)};
  BasisFunction target{Point(0.0, 0.0), 1.0, Kernel{KernelKind::gaussian, 0.5}};
  FunctionSpaceSpec space = FunctionSpaceSpec::radial(n, box);
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_to_space(target, space, 40));
  }
}
BENCHMARK(BM_distance)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_gauss_legendre(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_legendre(m));
  }
}
BENCHMARK(BM_gauss_legendre)->Arg(20)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
