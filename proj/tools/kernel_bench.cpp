// Micro-benchmark for the dispatched kernels: batched Sturm counts (the
// bisection inner loop) and quadrature dot products, scalar reference versus
// the active SIMD path.
//
// Usage: kernel-bench [dim] [shifts] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <vector>

#include "diracosc/kernels.hpp"
#include "diracosc/oracle.hpp"

using namespace diracosc;

namespace {

double seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  const int dim = argc > 1 ? std::atoi(argv[1]) : 4000;
  const int nshifts = argc > 2 ? std::atoi(argv[2]) : 8;
  const int reps = argc > 3 ? std::atoi(argv[3]) : 400;

  const auto nodes = radial_oracle_nodes(15.0, dim);
  const TridiagonalOperator T = discretize_radial(0, nodes);
  std::vector<double> e2(T.offdiag.size());
  for (std::size_t i = 0; i < e2.size(); ++i)
    e2[i] = T.offdiag[i] * T.offdiag[i];
  const double pivmin = 2.2250738585072014e-308 * (4.0 / (T.h * T.h));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(0.0, 30.0);
  std::vector<double> shifts(nshifts);
  for (double& s : shifts) s = dist(rng);
  std::vector<int> counts(nshifts);

  std::vector<double> w(dim), v(dim);
  for (int i = 0; i < dim; ++i) {
    w[i] = dist(rng);
    v[i] = dist(rng);
  }

  std::printf("active ISA: %s (lane width %d)\n",
              std::string(kernels::name(kernels::active())).c_str(),
              kernels::lane_width());

  for (kernels::Isa isa : {kernels::Isa::scalar, kernels::active()}) {
    kernels::force(isa);
    long checksum = 0;
    auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) {
      kernels::sturm_counts(T.diag, e2, pivmin, shifts, counts);
      checksum += counts[0];
    }
    const double dt_sturm = seconds(start);

    double acc = 0.0;
    start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps * 8; ++r) acc += kernels::weighted_dot(w, v);
    const double dt_dot = seconds(start);

    std::printf(
        "%-6s  sturm_counts(dim=%d, shifts=%d): %8.3f us/call   "
        "weighted_dot(n=%d): %8.3f us/call   [%ld %.3e]\n",
        std::string(kernels::name(isa)).c_str(), dim, nshifts,
        dt_sturm / reps * 1e6, dim, dt_dot / (reps * 8) * 1e6, checksum, acc);
  }
  return 0;
}
