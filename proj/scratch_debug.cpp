// scratch debug harness (not part of the build)
#include <cstdio>
#include <random>

#include "asmop/marginal.hpp"
#include "asmop/rng.hpp"

using namespace asmop;

int main() {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int q = 1 + static_cast<int>(bounded_uint(rng, 4));
    const int n = 2 + static_cast<int>(bounded_uint(rng, 5));
    std::vector<Vector> gradients;
    for (int i = 0; i < q; ++i) gradients.push_back(normal_vector(rng, n));
    const double tol = default_marginal_tol(q);
    const auto result = min_norm_point(gradients, tol);
    if (result.gap > tol) {
      std::printf("trial %d q=%d n=%d omega=%.12g gap=%.3g weights:", trial, q,
                  n, result.omega, result.gap);
      for (int i = 0; i < q; ++i) std::printf(" %.6g", result.weights[i]);
      std::printf("\n");
      // gram conditioning
      Matrix g(n, q);
      for (int i = 0; i < q; ++i) g.col(i) = gradients[i];
      Matrix gram = g.transpose() * g;
      Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
      std::printf("  gram eigs:");
      for (int i = 0; i < q; ++i) std::printf(" %.3g", es.eigenvalues()[i]);
      std::printf("\n");
    }
  }
  return 0;
}
