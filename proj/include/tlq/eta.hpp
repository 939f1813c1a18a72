#pragma once

#include <optional>
#include <vector>

#include "tlq/qcontext.hpp"
#include "tlq/spin_rep.hpp"

namespace tlq {

/// Fusion path on the sl_2 Bratteli diagram, stored as twice the spins:
/// two_j[0] = 0, two_j[1] = 1, steps of ±1, all entries >= 0.
struct BratteliPath {
  std::vector<int> two_j;

  int n_sites() const { return static_cast<int>(two_j.size()) - 1; }
  int endpoint() const { return two_j.back(); }
  bool operator==(const BratteliPath&) const = default;
};

/// All paths of length N, raising branch first (so the spin-(N/2) path comes
/// first). Optional endpoint filter (twice the spin) and restricted-diagram
/// filter 2 j_k + 1 < r.
std::vector<BratteliPath> enumerate_paths(int n_sites,
                                          std::optional<int> endpoint_two_j = std::nullopt,
                                          std::optional<double> r = std::nullopt);

enum class FusionStep { Raise, Lower };

/// q-deformed Clebsch-Gordan coefficient for fusing (j, m) with (1/2, alpha)
/// to j ± 1/2. Arguments are twice the spins/weights; two_alpha = ±1.
Complex cg(int two_j, int two_m, int two_alpha, FusionStep step, const QContext& ctx);

/// Path basis vector |j, m> with product Clebsch-Gordan coefficients.
/// Normalised bilinearly: v^T v = 1 (the columns satisfy M^T M = 1 on the
/// unit circle, not M^† M = 1).
struct PathState {
  BratteliPath path;
  int two_m;
  Vector vector;  // full 2^N coefficient vector, supported on one weight sector
};

PathState path_state(const BratteliPath& path, int two_m, const QContext& ctx);

/// Path-projector metric: eta = sum over paths and weights of |j,m>_T <j,m|_T
/// with entrywise-conjugated coefficients. Hermitian, positive definite and
/// invertible in the generic regime; with `restricted` the sum runs over the
/// restricted diagram only (rank deficient for r <= N, warning emitted).
SparseOperator build_eta(int n_sites, const QContext& ctx, bool restricted = false);

/// Quantum-group construction of C' = R eta:
/// sector-wise sum of [j-m]!/[j+m]! (S∓)^{2m} δ_{Sz,±m} with the m = 0 term
/// halved, times the oblique projector onto the endpoint-j subspace.
SparseOperator build_Cprime(int n_sites, const QContext& ctx);

/// Cross-check route for C': the path-basis action |j,m> -> (-1)^{N/2-jN} |j,-m>.
SparseOperator build_Cprime_path_action(int n_sites, const QContext& ctx);

/// Braid construction of C = P eta: image of beta_1 beta_2 .. beta_{N-1},
/// beta_n = B_n B_{n-1} .. B_1, scaled by q^{N(N-4)/4 + j(j+1)} per endpoint sector.
SparseOperator build_C(int n_sites, const QContext& ctx);

struct MetricFactorization {
  SparseOperator eta_sqrt;
  SparseOperator eta_inv_sqrt;
  SparseOperator h;  // eta^{1/2} H eta^{-1/2}, Hermitian
};

/// Unique positive square root of eta via spectral decomposition, and the
/// equivalent Hermitian Hamiltonian h = eta^{1/2} H eta^{-1/2}.
MetricFactorization eta_sqrt_and_h(const SparseOperator& eta, const SparseOperator& hamiltonian,
                                   double tol);

}  // namespace tlq
