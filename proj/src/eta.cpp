#include "tlq/eta.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "tlq/errors.hpp"
#include "tlq/spin_basis.hpp"

namespace tlq {

namespace {

void descend(std::vector<int>& cur, int n_sites, std::optional<int> endpoint,
             std::optional<double> r, std::vector<BratteliPath>& out) {
  if (static_cast<int>(cur.size()) == n_sites + 1) {
    if (!endpoint || cur.back() == *endpoint) out.push_back({cur});
    return;
  }
  // Raising branch first: matches the conventional listing where the
  // maximal-spin path leads.
  for (int step : {+1, -1}) {
    const int next = cur.back() + step;
    if (next < 0) continue;
    if (r && !(next + 1 < *r)) continue;
    cur.push_back(next);
    descend(cur, n_sites, endpoint, r, out);
    cur.pop_back();
  }
}

SparseMatrix dense_to_sparse(const DenseMatrix& m, double drop = 1e-14) {
  std::vector<Eigen::Triplet<Complex>> trips;
  for (long c = 0; c < m.cols(); ++c)
    for (long r = 0; r < m.rows(); ++r)
      if (std::abs(m(r, c)) > drop) trips.emplace_back(r, c, m(r, c));
  SparseMatrix s(m.rows(), m.cols());
  s.setFromTriplets(trips.begin(), trips.end());
  s.makeCompressed();
  return s;
}

// Oblique projector onto the endpoint-j subspace: sum of v v^T over the
// bilinearly normalised path states (the dual of |j,m> is its conjugate).
DenseMatrix endpoint_projector(const std::vector<BratteliPath>& group, const QContext& ctx,
                               long dim) {
  DenseMatrix pi = DenseMatrix::Zero(dim, dim);
  for (const auto& path : group) {
    for (int two_m = -path.endpoint(); two_m <= path.endpoint(); two_m += 2) {
      const Vector v = path_state(path, two_m, ctx).vector;
      pi.noalias() += v * v.transpose();
    }
  }
  return pi;
}

std::map<int, std::vector<BratteliPath>> paths_by_endpoint(int n_sites) {
  std::map<int, std::vector<BratteliPath>> groups;
  for (auto& p : enumerate_paths(n_sites)) groups[p.endpoint()].push_back(p);
  return groups;
}

double qfactorial(int k, const QContext& ctx) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out *= ctx.q_number(i);
  return out;
}

}  // namespace

std::vector<BratteliPath> enumerate_paths(int n_sites, std::optional<int> endpoint_two_j,
                                          std::optional<double> r) {
  if (n_sites < 1) throw std::domain_error("enumerate_paths: N must be >= 1");
  if (r && !(*r > 2.0)) throw std::domain_error("enumerate_paths: restricted filter needs r > 2");
  std::vector<BratteliPath> out;
  std::vector<int> cur{0};
  descend(cur, n_sites, endpoint_two_j, r, out);
  return out;
}

Complex cg(int two_j, int two_m, int two_alpha, FusionStep step, const QContext& ctx) {
  if (two_alpha != 1 && two_alpha != -1)
    throw std::domain_error("cg: alpha must be ±1/2");
  if (std::abs(two_m) > two_j) throw std::domain_error("cg: |m| > j");
  if (step == FusionStep::Lower && two_j < 1)
    throw std::domain_error("cg: cannot lower below spin 0");
  const double j = two_j / 2.0;
  const double m = two_m / 2.0;
  const double alpha = two_alpha / 2.0;
  double radicand;
  Complex phase;
  double sign = 1.0;
  if (step == FusionStep::Raise) {
    radicand = ctx.q_number(j + 2.0 * alpha * m + 1.0) / ctx.q_number(2.0 * j + 1.0);
    phase = ctx.q_pow(-alpha * j + m / 2.0);
  } else {
    radicand = ctx.q_number(j - 2.0 * alpha * m) / ctx.q_number(2.0 * j + 1.0);
    phase = ctx.q_pow(alpha * (j + 1.0) + m / 2.0);
    sign = 2.0 * alpha;
  }
  if (radicand < 0.0) {
    if (radicand < -ctx.tol)
      throw std::domain_error("cg: negative radicand (r too small for unrestricted paths)");
    radicand = 0.0;
  }
  return sign * phase * std::sqrt(radicand);
}

PathState path_state(const BratteliPath& path, int two_m, const QContext& ctx) {
  const int n = path.n_sites();
  if (std::abs(two_m) > path.endpoint() || ((two_m ^ n) & 1) != 0)
    throw std::domain_error("path_state: weight m out of range for the endpoint");
  const long dim = dim_of(n);
  Vector v = Vector::Zero(dim);
  const int downs = (n - two_m) / 2;
  for (long idx = 0; idx < dim; ++idx) {
    const auto u = static_cast<std::uint64_t>(idx);
    if (down_count(u) != downs) continue;
    Complex coef(1.0, 0.0);
    int two_partial = spin_down_at(u, 1, n) ? -1 : 1;
    bool ok = std::abs(two_partial) <= path.two_j[1];
    for (int k = 1; ok && k <= n - 1; ++k) {
      const int two_alpha = spin_down_at(u, k + 1, n) ? -1 : 1;
      const int step = path.two_j[static_cast<std::size_t>(k + 1)] -
                       path.two_j[static_cast<std::size_t>(k)];
      if (std::abs(two_partial) > path.two_j[static_cast<std::size_t>(k)]) {
        ok = false;
        break;
      }
      coef *= cg(path.two_j[static_cast<std::size_t>(k)], two_partial, two_alpha,
                 step > 0 ? FusionStep::Raise : FusionStep::Lower, ctx);
      two_partial += two_alpha;
      if (std::abs(two_partial) > path.two_j[static_cast<std::size_t>(k + 1)]) ok = false;
    }
    if (ok) v[idx] = coef;
  }
  return {path, two_m, std::move(v)};
}

SparseOperator build_eta(int n_sites, const QContext& ctx, bool restricted) {
  if (!restricted && !ctx.valid_for(n_sites))
    throw std::domain_error("build_eta: unrestricted sum needs r > N (got r=" +
                            std::to_string(ctx.r) + ", N=" + std::to_string(n_sites) + ")");
  if (restricted)
    std::cerr << "build_eta: restricted path filter in use; the metric identities are "
                 "only verified in the generic regime r > N\n";
  const long dim = dim_of(n_sites);
  const auto paths =
      enumerate_paths(n_sites, std::nullopt, restricted ? std::optional<double>(ctx.r) : std::nullopt);
  DenseMatrix eta = DenseMatrix::Zero(dim, dim);
  for (const auto& path : paths) {
    for (int two_m = -path.endpoint(); two_m <= path.endpoint(); two_m += 2) {
      const Vector v = path_state(path, two_m, ctx).vector;
      // |j,m>_T <j,m|_T with entrywise-conjugated coefficients
      eta.noalias() += v.conjugate() * v.transpose();
    }
  }

  const double scale = eta.norm();
  if ((eta - eta.adjoint()).norm() > ctx.tol * scale)
    throw StructuralError("build_eta: result not Hermitian");
  if (!restricted) {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(eta, Eigen::EigenvaluesOnly);
    if (!(es.eigenvalues().minCoeff() > 0.0))
      throw StructuralError("build_eta: metric not positive definite (min eig " +
                            std::to_string(es.eigenvalues().minCoeff()) + ")");
  }
  return {n_sites, "eta", dense_to_sparse(eta)};
}

SparseOperator build_Cprime(int n_sites, const QContext& ctx) {
  if (!ctx.valid_for(n_sites))
    throw std::domain_error("build_Cprime: needs the generic regime r > N");
  const long dim = dim_of(n_sites);
  const auto groups = paths_by_endpoint(n_sites);
  const auto qg = build_quantum_group(n_sites, ctx);
  const DenseMatrix sp = qg.s_plus.dense();
  const DenseMatrix sm = qg.s_minus.dense();

  DenseMatrix c = DenseMatrix::Zero(dim, dim);
  for (const auto& [two_j, group] : groups) {
    const DenseMatrix pi = endpoint_projector(group, ctx, dim);
    DenseMatrix a = DenseMatrix::Zero(dim, dim);
    DenseMatrix sm_pow = DenseMatrix::Identity(dim, dim);
    DenseMatrix sp_pow = DenseMatrix::Identity(dim, dim);
    int pow = 0;
    for (int two_m = (two_j % 2 == 0) ? 0 : 1; two_m <= two_j; two_m += 2) {
      while (pow < two_m) {
        sm_pow = sm * sm_pow;
        sp_pow = sp * sp_pow;
        ++pow;
      }
      const double factor =
          qfactorial((two_j - two_m) / 2, ctx) / qfactorial((two_j + two_m) / 2, ctx);
      DenseMatrix term = DenseMatrix::Zero(dim, dim);
      for (long idx = 0; idx < dim; ++idx) {
        const int w = two_weight(static_cast<std::uint64_t>(idx), n_sites);
        if (w == two_m) term.col(idx) += sm_pow.col(idx);
        if (w == -two_m) term.col(idx) += sp_pow.col(idx);
      }
      if (two_m == 0) term *= 0.5;
      a += factor * term;
    }
    const double sign = (((n_sites - two_j) / 2) % 2 == 0) ? 1.0 : -1.0;
    c.noalias() += sign * a * pi;
  }
  return {n_sites, "Cprime", dense_to_sparse(c)};
}

SparseOperator build_Cprime_path_action(int n_sites, const QContext& ctx) {
  if (!ctx.valid_for(n_sites))
    throw std::domain_error("build_Cprime_path_action: needs r > N");
  const long dim = dim_of(n_sites);
  DenseMatrix c = DenseMatrix::Zero(dim, dim);
  for (const auto& path : enumerate_paths(n_sites)) {
    const double sign = (((n_sites - path.endpoint()) / 2) % 2 == 0) ? 1.0 : -1.0;
    for (int two_m = -path.endpoint(); two_m <= path.endpoint(); two_m += 2) {
      const Vector from = path_state(path, two_m, ctx).vector;
      const Vector to = path_state(path, -two_m, ctx).vector;
      c.noalias() += sign * to * from.transpose();
    }
  }
  return {n_sites, "Cprime_path", dense_to_sparse(c)};
}

SparseOperator build_C(int n_sites, const QContext& ctx) {
  if (!ctx.valid_for(n_sites))
    throw std::domain_error("build_C: needs the generic regime r > N");
  const long dim = dim_of(n_sites);
  DenseMatrix braid = DenseMatrix::Identity(dim, dim);
  for (int k = 1; k <= n_sites - 1; ++k) {
    DenseMatrix beta_k = build_B(k, n_sites, ctx).dense();
    for (int i = k - 1; i >= 1; --i) beta_k = beta_k * build_B(i, n_sites, ctx).dense();
    braid = braid * beta_k;
  }
  const auto groups = paths_by_endpoint(n_sites);
  DenseMatrix c = DenseMatrix::Zero(dim, dim);
  for (const auto& [two_j, group] : groups) {
    const DenseMatrix pi = endpoint_projector(group, ctx, dim);
    const double j = two_j / 2.0;
    const double exponent = n_sites * (n_sites - 4) / 4.0 + j * (j + 1.0);
    c.noalias() += ctx.q_pow(exponent) * (braid * pi);
  }
  return {n_sites, "C", dense_to_sparse(c)};
}

MetricFactorization eta_sqrt_and_h(const SparseOperator& eta, const SparseOperator& hamiltonian,
                                   double tol) {
  const DenseMatrix em = eta.dense();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(em);
  if (es.info() != Eigen::Success) throw StructuralError("eta_sqrt_and_h: eigensolver failed");
  const auto& vals = es.eigenvalues();
  if (vals.minCoeff() <= 0.0)
    throw StructuralError("eta_sqrt_and_h: eta not positive definite (min eig " +
                          std::to_string(vals.minCoeff()) + ")");
  const DenseMatrix v = es.eigenvectors();
  const DenseMatrix sqrt_m =
      v * vals.cwiseSqrt().asDiagonal() * v.adjoint();
  const DenseMatrix inv_sqrt_m =
      v * vals.cwiseSqrt().cwiseInverse().asDiagonal() * v.adjoint();
  const DenseMatrix h = sqrt_m * hamiltonian.dense() * inv_sqrt_m;
  if ((h - h.adjoint()).norm() > tol * std::max(1.0, h.norm()))
    throw StructuralError("eta_sqrt_and_h: h failed the Hermiticity check");
  MetricFactorization out;
  out.eta_sqrt = {eta.n_sites, "eta_sqrt", dense_to_sparse(sqrt_m)};
  out.eta_inv_sqrt = {eta.n_sites, "eta_inv_sqrt", dense_to_sparse(inv_sqrt_m)};
  out.h = {eta.n_sites, "h", dense_to_sparse(h)};
  return out;
}

}  // namespace tlq
