#include "tlq/checks.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "tlq/eta.hpp"
#include "tlq/functional.hpp"
#include "tlq/gns.hpp"
#include "tlq/spin_basis.hpp"
#include "tlq/spin_rep.hpp"

namespace tlq {

namespace {

double rel_dev(const SparseMatrix& a, const SparseMatrix& b) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return SparseMatrix(a - b).norm() / scale;
}

double rel_dev(const DenseMatrix& a, const DenseMatrix& b) {
  const double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

double zero_dev(const DenseMatrix& a, double scale) {
  return a.norm() / std::max(1.0, scale);
}

SparseMatrix sparse_id(long dim) {
  SparseMatrix id(dim, dim);
  id.setIdentity();
  return id;
}

std::vector<Complex> sorted_eigenvalues(const DenseMatrix& m) {
  Eigen::ComplexEigenSolver<DenseMatrix> es(m, false);
  std::vector<Complex> vals(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  std::sort(vals.begin(), vals.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return vals;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

double VerificationReport::max_deviation() const {
  double out = 0.0;
  for (const auto& r : records) out = std::max(out, r.deviation);
  return out;
}

void VerificationReport::add(std::string name, std::string anchor, double deviation,
                             double threshold) {
  records.push_back(
      {std::move(name), std::move(anchor), deviation, threshold, deviation <= threshold});
}

void VerificationReport::merge(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

void VerificationReport::print(std::ostream& os) const {
  for (const auto& r : records) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.anchor << ")  dev=" << r.deviation
       << " thr=" << r.threshold << "\n";
  }
  os << (all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
}

VerificationReport tl_relation_checks(int n_sites, const QContext& ctx) {
  VerificationReport rep;
  const auto gens = build_all_E(n_sites, ctx);
  const Complex loop = -(ctx.q() + 1.0 / ctx.q());
  const std::string tag = " [N=" + std::to_string(n_sites) + ",r=" + std::to_string(ctx.r) + "]";

  for (int i = 1; i <= n_sites - 1; ++i) {
    const auto& e = gens[static_cast<std::size_t>(i - 1)].mat;
    rep.add("E_" + std::to_string(i) + " square" + tag, "e_i^2 = -(q+q^{-1}) e_i",
            rel_dev(SparseMatrix(e * e), SparseMatrix(loop * e)), ctx.tol);
    if (i + 1 <= n_sites - 1) {
      const auto& f = gens[static_cast<std::size_t>(i)].mat;
      rep.add("E_" + std::to_string(i) + " absorb up" + tag, "e_i e_{i+1} e_i = e_i",
              rel_dev(SparseMatrix(e * f * e), e), ctx.tol);
      rep.add("E_" + std::to_string(i + 1) + " absorb down" + tag, "e_{i+1} e_i e_{i+1} = e_{i+1}",
              rel_dev(SparseMatrix(f * e * f), f), ctx.tol);
    }
    for (int j = i + 2; j <= n_sites - 1; ++j) {
      const auto& g = gens[static_cast<std::size_t>(j - 1)].mat;
      rep.add("E_" + std::to_string(i) + ",E_" + std::to_string(j) + " commute" + tag,
              "e_i e_j = e_j e_i for |i-j|>1", rel_dev(SparseMatrix(e * g), SparseMatrix(g * e)),
              ctx.tol);
    }
  }
  return rep;
}

VerificationReport quantum_group_checks(int n_sites, const QContext& ctx) {
  VerificationReport rep;
  const auto qg = build_quantum_group(n_sites, ctx);
  const auto gens = build_all_E(n_sites, ctx);
  const long dim = dim_of(n_sites);
  const std::string tag = " [N=" + std::to_string(n_sites) + ",r=" + std::to_string(ctx.r) + "]";

  rep.add("qSz invertible" + tag, "q^{Sz} q^{-Sz} = 1",
          rel_dev(SparseMatrix(qg.q_sz.mat * qg.q_sz_inv.mat), sparse_id(dim)), ctx.tol);
  rep.add("weight raise" + tag, "q^{Sz} S^+ q^{-Sz} = q S^+",
          rel_dev(SparseMatrix(qg.q_sz.mat * qg.s_plus.mat * qg.q_sz_inv.mat),
                  SparseMatrix(ctx.q() * qg.s_plus.mat)),
          ctx.tol);
  rep.add("weight lower" + tag, "q^{Sz} S^- q^{-Sz} = q^{-1} S^-",
          rel_dev(SparseMatrix(qg.q_sz.mat * qg.s_minus.mat * qg.q_sz_inv.mat),
                  SparseMatrix((1.0 / ctx.q()) * qg.s_minus.mat)),
          ctx.tol);

  SparseMatrix two_sz_q(dim, dim);
  {
    std::vector<Eigen::Triplet<Complex>> trips;
    for (long idx = 0; idx < dim; ++idx) {
      const int two_m = two_weight(static_cast<std::uint64_t>(idx), n_sites);
      trips.emplace_back(idx, idx, Complex(ctx.q_number(two_m)));
    }
    two_sz_q.setFromTriplets(trips.begin(), trips.end());
  }
  rep.add("ladder commutator" + tag, "[S^+, S^-] = [2 Sz]_q",
          rel_dev(SparseMatrix(qg.s_plus.mat * qg.s_minus.mat - qg.s_minus.mat * qg.s_plus.mat),
                  two_sz_q),
          ctx.tol);

  for (int i = 1; i <= n_sites - 1; ++i) {
    const auto& e = gens[static_cast<std::size_t>(i - 1)].mat;
    rep.add("[E_" + std::to_string(i) + ", S^+] = 0" + tag, "[E_i, S^±] = 0",
            rel_dev(SparseMatrix(e * qg.s_plus.mat), SparseMatrix(qg.s_plus.mat * e)), ctx.tol);
    rep.add("[E_" + std::to_string(i) + ", S^-] = 0" + tag, "[E_i, S^±] = 0",
            rel_dev(SparseMatrix(e * qg.s_minus.mat), SparseMatrix(qg.s_minus.mat * e)), ctx.tol);
  }
  return rep;
}

VerificationReport hecke_checks(int n_sites, const QContext& ctx) {
  VerificationReport rep;
  const long dim = dim_of(n_sites);
  const std::string tag = " [N=" + std::to_string(n_sites) + ",r=" + std::to_string(ctx.r) + "]";
  std::vector<SparseMatrix> b, binv;
  for (int i = 1; i <= n_sites - 1; ++i) {
    b.push_back(build_B(i, n_sites, ctx).mat);
    binv.push_back(build_B_inv(i, n_sites, ctx).mat);
  }
  const SparseMatrix id = sparse_id(dim);
  for (int i = 1; i <= n_sites - 1; ++i) {
    const auto& bi = b[static_cast<std::size_t>(i - 1)];
    rep.add("B_" + std::to_string(i) + " inverse" + tag, "b_i b_i^{-1} = b_i^{-1} b_i = 1",
            std::max(rel_dev(SparseMatrix(bi * binv[static_cast<std::size_t>(i - 1)]), id),
                     rel_dev(SparseMatrix(binv[static_cast<std::size_t>(i - 1)] * bi), id)),
            ctx.tol);
    rep.add("B_" + std::to_string(i) + " quadratic" + tag, "(b_i + q)(b_i - q^{-1}) = 0",
            rel_dev(SparseMatrix((bi + ctx.q() * id) * (bi - (1.0 / ctx.q()) * id)),
                    SparseMatrix(0.0 * id)),
            ctx.tol);
    if (i + 1 <= n_sites - 1) {
      const auto& bj = b[static_cast<std::size_t>(i)];
      rep.add("braid " + std::to_string(i) + "," + std::to_string(i + 1) + tag,
              "b_i b_{i+1} b_i = b_{i+1} b_i b_{i+1}",
              rel_dev(SparseMatrix(bi * bj * bi), SparseMatrix(bj * bi * bj)), ctx.tol);
    }
    for (int j = i + 2; j <= n_sites - 1; ++j) {
      rep.add("B_" + std::to_string(i) + ",B_" + std::to_string(j) + " commute" + tag,
              "b_i b_j = b_j b_i for |i-j|>1",
              rel_dev(SparseMatrix(bi * b[static_cast<std::size_t>(j - 1)]),
                      SparseMatrix(b[static_cast<std::size_t>(j - 1)] * bi)),
              ctx.tol);
    }
  }
  return rep;
}

VerificationReport symmetry_table_checks(int n_sites, const QContext& ctx) {
  VerificationReport rep;
  const auto sym = build_symmetries(n_sites);
  const auto qg = build_quantum_group(n_sites, ctx);
  const auto gens = build_all_E(n_sites, ctx);
  const DenseMatrix p = sym.parity.dense();
  const DenseMatrix r = sym.spin_reversal.dense();
  const DenseMatrix h = build_H(n_sites, ctx).dense();
  const long dim = dim_of(n_sites);
  const std::string tag = " [N=" + std::to_string(n_sites) + ",r=" + std::to_string(ctx.r) + "]";

  rep.add("P involution" + tag, "P^2 = 1", rel_dev(DenseMatrix(p * p), DenseMatrix::Identity(dim, dim)),
          ctx.tol);
  rep.add("R involution" + tag, "R^2 = 1", rel_dev(DenseMatrix(r * r), DenseMatrix::Identity(dim, dim)),
          ctx.tol);

  for (int k = 1; k <= n_sites - 1; ++k) {
    const DenseMatrix ek = gens[static_cast<std::size_t>(k - 1)].dense();
    const DenseMatrix emirror = gens[static_cast<std::size_t>(n_sites - k - 1)].dense();
    rep.add("parity row k=" + std::to_string(k) + tag, "P E_k P = E_{N-k}*",
            rel_dev(DenseMatrix(p * ek * p), DenseMatrix(emirror.adjoint())), ctx.tol);
    rep.add("time row k=" + std::to_string(k) + tag, "T E_k T = E_k*",
            rel_dev(sym.time_reversal.adjoint_action(ek), DenseMatrix(ek.adjoint())), ctx.tol);
    rep.add("spin row k=" + std::to_string(k) + tag, "R E_k R = E_k*",
            rel_dev(DenseMatrix(r * ek * r), DenseMatrix(ek.adjoint())), ctx.tol);
  }

  const DenseMatrix sp = qg.s_plus.dense();
  const DenseMatrix sm = qg.s_minus.dense();
  rep.add("parity QG row" + tag, "P S^± P = (S^∓)*",
          std::max(rel_dev(DenseMatrix(p * sp * p), DenseMatrix(sm.adjoint())),
                   rel_dev(DenseMatrix(p * sm * p), DenseMatrix(sp.adjoint()))),
          ctx.tol);
  rep.add("time QG row" + tag, "T S^± T = (S^∓)*",
          std::max(rel_dev(sym.time_reversal.adjoint_action(sp), DenseMatrix(sm.adjoint())),
                   rel_dev(sym.time_reversal.adjoint_action(sm), DenseMatrix(sp.adjoint()))),
          ctx.tol);
  rep.add("spin QG row" + tag, "R S^± R = (S^±)*",
          std::max(rel_dev(DenseMatrix(r * sp * r), DenseMatrix(sp.adjoint())),
                   rel_dev(DenseMatrix(r * sm * r), DenseMatrix(sm.adjoint()))),
          ctx.tol);

  // PT and RT are antilinear: the vanishing commutator means X conj(H) X = H.
  const double hscale = h.norm();
  rep.add("[PT, H] = 0" + tag, "[PT, H] = 0",
          zero_dev(DenseMatrix(p * h.conjugate() * p - h), hscale), ctx.tol);
  rep.add("[PR, H] = 0" + tag, "[PR, H] = 0",
          zero_dev(DenseMatrix((p * r) * h - h * (p * r)), hscale), ctx.tol);
  rep.add("[RT, H] = 0" + tag, "[RT, H] = 0",
          zero_dev(DenseMatrix(r * h.conjugate() * r - h), hscale), ctx.tol);
  return rep;
}

VerificationReport eta_metric_checks(int n_sites, const QContext& ctx) {
  VerificationReport rep;
  const long dim = dim_of(n_sites);
  const std::string tag = " [N=" + std::to_string(n_sites) + ",r=" + std::to_string(ctx.r) + "]";
  const DenseMatrix eta = build_eta(n_sites, ctx).dense();
  const DenseMatrix cprime = build_Cprime(n_sites, ctx).dense();
  const DenseMatrix cpath = build_Cprime_path_action(n_sites, ctx).dense();
  const DenseMatrix c = build_C(n_sites, ctx).dense();
  const auto sym = build_symmetries(n_sites);
  const auto qg = build_quantum_group(n_sites, ctx);
  const auto gens = build_all_E(n_sites, ctx);
  const DenseMatrix p = sym.parity.dense();
  const DenseMatrix r = sym.spin_reversal.dense();
  const DenseMatrix h = build_H(n_sites, ctx).dense();
  const DenseMatrix id = DenseMatrix::Identity(dim, dim);

  rep.add("eta Hermitian" + tag, "eta = eta*", rel_dev(eta, DenseMatrix(eta.adjoint())), 1e-12);
  {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(eta, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    rep.add("eta positive" + tag, "eta positive definite", min_eig > 0.0 ? 0.0 : -min_eig + 1.0,
            ctx.tol);
  }
  rep.add("three constructions agree (P C)" + tag, "eta = P C", (eta - p * c).cwiseAbs().maxCoeff(),
          1e-9);
  rep.add("three constructions agree (R C')" + tag, "eta = R C'",
          (eta - r * cprime).cwiseAbs().maxCoeff(), 1e-9);
  rep.add("C' quantum-group form matches path action" + tag,
          "C'|j,m> = (-1)^{N/2-jN} |j,-m>", rel_dev(cprime, cpath), ctx.tol);

  for (int k = 1; k <= n_sites - 1; ++k) {
    const DenseMatrix ek = gens[static_cast<std::size_t>(k - 1)].dense();
    const DenseMatrix emirror = gens[static_cast<std::size_t>(n_sites - k - 1)].dense();
    rep.add("eta TL row k=" + std::to_string(k) + tag, "eta E_k = E_k* eta",
            rel_dev(DenseMatrix(eta * ek), DenseMatrix(ek.adjoint() * eta)), ctx.tol);
    rep.add("C TL row k=" + std::to_string(k) + tag, "C E_k = E_{N-k} C",
            rel_dev(DenseMatrix(c * ek), DenseMatrix(emirror * c)), ctx.tol);
    rep.add("C' TL row k=" + std::to_string(k) + tag, "[C', E_k] = 0",
            rel_dev(DenseMatrix(cprime * ek), DenseMatrix(ek * cprime)), ctx.tol);
  }

  rep.add("eta Hamiltonian row" + tag, "eta H = H* eta",
          rel_dev(DenseMatrix(eta * h), DenseMatrix(h.adjoint() * eta)), ctx.tol);
  rep.add("C Hamiltonian row" + tag, "[C, H] = 0", rel_dev(DenseMatrix(c * h), DenseMatrix(h * c)),
          ctx.tol);
  rep.add("C' Hamiltonian row" + tag, "[C', H] = 0",
          rel_dev(DenseMatrix(cprime * h), DenseMatrix(h * cprime)), ctx.tol);

  const DenseMatrix sp = qg.s_plus.dense();
  const DenseMatrix sm = qg.s_minus.dense();
  const DenseMatrix spo = qg.s_plus_op.dense();
  const DenseMatrix smo = qg.s_minus_op.dense();
  const DenseMatrix sz = qg.sz.dense();
  rep.add("eta QG row" + tag, "eta S^± = S_op^± eta",
          std::max(rel_dev(DenseMatrix(eta * sp), DenseMatrix(spo * eta)),
                   rel_dev(DenseMatrix(eta * sm), DenseMatrix(smo * eta))),
          ctx.tol);
  rep.add("C QG row" + tag, "[C, S^±] = [C, Sz] = 0",
          std::max({rel_dev(DenseMatrix(c * sp), DenseMatrix(sp * c)),
                    rel_dev(DenseMatrix(c * sm), DenseMatrix(sm * c)),
                    rel_dev(DenseMatrix(c * sz), DenseMatrix(sz * c))}),
          ctx.tol);
  rep.add("C' QG row" + tag, "C' S^± = S^∓ C', C' Sz = -Sz C'",
          std::max({rel_dev(DenseMatrix(cprime * sp), DenseMatrix(sm * cprime)),
                    rel_dev(DenseMatrix(cprime * sm), DenseMatrix(sp * cprime)),
                    rel_dev(DenseMatrix(cprime * sz), DenseMatrix(-sz * cprime))}),
          ctx.tol);

  rep.add("C' involution" + tag, "C'^2 = 1", rel_dev(DenseMatrix(cprime * cprime), id), ctx.tol);
  rep.add("R eta R" + tag, "R eta R = eta^{-1}", rel_dev(DenseMatrix(r * eta * r * eta), id),
          ctx.tol);
  rep.add("P eta P" + tag, "P eta P = eta^{-1}", rel_dev(DenseMatrix(p * eta * p * eta), id),
          ctx.tol);
  rep.add("C and C' commute" + tag, "[C, C'] = 0",
          rel_dev(DenseMatrix(c * cprime), DenseMatrix(cprime * c)), ctx.tol);

  for (int i = 1; i <= n_sites - 1; ++i) {
    const DenseMatrix bi = build_B(i, n_sites, ctx).dense();
    const DenseMatrix binv = build_B_inv(i, n_sites, ctx).dense();
    rep.add("Hecke unitarity i=" + std::to_string(i) + tag, "eta B_i = (B_i^{-1})* eta",
            rel_dev(DenseMatrix(eta * bi), DenseMatrix(binv.adjoint() * eta)), ctx.tol);
  }

  // Resolution of identity in the path basis (bilinear pairing), and the
  // companion identity sum v v^† = eta^{-1}.
  DenseMatrix bilinear = DenseMatrix::Zero(dim, dim);
  DenseMatrix sesqui = DenseMatrix::Zero(dim, dim);
  for (const auto& path : enumerate_paths(n_sites)) {
    for (int two_m = -path.endpoint(); two_m <= path.endpoint(); two_m += 2) {
      const Vector v = path_state(path, two_m, ctx).vector;
      bilinear.noalias() += v * v.transpose();
      sesqui.noalias() += v * v.adjoint();
    }
  }
  rep.add("path completeness" + tag, "sum |j,m><j,m| = 1 (bilinear pairing)",
          rel_dev(bilinear, id), ctx.tol);
  rep.add("path frame inverse" + tag, "sum v v^† = eta^{-1}",
          rel_dev(DenseMatrix(sesqui * eta), id), ctx.tol);
  return rep;
}

VerificationReport spectral_checks(int n_sites, const QContext& ctx) {
  VerificationReport rep;
  const std::string tag = " [N=" + std::to_string(n_sites) + ",r=" + std::to_string(ctx.r) + "]";
  const SparseOperator hop = build_H(n_sites, ctx);
  const DenseMatrix h = hop.dense();
  const auto h_eigs = sorted_eigenvalues(h);
  double max_imag = 0.0;
  for (const auto& v : h_eigs) max_imag = std::max(max_imag, std::abs(v.imag()));
  rep.add("spectrum reality" + tag, "eig(H) real in regime (ii)", max_imag, 1e-8);

  const SparseOperator eta = build_eta(n_sites, ctx);
  const auto fact = eta_sqrt_and_h(eta, hop, ctx.tol);
  const DenseMatrix hh = fact.h.dense();
  rep.add("h Hermitian" + tag, "h = eta^{1/2} H eta^{-1/2} Hermitian",
          rel_dev(hh, DenseMatrix(hh.adjoint())), 1e-9);
  rep.add("sqrt consistency" + tag, "(eta^{1/2})^2 = eta",
          rel_dev(DenseMatrix(fact.eta_sqrt.dense() * fact.eta_sqrt.dense()), eta.dense()),
          ctx.tol);

  const auto h_eigs2 = sorted_eigenvalues(hh);
  double pair_dev = 0.0;
  for (std::size_t k = 0; k < h_eigs.size(); ++k)
    pair_dev = std::max(pair_dev, std::abs(h_eigs[k] - h_eigs2[k]));
  rep.add("isospectrality" + tag, "spec(h) = spec(H)", pair_dev, 1e-8);
  return rep;
}

VerificationReport run_relation_suite(int n_sites, const QContext& ctx) {
  VerificationReport rep;
  rep.merge(tl_relation_checks(n_sites, ctx));
  rep.merge(quantum_group_checks(n_sites, ctx));
  rep.merge(hecke_checks(n_sites, ctx));
  rep.merge(symmetry_table_checks(n_sites, ctx));
  rep.merge(eta_metric_checks(n_sites, ctx));
  rep.merge(spectral_checks(n_sites, ctx));
  return rep;
}

VerificationReport conjecture_suite(int n_sites, const QContext& ctx, unsigned long seed,
                                    int n_random, double threshold,
                                    std::optional<int> only_sector) {
  VerificationReport rep;
  const SparseOperator eta = build_eta(n_sites, ctx);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(1, std::max(1, n_sites - 1));
  std::uniform_int_distribution<int> length(1, 2 * n_sites);

  for (int n = 0; n <= n_sites; ++n) {
    if (only_sector && n != *only_sector) continue;
    std::vector<TLWord> sample;
    sample.reserve(static_cast<std::size_t>(n_random));
    for (int k = 0; k < n_random; ++k) {
      std::vector<int> letters;
      const int len = length(rng);
      letters.reserve(static_cast<std::size_t>(len));
      for (int l = 0; l < len; ++l) letters.push_back(letter(rng));
      sample.emplace_back(n_sites, std::move(letters));
    }
    const auto report = verify_conjecture(n_sites, n, ctx, sample, eta);
    const std::string tag = " [N=" + std::to_string(n_sites) + ",n=" + std::to_string(n) +
                            ",r=" + std::to_string(ctx.r) + "]";
    rep.add("Gram identity" + tag, "<x_i, eta x_j> = omega_n(a_i* a_j)",
            report.gram_identity_deviation, threshold);
    rep.add("word identity" + tag, "omega_n(a) = <Omega_n, pi(a) Omega_n>_eta",
            report.max_word_deviation, threshold);
  }
  return rep;
}

}  // namespace tlq
