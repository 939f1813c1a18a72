#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "oracles.hpp"
#include "tlq/checks.hpp"
#include "tlq/functional.hpp"
#include "tlq/spin_basis.hpp"
#include "tlq/spin_rep.hpp"

using namespace tlq;

namespace {

double rel(const DenseMatrix& a, const DenseMatrix& b) {
  return (a - b).norm() / std::max({1.0, a.norm(), b.norm()});
}

// Explicit Pauli-matrix construction of the full Hamiltonian, boundary term
// included, as an independent cross-check of the local building blocks.
DenseMatrix pauli_hamiltonian(int n_sites, const QContext& ctx) {
  const long dim = dim_of(n_sites);
  const Complex dplus = (ctx.q() + 1.0 / ctx.q()) / 2.0;
  const Complex dminus = (ctx.q() - 1.0 / ctx.q()) / 2.0;
  DenseMatrix h = DenseMatrix::Zero(dim, dim);
  auto sz = [&](std::uint64_t state, int site) {
    return spin_down_at(state, site, n_sites) ? -1.0 : 1.0;
  };
  for (long col = 0; col < dim; ++col) {
    const auto u = static_cast<std::uint64_t>(col);
    for (int i = 1; i <= n_sites - 1; ++i) {
      // (sx sx + sy sy)/2 flips an antiparallel pair
      if (spin_down_at(u, i, n_sites) != spin_down_at(u, i + 1, n_sites)) {
        const long row =
            static_cast<long>(u ^ site_mask(i, n_sites) ^ site_mask(i + 1, n_sites));
        h(row, col) += 1.0;
      }
      h(col, col) += dplus * (sz(u, i) * sz(u, i + 1) - 1.0) / 2.0;
    }
    h(col, col) += dminus * (sz(u, 1) - sz(u, n_sites)) / 2.0;
  }
  return h;
}

}  // namespace

TEST_CASE("build_E local structure at N=2") {
  const QContext ctx{5.5};
  const Complex q = ctx.q();
  const DenseMatrix e = build_E(1, 2, ctx).dense();
  CHECK(e.rows() == 4);
  CHECK(std::abs(e(0, 0)) < 1e-15);  // annihilates up-up
  CHECK(std::abs(e(3, 3)) < 1e-15);  // annihilates down-down
  CHECK(e(1, 1) == -1.0 / q);        // up-down diagonal
  CHECK(e(2, 2) == -q);              // down-up diagonal
  CHECK(e(1, 2) == Complex(1.0));
  CHECK(e(2, 1) == Complex(1.0));
  CHECK((e(1, 1) + e(2, 2)).real() == doctest::Approx(-ctx.loop_scalar()));
  CHECK_THROWS_AS(build_E(2, 2, ctx), std::domain_error);
}

TEST_CASE("TL matrix relations") {
  for (int n = 2; n <= 6; ++n) {
    const QContext ctx{n + 1.5};
    CHECK(tl_relation_checks(n, ctx).all_pass());
  }
}

TEST_CASE("H equals both the E-sum and the explicit Pauli form") {
  for (int n : {2, 3, 4, 5}) {
    const QContext ctx{n + 2.0};
    const DenseMatrix h = build_H(n, ctx).dense();
    CHECK(rel(h, pauli_hamiltonian(n, ctx)) < 1e-14);
  }
  CHECK_THROWS_AS(build_H(1, QContext{3.0}), std::domain_error);
}

TEST_CASE("H has real spectrum but is not normal") {
  const QContext ctx{5.5};
  const DenseMatrix h = build_H(4, ctx).dense();
  Eigen::ComplexEigenSolver<DenseMatrix> es(h, false);
  for (long k = 0; k < h.rows(); ++k) CHECK(std::abs(es.eigenvalues()[k].imag()) < 1e-8);

  const DenseMatrix hstar = h.adjoint();
  CHECK((h - hstar).norm() > 1e-3);              // H != H*
  CHECK((h * hstar - hstar * h).norm() > 1e-3);  // and they do not commute
}

TEST_CASE("quantum group representation") {
  const QContext ctx{4.5};

  // one site: bare ladder operators and q^{±1/2} weights
  const auto qg1 = build_quantum_group(1, ctx);
  CHECK(qg1.s_plus.dense()(0, 1) == Complex(1.0));
  CHECK(qg1.s_plus.dense()(1, 0) == Complex(0.0));
  CHECK(qg1.s_minus.dense()(1, 0) == Complex(1.0));
  CHECK(qg1.q_sz.dense()(0, 0) == ctx.q_pow(0.5));
  CHECK(qg1.q_sz.dense()(1, 1) == ctx.q_pow(-0.5));

  const auto qg = build_quantum_group(2, ctx);
  const DenseMatrix comm =
      qg.s_plus.dense() * qg.s_minus.dense() - qg.s_minus.dense() * qg.s_plus.dense();
  DenseMatrix expected = DenseMatrix::Zero(4, 4);
  for (long idx = 0; idx < 4; ++idx)
    expected(idx, idx) = ctx.q_number(two_weight(static_cast<std::uint64_t>(idx), 2));
  CHECK(rel(comm, expected) < 1e-13);

  const DenseMatrix e1 = build_E(1, 2, ctx).dense();
  CHECK((e1 * qg.s_plus.dense() - qg.s_plus.dense() * e1).norm() < 1e-13);

  for (int n = 2; n <= 5; ++n) CHECK(quantum_group_checks(n, QContext{n + 1.0}).all_pass());
}

TEST_CASE("discrete symmetries and their table") {
  const QContext ctx{4.5};
  const auto sym = build_symmetries(3);
  const DenseMatrix p = sym.parity.dense();
  const DenseMatrix r = sym.spin_reversal.dense();
  CHECK(rel(p * p, DenseMatrix::Identity(8, 8)) < 1e-15);
  CHECK(rel(r * r, DenseMatrix::Identity(8, 8)) < 1e-15);

  // T is antilinear with identity linear part
  Vector v = Vector::Zero(8);
  v[3] = Complex(0.0, 2.0);
  CHECK(sym.time_reversal.apply(v)[3] == Complex(0.0, -2.0));

  const DenseMatrix e1 = build_E(1, 3, ctx).dense();
  const DenseMatrix e2 = build_E(2, 3, ctx).dense();
  CHECK(rel(p * e1 * p, e2.adjoint()) < 1e-14);

  for (int n = 2; n <= 5; ++n) CHECK(symmetry_table_checks(n, QContext{n + 1.3}).all_pass());
}

TEST_CASE("Hecke images") {
  for (int n : {2, 3, 4}) {
    const QContext ctx{n + 1.7};
    CHECK(hecke_checks(n, ctx).all_pass());
  }
  // spot values: B_1 B_1^{-1} = 1 and braid relation at N=3
  const QContext ctx{4.6};
  const DenseMatrix b1 = build_B(1, 3, ctx).dense();
  const DenseMatrix b1i = build_B_inv(1, 3, ctx).dense();
  const DenseMatrix b2 = build_B(2, 3, ctx).dense();
  CHECK(rel(b1 * b1i, DenseMatrix::Identity(8, 8)) < 1e-14);
  CHECK(rel(b1 * b2 * b1, b2 * b1 * b2) < 1e-14);
}

TEST_CASE("rep_of_word") {
  const QContext ctx{4.5};
  CHECK(rel(rep_of_word(TLWord::unit(3), ctx).dense(), DenseMatrix::Identity(8, 8)) == 0.0);
  CHECK(rel(rep_of_word(TLWord(3, {1, 2, 1}), ctx).dense(),
            rep_of_word(TLWord(3, {1}), ctx).dense()) < 1e-14);

  // star(w) maps to the reversed product
  const TLWord w(3, {1, 2});
  const DenseMatrix reversed = build_E(2, 3, ctx).dense() * build_E(1, 3, ctx).dense();
  CHECK(rel(rep_of_word(star(w), ctx).dense(), reversed) < 1e-15);
}

TEST_CASE("diagram and matrix representations are consistent") {
  std::mt19937_64 rng(41);
  for (int n_sites : {3, 4}) {
    const QContext ctx{n_sites + 1.5};
    // loop-free representatives per pairing
    std::map<std::vector<int>, DenseMatrix> rep_cache;
    for (const auto& w : tlq_test::random_words(n_sites, 40, 6, rng)) {
      const PlanarDiagram d = word_to_diagram(w);
      const DenseMatrix m = rep_of_word(w, ctx).dense();
      auto it = rep_cache.find(d.pairing());
      if (it == rep_cache.end()) {
        const double undo = std::pow(-ctx.loop_scalar(), static_cast<double>(d.loops()));
        rep_cache.emplace(d.pairing(), m / undo);
      } else {
        const double scale = std::pow(-ctx.loop_scalar(), static_cast<double>(d.loops()));
        CHECK(rel(m, scale * it->second) < 1e-12);
      }
    }
  }
}

TEST_CASE("operators preserve or shift the down-spin sectors") {
  const QContext ctx{6.5};
  const int n = 5;
  auto classify = [&](const SparseMatrix& m, int shift) {
    for (int k = 0; k < m.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(m, k); it; ++it) {
        CHECK(down_count(static_cast<std::uint64_t>(it.row())) ==
              down_count(static_cast<std::uint64_t>(it.col())) + shift);
      }
  };
  classify(build_H(n, ctx).mat, 0);
  for (int i = 1; i <= n - 1; ++i) classify(build_E(i, n, ctx).mat, 0);
  const auto qg = build_quantum_group(n, ctx);
  classify(qg.q_sz.mat, 0);
  classify(qg.s_plus.mat, -1);
  classify(qg.s_minus.mat, +1);
}
