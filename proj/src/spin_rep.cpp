#include "tlq/spin_rep.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "tlq/errors.hpp"
#include "tlq/spin_basis.hpp"

namespace tlq {

namespace {

using Triplet = Eigen::Triplet<Complex>;

SparseMatrix from_triplets(long dim, const std::vector<Triplet>& trips) {
  SparseMatrix m(dim, dim);
  m.setFromTriplets(trips.begin(), trips.end());
  m.makeCompressed();
  return m;
}

void check_site_index(int i, int n_sites) {
  if (i < 1 || i > n_sites - 1)
    throw std::domain_error("bond index " + std::to_string(i) + " out of range for N=" +
                            std::to_string(n_sites) + " (valid 1.." +
                            std::to_string(n_sites - 1) + ")");
}

// The nonzero 4x4 kernel of E on two sites must square to -(q+q^{-1}) times
// itself; guards the Delta_- normalisation at startup.
void check_local_relation(const QContext& ctx) {
  const Complex q = ctx.q();
  Eigen::Matrix2cd block;
  block << -1.0 / q, 1.0, 1.0, -q;
  const Eigen::Matrix2cd lhs = block * block;
  const Eigen::Matrix2cd rhs = -(q + 1.0 / q) * block;
  if ((lhs - rhs).norm() > 1e-12 * rhs.norm())
    throw StructuralError("local TL block fails e^2 = -(q+q^{-1}) e");
}

}  // namespace

SparseOperator SparseOperator::adjoint() const {
  SparseOperator out{n_sites, name + "*", SparseMatrix(mat.adjoint())};
  out.mat.makeCompressed();
  return out;
}

DenseMatrix AntilinearOp::adjoint_action(const DenseMatrix& a) const {
  // K A K^{-1} with K = linear ∘ conj; permutation linear parts are real
  // orthogonal, so the inverse is the transpose.
  const DenseMatrix l = DenseMatrix(linear);
  return l * a.conjugate() * l.transpose();
}

SparseOperator build_E(int i, int n_sites, const QContext& ctx) {
  check_site_index(i, n_sites);
  check_local_relation(ctx);
  const long dim = dim_of(n_sites);
  const Complex q = ctx.q();
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(dim));
  for (long idx = 0; idx < dim; ++idx) {
    const auto u = static_cast<std::uint64_t>(idx);
    const int d1 = spin_down_at(u, i, n_sites);
    const int d2 = spin_down_at(u, i + 1, n_sites);
    if (d1 == d2) continue;  // E annihilates aligned pairs
    const long swapped = static_cast<long>(u ^ site_mask(i, n_sites) ^ site_mask(i + 1, n_sites));
    const Complex diag = (d1 == 0) ? -1.0 / q : -q;  // up-down vs down-up
    trips.emplace_back(idx, idx, diag);
    trips.emplace_back(swapped, idx, Complex(1.0));
  }
  return {n_sites, "E_" + std::to_string(i), from_triplets(dim, trips)};
}

SparseOperator build_H(int n_sites, const QContext& ctx) {
  if (n_sites < 2) throw std::domain_error("build_H: N must be >= 2");
  SparseMatrix h = build_E(1, n_sites, ctx).mat;
  for (int i = 2; i <= n_sites - 1; ++i) h = h + build_E(i, n_sites, ctx).mat;
  h.makeCompressed();
  return {n_sites, "H", std::move(h)};
}

std::vector<SparseOperator> build_all_E(int n_sites, const QContext& ctx) {
  std::vector<SparseOperator> out;
  out.reserve(static_cast<std::size_t>(n_sites - 1));
  for (int i = 1; i <= n_sites - 1; ++i) out.push_back(build_E(i, n_sites, ctx));
  return out;
}

QuantumGroupOps build_quantum_group(int n_sites, const QContext& ctx) {
  if (n_sites < 1) throw std::domain_error("build_quantum_group: N must be >= 1");
  const long dim = dim_of(n_sites);
  std::vector<Triplet> plus, minus, plus_op, minus_op, qsz, qsz_inv, sz;

  for (long idx = 0; idx < dim; ++idx) {
    const auto u = static_cast<std::uint64_t>(idx);
    const double m = two_weight(u, n_sites) / 2.0;
    qsz.emplace_back(idx, idx, ctx.q_pow(m));
    qsz_inv.emplace_back(idx, idx, ctx.q_pow(-m));
    sz.emplace_back(idx, idx, Complex(m));

    // Coproduct tails: q^{sz/2} on sites left of the flip, q^{-sz/2} right
    // of it; the opposite coproduct swaps the two.
    int two_left = 0;  // twice the weight of sites 1..s-1
    for (int s = 1; s <= n_sites; ++s) {
      const int down = spin_down_at(u, s, n_sites);
      const int two_right = two_weight(u, n_sites) - two_left - (down ? -1 : 1);
      const double tail = (two_left - two_right) / 2.0;
      if (down) {
        // sigma^+ flips down -> up
        const long flipped = static_cast<long>(u ^ site_mask(s, n_sites));
        plus.emplace_back(flipped, idx, ctx.q_pow(tail));
        plus_op.emplace_back(flipped, idx, ctx.q_pow(-tail));
      } else {
        const long flipped = static_cast<long>(u ^ site_mask(s, n_sites));
        minus.emplace_back(flipped, idx, ctx.q_pow(tail));
        minus_op.emplace_back(flipped, idx, ctx.q_pow(-tail));
      }
      two_left += down ? -1 : 1;
    }
  }

  QuantumGroupOps ops;
  ops.s_plus = {n_sites, "S+", from_triplets(dim, plus)};
  ops.s_minus = {n_sites, "S-", from_triplets(dim, minus)};
  ops.s_plus_op = {n_sites, "S+op", from_triplets(dim, plus_op)};
  ops.s_minus_op = {n_sites, "S-op", from_triplets(dim, minus_op)};
  ops.q_sz = {n_sites, "qSz", from_triplets(dim, qsz)};
  ops.q_sz_inv = {n_sites, "qSz_inv", from_triplets(dim, qsz_inv)};
  ops.sz = {n_sites, "Sz", from_triplets(dim, sz)};
  return ops;
}

SymmetryOps build_symmetries(int n_sites) {
  const long dim = dim_of(n_sites);
  std::vector<Triplet> p, r, t;
  for (long idx = 0; idx < dim; ++idx) {
    const auto u = static_cast<std::uint64_t>(idx);
    p.emplace_back(static_cast<long>(reverse_sites(u, n_sites)), idx, Complex(1.0));
    r.emplace_back(static_cast<long>(~u & (dim_of(n_sites) - 1)), idx, Complex(1.0));
    t.emplace_back(idx, idx, Complex(1.0));
  }
  SymmetryOps ops;
  ops.parity = {n_sites, "P", from_triplets(dim, p)};
  ops.spin_reversal = {n_sites, "R", from_triplets(dim, r)};
  ops.time_reversal = {n_sites, "T", from_triplets(dim, t)};
  return ops;
}

SparseOperator build_B(int i, int n_sites, const QContext& ctx) {
  check_site_index(i, n_sites);
  SparseMatrix id(dim_of(n_sites), dim_of(n_sites));
  id.setIdentity();
  SparseMatrix b = (1.0 / ctx.q()) * id + build_E(i, n_sites, ctx).mat;
  b.makeCompressed();
  return {n_sites, "B_" + std::to_string(i), std::move(b)};
}

SparseOperator build_B_inv(int i, int n_sites, const QContext& ctx) {
  check_site_index(i, n_sites);
  SparseMatrix id(dim_of(n_sites), dim_of(n_sites));
  id.setIdentity();
  SparseMatrix b = ctx.q() * id + build_E(i, n_sites, ctx).mat;
  b.makeCompressed();
  return {n_sites, "B_" + std::to_string(i) + "_inv", std::move(b)};
}

SparseOperator rep_of_word(const TLWord& w, const QContext& ctx) {
  const long dim = dim_of(w.n_sites);
  SparseMatrix acc(dim, dim);
  acc.setIdentity();
  const auto gens = build_all_E(w.n_sites, ctx);
  for (int letter : w.letters) acc = acc * gens[static_cast<std::size_t>(letter - 1)].mat;
  acc.makeCompressed();
  return {w.n_sites, "pi(" + word_to_string(w) + ")", std::move(acc)};
}

Vector apply_word(const TLWord& w, const Vector& v, const std::vector<SparseOperator>& gens) {
  Vector out = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out = gens[static_cast<std::size_t>(*it - 1)].mat * out;
  return out;
}

}  // namespace tlq
