#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <string>
#include <vector>

#include "tlq/diagram.hpp"
#include "tlq/qcontext.hpp"

namespace tlq {

using SparseMatrix = Eigen::SparseMatrix<Complex>;
using DenseMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Complex linear operator on the 2^N-dimensional spin space, stored
/// sparsely. Basis order per spin_basis.hpp (site 1 = MSB, up = 0).
struct SparseOperator {
  int n_sites = 1;
  std::string name;
  SparseMatrix mat;

  long dim() const { return mat.rows(); }
  DenseMatrix dense() const { return DenseMatrix(mat); }
  SparseOperator adjoint() const;
};

/// Antilinear map v -> linear * conj(v). Time reversal T has the identity
/// as its linear part.
struct AntilinearOp {
  int n_sites = 1;
  std::string name;
  SparseMatrix linear;

  Vector apply(const Vector& v) const { return linear * v.conjugate(); }
  /// K A K^{-1} for K = linear ∘ conj; equals conj(A) when linear == 1.
  DenseMatrix adjoint_action(const DenseMatrix& a) const;
};

/// Local TL generator E_i = (sx sx + sy sy)/2 + D+ (sz sz - 1)/2
/// + D- (sz_i - sz_{i+1})/2 with D± = (q ± q^{-1})/2; its nonzero 2x2 block
/// on (up-down, down-up) is [[-q^{-1}, 1], [1, -q]].
SparseOperator build_E(int i, int n_sites, const QContext& ctx);

/// H = sum_{i=1}^{N-1} E_i, the quantum-group invariant XXZ Hamiltonian
/// (boundary term included through the telescoping D- pieces).
SparseOperator build_H(int n_sites, const QContext& ctx);

struct QuantumGroupOps {
  SparseOperator s_plus, s_minus;    // S^±, coproduct tails q^{±sz/2}
  SparseOperator s_plus_op, s_minus_op;  // opposite-coproduct partners
  SparseOperator q_sz, q_sz_inv;     // q^{±S^z}
  SparseOperator sz;                 // S^z (diagonal weights)
};

/// Chain representation of U_q(sl_2); satisfies q^{Sz} S± q^{-Sz} = q^{±1} S±
/// and [S+, S-] = [2 Sz]_q, and commutes with every E_i.
QuantumGroupOps build_quantum_group(int n_sites, const QContext& ctx);

struct SymmetryOps {
  SparseOperator parity;        // P: site reversal
  SparseOperator spin_reversal; // R: flips every spin
  AntilinearOp time_reversal;   // T: entrywise conjugation
};

SymmetryOps build_symmetries(int n_sites);

/// Hecke images B_i = q^{-1} + E_i and B_i^{-1} = q + E_i.
SparseOperator build_B(int i, int n_sites, const QContext& ctx);
SparseOperator build_B_inv(int i, int n_sites, const QContext& ctx);

/// pi_TL(word): ordered product of the E_i, rightmost letter applied first.
SparseOperator rep_of_word(const TLWord& w, const QContext& ctx);

/// pi_TL(word) v without forming the product matrix.
Vector apply_word(const TLWord& w, const Vector& v, const std::vector<SparseOperator>& gens);

/// All generators E_1..E_{N-1}, indexed [i-1].
std::vector<SparseOperator> build_all_E(int n_sites, const QContext& ctx);

}  // namespace tlq
