#pragma once

#include <cstddef>
#include <vector>

#include "tlq/eta.hpp"
#include "tlq/functional.hpp"
#include "tlq/spin_rep.hpp"

namespace tlq {

/// Word basis of the GNS module for sector n, with its Gram matrix
/// G_ij = omega_n(a_i* a_j). |words| = binomial(N, n) for generic r > N.
struct SectorBasis {
  int n_sites = 1;
  int n_down = 0;
  std::vector<TLWord> words;
  Eigen::MatrixXd gram;
};

/// Breadth-first search over words (left multiplication by generators,
/// shortest first, lexicographic tie-break), keeping a candidate iff it
/// strictly increases the Gram rank. Throws DegeneracyError if the sector
/// rank binomial(N, n) is unreachable within the length cap
/// (default 2 * binomial(N, floor(N/2))).
SectorBasis generate_basis_words(int n_sites, int n_down, const QContext& ctx,
                                 std::size_t max_word_len = 0);

Eigen::MatrixXd gram_matrix(const std::vector<TLWord>& words, int n_down, const QContext& ctx);

/// Gram matrix together with the strand counts of every pair a_i* a_j
/// (upper triangle, j >= i); counts[i][j-i] classifies the pair diagram.
struct GramWithCounts {
  Eigen::MatrixXd gram;
  std::vector<std::vector<StrandCounts>> counts;
};

GramWithCounts gram_with_counts(const std::vector<TLWord>& words, int n_down,
                                const QContext& ctx);

/// U_n a = pi_TL(a) Omega_n, the GNS-to-spin-sector map applied to a word.
Vector u_map(const TLWord& w, int n_down, const QContext& ctx);

/// Deviations of the conjectured identity omega_n(a) = <Omega_n, pi(a) Omega_n>_eta
/// on the generated basis plus the provided words, and of the Gram identity
/// G = U^* eta U. Reported, never asserted here.
struct ConjectureReport {
  int basis_size = 0;
  double max_word_deviation = 0.0;
  double gram_identity_deviation = 0.0;
  std::vector<double> word_deviations;  // basis words first, then extras
};

ConjectureReport verify_conjecture(int n_sites, int n_down, const QContext& ctx,
                                   const std::vector<TLWord>& extra_words,
                                   const SparseOperator& eta);

/// Dimension of the explored word span (distinct loop-free pairings reached
/// by words of length <= word_cap) minus the Gram rank on that span.
int null_ideal_dimension(int n_sites, int n_down, const QContext& ctx, std::size_t word_cap);

/// Matrix of left multiplication by e_gen on the word basis, computed via
/// Gram projection: solves G X = B with B_jk = omega(a_j* e a_k).
Eigen::MatrixXd left_mult_matrix(const SectorBasis& basis, int gen, const QContext& ctx);

}  // namespace tlq
