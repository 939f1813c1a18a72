#include "tlq/gns.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "tlq/errors.hpp"
#include "tlq/spin_basis.hpp"

namespace tlq {

namespace {

constexpr double kRankThreshold = 1e-9;  // relative singular-value cutoff

Eigen::Index svd_rank(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > kRankThreshold * sv(0)) ++rank;
  return rank;
}

std::size_t default_word_cap(int n_sites) {
  return 2 * static_cast<std::size_t>(binomial(n_sites, n_sites / 2));
}

bool lex_less(const TLWord& a, const TLWord& b) {
  return std::lexicographical_compare(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                      b.letters.end());
}

}  // namespace

SectorBasis generate_basis_words(int n_sites, int n_down, const QContext& ctx,
                                 std::size_t max_word_len) {
  if (n_down < 0 || n_down > n_sites)
    throw std::domain_error("generate_basis_words: sector n out of range");
  if (!ctx.valid_for(n_sites))
    throw std::domain_error("generate_basis_words: needs the generic regime r > N");
  if (max_word_len == 0) max_word_len = default_word_cap(n_sites);

  const Eigen::Index target = binomial(n_sites, n_down);
  std::vector<TLWord> kept;
  Eigen::MatrixXd gram(0, 0);
  Eigen::Index rank = 0;
  // Words with an already-seen pairing are scalar multiples of an explored
  // class and can never increase the rank.
  std::map<std::vector<int>, bool> seen_pairings;

  auto try_add = [&](const TLWord& w) {
    const PlanarDiagram d = word_to_diagram(w);
    if (!seen_pairings.emplace(d.pairing(), true).second) return false;
    const Eigen::Index k = static_cast<Eigen::Index>(kept.size());
    Eigen::MatrixXd ext(k + 1, k + 1);
    ext.topLeftCorner(k, k) = gram;
    for (Eigen::Index i = 0; i < k; ++i) {
      const double v = omega_star_product(kept[static_cast<std::size_t>(i)], w, n_down, ctx);
      ext(i, k) = v;
      ext(k, i) = v;
    }
    ext(k, k) = omega_star_product(w, w, n_down, ctx);
    const Eigen::Index new_rank = svd_rank(ext);
    if (new_rank <= rank) return false;
    kept.push_back(w);
    gram = std::move(ext);
    rank = new_rank;
    return true;
  };

  try_add(TLWord::unit(n_sites));
  for (std::size_t len = 1; len <= max_word_len && rank < target; ++len) {
    std::vector<TLWord> candidates;
    for (const auto& w : kept)
      if (w.length() == len - 1)
        for (int i = 1; i <= n_sites - 1; ++i) candidates.push_back(prepend(i, w));
    if (candidates.empty()) break;  // module exhausted at the previous level
    std::sort(candidates.begin(), candidates.end(), lex_less);
    bool grew = false;
    for (const auto& c : candidates) {
      if (rank >= target) break;
      grew |= try_add(c);
    }
    if (!grew) break;  // left-multiplication stabilised the span
  }

  if (rank < target)
    throw DegeneracyError("generate_basis_words: Gram rank " + std::to_string(rank) +
                          " < binomial(N,n) = " + std::to_string(target) +
                          " at r = " + std::to_string(ctx.r) + " (non-generic r)");
  return {n_sites, n_down, std::move(kept), std::move(gram)};
}

Eigen::MatrixXd gram_matrix(const std::vector<TLWord>& words, int n_down, const QContext& ctx) {
  return gram_with_counts(words, n_down, ctx).gram;
}

GramWithCounts gram_with_counts(const std::vector<TLWord>& words, int n_down,
                                const QContext& ctx) {
  const std::size_t b = words.size();
  GramWithCounts out;
  out.gram.resize(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b));
  out.counts.resize(b);
  for (std::size_t i = 0; i < b; ++i) {
    const int n_sites = words[i].n_sites;
    const OrientationProfile profile(n_sites, n_down);
    const TLWord ai_star = star(words[i]);
    for (std::size_t j = i; j < b; ++j) {
      const PlanarDiagram d = word_to_diagram(concat(ai_star, words[j]));
      const StrandCounts counts = classify_strands(d, profile);
      const double value = omega_from_counts(counts, n_sites, n_down, ctx);
      out.counts[i].push_back(counts);
      out.gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
      out.gram(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = value;
    }
  }
  return out;
}

Vector u_map(const TLWord& w, int n_down, const QContext& ctx) {
  if (n_down < 0 || n_down > w.n_sites) throw std::domain_error("u_map: sector n out of range");
  Vector omega_vec = Vector::Zero(dim_of(w.n_sites));
  omega_vec[vacuum_index(w.n_sites, n_down)] = 1.0;
  return apply_word(w, omega_vec, build_all_E(w.n_sites, ctx));
}

ConjectureReport verify_conjecture(int n_sites, int n_down, const QContext& ctx,
                                   const std::vector<TLWord>& extra_words,
                                   const SparseOperator& eta) {
  const SectorBasis basis = generate_basis_words(n_sites, n_down, ctx);
  const auto gens = build_all_E(n_sites, ctx);
  const long dim = dim_of(n_sites);
  Vector omega_vec = Vector::Zero(dim);
  omega_vec[vacuum_index(n_sites, n_down)] = 1.0;

  const auto b = static_cast<Eigen::Index>(basis.words.size());
  DenseMatrix u(dim, b);
  for (Eigen::Index j = 0; j < b; ++j)
    u.col(j) = apply_word(basis.words[static_cast<std::size_t>(j)], omega_vec, gens);

  ConjectureReport report;
  report.basis_size = static_cast<int>(b);
  const DenseMatrix lifted = u.adjoint() * (eta.mat * u);
  report.gram_identity_deviation = (lifted - basis.gram.cast<Complex>()).cwiseAbs().maxCoeff();

  const Vector eta_omega = eta.mat.adjoint() * omega_vec;  // <Omega| eta = (eta* Omega)^†
  auto word_dev = [&](const TLWord& w) {
    const Complex rhs = eta_omega.dot(apply_word(w, omega_vec, gens));
    return std::abs(omega(w, n_down, ctx) - rhs);
  };
  for (const auto& w : basis.words) report.word_deviations.push_back(word_dev(w));
  for (const auto& w : extra_words) report.word_deviations.push_back(word_dev(w));
  report.max_word_deviation = 0.0;
  for (double d : report.word_deviations)
    report.max_word_deviation = std::max(report.max_word_deviation, d);
  return report;
}

int null_ideal_dimension(int n_sites, int n_down, const QContext& ctx, std::size_t word_cap) {
  // Distinct loop-free pairings reachable by words of length <= cap span the
  // explored subspace; the Gram rank on representatives gives the quotient.
  std::map<std::vector<int>, TLWord> classes;
  const TLWord unit = TLWord::unit(n_sites);
  classes.emplace(word_to_diagram(unit).pairing(), unit);
  std::vector<TLWord> frontier{unit};
  for (std::size_t len = 1; len <= word_cap && !frontier.empty(); ++len) {
    std::vector<TLWord> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= n_sites - 1; ++i) {
        TLWord c = prepend(i, w);
        auto key = word_to_diagram(c).pairing();
        if (classes.emplace(std::move(key), c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  std::vector<TLWord> reps;
  reps.reserve(classes.size());
  for (const auto& [key, w] : classes) reps.push_back(w);
  const Eigen::MatrixXd gram = gram_matrix(reps, n_down, ctx);
  return static_cast<int>(reps.size()) - static_cast<int>(svd_rank(gram));
}

Eigen::MatrixXd left_mult_matrix(const SectorBasis& basis, int gen, const QContext& ctx) {
  const auto b = static_cast<Eigen::Index>(basis.words.size());
  Eigen::MatrixXd rhs(b, b);
  for (Eigen::Index j = 0; j < b; ++j) {
    const TLWord target = prepend(gen, basis.words[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < b; ++i)
      rhs(i, j) =
          omega_star_product(basis.words[static_cast<std::size_t>(i)], target, basis.n_down, ctx);
  }
  return basis.gram.fullPivLu().solve(rhs);
}

}  // namespace tlq
