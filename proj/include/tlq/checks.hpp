#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tlq/qcontext.hpp"

namespace tlq {

/// One verified identity: the anchor is the identity itself, so a failing
/// line can be traced back to the relation it encodes.
struct CheckRecord {
  std::string name;
  std::string anchor;
  double deviation = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckRecord> records;

  bool all_pass() const;
  double max_deviation() const;
  void add(std::string name, std::string anchor, double deviation, double threshold);
  void merge(const VerificationReport& other);
  void print(std::ostream& os) const;
};

/// Defining TL relations of the matrix generators E_i, plus the
/// diagram/matrix consistency of loop scalars.
VerificationReport tl_relation_checks(int n_sites, const QContext& ctx);

/// U_q(sl_2) relations and invariance [E_i, S^±] = 0.
VerificationReport quantum_group_checks(int n_sites, const QContext& ctx);

/// Braid and quadratic relations of the Hecke images B_i.
VerificationReport hecke_checks(int n_sites, const QContext& ctx);

/// P/T/R involutions, their conjugation table, and the vanishing
/// commutators [PT,H], [PR,H], [RT,H].
VerificationReport symmetry_table_checks(int n_sites, const QContext& ctx);

/// Metric structure: eta Hermitian/positive, the three constructions
/// agree, the eta/C/C' commutation table, C'^2 = 1, R eta R = eta^{-1},
/// P eta P = eta^{-1}, [C, C'] = 0, eta B_i = (B_i^{-1})* eta, completeness
/// of the path basis.
VerificationReport eta_metric_checks(int n_sites, const QContext& ctx);

/// Spectrum reality of H, Hermiticity of h = eta^{1/2} H eta^{-1/2}, and
/// isospectrality of h and H.
VerificationReport spectral_checks(int n_sites, const QContext& ctx);

/// Everything above in one report.
VerificationReport run_relation_suite(int n_sites, const QContext& ctx);

/// Conjecture harness: per sector, Gram identity G = U* eta U and the
/// per-word identity on basis words plus `n_random` seeded random words of
/// length <= 2N. `threshold` gates each record.
VerificationReport conjecture_suite(int n_sites, const QContext& ctx, unsigned long seed,
                                    int n_random, double threshold,
                                    std::optional<int> only_sector = std::nullopt);

}  // namespace tlq
