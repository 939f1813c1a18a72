#pragma once

#include <bit>
#include <cstdint>

namespace tlq {

// Tensor basis convention for (C^2)^{\otimes N}: site 1 is the most
// significant bit, spin up (+1/2) is bit 0, spin down (-1/2) is bit 1, and
// the basis index is the resulting binary number.

inline long dim_of(int n_sites) { return 1L << n_sites; }

inline std::uint64_t site_mask(int site, int n_sites) {
  return std::uint64_t{1} << (n_sites - site);
}

/// 1 if `site` (1-based) carries a down spin in basis state `index`.
inline int spin_down_at(std::uint64_t index, int site, int n_sites) {
  return static_cast<int>((index >> (n_sites - site)) & 1U);
}

inline int down_count(std::uint64_t index) { return std::popcount(index); }

/// Twice the total S^z weight of a basis state: N - 2 * (number of downs).
inline int two_weight(std::uint64_t index, int n_sites) {
  return n_sites - 2 * down_count(index);
}

/// Index of the sector vacuum Omega_n = v_down^{n} (x) v_up^{N-n}: the n
/// leading bits set.
inline long vacuum_index(int n_sites, int n_down) {
  return ((1L << n_down) - 1) << (n_sites - n_down);
}

inline std::uint64_t reverse_sites(std::uint64_t index, int n_sites) {
  std::uint64_t out = 0;
  for (int k = 0; k < n_sites; ++k) {
    out = (out << 1) | ((index >> k) & 1U);
  }
  return out;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace tlq
