#include "tlq/functional.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tlq/errors.hpp"

namespace tlq {

OrientationProfile::OrientationProfile(int n, int downs) : n_sites(n), n_down(downs) {
  if (n < 1) throw std::domain_error("OrientationProfile: N must be >= 1");
  if (downs < 0 || downs > n)
    throw std::domain_error("OrientationProfile: n=" + std::to_string(downs) +
                            " out of range 0.." + std::to_string(n));
}

StrandCounts classify_strands(const PlanarDiagram& d, const OrientationProfile& s) {
  if (d.n_sites() != s.n_sites)
    throw std::domain_error("classify_strands: diagram N=" + std::to_string(d.n_sites()) +
                            " vs profile N=" + std::to_string(s.n_sites));
  const int n = d.n_sites();
  StrandCounts c;
  c.y = d.loops();
  for (auto [p, q] : d.strands()) {
    const bool p_bottom = p < n;
    const bool q_bottom = q < n;
    const bool pd = s.down_at(p_bottom ? p + 1 : p - n + 1);
    const bool qd = s.down_at(q_bottom ? q + 1 : q - n + 1);
    if (p_bottom && q_bottom) {
      // cup; p < q so position(p) < position(q)
      if (pd == qd)
        ++c.x0;
      else if (pd && !qd)
        ++c.x;  // (down, up): anticlockwise
    } else if (!p_bottom && !q_bottom) {
      // cap: oriented when the arrows differ, never counted in x
      if (pd == qd) ++c.x0;
    } else {
      // propagating line: oriented when the arrows agree
      if (pd != qd) ++c.x0;
    }
  }
  return c;
}

namespace {

double validated_real(Complex value, const QContext& ctx, const char* what) {
  if (std::abs(value.imag()) > ctx.tol)
    throw NumericConsistencyError(std::string(what) + ": imaginary part " +
                                  std::to_string(value.imag()) + " exceeds tol");
  return value.real();
}

// 1 + sum_{k=1}^{limit} (-1)^k (q^k + q^{-k}); empty for limit < 1.
Complex alternating_bracket(int limit, const QContext& ctx) {
  Complex sum = 1.0;
  for (int k = 1; k <= limit; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * (ctx.q_pow(k) + ctx.q_pow(-k));
  }
  return sum;
}

}  // namespace

double omega_from_counts(const StrandCounts& c, int n_sites, int n_down, const QContext& ctx) {
  if (n_down < 0 || n_down > n_sites)
    throw std::domain_error("omega: n=" + std::to_string(n_down) + " out of range 0.." +
                            std::to_string(n_sites));
  if (c.x0 > 0) return 0.0;

  const double loop_weight = std::pow(ctx.loop_scalar(), static_cast<double>(c.y));
  Complex value;
  if (n_sites % 2 == 0) {
    const double half = n_sites / 2.0;
    const Complex num = ctx.q_pow(half - n_down) + ctx.q_pow(n_down - half);
    const Complex den = ctx.q_pow(half - c.x) + ctx.q_pow(c.x - half);
    if (std::abs(den) < 1e-14)
      throw NumericConsistencyError("omega: denominator vanishes (non-generic r)");
    const double sign = ((c.x + c.y) % 2 == 0) ? 1.0 : -1.0;
    value = sign * loop_weight * num / den;
  } else {
    // The functional depends on the profile only through the sector value
    // |N/2 - n|: for n > (N-1)/2 the bracket and sign take N-n in place of n
    // (the even-N quotient has this symmetry built in).
    const int n_eff = std::min(n_down, n_sites - n_down);
    const int m = (n_sites - 1) / 2;
    const Complex num = alternating_bracket(m - n_eff, ctx);
    const Complex den = alternating_bracket(m - c.x, ctx);
    if (std::abs(den) < 1e-14)
      throw NumericConsistencyError("omega: denominator vanishes (non-generic r)");
    const double sign = ((n_eff + c.y) % 2 == 0) ? 1.0 : -1.0;
    value = sign * loop_weight * num / den;
  }
  return validated_real(value, ctx, "omega");
}

double omega(const TLWord& w, int n_down, const QContext& ctx) {
  const PlanarDiagram d = word_to_diagram(w);
  const OrientationProfile s(w.n_sites, n_down);
  return omega_from_counts(classify_strands(d, s), w.n_sites, n_down, ctx);
}

double omega_star_product(const TLWord& a, const TLWord& b, int n_down, const QContext& ctx) {
  return omega(concat(star(a), b), n_down, ctx);
}

}  // namespace tlq
