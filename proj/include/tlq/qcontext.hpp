#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tlq {

using Complex = std::complex<double>;

/// Deformation data for TL_N(q) at q = exp(i*pi/r) on the unit circle.
/// The generic regime for a chain of N sites is r > N; constructions that
/// require it check valid_for(N).
struct QContext {
  double r;
  double tol;

  explicit QContext(double r_in, double tol_in = 1e-10) : r(r_in), tol(tol_in) {
    if (!(r > 0.0))
      throw std::domain_error("QContext: r must be positive, got " + std::to_string(r_in));
    if (!(tol > 0.0)) throw std::domain_error("QContext: tol must be positive");
  }

  Complex q() const { return q_pow(1.0); }

  /// q^x for real (usually half-integer) exponents: exp(i*pi*x/r).
  Complex q_pow(double x) const { return std::polar(1.0, std::numbers::pi * x / r); }

  /// [x]_q = (q^x - q^{-x})/(q - q^{-1}) = sin(pi x/r)/sin(pi/r); real on |q|=1.
  double q_number(double x) const {
    return std::sin(std::numbers::pi * x / r) / std::sin(std::numbers::pi / r);
  }

  /// q + q^{-1} = 2 cos(pi/r). Each closed loop contributes -(q+q^{-1}).
  double loop_scalar() const { return 2.0 * std::cos(std::numbers::pi / r); }

  /// True in the generic regime r > N, where q is not a root of unity of
  /// order <= N and no state-space reduction is needed.
  bool valid_for(int n_sites) const { return r > static_cast<double>(n_sites); }
};

}  // namespace tlq
