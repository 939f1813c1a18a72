#pragma once

#include "tlq/diagram.hpp"
#include "tlq/qcontext.hpp"

namespace tlq {

/// Arrow configuration s_n: n down arrows followed by N-n up arrows, placed
/// on both the top and bottom boundary of a diagram.
struct OrientationProfile {
  int n_sites;
  int n_down;

  OrientationProfile(int n, int downs);
  /// 1-based boundary position.
  bool down_at(int pos) const { return pos <= n_down; }
};

/// Strand classification of an oriented diagram: x0 unoriented lines and
/// arcs, x anticlockwise cups (bottom arcs only), y closed loops.
struct StrandCounts {
  int x0 = 0;
  int x = 0;
  long y = 0;
  bool operator==(const StrandCounts&) const = default;
};

/// Classifies every strand of `d` under the profile `s` applied to both
/// boundaries. A propagating line b_i-t_j is oriented iff the two arrows
/// agree; an arc is oriented iff they differ. A cup b_i-b_j (i<j) counts
/// toward x iff the arrows are (down, up).
StrandCounts classify_strands(const PlanarDiagram& d, const OrientationProfile& s);

/// omega evaluated on precomputed counts (used by the Gram machinery).
double omega_from_counts(const StrandCounts& c, int n_sites, int n_down, const QContext& ctx);

/// The sector functional omega_n : TL_N(q) -> R, evaluated graphically.
/// Zero whenever the oriented diagram has an unoriented strand.
double omega(const TLWord& w, int n_down, const QContext& ctx);

/// <a, b>_{omega_n} = omega_n(a* b).
double omega_star_product(const TLWord& a, const TLWord& b, int n_down, const QContext& ctx);

}  // namespace tlq
