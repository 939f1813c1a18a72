#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tlq {

/// Word in the Temperley-Lieb generators e_1 .. e_{N-1}. The empty word is
/// the algebra unit. Convention: in e_{i1} e_{i2} ... e_{ik} the RIGHTMOST
/// letter acts first, so words compose like operators.
struct TLWord {
  int n_sites = 1;
  std::vector<int> letters;

  TLWord(int n, std::vector<int> ls);
  static TLWord unit(int n) { return TLWord(n, {}); }
  std::size_t length() const { return letters.size(); }
  bool operator==(const TLWord& o) const = default;
};

/// Reversal of the letter sequence; the * involution (e_i* = e_i). At the
/// diagram level this is the top-bottom flip.
TLWord star(const TLWord& w);

/// Concatenation a·b (b acts first).
TLWord concat(const TLWord& a, const TLWord& b);

/// Left multiplication e_i · w.
TLWord prepend(int i, const TLWord& w);

std::string word_to_string(const TLWord& w);

/// Planar pairing of N bottom points (b1..bN = 0..N-1, left to right) and N
/// top points (t1..tN = N..2N-1), plus the number of closed loops removed
/// while composing. Values are immutable after construction.
class PlanarDiagram {
 public:
  /// Validates that `pairing` is a fixed-point-free involution and planar.
  PlanarDiagram(int n_sites, std::vector<int> pairing, long loops);

  static PlanarDiagram identity(int n_sites);
  /// The diagram of e_i: cup b_i-b_{i+1}, cap t_i-t_{i+1}, all else vertical.
  static PlanarDiagram generator(int i, int n_sites);

  int n_sites() const { return n_; }
  long loops() const { return loops_; }
  int partner(int point) const { return pair_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& pairing() const { return pair_; }

  bool is_planar() const;
  int propagating_count() const;
  /// Each strand once, as (p, q) with p < q.
  std::vector<std::pair<int, int>> strands() const;
  /// Same diagram with the loop count replaced.
  PlanarDiagram with_loops(long loops) const { return {n_, pair_, loops}; }
  /// Top-bottom mirror image (the diagram of the * involution).
  PlanarDiagram flipped() const;

  bool same_pairing(const PlanarDiagram& o) const { return pair_ == o.pair_; }
  bool operator==(const PlanarDiagram& o) const = default;

 private:
  int n_;
  std::vector<int> pair_;
  long loops_;
};

/// Stacks `upper` above `lower`, joins upper's bottoms to lower's tops and
/// traces strands through. Closed loops formed at the interface add to the
/// loop count.
PlanarDiagram compose(const PlanarDiagram& upper, const PlanarDiagram& lower);

/// Diagram of a word: generators stacked with the rightmost letter at the
/// bottom. Independent of fold direction.
PlanarDiagram word_to_diagram(const TLWord& w);

/// Deterministic ASCII picture: top boundary first, cups/caps drawn with
/// '+', '-' and '|', header carries "loops=<k>".
std::string render_diagram(const PlanarDiagram& d);

}  // namespace tlq
