#pragma once

// Published N=5, n=2 reference data: the ten basis words and the
// upper-triangular table of (x, y) strand counts, with omitted cells marking
// pairs whose oriented diagram contains an unoriented strand.

#include <array>
#include <vector>

#include "tlq/diagram.hpp"

namespace tlq_test {

inline std::vector<tlq::TLWord> published_basis_words() {
  using tlq::TLWord;
  return {
      TLWord::unit(5),
      TLWord(5, {2}),
      TLWord(5, {1, 2}),
      TLWord(5, {3, 2}),
      TLWord(5, {4, 3, 2}),
      TLWord(5, {1, 3, 2}),
      TLWord(5, {2, 1, 3, 2}),
      TLWord(5, {1, 4, 3, 2}),
      TLWord(5, {2, 1, 4, 3, 2}),
      TLWord(5, {3, 2, 1, 4, 3, 2}),
  };
}

struct TableCell {
  bool omitted = true;
  int x = 0;
  long y = 0;
};

inline std::array<std::array<TableCell, 10>, 10> published_counts_table() {
  std::array<std::array<TableCell, 10>, 10> t{};
  auto set = [&](int i, int j, int x, long y) {
    t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = {false, x, y};
  };
  set(1, 1, 0, 0); set(1, 2, 1, 0); set(1, 7, 2, 0);
  set(2, 2, 1, 1); set(2, 3, 1, 0); set(2, 4, 1, 0); set(2, 6, 2, 0); set(2, 7, 2, 1);
  set(3, 3, 1, 1); set(3, 4, 2, 0); set(3, 6, 2, 1); set(3, 7, 2, 0); set(3, 10, 2, 0);
  set(4, 4, 1, 1); set(4, 5, 1, 0); set(4, 6, 2, 1); set(4, 7, 2, 0); set(4, 8, 2, 0);
  set(5, 5, 1, 1); set(5, 6, 2, 0); set(5, 8, 2, 1);
  set(6, 6, 2, 2); set(6, 7, 2, 1); set(6, 8, 2, 1); set(6, 9, 2, 0); set(6, 10, 2, 1);
  set(7, 7, 2, 2); set(7, 8, 2, 0); set(7, 9, 2, 1); set(7, 10, 2, 0);
  set(8, 8, 2, 2); set(8, 9, 2, 1); set(8, 10, 2, 0);
  set(9, 9, 2, 2); set(9, 10, 2, 1);
  set(10, 10, 2, 2);
  return t;
}

}  // namespace tlq_test
