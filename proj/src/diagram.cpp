#include "tlq/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tlq/errors.hpp"

namespace tlq {

namespace {

void check_letter(int letter, int n_sites) {
  if (letter < 1 || letter > n_sites - 1) {
    throw std::domain_error("generator index " + std::to_string(letter) +
                            " out of range for N=" + std::to_string(n_sites) + " (valid 1.." +
                            std::to_string(n_sites - 1) + ")");
  }
}

}  // namespace

TLWord::TLWord(int n, std::vector<int> ls) : n_sites(n), letters(std::move(ls)) {
  if (n_sites < 1) throw std::domain_error("TLWord: N must be >= 1");
  for (int l : letters) check_letter(l, n_sites);
}

TLWord star(const TLWord& w) {
  std::vector<int> rev(w.letters.rbegin(), w.letters.rend());
  return TLWord(w.n_sites, std::move(rev));
}

TLWord concat(const TLWord& a, const TLWord& b) {
  if (a.n_sites != b.n_sites) throw std::domain_error("concat: mismatched site counts");
  std::vector<int> ls = a.letters;
  ls.insert(ls.end(), b.letters.begin(), b.letters.end());
  return TLWord(a.n_sites, std::move(ls));
}

TLWord prepend(int i, const TLWord& w) {
  std::vector<int> ls;
  ls.reserve(w.letters.size() + 1);
  ls.push_back(i);
  ls.insert(ls.end(), w.letters.begin(), w.letters.end());
  return TLWord(w.n_sites, std::move(ls));
}

std::string word_to_string(const TLWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += ' ';
    out += "e" + std::to_string(w.letters[k]);
  }
  return out;
}

PlanarDiagram::PlanarDiagram(int n_sites, std::vector<int> pairing, long loops)
    : n_(n_sites), pair_(std::move(pairing)), loops_(loops) {
  if (n_ < 1) throw std::domain_error("PlanarDiagram: N must be >= 1");
  if (loops_ < 0) throw std::domain_error("PlanarDiagram: negative loop count");
  const int total = 2 * n_;
  if (static_cast<int>(pair_.size()) != total)
    throw std::domain_error("PlanarDiagram: pairing must list all 2N points");
  for (int p = 0; p < total; ++p) {
    int q = pair_[static_cast<std::size_t>(p)];
    if (q < 0 || q >= total || q == p || pair_[static_cast<std::size_t>(q)] != p)
      throw std::domain_error("PlanarDiagram: pairing is not a perfect matching");
  }
  if (!is_planar()) throw StructuralError("PlanarDiagram: crossing strands");
}

PlanarDiagram PlanarDiagram::identity(int n_sites) {
  std::vector<int> pairing(static_cast<std::size_t>(2 * n_sites));
  for (int i = 0; i < n_sites; ++i) {
    pairing[static_cast<std::size_t>(i)] = n_sites + i;
    pairing[static_cast<std::size_t>(n_sites + i)] = i;
  }
  return {n_sites, std::move(pairing), 0};
}

PlanarDiagram PlanarDiagram::generator(int i, int n_sites) {
  check_letter(i, n_sites);
  PlanarDiagram d = identity(n_sites);
  std::vector<int> pairing = d.pair_;
  const int b = i - 1;          // bottom cup b_i - b_{i+1}
  const int t = n_sites + i - 1;  // top cap t_i - t_{i+1}
  pairing[static_cast<std::size_t>(b)] = b + 1;
  pairing[static_cast<std::size_t>(b + 1)] = b;
  pairing[static_cast<std::size_t>(t)] = t + 1;
  pairing[static_cast<std::size_t>(t + 1)] = t;
  return {n_sites, std::move(pairing), 0};
}

bool PlanarDiagram::is_planar() const {
  // Non-crossing on the circular order b1..bN, tN..t1.
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(n_));
  auto visit = [&](int p) {
    if (!stack.empty() && pair_[static_cast<std::size_t>(p)] == stack.back())
      stack.pop_back();
    else
      stack.push_back(p);
  };
  for (int p = 0; p < n_; ++p) visit(p);
  for (int p = 2 * n_ - 1; p >= n_; --p) visit(p);
  return stack.empty();
}

int PlanarDiagram::propagating_count() const {
  int count = 0;
  for (int p = 0; p < n_; ++p)
    if (pair_[static_cast<std::size_t>(p)] >= n_) ++count;
  return count;
}

std::vector<std::pair<int, int>> PlanarDiagram::strands() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int p = 0; p < 2 * n_; ++p) {
    int q = pair_[static_cast<std::size_t>(p)];
    if (p < q) out.emplace_back(p, q);
  }
  return out;
}

PlanarDiagram PlanarDiagram::flipped() const {
  std::vector<int> pairing(static_cast<std::size_t>(2 * n_));
  auto mirror = [&](int p) { return p < n_ ? p + n_ : p - n_; };
  for (int p = 0; p < 2 * n_; ++p)
    pairing[static_cast<std::size_t>(mirror(p))] = mirror(pair_[static_cast<std::size_t>(p)]);
  return {n_, std::move(pairing), loops_};
}

PlanarDiagram compose(const PlanarDiagram& upper, const PlanarDiagram& lower) {
  if (upper.n_sites() != lower.n_sites())
    throw std::domain_error("compose: mismatched site counts " +
                            std::to_string(upper.n_sites()) + " vs " +
                            std::to_string(lower.n_sites()));
  const int n = lower.n_sites();
  std::vector<int> pairing(static_cast<std::size_t>(2 * n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);

  // Walk a strand from a result boundary point to its far end. Points are in
  // the labeling of whichever factor we are currently inside; interface node
  // k is lower's top k and upper's bottom k at once.
  auto trace = [&](int start, bool in_lower) {
    int p = start;
    bool lowside = in_lower;
    for (;;) {
      const int q = lowside ? lower.partner(p) : upper.partner(p);
      if (lowside) {
        if (q < n) return q;  // result bottom
        used[static_cast<std::size_t>(q - n)] = 1;
        p = q - n;
        lowside = false;
      } else {
        if (q >= n) return q;  // result top (same label space)
        used[static_cast<std::size_t>(q)] = 1;
        p = n + q;
        lowside = true;
      }
    }
  };

  for (int b = 0; b < n; ++b) {
    if (pairing[static_cast<std::size_t>(b)] != -1) continue;
    const int end = trace(b, true);
    pairing[static_cast<std::size_t>(b)] = end;
    pairing[static_cast<std::size_t>(end)] = b;
  }
  for (int t = n; t < 2 * n; ++t) {
    if (pairing[static_cast<std::size_t>(t)] != -1) continue;
    const int end = trace(t, false);
    pairing[static_cast<std::size_t>(t)] = end;
    pairing[static_cast<std::size_t>(end)] = t;
  }

  long loops = upper.loops() + lower.loops();
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    int c = i;
    do {
      used[static_cast<std::size_t>(c)] = 1;
      const int u = upper.partner(c);  // stays inside the interface
      used[static_cast<std::size_t>(u)] = 1;
      c = lower.partner(n + u) - n;
    } while (c != i);
    ++loops;
  }

  // Constructor re-checks planarity; composition of planar diagrams must be planar.
  return {n, std::move(pairing), loops};
}

PlanarDiagram word_to_diagram(const TLWord& w) {
  PlanarDiagram acc = PlanarDiagram::identity(w.n_sites);
  for (int letter : w.letters) acc = compose(acc, PlanarDiagram::generator(letter, w.n_sites));
  return acc;
}

namespace {

// Character-grid painter; '+' wins over '|' wins over '-'.
struct Grid {
  int width;
  std::vector<std::string> rows;

  explicit Grid(int w) : width(w) {}
  std::string& row(int k) {
    while (static_cast<int>(rows.size()) <= k) rows.emplace_back(static_cast<std::size_t>(width), ' ');
    return rows[static_cast<std::size_t>(k)];
  }
  void put(int k, int col, char c) {
    char& cell = row(k)[static_cast<std::size_t>(col)];
    if (cell == ' ' || cell == c) {
      cell = c;
    } else {
      cell = '+';
    }
  }
};

struct Arc {
  int a, b;  // 0-based sites, a < b
  int depth = 1;
};

std::vector<Arc> arcs_with_depth(const std::vector<std::pair<int, int>>& raw) {
  std::vector<Arc> arcs;
  arcs.reserve(raw.size());
  for (auto [a, b] : raw) arcs.push_back({a, b, 1});
  // Nesting depth, iterated to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& outer : arcs)
      for (const auto& inner : arcs)
        if (outer.a < inner.a && inner.b < outer.b && outer.depth < inner.depth + 1) {
          outer.depth = inner.depth + 1;
          changed = true;
        }
  }
  return arcs;
}

}  // namespace

std::string render_diagram(const PlanarDiagram& d) {
  const int n = d.n_sites();
  const int colw = 4;
  auto col = [&](int site) { return colw * site; };
  const int width = colw * (n - 1) + 1;

  std::vector<std::pair<int, int>> cups, caps;
  std::vector<std::pair<int, int>> lines;  // (bottom site, top site)
  for (auto [p, q] : d.strands()) {
    if (q < n) {
      cups.emplace_back(p, q);
    } else if (p >= n) {
      caps.emplace_back(p - n, q - n);
    } else {
      lines.emplace_back(p, q - n);
    }
  }
  std::sort(lines.begin(), lines.end());

  const auto cap_arcs = arcs_with_depth(caps);
  const auto cup_arcs = arcs_with_depth(cups);
  int top_rows = 0, bot_rows = 0;
  for (const auto& a : cap_arcs) top_rows = std::max(top_rows, a.depth);
  for (const auto& a : cup_arcs) bot_rows = std::max(bot_rows, a.depth);

  bool any_bend = false;
  for (const auto& [b, t] : lines) any_bend |= (b != t);
  const int mid_rows = lines.empty() ? 1 : (any_bend ? static_cast<int>(lines.size()) : 1);

  Grid top(width), mid(width), bot(width);

  for (const auto& arc : cap_arcs) {
    for (int r = 0; r < arc.depth - 1; ++r) {
      top.put(r, col(arc.a), '|');
      top.put(r, col(arc.b), '|');
    }
    const int r = arc.depth - 1;
    top.put(r, col(arc.a), '+');
    top.put(r, col(arc.b), '+');
    for (int c = col(arc.a) + 1; c < col(arc.b); ++c) top.put(r, c, '-');
  }
  for (const auto& arc : cup_arcs) {
    // Row 0 of the bottom grid is adjacent to the middle section; the
    // innermost cup bends closest to the boundary (last row).
    const int bend = bot_rows - arc.depth;
    bot.put(bend, col(arc.a), '+');
    bot.put(bend, col(arc.b), '+');
    for (int c = col(arc.a) + 1; c < col(arc.b); ++c) bot.put(bend, c, '-');
    for (int r = bend + 1; r < bot_rows; ++r) {
      bot.put(r, col(arc.a), '|');
      bot.put(r, col(arc.b), '|');
    }
  }
  for (const auto& [b, t] : lines) {
    for (int r = 0; r < top_rows; ++r) top.put(r, col(t), '|');
    for (int r = 0; r < bot_rows; ++r) bot.put(r, col(b), '|');
  }

  // Middle routing: one row per line when any line is displaced.
  for (int k = 0; k < static_cast<int>(lines.size()); ++k) {
    const auto [b, t] = lines[static_cast<std::size_t>(k)];
    const int bend = any_bend ? k : 0;
    for (int r = 0; r < bend; ++r) mid.put(r, col(t), '|');
    if (b == t) {
      for (int r = bend; r < mid_rows; ++r) mid.put(r, col(b), '|');
    } else {
      mid.put(bend, col(t), '+');
      mid.put(bend, col(b), '+');
      for (int c = std::min(col(b), col(t)) + 1; c < std::max(col(b), col(t)); ++c)
        mid.put(bend, c, '-');
      for (int r = bend + 1; r < mid_rows; ++r) mid.put(r, col(b), '|');
    }
  }

  std::ostringstream os;
  os << "N=" << n << " loops=" << d.loops() << "\n";
  auto label_row = [&](const char* prefix) {
    os << prefix;
    for (int s = 1; s <= n; ++s) {
      std::string label = std::to_string(s);
      if (s < n) label.resize(static_cast<std::size_t>(colw), ' ');
      os << label;
    }
    os << "\n";
  };
  label_row("t: ");
  auto emit = [&](Grid& g, int count) {
    for (int r = 0; r < count; ++r) {
      std::string row = g.row(r);
      while (!row.empty() && row.back() == ' ') row.pop_back();
      os << "   " << row << "\n";
    }
  };
  emit(top, top_rows);
  emit(mid, mid_rows);
  emit(bot, bot_rows);
  label_row("b: ");
  return os.str();
}

}  // namespace tlq
