#include "tlq/json_io.hpp"

#include <cstdio>
#include <sstream>

namespace tlq {

namespace {

std::string cell_text(const StrandCounts& c) {
  if (c.x0 > 0) return "-";
  return std::to_string(c.x) + "/" + std::to_string(c.y);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string point_label(int point, int n_sites) {
  return point < n_sites ? "b" + std::to_string(point + 1)
                         : "t" + std::to_string(point - n_sites + 1);
}

nlohmann::json diagram_to_json(const PlanarDiagram& d) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [p, q] : d.strands())
    pairs.push_back({point_label(p, d.n_sites()), point_label(q, d.n_sites())});
  return {{"n_sites", d.n_sites()}, {"pairs", pairs}, {"loops", d.loops()}};
}

nlohmann::json counts_to_json(const StrandCounts& c) {
  return {{"x0", c.x0}, {"x", c.x}, {"y", c.y}};
}

nlohmann::json omega_record(const TLWord& w, int n_down, double r, Complex value) {
  return {{"word", w.letters}, {"n", n_down},      {"r", r},
          {"N", w.n_sites},    {"value_re", value.real()}, {"value_im", value.imag()}};
}

nlohmann::json operator_to_json(const SparseOperator& op, double r) {
  nlohmann::json entries = nlohmann::json::array();
  for (int k = 0; k < op.mat.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(op.mat, k); it; ++it) {
      entries.push_back({{"row", it.row()},
                         {"col", it.col()},
                         {"re", it.value().real()},
                         {"im", it.value().imag()}});
    }
  }
  return {{"name", op.name}, {"N", op.n_sites}, {"r", r}, {"dim", op.dim()}, {"entries", entries}};
}

nlohmann::json paths_to_json(const std::vector<BratteliPath>& paths) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : paths) out.push_back(p.two_j);
  return out;
}

nlohmann::json sector_basis_to_json(const SectorBasis& basis, const GramWithCounts& gwc,
                                    double r) {
  nlohmann::json words = nlohmann::json::array();
  for (const auto& w : basis.words) words.push_back(w.letters);

  const auto b = basis.gram.rows();
  nlohmann::json gram_re = nlohmann::json::array();
  for (Eigen::Index i = 0; i < b; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < b; ++j) row.push_back(basis.gram(i, j));
    gram_re.push_back(row);
  }

  auto full_count = [&](auto pick) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < gwc.counts.size(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < gwc.counts.size(); ++j) {
        const StrandCounts& c =
            j >= i ? gwc.counts[i][j - i] : gwc.counts[j][i - j];  // symmetric table
        row.push_back(pick(c));
      }
      rows.push_back(row);
    }
    return rows;
  };

  return {{"N", basis.n_sites},
          {"n", basis.n_down},
          {"r", r},
          {"words", words},
          {"gram_re", gram_re},
          {"gram_im", nlohmann::json::array()},  // omega is real-valued
          {"counts",
           {{"x", full_count([](const StrandCounts& c) { return c.x; })},
            {"y", full_count([](const StrandCounts& c) { return c.y; })},
            {"x0", full_count([](const StrandCounts& c) { return c.x0; })}}}};
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& rec : report.records) {
    records.push_back({{"name", rec.name},
                       {"anchor", rec.anchor},
                       {"max_deviation", rec.deviation},
                       {"threshold", rec.threshold},
                       {"pass", rec.pass}});
  }
  return {{"records", records}, {"overall_pass", report.all_pass()}};
}

std::string counts_table_csv(const std::vector<std::vector<StrandCounts>>& counts) {
  const std::size_t b = counts.size();
  std::ostringstream os;
  os << "x_ij/y_ij";
  for (std::size_t j = 1; j <= b; ++j) os << "," << j;
  os << "\n";
  for (std::size_t i = 0; i < b; ++i) {
    os << (i + 1);
    for (std::size_t j = 0; j < b; ++j) {
      os << ",";
      if (j >= i) os << cell_text(counts[i][j - i]);
    }
    os << "\n";
  }
  return os.str();
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "name,anchor,max_deviation,threshold,pass\n";
  for (const auto& rec : report.records) {
    os << '"' << rec.name << '"' << ',' << '"' << rec.anchor << '"' << ','
       << format_double(rec.deviation) << ',' << format_double(rec.threshold) << ','
       << (rec.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string eigenvalues_csv(const std::vector<Complex>& values) {
  std::ostringstream os;
  os << "re,im\n";
  for (const auto& v : values) os << format_double(v.real()) << ',' << format_double(v.imag()) << "\n";
  return os.str();
}

std::string operator_to_csv(const SparseOperator& op) {
  std::ostringstream os;
  os << "name,row,col,re,im\n";
  for (int k = 0; k < op.mat.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(op.mat, k); it; ++it) {
      os << op.name << ',' << it.row() << ',' << it.col() << ','
         << format_double(it.value().real()) << ',' << format_double(it.value().imag()) << "\n";
    }
  }
  return os.str();
}

}  // namespace tlq
