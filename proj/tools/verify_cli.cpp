#include <CLI11.hpp>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tlq/checks.hpp"
#include "tlq/diagram.hpp"
#include "tlq/errors.hpp"
#include "tlq/eta.hpp"
#include "tlq/functional.hpp"
#include "tlq/gns.hpp"
#include "tlq/json_io.hpp"
#include "tlq/spin_rep.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStructural = 3;

struct Options {
  int n_sites = 4;
  std::optional<int> sector;
  std::vector<double> r_values;
  double tol = 1e-10;
  unsigned long seed = 1;
  std::string out;
  std::string format = "json";
  std::size_t max_word_len = 0;
  bool restricted = false;
  std::string word;
  bool render = false;
};

void write_artifact(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(opt.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output path: " + opt.out);
  file << text;
  if (!file) throw std::runtime_error("write failed: " + opt.out);
}

void require_regime(const Options& opt) {
  for (double r : opt.r_values)
    if (!(r > opt.n_sites))
      throw CLI::ValidationError("--r", "regime error: need r > N (got r=" + std::to_string(r) +
                                            ", N=" + std::to_string(opt.n_sites) + ")");
}

tlq::TLWord parse_word(const std::string& text, int n_sites) {
  std::vector<int> letters;
  std::size_t pos = 0;
  int token_index = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ') ++pos;
    const std::string token = text.substr(start, pos - start);
    ++token_index;
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing characters");
      letters.push_back(value);
    } catch (const std::exception&) {
      throw CLI::ValidationError(
          "word", "token " + std::to_string(token_index) + " ('" + token +
                      "') at position " + std::to_string(start) + " is not a generator index");
    }
  }
  return {n_sites, letters};
}

int cmd_relations(const Options& opt) {
  require_regime(opt);
  tlq::VerificationReport report;
  for (double r : opt.r_values) report.merge(tlq::run_relation_suite(opt.n_sites, tlq::QContext{r, opt.tol}));
  report.print(std::cout);
  if (!opt.out.empty()) {
    const std::string text = opt.format == "csv" ? tlq::report_to_csv(report)
                                                 : tlq::report_to_json(report).dump(2) + "\n";
    std::ofstream(opt.out, std::ios::binary) << text;
  }
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

int cmd_omega(const Options& opt) {
  if (!opt.sector) throw CLI::ValidationError("--n", "omega needs a sector");
  nlohmann::json out = nlohmann::json::array();
  const tlq::TLWord w = parse_word(opt.word, opt.n_sites);
  for (double r : opt.r_values) {
    const tlq::QContext ctx{r, opt.tol};
    const tlq::PlanarDiagram d = tlq::word_to_diagram(w);
    const tlq::StrandCounts counts =
        tlq::classify_strands(d, {opt.n_sites, *opt.sector});
    const double value = tlq::omega_from_counts(counts, opt.n_sites, *opt.sector, ctx);
    std::cout << "omega_" << *opt.sector << "(" << tlq::word_to_string(w) << ") = " << value
              << "  [r=" << r << ", x0=" << counts.x0 << ", x=" << counts.x << ", y=" << counts.y
              << "]\n";
    if (opt.render) std::cout << tlq::render_diagram(d);
    nlohmann::json rec = tlq::omega_record(w, *opt.sector, r, value);
    rec["counts"] = tlq::counts_to_json(counts);
    rec["diagram"] = tlq::diagram_to_json(d);
    out.push_back(rec);
  }
  if (!opt.out.empty()) std::ofstream(opt.out, std::ios::binary) << out.dump(2) << "\n";
  return kExitPass;
}

int cmd_gram(const Options& opt) {
  if (!opt.sector) throw CLI::ValidationError("--n", "gram needs a sector");
  require_regime(opt);
  std::string text;
  for (double r : opt.r_values) {
    const tlq::QContext ctx{r, opt.tol};
    const tlq::SectorBasis basis =
        tlq::generate_basis_words(opt.n_sites, *opt.sector, ctx, opt.max_word_len);
    const tlq::GramWithCounts gwc = tlq::gram_with_counts(basis.words, *opt.sector, ctx);
    if (opt.format == "csv")
      text += tlq::counts_table_csv(gwc.counts);
    else
      text += tlq::sector_basis_to_json(basis, gwc, r).dump(2) + "\n";
  }
  write_artifact(opt, text);
  return kExitPass;
}

int cmd_eta(const Options& opt) {
  if (!opt.restricted) require_regime(opt);
  std::string text;
  for (double r : opt.r_values) {
    const tlq::QContext ctx{r, opt.tol};
    const tlq::SparseOperator eta = tlq::build_eta(opt.n_sites, ctx, opt.restricted);
    std::vector<tlq::SparseOperator> ops{eta};
    if (!opt.restricted) {
      ops.push_back(tlq::build_C(opt.n_sites, ctx));
      ops.push_back(tlq::build_Cprime(opt.n_sites, ctx));
      if (opt.n_sites >= 2)
        ops.push_back(tlq::eta_sqrt_and_h(eta, tlq::build_H(opt.n_sites, ctx), opt.tol).h);
    }
    if (opt.format == "csv") {
      for (const auto& op : ops) text += tlq::operator_to_csv(op);
    } else {
      nlohmann::json out;
      for (const auto& op : ops) out[op.name] = tlq::operator_to_json(op, r);
      out["paths"] = tlq::paths_to_json(tlq::enumerate_paths(
          opt.n_sites, std::nullopt, opt.restricted ? std::optional<double>(r) : std::nullopt));
      text += out.dump(2) + "\n";
    }
  }
  write_artifact(opt, text);
  return kExitPass;
}

int cmd_spectrum(const Options& opt) {
  require_regime(opt);
  std::string text;
  for (double r : opt.r_values) {
    const tlq::QContext ctx{r, opt.tol};
    const tlq::SparseOperator hop = tlq::build_H(opt.n_sites, ctx);
    Eigen::ComplexEigenSolver<tlq::DenseMatrix> es(hop.dense(), false);
    std::vector<tlq::Complex> vals(es.eigenvalues().data(),
                                   es.eigenvalues().data() + hop.dim());
    std::sort(vals.begin(), vals.end(), [](tlq::Complex a, tlq::Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    if (opt.format == "csv") {
      text += tlq::eigenvalues_csv(vals);
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& v : vals) arr.push_back({{"re", v.real()}, {"im", v.imag()}});
      text += nlohmann::json{{"N", opt.n_sites}, {"r", r}, {"eigenvalues", arr}}.dump(2) + "\n";
    }
  }
  write_artifact(opt, text);
  return kExitPass;
}

int cmd_conjecture(const Options& opt) {
  require_regime(opt);
  tlq::VerificationReport report;
  for (double r : opt.r_values)
    report.merge(tlq::conjecture_suite(opt.n_sites, tlq::QContext{r, opt.tol}, opt.seed, 200,
                                       opt.tol, opt.sector));
  report.print(std::cout);
  if (!opt.out.empty()) {
    const std::string text = opt.format == "csv" ? tlq::report_to_csv(report)
                                                 : tlq::report_to_json(report).dump(2) + "\n";
    std::ofstream(opt.out, std::ios::binary) << text;
  }
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temperley-Lieb / XXZ metric verification tool"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool needs_r) {
    cmd->add_option("--N", opt.n_sites, "number of sites")->check(CLI::PositiveNumber);
    auto* r = cmd->add_option("--r", opt.r_values, "deformation parameter r (repeatable)");
    r->allow_extra_args(false);  // one value per flag; repeat the flag for sweeps
    if (needs_r) r->required();
    cmd->add_option("--tol", opt.tol, "comparison tolerance");
    cmd->add_option("--out", opt.out, "output file path");
    cmd->add_option("--format", opt.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* relations = app.add_subcommand("relations", "verify the defining algebra relations");
  add_common(relations, true);

  auto* omega_cmd = app.add_subcommand("omega", "evaluate the sector functional on a word");
  add_common(omega_cmd, true);
  omega_cmd->add_option("--n", opt.sector, "sector (number of down arrows)");
  omega_cmd->add_option("word", opt.word, "space-separated generator indices (empty = unit)");
  omega_cmd->add_flag("--render", opt.render, "print the diagram");

  auto* gram = app.add_subcommand("gram", "sector word basis, Gram matrix and counts table");
  add_common(gram, true);
  gram->add_option("--n", opt.sector, "sector");
  gram->add_option("--max-word-len", opt.max_word_len, "basis search length cap");

  auto* eta = app.add_subcommand("eta", "export eta, C, C' and h");
  add_common(eta, true);
  eta->add_flag("--restricted", opt.restricted,
                "restricted path filter for integer 3 <= r <= N; metric identities unverified there");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of H sorted by real part");
  add_common(spectrum, true);

  auto* conjecture = app.add_subcommand("conjecture", "Gram vs eta-product identity per sector");
  add_common(conjecture, true);
  conjecture->add_option("--n", opt.sector, "restrict to one sector");
  conjecture->add_option("--seed", opt.seed, "random word seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (relations->parsed()) return cmd_relations(opt);
    if (omega_cmd->parsed()) return cmd_omega(opt);
    if (gram->parsed()) return cmd_gram(opt);
    if (eta->parsed()) return cmd_eta(opt);
    if (spectrum->parsed()) return cmd_spectrum(opt);
    if (conjecture->parsed()) return cmd_conjecture(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tlq::DegeneracyError& e) {
    std::cerr << "degeneracy error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const tlq::StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
