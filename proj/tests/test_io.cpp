#include <doctest.h>

#include <fstream>
#include <sstream>

#include "published_table.hpp"
#include "tlq/json_io.hpp"

using namespace tlq;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: ", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("diagram serialization schema") {
  const auto j = diagram_to_json(word_to_diagram(TLWord(4, {2, 2, 3, 1, 2})));
  CHECK(j["n_sites"] == 4);
  CHECK(j["loops"] == 1);
  CHECK(j["pairs"].size() == 4);
  for (const auto& pair : j["pairs"]) {
    REQUIRE(pair.size() == 2);
    for (const auto& label : pair) {
      const std::string text = label.get<std::string>();
      CHECK((text[0] == 'b' || text[0] == 't'));
    }
  }
}

TEST_CASE("operator export schema") {
  const QContext ctx{5.5};
  const auto j = operator_to_json(build_E(1, 2, ctx), ctx.r);
  CHECK(j["name"] == "E_1");
  CHECK(j["N"] == 2);
  CHECK(j["r"] == 5.5);
  CHECK(j["dim"] == 4);
  CHECK(j["entries"].size() == 4);  // two diagonal + two flip entries
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("row"));
    CHECK(e.contains("col"));
    CHECK(e.contains("re"));
    CHECK(e.contains("im"));
  }
}

TEST_CASE("functional evaluation record") {
  const TLWord w(4, {2, 2, 3, 1, 2});
  const auto j = omega_record(w, 2, 5.5, Complex(-1.8, 0.0));
  CHECK(j["word"] == nlohmann::json({2, 2, 3, 1, 2}));
  CHECK(j["n"] == 2);
  CHECK(j["value_re"] == -1.8);
  CHECK(j["value_im"] == 0.0);
}

TEST_CASE("path export uses doubled spins") {
  const auto j = paths_to_json(enumerate_paths(3));
  CHECK(j.size() == 3);
  CHECK(j[0] == nlohmann::json({0, 1, 2, 3}));
}

TEST_CASE("counts table CSV is byte-identical to the stored golden table") {
  const QContext ctx{7.0};
  const auto gwc = gram_with_counts(tlq_test::published_basis_words(), 2, ctx);
  const std::string csv = counts_table_csv(gwc.counts);
  const std::string golden = read_file(std::string(TLQ_TEST_DATA_DIR) + "/counts_n5_s2.csv");
  CHECK(csv == golden);
}

TEST_CASE("sector basis export carries words, gram and counts") {
  const QContext ctx{6.5};
  const SectorBasis basis = generate_basis_words(4, 2, ctx);
  const auto gwc = gram_with_counts(basis.words, 2, ctx);
  const auto j = sector_basis_to_json(basis, gwc, ctx.r);
  CHECK(j["N"] == 4);
  CHECK(j["n"] == 2);
  CHECK(j["words"].size() == 6);
  CHECK(j["gram_re"].size() == 6);
  CHECK(j["counts"]["x"].size() == 6);
  CHECK(j["counts"]["x0"].size() == 6);
}

TEST_CASE("verification report serialization") {
  VerificationReport rep;
  rep.add("demo", "e_i^2 = -(q+q^{-1}) e_i", 1e-14, 1e-10);
  const auto j = report_to_json(rep);
  CHECK(j["overall_pass"] == true);
  CHECK(j["records"][0]["anchor"] == "e_i^2 = -(q+q^{-1}) e_i");
  const std::string csv = report_to_csv(rep);
  CHECK(csv.find("demo") != std::string::npos);
}
