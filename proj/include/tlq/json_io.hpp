#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tlq/checks.hpp"
#include "tlq/diagram.hpp"
#include "tlq/eta.hpp"
#include "tlq/functional.hpp"
#include "tlq/gns.hpp"
#include "tlq/spin_rep.hpp"

namespace tlq {

// Shared export schema. Operators go out as sparse triplet lists with an
// {N, r, name} header; diagrams as {n_sites, pairs, loops} with b1..bN /
// t1..tN point labels; counts tables in the upper-triangular CSV layout
// with "-" marking cells where x0 > 0.

std::string point_label(int point, int n_sites);

nlohmann::json diagram_to_json(const PlanarDiagram& d);
nlohmann::json counts_to_json(const StrandCounts& c);
nlohmann::json omega_record(const TLWord& w, int n_down, double r, Complex value);
nlohmann::json operator_to_json(const SparseOperator& op, double r);
nlohmann::json paths_to_json(const std::vector<BratteliPath>& paths);
nlohmann::json sector_basis_to_json(const SectorBasis& basis, const GramWithCounts& gwc,
                                    double r);
nlohmann::json report_to_json(const VerificationReport& report);

std::string counts_table_csv(const std::vector<std::vector<StrandCounts>>& counts);
std::string report_to_csv(const VerificationReport& report);
std::string eigenvalues_csv(const std::vector<Complex>& values);
std::string operator_to_csv(const SparseOperator& op);

}  // namespace tlq
