#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "copex/copula.hpp"
#include "copex/grid.hpp"
#include "copex/lap.hpp"
#include "copex/verify.hpp"

#include <json.hpp>

namespace copex {

// 17-significant-digit decimal rendering, locale-independent.
std::string fmt17(double v);

// GridCostMatrix: one comment header carrying n and mode, then 2^n CSV rows.
void write_matrix_csv(const GridCostMatrix& m, std::ostream& os);

// Raw square matrix from CSV ('#' lines ignored). Throws on ragged input.
SquareMatrix read_square_matrix_csv(std::istream& is);

void write_support_csv(std::span<const std::pair<double, double>> pts,
                       std::ostream& os);
std::vector<std::pair<double, double>> read_support_csv(std::istream& is);

// DiscreteCoupling <-> {schema, n, sigma, value}; sigma is 1-based.
nlohmann::ordered_json coupling_to_json(const DiscreteCoupling& c,
                                        double value);
std::pair<DiscreteCoupling, double> coupling_from_json(
    const nlohmann::json& j);

// ShuffleOfM -> {schema, n, s, pi, omega}; pi is 1-based.
nlohmann::ordered_json shuffle_to_json(const ShuffleOfM& s);
ShuffleOfM shuffle_from_json(const nlohmann::json& j);

nlohmann::ordered_json assignment_to_json(const Assignment& a);

nlohmann::ordered_json cycle_report_to_json(const CycleReport& r);

void write_empirical_copula_csv(const EmpiricalCopula& e, std::ostream& os);

}  // namespace copex
