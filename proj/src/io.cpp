#include "copex/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace copex {
namespace {

const char* mode_name(GridMode m) {
  switch (m) {
    case GridMode::Lower:
      return "lower";
    case GridMode::Upper:
      return "upper";
    default:
      return "midpoint";
  }
}

std::vector<double> split_csv_row(const std::string& line) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    std::string field = line.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t parsed = 0;
    double v = std::stod(field, &parsed);
    if (parsed == 0) throw std::invalid_argument("csv: malformed number");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_matrix_csv(const GridCostMatrix& m, std::ostream& os) {
  os << "# grid-cost-matrix n=" << m.level << " mode=" << mode_name(m.mode)
     << "\n";
  const std::size_t sz = m.values.size();
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = 0; j < sz; ++j) {
      if (j) os << ',';
      os << fmt17(m.values(i, j));
    }
    os << '\n';
  }
}

SquareMatrix read_square_matrix_csv(std::istream& is) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    rows.push_back(split_csv_row(line));
  }
  if (rows.empty()) throw std::invalid_argument("csv: empty matrix");
  return SquareMatrix::from_rows(rows);
}

void write_support_csv(std::span<const std::pair<double, double>> pts,
                       std::ostream& os) {
  os << "x,y\n";
  for (const auto& [x, y] : pts) os << fmt17(x) << ',' << fmt17(y) << '\n';
}

std::vector<std::pair<double, double>> read_support_csv(std::istream& is) {
  std::vector<std::pair<double, double>> pts;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (first && line.rfind("x,", 0) == 0) {
      first = false;
      continue;
    }
    first = false;
    std::vector<double> row = split_csv_row(line);
    if (row.size() != 2)
      throw std::invalid_argument("csv: support rows need two columns");
    pts.emplace_back(row[0], row[1]);
  }
  if (pts.empty()) throw std::invalid_argument("csv: empty support");
  return pts;
}

nlohmann::ordered_json coupling_to_json(const DiscreteCoupling& c,
                                        double value) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = c.level;
  std::vector<std::size_t> sigma;
  sigma.reserve(c.perm.size());
  for (std::size_t v : c.perm) sigma.push_back(v + 1);
  j["sigma"] = sigma;
  j["value"] = value;
  return j;
}

std::pair<DiscreteCoupling, double> coupling_from_json(
    const nlohmann::json& j) {
  DiscreteCoupling c;
  c.level = j.at("n").get<int>();
  const std::size_t m = std::size_t{1} << c.level;
  for (const auto& v : j.at("sigma")) {
    const std::size_t s = v.get<std::size_t>();
    if (s < 1 || s > m)
      throw std::invalid_argument("coupling json: sigma entry out of range");
    c.perm.push_back(s - 1);
  }
  if (c.perm.size() != m)
    throw std::invalid_argument("coupling json: sigma length != 2^n");
  double value = j.contains("value") ? j["value"].get<double>() : 0.0;
  return {std::move(c), value};
}

nlohmann::ordered_json shuffle_to_json(const ShuffleOfM& s) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = s.pieces();
  j["s"] = s.s();
  std::vector<std::size_t> pi;
  for (std::size_t v : s.permutation()) pi.push_back(v + 1);
  j["pi"] = pi;
  j["omega"] = s.omega();
  return j;
}

ShuffleOfM shuffle_from_json(const nlohmann::json& j) {
  std::vector<double> s = j.at("s").get<std::vector<double>>();
  std::vector<std::size_t> pi;
  for (const auto& v : j.at("pi")) {
    std::size_t p = v.get<std::size_t>();
    if (p < 1) throw std::invalid_argument("shuffle json: pi is 1-based");
    pi.push_back(p - 1);
  }
  std::vector<int> omega = j.at("omega").get<std::vector<int>>();
  return ShuffleOfM(std::move(s), std::move(pi), std::move(omega));
}

nlohmann::ordered_json assignment_to_json(const Assignment& a) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["m"] = a.perm.size();
  j["sense"] = a.sense == Sense::Min ? "min" : "max";
  std::vector<std::size_t> sigma;
  for (std::size_t v : a.perm) sigma.push_back(v + 1);
  j["sigma"] = sigma;
  j["value"] = a.value;
  j["u"] = a.row_potential;
  j["v"] = a.col_potential;
  return j;
}

nlohmann::ordered_json cycle_report_to_json(const CycleReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["pass"] = r.pass;
  j["worst_gap"] = r.worst_gap;
  if (!r.pass) {
    nlohmann::ordered_json cyc = nlohmann::ordered_json::array();
    for (const auto& [x, y] : r.violating_cycle) cyc.push_back({x, y});
    j["violating_cycle"] = cyc;
  }
  return j;
}

void write_empirical_copula_csv(const EmpiricalCopula& e, std::ostream& os) {
  os << "# empirical-copula r=" << e.resolution() << " N=" << e.sample_count()
     << "\n";
  for (int k = 0; k <= e.resolution(); ++k) {
    for (int l = 0; l <= e.resolution(); ++l) {
      if (l) os << ',';
      os << fmt17(e.node_cdf(k, l));
    }
    os << '\n';
  }
}

}  // namespace copex
