#include "json_io.hpp"

#include <cmath>

namespace hbtool {

namespace {

// NaN has no JSON spelling.
ordered_json number(double x) { return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr); }

}  // namespace

ordered_json to_json(hb::cd z) { return {{"re", z.real()}, {"im", z.imag()}}; }

ordered_json to_json(const std::vector<hb::cd>& v) {
  auto arr = ordered_json::array();
  for (const auto& z : v) arr.push_back(to_json(z));
  return arr;
}

ordered_json to_json(const hb::OrthoPoly<hb::cd>& p, double residual) {
  return {{"degree", p.degree}, {"coefficients", to_json(p.coefficients.coeffs)}, {"residual", residual}};
}

ordered_json to_json(const hb::OrthoBasis<hb::cd>& basis) {
  auto arr = ordered_json::array();
  for (const auto& p : basis.polys) arr.push_back(to_json(p, basis.residual));
  return arr;
}

ordered_json to_json(const hb::GramMatrix<hb::cd>& m) {
  auto rows = ordered_json::array();
  for (std::size_t j = 0; j < m.size(); ++j) {
    auto row = ordered_json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(to_json(m(j, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json to_json(const hb::RecurrenceData& d) {
  ordered_json j;
  j["A"] = to_json(d.A);
  j["B"] = to_json(d.B);
  j["rho"] = d.rho;
  j["T0"] = to_json(d.T0);
  j["T1"] = to_json(d.T1);
  j["T2"] = to_json(d.T2);
  j["T3"] = to_json(d.T3);
  j["T4"] = to_json(d.T4);
  j["Q"] = to_json(std::vector<hb::cd>(d.Q.begin(), d.Q.end()));
  j["discriminant"] = to_json(d.discriminant);
  j["case"] = std::string(hb::to_string(d.root_case));
  if (d.root_case != hb::RootCase::degenerate_linear) {
    j["lambda1"] = to_json(d.lambda1);
    j["lambda2"] = to_json(d.lambda2);
  }
  j["near_boundary"] = d.near_boundary;
  return j;
}

ordered_json to_json(const hb::StructureReport& r) {
  ordered_json j;
  j["pole_order"] = r.pole_order;
  j["reduction_power"] = r.reduction_power;
  j["size"] = r.size;
  j["band_width"] = r.band_width;
  j["lower_triangle_clear"] = r.lower_triangle_clear;
  j["low_rank_rows"] = r.low_rank_rows;
  j["low_rank_rank"] = r.low_rank_rank;
  j["diagonal_degrees"] = r.diagonal_degrees;
  auto newton = ordered_json::array();
  for (const auto& diag : r.newton) newton.push_back(to_json(diag));
  j["newton"] = std::move(newton);
  j["residual"] = r.residual;
  j["fit_residual"] = r.fit_residual;
  j["scale"] = r.scale;
  j["confirmed"] = r.confirmed;
  return j;
}

ordered_json to_json(const std::vector<hb::BenchRow>& rows) {
  auto arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back({{"n", r.n},
                   {"dense_seconds", number(r.dense_seconds)},
                   {"structured_seconds", number(r.structured_seconds)},
                   {"dense_residual", number(r.dense_residual)},
                   {"structured_residual", number(r.structured_residual)},
                   {"max_difference", number(r.max_difference)},
                   {"agree", r.agree},
                   {"dense_status", r.dense_status}});
  }
  return arr;
}

}  // namespace hbtool
