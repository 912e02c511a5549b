#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hb/closed_forms.hpp"
#include "hb/errors.hpp"
#include "hb/recurrence.hpp"
#include "hb/structure.hpp"

namespace hbtool {

namespace {

using hb::cd;

// splitmix64; the standard distributions are not portable across
// standard libraries, so draws are built from raw bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53; }
  cd complex_in_box(double r) { return {uniform(-r, r), uniform(-r, r)}; }

 private:
  std::uint64_t state_;
};

double coefficient_gap(const hb::OrthoPoly<cd>& a, const hb::OrthoPoly<cd>& b) {
  const auto& x = a.coefficients.coeffs;
  const auto& y = b.coefficients.coeffs;
  double gap = 0.0;
  for (std::size_t k = 0; k < std::max(x.size(), y.size()); ++k) {
    const cd u = k < x.size() ? x[k] : cd{};
    const cd v = k < y.size() ? y[k] : cd{};
    gap = std::max(gap, std::abs(u - v));
  }
  return gap;
}

double basis_gap(const hb::OrthoBasis<cd>& a, const hb::OrthoBasis<cd>& b) {
  double gap = 0.0;
  const std::size_t count = std::min(a.polys.size(), b.polys.size());
  for (std::size_t i = 0; i < count; ++i) gap = std::max(gap, coefficient_gap(a.polys[i], b.polys[i]));
  return gap;
}

CheckResult finish(std::string name, double worst, double tolerance, std::string note = {}) {
  return {std::move(name), worst <= tolerance, worst, tolerance, std::move(note)};
}

cd admissible_partner(cd a) { return -(1.0 + std::norm(a)) / std::conj(a); }

}  // namespace

std::vector<CheckResult> run_verify_suite(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckResult> out;

  {
    const auto closed = hb::rational_ab_basis({-1.0, 2.0}, 32);
    const auto oracle = hb::orthobasis(hb::sarason_half().phi, 32, hb::Precision::f64);
    out.push_back(finish("sarason-closed-form", basis_gap(closed, oracle), 1e-10));
  }
  {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const double r = rng.uniform(0.3, 3.0);
      const cd a = std::polar(r, rng.uniform(-std::numbers::pi, std::numbers::pi));
      const hb::RationalABForm form{a, admissible_partner(a)};
      worst = std::max(worst, basis_gap(hb::rational_ab_basis(form, 16),
                                        hb::orthobasis(hb::SmirnovSymbol::simple_pole(form.A, form.B), 16)));
    }
    out.push_back(finish("rational-ab-random", worst, 1e-9));
  }
  {
    double worst = 0.0;
    for (int N = 1; N <= 4; ++N) {
      worst = std::max(worst, basis_gap(hb::power_basis(N, 24), hb::orthobasis(hb::power_entry(N).phi, 24)));
    }
    out.push_back(finish("power-basis", worst, 1e-9));
  }
  {
    double worst = 0.0;
    for (const auto& phi : {hb::SmirnovSymbol::simple_pole(0.0, 1.0), hb::blaschke_entry(0.5).phi}) {
      const auto base = hb::orthobasis(phi, 6);
      for (int N : {2, 3}) {
        const auto composed = hb::compose_basis(base, N);
        const auto oracle = hb::orthobasis(composed.symbol, composed.polys.back().degree);
        worst = std::max(worst, basis_gap(composed, oracle));
      }
    }
    out.push_back(finish("composition", worst, 1e-9));
  }
  {
    double worst = 0.0;
    const auto phi = hb::SmirnovSymbol::simple_pole(rng.complex_in_box(2.0), rng.complex_in_box(2.0) + 0.5);
    const auto base = hb::orthobasis(phi, 16);
    for (double gamma : {std::numbers::pi / 3.0, std::numbers::pi, 1.0}) {
      const auto moved = hb::rotate_basis(base, gamma);
      worst = std::max(worst, basis_gap(moved, hb::orthobasis(hb::rotate_symbol(phi, gamma), 16)));
    }
    out.push_back(finish("rotation", worst, 1e-9));
  }
  {
    double worst = 0.0, residual = 0.0;
    int skipped = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const cd a = rng.complex_in_box(3.0);
      const cd b = rng.complex_in_box(3.0);
      const auto data = hb::build_recurrence(a, b);
      if (data.near_boundary) {
        ++skipped;
        continue;
      }
      const auto oracle = hb::orthobasis(hb::SmirnovSymbol::simple_pole(a, b), 24);
      for (std::size_t n = 2; n <= 24; ++n) {
        const auto p = hb::coefficients_via_recurrence(data, n);
        worst = std::max(worst, coefficient_gap(p, oracle.polys[n]));
        residual = std::max(residual, hb::recurrence_residual(data, p));
      }
    }
    out.push_back(finish("recurrence", worst, 1e-9, std::to_string(skipped) + " boundary draws skipped"));
    out.push_back(finish("recurrence-residual", residual, 1e-10));
  }
  {
    double worst = 0.0;
    bool all = true;
    for (int trial = 0; trial < 10; ++trial) {
      const auto replay = hb::reduced_matrix_check(rng.complex_in_box(3.0), rng.complex_in_box(3.0) + 0.1, 12);
      all = all && replay.matches;
      worst = std::max(worst, replay.max_deviation / replay.scale);
    }
    auto r = finish("row-reduction", worst, 1e-9);
    r.passed = r.passed && all;
    out.push_back(r);
  }
  {
    double worst = 0.0;
    const std::pair<hb::SmirnovSymbol, std::size_t> cases[] = {
        {hb::SmirnovSymbol::simple_pole(0.0, 1.0), 64},
        {hb::SmirnovSymbol::simple_pole(-1.0, 2.0), 10},
        {hb::SmirnovSymbol::pole_at_one({1.0, 1.0, 1.0}), 32},
    };
    for (const auto& [phi, n] : cases) {
      worst = std::max(worst, coefficient_gap(hb::structured_solve(phi, n), hb::orthopoly(phi, n)));
    }
    out.push_back(finish("structured-solver", worst, 1e-8));
  }
  {
    double worst = 0.0;
    const auto phi = hb::sarason_half().phi;
    for (std::size_t n = 0; n <= 20; ++n) {
      const double sum = hb::fm_norm_squared_sum(n);
      const double closed = hb::fm_norm_squared_closed(n);
      const double assembled = hb::hb_norm_squared(phi, hb::fm_polynomial(n));
      worst = std::max({worst, std::abs(sum - closed) / sum, std::abs(sum - assembled) / sum});
    }
    out.push_back(finish("fricain-mashreghi", worst, 1e-9));
  }
  {
    int missing = 0;
    for (const auto& entry : hb::catalog()) {
      if (!hb::monomial_orthogonality_witness(entry.phi, 8)) ++missing;
    }
    out.push_back(finish("monomial-witness", missing, 0.0));
  }
  {
    double worst = 0.0;
    for (const auto& entry : hb::catalog()) {
      worst = std::max({worst, hb::pythagorean_defect(entry), hb::quotient_defect(entry)});
    }
    out.push_back(finish("catalog-pairs", worst, 1e-10));
  }
  return out;
}

}  // namespace hbtool
