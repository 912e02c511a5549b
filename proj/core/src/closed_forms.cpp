#include "hb/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hb/errors.hpp"

namespace hb {

bool RationalABForm::satisfies_theorem(double tolerance) const {
  const double scale = 1.0 + std::norm(A);
  return std::abs(std::conj(A) * B + scale) <= tolerance * scale;
}

double RationalABForm::norm_q0() const { return std::sqrt(1.0 + 1.0 / std::norm(A)); }

double RationalABForm::norm_qn() const { return std::abs(A) + 1.0 / std::abs(A); }

std::optional<RationalABForm> detect_rational_ab(const SmirnovSymbol& phi) {
  const auto& poles = phi.pole_terms();
  if (poles.size() != 1 || poles[0].order != 1) return std::nullopt;
  if (std::abs(poles[0].pole - cd(1.0, 0.0)) > kPoleModulusTolerance) return std::nullopt;
  RationalABForm form{phi.constant_term(), poles[0].coefficient};
  if (!form.satisfies_theorem()) return std::nullopt;
  return form;
}

template <class C>
OrthoPoly<C> rational_ab_poly(const RationalABForm& form, std::size_t n) {
  using R = real_t<C>;
  using std::sqrt;
  const R a2 = num::abs2(num::from<C>(form.A));
  OrthoPoly<C> p;
  p.degree = n;
  p.coefficients.coeffs.assign(n + 1, C(0));
  if (n == 0) {
    p.leading = R(1) / sqrt(R(1) + R(1) / a2);
  } else {
    const R a = sqrt(a2);
    p.leading = R(1) / (a + R(1) / a);
    p.coefficients.coeffs[n - 1] = C(-p.leading);
  }
  p.coefficients.coeffs[n] = C(p.leading);
  return p;
}

template OrthoPoly<cd> rational_ab_poly<cd>(const RationalABForm&, std::size_t);
template OrthoPoly<hp_complex> rational_ab_poly<hp_complex>(const RationalABForm&, std::size_t);

OrthoBasis<cd> rational_ab_basis(const RationalABForm& form, std::size_t n) {
  if (!form.satisfies_theorem()) {
    throw PreconditionViolated("rational_ab_basis: conj(A) B != -(1 + |A|^2)");
  }
  OrthoBasis<cd> basis;
  basis.symbol = SmirnovSymbol::simple_pole(form.A, form.B);
  for (std::size_t k = 0; k <= n; ++k) basis.polys.push_back(rational_ab_poly<cd>(form, k));
  basis.residual = orthonormality_defect(basis.symbol, basis.polys);
  return basis;
}

OrthoBasis<cd> power_basis(int N, std::size_t n) {
  if (N < 1) throw PreconditionViolated("power_basis: N must be positive");
  const auto step = static_cast<std::size_t>(N);
  OrthoBasis<cd> basis;
  basis.symbol = power_entry(N).phi;
  for (std::size_t deg = 0; deg <= n; ++deg) {
    OrthoPoly<cd> p;
    p.degree = deg;
    p.coefficients.coeffs.assign(deg + 1, cd(0.0));
    if (deg < step) {
      p.leading = 1.0 / std::sqrt(2.0);
    } else {
      p.leading = 0.5;
      p.coefficients.coeffs[deg - step] = -0.5;
    }
    p.coefficients.coeffs[deg] = p.leading;
    basis.polys.push_back(std::move(p));
  }
  basis.residual = orthonormality_defect(basis.symbol, basis.polys);
  return basis;
}

OrthoBasis<cd> compose_basis(const OrthoBasis<cd>& base, int N) {
  if (N < 1) throw PreconditionViolated("compose_basis: N must be positive");
  const auto step = static_cast<std::size_t>(N);
  OrthoBasis<cd> out;
  out.symbol = base.symbol.composed(N);
  out.precision = base.precision;
  // The composition map is an isometry, so the base residual carries over.
  out.residual = base.residual;
  for (const auto& p : base.polys) {
    for (std::size_t i = 0; i < step; ++i) {
      OrthoPoly<cd> q;
      q.degree = step * p.degree + i;
      q.leading = p.leading;
      q.coefficients.coeffs.assign(q.degree + 1, cd(0.0));
      for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
        q.coefficients.coeffs[step * k + i] = p.coefficients.coeffs[k];
      }
      out.polys.push_back(std::move(q));
    }
  }
  std::sort(out.polys.begin(), out.polys.end(), [](const auto& a, const auto& b) { return a.degree < b.degree; });
  return out;
}

namespace {

constexpr double kSqrt5 = 2.23606797749978969640917366873128;

}  // namespace

double fm_coefficient(std::size_t k) {
  const double golden = std::numbers::phi;
  const double conjugate = 1.0 - golden;
  const double e = static_cast<double>(2 * k + 1);
  return (std::pow(golden, e) - std::pow(conjugate, e)) / kSqrt5;
}

PolyVec fm_polynomial(std::size_t n) {
  PolyVec q;
  q.coeffs.assign(n + 1, cd(0.0));
  q.coeffs[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = fm_coefficient(k);
    q.coeffs[k + 1] += a;
    q.coeffs[k] -= a;
  }
  return q;
}

double fm_norm_squared_sum(std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = fm_coefficient(k);
    s += a * a;
  }
  return 2.0 + 4.0 * s;
}

double fm_norm_squared_closed(std::size_t n) {
  const double up = (7.0 + 3.0 * kSqrt5) / 2.0;
  const double down = (7.0 - 3.0 * kSqrt5) / 2.0;
  const double nn = static_cast<double>(n);
  const double s = (3.0 + kSqrt5) / 10.0 * (std::pow(up, nn) - 1.0) / (up - 1.0) +
                   (3.0 - kSqrt5) / 10.0 * (std::pow(down, nn) - 1.0) / (down - 1.0) + 0.4 * nn;
  return 2.0 + 4.0 * s;
}

double fm_norm_b(std::size_t n) {
  const double direct = fm_norm_squared_sum(n);
  const double closed = fm_norm_squared_closed(n);
  if (std::abs(direct - closed) > 1e-10 * direct) {
    throw NumericalBreakdown("fm_norm_b: sum and closed form disagree at n = " + std::to_string(n));
  }
  return std::sqrt(direct);
}

double fm_asymptotic_constant() { return 2.0 * std::pow(5.0, 0.25) / 5.0; }

std::optional<std::pair<std::size_t, std::size_t>> monomial_orthogonality_witness(const TaylorStream& phi,
                                                                                   std::size_t bound) {
  if (bound < 1) throw PreconditionViolated("monomial_orthogonality_witness: bound must be >= 1");
  for (std::size_t k = 1; k <= bound; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(monomial_inner(phi, j, k)) > kWitnessThreshold) return std::pair{j, k};
    }
  }
  return std::nullopt;
}

}  // namespace hb
