#include "hb/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hb/errors.hpp"

namespace hb {

namespace {

template <class C>
void check_pivots(const Cholesky<C>& chol, std::size_t leading) {
  if constexpr (std::is_same_v<C, cd>) {
    if (chol.pivot_ratio(leading) < kPivotRatioFloor) {
      throw NumericalBreakdown("orthopoly: Cholesky pivot ratio below " + std::to_string(kPivotRatioFloor) +
                               " in double precision");
    }
  }
}

// In double a non-positive pivot is rounding, the limit of a small pivot ratio.
template <class C>
Cholesky<C> factor(const Matrix<C>& g) {
  if constexpr (std::is_same_v<C, cd>) {
    try {
      return Cholesky<C>(g);
    } catch (const DegenerateSystem& e) {
      throw NumericalBreakdown(std::string("orthopoly: ") + e.what() + " in double precision");
    }
  } else {
    return Cholesky<C>(g);
  }
}

template <class C>
std::vector<C> unit_rhs(std::size_t n) {
  std::vector<C> e(n + 1, C(0));
  e[n] = C(1);
  return e;
}

template <class C>
OrthoPoly<C> from_factor(const Cholesky<C>& chol, std::size_t n) {
  check_pivots(chol, n + 1);
  return normalize_solution(chol.solve_leading(unit_rhs<C>(n)));
}

}  // namespace

template <class C>
OrthoPoly<C> normalize_solution(std::vector<C> u, double tolerance) {
  using std::abs;
  using std::sqrt;
  const std::size_t n = u.size() - 1;
  real_t<C> norm_u(0);
  for (const auto& v : u) norm_u = std::max(norm_u, num::modulus(v));
  const auto un = u[n];
  if (!(un.real() > real_t<C>(0)) || abs(un.imag()) > real_t<C>(tolerance) * norm_u) {
    throw NumericalBreakdown("u_n is not real-positive at degree " + std::to_string(n));
  }
  // Of the two branches t = +-1/sqrt(u_n), only the positive one gives c_n > 0.
  const real_t<C> scale = sqrt(un.real());
  for (auto& v : u) v /= C(scale);
  u[n] = C(u[n].real());
  OrthoPoly<C> p;
  p.degree = n;
  p.leading = u[n].real();
  p.coefficients.coeffs = std::move(u);
  return p;
}

template OrthoPoly<cd> normalize_solution<cd>(std::vector<cd>, double);
template OrthoPoly<hp_complex> normalize_solution<hp_complex>(std::vector<hp_complex>, double);

Precision resolve_precision(Precision requested, std::size_t n) {
  if (requested != Precision::automatic) return requested;
  return n <= kAutoDoubleMaxDegree ? Precision::f64 : Precision::hp;
}

template <class C>
OrthoPoly<C> orthopoly_as(const TaylorStream& phi, std::size_t n, SolvePath path) {
  const auto g = gram_matrix_as<C>(phi, n).system_matrix();
  if (path == SolvePath::pivoted_lu) return normalize_solution(lu_solve(g, unit_rhs<C>(n)));
  return from_factor(factor(g), n);
}

template <class C>
double orthonormality_defect(const TaylorStream& phi, const std::vector<OrthoPoly<C>>& polys) {
  std::size_t top = 0;
  for (const auto& p : polys) top = std::max(top, p.coefficients.size());
  if (top == 0) return 0.0;
  const auto m = gram_matrix_as<C>(phi, top - 1);
  // Each p_i is padded to full length once; then <p_i, p_j> = p_i^T M conj(p_j).
  std::vector<std::vector<C>> mp(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    std::vector<C> row(top, C(0));
    const auto& c = polys[i].coefficients.coeffs;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == C(0)) continue;
      for (std::size_t k = 0; k < top; ++k) row[k] += c[j] * m(j, k);
    }
    mp[i] = std::move(row);
  }
  real_t<C> worst(0);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i; j < polys.size(); ++j) {
      const auto& q = polys[j].coefficients.coeffs;
      C v(0);
      for (std::size_t k = 0; k < q.size(); ++k) v += mp[i][k] * num::conjugate(q[k]);
      if (i == j) v -= C(1);
      worst = std::max(worst, num::modulus(v));
    }
  }
  return num::to_double(worst);
}

template <class C>
OrthoBasis<C> orthobasis_as(const TaylorStream& phi, std::size_t n) {
  const auto g = gram_matrix_as<C>(phi, n).system_matrix();
  const Cholesky<C> chol = factor(g);
  OrthoBasis<C> basis;
  basis.symbol = phi;
  basis.polys.reserve(n + 1);
  // The leading blocks of one factorization are the factorizations of the
  // per-degree systems, so each degree is an independent bordered solve.
  for (std::size_t k = 0; k <= n; ++k) basis.polys.push_back(from_factor(chol, k));
  basis.residual = orthonormality_defect(phi, basis.polys);
  return basis;
}

template OrthoPoly<cd> orthopoly_as<cd>(const TaylorStream&, std::size_t, SolvePath);
template OrthoPoly<hp_complex> orthopoly_as<hp_complex>(const TaylorStream&, std::size_t, SolvePath);
template OrthoBasis<cd> orthobasis_as<cd>(const TaylorStream&, std::size_t);
template OrthoBasis<hp_complex> orthobasis_as<hp_complex>(const TaylorStream&, std::size_t);
template double orthonormality_defect<cd>(const TaylorStream&, const std::vector<OrthoPoly<cd>>&);
template double orthonormality_defect<hp_complex>(const TaylorStream&, const std::vector<OrthoPoly<hp_complex>>&);

namespace {

OrthoPoly<cd> narrow(const OrthoPoly<hp_complex>& p) {
  return {p.degree, to_cd(p.coefficients), num::to_double(p.leading)};
}

}  // namespace

OrthoPoly<cd> orthopoly(const TaylorStream& phi, std::size_t n, Precision precision) {
  const Precision chosen = resolve_precision(precision, n);
  if (chosen == Precision::f64) {
    try {
      return orthopoly_as<cd>(phi, n);
    } catch (const NumericalBreakdown&) {
      if (precision != Precision::automatic) throw;
    }
  }
  return narrow(orthopoly_as<hp_complex>(phi, n));
}

OrthoBasis<cd> orthobasis(const TaylorStream& phi, std::size_t n, Precision precision) {
  const Precision chosen = resolve_precision(precision, n);
  if (chosen == Precision::f64) {
    try {
      return orthobasis_as<cd>(phi, n);
    } catch (const NumericalBreakdown&) {
      if (precision != Precision::automatic) throw;
    }
  }
  const auto wide = orthobasis_as<hp_complex>(phi, n);
  OrthoBasis<cd> out;
  out.symbol = wide.symbol;
  out.precision = Precision::hp;
  out.residual = wide.residual;
  for (const auto& p : wide.polys) out.polys.push_back(narrow(p));
  return out;
}

OrthoBasis<cd> rotate_basis(const OrthoBasis<cd>& basis, double gamma) {
  OrthoBasis<cd> out = basis;
  out.symbol = basis.symbol.rotated(gamma);
  for (auto& p : out.polys) {
    const auto n = static_cast<double>(p.degree);
    for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
      if (k == p.degree) continue;  // e^{i(n-n) gamma} = 1 keeps c_n real
      p.coefficients.coeffs[k] *= std::polar(1.0, (static_cast<double>(k) - n) * gamma);
    }
  }
  return out;
}

}  // namespace hb
