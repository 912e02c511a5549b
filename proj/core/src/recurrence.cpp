#include "hb/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hb/closed_forms.hpp"
#include "hb/errors.hpp"

namespace hb {

std::string_view to_string(RootCase c) {
  switch (c) {
    case RootCase::degenerate_linear:
      return "degenerate_linear";
    case RootCase::simple_roots:
      return "simple_roots";
    case RootCase::double_root:
      return "double_root";
  }
  return "unknown";
}

template <class C>
RecurrenceScalars<C> recurrence_scalars(cd A, cd B) {
  using R = real_t<C>;
  const C a = num::from<C>(A);
  const C b = num::from<C>(B);
  const R b2 = num::abs2(b);
  RecurrenceScalars<C> s;
  s.T0 = C(R(1) + num::abs2(a)) + a * num::conjugate(b);
  s.T1 = -num::conjugate(s.T0) - C(b2);
  s.rho = R(1) + num::abs2(C(a + b));
  s.T2 = C(s.rho) - num::conjugate(s.T0);
  s.T3 = C(s.rho) + s.T0 * s.T2 / C(b2);
  s.T4 = -num::conjugate(s.T0) * s.T2 / C(b2);
  return s;
}

template RecurrenceScalars<cd> recurrence_scalars<cd>(cd, cd);
template RecurrenceScalars<hp_complex> recurrence_scalars<hp_complex>(cd, cd);

namespace {

constexpr double kRecurrencePositivityTolerance = 1e-10;

// Roots of a z^2 + b z + c without cancellation in the larger one, ordered
// by modulus and then argument.
template <class C>
std::pair<C, C> quadratic_roots(const C& a, const C& b, const C& c) {
  using std::sqrt;
  C root = sqrt(C(b * b - C(4) * a * c));
  if ((num::conjugate(b) * root).real() < real_t<C>(0)) root = -root;
  const C q = C(-(b + root)) / C(2);
  C r1 = q / a;
  C r2 = c / q;
  const cd d1 = num::to_cd(r1);
  const cd d2 = num::to_cd(r2);
  const bool swap = std::abs(d1) > std::abs(d2) || (std::abs(d1) == std::abs(d2) && std::arg(d1) > std::arg(d2));
  if (swap) std::swap(r1, r2);
  return {r1, r2};
}

}  // namespace

RecurrenceData build_recurrence(cd A, cd B) {
  if (B == cd(0.0)) throw PreconditionViolated("build_recurrence: B must be nonzero");
  const auto s = recurrence_scalars<cd>(A, B);
  RecurrenceData d;
  d.A = A;
  d.B = B;
  d.rho = s.rho;
  d.T0 = s.T0;
  d.T1 = s.T1;
  d.T2 = s.T2;
  d.T3 = s.T3;
  d.T4 = s.T4;
  d.Q = {s.T0, s.T1 - s.T0, std::conj(s.T0)};
  d.discriminant = d.Q[1] * d.Q[1] - 4.0 * d.Q[2] * d.Q[0];

  const double degenerate_scale = 1.0 + std::norm(A) + std::abs(A) * std::abs(B);
  if (std::abs(s.T0) <= kDegenerateTolerance * degenerate_scale) {
    d.root_case = RootCase::degenerate_linear;
    return d;
  }
  const double scale = std::pow(std::abs(s.T0) + std::abs(s.T1), 2);
  const double disc = std::abs(d.discriminant);
  if (disc <= kDoubleRootTolerance * scale) {
    d.root_case = RootCase::double_root;
    d.lambda1 = d.lambda2 = s.T0 / std::abs(s.T0);
  } else {
    d.root_case = RootCase::simple_roots;
    std::tie(d.lambda1, d.lambda2) = quadratic_roots(d.Q[2], d.Q[1], d.Q[0]);
    d.near_boundary = disc <= kCaseBoundaryBand * scale;
  }
  for (const cd l : {d.lambda1, d.lambda2}) {
    if (std::abs(l - 1.0) <= kDoubleRootTolerance) d.near_boundary = true;
  }
  return d;
}

namespace detail {

Matrix<cd> reduced_system(cd T0, cd T1, cd T3, cd T4, std::size_t n) {
  if (n < 2) throw PreconditionViolated("reduced_system: n must be >= 2");
  Matrix<cd> m(n + 1, n + 2);
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    m(k, k) = T0;
    m(k, k + 1) = T1 - T0;
    m(k, k + 2) = std::conj(T0);
  }
  m(n - 2, n + 1) = 1.0;
  m(n - 1, n - 1) = T0;
  m(n - 1, n) = T1;
  m(n - 1, n + 1) = -1.0;
  m(n, 0) = T3;
  m(n, 1) = T4;
  return m;
}

template <class C>
std::vector<C> boundary_solve(const C& T0, const C& T1, const C& T3, const C& T4, std::size_t n, RootCase root_case,
                              const C& lambda1, const C& lambda2) {
  if (n < 2) throw PreconditionViolated("boundary_solve: n must be >= 2");
  if (root_case == RootCase::degenerate_linear) {
    throw PreconditionViolated("boundary_solve: degenerate case has no boundary system");
  }
  // c_k = a_k c_0 + b_k c_1 for k < n.
  std::vector<C> a(n), b(n);
  const C T0c = num::conjugate(T0);
  if (root_case == RootCase::simple_roots) {
    std::vector<C> v(n + 1);
    C p1(1), p2(1);
    for (std::size_t j = 0; j <= n; ++j) {
      v[j] = p2 - p1;
      p1 *= lambda1;
      p2 *= lambda2;
    }
    const C prod = lambda1 * lambda2;
    const C v1 = v[1];
    a[0] = C(1);
    b[0] = C(0);
    for (std::size_t k = 1; k < n; ++k) {
      a[k] = -prod * v[k - 1] / v1;
      b[k] = v[k] / v1;
    }
    Matrix<C> sys(3, 3);
    sys(0, 0) = T0 * a[n - 2] + (T1 - T0) * a[n - 1];
    sys(0, 1) = T0 * b[n - 2] + (T1 - T0) * b[n - 1];
    sys(0, 2) = T0c;
    sys(1, 0) = T0 * a[n - 1];
    sys(1, 1) = T0 * b[n - 1];
    sys(1, 2) = T1;
    sys(2, 0) = T3;
    sys(2, 1) = T4;
    const auto x = lu_solve(std::move(sys), std::vector<C>{C(1), C(-1), C(0)});
    std::vector<C> u(n + 1);
    for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * x[0] + b[k] * x[1];
    u[n] = x[2];
    return u;
  }
  // Double root: c_k = ((1-k) c_0 + k conj(lambda) c_1) lambda^k with
  // c_1 = -(T3/T4) c_0 from the last row.
  if (T4 == C(0)) throw SingularBorder("boundary_solve: T4 = 0 leaves c_1 undetermined");
  const C lambda = lambda1;
  const C ratio = T3 / T4;
  std::vector<C> g(n);
  C power(1);
  for (std::size_t k = 0; k < n; ++k) {
    const real_t<C> kk(static_cast<double>(k));
    g[k] = (C(real_t<C>(1) - kk) - C(kk) * num::conjugate(lambda) * ratio) * power;
    power *= lambda;
  }
  Matrix<C> sys(2, 2);
  sys(0, 0) = T0 * g[n - 2] + (T1 - T0) * g[n - 1];
  sys(0, 1) = T0c;
  sys(1, 0) = T0 * g[n - 1];
  sys(1, 1) = T1;
  const auto x = lu_solve(std::move(sys), std::vector<C>{C(1), C(-1)});
  std::vector<C> u(n + 1);
  for (std::size_t k = 0; k < n; ++k) u[k] = g[k] * x[0];
  u[n] = x[1];
  return u;
}

template std::vector<cd> boundary_solve<cd>(const cd&, const cd&, const cd&, const cd&, std::size_t, RootCase,
                                            const cd&, const cd&);
template std::vector<hp_complex> boundary_solve<hp_complex>(const hp_complex&, const hp_complex&,
                                                            const hp_complex&, const hp_complex&, std::size_t,
                                                            RootCase, const hp_complex&, const hp_complex&);

}  // namespace detail

template <class C>
OrthoPoly<C> coefficients_via_recurrence_as(const RecurrenceData& data, std::size_t n) {
  if (n < 2) return orthopoly_as<C>(SmirnovSymbol::simple_pole(data.A, data.B), n);
  if (data.root_case == RootCase::degenerate_linear) return rational_ab_poly<C>({data.A, data.B}, n);
  if (data.near_boundary) {
    throw CaseBoundary("recurrence: discriminant inside the case-boundary band; use the oracle");
  }
  const auto s = recurrence_scalars<C>(data.A, data.B);
  C l1, l2;
  if (data.root_case == RootCase::double_root) {
    l1 = l2 = s.T0 / C(num::modulus(s.T0));
  } else if constexpr (std::is_same_v<C, cd>) {
    l1 = data.lambda1;
    l2 = data.lambda2;
  } else {
    std::tie(l1, l2) = quadratic_roots(num::conjugate(s.T0), C(s.T1 - s.T0), s.T0);
  }
  return normalize_solution(detail::boundary_solve(s.T0, s.T1, s.T3, s.T4, n, data.root_case, l1, l2),
                            kRecurrencePositivityTolerance);
}

template OrthoPoly<cd> coefficients_via_recurrence_as<cd>(const RecurrenceData&, std::size_t);
template OrthoPoly<hp_complex> coefficients_via_recurrence_as<hp_complex>(const RecurrenceData&, std::size_t);

OrthoPoly<cd> coefficients_via_recurrence(const RecurrenceData& data, std::size_t n, Precision precision) {
  auto wide = [&] {
    const auto p = coefficients_via_recurrence_as<hp_complex>(data, n);
    return OrthoPoly<cd>{p.degree, to_cd(p.coefficients), num::to_double(p.leading)};
  };
  if (precision == Precision::hp) return wide();
  try {
    return coefficients_via_recurrence_as<cd>(data, n);
  } catch (const SingularBorder&) {
    if (precision != Precision::automatic) throw;
  } catch (const NumericalBreakdown&) {
    if (precision != Precision::automatic) throw;
  }
  return wide();
}

double recurrence_residual(const RecurrenceData& data, const OrthoPoly<cd>& p) {
  const auto& c = p.coefficients.coeffs;
  double top = 0.0;
  for (const auto& v : c) top = std::max(top, std::abs(v));
  if (top == 0.0 || p.degree < 3) return 0.0;
  double worst = 0.0;
  for (std::size_t k = 1; k + 2 <= p.degree; ++k) {
    const cd r = std::conj(data.T0) * c[k + 1] + (data.T1 - data.T0) * c[k] + data.T0 * c[k - 1];
    worst = std::max(worst, std::abs(r));
  }
  return worst / top;
}

ReductionReplay reduced_matrix_check(cd A, cd B, std::size_t n) {
  if (n < 4) throw PreconditionViolated("reduced_matrix_check: n must be >= 4");
  const auto data = build_recurrence(A, B);
  const auto g = gram_matrix(SmirnovSymbol::simple_pole(A, B), n).system_matrix();
  Matrix<cd> m(n + 1, n + 2);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) m(i, j) = g(i, j);
  }
  m(n, n + 1) = 1.0;

  auto subtract_next = [&](std::size_t last) {
    for (std::size_t j = 0; j <= last; ++j) {
      for (std::size_t col = 0; col < n + 2; ++col) m(j, col) -= m(j + 1, col);
    }
  };
  auto fold_into_last = [&](cd weight) {
    for (std::size_t col = 0; col < n + 2; ++col) {
      cd s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += m(j, col);
      m(n, col) += weight * s;
    }
  };
  subtract_next(n - 1);
  fold_into_last(1.0);
  subtract_next(n - 2);
  fold_into_last(data.T2 / std::norm(B));

  const auto target = detail::reduced_system(data.T0, data.T1, data.T3, data.T4, n);
  ReductionReplay out;
  out.scale = std::max(1.0, max_abs(target));
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n + 2; ++j) {
      const double dev = std::abs(m(i, j) - target(i, j));
      if (dev > out.max_deviation) {
        out.max_deviation = dev;
        wi = i;
        wj = j;
      }
    }
  }
  out.matches = out.max_deviation <= 1e-9 * out.scale;
  if (!out.matches) {
    std::ostringstream msg;
    msg << "entry (" << wi << ", " << wj << "): got " << m(wi, wj) << ", expected " << target(wi, wj)
        << ", deviation " << out.max_deviation << " vs scale " << out.scale;
    out.diagnostic = msg.str();
  }
  out.reduced = std::move(m);
  return out;
}

}  // namespace hb
