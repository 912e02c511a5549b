#pragma once

// Simple pole at 1: phi = A + B/(1 - z).
//
// After the row reduction of the Gram system the coefficients of p_n obey
//
//   conj(T0) c_{k+1} + (T1 - T0) c_k + T0 c_{k-1} = 0,   1 <= k <= n-2,
//
// closed by three boundary rows in c_0, c_1, c_{n-1}, c_n and t:
//
//   T0 c_{n-2} + (T1 - T0) c_{n-1} + conj(T0) c_n =  t
//   T0 c_{n-1} + T1 c_n                          = -t
//   T3 c_0 + T4 c_1                              =  0

#include <array>
#include <cstddef>
#include <string>

#include "hb/linalg.hpp"
#include "hb/ortho.hpp"

namespace hb {

enum class RootCase {
  // T0 = 0: the characteristic polynomial has degree 0 in the shift.
  degenerate_linear,
  simple_roots,
  double_root,
};

std::string_view to_string(RootCase c);

// Discriminant bands relative to (|T0| + |T1|)^2.
inline constexpr double kDoubleRootTolerance = 1e-9;
inline constexpr double kCaseBoundaryBand = 1e-6;
// |T0| <= this * (1 + |A|^2 + |A||B|) counts as zero.
inline constexpr double kDegenerateTolerance = 1e-12;

template <class C>
struct RecurrenceScalars {
  real_t<C> rho{0};
  C T0, T1, T2, T3, T4;
};

template <class C>
RecurrenceScalars<C> recurrence_scalars(cd A, cd B);

struct RecurrenceData {
  cd A;
  cd B;
  double rho = 0.0;
  cd T0, T1, T2, T3, T4;
  // Q(z) = q[2] z^2 + q[1] z + q[0] = conj(T0) z^2 + (T1 - T0) z + T0
  std::array<cd, 3> Q;
  cd discriminant;
  RootCase root_case = RootCase::simple_roots;
  // |lambda1| <= |lambda2|, ties broken by argument. Both equal the double
  // root in that case; unset when degenerate.
  cd lambda1;
  cd lambda2;
  // The discriminant falls between the double-root tolerance and the
  // boundary band, or a root sits at 1; recurrence formulas are refused.
  bool near_boundary = false;
};

// Throws PreconditionViolated if B == 0.
RecurrenceData build_recurrence(cd A, cd B);

template <class C>
OrthoPoly<C> coefficients_via_recurrence_as(const RecurrenceData& data, std::size_t n);

// Precision::automatic runs in double and retries in 128-bit on
// SingularBorder or NumericalBreakdown.
OrthoPoly<cd> coefficients_via_recurrence(const RecurrenceData& data, std::size_t n,
                                          Precision precision = Precision::f64);

// max_{1<=k<=n-2} |conj(T0) c_{k+1} + (T1 - T0) c_k + T0 c_{k-1}| / max|c|
double recurrence_residual(const RecurrenceData& data, const OrthoPoly<cd>& p);

struct ReductionReplay {
  bool matches = false;
  double max_deviation = 0.0;
  double scale = 0.0;
  // Augmented (n+1) x (n+2) matrix after the row operations, last column = RHS at t = 1.
  Matrix<cd> reduced;
  std::string diagnostic;
};

// Replays the elementary row operations on the assembled augmented Gram
// system and compares with the banded target entrywise (tolerance 1e-9 * scale).
ReductionReplay reduced_matrix_check(cd A, cd B, std::size_t n);

namespace detail {

// Banded reduced system with t = 1, built from arbitrary scalars.
Matrix<cd> reduced_system(cd T0, cd T1, cd T3, cd T4, std::size_t n);

// t = 1 solution u of the reduced system from the closed-form solution of
// the band rows and a small boundary solve. Public for tests that drive
// root cases unreachable from valid (A, B).
template <class C>
std::vector<C> boundary_solve(const C& T0, const C& T1, const C& T3, const C& T4, std::size_t n, RootCase root_case,
                              const C& lambda1, const C& lambda2);

}  // namespace detail

}  // namespace hb
