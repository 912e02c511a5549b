#pragma once

// Reference solver for the orthonormal polynomials of H(b).
//
// p_n is the unique degree-n polynomial with <p_n, z^k>_b = 0 for k < n,
// ||p_n||_b = 1 and a positive leading coefficient. Writing G for the
// system matrix (rows = orthogonality conditions), the coefficient vector
// solves G c = t e_n; the t = 1 solution u has u_n = e_n^T G^{-1} e_n > 0 and
// c = u / sqrt(u_n).

#include <cstddef>
#include <vector>

#include "hb/gram.hpp"

namespace hb {

template <class C>
struct OrthoPoly {
  std::size_t degree = 0;
  Polynomial<C> coefficients;
  real_t<C> leading{0};
};

template <class C>
struct OrthoBasis {
  std::vector<OrthoPoly<C>> polys;
  TaylorStream symbol;
  Precision precision = scalar_traits<C>::precision;
  // max_{i,j} |<p_i, p_j>_b - delta_ij|
  double residual = 0.0;
};

enum class SolvePath {
  cholesky,
  // Partially pivoted LU on the same system; used to check uniqueness.
  pivoted_lu,
};

// Breakdown threshold on min/max Cholesky pivot in double precision.
inline constexpr double kPivotRatioFloor = 1e-13;
// u_n must be real-positive: |Im u_n| <= kPositivityTolerance * ||u||.
inline constexpr double kPositivityTolerance = 1e-12;

// Below this degree the automatic policy stays in double.
inline constexpr std::size_t kAutoDoubleMaxDegree = 32;

Precision resolve_precision(Precision requested, std::size_t n);

// c = u / sqrt(u_n) for the t = 1 solution u. Throws NumericalBreakdown
// unless u_n is real-positive to within tolerance * max|u|.
template <class C>
OrthoPoly<C> normalize_solution(std::vector<C> u, double tolerance = kPositivityTolerance);

template <class C>
OrthoPoly<C> orthopoly_as(const TaylorStream& phi, std::size_t n, SolvePath path = SolvePath::cholesky);

template <class C>
OrthoBasis<C> orthobasis_as(const TaylorStream& phi, std::size_t n);

// Runtime precision selection. Precision::automatic picks by degree and
// retries in 128-bit arithmetic on NumericalBreakdown. Coefficients are
// returned in double either way.
OrthoPoly<cd> orthopoly(const TaylorStream& phi, std::size_t n, Precision precision = Precision::automatic);
OrthoBasis<cd> orthobasis(const TaylorStream& phi, std::size_t n, Precision precision = Precision::automatic);

// Orthonormality defect of an arbitrary family against phi's Gram matrix,
// computed in the precision of C.
template <class C>
double orthonormality_defect(const TaylorStream& phi, const std::vector<OrthoPoly<C>>& polys);

// p~_n(z) = e^{-i n gamma} p_n(e^{i gamma} z), the basis for phi(e^{i gamma} z).
OrthoBasis<cd> rotate_basis(const OrthoBasis<cd>& basis, double gamma);

}  // namespace hb
