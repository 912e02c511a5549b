#pragma once

// Banded-plus-low-rank structure of shift-reduced Gram systems for a single
// pole of order m at z = 1, and the solver that uses it.
//
// B is the backward shift (ones on the first superdiagonal); left
// multiplication by (I - B) replaces row R_j by R_j - R_{j+1} for j < n.
// With d = 2m the reduced system (I - B)^d G is expected to split as T + N,
// T upper triangular with 2m+1 diagonals whose entries are polynomials in
// the row index, N supported on a few trailing rows.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hb/linalg.hpp"
#include "hb/ortho.hpp"

namespace hb {

// d difference passes over the rows.
Matrix<cd> apply_shift_reduction(Matrix<cd> m, std::size_t d);
// The same via sum_i (-1)^i C(d, i) R_{j+i}, rows clipped at n.
Matrix<cd> apply_shift_reduction_binomial(const Matrix<cd>& m, std::size_t d);

// Entries below this times the reduced matrix's largest entry count as zero.
inline constexpr double kStructureTolerance = 1e-10;

struct StructureReport {
  int pole_order = 0;
  std::size_t reduction_power = 0;
  std::size_t size = 0;  // n + 1
  // Number of diagonals (starting at the main one) carrying nonzero
  // entries in the conforming rows; 0 if a nonzero sits below the diagonal.
  std::size_t band_width = 0;
  bool lower_triangle_clear = true;
  // Trailing rows with entries outside the band.
  std::size_t low_rank_rows = 0;
  // Numerical rank of N = reduced - T.
  std::size_t low_rank_rank = 0;
  // Per diagonal offset 0..d: degree in k of the entries T_{k, k+offset},
  // by exact finite differences; -1 for an identically zero diagonal and
  // reduction_power + 1 when no difference order up to the sample count vanishes.
  std::vector<int> diagonal_degrees;
  // Newton forward differences at k = 0 per offset, up to its degree:
  // T_{k,k+o} = sum_i newton[o][i] * binom(k, i).
  std::vector<std::vector<cd>> newton;
  // Largest entry outside the claimed pattern in the conforming rows.
  double residual = 0.0;
  // Largest violation of the fitted polynomials.
  double fit_residual = 0.0;
  double scale = 0.0;
  bool confirmed = false;

  // Value of the fitted diagonal polynomial for offset o at row k.
  cd band_value(std::size_t offset, std::size_t k) const;
};

// Requires a single pole at 1 of order m and n >= 4m + 2.
StructureReport detect_structure(const TaylorStream& phi, std::size_t n, double tolerance = kStructureTolerance);

std::string format_report(const StructureReport& r);

// Below this degree relative to the pole order the structured solver hands
// the problem to the dense oracle.
std::size_t structured_min_degree(int pole_order);

// Solves for p_n from the fitted band rows plus the first 2m Gram rows,
// O(n m^2). Throws StructureRefuted if the calibration report does not
// confirm the structure.
OrthoPoly<cd> structured_solve(const TaylorStream& phi, std::size_t n);

// Calibration step exposed so repeated solves can share it.
StructureReport calibrate_structure(const TaylorStream& phi);
OrthoPoly<cd> structured_solve(const TaylorStream& phi, std::size_t n, const StructureReport& calibration);

// max_k |(G c)_k - delta_{kn} / c_n| / max|G c|, with G assembled densely.
double solve_residual(const TaylorStream& phi, const OrthoPoly<cd>& p);

struct BenchRow {
  std::size_t n = 0;
  double dense_seconds = 0.0;
  double structured_seconds = 0.0;
  double dense_residual = 0.0;
  double structured_residual = 0.0;
  // max |c_dense - c_structured|; NaN if the dense solve broke down.
  double max_difference = 0.0;
  bool agree = false;
  std::string dense_status = "ok";
};

std::vector<BenchRow> bench_solvers(const TaylorStream& phi, const std::vector<std::size_t>& sizes);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace hb
