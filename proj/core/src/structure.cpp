#include "hb/structure.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "hb/errors.hpp"

namespace hb {

Matrix<cd> apply_shift_reduction(Matrix<cd> m, std::size_t d) {
  const std::size_t rows = m.rows();
  if (d > rows) throw PreconditionViolated("apply_shift_reduction: d exceeds n");
  for (std::size_t pass = 0; pass < d; ++pass) {
    for (std::size_t j = 0; j + 1 < rows; ++j) {
      auto r = m.row(j);
      auto next = m.row(j + 1);
      for (std::size_t c = 0; c < m.cols(); ++c) r[c] -= next[c];
    }
  }
  return m;
}

Matrix<cd> apply_shift_reduction_binomial(const Matrix<cd>& m, std::size_t d) {
  const std::size_t rows = m.rows();
  if (d > rows) throw PreconditionViolated("apply_shift_reduction_binomial: d exceeds n");
  std::vector<double> binom(d + 1, 0.0);
  binom[0] = 1.0;
  for (std::size_t i = 1; i <= d; ++i) binom[i] = binom[i - 1] * static_cast<double>(d - i + 1) / static_cast<double>(i);
  Matrix<cd> out(rows, m.cols());
  for (std::size_t j = 0; j < rows; ++j) {
    auto dst = out.row(j);
    // B is nilpotent, so terms with j + i > n drop out.
    for (std::size_t i = 0; i <= d && j + i < rows; ++i) {
      const double w = (i % 2 ? -1.0 : 1.0) * binom[i];
      auto src = m.row(j + i);
      for (std::size_t c = 0; c < m.cols(); ++c) dst[c] += w * src[c];
    }
  }
  return out;
}

cd StructureReport::band_value(std::size_t offset, std::size_t k) const {
  const auto& coeffs = newton[offset];
  cd v = 0.0;
  double binom = 1.0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i > 0) binom *= (static_cast<double>(k) - static_cast<double>(i - 1)) / static_cast<double>(i);
    v += coeffs[i] * binom;
  }
  return v;
}

namespace {

int pole_order_at_one(const TaylorStream& phi) {
  const auto m = phi.symbol().order_of_pole_at_one();
  if (!phi.is_plain() || !m) {
    throw PreconditionViolated("structure: symbol must have a single pole location at z = 1");
  }
  return *m;
}

std::size_t numerical_rank(Matrix<cd> a, double tol) {
  std::size_t rank = 0;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<bool> used_row(rows, false), used_col(cols, false);
  for (;;) {
    double best = tol;
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = 0; i < rows; ++i) {
      if (used_row[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!used_col[j] && std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) return rank;
    ++rank;
    used_row[pi] = used_col[pj] = true;
    for (std::size_t i = 0; i < rows; ++i) {
      if (used_row[i]) continue;
      const cd f = a(i, pj) / a(pi, pj);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(pi, j);
    }
  }
}

// Degree of the sequence by exact finite differences; rounding grows by at
// most a factor 2 per difference order.
int fit_degree(std::vector<cd> seq, double tol, int cap, std::vector<cd>& newton) {
  newton.clear();
  bool all_zero = true;
  for (const auto& v : seq) all_zero = all_zero && std::abs(v) <= tol;
  if (all_zero) return -1;
  double level = tol;
  for (int p = 0; seq.size() >= 2; ++p) {
    newton.push_back(seq[0]);
    std::vector<cd> next(seq.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) next[i] = seq[i + 1] - seq[i];
    level *= 2.0;
    bool vanishes = true;
    for (const auto& v : next) vanishes = vanishes && std::abs(v) <= level;
    if (vanishes) return p;
    seq = std::move(next);
  }
  return cap;
}

}  // namespace

StructureReport detect_structure(const TaylorStream& phi, std::size_t n, double tolerance) {
  const int m = pole_order_at_one(phi);
  const std::size_t d = 2 * static_cast<std::size_t>(m);
  if (n < 4 * static_cast<std::size_t>(m) + 2) {
    throw PreconditionViolated("detect_structure: n must be at least 4m + 2");
  }
  const auto reduced = apply_shift_reduction(gram_matrix(phi, n).system_matrix(), d);
  StructureReport r;
  r.pole_order = m;
  r.reduction_power = d;
  r.size = n + 1;
  r.scale = max_abs(reduced);
  const double tol = tolerance * r.scale;

  auto outside_band = [&](std::size_t k) {
    double worst = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j < k || j > k + d) worst = std::max(worst, std::abs(reduced(k, j)));
    }
    return worst;
  };

  std::size_t trailing = 0;
  while (trailing <= n && outside_band(n - trailing) > tol) ++trailing;
  r.low_rank_rows = trailing;
  // Rows 0..last carry the band; the band must also fit inside the matrix.
  const std::size_t last = std::min(n - d, n - std::min(trailing, n));

  std::size_t widest = 0;
  for (std::size_t k = 0; k <= last; ++k) {
    for (std::size_t j = 0; j <= n; ++j) {
      const double v = std::abs(reduced(k, j));
      if (v <= tol) continue;
      if (j < k) {
        r.lower_triangle_clear = false;
      } else {
        widest = std::max(widest, j - k + 1);
      }
    }
    r.residual = std::max(r.residual, outside_band(k));
  }
  r.band_width = r.lower_triangle_clear ? widest : 0;

  const int cap = static_cast<int>(d) + 1;
  r.diagonal_degrees.assign(d + 1, -1);
  r.newton.assign(d + 1, {});
  for (std::size_t o = 0; o <= d; ++o) {
    std::vector<cd> seq;
    for (std::size_t k = 0; k <= last; ++k) seq.push_back(reduced(k, k + o));
    r.diagonal_degrees[o] = fit_degree(seq, tol, cap, r.newton[o]);
    if (r.diagonal_degrees[o] < 0) {
      r.newton[o].clear();
    } else if (r.diagonal_degrees[o] < cap) {
      r.newton[o].resize(static_cast<std::size_t>(r.diagonal_degrees[o]) + 1);
    }
    for (std::size_t k = 0; k <= last; ++k) {
      r.fit_residual = std::max(r.fit_residual, std::abs(seq[k] - r.band_value(o, k)));
    }
  }

  // N = reduced - T with T the fitted band extended to every row (clipped).
  if (trailing > 0) {
    Matrix<cd> tail(trailing, n + 1);
    for (std::size_t i = 0; i < trailing; ++i) {
      const std::size_t k = n + 1 - trailing + i;
      for (std::size_t j = 0; j <= n; ++j) {
        cd v = reduced(k, j);
        if (j >= k && j <= k + d) v -= r.band_value(j - k, k);
        tail(i, j) = v;
      }
    }
    r.low_rank_rank = numerical_rank(std::move(tail), tol);
  }

  const int degree_cap = 2 * (m - 1);
  bool degrees_ok = true;
  for (int deg : r.diagonal_degrees) degrees_ok = degrees_ok && deg <= degree_cap;
  r.confirmed = r.lower_triangle_clear && r.band_width <= d + 1 && r.low_rank_rows <= d + 1 && degrees_ok &&
                std::max(r.residual, r.fit_residual) <= 1e-9 * r.scale;
  return r;
}

std::string format_report(const StructureReport& r) {
  std::ostringstream out;
  out << std::setprecision(6);
  out << "pole order            " << r.pole_order << "\n"
      << "reduction power       " << r.reduction_power << "\n"
      << "matrix size           " << r.size << "\n"
      << "band width            " << r.band_width << (r.lower_triangle_clear ? "" : " (lower triangle not clear)")
      << "\n"
      << "trailing rows         " << r.low_rank_rows << "\n"
      << "trailing block rank   " << r.low_rank_rank << "\n"
      << "diagonal degrees     ";
  for (int deg : r.diagonal_degrees) out << ' ' << deg;
  out << "\n"
      << "residual              " << r.residual << "\n"
      << "fit residual          " << r.fit_residual << "\n"
      << "scale                 " << r.scale << "\n"
      << "confirmed             " << (r.confirmed ? "yes" : "no") << "\n";
  return out.str();
}

std::size_t structured_min_degree(int pole_order) { return 4 * static_cast<std::size_t>(pole_order) + 2; }

StructureReport calibrate_structure(const TaylorStream& phi) {
  const int m = pole_order_at_one(phi);
  return detect_structure(phi, 4 * static_cast<std::size_t>(m) + 8);
}

OrthoPoly<cd> structured_solve(const TaylorStream& phi, std::size_t n) {
  return structured_solve(phi, n, calibrate_structure(phi));
}

OrthoPoly<cd> structured_solve(const TaylorStream& phi, std::size_t n, const StructureReport& cal) {
  if (!cal.confirmed) throw StructureRefuted("structured_solve: calibration does not confirm the band structure\n" +
                                             format_report(cal));
  const int m = cal.pole_order;
  if (n < structured_min_degree(m)) return orthopoly_as<cd>(phi, n);

  const std::size_t half = static_cast<std::size_t>(m);
  const std::size_t d = 2 * half;
  const std::size_t size = n + 1;

  // Band rows k = 0..n-d of the reduced system sit at k + m, so the band
  // is centred; the 2m free positions take identity rows and are corrected
  // below to the first 2m Gram rows.
  BandLU<cd> band(size, half, half);
  for (std::size_t k = 0; k + d <= n; ++k) {
    for (std::size_t o = 0; o <= d; ++o) band.set(k + half, k + o, cal.band_value(o, k));
  }
  std::vector<std::size_t> free_rows;
  for (std::size_t p = 0; p < half; ++p) free_rows.push_back(p);
  for (std::size_t p = n - half + 1; p <= n; ++p) free_rows.push_back(p);
  for (std::size_t p : free_rows) band.set(p, p, 1.0);
  band.factor();

  // G_{r,j} = <z^j, z^r>_b for the first d rows.
  const auto phis = phi.coefficients<cd>(size + d);
  Matrix<cd> w(d, size);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t j = 0; j < size; ++j) {
      cd s = (j == r) ? 1.0 : 0.0;
      if (j < r) {
        for (std::size_t t = 0; t <= j; ++t) s += std::conj(phis[t]) * phis[r - j + t];
      } else {
        for (std::size_t t = 0; t <= r; ++t) s += phis[t] * std::conj(phis[j - r + t]);
      }
      w(r, j) = s;
    }
    w(r, free_rows[r]) -= 1.0;
  }

  std::vector<cd> x(size, 0.0);
  x[n - d + half] = (d % 2 == 0) ? 1.0 : -1.0;
  band.solve_in_place(x);
  Matrix<cd> z(d, size);  // rows are C^{-1} e_p
  for (std::size_t i = 0; i < d; ++i) {
    auto col = z.row(i);
    col[free_rows[i]] = 1.0;
    band.solve_in_place(col);
  }
  Matrix<cd> cap(d, d);
  std::vector<cd> rhs(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < size; ++j) rhs[i] += w(i, j) * x[j];
    for (std::size_t c = 0; c < d; ++c) {
      cd s = (i == c) ? 1.0 : 0.0;
      for (std::size_t j = 0; j < size; ++j) s += w(i, j) * z(c, j);
      cap(i, c) = s;
    }
  }
  const auto alpha = lu_solve(std::move(cap), std::move(rhs));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t j = 0; j < size; ++j) x[j] -= z(c, j) * alpha[c];
  }
  return normalize_solution(std::move(x), 1e-10);
}

double solve_residual(const TaylorStream& phi, const OrthoPoly<cd>& p) {
  const auto g = gram_matrix(phi, p.degree).system_matrix();
  auto r = multiply<cd>(g, p.coefficients.coeffs);
  double top = 0.0;
  for (const auto& v : r) top = std::max(top, std::abs(v));
  r[p.degree] -= 1.0 / p.leading;
  double worst = 0.0;
  for (const auto& v : r) worst = std::max(worst, std::abs(v));
  return top > 0.0 ? worst / top : worst;
}

std::vector<BenchRow> bench_solvers(const TaylorStream& phi, const std::vector<std::size_t>& sizes) {
  using clock = std::chrono::steady_clock;
  const auto cal = calibrate_structure(phi);
  std::vector<BenchRow> rows;
  for (std::size_t n : sizes) {
    BenchRow row;
    row.n = n;
    auto t0 = clock::now();
    const auto fast = structured_solve(phi, n, cal);
    row.structured_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    row.structured_residual = solve_residual(phi, fast);
    try {
      t0 = clock::now();
      const auto dense = orthopoly_as<cd>(phi, n);
      row.dense_seconds = std::chrono::duration<double>(clock::now() - t0).count();
      row.dense_residual = solve_residual(phi, dense);
      double diff = 0.0;
      for (std::size_t k = 0; k <= n; ++k) {
        diff = std::max(diff, std::abs(dense.coefficients.coeffs[k] - fast.coefficients.coeffs[k]));
      }
      row.max_difference = diff;
      row.agree = diff <= 1e-7;
    } catch (const NumericalBreakdown& e) {
      row.dense_status = "breakdown";
      row.dense_seconds = row.dense_residual = std::numeric_limits<double>::quiet_NaN();
      row.max_difference = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(row);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,dense_seconds,structured_seconds,speedup,dense_residual,structured_residual,max_difference,agree,"
         "dense_status\n";
  const auto old = out.precision(6);
  for (const auto& r : rows) {
    out << r.n << ',' << r.dense_seconds << ',' << r.structured_seconds << ','
        << r.dense_seconds / r.structured_seconds << ',' << r.dense_residual << ',' << r.structured_residual << ','
        << r.max_difference << ',' << (r.agree ? "true" : "false") << ',' << r.dense_status << '\n';
  }
  out.precision(old);
}

}  // namespace hb
