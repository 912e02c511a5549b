#pragma once

// Small dense and banded kernels, templated on the scalar so the same code
// runs in double and in 128-bit precision.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "hb/errors.hpp"
#include "hb/numeric.hpp"

namespace hb {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class C>
real_t<C> max_abs(const Matrix<C>& m) {
  real_t<C> best(0);
  for (const auto& v : m.data()) best = std::max(best, num::modulus(v));
  return best;
}

template <class C>
std::vector<C> multiply(const Matrix<C>& a, std::span<const C> x) {
  assert(a.cols() == x.size());
  std::vector<C> y(a.rows(), C(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    C s(0);
    auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

// Hermitian positive definite factorization A = L L^H.
template <class C>
class Cholesky {
 public:
  using Real = real_t<C>;

  explicit Cholesky(const Matrix<C>& a) : l_(a.rows(), a.rows()) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
      auto lj = l_.row(j);
      Real s = a(j, j).real();
      for (std::size_t k = 0; k < j; ++k) s -= num::abs2(lj[k]);
      if (!(s > Real(0))) {
        throw DegenerateSystem("Cholesky: non-positive pivot at index " + std::to_string(j));
      }
      using std::sqrt;
      const Real d = sqrt(s);
      lj[j] = C(d, Real(0));
      pivots_.push_back(s);
      for (std::size_t i = j + 1; i < n; ++i) {
        auto li = l_.row(i);
        C v = a(i, j);
        for (std::size_t k = 0; k < j; ++k) v -= li[k] * num::conjugate(lj[k]);
        li[j] = v / d;
      }
    }
  }

  std::size_t size() const { return l_.rows(); }
  const Matrix<C>& lower() const { return l_; }
  // Squared diagonal of L, i.e. the pivots of the LDL^H form.
  const std::vector<Real>& pivots() const { return pivots_; }

  Real pivot_ratio(std::size_t leading) const {
    Real lo = pivots_[0], hi = pivots_[0];
    for (std::size_t i = 1; i < leading; ++i) {
      lo = std::min(lo, pivots_[i]);
      hi = std::max(hi, pivots_[i]);
    }
    return lo / hi;
  }

  // Solves A_m x = b with A_m the leading m x m block (m = b.size()).
  std::vector<C> solve_leading(std::vector<C> b) const {
    const std::size_t m = b.size();
    assert(m <= size());
    for (std::size_t i = 0; i < m; ++i) {
      auto li = l_.row(i);
      C v = b[i];
      for (std::size_t k = 0; k < i; ++k) v -= li[k] * b[k];
      b[i] = v / li[i].real();
    }
    for (std::size_t ii = m; ii-- > 0;) {
      C v = b[ii];
      for (std::size_t k = ii + 1; k < m; ++k) v -= num::conjugate(l_(k, ii)) * b[k];
      b[ii] = v / l_(ii, ii).real();
    }
    return b;
  }

 private:
  Matrix<C> l_;
  std::vector<Real> pivots_;
};

// Gaussian elimination with partial pivoting; consumes its inputs.
template <class C>
std::vector<C> lu_solve(Matrix<C> a, std::vector<C> b) {
  const std::size_t n = a.rows();
  assert(a.cols() == n && b.size() == n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    auto best = num::modulus(a(j, j));
    for (std::size_t i = j + 1; i < n; ++i) {
      auto v = num::modulus(a(i, j));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == real_t<C>(0)) throw SingularBorder("lu_solve: singular matrix");
    if (p != j) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(j, k), a(p, k));
      std::swap(b[j], b[p]);
    }
    for (std::size_t i = j + 1; i < n; ++i) {
      const C m = a(i, j) / a(j, j);
      if (m == C(0)) continue;
      for (std::size_t k = j; k < n; ++k) a(i, k) -= m * a(j, k);
      b[i] -= m * b[j];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    C v = b[i];
    for (std::size_t k = i + 1; k < n; ++k) v -= a(i, k) * b[k];
    b[i] = v / a(i, i);
  }
  return b;
}

// Band matrix with kl sub- and ku super-diagonals, factored in place by
// partially pivoted elimination. Row i stores columns [i-kl, i+ku+kl]; the
// extra kl columns receive pivoting fill-in.
template <class C>
class BandLU {
 public:
  BandLU(std::size_t n, std::size_t kl, std::size_t ku)
      : n_(n), kl_(kl), ku_(ku), width_(2 * kl + ku + 1), a_(n * width_, C(0)),
        mult_(n * kl, C(0)), piv_(n) {}

  std::size_t size() const { return n_; }

  void set(std::size_t i, std::size_t col, const C& v) {
    assert(col + kl_ >= i && col <= i + ku_);
    at(i, col) = v;
  }

  void factor() {
    for (std::size_t j = 0; j < n_; ++j) {
      const std::size_t last = std::min(n_ - 1, j + kl_);
      std::size_t p = j;
      auto best = num::modulus(at(j, j));
      for (std::size_t i = j + 1; i <= last; ++i) {
        auto v = num::modulus(at(i, j));
        if (v > best) {
          best = v;
          p = i;
        }
      }
      if (best == real_t<C>(0)) throw SingularBorder("BandLU: singular band matrix");
      piv_[j] = p;
      const std::size_t right = std::min(n_ - 1, j + kl_ + ku_);
      if (p != j) {
        for (std::size_t col = j; col <= right; ++col) std::swap(at(j, col), at(p, col));
      }
      for (std::size_t i = j + 1; i <= last; ++i) {
        const C m = at(i, j) / at(j, j);
        mult_[j * kl_ + (i - j - 1)] = m;
        at(i, j) = C(0);
        if (m == C(0)) continue;
        for (std::size_t col = j + 1; col <= right; ++col) at(i, col) -= m * at(j, col);
      }
    }
    factored_ = true;
  }

  void solve_in_place(std::span<C> b) const {
    assert(factored_ && b.size() == n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (piv_[j] != j) std::swap(b[j], b[piv_[j]]);
      const std::size_t last = std::min(n_ - 1, j + kl_);
      for (std::size_t i = j + 1; i <= last; ++i) b[i] -= mult_[j * kl_ + (i - j - 1)] * b[j];
    }
    for (std::size_t i = n_; i-- > 0;) {
      const std::size_t right = std::min(n_ - 1, i + kl_ + ku_);
      C v = b[i];
      for (std::size_t col = i + 1; col <= right; ++col) v -= at(i, col) * b[col];
      b[i] = v / at(i, i);
    }
  }

 private:
  C& at(std::size_t i, std::size_t col) { return a_[i * width_ + (col + kl_ - i)]; }
  const C& at(std::size_t i, std::size_t col) const { return a_[i * width_ + (col + kl_ - i)]; }

  std::size_t n_, kl_, ku_, width_;
  std::vector<C> a_;
  std::vector<C> mult_;
  std::vector<std::size_t> piv_;
  bool factored_ = false;
};

}  // namespace hb
