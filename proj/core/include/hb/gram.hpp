#pragma once

// H(b) inner products of polynomials.
//
// Convention: <f, g>_b is linear in f and conjugate-linear in g, so for
// j <= k
//
//   <z^j, z^k>_b = delta_{jk} + sum_{s=0}^{j} conj(phi_s) phi_{k-j+s},
//
// and the j > k entries follow by Hermitian symmetry.

#include <cstddef>
#include <vector>

#include "hb/linalg.hpp"
#include "hb/symbol.hpp"

namespace hb {

// Coefficient vector; index = power of z.
template <class C>
struct Polynomial {
  std::vector<C> coeffs;

  std::size_t size() const { return coeffs.size(); }
  // Index of the last nonzero coefficient, 0 for the zero polynomial.
  std::size_t degree() const {
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      if (coeffs[k] != C(0)) return k;
    }
    return 0;
  }
  C operator()(const C& z) const {
    C v(0);
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
    return v;
  }
};

using PolyVec = Polynomial<cd>;

template <class C>
Polynomial<cd> to_cd(const Polynomial<C>& p) {
  Polynomial<cd> out;
  out.coeffs.reserve(p.size());
  for (const auto& c : p.coeffs) out.coeffs.push_back(num::to_cd(c));
  return out;
}

// M_{jk} = <z^j, z^k>_b for j, k = 0..n.
template <class C>
class GramMatrix {
 public:
  GramMatrix(TaylorStream symbol, Matrix<C> entries) : symbol_(std::move(symbol)), entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.rows(); }
  const C& operator()(std::size_t j, std::size_t k) const { return entries_(j, k); }
  const Matrix<C>& entries() const { return entries_; }
  const TaylorStream& symbol() const { return symbol_; }

  // Rows are the orthogonality conditions: (G c)_k = <sum_j c_j z^j, z^k>_b,
  // so G = M^T = conj(M).
  Matrix<C> system_matrix() const;

 private:
  TaylorStream symbol_;
  Matrix<C> entries_;
};

cd monomial_inner(const TaylorStream& phi, std::size_t j, std::size_t k);

// Assembled along diagonals with running prefix sums: O(n^2) work, fixed
// summation order, so results do not depend on how work is scheduled.
template <class C>
GramMatrix<C> gram_matrix_as(const TaylorStream& phi, std::size_t n);

inline GramMatrix<cd> gram_matrix(const TaylorStream& phi, std::size_t n) { return gram_matrix_as<cd>(phi, n); }

// <p, q>_b = sum_{j,k} p_j conj(q_k) M_{jk}; both must fit in the matrix.
template <class C>
C inner_product(const GramMatrix<C>& m, const Polynomial<C>& p, const Polynomial<C>& q);

template <class C>
real_t<C> quadratic_form(const GramMatrix<C>& m, const Polynomial<C>& p) {
  return inner_product(m, p, p).real();
}

// T_{conj phi} p; the degree never increases.
PolyVec toeplitz_conj_apply(const TaylorStream& phi, const PolyVec& p);

// ||p||_2^2 + ||T_{conj phi} p||_2^2
double hb_norm_squared(const TaylorStream& phi, const PolyVec& p);

// |<p, k_w^{(K)}>_b - p(w)| where k_w^{(K)} is the degree-K Taylor
// truncation of the reproducing kernel (1 - conj(b(w)) b(z)) / (1 - conj(w) z).
double kernel_truncation_check(const CatalogEntry& entry, cd w, const PolyVec& p, std::size_t truncation);

}  // namespace hb
