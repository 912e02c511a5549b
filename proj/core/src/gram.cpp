#include "hb/gram.hpp"

#include <algorithm>

#include "hb/errors.hpp"

namespace hb {

template <class C>
Matrix<C> GramMatrix<C>::system_matrix() const {
  const std::size_t n = size();
  Matrix<C> g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = entries_(j, i);
  }
  return g;
}

cd monomial_inner(const TaylorStream& phi, std::size_t j, std::size_t k) {
  if (j > k) return std::conj(monomial_inner(phi, k, j));
  const auto c = phi.coefficients<cd>(k + 1);
  cd v = j == k ? cd(1.0, 0.0) : cd(0.0, 0.0);
  for (std::size_t s = 0; s <= j; ++s) v += std::conj(c[s]) * c[k - j + s];
  return v;
}

template <class C>
GramMatrix<C> gram_matrix_as(const TaylorStream& phi, std::size_t n) {
  const std::size_t size = n + 1;
  const auto c = phi.coefficients<C>(size);
  std::vector<C> conj_c(size);
  for (std::size_t s = 0; s < size; ++s) conj_c[s] = num::conjugate(c[s]);

  Matrix<C> m(size, size);
  for (std::size_t delta = 0; delta < size; ++delta) {
    C running(0);
    for (std::size_t j = 0; j + delta < size; ++j) {
      running += conj_c[j] * c[j + delta];
      C v = running;
      if (delta == 0) v += C(1);
      m(j, j + delta) = v;
      m(j + delta, j) = num::conjugate(v);
    }
  }
  // Hermitian diagonal stays exactly real.
  for (std::size_t j = 0; j < size; ++j) m(j, j) = C(m(j, j).real());
  return GramMatrix<C>(phi, std::move(m));
}

template <class C>
C inner_product(const GramMatrix<C>& m, const Polynomial<C>& p, const Polynomial<C>& q) {
  if (p.size() > m.size() || q.size() > m.size()) {
    throw PreconditionViolated("inner_product: polynomial degree exceeds Gram matrix size");
  }
  C total(0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p.coeffs[j] == C(0)) continue;
    C row(0);
    for (std::size_t k = 0; k < q.size(); ++k) row += m(j, k) * num::conjugate(q.coeffs[k]);
    total += p.coeffs[j] * row;
  }
  return total;
}

template class GramMatrix<cd>;
template class GramMatrix<hp_complex>;
template GramMatrix<cd> gram_matrix_as<cd>(const TaylorStream&, std::size_t);
template GramMatrix<hp_complex> gram_matrix_as<hp_complex>(const TaylorStream&, std::size_t);
template cd inner_product<cd>(const GramMatrix<cd>&, const Polynomial<cd>&, const Polynomial<cd>&);
template hp_complex inner_product<hp_complex>(const GramMatrix<hp_complex>&, const Polynomial<hp_complex>&,
                                              const Polynomial<hp_complex>&);

PolyVec toeplitz_conj_apply(const TaylorStream& phi, const PolyVec& p) {
  const std::size_t size = p.size();
  PolyVec out{std::vector<cd>(size, cd(0.0, 0.0))};
  if (size == 0) return out;
  const auto c = phi.coefficients<cd>(size);
  // T z^k = sum_{m <= k} conj(phi_{k-m}) z^m
  for (std::size_t m = 0; m < size; ++m) {
    cd v(0.0, 0.0);
    for (std::size_t k = m; k < size; ++k) v += std::conj(c[k - m]) * p.coeffs[k];
    out.coeffs[m] = v;
  }
  return out;
}

double hb_norm_squared(const TaylorStream& phi, const PolyVec& p) {
  double total = 0.0;
  for (const auto& c : p.coeffs) total += std::norm(c);
  for (const auto& c : toeplitz_conj_apply(phi, p).coeffs) total += std::norm(c);
  return total;
}

double kernel_truncation_check(const CatalogEntry& entry, cd w, const PolyVec& p, std::size_t truncation) {
  if (!(std::abs(w) < 1.0)) throw PreconditionViolated("kernel_truncation_check: need |w| < 1");
  if (truncation + 1 < p.size()) throw PreconditionViolated("kernel_truncation_check: need K >= deg p");
  const std::size_t size = truncation + 1;

  // (1 - conj(b(w)) b(z)) times the geometric series of 1/(1 - conj(w) z).
  const cd bw = entry.b(w);
  auto numer = entry.b.taylor(size);
  for (auto& c : numer) c *= -std::conj(bw);
  numer[0] += 1.0;
  PolyVec kernel{std::vector<cd>(size, cd(0.0, 0.0))};
  const cd ratio = std::conj(w);
  for (std::size_t k = 0; k < size; ++k) {
    cd geometric(1.0, 0.0);
    cd v(0.0, 0.0);
    for (std::size_t i = 0; i <= k; ++i) {
      v += numer[k - i] * geometric;
      geometric *= ratio;
    }
    kernel.coeffs[k] = v;
  }

  const auto m = gram_matrix(entry.phi, truncation);
  PolyVec padded = p;
  padded.coeffs.resize(size, cd(0.0, 0.0));
  return std::abs(inner_product(m, padded, kernel) - p(w));
}

}  // namespace hb
