#pragma once

// Bases known in closed form, and the Fricain-Mashreghi comparison
// polynomials for b = (1 + z)/2.

#include <cstddef>
#include <optional>
#include <utility>

#include "hb/ortho.hpp"

namespace hb {

// phi = A + B/(1 - z).
struct RationalABForm {
  cd A;
  cd B;

  // conj(A) B = -(1 + |A|^2), relative to 1 + |A|^2.
  bool satisfies_theorem(double tolerance = 1e-12) const;

  // Norms of q_0 = 1 and q_n = z^{n-1}(z - 1).
  double norm_q0() const;
  double norm_qn() const;
};

// Only symbols with a single simple pole exactly at 1 qualify; rotate first
// for other poles.
std::optional<RationalABForm> detect_rational_ab(const SmirnovSymbol& phi);

// Throws PreconditionViolated unless form.satisfies_theorem().
OrthoBasis<cd> rational_ab_basis(const RationalABForm& form, std::size_t n);

// Degree-n member of the same family, in any working precision.
template <class C>
OrthoPoly<C> rational_ab_poly(const RationalABForm& form, std::size_t n);

// Basis for b = (1 + z^N)/2, i.e. phi = (1 + z^N)/(1 - z^N).
OrthoBasis<cd> power_basis(int N, std::size_t n);

// q_{Nl+i}(z) = z^i p_l(z^N): a basis for phi(z^N) up to degree
// N * deg(base) + N - 1.
OrthoBasis<cd> compose_basis(const OrthoBasis<cd>& base, int N);

// a_k = F_{2k+1} from the Binet form; a_0 = 1.
double fm_coefficient(std::size_t k);

// Q_0 = 1, Q_n = 1 + (z - 1)(a_0 + a_1 z + ... + a_{n-1} z^{n-1}).
PolyVec fm_polynomial(std::size_t n);

// ||Q_n||_b^2 as 2 + 4 sum_{k<n} a_k^2 ...
double fm_norm_squared_sum(std::size_t n);
// ... and as the evaluated geometric sums.
double fm_norm_squared_closed(std::size_t n);

// ||Q_n||_b; throws NumericalBreakdown if the two evaluations disagree
// beyond 1e-10 relative.
double fm_norm_b(std::size_t n);

// 2 * 5^{1/4} / 5, the limit of ||Q_n||_b / ((3 + sqrt 5)/2)^n.
double fm_asymptotic_constant();

// Monomial pairs count as orthogonal below this modulus.
inline constexpr double kWitnessThreshold = 1e-9;

// Smallest (j, k) with j < k <= bound, ordered by k then j, such that
// |<z^j, z^k>_b| > kWitnessThreshold.
std::optional<std::pair<std::size_t, std::size_t>> monomial_orthogonality_witness(const TaylorStream& phi,
                                                                                   std::size_t bound);

}  // namespace hb
