#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hb/numeric.hpp"

namespace hb {

// Summand coefficient / (1 - conj(pole) z)^order.
struct PoleTerm {
  cd coefficient;
  cd pole;
  int order = 1;
};

inline constexpr double kPoleModulusTolerance = 1e-14;

// Rational Smirnov quotient phi = b/a in partial-fraction form with every
// pole on the unit circle:
//
//   phi(z) = A + sum_t B_t / (1 - conj(zeta_t) z)^{d_t}
//
// The default-constructed symbol is phi = 0, i.e. H(b) = H^2.
class SmirnovSymbol {
 public:
  SmirnovSymbol() = default;
  explicit SmirnovSymbol(cd constant_term, std::vector<PoleTerm> pole_terms = {});

  // A + B/(1-z)
  static SmirnovSymbol simple_pole(cd constant_term, cd coefficient);
  // r0 + r1/(1-z) + ... + rm/(1-z)^m, zero coefficients dropped.
  static SmirnovSymbol pole_at_one(const std::vector<cd>& coefficients);

  cd constant_term() const { return constant_; }
  const std::vector<PoleTerm>& pole_terms() const { return poles_; }
  bool is_constant() const { return poles_.empty(); }

  // Highest order m if every pole sits at z = 1, nullopt otherwise or if
  // there are no poles.
  std::optional<int> order_of_pole_at_one() const;

  // phi_n, summing each pole's binomial series directly.
  cd coefficient(std::size_t n) const;

  // phi(z) for |z| < 1.
  cd evaluate(cd z) const;

  // phi_0 .. phi_{count-1} in the working precision of C.
  template <class C>
  std::vector<C> coefficients(std::size_t count) const;

  friend bool operator==(const SmirnovSymbol&, const SmirnovSymbol&);

 private:
  cd constant_{0.0, 0.0};
  std::vector<PoleTerm> poles_;
};

bool operator==(const PoleTerm&, const PoleTerm&);

std::vector<cd> taylor_coefficients(const SmirnovSymbol& phi, std::size_t count);

// phi(e^{i gamma} z): poles move to zeta e^{-i gamma}.
SmirnovSymbol rotate_symbol(const SmirnovSymbol& phi, double gamma);

// phi(z^N) expanded over the N-th roots of each pole. Simple poles only;
// use TaylorStream::composed for higher orders.
SmirnovSymbol compose_monomial(const SmirnovSymbol& phi, int n);

// Coefficient stream of a symbol after z -> z^stride, plus an optional
// polynomial part. Covers phi(z^N) for any pole order and polynomial
// symbols such as 0.3 z^2 that have no partial-fraction form.
class TaylorStream {
 public:
  TaylorStream() = default;
  TaylorStream(SmirnovSymbol symbol);  // NOLINT: implicit by intent

  static TaylorStream from_polynomial(std::vector<cd> coefficients);

  const SmirnovSymbol& symbol() const { return symbol_; }
  const std::vector<cd>& polynomial() const { return polynomial_; }
  int stride() const { return stride_; }

  // True when the stream is exactly its partial-fraction symbol.
  bool is_plain() const { return stride_ == 1 && polynomial_.empty(); }

  cd coefficient(std::size_t n) const;

  template <class C>
  std::vector<C> coefficients(std::size_t count) const;

  TaylorStream composed(int n) const;
  TaylorStream rotated(double gamma) const;

 private:
  SmirnovSymbol symbol_;
  std::vector<cd> polynomial_;
  int stride_ = 1;
};

// num(z) / den(z) with den(0) != 0.
struct RationalFunction {
  std::vector<cd> numerator;
  std::vector<cd> denominator;

  cd operator()(cd z) const;
  std::vector<cd> taylor(std::size_t count) const;
};

// A Pythagorean pair (b, a) together with its quotient phi = b/a.
struct CatalogEntry {
  std::string name;
  RationalFunction b;
  RationalFunction a;
  SmirnovSymbol phi;
  std::map<std::string, double> parameters;
  // Which closed form applies, empty when only the general machinery does.
  std::string closed_form;
};

CatalogEntry sarason_half();
CatalogEntry power_entry(int n);
CatalogEntry blaschke_entry(double c);
CatalogEntry cauchy_entry();

// sarason-half, power-2, power-3, power-4, blaschke-0.5, cauchy.
std::vector<CatalogEntry> catalog();

// max |a|^2 + |b|^2 - 1 over equispaced points of the circle.
double pythagorean_defect(const CatalogEntry& entry, int samples = 64);
// max |b/a - phi| at the same kind of sample points, pulled inside by radius r.
double quotient_defect(const CatalogEntry& entry, double radius = 0.9, int samples = 64);

}  // namespace hb
