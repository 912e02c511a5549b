#include "hb/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hb/errors.hpp"

namespace hb {

namespace {

bool same_pole(cd a, cd b) { return std::abs(a - b) <= kPoleModulusTolerance; }

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

SmirnovSymbol::SmirnovSymbol(cd constant_term, std::vector<PoleTerm> pole_terms)
    : constant_(constant_term), poles_(std::move(pole_terms)) {
  for (std::size_t i = 0; i < poles_.size(); ++i) {
    const auto& t = poles_[i];
    if (t.order < 1) throw InvalidSymbol("pole order must be a positive integer");
    if (t.coefficient == cd(0.0, 0.0)) throw InvalidSymbol("pole coefficient must be nonzero");
    if (std::abs(std::abs(t.pole) - 1.0) > kPoleModulusTolerance) {
      throw InvalidSymbol("pole " + std::to_string(t.pole.real()) + "+" +
                          std::to_string(t.pole.imag()) + "i is not on the unit circle");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (poles_[j].order == t.order && same_pole(poles_[j].pole, t.pole)) {
        throw InvalidSymbol("duplicate (pole, order) pair");
      }
    }
  }
}

SmirnovSymbol SmirnovSymbol::simple_pole(cd constant_term, cd coefficient) {
  return SmirnovSymbol(constant_term, {PoleTerm{coefficient, cd(1.0, 0.0), 1}});
}

SmirnovSymbol SmirnovSymbol::pole_at_one(const std::vector<cd>& coefficients) {
  std::vector<PoleTerm> terms;
  for (std::size_t d = 1; d < coefficients.size(); ++d) {
    if (coefficients[d] != cd(0.0, 0.0)) {
      terms.push_back({coefficients[d], cd(1.0, 0.0), static_cast<int>(d)});
    }
  }
  return SmirnovSymbol(coefficients.empty() ? cd(0.0, 0.0) : coefficients[0], std::move(terms));
}

std::optional<int> SmirnovSymbol::order_of_pole_at_one() const {
  if (poles_.empty()) return std::nullopt;
  int m = 0;
  for (const auto& t : poles_) {
    if (!same_pole(t.pole, cd(1.0, 0.0))) return std::nullopt;
    m = std::max(m, t.order);
  }
  return m;
}

cd SmirnovSymbol::coefficient(std::size_t n) const {
  cd v = n == 0 ? constant_ : cd(0.0, 0.0);
  for (const auto& t : poles_) {
    const cd power = std::pow(std::conj(t.pole), static_cast<double>(n));
    v += t.coefficient * binomial(n + t.order - 1, t.order - 1) * power;
  }
  return v;
}

cd SmirnovSymbol::evaluate(cd z) const {
  cd v = constant_;
  for (const auto& t : poles_) v += t.coefficient / std::pow(1.0 - std::conj(t.pole) * z, t.order);
  return v;
}

template <class C>
std::vector<C> SmirnovSymbol::coefficients(std::size_t count) const {
  std::vector<C> out(count, C(0));
  if (count == 0) return out;
  out[0] = num::from<C>(constant_);
  using R = real_t<C>;
  for (const auto& t : poles_) {
    const C b = num::from<C>(t.coefficient);
    const C step = num::conjugate(num::from<C>(t.pole));
    C power(1);
    R binom(1);  // C(n + d - 1, d - 1)
    for (std::size_t n = 0; n < count; ++n) {
      if (n > 0) {
        power *= step;
        binom = binom * R(n + t.order - 1) / R(n);
      }
      out[n] += b * C(binom) * power;
    }
  }
  return out;
}

template std::vector<cd> SmirnovSymbol::coefficients<cd>(std::size_t) const;
template std::vector<hp_complex> SmirnovSymbol::coefficients<hp_complex>(std::size_t) const;

bool operator==(const PoleTerm& a, const PoleTerm& b) {
  return a.coefficient == b.coefficient && a.pole == b.pole && a.order == b.order;
}

bool operator==(const SmirnovSymbol& a, const SmirnovSymbol& b) {
  return a.constant_ == b.constant_ && a.poles_ == b.poles_;
}

std::vector<cd> taylor_coefficients(const SmirnovSymbol& phi, std::size_t count) {
  if (count < 1) throw PreconditionViolated("taylor_coefficients: count must be at least 1");
  return phi.coefficients<cd>(count);
}

SmirnovSymbol rotate_symbol(const SmirnovSymbol& phi, double gamma) {
  if (gamma == 0.0) return phi;
  const cd turn = std::polar(1.0, -gamma);
  std::vector<PoleTerm> terms = phi.pole_terms();
  for (auto& t : terms) {
    t.pole *= turn;
    t.pole /= std::abs(t.pole);
  }
  return SmirnovSymbol(phi.constant_term(), std::move(terms));
}

SmirnovSymbol compose_monomial(const SmirnovSymbol& phi, int n) {
  if (n < 1) throw PreconditionViolated("compose_monomial: N must be positive");
  if (n == 1) return phi;
  std::vector<PoleTerm> terms;
  for (const auto& t : phi.pole_terms()) {
    if (t.order != 1) {
      throw PreconditionViolated(
          "compose_monomial: only simple poles have a partial-fraction expansion here; "
          "use TaylorStream::composed");
    }
    // 1/(1 - conj(zeta) z^N) = (1/N) sum_{w^N = zeta} 1/(1 - conj(w) z)
    const double theta = std::arg(t.pole);
    for (int j = 0; j < n; ++j) {
      const cd root = std::polar(1.0, (theta + 2.0 * std::numbers::pi * j) / n);
      terms.push_back({t.coefficient / static_cast<double>(n), j == 0 && theta == 0.0 ? cd(1.0, 0.0) : root, 1});
    }
  }
  return SmirnovSymbol(phi.constant_term(), std::move(terms));
}

// TaylorStream --------------------------------------------------------------

TaylorStream::TaylorStream(SmirnovSymbol symbol) : symbol_(std::move(symbol)) {}

TaylorStream TaylorStream::from_polynomial(std::vector<cd> coefficients) {
  TaylorStream s;
  s.polynomial_ = std::move(coefficients);
  return s;
}

cd TaylorStream::coefficient(std::size_t n) const {
  cd v(0.0, 0.0);
  if (n % static_cast<std::size_t>(stride_) == 0) v = symbol_.coefficient(n / stride_);
  if (n < polynomial_.size()) v += polynomial_[n];
  return v;
}

template <class C>
std::vector<C> TaylorStream::coefficients(std::size_t count) const {
  const auto s = static_cast<std::size_t>(stride_);
  std::vector<C> out(count, C(0));
  if (s == 1) {
    out = symbol_.coefficients<C>(count);
  } else {
    const auto base = symbol_.coefficients<C>((count + s - 1) / s);
    for (std::size_t k = 0; k < base.size(); ++k) out[k * s] = base[k];
  }
  for (std::size_t n = 0; n < std::min(count, polynomial_.size()); ++n) out[n] += num::from<C>(polynomial_[n]);
  return out;
}

template std::vector<cd> TaylorStream::coefficients<cd>(std::size_t) const;
template std::vector<hp_complex> TaylorStream::coefficients<hp_complex>(std::size_t) const;

TaylorStream TaylorStream::composed(int n) const {
  if (n < 1) throw PreconditionViolated("TaylorStream::composed: N must be positive");
  TaylorStream out;
  out.symbol_ = symbol_;
  out.stride_ = stride_ * n;
  if (!polynomial_.empty()) {
    out.polynomial_.assign((polynomial_.size() - 1) * n + 1, cd(0.0, 0.0));
    for (std::size_t k = 0; k < polynomial_.size(); ++k) out.polynomial_[k * n] = polynomial_[k];
  }
  return out;
}

TaylorStream TaylorStream::rotated(double gamma) const {
  TaylorStream out;
  out.symbol_ = rotate_symbol(symbol_, gamma * stride_);
  out.stride_ = stride_;
  out.polynomial_ = polynomial_;
  for (std::size_t k = 0; k < out.polynomial_.size(); ++k) {
    out.polynomial_[k] *= std::polar(1.0, gamma * static_cast<double>(k));
  }
  return out;
}

// Rational functions and the catalog -----------------------------------------

namespace {

cd horner(const std::vector<cd>& p, cd z) {
  cd v(0.0, 0.0);
  for (std::size_t k = p.size(); k-- > 0;) v = v * z + p[k];
  return v;
}

std::vector<cd> monomial_pair(cd c0, cd cn, int n) {
  std::vector<cd> p(n + 1, cd(0.0, 0.0));
  p[0] = c0;
  p[n] += cn;
  return p;
}

}  // namespace

cd RationalFunction::operator()(cd z) const { return horner(numerator, z) / horner(denominator, z); }

std::vector<cd> RationalFunction::taylor(std::size_t count) const {
  if (denominator.empty() || denominator[0] == cd(0.0, 0.0)) {
    throw InvalidSymbol("RationalFunction: denominator must not vanish at 0");
  }
  std::vector<cd> t(count, cd(0.0, 0.0));
  for (std::size_t k = 0; k < count; ++k) {
    cd v = k < numerator.size() ? numerator[k] : cd(0.0, 0.0);
    for (std::size_t i = 1; i <= k && i < denominator.size(); ++i) v -= denominator[i] * t[k - i];
    t[k] = v / denominator[0];
  }
  return t;
}

CatalogEntry sarason_half() {
  CatalogEntry e;
  e.name = "sarason-half";
  e.b = {{0.5, 0.5}, {1.0}};
  e.a = {{0.5, -0.5}, {1.0}};
  e.phi = SmirnovSymbol::simple_pole(-1.0, 2.0);
  e.closed_form = "rational-ab";
  return e;
}

CatalogEntry power_entry(int n) {
  if (n < 1) throw PreconditionViolated("power_entry: N must be positive");
  CatalogEntry e;
  e.name = "power-" + std::to_string(n);
  e.b = {monomial_pair(0.5, 0.5, n), {1.0}};
  e.a = {monomial_pair(0.5, -0.5, n), {1.0}};
  e.phi = compose_monomial(SmirnovSymbol::simple_pole(-1.0, 2.0), n);
  e.parameters["N"] = n;
  e.closed_form = "power-basis";
  return e;
}

CatalogEntry blaschke_entry(double c) {
  if (!(std::abs(c) < 1.0)) throw PreconditionViolated("blaschke_entry: need |c| < 1");
  CatalogEntry e;
  e.name = "blaschke-c";
  // b = (1 + (z-c)/(1-cz))/2, a = (1 - (z-c)/(1-cz))/2
  e.b = {{0.5 * (1.0 - c), 0.5 * (1.0 - c)}, {1.0, -c}};
  e.a = {{0.5 * (1.0 + c), -0.5 * (1.0 + c)}, {1.0, -c}};
  const double k = (1.0 - c) / (1.0 + c);
  e.phi = SmirnovSymbol::simple_pole(-k, 2.0 * k);
  e.parameters["c"] = c;
  e.closed_form = c == 0.0 ? "rational-ab" : "recurrence";
  return e;
}

CatalogEntry cauchy_entry() {
  // phi = 1/(1-z). With r = (3 - sqrt 5)/2 the root of z^2 - 3z + 1 inside
  // the disc, a = sqrt(r)(1-z)/(1-rz) is outer, a(0) > 0, and
  // |a|^2 (1 + |1-z|^{-2}) = 1 on the circle.
  const double r = (3.0 - std::sqrt(5.0)) / 2.0;
  const double s = std::sqrt(r);
  CatalogEntry e;
  e.name = "cauchy";
  e.b = {{s}, {1.0, -r}};
  e.a = {{s, -s}, {1.0, -r}};
  e.phi = SmirnovSymbol::simple_pole(0.0, 1.0);
  e.closed_form = "recurrence";
  return e;
}

std::vector<CatalogEntry> catalog() {
  return {sarason_half(), power_entry(2), power_entry(3), power_entry(4), blaschke_entry(0.5), cauchy_entry()};
}

double pythagorean_defect(const CatalogEntry& entry, int samples) {
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const cd z = std::polar(1.0, 2.0 * std::numbers::pi * j / samples);
    const cd bz = horner(entry.b.numerator, z);
    const cd az = horner(entry.a.numerator, z);
    const cd bd = horner(entry.b.denominator, z);
    const cd ad = horner(entry.a.denominator, z);
    // |a|^2 + |b|^2 with denominators cleared; z = 1 is a removable point.
    const double lhs = std::norm(bz) * std::norm(ad) + std::norm(az) * std::norm(bd);
    const double rhs = std::norm(bd) * std::norm(ad);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(rhs, 1e-300));
  }
  return worst;
}

double quotient_defect(const CatalogEntry& entry, double radius, int samples) {
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const cd z = std::polar(radius, 2.0 * std::numbers::pi * j / samples);
    const cd q = entry.b(z) / entry.a(z);
    worst = std::max(worst, std::abs(q - entry.phi.evaluate(z)) / (1.0 + std::abs(q)));
  }
  return worst;
}

std::string_view to_string(Precision p) {
  switch (p) {
    case Precision::f64: return "f64";
    case Precision::hp: return "hp";
    case Precision::automatic: return "auto";
  }
  return "?";
}

Precision parse_precision(std::string_view text) {
  if (text == "f64") return Precision::f64;
  if (text == "hp") return Precision::hp;
  if (text == "auto") return Precision::automatic;
  throw ParseError("unknown precision '" + std::string(text) + "' (expected f64, hp or auto)");
}

}  // namespace hb
