#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace hb {

using cd = std::complex<double>;

// 128-bit mantissa software floating point. Expression templates are off so
// that generic code can use `auto` freely.
using hp_real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using hp_complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

enum class Precision {
  f64,
  hp,
  // double up to degree 32, 128-bit above; escalates on breakdown
  automatic,
};

std::string_view to_string(Precision p);
Precision parse_precision(std::string_view text);

template <class C>
struct scalar_traits;

template <>
struct scalar_traits<cd> {
  using real_type = double;
  static constexpr Precision precision = Precision::f64;
};

template <>
struct scalar_traits<hp_complex> {
  using real_type = hp_real;
  static constexpr Precision precision = Precision::hp;
};

template <class C>
using real_t = typename scalar_traits<C>::real_type;

namespace num {

template <class C>
inline C make(double re, double im = 0.0) {
  return C(re, im);
}

template <class C>
inline C from(cd z) {
  return C(z.real(), z.imag());
}

inline cd to_cd(const cd& z) { return z; }
inline cd to_cd(const hp_complex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline double to_double(double x) { return x; }
inline double to_double(const hp_real& x) { return static_cast<double>(x); }

// Squared modulus, spelled out so both backends agree on the definition.
template <class C>
inline real_t<C> abs2(const C& z) {
  const auto re = z.real();
  const auto im = z.imag();
  return re * re + im * im;
}

template <class C>
inline real_t<C> modulus(const C& z) {
  using std::sqrt;
  return sqrt(abs2(z));
}

template <class C>
inline C conjugate(const C& z) {
  return C(z.real(), -z.imag());
}

// e^{i*theta} evaluated in the working precision of C.
template <class C>
C unimodular(double theta);

template <>
inline cd unimodular<cd>(double theta) {
  return std::polar(1.0, theta);
}

template <>
inline hp_complex unimodular<hp_complex>(double theta) {
  hp_real t(theta);
  return hp_complex(cos(t), sin(t));
}

}  // namespace num
}  // namespace hb
