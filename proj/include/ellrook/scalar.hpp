#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include <boost/multiprecision/float128.hpp>

namespace ellrook {

// Quad precision is used to re-evaluate instances whose double-precision
// residual is dominated by cancellation.
using Quad = boost::multiprecision::float128;

template <class Real>
using Complex = std::complex<Real>;

template <class Real>
Real default_truncation_eps();

template <>
inline double default_truncation_eps<double>() { return 1e-15; }

template <>
inline Quad default_truncation_eps<Quad>() { return Quad(1e-33); }

template <class Real>
inline Real magnitude(const Complex<Real>& z) {
  using std::abs;
  return abs(z);
}

template <class Real>
inline double to_double(const Real& x) {
  return static_cast<double>(x);
}

template <class To, class From>
inline Complex<To> convert(const Complex<From>& z) {
  return Complex<To>(To(z.real()), To(z.imag()));
}

// Integer power by repeated squaring; negative exponents invert.
template <class Real>
Complex<Real> ipow(Complex<Real> z, long long k) {
  bool invert = k < 0;
  unsigned long long e = invert ? static_cast<unsigned long long>(-k)
                                : static_cast<unsigned long long>(k);
  Complex<Real> result(1);
  while (e) {
    if (e & 1u) result *= z;
    e >>= 1;
    if (e) z *= z;
  }
  return invert ? Complex<Real>(1) / result : result;
}

// [z]_q = (1 - q^z)/(1 - q), with the exact value z at q = 1.
template <class Real>
Complex<Real> q_number(long long z, const Complex<Real>& q) {
  if (q == Complex<Real>(1)) return Complex<Real>(Real(z));
  return (Complex<Real>(1) - ipow(q, z)) / (Complex<Real>(1) - q);
}

// Relative residual |lhs - rhs| / max(|lhs|, |rhs|, 1).
template <class Real>
double relative_residual(const Complex<Real>& lhs, const Complex<Real>& rhs) {
  using std::abs;
  Real scale = abs(lhs);
  Real r = abs(rhs);
  if (r > scale) scale = r;
  if (scale < Real(1)) scale = Real(1);
  return to_double(Real(abs(lhs - rhs) / scale));
}

}  // namespace ellrook
