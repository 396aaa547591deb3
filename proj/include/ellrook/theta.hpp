#pragma once

#include "ellrook/scalar.hpp"

namespace ellrook {

template <class Real>
struct EllipticParams {
  Complex<Real> a{1};
  Complex<Real> b{1};
  Complex<Real> q{1};
  Complex<Real> p{0};
  Real truncation_eps = default_truncation_eps<Real>();
  int max_terms = 4096;
  // Denominator thetas with modulus below this raise SingularError.
  Real pole_floor = Real(1e-8);

  static constexpr double max_nome = 0.95;

  // Throws ValidationError when an invariant fails.
  void validate() const;

  static EllipticParams make(Complex<Real> a, Complex<Real> b, Complex<Real> q,
                             Complex<Real> p);

  template <class To>
  EllipticParams<To> convert() const;
};

// Modified Jacobi theta: prod_{j>=0} (1 - p^j x)(1 - p^{j+1}/x).
template <class Real>
Complex<Real> theta(const Complex<Real>& x, const Complex<Real>& p, Real eps,
                    int max_terms);

template <class Real>
Complex<Real> theta(const Complex<Real>& x, const EllipticParams<Real>& params) {
  return theta(x, params.p, params.truncation_eps, params.max_terms);
}

// (a0; q, p)_n for any integer n.
template <class Real>
Complex<Real> shifted_factorial(const Complex<Real>& a0, int n,
                                const EllipticParams<Real>& params);

// Same, with an explicit base (used where the base differs from params.q).
template <class Real>
Complex<Real> shifted_factorial(const Complex<Real>& a0, const Complex<Real>& base,
                                int n, const EllipticParams<Real>& params);

template <class Real>
template <class To>
EllipticParams<To> EllipticParams<Real>::convert() const {
  EllipticParams<To> out;
  out.a = ellrook::convert<To>(a);
  out.b = ellrook::convert<To>(b);
  out.q = ellrook::convert<To>(q);
  out.p = ellrook::convert<To>(p);
  out.max_terms = max_terms;
  out.pole_floor = To(pole_floor);
  return out;
}

}  // namespace ellrook
