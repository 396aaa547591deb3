#include "ellrook/theta.hpp"

#include <string>

#include "ellrook/errors.hpp"

namespace ellrook {

template <class Real>
void EllipticParams<Real>::validate() const {
  const Complex<Real> zero(0);
  if (a == zero || b == zero || q == zero)
    throw ValidationError("elliptic parameters a, b, q must be nonzero");
  if (!(magnitude(p) < Real(1)))
    throw DomainError("nome must satisfy |p| < 1");
  if (magnitude(p) > Real(max_nome))
    throw DomainError("nome must satisfy |p| <= 0.95");
  if (!(truncation_eps > Real(0)))
    throw ValidationError("truncation_eps must be positive");
  if (max_terms < 1) throw ValidationError("max_terms must be at least 1");
}

template <class Real>
EllipticParams<Real> EllipticParams<Real>::make(Complex<Real> a, Complex<Real> b,
                                                Complex<Real> q, Complex<Real> p) {
  EllipticParams out;
  out.a = a;
  out.b = b;
  out.q = q;
  out.p = p;
  out.validate();
  return out;
}

template <class Real>
Complex<Real> theta(const Complex<Real>& x, const Complex<Real>& p, Real eps,
                    int max_terms) {
  if (x == Complex<Real>(0)) throw DomainError("theta argument must be nonzero");
  const Complex<Real> one(1);
  const Complex<Real> inv_x = one / x;
  Real ax = magnitude(x);
  Real ainv = magnitude(inv_x);
  const Real spread = ax > ainv ? ax : ainv;

  Complex<Real> result = one - x;
  Complex<Real> pj = p;  // p^{j}, starting at j = 1 for the 1/x factor
  result *= one - pj * inv_x;
  if (p == Complex<Real>(0)) return result;

  for (int j = 1; j <= max_terms; ++j) {
    if (magnitude(pj) * spread < eps) return result;
    const Complex<Real> pj1 = pj * p;
    result *= (one - pj * x) * (one - pj1 * inv_x);
    pj = pj1;
  }
  throw ConvergenceError("theta product did not reach truncation within " +
                         std::to_string(max_terms) + " terms");
}

template <class Real>
Complex<Real> shifted_factorial(const Complex<Real>& a0, const Complex<Real>& base,
                                int n, const EllipticParams<Real>& params) {
  const Complex<Real> zero(0);
  if (a0 == zero) throw DomainError("shifted factorial argument must be nonzero");
  Complex<Real> result(1);
  if (n >= 0) {
    Complex<Real> arg = a0;
    for (int k = 0; k < n; ++k) {
      result *= theta(arg, params);
      arg *= base;
    }
    return result;
  }
  // (a0)_n = 1 / prod_{k=0}^{-n-1} theta(a0 q^{n+k})
  Complex<Real> arg = a0 * ipow(base, n);
  for (int k = 0; k < -n; ++k) {
    const Complex<Real> t = theta(arg, params);
    if (t == zero)
      throw SingularError("shifted factorial pole at index " + std::to_string(n + k));
    result *= t;
    arg *= base;
  }
  return Complex<Real>(1) / result;
}

template <class Real>
Complex<Real> shifted_factorial(const Complex<Real>& a0, int n,
                                const EllipticParams<Real>& params) {
  return shifted_factorial(a0, params.q, n, params);
}

#define ELLROOK_INSTANTIATE(R)                                                   \
  template struct EllipticParams<R>;                                             \
  template Complex<R> theta<R>(const Complex<R>&, const Complex<R>&, R, int);    \
  template Complex<R> shifted_factorial<R>(const Complex<R>&, int,               \
                                           const EllipticParams<R>&);            \
  template Complex<R> shifted_factorial<R>(const Complex<R>&, const Complex<R>&, \
                                           int, const EllipticParams<R>&);

ELLROOK_INSTANTIATE(double)
ELLROOK_INSTANTIATE(Quad)

}  // namespace ellrook
