#include "ellrook/weights.hpp"

#include <bit>
#include <initializer_list>

#include "ellrook/errors.hpp"

namespace ellrook {

std::string to_string(EngineKind kind) {
  switch (kind) {
    case EngineKind::Elliptic: return "elliptic";
    case EngineKind::AQ: return "aq";
    case EngineKind::Q: return "q";
    case EngineKind::Classical: return "classical";
  }
  return "unknown";
}

EngineKind engine_kind_from_string(const std::string& name) {
  if (name == "elliptic") return EngineKind::Elliptic;
  if (name == "aq") return EngineKind::AQ;
  if (name == "q") return EngineKind::Q;
  if (name == "classical") return EngineKind::Classical;
  throw ValidationError("unknown engine '" + name + "'");
}

namespace {

template <class Real>
Complex<Real> theta_product(std::initializer_list<Complex<Real>> args,
                            const EllipticParams<Real>& params) {
  Complex<Real> r(1);
  for (const auto& x : args) r *= theta(x, params);
  return r;
}

// Denominator theta product; any factor below the pole floor is singular.
template <class Real>
Complex<Real> theta_denominator(std::initializer_list<Complex<Real>> args,
                                const EllipticParams<Real>& params, const char* what) {
  Complex<Real> r(1);
  for (const auto& x : args) {
    const Complex<Real> t = theta(x, params);
    if (magnitude(t) < params.pole_floor)
      throw SingularError(std::string("near-zero theta in denominator of ") + what);
    r *= t;
  }
  return r;
}

template <class Real>
Complex<Real> checked_divisor(const Complex<Real>& d, const char* what) {
  if (magnitude(d) < Real(1e-8))
    throw SingularError(std::string("near-zero denominator in ") + what);
  return d;
}

template <class Real>
Complex<Real> binomial_int(int n, int k) {
  if (k < 0 || k > n) return Complex<Real>(0);
  Real r(1);
  for (int i = 1; i <= k; ++i) r = r * Real(n - k + i) / Real(i);
  return Complex<Real>(r);
}

}  // namespace

template <class Real>
WeightEngine<Real> WeightEngine<Real>::elliptic(const EllipticParams<Real>& params) {
  params.validate();
  return WeightEngine(Params(params));
}

template <class Real>
WeightEngine<Real> WeightEngine<Real>::aq(Value a, Value q) {
  if (a == Value(0) || q == Value(0))
    throw ValidationError("a;q engine needs nonzero a and q");
  return WeightEngine(Params(AQParams<Real>{a, q}));
}

template <class Real>
WeightEngine<Real> WeightEngine<Real>::q_only(Value q) {
  if (q == Value(0)) throw ValidationError("q engine needs nonzero q");
  return WeightEngine(Params(QParams<Real>{q}));
}

template <class Real>
WeightEngine<Real> WeightEngine<Real>::classical() {
  return WeightEngine(Params(ClassicalParams{}));
}

template <class Real>
EngineKind WeightEngine<Real>::kind() const {
  switch (params_.index()) {
    case 0: return EngineKind::Elliptic;
    case 1: return EngineKind::AQ;
    case 2: return EngineKind::Q;
    default: return EngineKind::Classical;
  }
}

template <class Real>
auto WeightEngine<Real>::compute_big_weight(int k) const -> Value {
  const Value one(1);
  if (const auto* e = std::get_if<EllipticParams<Real>>(&params_)) {
    const Value &a = e->a, &b = e->b, &q = e->q;
    const Value num = theta_product<Real>(
        {a * ipow(q, 2 * k + 1), b * q, b * q * q, a / (q * b), a / b}, *e);
    const Value den = theta_denominator<Real>(
        {a * q, b * ipow(q, k + 1), b * ipow(q, k + 2), a * ipow(q, k - 1) / b,
         a * ipow(q, k) / b},
        *e, "W");
    return num / den * ipow(q, k);
  }
  if (const auto* e = std::get_if<AQParams<Real>>(&params_)) {
    const Value den = checked_divisor(one - e->a * e->q, "W");
    return (one - e->a * ipow(e->q, 1 + 2 * k)) / den * ipow(e->q, -k);
  }
  if (const auto* e = std::get_if<QParams<Real>>(&params_)) return ipow(e->q, k);
  return one;
}

template <class Real>
auto WeightEngine<Real>::big_weight(int k) const -> Value {
  if (cache_) {
    const long idx = static_cast<long>(k) - cache_min_;
    if (idx >= 0 && idx < static_cast<long>(cache_->size())) return (*cache_)[idx];
  }
  return compute_big_weight(k);
}

template <class Real>
auto WeightEngine<Real>::small_weight(int k) const -> Value {
  const Value one(1);
  if (const auto* e = std::get_if<EllipticParams<Real>>(&params_)) {
    const Value &a = e->a, &b = e->b, &q = e->q;
    const Value num = theta_product<Real>(
        {a * ipow(q, 2 * k + 1), b * ipow(q, k), a * ipow(q, k - 2) / b}, *e);
    const Value den = theta_denominator<Real>(
        {a * ipow(q, 2 * k - 1), b * ipow(q, k + 2), a * ipow(q, k) / b}, *e, "w");
    return num / den * q;
  }
  if (const auto* e = std::get_if<AQParams<Real>>(&params_)) {
    const Value den = checked_divisor(one - e->a * ipow(e->q, 2 * k - 1), "w");
    return (one - e->a * ipow(e->q, 2 * k + 1)) / den / e->q;
  }
  if (const auto* e = std::get_if<QParams<Real>>(&params_)) return e->q;
  return one;
}

template <class Real>
auto WeightEngine<Real>::number(int z) const -> Value {
  const Value one(1);
  if (const auto* e = std::get_if<EllipticParams<Real>>(&params_)) {
    const Value &a = e->a, &b = e->b, &q = e->q;
    if (z == 0) return Value(0);
    const Value num =
        theta_product<Real>({ipow(q, z), a * ipow(q, z), b * q * q, a / b}, *e);
    const Value den = theta_denominator<Real>(
        {q, a * q, b * ipow(q, z + 1), a * ipow(q, z - 1) / b}, *e, "[z]");
    return num / den;
  }
  if (const auto* e = std::get_if<AQParams<Real>>(&params_)) {
    if (e->q == one) return Value(Real(z));
    const Value den = checked_divisor((one - e->q) * (one - e->a * e->q), "[z]");
    return (one - ipow(e->q, z)) * (one - e->a * ipow(e->q, z)) / den *
           ipow(e->q, 1 - z);
  }
  if (const auto* e = std::get_if<QParams<Real>>(&params_)) {
    if (e->q != one) checked_divisor(one - e->q, "[z]");
    return q_number(z, e->q);
  }
  return Value(Real(z));
}

template <class Real>
WeightEngine<Real> WeightEngine<Real>::shifted(int a_exp, int b_exp) const {
  if (const auto* e = std::get_if<EllipticParams<Real>>(&params_)) {
    EllipticParams<Real> s = *e;
    s.a = e->a * ipow(e->q, a_exp);
    s.b = e->b * ipow(e->q, b_exp);
    return WeightEngine(Params(s));
  }
  if (const auto* e = std::get_if<AQParams<Real>>(&params_))
    return WeightEngine(Params(AQParams<Real>{e->a * ipow(e->q, a_exp), e->q}));
  return WeightEngine(params_);
}

template <class Real>
WeightEngine<Real> WeightEngine<Real>::with_weight_cache(int kmin, int kmax) const {
  if (kmax < kmin) throw ValidationError("empty weight cache range");
  auto table = std::make_shared<std::vector<Value>>();
  table->reserve(static_cast<size_t>(kmax - kmin + 1));
  for (int k = kmin; k <= kmax; ++k) table->push_back(compute_big_weight(k));
  WeightEngine out(params_);
  out.cache_ = std::move(table);
  out.cache_min_ = kmin;
  return out;
}

template <class Real>
template <class To>
WeightEngine<To> WeightEngine<Real>::convert() const {
  if (const auto* e = std::get_if<EllipticParams<Real>>(&params_))
    return WeightEngine<To>::elliptic(e->template convert<To>());
  if (const auto* e = std::get_if<AQParams<Real>>(&params_))
    return WeightEngine<To>::aq(ellrook::convert<To>(e->a), ellrook::convert<To>(e->q));
  if (const auto* e = std::get_if<QParams<Real>>(&params_))
    return WeightEngine<To>::q_only(ellrook::convert<To>(e->q));
  return WeightEngine<To>::classical();
}

template <class Real>
Complex<Real> ell_binomial(const WeightEngine<Real>& engine, int n, int k) {
  using Value = Complex<Real>;
  if (n < 0) throw ValidationError("binomial needs n >= 0");
  if (k < 0 || k > n) return Value(0);
  const int m = n - k;
  const Value one(1);
  const auto& params = engine.params();
  if (const auto* e = std::get_if<EllipticParams<Real>>(&params)) {
    const Value &a = e->a, &b = e->b, &q = e->q;
    Value num(1), den(1);
    for (const Value& x : {ipow(q, 1 + k), a * ipow(q, 1 + k), b * ipow(q, 1 + k),
                           a * ipow(q, 1 - k) / b})
      num *= shifted_factorial(x, m, *e);
    for (const Value& x : {q, a * q, b * ipow(q, 1 + 2 * k), a * q / b})
      den *= shifted_factorial(x, m, *e);
    if (den == Value(0)) throw SingularError("vanishing binomial denominator");
    return num / den;
  }
  if (const auto* e = std::get_if<AQParams<Real>>(&params)) {
    const Value &a = e->a, &q = e->q;
    if (q == one) return binomial_int<Real>(n, k);
    Value r = ipow(q, -static_cast<long long>(k) * m);
    for (int i = 0; i < m; ++i) {
      r *= (one - ipow(q, 1 + k + i)) / checked_divisor(one - ipow(q, 1 + i), "binomial");
      r *= (one - a * ipow(q, 1 + k + i)) /
           checked_divisor(one - a * ipow(q, 1 + i), "binomial");
    }
    return r;
  }
  if (const auto* e = std::get_if<QParams<Real>>(&params)) {
    const Value& q = e->q;
    if (q == one) return binomial_int<Real>(n, k);
    Value r(1);
    for (int i = 0; i < m; ++i)
      r *= (one - ipow(q, 1 + k + i)) / checked_divisor(one - ipow(q, 1 + i), "binomial");
    return r;
  }
  return binomial_int<Real>(n, k);
}

template <class Real>
std::vector<std::vector<Complex<Real>>> ell_binomial_recurrence_table(
    const WeightEngine<Real>& engine, int nmax) {
  using Value = Complex<Real>;
  if (nmax < 0) throw ValidationError("binomial table needs nmax >= 0");
  std::vector<std::vector<Value>> t(nmax + 1);
  t[0] = {Value(1)};
  for (int n = 0; n < nmax; ++n) {
    t[n + 1].assign(n + 2, Value(0));
    for (int k = 0; k <= n + 1; ++k) {
      Value v = k <= n ? t[n][k] : Value(0);
      if (k >= 1)
        v += t[n][k - 1] * engine.shifted(k - 1, 2 * k - 2).big_weight(n + 1 - k);
      t[n + 1][k] = v;
    }
  }
  return t;
}

int LatticePath::east() const {
  int e = 0;
  for (Step s : steps) e += s == Step::East;
  return e;
}

int LatticePath::north() const { return static_cast<int>(steps.size()) - east(); }

std::vector<LatticePath> lattice_paths(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw ValidationError("lattice paths need 0 <= k <= n");
  if (n > kMaxPathLength) throw SizeError("lattice path enumeration limited to n <= 12");
  std::vector<LatticePath> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    LatticePath path;
    for (int i = 0; i < n; ++i)
      path.steps.push_back((mask >> i) & 1u ? Step::East : Step::North);
    out.push_back(std::move(path));
  }
  return out;
}

template <class Real>
Complex<Real> path_weight(const WeightEngine<Real>& engine, const LatticePath& path) {
  Complex<Real> w(1);
  int s = 0, t = 0;
  for (Step step : path.steps) {
    if (step == Step::North) {
      ++t;
      continue;
    }
    ++s;
    w *= engine.shifted(s - 1, 2 * s - 2).big_weight(t);
  }
  return w;
}

template <class Real>
Complex<Real> ell_binomial_paths(const WeightEngine<Real>& engine, int n, int k) {
  if (k < 0 || k > n) return Complex<Real>(0);
  // step[s-1][t]: weight of the east step (s-1,t) -> (s,t)
  std::vector<std::vector<Complex<Real>>> step(k);
  for (int s = 1; s <= k; ++s)
    for (int t = 0; t <= n - k; ++t)
      step[s - 1].push_back(engine.shifted(s - 1, 2 * s - 2).big_weight(t));
  Complex<Real> total(0);
  for (const LatticePath& path : lattice_paths(n, k)) {
    Complex<Real> w(1);
    int s = 0, t = 0;
    for (Step st : path.steps) {
      if (st == Step::North) {
        ++t;
      } else {
        w *= step[s++][t];
      }
    }
    total += w;
  }
  return total;
}

#define ELLROOK_INSTANTIATE(R)                                                       \
  template class WeightEngine<R>;                                                    \
  template Complex<R> ell_binomial<R>(const WeightEngine<R>&, int, int);             \
  template std::vector<std::vector<Complex<R>>> ell_binomial_recurrence_table<R>(    \
      const WeightEngine<R>&, int);                                                  \
  template Complex<R> path_weight<R>(const WeightEngine<R>&, const LatticePath&);    \
  template Complex<R> ell_binomial_paths<R>(const WeightEngine<R>&, int, int);

ELLROOK_INSTANTIATE(double)
ELLROOK_INSTANTIATE(Quad)

template WeightEngine<Quad> WeightEngine<double>::convert<Quad>() const;
template WeightEngine<double> WeightEngine<double>::convert<double>() const;

}  // namespace ellrook
