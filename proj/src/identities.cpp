#include "ellrook/identities.hpp"

#include <array>
#include <cmath>

#include "ellrook/cell_weights.hpp"
#include "ellrook/errors.hpp"
#include "ellrook/rook_numbers.hpp"
#include "harness.hpp"

namespace ellrook {

using detail::adaptive_residual;
using detail::Precision;
using detail::run_sampled;
using detail::run_samples;
using detail::SampleOutcome;

std::string to_string(SpecializationCase c) {
  switch (c) {
    case SpecializationCase::Rook: return "rook";
    case SpecializationCase::File: return "file";
    case SpecializationCase::JAttack: return "jattack";
    case SpecializationCase::GR: return "gr";
    case SpecializationCase::MRook: return "mrook";
    case SpecializationCase::Alpha: return "alpha";
  }
  return "?";
}

SpecializationCase specialization_from_string(const std::string& name) {
  for (auto c : {SpecializationCase::Rook, SpecializationCase::File, SpecializationCase::JAttack,
                 SpecializationCase::GR, SpecializationCase::MRook, SpecializationCase::Alpha})
    if (to_string(c) == name) return c;
  throw ValidationError("unknown specialization '" + name + "'");
}

std::string to_string(StirlingCase c) {
  switch (c) {
    case StirlingCase::Inverse: return "inverse";
    case StirlingCase::Conv2a: return "conv2a";
    case StirlingCase::Conv2b: return "conv2b";
    case StirlingCase::Conv1a: return "conv1a";
    case StirlingCase::Conv1b: return "conv1b";
    case StirlingCase::Generating2: return "generating2";
    case StirlingCase::Generating1: return "generating1";
    case StirlingCase::Board: return "board";
  }
  return "?";
}

StirlingCase stirling_case_from_string(const std::string& name) {
  for (auto c : {StirlingCase::Inverse, StirlingCase::Conv2a, StirlingCase::Conv2b,
                 StirlingCase::Conv1a, StirlingCase::Conv1b, StirlingCase::Generating2,
                 StirlingCase::Generating1, StirlingCase::Board})
    if (to_string(c) == name) return c;
  throw ValidationError("unknown Stirling case '" + name + "'");
}

namespace {

template <class Real>
Real max_abs(std::initializer_list<Complex<Real>> values) {
  Real m(1);
  for (const auto& v : values) {
    Real a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

// Residual of lhs - rhs against the largest of the given term magnitudes,
// so a difference of two large theta products is not judged against its
// own (small) result.
template <class Real>
double scaled_residual(const Complex<Real>& lhs, const Complex<Real>& rhs,
                       std::initializer_list<Complex<Real>> terms) {
  return to_double(Real(abs(lhs - rhs) / max_abs(terms)));
}

struct ThetaPoint {
  std::array<std::complex<double>, 4> xyuv;
  std::complex<double> p;
};

std::pair<ThetaPoint, nlohmann::json> draw_theta_point(ParamSampler& s) {
  ThetaPoint pt;
  for (auto& v : pt.xyuv) v = s.annulus(0.5, 2.0);
  pt.p = s.disk(0.5);
  auto c = [](std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); };
  nlohmann::json j = {{"x", c(pt.xyuv[0])}, {"y", c(pt.xyuv[1])}, {"u", c(pt.xyuv[2])},
                      {"v", c(pt.xyuv[3])}, {"p", c(pt.p)}};
  return {pt, j};
}

template <class Real>
double theta_addition(const ThetaPoint& pt) {
  using V = Complex<Real>;
  const V x = convert<Real>(pt.xyuv[0]), y = convert<Real>(pt.xyuv[1]);
  const V u = convert<Real>(pt.xyuv[2]), v = convert<Real>(pt.xyuv[3]);
  const V p = convert<Real>(pt.p);
  const Real eps = default_truncation_eps<Real>();
  auto th = [&](const V& arg) { return theta(arg, p, eps, 4096); };
  const V t1 = th(x * y) * th(x / y) * th(u * v) * th(u / v);
  const V t2 = th(x * v) * th(x / v) * th(u * y) * th(u / y);
  const V rhs = u / y * th(y * v) * th(y / v) * th(x * u) * th(x / u);
  return scaled_residual<Real>(t1 - t2, rhs, {t1, t2, rhs});
}

template <class Real>
double theta_quasi_period(const ThetaPoint& pt) {
  using V = Complex<Real>;
  const V x = convert<Real>(pt.xyuv[0]), p = convert<Real>(pt.p);
  const Real eps = default_truncation_eps<Real>();
  const V lhs = theta(p * x, p, eps, 4096);
  const V rhs = -theta(x, p, eps, 4096) / x;
  const V inv = theta(V(1) / x, p, eps, 4096);
  const V flip = -theta(x, p, eps, 4096) / x;
  return std::max(relative_residual(lhs, rhs), relative_residual(inv, flip));
}

constexpr int kWeightLo = -4;
constexpr int kWeightHi = 6;

template <class Real, class F>
double over_range(F&& f) {
  double r = 0.0;
  for (int k = kWeightLo; k <= kWeightHi; ++k) r = std::max(r, f(k));
  return r;
}

template <class Real, class F>
double over_pairs(F&& f) {
  double r = 0.0;
  for (int k = kWeightLo; k <= kWeightHi; ++k)
    for (int n = kWeightLo; n <= kWeightHi; ++n) r = std::max(r, f(k, n));
  return r;
}

enum class WeightLaw { Product, Shift, Additive, NumberStep, NumberSplit, NumberSum, NegSum };

template <class Real>
double weight_law(WeightLaw law, const WeightEngine<Real>& raw) {
  using V = Complex<Real>;
  const auto e = raw.with_weight_cache(3 * kWeightLo, 3 * kWeightHi);
  switch (law) {
    case WeightLaw::Product:
      return over_range<Real>([&](int k) {
        double r = relative_residual(e.small_weight(k), e.big_weight(k) / e.big_weight(k - 1));
        if (k >= 1) {
          V prod(1);
          for (int j = 1; j <= k; ++j) prod *= e.small_weight(j);
          r = std::max(r, relative_residual(e.big_weight(k), prod));
        }
        return r;
      });
    case WeightLaw::Shift:
      return over_pairs<Real>([&](int k, int n) {
        return relative_residual(e.small_weight(k + n), e.shifted(2 * k, k).small_weight(n));
      });
    case WeightLaw::Additive:
      return over_pairs<Real>([&](int k, int n) {
        return relative_residual(e.big_weight(k + n),
                                 e.big_weight(k) * e.shifted(2 * k, k).big_weight(n));
      });
    case WeightLaw::NumberStep:
      return over_range<Real>([&](int z) {
        return relative_residual(e.number(z), e.number(z - 1) + e.big_weight(z - 1));
      });
    case WeightLaw::NumberSplit:
      return over_pairs<Real>([&](int y, int z) {
        return relative_residual(
            e.number(z), e.number(y) + e.big_weight(y) * e.shifted(2 * y, y).number(z - y));
      });
    case WeightLaw::NumberSum:
      return over_range<Real>([&](int z) {
        if (z < 1) return 0.0;
        V sum(0);
        for (int j = 0; j < z; ++j) sum += e.big_weight(j);
        return relative_residual(e.number(z), sum);
      });
    case WeightLaw::NegSum:
      return over_range<Real>([&](int z) {
        if (z < 1) return 0.0;
        V sum(0);
        for (int j = 1; j <= z; ++j) sum += e.big_weight(-j);
        return relative_residual(-e.number(-z), sum);
      });
  }
  return 0.0;
}

constexpr int kBinomialMax = 10;

template <class Real>
double binomial_recurrence(const WeightEngine<Real>& e) {
  const auto table = ell_binomial_recurrence_table(e, kBinomialMax);
  double r = 0.0;
  for (int n = 0; n <= kBinomialMax; ++n)
    for (int k = 0; k <= n; ++k)
      r = std::max(r, relative_residual(ell_binomial(e, n, k), table[n][k]));
  return r;
}

template <class Real>
double binomial_paths(const WeightEngine<Real>& e) {
  double r = 0.0;
  for (int n = 0; n <= kBinomialMax; ++n)
    for (int k = 0; k <= n; ++k)
      r = std::max(r, relative_residual(ell_binomial(e, n, k), ell_binomial_paths(e, n, k)));
  return r;
}

// Gaussian binomials from the q-Pascal rule, independent of the engine.
template <class Real>
double gaussian_check(const WeightEngine<Real>& e, const Complex<Real>& q) {
  using V = Complex<Real>;
  std::vector<std::vector<V>> g(kBinomialMax + 1);
  double r = 0.0;
  for (int n = 0; n <= kBinomialMax; ++n) {
    g[n].assign(n + 1, V(0));
    for (int k = 0; k <= n; ++k) {
      if (k == 0 || k == n) {
        g[n][k] = V(1);
      } else {
        g[n][k] = g[n - 1][k - 1] + ipow(q, k) * g[n - 1][k];
      }
      r = std::max(r, relative_residual(ell_binomial(e, n, k), g[n][k]));
      r = std::max(r, relative_residual(gaussian_binomial(n, k, q), g[n][k]));
    }
  }
  return r;
}

// Partial sums of lower parts against -[-Abar_s], and per-column base plus
// z-part sums against [z] - [-sgn b], over all small boards.
template <class Real>
double lower_sums(const WeightEngine<Real>& raw, long long& instances) {
  const auto e = raw.with_weight_cache(-16, 16);
  double r = 0.0;
  for (int n = 1; n <= 4; ++n) {
    int combos = 1;
    for (int i = 0; i < n; ++i) combos *= 4 * 2;
    for (int code = 0; code < combos; ++code) {
      std::vector<int> A(n), sb(n);
      int c = code;
      for (int i = 0; i < n; ++i) {
        A[i] = c % 4;
        c /= 4;
        sb[i] = (c % 2) ? -1 : 1;
        c /= 2;
      }
      SignFunctions signs{std::vector<int>(n, 1), sb};
      const auto board = make_augmented(A, std::vector<int>(n, 0), signs);
      const auto sums = lower_partial_sums(make_extended(board, 0), n, e);
      for (int s = 1; s <= n; ++s)
        r = std::max(r, relative_residual(sums[s - 1], -e.number(-board.signed_partial(s))));
      ++instances;
    }
  }
  return r;
}

template <class Real>
double column_sums(const WeightEngine<Real>& raw, long long& instances) {
  using V = Complex<Real>;
  const auto e = raw.with_weight_cache(-16, 16);
  double r = 0.0;
  for (int b = 0; b <= 3; ++b)
    for (int sgn : {1, -1})
      for (int z = 0; z <= 6; ++z) {
        V sum(0);
        for (const V& w : base_weights(e, b, sgn)) sum += w;
        for (const V& w : zpart_weights(e, z)) sum += w;
        r = std::max(r, relative_residual(sum, e.number(z) - e.number(-sgn * b)));
        ++instances;
      }
  return r;
}

// Upper cells carry exactly the negated lower weight of the same address.
double upper_mirror(const WeightEngine<double>& e, long long& instances) {
  double r = 0.0;
  for (const auto& pat : grid_sign_patterns()) {
    for (int code = 0; code < 64; ++code) {
      const std::vector<int> A = {code % 4, (code / 4) % 4, code / 16};
      const auto board = make_augmented(
          A, {1, 1, 1}, SignFunctions{{pat.sgn.begin(), pat.sgn.begin() + 3},
                                      {pat.sgnbar.begin(), pat.sgnbar.begin() + 3}});
      const auto ext = make_extended(board, 1);
      for (int i = 1; i <= 3; ++i)
        for (const Cell& c : ext.column_cells(i)) {
          if (c.zone != Zone::UpperAug) continue;
          Cell lower = c;
          lower.zone = Zone::LowerAug;
          r = std::max(r, std::abs(cell_weight(ext, c, e) + cell_weight(ext, lower, e)));
          ++instances;
        }
    }
  }
  return r;
}

}  // namespace

std::vector<VerificationReport> verify_theta_battery(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  const double tol = options.tolerance;
  auto run = [&](const std::string& id, auto residual) {
    out.push_back(run_samples(id, "theta", options, 200, draw_theta_point,
                              [&](const ThetaPoint& pt) {
                                SampleOutcome o;
                                o.instances = 1;
                                o.residual = adaptive_residual(
                                    [&](auto prec) {
                                      using Real = typename decltype(prec)::type;
                                      return residual(Precision<Real>{}, pt);
                                    },
                                    tol, o.escalated);
                                return o;
                              }));
  };
  run("theta.addition", [](auto prec, const ThetaPoint& pt) {
    return theta_addition<typename decltype(prec)::type>(pt);
  });
  run("theta.quasi_period", [](auto prec, const ThetaPoint& pt) {
    return theta_quasi_period<typename decltype(prec)::type>(pt);
  });
  return out;
}

std::vector<VerificationReport> verify_weight_battery(const VerifyOptions& options) {
  const std::pair<const char*, WeightLaw> laws[] = {
      {"weights.product", WeightLaw::Product},       {"weights.shift", WeightLaw::Shift},
      {"weights.additive", WeightLaw::Additive},     {"numbers.step", WeightLaw::NumberStep},
      {"numbers.split", WeightLaw::NumberSplit},     {"numbers.sum", WeightLaw::NumberSum},
      {"numbers.negative_sum", WeightLaw::NegSum},
  };
  std::vector<VerificationReport> out;
  for (const auto& [id, law] : laws) {
    out.push_back(run_sampled(id, EngineKind::Elliptic, options, 50, [&](const ParamPoint& pt) {
      SampleOutcome o;
      o.instances = 1;
      o.residual = adaptive_residual(
          [&](auto prec) {
            using Real = typename decltype(prec)::type;
            return weight_law(law, make_engine<Real>(EngineKind::Elliptic, pt));
          },
          options.tolerance, o.escalated);
      return o;
    }));
  }
  return out;
}

std::vector<VerificationReport> verify_binomial_battery(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  const int pairs = (kBinomialMax + 1) * (kBinomialMax + 2) / 2;
  auto sampled = [&](const std::string& id, auto check) {
    out.push_back(run_sampled(id, EngineKind::Elliptic, options, 10, [&](const ParamPoint& pt) {
      SampleOutcome o;
      o.instances = pairs;
      o.residual = adaptive_residual(
          [&](auto prec) {
            using Real = typename decltype(prec)::type;
            return check(make_engine<Real>(EngineKind::Elliptic, pt));
          },
          options.tolerance, o.escalated);
      return o;
    }));
  };
  sampled("binomial.recurrence", [](const auto& e) { return binomial_recurrence(e); });
  sampled("binomial.paths", [](const auto& e) { return binomial_paths(e); });
  out.push_back(run_sampled("binomial.gaussian", EngineKind::Q, options, 5,
                            [&](const ParamPoint& pt) {
                              SampleOutcome o;
                              o.instances = pairs;
                              const auto e = make_engine<double>(EngineKind::Q, pt);
                              o.residual = gaussian_check(e, pt.q);
                              return o;
                            }));
  return out;
}

std::vector<VerificationReport> verify_scheme_battery(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  auto sampled = [&](const std::string& id, auto check) {
    out.push_back(run_sampled(id, EngineKind::Elliptic, options, 20, [&](const ParamPoint& pt) {
      SampleOutcome o;
      o.residual = adaptive_residual(
          [&](auto prec) {
            using Real = typename decltype(prec)::type;
            long long count = 0;
            const double r = check(make_engine<Real>(EngineKind::Elliptic, pt), count);
            o.instances = count;
            return r;
          },
          options.tolerance, o.escalated);
      return o;
    }));
  };
  sampled("scheme.lower_partial_sums",
          [](const auto& e, long long& n) { return lower_sums(e, n); });
  sampled("scheme.column_sums", [](const auto& e, long long& n) { return column_sums(e, n); });
  out.push_back(run_sampled("scheme.upper_mirror", EngineKind::Elliptic, options, 5,
                            [&](const ParamPoint& pt) {
                              SampleOutcome o;
                              o.residual = upper_mirror(
                                  make_engine<double>(EngineKind::Elliptic, pt), o.instances);
                              return o;
                            }));
  return out;
}

namespace {

template <class Real>
double alpha2_residual(int n, int k, const Complex<Real>& a, const Complex<Real>& q) {
  const auto closed = alpha2_closed_form(n, k, a, q);
  const auto rec = alpha2_recursion(n, k, a, q);
  const auto board = r_coefficients(alpha2_board(n), WeightEngine<Real>::aq(a, q));
  return std::max({relative_residual(closed, rec), relative_residual(closed, board[k]),
                   relative_residual(rec, board[k])});
}

template <class Real>
double alpha2_all(int nmax, const Complex<Real>& a, const Complex<Real>& q) {
  const auto table = alpha2_recursion_table(nmax, a, q);
  double r = 0.0;
  for (int n = 1; n <= nmax; ++n) {
    const auto board = r_coefficients(alpha2_board(n), WeightEngine<Real>::aq(a, q));
    for (int k = 0; k <= n; ++k) {
      const auto closed = alpha2_closed_form(n, k, a, q);
      r = std::max({r, relative_residual(closed, table[n][k]),
                    relative_residual(closed, board[k])});
    }
  }
  return r;
}

}  // namespace

VerificationReport verify_alpha2(int n, int k, std::complex<double> a, std::complex<double> q,
                                 double tolerance) {
  if (n < 1 || n > 8) throw SizeError("alpha2 needs 1 <= n <= 8");
  if (k < 0 || k > n) throw ValidationError("alpha2 needs 0 <= k <= n");
  VerificationReport report;
  report.identity_id = "alpha2.three_way";
  report.engine = "aq";
  report.tolerance = tolerance;
  SampleResult s;
  s.point = {{"a", {a.real(), a.imag()}}, {"q", {q.real(), q.imag()}}, {"n", n}, {"k", k}};
  double r = alpha2_residual<double>(n, k, a, q);
  if (!(r < tolerance)) {
    s.escalated = 1;
    r = alpha2_residual<Quad>(n, k, convert<Quad>(a), convert<Quad>(q));
  }
  s.residual = r;
  report.samples.push_back(s);
  report.instances = 1;
  report.finalize();
  return report;
}

VerificationReport verify_alpha2_sampled(int nmax, const VerifyOptions& options) {
  if (nmax < 1 || nmax > 8) throw SizeError("alpha2 needs 1 <= nmax <= 8");
  return run_sampled("alpha2.three_way", EngineKind::AQ, options, options.samples,
                     [&](const ParamPoint& pt) {
                       SampleOutcome o;
                       o.instances = static_cast<long long>(nmax) * (nmax + 3) / 2;
                       o.residual = adaptive_residual(
                           [&](auto prec) {
                             using Real = typename decltype(prec)::type;
                             return alpha2_all<Real>(nmax, convert<Real>(pt.a),
                                                     convert<Real>(pt.q));
                           },
                           options.tolerance, o.escalated);
                       return o;
                     });
}

std::vector<VerificationReport> verify_alpha2_battery(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  VerifyOptions o = options;
  o.samples = 5;
  out.push_back(verify_alpha2_sampled(5, o));
  // The staircase file numbers at alpha = 2 in the plain q case.
  out.push_back(run_sampled("alpha2.staircase", EngineKind::Q, options, 5,
                            [&](const ParamPoint& pt) {
                              SampleOutcome o;
                              double r = 0.0;
                              for (int n = 1; n <= 4; ++n) {
                                std::vector<int> h(n);
                                for (int i = 0; i < n; ++i) h[i] = i;
                                const auto nums = alpha_file_numbers(SkylineBoard(h), 2, pt.q);
                                for (int k = 0; k <= n; ++k) {
                                  r = std::max(r, relative_residual(
                                                      nums[k], staircase_alpha2_number(n, k, pt.q)));
                                  ++o.instances;
                                }
                              }
                              o.residual = r;
                              return o;
                            }));
  return out;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  for (auto battery : {verify_theta_battery, verify_weight_battery, verify_binomial_battery,
                       verify_scheme_battery, verify_main_battery, verify_degeneration_battery,
                       verify_specialization_battery, verify_stirling_battery,
                       verify_alpha2_battery}) {
    auto part = battery(options);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace ellrook
