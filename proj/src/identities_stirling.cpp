#include <algorithm>
#include <map>

#include "ellrook/errors.hpp"
#include "ellrook/identities.hpp"
#include "ellrook/rook_numbers.hpp"
#include "harness.hpp"

namespace ellrook {

using detail::adaptive_residual;
using detail::run_sampled;
using detail::SampleOutcome;

namespace {

long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Tables for the base engine and, on demand, for engines shifted by
// (a q^{2i}, b q^i).
template <class Real>
class StirlingTables {
 public:
  StirlingTables(const WeightEngine<Real>& e, int nmax, int I, int J)
      : engine_(e), nmax_(nmax), I_(I), J_(J) {}

  const CoefficientTable<Real>& second(int shift = 0) {
    return get(second_, shift, [&](const WeightEngine<Real>& e) {
      return stirling2_table(nmax_, I_, J_, e);
    });
  }
  const CoefficientTable<Real>& first(int shift = 0) {
    return get(first_, shift,
               [&](const WeightEngine<Real>& e) { return stirling1_table(nmax_, I_, J_, e); });
  }
  const CoefficientTable<Real>& unsigned_first(int shift = 0) {
    return get(unsigned_, shift, [&](const WeightEngine<Real>& e) {
      return unsigned_stirling1_table(nmax_, I_, J_, e);
    });
  }

 private:
  template <class Make>
  const CoefficientTable<Real>& get(std::map<int, CoefficientTable<Real>>& cache, int shift,
                                    Make&& make) {
    auto it = cache.find(shift);
    if (it == cache.end())
      it = cache.emplace(shift, make(shift == 0 ? engine_ : engine_.shifted(2 * shift, shift)))
               .first;
    return it->second;
  }

  WeightEngine<Real> engine_;
  int nmax_, I_, J_;
  std::map<int, CoefficientTable<Real>> second_, first_, unsigned_;
};

template <class Real>
double stirling_residual(StirlingCase c, int size, int I, int J, const WeightEngine<Real>& e) {
  using V = Complex<Real>;
  StirlingTables<Real> t(e, size + 1, I, J);
  double worst = 0.0;
  auto note = [&](const V& lhs, const V& rhs) {
    worst = std::max(worst, relative_residual(lhs, rhs));
  };
  switch (c) {
    case StirlingCase::Inverse: {
      const auto& S = t.second();
      const auto& s = t.first();
      for (int n = 0; n <= size; ++n)
        for (int r = 0; r <= n; ++r) {
          V sum(0);
          for (int k = r; k <= n; ++k) sum += S.at(n, k) * s.at(k, r);
          note(sum, V(r == n ? 1 : 0));
          sum = V(0);
          for (int k = r; k <= n; ++k) sum += s.at(n, k) * S.at(k, r);
          note(sum, V(r == n ? 1 : 0));
        }
      break;
    }
    case StirlingCase::Generating2: {
      const auto& S = t.second();
      for (int n = 0; n <= size; ++n)
        for (int z = 0; z <= size; ++z) {
          const V zn = e.number(z);
          V rhs(0), fall(1);
          for (int k = 0; k <= n; ++k) {
            if (k > 0) fall *= zn - e.number(I + (k - 1) * J);
            rhs += S.at(n, k) * fall;
          }
          note(ipow(zn, n), rhs);
        }
      break;
    }
    case StirlingCase::Generating1: {
      const auto& s = t.first();
      for (int n = 0; n <= size; ++n)
        for (int z = 0; z <= size; ++z) {
          const V zn = e.number(z);
          V lhs(1), rhs(0);
          for (int i = 0; i < n; ++i) lhs *= zn - e.number(I + i * J);
          for (int k = 0; k <= n; ++k) rhs += s.at(n, k) * ipow(zn, k);
          note(lhs, rhs);
        }
      break;
    }
    case StirlingCase::Conv2a: {
      const auto& S = t.second();
      for (int m = 0; m <= size; ++m)
        for (int n = 0; m + n <= size; ++n)
          for (int k = 0; k <= m + n; ++k) {
            V rhs(0);
            for (int i = 0; i <= k; ++i) {
              const auto& Ssh = t.second(i);
              for (int j = k - i; j <= m; ++j)
                rhs += V(Real(binom(m, j))) * ipow(e.number(i), m - j) *
                       ipow(e.big_weight(i), i + j - k) * S.at(n, i) * Ssh.at(j, k - i);
            }
            note(S.at(m + n, k), rhs);
          }
      break;
    }
    case StirlingCase::Conv2b: {
      const auto& S = t.second();
      for (int n = 0; n <= size; ++n)
        for (int k = 0; k <= n; ++k)
          for (int l = 0; k + l <= n; ++l) {
            const auto& Ssh = t.second(k + 1);
            V rhs(0);
            for (int i = 0; i <= n; ++i)
              for (int j = 0; j <= n - l - i; ++j)
                rhs += V(Real(binom(n - i, j))) * ipow(e.big_weight(k + 1), n - l - i - j) *
                       ipow(e.number(k + 1), j) * S.at(i, k) * Ssh.at(n - i - j, l);
            note(S.at(n + 1, k + l + 1), rhs);
          }
      break;
    }
    case StirlingCase::Conv1a: {
      const auto& c1 = t.unsigned_first();
      for (int m = 0; m <= size; ++m)
        for (int n = 0; m + n <= size; ++n) {
          const auto& csh = t.unsigned_first(n);
          for (int k = 0; k <= m + n; ++k) {
            V rhs(0);
            for (int i = 0; i <= k; ++i)
              for (int j = std::max(k - i, 0); j <= m; ++j)
                rhs += V(Real(binom(j, k - i))) * ipow(e.number(n), j - k + i) *
                       ipow(e.big_weight(n), m - j) * c1.at(n, i) * csh.at(m, j);
            note(c1.at(m + n, k), rhs);
          }
        }
      break;
    }
    case StirlingCase::Conv1b: {
      const auto& c1 = t.unsigned_first();
      for (int n = 0; n <= size; ++n)
        for (int k = 0; k <= n; ++k)
          for (int l = 0; k + l <= n; ++l) {
            V rhs(0);
            for (int i = 0; i <= n; ++i) {
              const auto& csh = t.unsigned_first(i + 1);
              for (int j = 0; j <= n - l - i; ++j)
                rhs += V(Real(binom(j + l, j))) * ipow(e.big_weight(i + 1), n - l - i - j) *
                       ipow(e.number(i + 1), j) * c1.at(i, k) * csh.at(n - i, j + l);
            }
            note(c1.at(n + 1, k + l + 1), rhs);
          }
      break;
    }
    case StirlingCase::Board: {
      const auto S = stirling2_board_table(size, I, J, e);
      const auto s = stirling1_board_table(size, I, J, e);
      const auto& S0 = t.second();
      const auto& s0 = t.first();
      for (int n = 1; n <= size; ++n)
        for (int k = 0; k <= n; ++k) {
          note(S.at(n, k), S0.at(n, k));
          note(s.at(n, k), s0.at(n, k));
        }
      break;
    }
  }
  return worst;
}

void check_stirling_args(StirlingCase c, int size, int I, int J) {
  if (size < 0) throw ValidationError("Stirling size must be nonnegative");
  if (size > 8) throw SizeError("Stirling tables are limited to size 8");
  if (c == StirlingCase::Board && size > 4) throw SizeError("board tables are limited to n <= 4");
  if (c == StirlingCase::Board && size < 1) throw ValidationError("board tables need n >= 1");
  const bool convolution = c == StirlingCase::Conv2a || c == StirlingCase::Conv2b ||
                           c == StirlingCase::Conv1a || c == StirlingCase::Conv1b;
  if (convolution && (I != 0 || J != 1))
    throw DomainError("convolution formulas hold for I = 0, J = 1 only");
  if (c == StirlingCase::Board && (I < 0 || J < 0))
    throw DomainError("board tables need I, J >= 0");
}

}  // namespace

VerificationReport verify_stirling(StirlingCase c, int size, int I, int J, EngineKind kind,
                                   const VerifyOptions& options) {
  check_stirling_args(c, size, I, J);
  return run_sampled("stirling." + to_string(c), kind, options, options.samples,
                     [&](const ParamPoint& pt) {
                       SampleOutcome o;
                       o.instances = 1;
                       o.residual = adaptive_residual(
                           [&](auto prec) {
                             using Real = typename decltype(prec)::type;
                             return stirling_residual(c, size, I, J, make_engine<Real>(kind, pt));
                           },
                           options.tolerance, o.escalated);
                       return o;
                     });
}

std::vector<VerificationReport> verify_stirling_battery(const VerifyOptions& options) {
  struct Item {
    StirlingCase c;
    int size;
    std::vector<std::pair<int, int>> shapes;  // (I, J)
  };
  const std::vector<std::pair<int, int>> general = {{0, 1}, {1, 2}, {2, 1}, {1, 0}};
  const Item items[] = {
      {StirlingCase::Inverse, 8, general},     {StirlingCase::Generating2, 8, general},
      {StirlingCase::Generating1, 8, general}, {StirlingCase::Conv2a, 8, {{0, 1}}},
      {StirlingCase::Conv2b, 8, {{0, 1}}},     {StirlingCase::Conv1a, 8, {{0, 1}}},
      {StirlingCase::Conv1b, 8, {{0, 1}}},     {StirlingCase::Board, 4, general},
  };
  std::vector<VerificationReport> out;
  for (auto [kind, samples] : {std::pair{EngineKind::Elliptic, 20},
                               std::pair{EngineKind::Classical, 1}}) {
    VerifyOptions o = options;
    if (kind == EngineKind::Classical) o.tolerance = std::min(o.tolerance, 1e-12);
    for (const Item& item : items) {
      const std::string id = to_string(kind) + ".stirling." + to_string(item.c);
      out.push_back(run_sampled(id, kind, o, samples, [&](const ParamPoint& pt) {
        SampleOutcome so;
        for (auto [I, J] : item.shapes) {
          ++so.instances;
          const double r = adaptive_residual(
              [&](auto prec) {
                using Real = typename decltype(prec)::type;
                return stirling_residual(item.c, item.size, I, J, make_engine<Real>(kind, pt));
              },
              o.tolerance, so.escalated);
          so.residual = std::max(so.residual, r);
        }
        return so;
      }));
    }
  }
  return out;
}

}  // namespace ellrook
