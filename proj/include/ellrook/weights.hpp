#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ellrook/scalar.hpp"
#include "ellrook/theta.hpp"

namespace ellrook {

enum class EngineKind { Elliptic, AQ, Q, Classical };

std::string to_string(EngineKind kind);
EngineKind engine_kind_from_string(const std::string& name);

template <class Real>
struct AQParams {
  Complex<Real> a{1};
  Complex<Real> q{1};
};

template <class Real>
struct QParams {
  Complex<Real> q{1};
};

struct ClassicalParams {};

// Evaluation strategy for the weights W(k), w(k) and the numbers [z].
// Immutable once built; a precomputed W table can be attached with
// with_weight_cache() and is then shared read-only between copies.
template <class Real>
class WeightEngine {
 public:
  using Value = Complex<Real>;
  using Params = std::variant<EllipticParams<Real>, AQParams<Real>, QParams<Real>,
                              ClassicalParams>;

  static WeightEngine elliptic(const EllipticParams<Real>& params);
  static WeightEngine aq(Value a, Value q);
  static WeightEngine q_only(Value q);
  static WeightEngine classical();

  EngineKind kind() const;
  const Params& params() const { return params_; }

  Value big_weight(int k) const;    // W(k)
  Value small_weight(int k) const;  // w(k)
  Value number(int z) const;        // [z]

  // Engine with (a, b) replaced by (a q^{a_exp}, b q^{b_exp}).
  WeightEngine shifted(int a_exp, int b_exp) const;

  // Copy with W(k) precomputed for kmin <= k <= kmax.
  WeightEngine with_weight_cache(int kmin, int kmax) const;

  template <class To>
  WeightEngine<To> convert() const;

 private:
  explicit WeightEngine(Params params) : params_(std::move(params)) {}
  Value compute_big_weight(int k) const;

  Params params_;
  std::shared_ptr<const std::vector<Value>> cache_;
  int cache_min_ = 0;
};

template <class Real>
Complex<Real> weight_W(const WeightEngine<Real>& engine, int k) {
  return engine.big_weight(k);
}

template <class Real>
Complex<Real> weight_w(const WeightEngine<Real>& engine, int k) {
  return engine.small_weight(k);
}

template <class Real>
Complex<Real> ell_number(const WeightEngine<Real>& engine, int z) {
  return engine.number(z);
}

// Closed-form elliptic binomial coefficient; 0 outside 0 <= k <= n.
template <class Real>
Complex<Real> ell_binomial(const WeightEngine<Real>& engine, int n, int k);

// Table T[n][k], 0 <= k <= n <= nmax, built from the Pascal-type recurrence
// [n+1, k] = [n, k] + [n, k-1] * W_{a q^{k-1}, b q^{2k-2}}(n+1-k).
template <class Real>
std::vector<std::vector<Complex<Real>>> ell_binomial_recurrence_table(
    const WeightEngine<Real>& engine, int nmax);

enum class Step { East, North };

struct LatticePath {
  std::vector<Step> steps;
  int east() const;
  int north() const;
};

inline constexpr int kMaxPathLength = 12;

// All paths from (0,0) to (k, n-k), in lexicographic order of the east-step
// positions.
std::vector<LatticePath> lattice_paths(int n, int k);

// Product over east steps (s-1,t) -> (s,t) of W_{a q^{s-1}, b q^{2s-2}}(t).
template <class Real>
Complex<Real> path_weight(const WeightEngine<Real>& engine, const LatticePath& path);

template <class Real>
Complex<Real> ell_binomial_paths(const WeightEngine<Real>& engine, int n, int k);

}  // namespace ellrook
