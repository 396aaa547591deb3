#include "ellrook/rook_numbers.hpp"

#include <string>

#include "ellrook/errors.hpp"
#include "ellrook/placements.hpp"

namespace ellrook {

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::Recurrence: return "recurrence";
    case Provenance::BoardEnumeration: return "board-enumeration";
    case Provenance::ClosedForm: return "closed-form";
  }
  return "unknown";
}

template <class Real>
CoefficientTable<Real>::CoefficientTable(int nmax, Provenance provenance)
    : nmax_(nmax), provenance_(provenance) {
  if (nmax < 0) throw ValidationError("table size must be nonnegative");
  rows_.resize(nmax + 1);
  for (int n = 0; n <= nmax; ++n) rows_[n].assign(n + 1, Value(0));
}

template <class Real>
auto CoefficientTable<Real>::at(int n, int k) const -> Value {
  if (n < 0 || k < 0 || k > n) return Value(0);
  if (n > nmax_) throw IndexError("row " + std::to_string(n) + " beyond table size");
  return rows_[n][k];
}

template <class Real>
void CoefficientTable<Real>::set(int n, int k, Value v) {
  if (n < 0 || n > nmax_ || k < 0 || k > n) throw IndexError("table index out of range");
  rows_[n][k] = v;
}

template <class Real>
std::vector<Complex<Real>> mr_coefficients(const WeightedBoard<Real>& weighted) {
  using Value = Complex<Real>;
  const int n = weighted.board().size();
  // upper_prefix[s] = total upper augmented weight of parts 1..s
  std::vector<Value> upper_prefix(n + 1, Value(0));
  for (int s = 1; s <= n; ++s)
    upper_prefix[s] = upper_prefix[s - 1] + weighted.upper_part_sum(s);
  std::vector<Value> dp(n + 1, Value(0));
  dp[0] = Value(1);
  for (int j = 1; j <= n; ++j) {
    const Value base = weighted.base_sum(j);
    for (int t = j - 1; t >= 0; --t) {
      if (dp[t] == Value(0)) continue;
      dp[t + 1] += dp[t] * (base + upper_prefix[j - t]);
    }
  }
  return dp;
}

template <class Real>
std::vector<Complex<Real>> mr_coefficients(const AugmentedBoard& board,
                                           const WeightEngine<Real>& engine) {
  return mr_coefficients(WeightedBoard<Real>(make_extended(board, 0), engine));
}

template <class Real>
std::vector<Complex<Real>> mr_by_enumeration(const AugmentedBoard& board,
                                             const WeightEngine<Real>& engine) {
  using Value = Complex<Real>;
  const WeightedBoard<Real> weighted(make_extended(board, 0), engine);
  const int n = board.size();
  std::vector<Value> out(n + 1, Value(0));
  for (int k = 0; k <= n; ++k) {
    for_each_augmented(board, k, [&](const Placement& p) {
      Value w(1);
      for (const Cell& c : p.rooks) w *= weighted.weight(c);
      out[k] += w;
    });
  }
  return out;
}

template <class Real>
Complex<Real> MR(const AugmentedBoard& board, int k, const WeightEngine<Real>& engine) {
  if (k < 0 || k > board.size()) return Complex<Real>(0);
  return mr_coefficients(board, engine)[k];
}

template <class Real>
std::vector<Complex<Real>> r_from_mr(const AugmentedBoard& board,
                                     const std::vector<Complex<Real>>& mr,
                                     const WeightEngine<Real>& engine) {
  using Value = Complex<Real>;
  const int n = board.size();
  Value den(1);
  for (int i = 1; i <= n; ++i) den *= engine.big_weight(-board.sgn(i) * board.b(i));
  std::vector<Value> out(n + 1);
  Value pre(1);  // prod_{s <= k} W(-Abar_s) for k = n - m
  for (int k = 0; k <= n; ++k) {
    if (k > 0) pre *= engine.big_weight(-board.signed_partial(k));
    out[n - k] = pre / den * mr.at(n - k);
  }
  return out;
}

template <class Real>
std::vector<Complex<Real>> r_coefficients(const AugmentedBoard& board,
                                          const WeightEngine<Real>& engine) {
  return r_from_mr(board, mr_coefficients(board, engine), engine);
}

template <class Real>
Complex<Real> R(const AugmentedBoard& board, int m, const WeightEngine<Real>& engine) {
  if (m < 0 || m > board.size()) return Complex<Real>(0);
  return r_coefficients(board, engine)[m];
}

template <class Real>
CoefficientTable<Real> stirling2_table(int nmax, int I, int J,
                                       const WeightEngine<Real>& engine) {
  if (I < 0 || J < 0) throw ValidationError("Stirling parameters I, J must be nonnegative");
  CoefficientTable<Real> t(nmax, Provenance::Recurrence);
  t.set(0, 0, Complex<Real>(1));
  for (int n = 0; n < nmax; ++n)
    for (int k = 0; k <= n + 1; ++k)
      t.set(n + 1, k, t.at(n, k - 1) + engine.number(I + k * J) * t.at(n, k));
  return t;
}

template <class Real>
CoefficientTable<Real> stirling1_table(int nmax, int I, int J,
                                       const WeightEngine<Real>& engine) {
  if (I < 0 || J < 0) throw ValidationError("Stirling parameters I, J must be nonnegative");
  CoefficientTable<Real> t(nmax, Provenance::Recurrence);
  t.set(0, 0, Complex<Real>(1));
  for (int n = 0; n < nmax; ++n) {
    const Complex<Real> factor = engine.number(I + n * J);
    for (int k = 0; k <= n + 1; ++k) t.set(n + 1, k, t.at(n, k - 1) - factor * t.at(n, k));
  }
  return t;
}

template <class Real>
CoefficientTable<Real> unsigned_stirling1_table(int nmax, int I, int J,
                                                const WeightEngine<Real>& engine) {
  const auto s = stirling1_table(nmax, I, J, engine);
  CoefficientTable<Real> c(nmax, Provenance::Recurrence);
  for (int n = 0; n <= nmax; ++n)
    for (int k = 0; k <= n; ++k) c.set(n, k, (n - k) % 2 ? -s.at(n, k) : s.at(n, k));
  return c;
}

template <class Real>
Complex<Real> stirling2_ell(int n, int k, int I, int J, const WeightEngine<Real>& engine) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  return stirling2_table(n, I, J, engine).at(n, k);
}

template <class Real>
Complex<Real> stirling1_ell(int n, int k, int I, int J, const WeightEngine<Real>& engine) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  return stirling1_table(n, I, J, engine).at(n, k);
}

template <class Real>
Complex<Real> unsigned_stirling1_ell(int n, int k, int I, int J,
                                     const WeightEngine<Real>& engine) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  return unsigned_stirling1_table(n, I, J, engine).at(n, k);
}

AugmentedBoard stirling2_board(int n, int I, int J) {
  std::vector<int> A(n, J);
  if (n > 0) A[0] = I;
  return make_augmented(A, std::vector<int>(n, 0), SignFunctions::uniform(n, 1, -1));
}

AugmentedBoard stirling1_board(int n, int I, int J) {
  std::vector<int> B(n);
  for (int i = 0; i < n; ++i) B[i] = I + i * J;
  return make_augmented(std::vector<int>(n, 0), B, SignFunctions::uniform(n, -1, 1));
}

namespace {

template <class Real>
CoefficientTable<Real> board_table(int nmax, AugmentedBoard (*make)(int, int, int), int I,
                                   int J, const WeightEngine<Real>& engine) {
  CoefficientTable<Real> t(nmax, Provenance::BoardEnumeration);
  t.set(0, 0, Complex<Real>(1));
  for (int n = 1; n <= nmax; ++n) {
    const auto mr = mr_by_enumeration(make(n, I, J), engine);
    for (int k = 0; k <= n; ++k) t.set(n, k, mr[n - k]);
  }
  return t;
}

}  // namespace

template <class Real>
CoefficientTable<Real> stirling2_board_table(int nmax, int I, int J,
                                             const WeightEngine<Real>& engine) {
  return board_table(nmax, &stirling2_board, I, J, engine);
}

template <class Real>
CoefficientTable<Real> stirling1_board_table(int nmax, int I, int J,
                                             const WeightEngine<Real>& engine) {
  return board_table(nmax, &stirling1_board, I, J, engine);
}

template <class Real>
std::vector<Complex<Real>> alpha_file_numbers(const SkylineBoard& board, int alpha,
                                              const Complex<Real>& q) {
  using Value = Complex<Real>;
  if (!board.is_ferrers()) throw ValidationError("alpha file numbers need a Ferrers board");
  const int n = board.size();
  std::vector<Value> out(n + 1, Value(0));
  for (int k = 0; k <= n; ++k) {
    for_each_file(board, k, [&](const Placement& p) {
      std::vector<int> rook_row(n + 1, 0);  // 0 = no rook
      for (const Cell& c : p.rooks) rook_row[c.column] = c.offset + 1;
      Value w(1);
      for (int i = 1; i <= n; ++i) {
        for (int row = 1; row <= board.height(i); ++row) {
          if (rook_row[i] > row) continue;  // below a rook: weight 1
          int v = 0;
          for (int c = 1; c < i; ++c) v += rook_row[c] == row;
          const int e = (alpha - 1) * v + 1;
          w *= rook_row[i] == row ? q_number(e, q) : ipow(q, e);
        }
      }
      out[k] += w;
    });
  }
  return out;
}

template <class Real>
Complex<Real> alpha_file_number(const SkylineBoard& board, int k, int alpha,
                                const Complex<Real>& q) {
  if (k < 0 || k > board.size()) return Complex<Real>(0);
  return alpha_file_numbers(board, alpha, q)[k];
}

namespace {

template <class Real>
Complex<Real> checked(const Complex<Real>& d, const char* what) {
  if (magnitude(d) < Real(1e-8))
    throw SingularError(std::string("vanishing denominator in ") + what);
  return d;
}

// (x; base)_m for m >= 0, direct product.
template <class Real>
Complex<Real> q_pochhammer(const Complex<Real>& x, const Complex<Real>& base, int m) {
  Complex<Real> r(1), term = x;
  for (int i = 0; i < m; ++i) {
    r *= Complex<Real>(1) - term;
    term *= base;
  }
  return r;
}

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

template <class Real>
Complex<Real> gaussian_binomial(int n, int k, const Complex<Real>& q) {
  using Value = Complex<Real>;
  if (n < 0 || k < 0 || k > n) return Value(0);
  const Value one(1);
  if (q == one) {
    Real r(1);
    for (int i = 1; i <= k; ++i) r = r * Real(n - k + i) / Real(i);
    return Value(r);
  }
  Value r(1);
  for (int i = 0; i < k; ++i)
    r *= (one - ipow(q, n - i)) / checked(one - ipow(q, i + 1), "Gaussian binomial");
  return r;
}

template <class Real>
Complex<Real> alpha2_closed_form(int n, int k, const Complex<Real>& a, const Complex<Real>& q) {
  using Value = Complex<Real>;
  if (n < 1 || k < 0 || k > n) throw ValidationError("closed form needs n >= 1, 0 <= k <= n");
  Value r = ipow(q, -choose2(n + k) + static_cast<long long>(k) * (k + 2));
  r *= gaussian_binomial(n + k - 1, 2 * k, q);
  for (int j = 1; j <= k; ++j) r *= q_number(2 * j - 1, q);
  const Value q2 = q * q, q4 = q2 * q2;
  r *= q_pochhammer(a * ipow(q, 3 - 2 * n + 2 * k), q2, n - k);
  r *= q_pochhammer(a * ipow(q, 1 - 2 * n), q2, k);
  Value den(1), term = a * ipow(q, 5 - 4 * n);
  for (int i = 0; i < n; ++i) {
    den *= checked(Value(1) - term, "alpha = 2 closed form");
    term *= q4;
  }
  return r / den;
}

template <class Real>
std::vector<std::vector<Complex<Real>>> alpha2_recursion_table(int nmax, const Complex<Real>& a,
                                                               const Complex<Real>& q) {
  using Value = Complex<Real>;
  if (nmax < 1) throw ValidationError("recursion needs nmax >= 1");
  const auto engine = WeightEngine<Real>::aq(a, q);
  std::vector<std::vector<Value>> t(nmax + 1);
  t[1] = {Value(1), Value(0)};
  for (int n = 2; n <= nmax; ++n) {
    t[n].assign(n + 1, Value(0));
    const Value w_last = engine.big_weight(2 - 2 * n);
    const auto shifted = engine.shifted(2 * (2 - 2 * n), 0);
    for (int k = 0; k <= n; ++k) {
      Value v(0);
      if (k <= n - 1) v += engine.big_weight(-n + k + 1) / w_last * t[n - 1][k];
      if (k >= 1) v += w_last * shifted.number(n + k - 2) / w_last * t[n - 1][k - 1];
      t[n][k] = v;
    }
  }
  return t;
}

template <class Real>
Complex<Real> alpha2_recursion(int n, int k, const Complex<Real>& a, const Complex<Real>& q) {
  if (n < 1 || k < 0 || k > n) throw ValidationError("recursion needs n >= 1, 0 <= k <= n");
  return alpha2_recursion_table(n, a, q)[n][k];
}

AugmentedBoard alpha2_board(int n) {
  if (n < 1) throw ValidationError("staircase board needs n >= 1");
  std::vector<int> A(n, 1), B(n);
  A[0] = 0;
  for (int i = 0; i < n; ++i) B[i] = 2 * i;
  return make_augmented(A, B, SignFunctions::uniform(n, 1, 1));
}

template <class Real>
Complex<Real> staircase_alpha2_number(int n, int k, const Complex<Real>& q) {
  if (n < 0 || k < 0 || k > n) return Complex<Real>(0);
  Complex<Real> r = ipow(q, choose2(n - k)) * gaussian_binomial(n + k - 1, 2 * k, q);
  for (int j = 1; j <= k; ++j) r *= q_number(2 * j - 1, q);
  return r;
}

#define ELLROOK_INSTANTIATE(T)                                                              \
  template class CoefficientTable<T>;                                                       \
  template std::vector<Complex<T>> mr_coefficients<T>(const WeightedBoard<T>&);             \
  template std::vector<Complex<T>> mr_coefficients<T>(const AugmentedBoard&,                \
                                                      const WeightEngine<T>&);              \
  template std::vector<Complex<T>> mr_by_enumeration<T>(const AugmentedBoard&,              \
                                                        const WeightEngine<T>&);            \
  template Complex<T> MR<T>(const AugmentedBoard&, int, const WeightEngine<T>&);            \
  template std::vector<Complex<T>> r_from_mr<T>(                                            \
      const AugmentedBoard&, const std::vector<Complex<T>>&, const WeightEngine<T>&);       \
  template std::vector<Complex<T>> r_coefficients<T>(const AugmentedBoard&,                 \
                                                     const WeightEngine<T>&);               \
  template Complex<T> R<T>(const AugmentedBoard&, int, const WeightEngine<T>&);             \
  template CoefficientTable<T> stirling2_table<T>(int, int, int, const WeightEngine<T>&);   \
  template CoefficientTable<T> stirling1_table<T>(int, int, int, const WeightEngine<T>&);   \
  template CoefficientTable<T> unsigned_stirling1_table<T>(int, int, int,                   \
                                                           const WeightEngine<T>&);         \
  template Complex<T> stirling2_ell<T>(int, int, int, int, const WeightEngine<T>&);         \
  template Complex<T> stirling1_ell<T>(int, int, int, int, const WeightEngine<T>&);         \
  template Complex<T> unsigned_stirling1_ell<T>(int, int, int, int, const WeightEngine<T>&); \
  template CoefficientTable<T> stirling2_board_table<T>(int, int, int,                      \
                                                        const WeightEngine<T>&);            \
  template CoefficientTable<T> stirling1_board_table<T>(int, int, int,                      \
                                                        const WeightEngine<T>&);            \
  template std::vector<Complex<T>> alpha_file_numbers<T>(const SkylineBoard&, int,          \
                                                         const Complex<T>&);                \
  template Complex<T> alpha_file_number<T>(const SkylineBoard&, int, int, const Complex<T>&); \
  template Complex<T> gaussian_binomial<T>(int, int, const Complex<T>&);                    \
  template Complex<T> alpha2_closed_form<T>(int, int, const Complex<T>&, const Complex<T>&); \
  template std::vector<std::vector<Complex<T>>> alpha2_recursion_table<T>(                  \
      int, const Complex<T>&, const Complex<T>&);                                           \
  template Complex<T> alpha2_recursion<T>(int, int, const Complex<T>&, const Complex<T>&);  \
  template Complex<T> staircase_alpha2_number<T>(int, int, const Complex<T>&);

ELLROOK_INSTANTIATE(double)
ELLROOK_INSTANTIATE(Quad)

}  // namespace ellrook
