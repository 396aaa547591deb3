#pragma once

#include <string>
#include <vector>

#include "ellrook/boards.hpp"
#include "ellrook/cell_weights.hpp"
#include "ellrook/weights.hpp"

namespace ellrook {

enum class Provenance { Recurrence, BoardEnumeration, ClosedForm };

std::string to_string(Provenance provenance);

// Lower-triangular table of values indexed by (n, k), zero outside 0 <= k <= n.
template <class Real>
class CoefficientTable {
 public:
  using Value = Complex<Real>;

  CoefficientTable(int nmax, Provenance provenance);

  int nmax() const { return nmax_; }
  Provenance provenance() const { return provenance_; }
  Value at(int n, int k) const;
  void set(int n, int k, Value v);

 private:
  int nmax_;
  Provenance provenance_;
  std::vector<std::vector<Value>> rows_;
};

// MR_0 .. MR_n by a left-to-right column transfer over the number of rooks
// placed so far (each of which cancels one part in every later column).
template <class Real>
std::vector<Complex<Real>> mr_coefficients(const WeightedBoard<Real>& weighted);

template <class Real>
std::vector<Complex<Real>> mr_coefficients(const AugmentedBoard& board,
                                           const WeightEngine<Real>& engine);

// Same values by summing placement weights over enumerate_augmented.
template <class Real>
std::vector<Complex<Real>> mr_by_enumeration(const AugmentedBoard& board,
                                             const WeightEngine<Real>& engine);

template <class Real>
Complex<Real> MR(const AugmentedBoard& board, int k, const WeightEngine<Real>& engine);

// R_m = prod_{s <= n-m} W(-Abar_s) / prod_i W(-sgn(i) b_i) * MR_m, m = 0..n.
template <class Real>
std::vector<Complex<Real>> r_from_mr(const AugmentedBoard& board,
                                     const std::vector<Complex<Real>>& mr,
                                     const WeightEngine<Real>& engine);

template <class Real>
std::vector<Complex<Real>> r_coefficients(const AugmentedBoard& board,
                                          const WeightEngine<Real>& engine);

template <class Real>
Complex<Real> R(const AugmentedBoard& board, int m, const WeightEngine<Real>& engine);

// Generalised Stirling numbers from their recurrences:
//   S(n+1,k) = S(n,k-1) + [I + kJ] S(n,k)
//   s(n+1,k) = s(n,k-1) - [I + nJ] s(n,k)
template <class Real>
CoefficientTable<Real> stirling2_table(int nmax, int I, int J,
                                       const WeightEngine<Real>& engine);

template <class Real>
CoefficientTable<Real> stirling1_table(int nmax, int I, int J,
                                       const WeightEngine<Real>& engine);

// c(n,k) = (-1)^{n-k} s(n,k)
template <class Real>
CoefficientTable<Real> unsigned_stirling1_table(int nmax, int I, int J,
                                                const WeightEngine<Real>& engine);

template <class Real>
Complex<Real> stirling2_ell(int n, int k, int I, int J, const WeightEngine<Real>& engine);

template <class Real>
Complex<Real> stirling1_ell(int n, int k, int I, int J, const WeightEngine<Real>& engine);

template <class Real>
Complex<Real> unsigned_stirling1_ell(int n, int k, int I, int J,
                                     const WeightEngine<Real>& engine);

// Boards whose MR values reproduce the Stirling tables: S(n,k) = MR_{n-k}.
AugmentedBoard stirling2_board(int n, int I, int J);
AugmentedBoard stirling1_board(int n, int I, int J);

// Board tables: T(n,k) = MR_{n-k} on the Stirling boards, n <= nmax.
template <class Real>
CoefficientTable<Real> stirling2_board_table(int nmax, int I, int J,
                                             const WeightEngine<Real>& engine);
template <class Real>
CoefficientTable<Real> stirling1_board_table(int nmax, int I, int J,
                                             const WeightEngine<Real>& engine);

// Weighted file-placement numbers with row weights governed by alpha; index
// k = number of rooks, k = 0..n.
template <class Real>
std::vector<Complex<Real>> alpha_file_numbers(const SkylineBoard& board, int alpha,
                                              const Complex<Real>& q);

template <class Real>
Complex<Real> alpha_file_number(const SkylineBoard& board, int k, int alpha,
                                const Complex<Real>& q);

template <class Real>
Complex<Real> gaussian_binomial(int n, int k, const Complex<Real>& q);

// Staircase values at alpha = 2 in the a;q limit.
template <class Real>
Complex<Real> alpha2_closed_form(int n, int k, const Complex<Real>& a, const Complex<Real>& q);

// table[n][k] for 1 <= n <= nmax from the last-column recursion.
template <class Real>
std::vector<std::vector<Complex<Real>>> alpha2_recursion_table(int nmax, const Complex<Real>& a,
                                                               const Complex<Real>& q);

template <class Real>
Complex<Real> alpha2_recursion(int n, int k, const Complex<Real>& a, const Complex<Real>& q);

// A = (0,1,...,1), B = (0,2,...,2(n-1)), all signs +1.
AugmentedBoard alpha2_board(int n);

// q^{C(n-k,2)} GaussBinom(n+k-1, 2k) prod_{j<=k} [2j-1]_q
template <class Real>
Complex<Real> staircase_alpha2_number(int n, int k, const Complex<Real>& q);

}  // namespace ellrook
