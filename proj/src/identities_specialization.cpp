#include <algorithm>
#include <cmath>
#include <functional>

#include "ellrook/errors.hpp"
#include "ellrook/identities.hpp"
#include "ellrook/placements.hpp"
#include "ellrook/rook_numbers.hpp"
#include "harness.hpp"

namespace ellrook {

using detail::adaptive_residual;
using detail::run_sampled;
using detail::SampleOutcome;

namespace {

// The augmented board and sign choice that turn the general product formula
// into one specialization, plus the factor applied to z (m for m-rooks).
struct Substitution {
  AugmentedBoard board;
  int z_scale = 1;
  int J = 1;  // row step of the falling product in the displayed form
};

int attack_step(SpecializationCase c, const SpecializationParams& p) {
  switch (c) {
    case SpecializationCase::JAttack: return p.J;
    case SpecializationCase::MRook: return p.m;
    default: return 1;
  }
}

void check_shape(SpecializationCase c, const SpecializationParams& p) {
  const SkylineBoard board(p.heights);
  const int n = board.size();
  if (n < 1) throw ValidationError("specialization needs at least one column");
  if (n > 6) throw SizeError("specialization boards are limited to n <= 6");
  for (int h : p.heights)
    if (h < 0) throw DomainError("board heights must be nonnegative");
  if (board.cell_count() > kMaxEnumerationCells)
    throw SizeError("specialization boards are limited to 64 cells");
  auto need_min_heights = [&](int step, const char* what) {
    for (int i = 1; i <= n; ++i)
      if (board.height(i) < step * (i - 1))
        throw ValidationError(std::string(what) + " needs b_i >= " + std::to_string(step) +
                              "(i-1)");
  };
  switch (c) {
    case SpecializationCase::File:
      return;
    case SpecializationCase::Rook:
    case SpecializationCase::GR:
      if (!board.is_ferrers()) throw ValidationError("rook case needs a Ferrers board");
      need_min_heights(1, "rook case");
      return;
    case SpecializationCase::JAttack:
    case SpecializationCase::MRook: {
      const int J = attack_step(c, p);
      if (J < 1) throw DomainError("J and m must be positive");
      if (!board.satisfies_j_condition(J))
        throw ValidationError("board violates b_{i+1} >= b_i + J - 1");
      need_min_heights(J, "J-attacking case");
      return;
    }
    case SpecializationCase::Alpha:
      if (p.alpha < 0) throw DomainError("alpha must be nonnegative");
      if (!board.is_ferrers()) throw ValidationError("alpha case needs a Ferrers board");
      if (p.alpha == 0) need_min_heights(1, "alpha = 0");
      return;
  }
}

Substitution substitute(SpecializationCase c, const SpecializationParams& p) {
  check_shape(c, p);
  const int n = static_cast<int>(p.heights.size());
  std::vector<int> A(n, 0), B(n);
  SignFunctions signs = SignFunctions::uniform(n, 1, 1);
  Substitution out;
  switch (c) {
    case SpecializationCase::File:
      B = p.heights;
      break;
    case SpecializationCase::Rook:
    case SpecializationCase::GR:
    case SpecializationCase::JAttack:
    case SpecializationCase::MRook: {
      const int J = attack_step(c, p);
      for (int i = 0; i < n; ++i) {
        A[i] = i == 0 ? 0 : J;
        B[i] = p.heights[i] - J * i;
      }
      signs = SignFunctions::uniform(n, 1, -1);
      out.J = J;
      if (c == SpecializationCase::MRook) out.z_scale = p.m;
      break;
    }
    case SpecializationCase::Alpha: {
      const int step = p.alpha - 1;
      for (int i = 0; i < n; ++i) {
        A[i] = i == 0 ? 0 : std::abs(step);
        B[i] = p.heights[i] + i * step;
      }
      if (step < 0) signs = SignFunctions::uniform(n, 1, -1);
      break;
    }
  }
  out.board = make_augmented(A, B, signs);
  return out;
}

// Statistic-weighted placement counts sum_P q^{stat(P)}, indexed by rooks.
template <class Real>
std::vector<Complex<Real>> statistic_numbers(SpecializationCase c, const SpecializationParams& p,
                                             const Complex<Real>& q) {
  const SkylineBoard board(p.heights);
  const int n = board.size();
  if (c == SpecializationCase::Alpha) return alpha_file_numbers(board, p.alpha, q);
  std::vector<Complex<Real>> out(n + 1, Complex<Real>(0));
  for (int k = 0; k <= n; ++k) {
    const PlacementVisitor add = [&](const Placement& pl) { out[k] += ipow(q, *pl.statistic); };
    switch (c) {
      case SpecializationCase::File: for_each_file(board, k, add); break;
      case SpecializationCase::Rook:
      case SpecializationCase::GR: for_each_classic(board, k, add); break;
      default: for_each_j_attacking(board, attack_step(c, p), k, add); break;
    }
  }
  return out;
}

// The displayed q-form with statistic coefficients, at one z:
//   prod_i [z' + h_i] = sum_k r_{n-k} prod_{i<k} [z' + g_i]
// where z' = z_scale * z.
template <class Real>
std::pair<Complex<Real>, Complex<Real>> displayed_sides(SpecializationCase c,
                                                        const SpecializationParams& p,
                                                        const std::vector<Complex<Real>>& coef,
                                                        int z, const Complex<Real>& q) {
  using V = Complex<Real>;
  const int n = static_cast<int>(p.heights.size());
  const int J = attack_step(c, p);
  const int zz = c == SpecializationCase::MRook ? p.m * z : z;
  auto head = [&](int i) -> int {  // 0-based column
    switch (c) {
      case SpecializationCase::File: return p.heights[i];
      case SpecializationCase::Alpha: return p.heights[i] + i * (p.alpha - 1);
      default: return p.heights[i] - J * i;
    }
  };
  auto tail = [&](int i) -> int {
    switch (c) {
      case SpecializationCase::File: return 0;
      case SpecializationCase::Alpha: return i * (p.alpha - 1);
      default: return -J * i;
    }
  };
  V lhs(1);
  for (int i = 0; i < n; ++i) lhs *= q_number(zz + head(i), q);
  V rhs(0), fall(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fall *= q_number(zz + tail(k - 1), q);
    rhs += coef[n - k] * fall;
  }
  return {lhs, rhs};
}

// Integer form of the displayed identity (q = 1), with counts from the
// enumerators; returns |lhs - rhs|.
long long displayed_integer_gap(SpecializationCase c, const SpecializationParams& p, int zmax) {
  const auto counts = statistic_numbers<double>(c, p, std::complex<double>(1.0));
  std::vector<long long> coef;
  for (const auto& v : counts) coef.push_back(std::llround(v.real()));
  const int n = static_cast<int>(p.heights.size());
  const int J = attack_step(c, p);
  long long worst = 0;
  for (int z = 0; z <= zmax; ++z) {
    const long long zz = c == SpecializationCase::MRook ? static_cast<long long>(p.m) * z : z;
    long long lhs = 1, rhs = 0, fall = 1;
    for (int i = 0; i < n; ++i) {
      long long h = c == SpecializationCase::File    ? p.heights[i]
                    : c == SpecializationCase::Alpha ? p.heights[i] + i * (p.alpha - 1)
                                                     : p.heights[i] - J * i;
      lhs *= zz + h;
    }
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        const int i = k - 1;
        const long long g = c == SpecializationCase::File    ? 0
                            : c == SpecializationCase::Alpha ? i * (p.alpha - 1)
                                                             : -J * i;
        fall *= zz + g;
      }
      rhs += coef[n - k] * fall;
    }
    worst = std::max(worst, std::llabs(lhs - rhs));
  }
  return worst;
}

// Worst residual over z = 0..zmax of the product formula on the substituted
// board, and, where the engine has a plain q, of the coefficient agreement
// and the displayed form.
template <class Real>
double specialization_residual(SpecializationCase c, const SpecializationParams& p, int zmax,
                               const WeightEngine<Real>& raw) {
  using V = Complex<Real>;
  const Substitution sub = substitute(c, p);
  const AugmentedBoard& board = sub.board;
  const int n = board.size();
  const int span = 2 * (board.partial(n) + sub.z_scale * zmax + 8);
  const auto e = raw.with_weight_cache(-span, span);
  const auto mr = mr_coefficients(board, e);
  const auto r = r_from_mr(board, mr, e);
  double worst = 0.0;
  for (int z0 = 0; z0 <= zmax; ++z0) {
    const int z = sub.z_scale * z0;
    const V zn = e.number(z);
    V lhs1(1), lhs2(1);
    for (int i = 1; i <= n; ++i) {
      const int sb = board.sgn(i) * board.b(i);
      lhs1 *= zn - e.number(-sb);
      lhs2 *= e.shifted(-2 * sb, -sb).number(z + sb);
    }
    V rhs1(0), rhs2(0), fall1(1), fall2(1);
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        const int ab = board.signed_partial(k);
        fall1 *= zn - e.number(-ab);
        fall2 *= e.shifted(-2 * ab, -ab).number(z + ab);
      }
      rhs1 += mr[n - k] * fall1;
      rhs2 += r[n - k] * fall2;
    }
    worst = std::max({worst, relative_residual(lhs1, rhs1), relative_residual(lhs2, rhs2)});
  }

  const bool plain_q = e.kind() == EngineKind::Q || e.kind() == EngineKind::Classical;
  const bool has_statistic = c != SpecializationCase::Rook;
  if (plain_q && has_statistic) {
    const V q = e.kind() == EngineKind::Q ? std::get<QParams<Real>>(e.params()).q : V(1);
    const auto stat = statistic_numbers(c, p, q);
    for (int m = 0; m <= n; ++m) worst = std::max(worst, relative_residual(r[m], stat[m]));
    for (int z = 0; z <= zmax; ++z) {
      const auto [lhs, rhs] = displayed_sides(c, p, stat, z, q);
      worst = std::max(worst, relative_residual(lhs, rhs));
    }
  }
  if (e.kind() == EngineKind::Classical && has_statistic)
    worst = std::max(worst, static_cast<double>(displayed_integer_gap(c, p, zmax)));
  return worst;
}

int default_zmax(const SpecializationParams& p) {
  return p.zmax >= 0 ? p.zmax : 2 * static_cast<int>(p.heights.size()) + 2;
}

// Boards used by the battery for one case.
std::vector<SpecializationParams> battery_boards(SpecializationCase c, int step) {
  std::vector<SpecializationParams> out;
  const bool attacking = c == SpecializationCase::JAttack || c == SpecializationCase::MRook;
  const int hmax = c == SpecializationCase::File ? 3 : attacking ? 3 * step + 1 : 4;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& h) {
    if (!h.empty()) {
      SpecializationParams p;
      p.heights = h;
      p.J = step;
      p.m = step;
      p.alpha = step;
      try {
        check_shape(c, p);
        out.push_back(p);
      } catch (const ValidationError&) {
      }
    }
    if (h.size() == 4) return;
    for (int x = 0; x <= hmax; ++x) {
      h.push_back(x);
      grow(h);
      h.pop_back();
    }
  };
  std::vector<int> h;
  grow(h);
  return out;
}

}  // namespace

VerificationReport verify_specialization(SpecializationCase c, const SpecializationParams& params,
                                         EngineKind kind, const VerifyOptions& options) {
  substitute(c, params);  // validate before sampling
  const int zmax = default_zmax(params);
  if (zmax > 16) throw SizeError("specialization z range is limited to 0..16");
  return run_sampled("specialization." + to_string(c), kind, options, options.samples,
                     [&](const ParamPoint& pt) {
                       SampleOutcome o;
                       o.instances = zmax + 1;
                       o.residual = adaptive_residual(
                           [&](auto prec) {
                             using Real = typename decltype(prec)::type;
                             return specialization_residual(c, params, zmax,
                                                            make_engine<Real>(kind, pt));
                           },
                           options.tolerance, o.escalated);
                       return o;
                     });
}

std::vector<VerificationReport> verify_specialization_battery(const VerifyOptions& options) {
  struct Family {
    SpecializationCase c;
    std::vector<int> steps;
  };
  const Family families[] = {
      {SpecializationCase::Rook, {1}},      {SpecializationCase::GR, {1}},
      {SpecializationCase::File, {1}},      {SpecializationCase::JAttack, {1, 2, 3}},
      {SpecializationCase::MRook, {2, 3}},  {SpecializationCase::Alpha, {0, 1, 2, 3}},
  };
  std::vector<VerificationReport> out;
  for (auto [kind, samples] : {std::pair{EngineKind::Elliptic, 5}, std::pair{EngineKind::Q, 5},
                               std::pair{EngineKind::Classical, 1}}) {
    VerifyOptions o = options;
    if (kind == EngineKind::Q) o.tolerance = std::min(o.tolerance, 1e-10);
    if (kind == EngineKind::Classical) o.tolerance = std::min(o.tolerance, 1e-12);
    for (const Family& f : families) {
      std::vector<SpecializationParams> boards;
      for (int step : f.steps) {
        auto part = battery_boards(f.c, step);
        // Elliptic evaluation is the expensive part; thin the board list.
        if (kind == EngineKind::Elliptic) {
          std::vector<SpecializationParams> thin;
          for (std::size_t i = 0; i < part.size(); i += 7) thin.push_back(part[i]);
          part = std::move(thin);
        }
        boards.insert(boards.end(), part.begin(), part.end());
      }
      const std::string id = to_string(kind) + ".specialization." + to_string(f.c);
      out.push_back(run_sampled(id, kind, o, samples, [&](const ParamPoint& pt) {
        SampleOutcome so;
        for (const auto& p : boards) {
          ++so.instances;
          const int zmax = default_zmax(p);
          const double r = adaptive_residual(
              [&](auto prec) {
                using Real = typename decltype(prec)::type;
                return specialization_residual(f.c, p, zmax, make_engine<Real>(kind, pt));
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
