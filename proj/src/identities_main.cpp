#include <algorithm>
#include <optional>

#include "ellrook/cell_weights.hpp"
#include "ellrook/errors.hpp"
#include "ellrook/identities.hpp"
#include "ellrook/placements.hpp"
#include "ellrook/rook_numbers.hpp"
#include "harness.hpp"

namespace ellrook {

using detail::adaptive_residual;
using detail::Precision;
using detail::run_sampled;
using detail::SampleOutcome;

const std::vector<SignPattern>& grid_sign_patterns() {
  static const std::vector<SignPattern> patterns = {
      {{1, 1, 1, 1}, {1, 1, 1, 1}},
      {{1, 1, 1, 1}, {-1, -1, -1, -1}},
      {{-1, -1, -1, -1}, {1, 1, 1, 1}},
      {{-1, -1, -1, -1}, {-1, -1, -1, -1}},
      {{1, -1, 1, -1}, {1, -1, -1, -1}},
      {{-1, 1, -1, 1}, {-1, 1, 1, 1}},
      {{1, 1, -1, -1}, {1, -1, 1, -1}},
      {{-1, -1, 1, 1}, {-1, 1, -1, 1}},
  };
  return patterns;
}

namespace {

// [z + x] under (a q^{-2x}, b q^{-x}): the factor attached to a column of
// signed height x.
template <class Real>
Complex<Real> shifted_number(const WeightEngine<Real>& e, int z, int x) {
  return e.shifted(-2 * x, -x).number(z + x);
}

template <class Real>
struct MainResiduals {
  double lemma = 0.0;
  double theorem = 0.0;
  double two_way = 0.0;
};

// Both product formulas for z = 0..zmax, given MR and R of the board.
// number(x) and shifted(z, x) supply [x] and the shifted numbers.
template <class Real, class Number, class Shifted>
MainResiduals<Real> product_residuals(const AugmentedBoard& board,
                                      const std::vector<Complex<Real>>& mr,
                                      const std::vector<Complex<Real>>& r, int zmin, int zmax,
                                      Number&& number, Shifted&& shifted) {
  using V = Complex<Real>;
  const int n = board.size();
  MainResiduals<Real> out;
  for (int z = zmin; z <= zmax; ++z) {
    const V zn = number(z);
    V lhs1(1), lhs2(1);
    for (int i = 1; i <= n; ++i) {
      const int sb = board.sgn(i) * board.b(i);
      lhs1 *= zn - number(-sb);
      lhs2 *= shifted(z, sb);
    }
    V rhs1(0), rhs2(0), fall1(1), fall2(1);
    for (int k = 0; k <= n; ++k) {
      if (k > 0) {
        const int ab = board.signed_partial(k);
        fall1 *= zn - number(-ab);
        fall2 *= shifted(z, ab);
      }
      rhs1 += mr[n - k] * fall1;
      rhs2 += r[n - k] * fall2;
    }
    out.lemma = std::max(out.lemma, relative_residual(lhs1, rhs1));
    out.theorem = std::max(out.theorem, relative_residual(lhs2, rhs2));
  }
  return out;
}

// Weighted sum over all extended placements against the first product.
template <class Real>
double two_way_residual(const AugmentedBoard& board, int z, const WeightEngine<Real>& e) {
  using V = Complex<Real>;
  const ExtendedBoard ext = make_extended(board, z);
  const WeightedBoard<Real> weighted(ext, e);
  V total(0);
  for_each_extended(ext, [&](const Placement& p) {
    V w(1);
    for (const Cell& c : p.rooks) w *= weighted.weight(c);
    total += w;
  });
  V lhs(1);
  for (int i = 1; i <= board.size(); ++i) lhs *= e.number(z) - e.number(-board.sgn(i) * board.b(i));
  return relative_residual(lhs, total);
}

template <class Real>
MainResiduals<Real> single_board(const AugmentedBoard& board, int z, const WeightEngine<Real>& raw,
                                 bool with_two_way) {
  const int span = 2 * (board.partial(board.size()) + z + 4);
  const auto e = raw.with_weight_cache(-span, span);
  const WeightedBoard<Real> weighted(make_extended(board, 0), e);
  const auto mr = mr_coefficients(weighted);
  const auto r = r_from_mr(board, mr, e);
  auto out = product_residuals<Real>(
      board, mr, r, z, z, [&](int x) { return e.number(x); },
      [&](int zz, int x) { return shifted_number(e, zz, x); });
  if (with_two_way) out.two_way = two_way_residual(board, z, e);
  return out;
}

bool two_way_feasible(const AugmentedBoard& board, int z) {
  return make_extended(board, z).cell_count() <= kMaxEnumerationCells;
}

constexpr int kTableRange = 16;

// Per-sample tables for the grid: W and [x] on [-16, 16], and the shifted
// numbers for signed heights within the grid's range.
template <class Real>
class GridTables {
 public:
  using V = Complex<Real>;

  GridTables(const WeightEngine<Real>& raw, int xrange, int zmax)
      : engine_(raw.with_weight_cache(-kTableRange, kTableRange)), xrange_(xrange) {
    for (int x = -kTableRange; x <= kTableRange; ++x) numbers_.push_back(engine_.number(x));
    shifted_.resize(zmax + 1);
    for (int x = -xrange; x <= xrange; ++x) {
      const auto sh = engine_.shifted(-2 * x, -x);
      for (int z = 0; z <= zmax; ++z) shifted_[z].push_back(sh.number(z + x));
    }
  }

  const WeightEngine<Real>& engine() const { return engine_; }
  V number(int x) const { return numbers_.at(x + kTableRange); }
  V shifted(int z, int x) const { return shifted_.at(z).at(x + xrange_); }

 private:
  WeightEngine<Real> engine_;
  int xrange_;
  std::vector<V> numbers_;
  std::vector<std::vector<V>> shifted_;
};

template <class Real>
MainResiduals<Real> grid_instance(const AugmentedBoard& board, const GridTables<Real>& tables,
                                  int zmax) {
  const WeightedBoard<Real> weighted(make_extended(board, 0), tables.engine());
  const auto mr = mr_coefficients(weighted);
  const auto r = r_from_mr(board, mr, tables.engine());
  return product_residuals<Real>(
      board, mr, r, 0, zmax, [&](int x) { return tables.number(x); },
      [&](int z, int x) { return tables.shifted(z, x); });
}

// Every (A, B) with n <= max_n and entries <= max_entry for one sign pattern.
template <class F>
void for_each_grid_board(const MainGridConfig& grid, const SignPattern& pat, F&& f) {
  for (int n = 1; n <= grid.max_n; ++n) {
    SignFunctions signs{{pat.sgn.begin(), pat.sgn.begin() + n},
                        {pat.sgnbar.begin(), pat.sgnbar.begin() + n}};
    const int base = grid.max_entry + 1;
    long long total = 1;
    for (int i = 0; i < 2 * n; ++i) total *= base;
    std::vector<int> A(n), B(n);
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < n; ++i, c /= base) A[i] = static_cast<int>(c % base);
      for (int i = 0; i < n; ++i, c /= base) B[i] = static_cast<int>(c % base);
      f(make_augmented(A, B, signs));
    }
  }
}

struct GridCell {
  double lemma = 0.0;
  double theorem = 0.0;
  long long instances = 0;
  long long escalated = 0;
};

std::vector<VerificationReport> run_grid(const MainGridConfig& grid, const VerifyOptions& options,
                                         const std::string& prefix, int samples) {
  if (grid.max_n < 1 || grid.max_n > 4) throw SizeError("grid max_n must be 1..4");
  if (grid.max_entry < 0 || grid.max_entry > 3) throw SizeError("grid max_entry must be 0..3");
  if (grid.max_z < 0 || grid.max_z > 8) throw SizeError("grid max_z must be 0..8");
  const auto& patterns = grid_sign_patterns();
  const int xrange = grid.max_n * grid.max_entry;
  const std::string engine = to_string(grid.kind);

  // One parameter point per sample, shared by every board of the grid.
  std::vector<ParamPoint> points(samples);
  std::vector<std::optional<GridTables<double>>> tables(samples);
  detail::parallel_for(samples, options.threads, [&](std::size_t i) {
    ParamSampler sampler(derive_seed(options.seed, prefix + ".grid", i));
    for (int attempt = 0;; ++attempt) {
      points[i] = sampler.draw(grid.kind);
      try {
        tables[i].emplace(make_engine<double>(grid.kind, points[i]), xrange, grid.max_z);
        return;
      } catch (const SingularError& e) {
        if (attempt >= options.retries)
          throw SingularExhaustedError(prefix + ": no regular parameter point after " +
                                       std::to_string(attempt + 1) + " draws");
      }
    }
  });

  const std::size_t tasks = static_cast<std::size_t>(samples) * patterns.size();
  std::vector<GridCell> cells(tasks);
  detail::parallel_for(tasks, options.threads, [&](std::size_t task) {
    const std::size_t s = task / patterns.size();
    const SignPattern& pat = patterns[task % patterns.size()];
    std::optional<GridTables<Quad>> quad;
    GridCell& cell = cells[task];
    for_each_grid_board(grid, pat, [&](const AugmentedBoard& board) {
      ++cell.instances;
      double lemma, theorem;
      try {
        const auto r = grid_instance(board, *tables[s], grid.max_z);
        lemma = r.lemma;
        theorem = r.theorem;
      } catch (const SingularError&) {
        lemma = theorem = std::numeric_limits<double>::infinity();
      }
      if (!(lemma < options.tolerance && theorem < options.tolerance)) {
        ++cell.escalated;
        if (!quad) quad.emplace(make_engine<Quad>(grid.kind, points[s]), xrange, grid.max_z);
        const auto r = grid_instance(board, *quad, grid.max_z);
        lemma = r.lemma;
        theorem = r.theorem;
      }
      cell.lemma = std::max(cell.lemma, lemma);
      cell.theorem = std::max(cell.theorem, theorem);
    });
  });

  std::vector<VerificationReport> out(2);
  out[0].identity_id = prefix + ".lemma";
  out[1].identity_id = prefix + ".theorem";
  for (auto& rep : out) {
    rep.engine = engine;
    rep.seed = options.seed;
    rep.tolerance = options.tolerance;
  }
  for (int s = 0; s < samples; ++s) {
    SampleResult lemma, theorem;
    lemma.index = theorem.index = s;
    lemma.point = theorem.point = point_to_json(points[s], grid.kind);
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      const GridCell& c = cells[s * patterns.size() + p];
      lemma.residual = std::max(lemma.residual, c.lemma);
      theorem.residual = std::max(theorem.residual, c.theorem);
      lemma.escalated += c.escalated;
      theorem.escalated += c.escalated;
      out[0].instances += c.instances;
      out[1].instances += c.instances;
    }
    out[0].samples.push_back(lemma);
    out[1].samples.push_back(theorem);
  }
  for (auto& rep : out) rep.finalize();
  return out;
}

}  // namespace

VerificationReport verify_main(const AugmentedBoard& board, int z, EngineKind kind,
                               const VerifyOptions& options) {
  if (board.size() < 1 || board.size() > 8) throw SizeError("main identity needs 1 <= n <= 8");
  if (z < 0 || z > 8) throw SizeError("main identity needs 0 <= z <= 8");
  const bool two_way = two_way_feasible(board, z);
  return run_sampled("main.board", kind, options, options.samples, [&](const ParamPoint& pt) {
    SampleOutcome o;
    o.instances = 1;
    o.residual = adaptive_residual(
        [&](auto prec) {
          using Real = typename decltype(prec)::type;
          const auto r = single_board(board, z, make_engine<Real>(kind, pt), two_way);
          return std::max({r.lemma, r.theorem, r.two_way});
        },
        options.tolerance, o.escalated);
    return o;
  });
}

std::vector<VerificationReport> verify_main_grid(const MainGridConfig& grid,
                                                 const VerifyOptions& options) {
  return run_grid(grid, options, grid.kind == EngineKind::Elliptic ? "main" : to_string(grid.kind) + ".main",
                  options.samples);
}

std::vector<VerificationReport> verify_main_battery(const VerifyOptions& options) {
  std::vector<VerificationReport> out = run_grid(MainGridConfig{}, options, "main", 20);

  // Direct sum over extended placements on a smaller grid.
  MainGridConfig small{2, 3, 3, EngineKind::Elliptic};
  out.push_back(run_sampled("main.two_way", EngineKind::Elliptic, options, 3,
                            [&](const ParamPoint& pt) {
                              SampleOutcome o;
                              for (const auto& pat : grid_sign_patterns())
                                for_each_grid_board(small, pat, [&](const AugmentedBoard& b) {
                                  for (int z = 0; z <= small.max_z; ++z) {
                                    ++o.instances;
                                    const double r = adaptive_residual(
                                        [&](auto prec) {
                                          using Real = typename decltype(prec)::type;
                                          return two_way_residual(
                                              b, z, make_engine<Real>(EngineKind::Elliptic, pt));
                                        },
                                        options.tolerance, o.escalated);
                                    o.residual = std::max(o.residual, r);
                                  }
                                });
                              return o;
                            }));

  // A larger board whose extended board (52 cells) is still enumerable.
  const auto figure = make_augmented({1, 2, 1, 2}, {1, 2, 2, 3}, SignFunctions::uniform(4, 1, 1));
  VerifyOptions o = options;
  o.samples = 20;
  auto fig = verify_main(figure, 4, EngineKind::Elliptic, o);
  fig.identity_id = "main.example_board";
  out.push_back(std::move(fig));
  return out;
}

std::vector<VerificationReport> verify_degeneration_battery(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  for (auto [kind, samples] : {std::pair{EngineKind::AQ, 5}, std::pair{EngineKind::Q, 5},
                               std::pair{EngineKind::Classical, 1}}) {
    MainGridConfig grid;
    grid.kind = kind;
    VerifyOptions o = options;
    // The plain-q instances are held to a tighter bound; integer instances
    // must come out exact up to rounding.
    if (kind == EngineKind::Q) o.tolerance = std::min(o.tolerance, 1e-10);
    if (kind == EngineKind::Classical) o.tolerance = std::min(o.tolerance, 1e-12);
    auto part = run_grid(grid, o, to_string(kind) + ".main", samples);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace ellrook
