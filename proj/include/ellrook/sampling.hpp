#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

#include <json.hpp>

#include "ellrook/weights.hpp"

namespace ellrook {

// Parameter values in double precision; higher-precision engines are built
// from the same (exactly representable) values.
struct ParamPoint {
  std::complex<double> a{1.0};
  std::complex<double> b{1.0};
  std::complex<double> q{1.0};
  std::complex<double> p{0.0};
};

nlohmann::json point_to_json(const ParamPoint& point, EngineKind kind);

template <class Real>
WeightEngine<Real> make_engine(EngineKind kind, const ParamPoint& point);

// Mixes a label into a base seed (splitmix64 over FNV-1a of the label), so
// each report and each sample index gets an independent, order-free stream.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index = 0);

class ParamSampler {
 public:
  explicit ParamSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, 1) from the top 53 bits; identical on every platform.
  double unit();
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::complex<double> annulus(double rmin, double rmax);
  std::complex<double> disk(double rmax);  // uniform by area

  // a, b, q on 0.5 <= |.| <= 2; p in |p| <= 0.5. Unused fields keep defaults.
  ParamPoint draw(EngineKind kind);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ellrook
