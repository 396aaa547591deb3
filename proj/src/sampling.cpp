#include "ellrook/sampling.hpp"

#include <numbers>

namespace ellrook {

nlohmann::json point_to_json(const ParamPoint& point, EngineKind kind) {
  auto c = [](std::complex<double> z) { return nlohmann::json::array({z.real(), z.imag()}); };
  switch (kind) {
    case EngineKind::Elliptic:
      return {{"a", c(point.a)}, {"b", c(point.b)}, {"q", c(point.q)}, {"p", c(point.p)}};
    case EngineKind::AQ: return {{"a", c(point.a)}, {"q", c(point.q)}};
    case EngineKind::Q: return {{"q", c(point.q)}};
    case EngineKind::Classical: return nlohmann::json::object();
  }
  return nlohmann::json::object();
}

template <class Real>
WeightEngine<Real> make_engine(EngineKind kind, const ParamPoint& point) {
  auto c = [](std::complex<double> z) { return Complex<Real>(Real(z.real()), Real(z.imag())); };
  switch (kind) {
    case EngineKind::Elliptic: {
      EllipticParams<Real> params;
      params.a = c(point.a);
      params.b = c(point.b);
      params.q = c(point.q);
      params.p = c(point.p);
      return WeightEngine<Real>::elliptic(params);
    }
    case EngineKind::AQ: return WeightEngine<Real>::aq(c(point.a), c(point.q));
    case EngineKind::Q: return WeightEngine<Real>::q_only(c(point.q));
    case EngineKind::Classical: return WeightEngine<Real>::classical();
  }
  return WeightEngine<Real>::classical();
}

template WeightEngine<double> make_engine<double>(EngineKind, const ParamPoint&);
template WeightEngine<Quad> make_engine<Quad>(EngineKind, const ParamPoint&);

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(seed ^ h) + index);
}

double ParamSampler::unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

std::complex<double> ParamSampler::annulus(double rmin, double rmax) {
  const double r = uniform(rmin, rmax);
  const double phase = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(r, phase);
}

std::complex<double> ParamSampler::disk(double rmax) {
  const double r = rmax * std::sqrt(unit());
  const double phase = uniform(0.0, 2.0 * std::numbers::pi);
  return std::polar(r, phase);
}

ParamPoint ParamSampler::draw(EngineKind kind) {
  ParamPoint point;
  switch (kind) {
    case EngineKind::Elliptic:
      point.a = annulus(0.5, 2.0);
      point.b = annulus(0.5, 2.0);
      point.q = annulus(0.5, 2.0);
      point.p = disk(0.5);
      break;
    case EngineKind::AQ:
      point.a = annulus(0.5, 2.0);
      point.q = annulus(0.5, 2.0);
      break;
    case EngineKind::Q:
      point.q = annulus(0.5, 2.0);
      break;
    case EngineKind::Classical:
      break;
  }
  return point;
}

}  // namespace ellrook
