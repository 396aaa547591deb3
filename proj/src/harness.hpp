#pragma once

// Shared plumbing for the verifiers: deterministic parallel loops, adaptive
// precision, and seeded sampling with singular-draw retries.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "ellrook/errors.hpp"
#include "ellrook/identities.hpp"
#include "ellrook/sampling.hpp"

namespace ellrook::detail {

// Runs body(i) for i in [0, count). Work is handed out dynamically, but each
// index writes only its own output slot, so results never depend on the
// number of threads. The first exception (by index) is rethrown.
template <class Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

template <class Real>
using Precision = std::type_identity<Real>;

// f(Precision<Real>) returns a residual. Falls back to quad when the double
// result is not below tol (or is NaN).
template <class F>
double adaptive_residual(F&& f, double tol, long long& escalated) {
  double r = f(Precision<double>{});
  if (r < tol) return r;
  ++escalated;
  return f(Precision<Quad>{});
}

struct SampleOutcome {
  double residual = 0.0;
  long long instances = 0;
  long long escalated = 0;
};

// Evaluates `samples` independent samples. Sample i draws from its own
// stream derive_seed(seed, id, i); a SingularError triggers a fresh draw from
// the same stream, up to options.retries times.
//   draw(ParamSampler&) -> std::pair<Point, nlohmann::json>
//   eval(const Point&)  -> SampleOutcome
template <class Draw, class Eval>
VerificationReport run_samples(const std::string& id, const std::string& engine,
                               const VerifyOptions& options, int samples, Draw&& draw,
                               Eval&& eval) {
  VerificationReport report;
  report.identity_id = id;
  report.engine = engine;
  report.seed = options.seed;
  report.tolerance = options.tolerance;
  report.samples.resize(samples);
  std::vector<long long> instances(samples, 0);
  parallel_for(static_cast<std::size_t>(samples), options.threads, [&](std::size_t i) {
    ParamSampler sampler(derive_seed(options.seed, id, i));
    for (int attempt = 0;; ++attempt) {
      auto [point, json] = draw(sampler);
      try {
        const SampleOutcome out = eval(point);
        SampleResult& s = report.samples[i];
        s.index = static_cast<int>(i);
        s.point = std::move(json);
        s.residual = out.residual;
        s.escalated = out.escalated;
        instances[i] = out.instances;
        return;
      } catch (const SingularError& e) {
        if (attempt >= options.retries)
          throw SingularExhaustedError(id + ": no regular parameter point after " +
                                       std::to_string(attempt + 1) + " draws (" + e.what() +
                                       ")");
      }
    }
  });
  for (long long c : instances) report.instances += c;
  report.finalize();
  return report;
}

// Samples engine parameters of the given kind.
template <class Eval>
VerificationReport run_sampled(const std::string& id, EngineKind kind,
                               const VerifyOptions& options, int samples, Eval&& eval) {
  return run_samples(
      id, to_string(kind), options, samples,
      [kind](ParamSampler& s) {
        ParamPoint point = s.draw(kind);
        return std::make_pair(point, point_to_json(point, kind));
      },
      std::forward<Eval>(eval));
}

}  // namespace ellrook::detail
