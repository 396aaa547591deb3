#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellrook/boards.hpp"
#include "ellrook/sampling.hpp"
#include "ellrook/weights.hpp"

namespace ellrook {

struct SampleResult {
  int index = 0;
  nlohmann::json point;  // parameter values, complex as [re, im]
  double residual = 0.0;
  // Instances under this sample re-evaluated in quad precision because the
  // double residual reached the tolerance.
  long long escalated = 0;
};

struct VerificationReport {
  std::string identity_id;
  std::string engine;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::vector<SampleResult> samples;
  double max_residual = 0.0;
  bool passed = false;
  long long instances = 0;  // identity instances checked across all samples

  // Recomputes max_residual and passed from the samples.
  void finalize();
};

nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& doc);

// One row per report: identity_id,engine,seed,samples,instances,escalated,
// max_residual,tolerance,passed
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

struct VerifyOptions {
  std::uint64_t seed = 0;
  int samples = 20;
  double tolerance = 1e-9;
  int threads = 1;
  int retries = 10;  // fresh draws allowed per singular sample
};

// Both forms of the main product formula for one board, plus the direct
// weighted sum over extended placements when the extended board is small
// enough to enumerate.
VerificationReport verify_main(const AugmentedBoard& board, int z, EngineKind kind,
                               const VerifyOptions& options);

enum class SpecializationCase { Rook, File, JAttack, GR, MRook, Alpha };

std::string to_string(SpecializationCase c);
SpecializationCase specialization_from_string(const std::string& name);

struct SpecializationParams {
  std::vector<int> heights;  // the skyline / Ferrers board b_1..b_n
  int J = 1;                 // jattack
  int m = 2;                 // mrook
  int alpha = 2;             // alpha
  int zmax = -1;             // z range 0..zmax; default 2n + 2
};

VerificationReport verify_specialization(SpecializationCase c,
                                         const SpecializationParams& params,
                                         EngineKind kind, const VerifyOptions& options);

enum class StirlingCase { Inverse, Conv2a, Conv2b, Conv1a, Conv1b, Generating2, Generating1, Board };

std::string to_string(StirlingCase c);
StirlingCase stirling_case_from_string(const std::string& name);

// size bounds n (inverse, generating, conv2b, conv1b), m + n (conv2a,
// conv1a) or the board size (board, at most 4).
VerificationReport verify_stirling(StirlingCase c, int size, int I, int J, EngineKind kind,
                                   const VerifyOptions& options);

// Closed form, recursion and a;q-engine board coefficient at one point.
VerificationReport verify_alpha2(int n, int k, std::complex<double> a, std::complex<double> q,
                                 double tolerance = 1e-9);

// All n <= nmax, all k, at options.samples sampled (a, q).
VerificationReport verify_alpha2_sampled(int nmax, const VerifyOptions& options);

// Exhaustive grid of boards for the main identities: n <= max_n, entries
// a_i, b_i <= max_entry, z <= max_z, four uniform and four mixed sign patterns.
struct MainGridConfig {
  int max_n = 4;
  int max_entry = 3;
  int max_z = 6;
  EngineKind kind = EngineKind::Elliptic;
};

// Returns {lemma report, theorem report}.
std::vector<VerificationReport> verify_main_grid(const MainGridConfig& grid,
                                                 const VerifyOptions& options);

// The sign patterns of the grid, each of length 4 (truncated per board).
struct SignPattern {
  std::vector<int> sgn;
  std::vector<int> sgnbar;
};
const std::vector<SignPattern>& grid_sign_patterns();

// Fixed-size batteries (their sample counts are built in; options.samples is
// not consulted). verify_all runs them in this order.
std::vector<VerificationReport> verify_theta_battery(const VerifyOptions& options);
std::vector<VerificationReport> verify_weight_battery(const VerifyOptions& options);
std::vector<VerificationReport> verify_binomial_battery(const VerifyOptions& options);
std::vector<VerificationReport> verify_scheme_battery(const VerifyOptions& options);
std::vector<VerificationReport> verify_main_battery(const VerifyOptions& options);
std::vector<VerificationReport> verify_degeneration_battery(const VerifyOptions& options);
std::vector<VerificationReport> verify_specialization_battery(const VerifyOptions& options);
std::vector<VerificationReport> verify_stirling_battery(const VerifyOptions& options);
std::vector<VerificationReport> verify_alpha2_battery(const VerifyOptions& options);

// The full battery behind `verify all`.
std::vector<VerificationReport> verify_all(const VerifyOptions& options);

}  // namespace ellrook
