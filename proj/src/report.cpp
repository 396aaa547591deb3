#include <cmath>
#include <limits>
#include <sstream>

#include "ellrook/errors.hpp"
#include "ellrook/identities.hpp"

namespace ellrook {

void VerificationReport::finalize() {
  max_residual = 0.0;
  bool finite = true;
  for (const SampleResult& s : samples) {
    if (!std::isfinite(s.residual)) finite = false;
    else max_residual = std::max(max_residual, s.residual);
  }
  if (!finite) max_residual = std::numeric_limits<double>::infinity();
  passed = finite && max_residual < tolerance;
}

namespace {

// JSON has no infinity; failures that overflowed are written as null.
nlohmann::json number_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

double number_from(const nlohmann::json& v) {
  return v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>();
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json samples = nlohmann::json::array();
  long long escalated = 0;
  for (const SampleResult& s : report.samples) {
    samples.push_back({{"index", s.index},
                       {"point", s.point},
                       {"residual", number_or_null(s.residual)},
                       {"escalated", s.escalated}});
    escalated += s.escalated;
  }
  return {{"identity_id", report.identity_id},
          {"engine", report.engine},
          {"seed", report.seed},
          {"tolerance", report.tolerance},
          {"samples", std::move(samples)},
          {"max_residual", number_or_null(report.max_residual)},
          {"passed", report.passed},
          {"instances", report.instances},
          {"escalated", escalated}};
}

VerificationReport report_from_json(const nlohmann::json& doc) {
  try {
    VerificationReport r;
    r.identity_id = doc.at("identity_id").get<std::string>();
    r.engine = doc.value("engine", std::string());
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.tolerance = doc.at("tolerance").get<double>();
    for (const auto& s : doc.at("samples")) {
      SampleResult out;
      out.index = s.at("index").get<int>();
      out.point = s.value("point", nlohmann::json::object());
      out.residual = number_from(s.at("residual"));
      out.escalated = s.value("escalated", 0LL);
      r.samples.push_back(std::move(out));
    }
    r.instances = doc.value("instances", 0LL);
    r.max_residual = number_from(doc.at("max_residual"));
    r.passed = doc.at("passed").get<bool>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out.precision(17);
  out << "identity_id,engine,seed,samples,instances,escalated,max_residual,tolerance,passed\n";
  for (const VerificationReport& r : reports) {
    long long escalated = 0;
    for (const SampleResult& s : r.samples) escalated += s.escalated;
    out << r.identity_id << ',' << r.engine << ',' << r.seed << ',' << r.samples.size() << ','
        << r.instances << ',' << escalated << ',' << r.max_residual << ',' << r.tolerance << ','
        << (r.passed ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace ellrook
