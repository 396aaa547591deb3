#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ellrook/boards.hpp"
#include "ellrook/errors.hpp"
#include "ellrook/identities.hpp"
#include "ellrook/placements.hpp"
#include "ellrook/rook_numbers.hpp"
#include "ellrook/sampling.hpp"
#include "ellrook/weights.hpp"

namespace ellrook::cli {

namespace {

using nlohmann::json;

struct Settings {
  std::string config;
  std::string format = "json";
  std::string output;

  // engine
  std::string engine = "elliptic";
  std::string a, b, q, p, x;

  // indices
  std::optional<int> n, k, z, nmax;
  int I = 0, J = 1, m = 2, alpha = 2;
  std::optional<int> zmax;
  int size = 8;
  std::string stirling_kind = "second";
  std::string method = "closed";
  std::string case_name;

  // boards
  std::string board;
  std::vector<int> A, B, sgn, sgnbar;

  // verification
  std::optional<std::uint64_t> seed;
  int samples = 20;
  double tolerance = 1e-9;
  int threads = 1;
  int retries = 10;

  std::string input;
};

std::complex<double> parse_complex(const std::string& text, const char* name) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re_text = text.substr(0, comma);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    double im = 0.0;
    if (comma != std::string::npos) {
      const std::string im_text = text.substr(comma + 1);
      im = std::stod(im_text, &used);
      if (used != im_text.size()) throw std::invalid_argument(text);
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw ValidationError(std::string("--") + name + " expects 're' or 're,im', got '" + text +
                          "'");
  }
}

int require(const std::optional<int>& v, const char* name) {
  if (!v) throw ValidationError(std::string("--") + name + " is required");
  return *v;
}

ParamPoint point_from(const Settings& s, EngineKind kind) {
  ParamPoint pt;
  auto field = [&](const std::string& text, const char* name, bool used,
                   std::complex<double> fallback, bool required) {
    if (!used) {
      if (!text.empty())
        throw ValidationError(std::string("--") + name + " is not a parameter of the " +
                              to_string(kind) + " engine");
      return fallback;
    }
    if (text.empty()) {
      if (required)
        throw ValidationError(std::string("--") + name + " is required for the " +
                              to_string(kind) + " engine");
      return fallback;
    }
    return parse_complex(text, name);
  };
  const bool ell = kind == EngineKind::Elliptic;
  const bool aq = ell || kind == EngineKind::AQ;
  const bool q = aq || kind == EngineKind::Q;
  pt.a = field(s.a, "a", aq, 1.0, true);
  pt.b = field(s.b, "b", ell, 1.0, true);
  pt.q = field(s.q, "q", q, 1.0, true);
  pt.p = field(s.p, "p", ell, 0.0, false);
  return pt;
}

WeightEngine<double> engine_from(const Settings& s) {
  const EngineKind kind = engine_kind_from_string(s.engine);
  return make_engine<double>(kind, point_from(s, kind));
}

json value_json(std::complex<double> v) { return {{"re", v.real()}, {"im", v.imag()}}; }

std::string number_text(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

struct Row {
  int n, k;
  std::complex<double> v;
};

void emit_rows(const Settings& s, const std::vector<Row>& rows, std::ostream& out) {
  if (s.format == "csv") {
    out << "n,k,re,im\n";
    for (const Row& r : rows)
      out << r.n << ',' << r.k << ',' << number_text(r.v.real()) << ','
          << number_text(r.v.imag()) << '\n';
    return;
  }
  json arr = json::array();
  for (const Row& r : rows)
    arr.push_back({{"n", r.n}, {"k", r.k}, {"re", r.v.real()}, {"im", r.v.imag()}});
  out << arr.dump() << '\n';
}

void emit_value(const Settings& s, std::complex<double> v, std::ostream& out) {
  if (s.format == "csv") {
    out << "re,im\n" << number_text(v.real()) << ',' << number_text(v.imag()) << '\n';
    return;
  }
  out << value_json(v).dump() << '\n';
}

// Single (n, k) value, or the whole row k = 0..n when --k is absent.
template <class F>
void emit_triangle_row(const Settings& s, F&& value, std::ostream& out) {
  const int n = require(s.n, "n");
  if (s.k) {
    if (s.format == "csv") {
      emit_rows(s, {{n, *s.k, value(n, *s.k)}}, out);
    } else {
      emit_value(s, value(n, *s.k), out);
    }
    return;
  }
  std::vector<Row> rows;
  for (int k = 0; k <= n; ++k) rows.push_back({n, k, value(n, k)});
  emit_rows(s, rows, out);
}

int eval_command(const std::string& what, const Settings& s, std::ostream& out) {
  if (what == "theta") {
    if (s.x.empty()) throw ValidationError("--x is required");
    const auto x = parse_complex(s.x, "x");
    const auto p = s.p.empty() ? std::complex<double>(0.0) : parse_complex(s.p, "p");
    if (std::abs(p) > EllipticParams<double>::max_nome)
      throw DomainError("nome modulus must be at most 0.95");
    if (x == std::complex<double>(0.0)) throw DomainError("theta is undefined at x = 0");
    emit_value(s, theta(x, p, default_truncation_eps<double>(), 4096), out);
    return kPass;
  }
  if (what == "alpha2") {
    const int n = require(s.n, "n");
    if (n < 1 || n > 8) throw SizeError("alpha2 needs 1 <= n <= 8");
    if (s.a.empty() || s.q.empty()) throw ValidationError("--a and --q are required");
    const auto a = parse_complex(s.a, "a");
    const auto q = parse_complex(s.q, "q");
    std::vector<std::complex<double>> row;
    if (s.method == "closed") {
      for (int k = 0; k <= n; ++k) row.push_back(alpha2_closed_form(n, k, a, q));
    } else if (s.method == "recursion") {
      row = alpha2_recursion_table(n, a, q)[n];
    } else if (s.method == "board") {
      row = r_coefficients(alpha2_board(n), WeightEngine<double>::aq(a, q));
    } else {
      throw ValidationError("--method must be closed, recursion or board");
    }
    emit_triangle_row(
        s,
        [&](int, int k) {
          if (k < 0 || k > n) throw IndexError("k must lie in 0..n");
          return row[k];
        },
        out);
    return kPass;
  }
  const auto engine = engine_from(s);
  if (what == "W" || what == "w") {
    const int k = require(s.k, "k");
    emit_value(s, what == "W" ? engine.big_weight(k) : engine.small_weight(k), out);
  } else if (what == "number") {
    emit_value(s, engine.number(require(s.z, "z")), out);
  } else if (what == "binomial") {
    const int n = require(s.n, "n");
    if (n < 0) throw DomainError("n must be nonnegative");
    emit_triangle_row(s, [&](int nn, int k) { return ell_binomial(engine, nn, k); }, out);
  } else if (what == "stirling") {
    const int n = require(s.n, "n");
    if (n < 0) throw DomainError("n must be nonnegative");
    if (n > 32) throw SizeError("Stirling tables are limited to n <= 32");
    std::optional<CoefficientTable<double>> table;
    if (s.stirling_kind == "second") {
      table.emplace(stirling2_table(n, s.I, s.J, engine));
    } else if (s.stirling_kind == "first") {
      table.emplace(stirling1_table(n, s.I, s.J, engine));
    } else if (s.stirling_kind == "unsigned") {
      table.emplace(unsigned_stirling1_table(n, s.I, s.J, engine));
    } else {
      throw ValidationError("--kind must be second, first or unsigned");
    }
    emit_triangle_row(s, [&](int nn, int k) { return table->at(nn, k); }, out);
  }
  return kPass;
}

BoardSpec board_from(const Settings& s) {
  BoardSpec spec;
  if (!s.board.empty()) {
    if (!s.A.empty() || !s.B.empty() || !s.sgn.empty() || !s.sgnbar.empty())
      throw ValidationError("give the board either as --board or as --A/--B, not both");
    std::ifstream in(s.board);
    if (!in) throw ValidationError("cannot read board file '" + s.board + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("board file is not valid JSON: ") + e.what());
    }
    spec = board_from_json(doc);
  } else {
    if (s.A.empty() || s.B.empty()) throw ValidationError("a board needs --board or --A and --B");
    json doc = {{"A", s.A}, {"B", s.B}};
    if (!s.sgn.empty()) doc["sgn"] = s.sgn;
    if (!s.sgnbar.empty()) doc["sgnbar"] = s.sgnbar;
    spec = board_from_json(doc);
  }
  if (s.z) {
    if (*s.z < 0) throw DomainError("z must be nonnegative");
    spec.z = *s.z;
  }
  return spec;
}

int enumerate_command(const std::string& what, const Settings& s, std::ostream& out) {
  std::vector<Placement> placements;
  int k = 0;
  if (what == "extended") {
    const BoardSpec spec = board_from(s);
    placements = enumerate_extended(make_extended(spec.board, spec.z));
    k = spec.board.size();
  } else {
    k = require(s.k, "k");
    if (what == "augmented") {
      placements = enumerate_augmented(board_from(s).board, k);
    } else {
      if (s.B.empty()) throw ValidationError("--B is required");
      for (int h : s.B)
        if (h < 0) throw DomainError("board heights must be nonnegative");
      const SkylineBoard board(s.B);
      if (what == "classic") placements = enumerate_classic(board, k);
      if (what == "file") placements = enumerate_file(board, k);
      if (what == "jattack") placements = enumerate_j_attacking(board, s.J, k);
    }
  }
  for (const Placement& pl : placements) {
    if (pl.rooks.empty()) {
      out << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < pl.rooks.size(); ++i)
      out << (i ? " " : "") << to_string(pl.rooks[i]);
    out << '\n';
  }
  json hist = json::object();
  for (const auto& [stat, count] : statistic_histogram(placements))
    hist[std::to_string(stat)] = count;
  out << json{{"k", k}, {"count", placements.size()}, {"stat_histogram", hist}}.dump() << '\n';
  return kPass;
}

VerifyOptions verify_options(const Settings& s) {
  if (!s.seed) throw ValidationError("--seed is required for verify commands");
  if (s.samples < 1 || s.samples > 10000) throw ValidationError("--samples must be 1..10000");
  if (!(s.tolerance > 0.0)) throw ValidationError("--tolerance must be positive");
  if (s.threads < 1 || s.threads > 256) throw ValidationError("--threads must be 1..256");
  if (s.retries < 0) throw ValidationError("--retries must be nonnegative");
  VerifyOptions o;
  o.seed = *s.seed;
  o.samples = s.samples;
  o.tolerance = s.tolerance;
  o.threads = s.threads;
  o.retries = s.retries;
  return o;
}

int emit_reports(const Settings& s, const std::vector<VerificationReport>& reports, bool single,
                 std::ostream& out) {
  if (s.format == "csv") {
    out << reports_to_csv(reports);
  } else if (single) {
    out << report_to_json(reports.front()).dump(2) << '\n';
  } else {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    out << arr.dump(2) << '\n';
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const VerificationReport& r) { return r.passed; });
  return ok ? kPass : kResidualFailure;
}

int verify_command(const std::string& what, const Settings& s, std::ostream& out) {
  const VerifyOptions options = verify_options(s);
  if (what == "all") return emit_reports(s, verify_all(options), false, out);
  if (what == "alpha2") {
    if (!s.a.empty() || !s.q.empty()) {
      const auto a = parse_complex(s.a, "a");
      const auto q = parse_complex(s.q, "q");
      auto report = verify_alpha2(require(s.n, "n"), require(s.k, "k"), a, q, options.tolerance);
      report.seed = options.seed;
      return emit_reports(s, {report}, true, out);
    }
    return emit_reports(s, {verify_alpha2_sampled(s.nmax.value_or(5), options)}, true, out);
  }
  const EngineKind kind = engine_kind_from_string(s.engine);
  if (what == "main") {
    const BoardSpec spec = board_from(s);
    return emit_reports(s, {verify_main(spec.board, spec.z, kind, options)}, true, out);
  }
  if (what == "specialization") {
    if (s.B.empty()) throw ValidationError("--B is required");
    SpecializationParams params;
    params.heights = s.B;
    params.J = s.J;
    params.m = s.m;
    params.alpha = s.alpha;
    params.zmax = s.zmax.value_or(-1);
    return emit_reports(
        s, {verify_specialization(specialization_from_string(s.case_name), params, kind, options)},
        true, out);
  }
  // stirling
  return emit_reports(
      s, {verify_stirling(stirling_case_from_string(s.case_name), s.size, s.I, s.J, kind, options)},
      true, out);
}

int report_command(const Settings& s, std::ostream& out) {
  if (s.input.empty()) throw ValidationError("--input is required");
  std::ifstream in(s.input);
  if (!in) throw ValidationError("cannot read report file '" + s.input + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("report file is not valid JSON: ") + e.what());
  }
  std::vector<VerificationReport> reports;
  if (doc.is_array()) {
    for (const auto& item : doc) reports.push_back(report_from_json(item));
  } else {
    reports.push_back(report_from_json(doc));
  }
  if (reports.empty()) throw ValidationError("report file holds no reports");
  // The verdict is recomputed from the sample residuals, not taken on trust.
  for (auto& r : reports) r.finalize();
  return emit_reports(s, reports, doc.is_object(), out);
}

// Option names shared by every subcommand that takes engine parameters.
void add_engine_options(CLI::App* app, Settings& s) {
  app->add_option("--engine", s.engine, "elliptic, aq, q or classical");
  app->add_option("--a", s.a, "parameter a ('re' or 're,im')");
  app->add_option("--b", s.b, "parameter b");
  app->add_option("--q", s.q, "base q");
  app->add_option("--p", s.p, "nome p, |p| <= 0.95");
}

void add_board_options(CLI::App* app, Settings& s) {
  app->add_option("--board", s.board, "board JSON file");
  app->add_option("--A", s.A, "augmentation sizes a_1..a_n")->delimiter(',');
  app->add_option("--B", s.B, "base heights b_1..b_n")->delimiter(',');
  app->add_option("--sgn", s.sgn, "signs of the base columns")->delimiter(',');
  app->add_option("--sgnbar", s.sgnbar, "signs of the augmented parts")->delimiter(',');
  app->add_option("--z", s.z, "z-part height");
}

void add_verify_options(CLI::App* app, Settings& s) {
  app->add_option("--seed", s.seed, "base seed (required)");
  app->add_option("--samples", s.samples, "parameter samples per report");
  app->add_option("--tolerance", s.tolerance, "relative residual bound");
  app->add_option("--threads", s.threads, "worker threads");
  app->add_option("--retries", s.retries, "fresh draws allowed per singular sample");
}

void add_output_options(CLI::App* app, Settings& s) {
  app->add_option("--config", s.config, "JSON file of option values; flags win");
  app->add_option("--format", s.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--output", s.output, "write the result here instead of stdout");
}

struct Command {
  std::string group, name;
  CLI::App* app;
};

std::vector<Command> build(CLI::App& app, Settings& s) {
  std::vector<Command> commands;
  auto* eval = app.add_subcommand("eval", "evaluate a single quantity");
  auto* enumerate = app.add_subcommand("enumerate", "list rook placements");
  auto* verify = app.add_subcommand("verify", "check identities at sampled parameters");
  for (auto* group : {eval, enumerate, verify}) group->require_subcommand(1);
  app.require_subcommand(1);

  for (const char* name : {"theta", "w", "W", "number", "binomial", "stirling", "alpha2"}) {
    auto* c = eval->add_subcommand(name);
    add_output_options(c, s);
    commands.push_back({"eval", name, c});
    if (std::string(name) == "theta") {
      c->add_option("--x", s.x, "argument x");
      c->add_option("--p", s.p, "nome p");
      continue;
    }
    if (std::string(name) == "alpha2") {
      c->add_option("--a", s.a, "parameter a");
      c->add_option("--q", s.q, "base q");
      c->add_option("--n", s.n, "staircase size");
      c->add_option("--k", s.k, "index; all k when absent");
      c->add_option("--method", s.method, "closed, recursion or board");
      continue;
    }
    add_engine_options(c, s);
    if (std::string(name) != "number") c->add_option("--k", s.k, "index k");
    if (std::string(name) == "number") c->add_option("--z", s.z, "argument z");
    if (std::string(name) == "binomial" || std::string(name) == "stirling")
      c->add_option("--n", s.n, "row n");
    if (std::string(name) == "stirling") {
      c->add_option("--kind", s.stirling_kind, "second, first or unsigned");
      c->add_option("--I", s.I, "offset I");
      c->add_option("--J", s.J, "step J");
    }
  }

  for (const char* name : {"classic", "file", "jattack", "augmented", "extended"}) {
    auto* c = enumerate->add_subcommand(name);
    commands.push_back({"enumerate", name, c});
    c->add_option("--config", s.config, "JSON file of option values; flags win");
    const std::string n = name;
    if (n == "augmented" || n == "extended") {
      add_board_options(c, s);
    } else {
      c->add_option("--B", s.B, "board heights b_1..b_n")->delimiter(',');
    }
    if (n != "extended") c->add_option("--k", s.k, "number of rooks");
    if (n == "jattack") c->add_option("--J", s.J, "rows attacked per column");
  }

  for (const char* name : {"main", "specialization", "stirling", "alpha2", "all"}) {
    auto* c = verify->add_subcommand(name);
    commands.push_back({"verify", name, c});
    add_output_options(c, s);
    add_verify_options(c, s);
    const std::string n = name;
    if (n == "main") {
      add_board_options(c, s);
      c->add_option("--engine", s.engine, "elliptic, aq, q or classical");
    } else if (n == "specialization") {
      c->add_option("--case", s.case_name, "rook, file, jattack, gr, mrook or alpha");
      c->add_option("--B", s.B, "board heights")->delimiter(',');
      c->add_option("--J", s.J, "attack step");
      c->add_option("--m", s.m, "m for m-rooks");
      c->add_option("--alpha", s.alpha, "alpha >= 0");
      c->add_option("--zmax", s.zmax, "largest z checked");
      c->add_option("--engine", s.engine, "elliptic, aq, q or classical");
    } else if (n == "stirling") {
      c->add_option("--case", s.case_name,
                    "inverse, conv2a, conv2b, conv1a, conv1b, generating2, generating1, board");
      c->add_option("--size", s.size, "table bound");
      c->add_option("--I", s.I, "offset I");
      c->add_option("--J", s.J, "step J");
      c->add_option("--engine", s.engine, "elliptic, aq, q or classical");
    } else if (n == "alpha2") {
      c->add_option("--a", s.a, "parameter a (single point)");
      c->add_option("--q", s.q, "base q (single point)");
      c->add_option("--n", s.n, "staircase size (single point)");
      c->add_option("--k", s.k, "index (single point)");
      c->add_option("--nmax", s.nmax, "largest staircase when sampling");
    }
  }

  auto* report = app.add_subcommand("report", "re-emit and check saved reports");
  commands.push_back({"report", "", report});
  report->add_option("--input", s.input, "report JSON file");
  add_output_options(report, s);
  return commands;
}

std::string config_value(const json& v, const std::string& key) {
  auto scalar = [&](const json& x) -> std::string {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number() || x.is_boolean()) return x.dump();
    throw ValidationError("config key '" + key + "' has an unsupported value");
  };
  if (!v.is_array()) return scalar(v);
  std::string joined;
  for (std::size_t i = 0; i < v.size(); ++i) joined += (i ? "," : "") + scalar(v[i]);
  return joined;
}

bool flag_given(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// Appends "--key value" for every config entry not already given as a flag.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const std::vector<Command>& commands) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  const Command* target = nullptr;
  for (const Command& c : commands) {
    const bool group = !args.empty() && args[0] == c.group;
    const bool name = c.name.empty() || (args.size() > 1 && args[1] == c.name);
    if (group && name) target = &c;
  }
  if (!target) return args;  // let the parser report the bad command line
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config file must hold a JSON object");
  std::vector<std::string> merged = args;
  for (const auto& item : doc.items()) {
    const std::string flag = "--" + item.key();
    if (item.key() == "config" || !target->app->get_option_no_throw(flag))
      throw ValidationError("unknown config key '" + item.key() + "'");
    if (flag_given(args, flag)) continue;
    merged.push_back(flag);
    merged.push_back(config_value(item.value(), item.key()));
  }
  return merged;
}

void write_error(std::ostream& err, const std::string& message, const std::string& kind) {
  err << json{{"error", message}, {"kind", kind}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Elliptic rook numbers: evaluation, enumeration and identity checks", "ellrook"};
  const std::vector<Command> commands = build(app, s);
  try {
    std::vector<std::string> merged = merge_config(args, commands);
    std::reverse(merged.begin(), merged.end());
    try {
      app.parse(merged);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kPass;
    } catch (const CLI::ParseError& e) {
      write_error(err, e.what(), "usage");
      return kInvalidInput;
    }

    std::ostringstream buffer;
    int code = kPass;
    for (const Command& c : commands) {
      if (!c.app->parsed()) continue;
      if (c.group == "eval") code = eval_command(c.name, s, buffer);
      if (c.group == "enumerate") code = enumerate_command(c.name, s, buffer);
      if (c.group == "verify") code = verify_command(c.name, s, buffer);
      if (c.group == "report") code = report_command(s, buffer);
      break;
    }
    if (s.output.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(s.output);
      if (!file) throw ValidationError("cannot write '" + s.output + "'");
      file << buffer.str();
    }
    return code;
  } catch (const ValidationError& e) {
    write_error(err, e.what(), e.kind());
    return kInvalidInput;
  } catch (const SingularExhaustedError& e) {
    write_error(err, e.what(), e.kind());
    return kSingular;
  } catch (const SingularError& e) {
    // A pole hit by explicitly given parameters is an input problem.
    write_error(err, e.what(), e.kind());
    return kInvalidInput;
  } catch (const ConvergenceError& e) {
    write_error(err, e.what(), e.kind());
    return kSingular;
  } catch (const std::exception& e) {
    write_error(err, e.what(), "internal");
    return kInvalidInput;
  }
}

}  // namespace ellrook::cli
