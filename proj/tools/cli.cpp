#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

namespace absteer::cli {

using nlohmann::json;

std::string fmt(double x) {
  if (x == 0.0) x = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

constexpr double kQuarterPi = 0.78539816339744830962;

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

std::string fmt_vec(const double* x, std::size_t n) {
  std::string s = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ", ";
    s += fmt(x[i]);
  }
  return s + "]";
}

std::string fmt_mat3(const RealMatrix3& t) {
  std::string s = "[";
  for (std::size_t r = 0; r < 3; ++r) {
    if (r) s += ", ";
    s += fmt_vec(&t.data[3 * r], 3);
  }
  return s + "]";
}

double number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + " must be a number");
  return j.get<double>();
}

Vec3 vec3(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 3) throw ParseError(what + " must be an array of 3 numbers");
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

const json& field(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw ParseError("missing field '" + key + "'");
  return obj.at(key);
}

ParsedState parse_matrix(const json& doc) {
  const auto& rows = field(doc, "matrix");
  if (!rows.is_array() || rows.size() != 4) throw ParseError("matrix must have 4 rows");
  ComplexMatrix4 m;
  for (std::size_t r = 0; r < 4; ++r) {
    if (!rows[r].is_array() || rows[r].size() != 4) throw ParseError("matrix rows must have 4 entries");
    for (std::size_t c = 0; c < 4; ++c) {
      const auto& e = rows[r][c];
      if (e.is_number()) {
        m(r, c) = number(e, "matrix entry");
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = cplx(number(e[0], "matrix entry"), number(e[1], "matrix entry"));
      } else {
        throw ParseError("matrix entries must be [re, im] pairs");
      }
    }
  }
  return ParsedState{"matrix", {}, DensityMatrix::validate(m)};
}

ParsedState parse_bloch(const json& doc) {
  BlochForm f;
  f.a = vec3(field(doc, "a"), "a");
  f.b = vec3(field(doc, "b"), "b");
  const auto& t = field(doc, "T");
  if (!t.is_array() || t.size() != 3) throw ParseError("T must have 3 rows");
  for (std::size_t r = 0; r < 3; ++r) {
    const auto row = vec3(t[r], "T row");
    for (std::size_t c = 0; c < 3; ++c) f.t(r, c) = row[c];
  }
  std::vector<std::pair<std::string, std::string>> echo{
      {"a", fmt_vec(f.a.data(), 3)}, {"b", fmt_vec(f.b.data(), 3)}, {"T", fmt_mat3(f.t)}};
  return ParsedState{"bloch", std::move(echo), from_bloch(f)};
}

ParsedState parse_family(const json& doc) {
  const auto& name = field(doc, "family");
  if (!name.is_string()) throw ParseError("family must be a string");
  const json params = doc.contains("parameters") ? doc.at("parameters") : json::object();
  if (!params.is_object()) throw ParseError("parameters must be an object");

  const std::string fam = name.get<std::string>();
  std::vector<std::pair<std::string, std::string>> echo{{"family", fam}};
  if (fam == "werner") {
    const double p = number(field(params, "p"), "p");
    echo.emplace_back("p", fmt(p));
    return ParsedState{"family", std::move(echo), werner(p)};
  }
  if (fam == "gisin") {
    const double lambda = number(field(params, "lambda"), "lambda");
    const double theta = params.contains("theta") ? number(params.at("theta"), "theta") : kQuarterPi;
    echo.emplace_back("lambda", fmt(lambda));
    echo.emplace_back("theta", fmt(theta));
    return ParsedState{"family", std::move(echo), gisin(lambda, theta)};
  }
  if (fam == "xstate") {
    const auto& v = field(params, "v");
    if (!v.is_array() || v.size() != 6) throw ParseError("xstate parameter v must hold 6 numbers");
    std::array<double, 6> vals{};
    for (std::size_t i = 0; i < 6; ++i) vals[i] = number(v[i], "v");
    echo.emplace_back("v", fmt_vec(vals.data(), 6));
    return ParsedState{"family", std::move(echo), x_state(vals)};
  }
  throw ParseError("unknown family '" + fam + "'");
}

}  // namespace

ParsedState parse_state(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("state file must be a JSON object");
  const auto& tag = field(doc, "format");
  if (!tag.is_string()) throw ParseError("format must be a string");
  const auto format = tag.get<std::string>();
  if (format == "matrix") return parse_matrix(doc);
  if (format == "bloch") return parse_bloch(doc);
  if (format == "family") return parse_family(doc);
  throw ParseError("unknown format '" + format + "'");
}

AnalysisReport analyze(ParsedState input) {
  AnalysisReport r{std::move(input), {}, {}, {}, {}, {}, {}, std::nullopt};
  r.bloch = to_bloch(r.input.state);
  r.spectrum = spectrum_report(r.input.state);
  r.f2 = f2_max(r.input.state);
  r.f3 = f3_max(r.bloch);
  r.absolute = decide_aus3(r.input.state);
  r.aux = aux_criteria(r.input.state);
  if (!r.absolute.in_aus3) {
    const auto w = activation_witness(r.input.state);
    r.witness_expectation = expectation(w.matrix, r.input.state);
  }
  return r;
}

std::string format_report(const AnalysisReport& r) {
  std::ostringstream os;
  os << "absteer-report: 1\n";
  os << "input:\n  format: " << r.input.format << "\n";
  for (const auto& [k, v] : r.input.echo) os << "  " << k << ": " << v << "\n";
  os << "bloch:\n";
  os << "  a: " << fmt_vec(r.bloch.a.data(), 3) << "\n";
  os << "  b: " << fmt_vec(r.bloch.b.data(), 3) << "\n";
  os << "  T: " << fmt_mat3(r.bloch.t) << "\n";
  os << "spectrum:\n";
  os << "  eigenvalues: " << fmt_vec(r.spectrum.eigenvalues.data(), 4) << "\n";
  os << "  purity: " << fmt(r.spectrum.purity) << "\n";
  os << "  pairwise_sum: " << fmt(r.spectrum.pairwise_sum) << "\n";
  os << "steering:\n";
  os << "  f2_max: " << fmt(r.f2.value) << "\n";
  os << "  f3_max: " << fmt(r.f3.value) << "\n";
  os << "  f3_global_max: " << fmt(r.absolute.f3_global_max) << "\n";
  os << "  jm_bound_ok: " << fmt_bool(jm_bound_check(r.f3)) << "\n";
  os << "absolute:\n";
  os << "  spectrum_lhs: " << fmt(r.absolute.spectrum_lhs) << "\n";
  os << "  purity: " << fmt(r.absolute.purity) << "\n";
  os << "  bloch_sum: " << fmt(r.absolute.bloch_sum) << "\n";
  os << "  ball_distance: " << fmt(r.absolute.ball_distance) << "\n";
  os << "teleportation:\n";
  os << "  u: " << fmt_vec(r.aux.u.data(), 3) << "\n";
  os << "  N: " << fmt(r.aux.n) << "\n";
  os << "chsh:\n";
  os << "  M: " << fmt(r.aux.m) << "\n";
  os << "verdicts:\n";
  os << "  unsteerable_as_given: " << fmt_bool(!r.f3.violated) << "\n";
  os << "  in_aus3: " << fmt_bool(r.absolute.in_aus3) << "\n";
  os << "  teleportation_useful: " << fmt_bool(r.aux.teleportation_useful()) << "\n";
  os << "  chsh_local: " << fmt_bool(!r.aux.chsh_violating()) << "\n";
  os << "witness:\n";
  os << "  activatable: " << fmt_bool(r.witness_expectation.has_value()) << "\n";
  if (r.witness_expectation) os << "  expectation: " << fmt(*r.witness_expectation) << "\n";
  return os.str();
}

void write_curve(const ScanResult& scan, std::ostream& out) {
  const auto n = scan.points.size();
  out << "# absteer-curve: 1\n";
  out << "# family: " << to_string(scan.family) << "\n";
  if (scan.family == Family::Gisin) out << "# theta: " << fmt(scan.options.theta) << "\n";
  out << "# grid: from=" << fmt(scan.grid.from) << " to=" << fmt(scan.grid.to) << " step=" << fmt(scan.grid.step)
      << " points=" << n << "\n";
  out << "# seed-independent: true\n";
  out << "parameter,f3_global_max_minus_1,in_aus3\n";
  for (const auto& p : scan.points)
    out << fmt(p.parameter) << "," << fmt(p.verdict.f3_global_max - 1.0) << "," << (p.verdict.in_aus3 ? 1 : 0)
        << "\n";
  if (scan.thresholds.empty()) out << "# threshold: none\n";
  for (double t : scan.thresholds) out << "# threshold: " << fmt(t) << "\n";
}

namespace {

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("trailing characters in " + what);
    return x;
  } catch (const std::logic_error&) {
    throw ParseError("bad number in " + what + ": '" + s + "'");
  }
}

}  // namespace

Curve parse_curve(std::istream& in) {
  Curve c;
  std::string line;
  bool header_seen = false;
  bool magic = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto body = line.substr(2);
      const auto colon = body.find(": ");
      if (colon == std::string::npos) throw ParseError("bad metadata line: " + line);
      const auto key = body.substr(0, colon);
      const auto value = body.substr(colon + 2);
      if (key == "absteer-curve") {
        magic = true;
      } else if (key == "family") {
        c.family = value;
      } else if (key == "theta") {
        c.theta = to_double(value, "theta");
      } else if (key == "grid") {
        std::istringstream gs(value);
        std::string tok;
        while (gs >> tok) {
          const auto eq = tok.find('=');
          if (eq == std::string::npos) throw ParseError("bad grid token: " + tok);
          const auto k = tok.substr(0, eq);
          const auto v = tok.substr(eq + 1);
          if (k == "from") c.from = to_double(v, "grid");
          else if (k == "to") c.to = to_double(v, "grid");
          else if (k == "step") c.step = to_double(v, "grid");
        }
      } else if (key == "threshold") {
        if (value != "none") c.thresholds.push_back(to_double(value, "threshold"));
      }
      continue;
    }
    if (!header_seen) {
      if (line != "parameter,f3_global_max_minus_1,in_aus3") throw ParseError("missing curve header row");
      header_seen = true;
      continue;
    }
    std::istringstream ls(line);
    std::string a, b, flag;
    if (!std::getline(ls, a, ',') || !std::getline(ls, b, ',') || !std::getline(ls, flag))
      throw ParseError("bad curve row: " + line);
    if (flag != "0" && flag != "1") throw ParseError("bad in_aus3 flag: " + flag);
    c.rows.push_back({to_double(a, "parameter"), to_double(b, "value"), flag == "1"});
  }
  if (!magic || !header_seen) throw ParseError("not an absteer curve file");
  return c;
}

std::string format_sample(const VolumeEstimate& e, std::uint64_t seed) {
  std::ostringstream os;
  os << "absteer-sample: 1\n";
  os << "measure: hilbert-schmidt\n";
  os << "seed: " << seed << "\n";
  os << "samples: " << e.samples << "\n";
  os << "hits: " << e.hits << "\n";
  os << "fraction: " << fmt(e.fraction) << "\n";
  os << "standard_error: " << fmt(e.standard_error) << "\n";
  return os.str();
}

namespace {

DensityMatrix sample_where(SeededGenerator& g, bool want_in_aus3) {
  for (;;) {
    auto rho = random_state(g);
    if ((purity(rho) <= 0.5) == want_in_aus3) return rho;
  }
}

Vec3 random_unit(SeededGenerator& g) {
  for (;;) {
    Vec3 x{g.gaussian(), g.gaussian(), g.gaussian()};
    const double n = norm(x);
    if (n > 1e-6) return {x[0] / n, x[1] / n, x[2] / n};
  }
}

MeasurementSetting random_setting(SeededGenerator& g) {
  const Vec3 v1 = random_unit(g);
  Vec3 w = random_unit(g);
  const double d = dot(w, v1);
  for (std::size_t k = 0; k < 3; ++k) w[k] -= d * v1[k];
  const double wn = norm(w);
  const Vec3 v2{w[0] / wn, w[1] / wn, w[2] / wn};
  const Vec3 v3 = cross(v1, v2);
  return MeasurementSetting({random_unit(g), random_unit(g), random_unit(g)}, {v1, v2, v3});
}

PropertyResult make(std::string name, double worst, double limit) {
  return {std::move(name), worst <= limit, worst, limit};
}

}  // namespace

std::vector<PropertyResult> run_verify(std::size_t trials, std::uint64_t seed, const VerifyHooks& hooks) {
  const SeededGenerator base(seed, 0);
  std::vector<PropertyResult> out;

  const auto sweep = maximality_sweep(trials, trials, base.substream(1));
  out.push_back(make("maximality_under_global_unitaries", sweep.worst_excess, 1e-9));
  out.push_back(make("bell_diagonal_attains_optimum", sweep.worst_canonical_gap, 1e-9));

  {
    auto g = base.substream(2);
    double disagreements = 0.0;
    double identity_err = 0.0;
    for (std::size_t k = 0; k < trials; ++k) {
      const auto rho = random_state(g);
      try {
        const auto v = decide_aus3(rho);
        if (v.in_aus3 != frobenius_ball_check(rho)) disagreements += 1.0;
        identity_err = std::max(identity_err, std::abs(v.f3_global_max * v.f3_global_max - (4.0 * v.purity - 1.0)));
      } catch (const Error&) {
        disagreements += 1.0;
      }
    }
    out.push_back(make("four_criteria_agreement", disagreements, 0.0));
    out.push_back(make("purity_identity", identity_err, 1e-10));
  }

  {
    auto g = base.substream(3);
    double excess = -1.0;
    double counterexamples = 0.0;
    for (std::size_t k = 0; k < trials; ++k) {
      const auto rho = random_state(g);
      excess = std::max(excess, f3_max(rho).value - teleportation_n(rho));
      if (!steer_implies_teleport_check(rho)) counterexamples += 1.0;
    }
    out.push_back(make("f3_max_le_teleportation_N", excess, 1e-10));
    out.push_back(make("steering_implies_teleportation", counterexamples, 0.0));
  }

  {
    auto g = base.substream(4);
    double worst = -1.0;
    for (std::size_t k = 0; k < trials; ++k) {
      const auto r1 = sample_where(g, true);
      const auto r2 = sample_where(g, true);
      const double w = g.uniform();
      worst = std::max(worst, purity(mix(r1, r2, w)) - 0.5);
    }
    out.push_back(make("aus3_convexity", worst, BOUNDARY_TOL));
  }

  {
    auto g = base.substream(5);
    double worst = 0.0;
    for (std::size_t k = 0; k < trials; ++k) {
      const auto rho = random_state(g);
      const auto f = hooks.to_bloch(rho);
      worst = std::max(worst, max_abs_diff(bloch_to_matrix(f), rho.matrix()));
      const double a2 = dot(f.a, f.a) + dot(f.b, f.b);
      const double tn = frobenius_norm(f.t);
      worst = std::max(worst, std::abs(0.25 * (1.0 + a2 + tn * tn) - purity(rho)));
      const auto mu = random_setting(g);
      worst = std::max(worst, std::abs(signed_correlation_sum(f, mu) - signed_correlation_sum_trace(rho, mu)));
    }
    out.push_back(make("bloch_consistency", worst, 1e-10));
  }

  {
    auto g = base.substream(6);
    double worst_negative = -1.0;
    double worst_self = 0.0;
    for (std::size_t k = 0; k < trials; ++k) {
      const auto target = sample_where(g, false);
      const auto w = activation_witness(target);
      const double bound = f3_global_max(spectrum_report(target));
      worst_self = std::max(worst_self, std::abs(expectation(w.matrix, target) - (1.0 - bound)));
      const auto sigma = sample_where(g, true);
      worst_negative = std::max(worst_negative, -expectation(w.matrix, sigma));
    }
    out.push_back(make("witness_nonnegative_on_aus3", worst_negative, 1e-9));
    out.push_back(make("witness_value_on_target", worst_self, 1e-9));
  }

  return out;
}

std::string format_verify(const std::vector<PropertyResult>& results, std::size_t trials, std::uint64_t seed) {
  std::ostringstream os;
  os << "absteer-verify: 1\n";
  os << "trials: " << trials << "\n";
  os << "seed: " << seed << "\n";
  for (const auto& r : results)
    os << (r.pass ? "PASS " : "FAIL ") << r.name << " worst=" << fmt(r.worst) << " limit=" << fmt(r.limit) << "\n";
  return os.str();
}

int verify_command(std::size_t trials, std::uint64_t seed, const VerifyHooks& hooks, std::ostream& out) {
  const auto results = run_verify(trials, seed, hooks);
  out << format_verify(results, trials, seed);
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
  return ok ? kOk : kPropertyFailure;
}

namespace {

int report_error(std::ostream& err, const Error& e) {
  err << "error: " << e.what() << "\n";
  return e.kind() == ErrorKind::InternalInconsistency ? kPropertyFailure : kInvalidState;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Absolute steering analysis for two-qubit states", "absteer"};
  app.require_subcommand(1);

  std::string in_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one state file");
  analyze_cmd->add_option("--in", in_path, "State file (JSON)")->required();
  std::string analyze_out;
  analyze_cmd->add_option("--out", analyze_out, "Write the report here instead of stdout");

  std::string family_name;
  double from = 0.0, to = 1.0, step = 1e-3, theta = kQuarterPi;
  std::string scan_out;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a state family and locate the boundary");
  scan_cmd->add_option("--family", family_name, "werner | gisin")->required();
  scan_cmd->add_option("--from", from, "Grid start");
  scan_cmd->add_option("--to", to, "Grid end");
  scan_cmd->add_option("--step", step, "Grid step");
  scan_cmd->add_option("--theta", theta, "Gisin angle");
  scan_cmd->add_option("--out", scan_out, "Curve file (stdout if omitted)");

  long long samples = 0;
  std::uint64_t seed = 0;
  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo estimate of the set volume");
  sample_cmd->add_option("--samples", samples, "Number of random states")->required();
  sample_cmd->add_option("--seed", seed, "Random seed");

  long long trials = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant battery");
  verify_cmd->add_option("--trials", trials, "Samples per property")->required();
  verify_cmd->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  auto emit = [&](const std::string& path, const std::string& text) -> int {
    if (path.empty()) {
      out << text;
      return kOk;
    }
    std::ofstream f(path);
    if (!f) {
      err << "error: cannot write " << path << "\n";
      return kUsage;
    }
    f << text;
    return kOk;
  };

  try {
    if (*analyze_cmd) {
      std::ifstream f(in_path);
      if (!f) {
        err << "error: cannot read " << in_path << "\n";
        return kUsage;
      }
      std::stringstream buf;
      buf << f.rdbuf();
      auto parsed = parse_state(buf.str());
      return emit(analyze_out, format_report(analyze(std::move(parsed))));
    }
    if (*scan_cmd) {
      Family family;
      ScanResult scan;
      try {
        family = family_from_string(family_name);
        ScanOptions options;
        options.theta = theta;
        scan = scan_family(family, ScanGrid{from, to, step}, options);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::OutOfRange) throw;
        err << "error: " << e.what() << "\n";
        return kUsage;
      }
      std::ostringstream os;
      write_curve(scan, os);
      return emit(scan_out, os.str());
    }
    if (*sample_cmd) {
      if (samples < static_cast<long long>(MIN_VOLUME_SAMPLES)) {
        err << "error: --samples must be at least " << MIN_VOLUME_SAMPLES << "\n";
        return kUsage;
      }
      const auto est = aus3_volume_estimate(static_cast<std::size_t>(samples), SeededGenerator(seed));
      out << format_sample(est, seed);
      return kOk;
    }
    if (*verify_cmd) {
      if (trials < 1) {
        err << "error: --trials must be at least 1\n";
        return kUsage;
      }
      return verify_command(static_cast<std::size_t>(trials), seed, {}, out);
    }
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    return report_error(err, e);
  }
  return kUsage;
}

}  // namespace absteer::cli
