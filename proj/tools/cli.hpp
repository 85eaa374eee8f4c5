#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "absteer/absteer.hpp"

namespace absteer::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kUsage = 2,
  kInvalidState = 3,
};

/// Malformed input (bad JSON, missing fields, wrong shapes). Maps to exit 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.12g with negative zero folded to 0.
std::string fmt(double x);

struct ParsedState {
  std::string format;  // matrix | bloch | family
  std::vector<std::pair<std::string, std::string>> echo;
  DensityMatrix state;
};

/// State file is a JSON object with "format" set to one of:
///   matrix: "matrix": 4 rows of 4 [re, im] pairs
///   bloch:  "a": [3], "b": [3], "T": 3 rows of 3
///   family: "family": werner|gisin|xstate, "parameters": {...}
/// Throws ParseError for malformed input and absteer::Error for states that
/// fail validation.
ParsedState parse_state(const std::string& text);

struct AnalysisReport {
  ParsedState input;
  BlochForm bloch;
  SpectrumReport spectrum;
  SteeringValue f2;
  SteeringValue f3;
  AbsoluteVerdict absolute;
  AuxCriteria aux;
  std::optional<double> witness_expectation;
};

AnalysisReport analyze(ParsedState input);
std::string format_report(const AnalysisReport& report);

void write_curve(const ScanResult& scan, std::ostream& out);

struct CurveRow {
  double parameter = 0.0;
  double f3_minus_1 = 0.0;
  bool in_aus3 = false;
};

struct Curve {
  std::string family;
  std::optional<double> theta;
  double from = 0.0;
  double to = 0.0;
  double step = 0.0;
  std::vector<CurveRow> rows;
  std::vector<double> thresholds;
};

/// Inverse of write_curve. Throws ParseError.
Curve parse_curve(std::istream& in);

std::string format_sample(const VolumeEstimate& estimate, std::uint64_t seed);

/// Injection points for the verification battery. Tests swap in deliberately
/// broken pieces to check that the battery notices.
struct VerifyHooks {
  std::function<BlochForm(const DensityMatrix&)> to_bloch = [](const DensityMatrix& rho) {
    return absteer::to_bloch(rho);
  };
};

struct PropertyResult {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // worst observed margin
  double limit = 0.0;  // pass iff worst <= limit
};

/// Runs every property on `trials` samples; see README for the list.
std::vector<PropertyResult> run_verify(std::size_t trials, std::uint64_t seed, const VerifyHooks& hooks = {});
std::string format_verify(const std::vector<PropertyResult>& results, std::size_t trials, std::uint64_t seed);

/// Prints the battery report; returns kOk or kPropertyFailure.
int verify_command(std::size_t trials, std::uint64_t seed, const VerifyHooks& hooks, std::ostream& out);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace absteer::cli
