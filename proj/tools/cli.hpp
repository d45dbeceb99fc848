#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starclt/algebra.hpp"

namespace starclt::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kVerificationFailure = 3,
  kInfeasible = 4,
};

enum class Format { kText, kJson, kCsv };

Format parse_format(const std::string& text);

struct MomentRow {
  int k = 0;
  std::map<char, ExactScalar> values;  // keyed by route letter
  std::map<char, double> elapsed_ms;
  bool agree = true;
};

struct MomentReport {
  WeightVector weights;
  std::vector<char> routes;
  std::vector<MomentRow> rows;

  bool all_agree() const;
};

struct MomentsOptions {
  std::string weights;
  int max_order = 8;
  std::string routes = "A,B,C,D";
  int order_cap = 12;
  int threads = 1;
};

/// Evaluates every selected route for k = 0..max_order. Routes run as
/// independent jobs on `threads` workers; rows come back in order of k.
MomentReport compute_moments(const MomentsOptions& options);

void write_report(std::ostream& out, const MomentReport& report, Format format,
                  bool timings);

struct ConvergeRow {
  long long n = 0;
  ExactScalar moment;
  ExactScalar limit;
  ExactScalar gap;
};

std::vector<ConvergeRow> compute_convergence(const WeightVector& w, int k,
                                             const std::vector<long long>& ns);

void write_convergence(std::ostream& out, const WeightVector& w, int k,
                       const std::vector<ConvergeRow>& rows, Format format);

/// Full command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace starclt::cli
