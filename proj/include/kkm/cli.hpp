#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kkm::cli {

/// One invocation: a command, its input files by role (complex, labels,
/// config, cover, cover-a, cover-x, subcomplex, P, V), an optional output
/// path and string-valued options (seed-sign, target, depth, fuzz-count,
/// seed, threads, p, ray, query, J, family, fixture, simplices, orient,
/// labels-out, assert-ep, assert-class).
struct JobSpec {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::optional<std::string> output;
  std::map<std::string, std::string> options;
};

enum ExitCode : int {
  Ok = 0,
  InputError = 1,
  HypothesisViolation = 2,
  Alarm = 3,
};

struct JobResult {
  int exit_code = Ok;
  std::string report;  // JSON text, empty on input errors
  std::string error;   // message for stderr
};

const std::vector<std::string>& commands();

/// Runs a job. When job.output is set the report is also written there.
JobResult run(const JobSpec& job);

}  // namespace kkm::cli
