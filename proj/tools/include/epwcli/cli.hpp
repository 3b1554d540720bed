#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace epw::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

enum class Format { Json, Csv, Text };

struct RunConfig {
  std::uint64_t seed = 0;
  long samples = 1000;
  long bound = 0;  // 0 selects the command default
  unsigned degree_bound = 6;
  Format format = Format::Json;
  std::string out;  // empty: standard output
  bool inject_fault = false;
};

// Strata options beyond RunConfig.
struct StrataOptions {
  long lagrangians = 1;
  bool gamma = false;
  bool line_degree = false;
  long pencils = 1;
};

struct Report {
  int exit_code = kOk;
  std::string body;
};

Report cmd_verify_identities(const RunConfig& cfg);
Report cmd_strata(const RunConfig& cfg, const StrataOptions& opts);
Report cmd_lattice_table(const RunConfig& cfg);
Report cmd_no_k3(const RunConfig& cfg);

// Parses argv, runs the subcommand, writes the report to cfg.out or `out`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epw::cli
