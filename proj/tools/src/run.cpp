#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "epw/scalar.hpp"
#include "epwcli/cli.hpp"

namespace epw::cli {

namespace {

struct Parsed {
  RunConfig cfg;
  StrataOptions strata;
  std::string format = "";
};

void add_common(CLI::App* sub, Parsed& p) {
  sub->add_option("--seed", p.cfg.seed, "Random seed")->default_val(0);
  sub->add_option("--samples", p.cfg.samples, "Samples per suite or per Lagrangian")->default_val(1000);
  sub->add_option("--bound", p.cfg.bound, "Search bound (lattice-table: largest e, default 40; no-k3: default 50)");
  sub->add_option("--degree-bound", p.cfg.degree_bound, "Largest certificate degree")->default_val(6)->check(CLI::Range(2u, 12u));
  sub->add_option("--format", p.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", p.cfg.out, "Output file (default: standard output)");
  sub->add_flag("--inject-fault", p.cfg.inject_fault, "Corrupt one check (harness self-test)")->group("");
}

Format resolve(const std::string& name, Format fallback) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  return fallback;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification suites for singular EPW cubes", "epwcube"};
  app.require_subcommand(1);
  Parsed p;
  auto* verify = app.add_subcommand("verify-identities", "Exact identity fuzz suites (cofactor map, double cover, discriminants)");
  auto* strata = app.add_subcommand("strata", "Corank histograms and line degrees on certified Lagrangians");
  auto* table = app.add_subcommand("lattice-table", "Heegner divisor table with witnesses");
  auto* nok3 = app.add_subcommand("no-k3", "Transcript excluding an associated K3 surface");
  for (auto* sub : {verify, strata, table, nok3}) add_common(sub, p);
  strata->add_option("--lagrangians", p.strata.lagrangians, "Number of random Lagrangians")->default_val(1);
  strata->add_flag("--gamma", p.strata.gamma, "Add a constructed Lagrangian with a corank-4 point");
  strata->add_flag("--line-degree", p.strata.line_degree, "Compute line-section degrees");
  strata->add_option("--pencils", p.strata.pencils, "Pencils per Lagrangian for --line-degree")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  Report report;
  try {
    if (*verify) {
      p.cfg.format = resolve(p.format, Format::Json);
      report = cmd_verify_identities(p.cfg);
    } else if (*strata) {
      p.cfg.format = resolve(p.format, Format::Json);
      report = cmd_strata(p.cfg, p.strata);
    } else if (*table) {
      p.cfg.format = resolve(p.format, Format::Csv);
      report = cmd_lattice_table(p.cfg);
    } else {
      p.cfg.format = resolve(p.format, Format::Text);
      report = cmd_no_k3(p.cfg);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  }

  if (p.cfg.out.empty()) {
    out << report.body;
  } else {
    std::ofstream f(p.cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << p.cfg.out << "\n";
      return kUsageError;
    }
    f << report.body;
  }
  if (report.exit_code != kOk) err << "verification failure\n";
  return report.exit_code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"epwcube"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace epw::cli
