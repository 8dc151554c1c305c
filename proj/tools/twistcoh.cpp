// twistcoh: low-degree twisted (co)homology of a finitely presented group.
//
//   twistcoh data/e2.grp --compute h1
//   twistcoh --example e2 --ring Z/2 --compute coh1,oracle --format structured

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twistcoh/cli.hpp"

int main(int argc, char** argv) {
  using namespace twistcoh;
  using namespace twistcoh::cli;

  CLI::App app{"Twisted H^1, H_1 and H_0 of a finitely presented group"};

  JobSpec                  job;
  std::string              ring;
  std::vector<std::string> compute;
  std::string              format = "text";
  bool                     check_only = false;
  std::vector<std::string> moduli;

  app.add_option("input", job.input_path, "input file (see README for the format)");
  app.add_option("--example", job.example_name, "use a built-in example instead of a file");
  app.add_option("--ring", ring, "coefficient ring, Z or Z/n (overrides the file)");
  app.add_option("--compute", compute, "check, h0, coh1, h1, uct, oracle")
      ->delimiter(',');
  app.add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--check", check_only, "run diagnostics only");
  app.add_option("--moduli", moduli, "moduli for the uct comparison (default 2,3,4,8)")
      ->delimiter(',');
  app.add_option("--workers", job.workers, "threads for the oracle")
      ->check(CLI::PositiveNumber);
  app.add_flag_callback(
      "--list-examples",
      [] {
        for (auto const& n : example_names()) {
          std::cout << n << '\n';
        }
        std::exit(0);
      },
      "print the built-in example names");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!ring.empty()) {
      job.ring = CoefficientRing::parse(ring);
    }
    if (!moduli.empty()) {
      job.moduli.clear();
      for (auto const& m : moduli) {
        job.moduli.emplace_back(m);
      }
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (check_only) {
    job.computations = {Computation::check};
  } else {
    for (auto const& c : compute) {
      auto parsed = parse_computation(c);
      if (!parsed) {
        std::cerr << "error: unknown computation '" << c << "'\n";
        return 2;
      }
      job.computations.insert(*parsed);
    }
    if (compute.empty()) {
      job.computations = {Computation::check, Computation::h0, Computation::coh1,
                          Computation::h1};
    }
  }
  job.format = format == "structured" ? OutputFormat::structured : OutputFormat::text;

  return run(job, std::cout, std::cerr);
}
