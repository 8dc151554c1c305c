#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "twistcoh/cli.hpp"

using namespace twistcoh;
using namespace twistcoh::cli;
using nlohmann::json;

namespace {

  struct Outcome {
    int         status;
    std::string out;
    std::string err;
  };

  Outcome run_job(JobSpec const& job) {
    std::ostringstream out, err;
    int const          status = run(job, out, err);
    return {status, out.str(), err.str()};
  }

  JobSpec example_job(std::string name, std::set<Computation> computations,
                      std::optional<CoefficientRing> ring = std::nullopt) {
    JobSpec job;
    job.example_name = std::move(name);
    job.computations = std::move(computations);
    job.ring         = std::move(ring);
    return job;
  }

  std::vector<json> records(std::string const& out) {
    std::vector<json>  r;
    std::istringstream in(out);
    std::string        line;
    while (std::getline(in, line)) {
      r.push_back(json::parse(line));
    }
    return r;
  }

  std::string write_temp(std::string const& name, std::string const& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
  }

}  // namespace

TEST_CASE("H_1 of e2", "[cli]") {
  auto o = run_job(example_job("e2", {Computation::h1}));
  CHECK(o.status == 0);
  CHECK_THAT(o.out, Catch::Matchers::ContainsSubstring("H_1 = Z/2 + Z/2"));
  CHECK(o.err.empty());
}

TEST_CASE("H^1 over Z/2 and the oracle both give order 4", "[cli]") {
  auto o = run_job(example_job("e2", {Computation::coh1, Computation::oracle},
                               CoefficientRing::integers_mod(2)));
  CHECK(o.status == 0);
  CHECK_THAT(o.out, Catch::Matchers::ContainsSubstring("H^1 = Z/2 + Z/2 (order 4)"));
  CHECK_THAT(o.out, Catch::Matchers::ContainsSubstring("h1 = 4 (order 4)"));
  CHECK_THAT(o.out, Catch::Matchers::ContainsSubstring("H^1 via kerf = Z/2 + Z/2"));
  // coh1 is printed before the oracle.
  CHECK(o.out.find("H^1 =") < o.out.find("oracle"));
}

TEST_CASE("H^1 over Z/5 is trivial", "[cli]") {
  auto o = run_job(example_job("e2", {Computation::coh1}, CoefficientRing::integers_mod(5)));
  CHECK(o.status == 0);
  CHECK_THAT(o.out, Catch::Matchers::ContainsSubstring("H^1 = 0\n"));
}

TEST_CASE("stages run in the fixed order", "[cli]") {
  auto o = run_job(example_job("e2", {Computation::oracle, Computation::uct, Computation::h1,
                                      Computation::coh1, Computation::h0, Computation::check}));
  CHECK(o.status == 0);
  std::vector<std::size_t> at{o.out.find("check:"), o.out.find("H_0 ="), o.out.find("H^1 ="),
                              o.out.find("H_1 ="), o.out.find("UCT Z:"), o.out.find("oracle")};
  for (std::size_t i = 0; i + 1 < at.size(); ++i) {
    REQUIRE(at[i] != std::string::npos);
    CHECK(at[i] < at[i + 1]);
  }
}

TEST_CASE("structured and text output agree", "[cli]") {
  std::set<Computation> all{Computation::check, Computation::h0,  Computation::coh1,
                            Computation::h1,    Computation::uct, Computation::oracle};
  for (auto const& ring : {CoefficientRing::integers(), CoefficientRing::integers_mod(2),
                           CoefficientRing::integers_mod(4)}) {
    INFO(to_string(ring));
    JobSpec text_job   = example_job("e2", all, ring);
    JobSpec struct_job = text_job;
    struct_job.format  = OutputFormat::structured;
    auto text          = run_job(text_job);
    auto structured    = run_job(struct_job);
    CHECK(text.status == structured.status);

    auto recs = records(structured.out);
    REQUIRE(recs.size() == 6);
    std::vector<std::string> names;
    for (auto const& r : recs) {
      names.push_back(r.at("name"));
      CHECK(r.at("ok") == true);
    }
    CHECK(names == std::vector<std::string>{"check", "h0", "coh1", "h1", "uct", "oracle"});

    auto line_for = [&](std::string const& prefix) {
      auto pos = text.out.find(prefix);
      REQUIRE(pos != std::string::npos);
      return text.out.substr(pos + prefix.size(),
                             text.out.find('\n', pos) - pos - prefix.size());
    };
    auto group_text = [](json const& r) {
      std::string s = r.at("structure");
      if (!r.at("order").is_null() && s != "0") {
        s += " (order " + r.at("order").dump() + ")";
      }
      return s;
    };
    CHECK(line_for("H_0 = ") == group_text(recs[1]));
    CHECK(line_for("H^1 = ") == group_text(recs[2]));
    CHECK(line_for("H_1 = ") == group_text(recs[3]));
    CHECK(recs[2].at("witnesses").size() == recs[2].at("torsion").size());
    CHECK(recs[3].at("ring") == to_string(ring));

    // Each witness line matches the structured cocycle.
    for (std::size_t i = 0; i < recs[2].at("witnesses").size(); ++i) {
      auto const& w = recs[2].at("witnesses")[i];
      std::string expected;
      auto const& v = w.at("cocycle");
      char const* names4[] = {"a", "b", "g", "d"};
      for (std::size_t g = 0; g < 4; ++g) {
        expected += std::string(g == 0 ? "" : ", ") + "d(" + names4[g] + ") = [";
        for (std::size_t k = 0; k < 4; ++k) {
          expected += (k == 0 ? "" : " ") + v[g * 4 + k].dump();
        }
        expected += "]";
      }
      CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring(
                               "witness " + std::to_string(i + 1) + " (order "
                               + w.at("order").dump() + "): " + expected));
    }

    auto const& oracle = recs[5];
    CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring(
                             "z1 = " + oracle.at("z1").dump() + ", b1 = "
                             + oracle.at("b1").dump() + ", h1 = " + oracle.at("h1").dump()));
    for (auto const& c : recs[4].at("comparisons")) {
      CHECK_THAT(text.out, Catch::Matchers::ContainsSubstring(
                               "UCT " + c.at("ring").get<std::string>() + ": H^1 = "
                               + c.at("computed").at("structure").get<std::string>()));
    }
  }
}

TEST_CASE("exit status contract", "[cli]") {
  std::string const good = "generators: a\nrelator: a a\nrank: 1\naction a: [-1]\n";

  SECTION("matching expectations exit 0") {
    auto path = write_temp("twistcoh_good.grp", good + "expect h1: 0\nexpect coh1: Z/2\n");
    JobSpec job;
    job.input_path   = path;
    job.computations = {Computation::check, Computation::h1, Computation::coh1};
    CHECK(run_job(job).status == 0);
  }
  SECTION("a forced mismatch exits 1 and names the stage") {
    auto path = write_temp("twistcoh_bad.grp", good + "expect h1: Z/2\nexpect coh1: Z/2\n");
    JobSpec job;
    job.input_path   = path;
    job.computations = {Computation::h1, Computation::coh1};
    auto o           = run_job(job);
    CHECK(o.status == 1);
    CHECK(o.err == "FAILED: h1\n");
    CHECK_THAT(o.out, Catch::Matchers::ContainsSubstring("expected Z/2, got 0"));

    job.format = OutputFormat::structured;
    auto recs  = records(run_job(job).out);
    // Records come in execution order: coh1 runs before h1.
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].at("ok") == true);
    CHECK(recs[1].at("ok") == false);
    CHECK(recs[1].at("expected") == "Z/2");
  }
  SECTION("expectations for another ring are ignored") {
    auto path = write_temp("twistcoh_ring.grp", good + "expect coh1 Z/3: Z/3\n");
    JobSpec job;
    job.input_path   = path;
    job.computations = {Computation::coh1};
    CHECK(run_job(job).status == 0);
  }
  SECTION("a failing diagnostic exits 1") {
    auto path = write_temp("twistcoh_relator.grp",
                           "generators: a\nrelator: a^3\nrank: 1\naction a: [-1]\n");
    JobSpec job;
    job.input_path   = path;
    job.computations = {Computation::check, Computation::h1};
    auto o           = run_job(job);
    CHECK(o.status == 1);
    CHECK(o.err == "FAILED: check, h1\n");
    CHECK_THAT(o.out, Catch::Matchers::ContainsSubstring("h1: error: "));
  }
  SECTION("bad input exits 2") {
    auto path = write_temp("twistcoh_syntax.grp", "generators: a\nrank: 1\naction a: [1 0]\n");
    JobSpec job;
    job.input_path   = path;
    job.computations = {Computation::h1};
    auto o           = run_job(job);
    CHECK(o.status == 2);
    CHECK_THAT(o.err, Catch::Matchers::ContainsSubstring("line 3"));

    job.input_path = "/nonexistent/file.grp";
    CHECK(run_job(job).status == 2);
    CHECK(run_job(example_job("nope", {Computation::h1})).status == 2);
    CHECK(run_job(example_job("e2", {})).status == 2);

    JobSpec both     = example_job("e2", {Computation::h1});
    both.input_path  = path;
    CHECK(run_job(both).status == 2);
  }
}

TEST_CASE("the ring flag overrides the file", "[cli]") {
  auto path = write_temp("twistcoh_z4.grp",
                         "generators: a\nrelator: a a\nring: Z/4\nrank: 1\naction a: [-1]\n");
  JobSpec job;
  job.input_path   = path;
  job.computations = {Computation::coh1};
  job.format       = OutputFormat::structured;
  CHECK(records(run_job(job).out).at(0).at("ring") == "Z/4");
  job.ring = CoefficientRing::integers_mod(2);
  CHECK(records(run_job(job).out).at(0).at("ring") == "Z/2");
  // Lifting Z/4 data to Z rebuilds the action over Z.
  job.ring = CoefficientRing::integers();
  auto recs = records(run_job(job).out);
  CHECK(recs.at(0).at("structure") == "Z/2");
}

TEST_CASE("computation names", "[cli]") {
  CHECK(parse_computation("coh1") == Computation::coh1);
  CHECK_FALSE(parse_computation("h2").has_value());
  for (auto c : {Computation::check, Computation::oracle}) {
    CHECK(parse_computation(cli::to_string(c)) == c);
  }
}
