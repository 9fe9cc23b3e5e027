#include <json.hpp>
#include <stdexcept>

#include "cqdirac/checks.hpp"
#include "helpers.hpp"

using namespace cqdirac::checks;

namespace {

Options opts(std::uint64_t seed, std::size_t cases) {
  Options o;
  o.seed = seed;
  o.cases = cases;
  return o;
}

}  // namespace

TEST_SUITE("checks") {
  TEST_CASE("suite registry") {
    const auto names = suite_names();
    REQUIRE(names.size() == 7);
    CHECK(names.front() == "algebra");
    CHECK(default_tolerance("algebra") == 1e-12);
    CHECK(default_tolerance("gauge") == 1e-11);
    CHECK_THROWS_AS((void)run_suite("bogus", {}), std::invalid_argument);
  }

  TEST_CASE("every suite passes on a small seeded run") {
    for (auto name : suite_names()) {
      CAPTURE(name);
      const CheckReport r = run_suite(name, opts(11, 60));
      CHECK(r.passed);
      CHECK(r.max_residual <= r.tolerance);
      CHECK(r.cases == 60);
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CHECK(c.passed());
      }
    }
  }

  TEST_CASE("reports are deterministic") {
    const Options o = opts(5, 40);
    CHECK(to_ndjson(run_suite("lorentz", o)) == to_ndjson(run_suite("lorentz", o)));
    CHECK(to_ndjson(run_suite("lorentz", o)) != to_ndjson(run_suite("lorentz", opts(6, 40))));
  }

  TEST_CASE("NDJSON schema") {
    const CheckReport r = run_suite("chiral", opts(3, 20));
    const std::string line = to_ndjson(r);
    CHECK(line.find('\n') == std::string::npos);
    const auto j = nlohmann::json::parse(line);
    CHECK(j.size() == 5);
    CHECK(j["suite"] == "chiral");
    CHECK(j["cases"] == 20);
    CHECK(j["status"] == "pass");
    CHECK(j["seed"] == 3);
    CHECK(j["max_residual"].get<double>() == r.max_residual);
    CHECK(line.rfind("{\"suite\":", 0) == 0);
  }

  TEST_CASE("tolerance override") {
    const CheckReport strict = run_suite("algebra", {.cases = 20, .tolerance = 1e-30});
    CHECK_FALSE(strict.passed);
    CHECK(strict.max_residual > strict.tolerance);
    const CheckReport loose = run_suite("algebra", {.cases = 20, .tolerance = 1e-6});
    CHECK(loose.passed);
    CHECK(loose.tolerance == 1e-6);
  }

  TEST_CASE("recorder") {
    Recorder rec("demo", 1e-10, Options{});
    rec.residual("a", 1, 5e-11);
    rec.residual("b", 1, 5e-9, 1e-8);
    rec.floor("c", 1, 2.0, 1.0);
    rec.all("d", 4, 4);
    CheckReport r = std::move(rec).finish(0);
    CHECK(r.passed);
    CHECK(r.max_residual == doctest::Approx(5e-11));

    Recorder failing("demo", 1e-10, Options{});
    failing.residual("a", 1, 1e-12);
    failing.all("d", 4, 3);
    r = std::move(failing).finish(0);
    CHECK_FALSE(r.passed);
    CHECK(r.max_residual > 1e-10);
    CHECK(to_table(r).find("FAIL") != std::string::npos);
  }

  TEST_CASE("rest-frame solution counts") {
    const SolutionCounts c = count_rest_frame_solutions();
    CHECK(c.particle_real_rank == 8);
    CHECK(c.particle_complex_rank == 4);
    CHECK(c.particle_antiparticle_complex_rank == 8);
    CHECK(c.eigenspace_complex_rank[0] == 2);
    CHECK(c.eigenspace_complex_rank[1] == 2);
    CHECK(c.restricted_complex_rank == 2);
    CHECK(c.restricted_eigenspace_rank[0] == 1);
    CHECK(c.restricted_eigenspace_rank[1] == 1);
  }
}
