#include "doctest.h"
#include "lgkit/errors.hpp"
#include "lgkit/verify.hpp"
#include "lgkit/version.hpp"

using namespace lgkit;

namespace {

VerifyOptions small() {
  VerifyOptions o;
  o.max_m = 3;
  o.max_k = 4;
  o.samples = 6;
  return o;
}

}  // namespace

TEST_CASE("every suite passes on small ranges") {
  for (const auto& name : suite_names()) {
    const SuiteResult r = run_suite(name, small());
    INFO(name);
    CHECK(r.suite == name);
    CHECK_FALSE(r.cells.empty());
    CHECK(r.passed());
    CHECK(r.failures() == 0);
  }
  CHECK(suite_names().size() == 7);
}

TEST_CASE("results do not depend on the number of workers") {
  VerifyOptions one = small();
  VerifyOptions four = small();
  four.jobs = 4;
  for (const char* name : {"theorem1", "theorem2", "tensor-oracle"}) CHECK(run_suite(name, one) == run_suite(name, four));
}

TEST_CASE("corrupted eigenvalues are detected") {
  VerifyOptions o = small();
  o.corrupt_xi = true;
  const SuiteResult r = run_suite("theorem1", o);
  CHECK_FALSE(r.passed());
  CHECK(r.failures() > 0);
}

TEST_CASE("limits and unknown suites") {
  VerifyOptions o;
  o.max_m = VerifyBudget::max_m + 1;
  CHECK_THROWS_AS(run_suite("theorem1", o), ResourceLimitExceeded);
  o = VerifyOptions{};
  o.samples = VerifyBudget::max_samples + 1;
  CHECK_THROWS_AS(run_suite("tensor-oracle", o), ResourceLimitExceeded);
  CHECK_THROWS_AS(run_suite("no-such-suite", VerifyOptions{}), std::invalid_argument);
  o = VerifyOptions{};
  o.fixture_path = "/nonexistent/fixture.json";
  CHECK_THROWS(run_suite("tensor-oracle", o));
}

TEST_CASE("reports round-trip and have a stable payload") {
  ReportDocument a;
  a.version = kVersion;
  a.suites.push_back(run_suite("xi-endpoints", small()));
  a.suites.push_back(run_suite("lemma2-vanishing", small()));
  a.elapsed_seconds = 1.25;
  ReportDocument b = a;
  b.elapsed_seconds = 7.5;
  CHECK(a.same_payload(b));
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(a.to_json(true) != b.to_json(true));
  const ReportDocument back = ReportDocument::from_json(a.to_json());
  CHECK(back.same_payload(a));
  CHECK(back.elapsed_seconds == doctest::Approx(1.25));
  CHECK(back.to_json(false) == a.to_json(false));
  CHECK(a.passed());
  CHECK(a.to_text().find("xi-endpoints") != std::string::npos);
  b.suites[0].cells[0].pass = false;
  CHECK_FALSE(a.same_payload(b));
  CHECK_FALSE(b.passed());
  CHECK_THROWS(ReportDocument::from_json("[1, 2"));
}
