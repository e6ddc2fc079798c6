#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lgkit/cyclotomic.hpp"
#include "lgkit/errors.hpp"
#include "lgkit/link.hpp"
#include "lgkit/skein.hpp"
#include "lgkit/spectral.hpp"
#include "lgkit/tensor.hpp"
#include "lgkit/verify.hpp"
#include "lgkit/version.hpp"

namespace {

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct AlexanderArgs {
  std::string braid;
  std::optional<int> strands;
  std::string var = "s";
  std::size_t budget = 64;
};

struct Lg2BraidArgs {
  int m = 1;
  int k = 1;
  std::optional<int> root;
  bool q_minus_one = false;
};

struct VerifyArgs {
  std::string suite;
  lgkit::VerifyOptions options;
  std::string format = "text";
};

struct TensorArgs {
  std::string fixture;
  std::string braid;
  std::optional<int> strands;
};

int run_alexander(const AlexanderArgs& a) {
  const lgkit::BraidWord b = lgkit::parse_braid(a.braid, a.strands);
  const lgkit::HalfLaurent delta = lgkit::conway(b, lgkit::ConwayOptions{a.budget});
  std::cout << delta.to_string(a.var) << "\n";
  return 0;
}

int run_lg2braid(const Lg2BraidArgs& a) {
  if (a.m < 1) throw std::invalid_argument("--m must be at least 1");
  const lgkit::RationalFn value = lgkit::lg_closed_2braid(a.m, a.k);
  if (a.q_minus_one) {
    std::cout << lgkit::reduce_at_root_of_unity(value, 2, 1).to_string() << "\n";
  } else if (a.root) {
    std::cout << lgkit::eval_spectral_at_root(a.m, *a.root, value).to_string() << "\n";
  } else {
    std::cout << value.to_string() << "\n";
  }
  return 0;
}

int run_verify(const VerifyArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  lgkit::ReportDocument report;
  report.version = lgkit::kVersion;
  if (a.suite == "all") {
    for (const auto& name : lgkit::suite_names()) report.suites.push_back(lgkit::run_suite(name, a.options));
  } else {
    report.suites.push_back(lgkit::run_suite(a.suite, a.options));
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (a.format == "json" ? report.to_json() : report.to_text());
  return report.passed() ? 0 : kExitVerificationFailed;
}

lgkit::TensorAssignment fixture_for(const std::string& path) {
  return path.empty() ? lgkit::lg11_fixture() : lgkit::load_fixture(path);
}

int run_tensor_eval(const TensorArgs& a) {
  const lgkit::TensorAssignment fixture = fixture_for(a.fixture);
  const lgkit::BraidWord b = lgkit::parse_braid(a.braid, a.strands);
  std::cout << lgkit::tensor_invariant(b, fixture).to_string() << "\n";
  return 0;
}

int run_tensor_validate(const TensorArgs& a) {
  // load_fixture refuses invalid files, so read the raw assignment here.
  const lgkit::TensorAssignment fixture =
      a.fixture.empty() ? lgkit::lg11_fixture() : lgkit::load_fixture_unchecked(a.fixture);
  const lgkit::ValidationReport report = lgkit::validate(fixture);
  std::cout << report.to_string();
  std::size_t failed = 0;
  for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
  if (failed == 0) {
    std::cout << "all checks pass\n";
  } else {
    std::cout << failed << " of " << report.checks.size() << " checks fail\n";
  }
  return report.all_passed() ? 0 : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Links-Gould and Alexander-Conway invariant toolkit"};
  app.set_version_flag("--version", std::string(lgkit::kVersion));
  app.require_subcommand(1);

  AlexanderArgs alexander;
  auto* alex_cmd = app.add_subcommand("alexander", "Alexander-Conway polynomial of a braid closure");
  alex_cmd->add_option("braid", alexander.braid, "braid word, e.g. \"1 -2 1 -2\"")->required();
  alex_cmd->add_option("--strands", alexander.strands, "number of strands (default: 1 + largest index)");
  alex_cmd->add_option("--var", alexander.var, "print in s = t^(1/2) or in t")->check(CLI::IsMember({"s", "t"}));
  alex_cmd->add_option("--budget", alexander.budget, "maximum number of crossings");

  Lg2BraidArgs lg;
  auto* lg_cmd = app.add_subcommand("lg2braid", "LG^{m,1} of the closed 2-braid sigma^k");
  lg_cmd->add_option("--m", lg.m, "m >= 1")->required();
  lg_cmd->add_option("--k", lg.k, "braid exponent")->required();
  auto* root_opt = lg_cmd->add_option("--root", lg.root, "evaluate at q = exp(pi i R / m), gcd(R, m) = 1");
  lg_cmd->add_flag("--q-minus-one", lg.q_minus_one, "evaluate at q = -1")->excludes(root_opt);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = lgkit::suite_names();
  suites.push_back("all");
  verify_cmd->add_option("suite", verify.suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--max-m", verify.options.max_m, "largest m");
  verify_cmd->add_option("--max-k", verify.options.max_k, "largest |k| (letters per braid for tensor-oracle)");
  verify_cmd->add_option("--samples", verify.options.samples, "random braids for tensor-oracle");
  verify_cmd->add_option("--seed", verify.options.seed, "random seed for tensor-oracle");
  verify_cmd->add_option("--fixture", verify.options.fixture_path, "fixture file for tensor-oracle");
  verify_cmd->add_option("--jobs", verify.options.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", verify.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--corrupt-xi", verify.options.corrupt_xi, "")->group("");

  TensorArgs tensor;
  auto* tensor_cmd = app.add_subcommand("tensor", "tangle bracket evaluation");
  tensor_cmd->require_subcommand(1);
  auto* eval_cmd = tensor_cmd->add_subcommand("eval", "invariant of a braid closure from a fixture");
  eval_cmd->add_option("--fixture", tensor.fixture, "fixture JSON file (default: built-in two-dimensional fixture)");
  eval_cmd->add_option("--braid", tensor.braid, "braid word")->required();
  eval_cmd->add_option("--strands", tensor.strands, "number of strands");
  auto* validate_cmd = tensor_cmd->add_subcommand("validate", "check a fixture against the invariance axioms");
  validate_cmd->add_option("--fixture", tensor.fixture, "fixture JSON file (default: built-in)");
  auto* export_cmd = tensor_cmd->add_subcommand("export", "print the built-in fixture as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*alex_cmd) return run_alexander(alexander);
    if (*lg_cmd) return run_lg2braid(lg);
    if (*verify_cmd) return run_verify(verify);
    if (*eval_cmd) return run_tensor_eval(tensor);
    if (*validate_cmd) return run_tensor_validate(tensor);
    if (*export_cmd) {
      std::cout << lgkit::fixture_to_json(lgkit::lg11_fixture());
      return 0;
    }
  } catch (const lgkit::ResourceLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const lgkit::PoleAtRoot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
