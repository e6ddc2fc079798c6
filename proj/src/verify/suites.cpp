#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "lgkit/cyclotomic.hpp"
#include "lgkit/errors.hpp"
#include "lgkit/skein.hpp"
#include "lgkit/spectral.hpp"
#include "lgkit/tensor.hpp"
#include "lgkit/verify.hpp"

namespace lgkit {

namespace {

using Task = std::function<VerificationCell()>;

std::vector<VerificationCell> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<VerificationCell> cells(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        cells[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return cells;
}

int bounded(std::optional<int> requested, int fallback, int ceiling, const std::string& what) {
  const int v = requested.value_or(fallback);
  if (v < 0) throw std::invalid_argument(what + " must be nonnegative");
  if (v > ceiling) {
    throw ResourceLimitExceeded(what + " = " + std::to_string(v) + " exceeds the budget of " + std::to_string(ceiling));
  }
  return v;
}

std::vector<int> valid_roots(int m) {
  std::vector<int> rs;
  for (int r = 1; r <= 2 * m; ++r) {
    if (std::gcd(r, m) == 1) rs.push_back(r);
  }
  return rs;
}

BraidWord two_strand_power(int k) {
  BraidWord b;
  b.strands = 2;
  for (int i = 0; i < std::abs(k); ++i) b.letters.push_back(BraidLetter{1, k > 0 ? 1 : -1});
  return b;
}

VerificationCell compare_cyclo(std::map<std::string, int> params, const std::function<CycloFraction()>& left,
                               const std::function<CycloFraction()>& right) {
  VerificationCell cell;
  cell.params = std::move(params);
  try {
    const CycloFraction l = left();
    const CycloFraction r = right();
    cell.left = l.to_string();
    cell.right = r.to_string();
    cell.pass = l == r;
  } catch (const PoleAtRoot& e) {
    cell.note = std::string("pole at root: ") + e.what();
    cell.pass = false;
  }
  return cell;
}

std::vector<RationalFn> corrupted_eigenvalues(int m) {
  std::vector<RationalFn> table;
  for (int i = 0; i <= m; ++i) table.emplace_back(i == 0 ? xi(m, i) + Laurent2(1) : xi(m, i));
  return table;
}

std::vector<Task> theorem_tasks(const VerifyOptions& o, bool all_roots) {
  const int max_m = bounded(o.max_m, 6, VerifyBudget::max_m, "max-m");
  const int max_k = bounded(o.max_k, 6, VerifyBudget::max_k, "max-k");
  std::vector<Task> tasks;
  for (int m = 1; m <= max_m; ++m) {
    for (int k = -max_k; k <= max_k; ++k) {
      const std::vector<int> roots = all_roots ? valid_roots(m) : std::vector<int>{1};
      for (int r : roots) {
        const bool corrupt = o.corrupt_xi;
        tasks.push_back([m, k, r, corrupt] {
          return compare_cyclo(
              {{"m", m}, {"k", k}, {"r", r}},
              [&] {
                const RationalFn lg = corrupt ? lg_closed_2braid(m, k, corrupted_eigenvalues(m)) : lg_closed_2braid(m, k);
                return reduce_at_root(lg, m, r);
              },
              [&] {
                const Laurent2 delta = conway_substituted(braid_closure(two_strand_power(k)), m);
                return reduce_at_root(delta, m, r);
              });
        });
      }
    }
  }
  return tasks;
}

std::vector<Task> lemma2_tasks(const VerifyOptions& o) {
  const int max_m = bounded(o.max_m, 8, VerifyBudget::max_m, "max-m");
  std::vector<Task> tasks;
  for (int m = 1; m <= max_m; ++m) {
    for (int r : valid_roots(m)) {
      for (int i = 0; i <= m; ++i) {
        tasks.push_back([m, r, i] {
          VerificationCell cell;
          cell.params = {{"m", m}, {"r", r}, {"i", i}};
          const bool interior = i > 0 && i < m;
          cell.right = interior ? "0" : "finite";
          try {
            const CycloFraction v = reduce_at_root(cl_P(m, i), m, r);
            cell.left = v.to_string();
            cell.pass = interior ? v.is_zero() : true;
          } catch (const PoleAtRoot& e) {
            cell.left = "pole";
            cell.note = e.what();
          }
          return cell;
        });
      }
    }
  }
  return tasks;
}

std::vector<Task> xi_endpoint_tasks(const VerifyOptions& o) {
  const int max_m = bounded(o.max_m, 8, VerifyBudget::max_m, "max-m");
  std::vector<Task> tasks;
  for (int m = 1; m <= max_m; ++m) {
    for (int r : valid_roots(m)) {
      tasks.push_back([m, r] {
        return compare_cyclo({{"m", m}, {"r", r}, {"i", 0}}, [&] { return reduce_at_root(xi(m, 0), m, r); },
                             [&] { return reduce_at_root(Laurent2::tau(m), m, r); });
      });
      tasks.push_back([m, r] {
        return compare_cyclo({{"m", m}, {"r", r}, {"i", m}}, [&] { return reduce_at_root(-xi_inverse(m, m), m, r); },
                             [&] { return reduce_at_root(Laurent2::tau(m), m, r); });
      });
    }
  }
  return tasks;
}

std::vector<Task> skein_coefficient_tasks(const VerifyOptions& o) {
  const int max_m = bounded(o.max_m, 8, VerifyBudget::max_m, "max-m");
  std::vector<Task> tasks;
  for (int m = 1; m <= max_m; ++m) {
    for (int r : valid_roots(m)) {
      tasks.push_back([m, r] {
        VerificationCell cell;
        cell.params = {{"m", m}, {"r", r}};
        const auto report = skein_coefficient_report(m, r);
        bool products_zero = true;
        bool interior_nonzero = false;
        std::string products;
        for (const auto& c : report) {
          products_zero = products_zero && c.product.is_zero();
          if (c.i > 0 && c.i < m && !c.raw.is_zero()) interior_nonzero = true;
          if (!products.empty()) products += ", ";
          products += c.product.to_string();
        }
        cell.left = "[" + products + "]";
        cell.right = "all zero";
        cell.pass = products_zero && (m == 1 || interior_nonzero);
        if (m >= 2) cell.note = interior_nonzero ? "interior raw coefficient nonzero" : "every interior raw coefficient vanishes";
        return cell;
      });
    }
  }
  return tasks;
}

std::vector<Task> qminus1_tasks(const VerifyOptions& o) {
  const int max_k = bounded(o.max_k, 10, VerifyBudget::max_k, "max-k");
  std::vector<Task> tasks;
  for (int k = -max_k; k <= max_k; ++k) {
    const bool corrupt = o.corrupt_xi;
    tasks.push_back([k, corrupt] {
      return compare_cyclo(
          {{"m", 2}, {"k", k}},
          [&] {
            const RationalFn lg = corrupt ? lg_closed_2braid(2, k, corrupted_eigenvalues(2)) : lg_closed_2braid(2, k);
            return reduce_at_root_of_unity(lg, 2, 1);
          },
          [&] {
            // ((tau^k - (-tau)^-k) / (tau + tau^-1))^2
            const Laurent2 minus_tau_inv_k = Laurent2::monomial(k % 2 == 0 ? 1 : -1, -k, 0);
            const RationalFn base = RationalFn(Laurent2::tau(k) - minus_tau_inv_k) /
                                    RationalFn(Laurent2::tau(1) + Laurent2::tau(-1));
            return reduce_at_root_of_unity(base * base, 2, 1);
          });
    });
  }
  return tasks;
}

std::vector<Task> tensor_tasks(const VerifyOptions& o) {
  const int samples = bounded(o.samples, 40, VerifyBudget::max_samples, "samples");
  const int max_letters = bounded(o.max_k, 8, VerifyBudget::max_k, "max-k");
  auto fixture = std::make_shared<TensorAssignment>(o.fixture_path.empty() ? lg11_fixture() : load_fixture(o.fixture_path));
  std::vector<Task> tasks;
  const ValidationReport report = validate(*fixture);
  for (std::size_t c = 0; c < report.checks.size(); ++c) {
    const ValidationCheck check = report.checks[c];
    tasks.push_back([check, c] {
      VerificationCell cell;
      cell.params = {{"check", static_cast<int>(c)}};
      cell.left = check.name;
      cell.right = check.passed ? "holds" : check.witness;
      cell.pass = check.passed;
      return cell;
    });
  }
  std::mt19937_64 rng(o.seed);
  for (int s = 0; s < samples; ++s) {
    const BraidWord b = random_braid(rng, 2, 3, max_letters);
    const auto [move, rewritten] = random_move(b, rng, 3);
    tasks.push_back([fixture, b, s] {
      VerificationCell cell;
      cell.params = {{"sample", s}, {"strands", b.strands}};
      cell.note = "braid: " + render_braid(b);
      const RationalFn lhs = tensor_invariant(b, *fixture);
      const RationalFn rhs(conway(b).substitute_power(1));
      cell.left = lhs.to_string();
      cell.right = rhs.to_string();
      cell.pass = lhs == rhs;
      return cell;
    });
    tasks.push_back([fixture, b, s, move = move, rewritten = rewritten] {
      VerificationCell cell;
      cell.params = {{"sample", s}, {"strands", rewritten.strands}, {"rewrite", 1}};
      cell.note = move_name(move) + ": " + render_braid(b) + " -> " + render_braid(rewritten);
      const RationalFn lhs = tensor_invariant(rewritten, *fixture);
      const RationalFn rhs = tensor_invariant(b, *fixture);
      cell.left = lhs.to_string();
      cell.right = rhs.to_string();
      cell.pass = lhs == rhs;
      return cell;
    });
  }
  return tasks;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"theorem1",           "theorem2",     "lemma2-vanishing",
                                                 "xi-endpoints",       "skein-coefficients", "lg21-qminus1",
                                                 "tensor-oracle"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  std::vector<Task> tasks;
  if (name == "theorem1") {
    tasks = theorem_tasks(options, false);
  } else if (name == "theorem2") {
    tasks = theorem_tasks(options, true);
  } else if (name == "lemma2-vanishing") {
    tasks = lemma2_tasks(options);
  } else if (name == "xi-endpoints") {
    tasks = xi_endpoint_tasks(options);
  } else if (name == "skein-coefficients") {
    tasks = skein_coefficient_tasks(options);
  } else if (name == "lg21-qminus1") {
    tasks = qminus1_tasks(options);
  } else if (name == "tensor-oracle") {
    tasks = tensor_tasks(options);
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return SuiteResult{name, run_tasks(tasks, options.jobs)};
}

bool SuiteResult::passed() const { return failures() == 0; }

std::size_t SuiteResult::failures() const {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.pass ? 0 : 1;
  return n;
}

}  // namespace lgkit
