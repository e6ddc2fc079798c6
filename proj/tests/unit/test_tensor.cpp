#include <random>

#include "doctest.h"
#include "lgkit/errors.hpp"
#include "lgkit/parse.hpp"
#include "lgkit/skein.hpp"
#include "lgkit/tensor.hpp"

using namespace lgkit;

namespace {

RationalFn P(const char* s) { return parse_rational(s); }

Matrix swap_matrix(int dim) {
  Matrix m(dim * dim, dim * dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m.at(j * dim + i, i * dim + j) = RationalFn(1);
  }
  return m;
}

bool same_assignment(const TensorAssignment& a, const TensorAssignment& b) {
  return a.dim == b.dim && a.R == b.R && a.Rinv == b.Rinv && a.n == b.n && a.ntilde == b.ntilde && a.u == b.u &&
         a.utilde == b.utilde;
}

TensorAssignment trivial_assignment() {
  TensorAssignment a;
  a.dim = 1;
  a.R = a.Rinv = a.n = a.ntilde = a.u = a.utilde = Matrix::identity(1);
  return a;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  const Matrix a(2, 2, {P("1"), P("t"), P("0"), P("q")});
  const Matrix b(2, 2, {P("t^-1"), P("0"), P("1"), P("1")});
  CHECK(a * Matrix::identity(2) == a);
  CHECK(a * b == Matrix(2, 2, {P("t^-1 + t"), P("t"), P("q"), P("q")}));
  const Matrix k = kron(Matrix::identity(2), a);
  CHECK(k.rows() == 4);
  CHECK(k.at(2, 3) == P("t"));
  CHECK(k.at(0, 3).is_zero());
  CHECK(P("2") * Matrix::identity(2) == Matrix(2, 2, {P("2"), P("0"), P("0"), P("2")}));
  CHECK_THROWS(Matrix(2, 3) * Matrix(2, 3));
}

TEST_CASE("the two-dimensional fixture satisfies every identity") {
  const TensorAssignment a = lg11_fixture();
  const ValidationReport r = validate(a);
  CHECK(r.all_passed());
  CHECK(r.checks.size() == 9);
  for (const char* name : {"R*Rinv = id", "Rinv*R = id", "Yang-Baxter", "cl(R) = id", "cl(Rinv) = id"}) {
    REQUIRE(r.find(name) != nullptr);
    CHECK(r.find(name)->passed);
  }
  CHECK(r.find("no such check") == nullptr);
  CHECK(quantum_trace(a.R, a) == Matrix::identity(2));
  CHECK(quantum_trace(a.Rinv, a) == Matrix::identity(2));
  CHECK(quantum_trace(Matrix::identity(4), a) == Matrix(2, 2));
  // Second-order relation from the eigenvalues tau and -tau^-1.
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) CHECK(a.R.at(r, c) - a.Rinv.at(r, c) == (r == c ? P("t - t^-1") : RationalFn(0)));
  }
}

TEST_CASE("one-dimensional assignment passes") {
  CHECK(validate(trivial_assignment()).all_passed());
  CHECK(tensor_invariant(parse_braid("1 1 1"), trivial_assignment()) == RationalFn(1));
}

TEST_CASE("a scaled swap fails the closure check") {
  TensorAssignment a = lg11_fixture();
  a.R = P("t") * swap_matrix(2);
  a.Rinv = P("t^-1") * swap_matrix(2);
  const ValidationReport r = validate(a);
  CHECK_FALSE(r.all_passed());
  CHECK(r.find("R*Rinv = id")->passed);
  CHECK(r.find("Yang-Baxter")->passed);
  CHECK_FALSE(r.find("cl(R) = id")->passed);
  CHECK_FALSE(r.find("cl(R) = id")->witness.empty());
  CHECK_FALSE(r.to_string().empty());
}

TEST_CASE("shape checks") {
  TensorAssignment a = lg11_fixture();
  a.u = Matrix(1, 4);
  CHECK_THROWS_AS(check_shapes(a), std::invalid_argument);
  CHECK_THROWS_AS(validate(a), std::invalid_argument);
}

TEST_CASE("scalar extraction") {
  CHECK(scalar_of(P("t + 1") * Matrix::identity(3)) == P("t + 1"));
  CHECK(scalar_of(Matrix(2, 2)).is_zero());
  CHECK_THROWS_AS(scalar_of(Matrix(2, 2, {P("1"), P("0"), P("0"), P("2")})), NotScalar);
  CHECK_THROWS_AS(scalar_of(Matrix(2, 2, {P("1"), P("t"), P("0"), P("1")})), NotScalar);
  CHECK_THROWS_AS(scalar_of(Matrix(2, 1)), NotScalar);
}

TEST_CASE("two-strand torus closures") {
  const TensorAssignment a = lg11_fixture();
  for (int k = -6; k <= 6; ++k) {
    BraidWord b{2, {}};
    for (int j = 0; j < std::abs(k); ++j) b.letters.push_back(BraidLetter{1, k > 0 ? 1 : -1});
    const std::string e = "(" + std::to_string(k) + ")";
    const std::string minus_e = "(" + std::to_string(-k) + ")";
    const RationalFn expected = parse_rational("(t^" + e + (k % 2 == 0 ? " - " : " + ") + "t^" + minus_e +
                                               ")/(t + t^-1)");
    CHECK(tensor_invariant(b, a) == expected);
  }
}

TEST_CASE("brackets of sliced closures") {
  const TensorAssignment a = lg11_fixture();
  std::mt19937_64 rng(41);
  for (int n = 0; n < 25; ++n) {
    const BraidWord b = random_braid(rng, 1, 3, 6);
    const RationalFn right = scalar_of(bracket(to_sliced(b, true, ClosureSide::Right), a));
    const RationalFn left = scalar_of(bracket(to_sliced(b, true, ClosureSide::Left), a));
    CHECK(right == left);
    CHECK(right == RationalFn(conway(b).substitute_power(1)));
    const Bracket full = bracket(to_sliced(b), a);
    CHECK(full.matrix.rows() == 1);
    CHECK(full.matrix.cols() == 1);
    CHECK(full.matrix.at(0, 0).is_zero());
  }
  const Bracket open = bracket(to_sliced(parse_braid("1 1"), true), a);
  CHECK(open.domain == std::vector<Strand>{Strand::V});
  CHECK(open.codomain == std::vector<Strand>{Strand::V});
}

TEST_CASE("fixture documents") {
  const TensorAssignment a = lg11_fixture();
  CHECK(same_assignment(parse_fixture(fixture_to_json(a)), a));
  CHECK(same_assignment(load_fixture(std::string(LGKIT_SOURCE_DIR) + "/fixtures/lg11.json"), a));
  CHECK(same_assignment(parse_fixture(fixture_to_json(trivial_assignment())), trivial_assignment()));

  TensorAssignment broken = a;
  broken.R.at(0, 0) = P("t^2");
  CHECK_THROWS_AS(parse_fixture(fixture_to_json(broken)), std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture("{not json"), ParseError);
  CHECK_THROWS_AS(parse_fixture(R"({"R": []})"), ParseError);
  CHECK_THROWS_AS(parse_fixture(R"({"dim": 1, "R": [["1"]], "Rinv": [["1"]], "n": ["1"], "ntilde": ["1"],
                                   "u": ["1"]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_fixture(R"({"dim": 1, "R": [["1", "2"]], "Rinv": [["1"]], "n": ["1"], "ntilde": ["1"],
                                   "u": ["1"], "utilde": ["1"]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_fixture(R"({"dim": 1, "R": [["t^"]], "Rinv": [["1"]], "n": ["1"], "ntilde": ["1"],
                                   "u": ["1"], "utilde": ["1"]})"),
                  ParseError);
  CHECK_THROWS(load_fixture("/nonexistent/fixture.json"));

  const std::string swap_path = std::string(LGKIT_SOURCE_DIR) + "/tests/data/scaled_swap.json";
  CHECK_THROWS_AS(load_fixture(swap_path), std::invalid_argument);
  const TensorAssignment swap = load_fixture_unchecked(swap_path);
  CHECK(swap.R == P("t") * swap_matrix(2));
  CHECK_FALSE(validate(swap).find("cl(R) = id")->passed);
}
