#pragma once

#include <string>
#include <vector>

#include "lgkit/link.hpp"
#include "lgkit/rational.hpp"

namespace lgkit {

// Dense matrix of exact scalars, row-major. Tensor indices put the first
// factor in the most significant position; rows index the output.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::vector<RationalFn> data);

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const RationalFn& at(int r, int c) const { return data_[index(r, c)]; }
  RationalFn& at(int r, int c) { return data_[index(r, c)]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const RationalFn& s, const Matrix& a);
  friend Matrix kron(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<RationalFn> data_;
};

// Matrices assigned to the elementary tangles: R and R^-1 on V (x) V,
// caps n : V (x) V* -> C and n~ : V* (x) V -> C, cups u : C -> V (x) V* and
// u~ : C -> V* (x) V.
struct TensorAssignment {
  int dim = 1;
  Matrix R;
  Matrix Rinv;
  Matrix n;
  Matrix ntilde;
  Matrix u;
  Matrix utilde;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // first offending entry on failure
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const;
  const ValidationCheck* find(const std::string& name) const;
  std::string to_string() const;
};

// Throws std::invalid_argument on shape mismatch.
void check_shapes(const TensorAssignment& a);
ValidationReport validate(const TensorAssignment& a);

struct Bracket {
  std::vector<Strand> domain;
  std::vector<Strand> codomain;
  Matrix matrix;  // dim^|codomain| x dim^|domain|
};

Bracket bracket(const SlicedDiagram& d, const TensorAssignment& a);

// (id^k (x) n)(X (x) id_V*)(id^k (x) u) for X acting on k + 1 copies of V.
Matrix quantum_trace(const Matrix& x, const TensorAssignment& a);

// lambda with m = lambda * id; throws NotScalar naming the offending entry.
RationalFn scalar_of(const Matrix& m);
RationalFn scalar_of(const Bracket& b);

// Invariant of the closure of b from the bracket of its (1,1)-tangle.
RationalFn tensor_invariant(const BraidWord& b, const TensorAssignment& a);

// Two-dimensional assignment whose braiding has eigenvalues tau and -tau^-1.
TensorAssignment lg11_fixture();

// Fixture documents: {"dim", "R", "Rinv", "n", "ntilde", "u", "utilde"} with
// entries written as polynomial strings. Loading re-validates and throws
// std::invalid_argument for an assignment that fails any check.
TensorAssignment parse_fixture(const std::string& json_text);
TensorAssignment load_fixture(const std::string& path);
// Shape checks only; for reporting on assignments that may fail validation.
TensorAssignment parse_fixture_unchecked(const std::string& json_text);
TensorAssignment load_fixture_unchecked(const std::string& path);
std::string fixture_to_json(const TensorAssignment& a);

}  // namespace lgkit
