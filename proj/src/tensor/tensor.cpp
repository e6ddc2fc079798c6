#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lgkit/errors.hpp"
#include "lgkit/parse.hpp"
#include "lgkit/tensor.hpp"

namespace lgkit {

namespace {

int ipow(int base, std::size_t e) {
  int r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

void expect_shape(const Matrix& m, int rows, int cols, const std::string& name) {
  if (m.rows() != rows || m.cols() != cols) {
    throw std::invalid_argument(name + " must be " + std::to_string(rows) + "x" + std::to_string(cols) +
                                ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

// Empty string when equal, otherwise the first differing entry.
std::string compare(const Matrix& got, const Matrix& want) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return "shape mismatch";
  for (int r = 0; r < got.rows(); ++r) {
    for (int c = 0; c < got.cols(); ++c) {
      if (!(got.at(r, c) == want.at(r, c))) {
        return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") is " + got.at(r, c).to_string() +
               ", expected " + want.at(r, c).to_string();
      }
    }
  }
  return {};
}

ValidationCheck check(std::string name, const Matrix& got, const Matrix& want) {
  std::string witness = compare(got, want);
  return ValidationCheck{std::move(name), witness.empty(), std::move(witness)};
}

const Matrix& piece_matrix(Piece p, const TensorAssignment& a) {
  switch (p) {
    case Piece::PositiveCrossing: return a.R;
    case Piece::NegativeCrossing: return a.Rinv;
    case Piece::CapN: return a.n;
    case Piece::CapNTilde: return a.ntilde;
    case Piece::CupU: return a.u;
    case Piece::CupUTilde: return a.utilde;
    default: break;
  }
  throw std::logic_error("identity pieces have no stored matrix");
}

// Applies m (dim^b x dim^k) to tensor slots [p, p + k) of a state whose rows
// index dim^width basis vectors.
Matrix apply_local(const Matrix& state, int dim, std::size_t width, std::size_t p, std::size_t k, std::size_t b,
                   const Matrix& m) {
  const int right = ipow(dim, width - p - k);
  const int mid_in = ipow(dim, k);
  const int mid_out = ipow(dim, b);
  const int left = ipow(dim, p);
  Matrix out(left * mid_out * right, state.cols());
  for (int l = 0; l < left; ++l) {
    for (int mi = 0; mi < mid_in; ++mi) {
      for (int r = 0; r < right; ++r) {
        const int old_row = (l * mid_in + mi) * right + r;
        for (int col = 0; col < state.cols(); ++col) {
          const RationalFn& x = state.at(old_row, col);
          if (x.is_zero()) continue;
          for (int mo = 0; mo < mid_out; ++mo) {
            const RationalFn& y = m.at(mo, mi);
            if (y.is_zero()) continue;
            out.at((l * mid_out + mo) * right + r, col) += y * x;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

bool ValidationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed) os << ": " << c.witness;
    os << '\n';
  }
  return os.str();
}

void check_shapes(const TensorAssignment& a) {
  if (a.dim < 1) throw std::invalid_argument("dimension must be positive");
  const int d2 = a.dim * a.dim;
  expect_shape(a.R, d2, d2, "R");
  expect_shape(a.Rinv, d2, d2, "Rinv");
  expect_shape(a.n, 1, d2, "n");
  expect_shape(a.ntilde, 1, d2, "ntilde");
  expect_shape(a.u, d2, 1, "u");
  expect_shape(a.utilde, d2, 1, "utilde");
}

Matrix quantum_trace(const Matrix& x, const TensorAssignment& a) {
  const int d = a.dim;
  if (x.rows() != x.cols() || x.rows() % d != 0 || x.rows() < d * d) {
    throw std::invalid_argument("quantum trace needs a square matrix on at least two strands");
  }
  const Matrix id_rest = Matrix::identity(x.rows() / d);
  const Matrix id_v = Matrix::identity(d);
  return kron(id_rest, a.n) * kron(x, id_v) * kron(id_rest, a.u);
}

ValidationReport validate(const TensorAssignment& a) {
  check_shapes(a);
  const int d = a.dim;
  const Matrix id = Matrix::identity(d);
  const Matrix id2 = Matrix::identity(d * d);
  ValidationReport rep;
  rep.checks.push_back(check("R*Rinv = id", a.R * a.Rinv, id2));
  rep.checks.push_back(check("Rinv*R = id", a.Rinv * a.R, id2));
  const Matrix r1 = kron(a.R, id);
  const Matrix r2 = kron(id, a.R);
  rep.checks.push_back(check("Yang-Baxter", r1 * r2 * r1, r2 * r1 * r2));
  rep.checks.push_back(check("cl(R) = id", quantum_trace(a.R, a), id));
  rep.checks.push_back(check("cl(Rinv) = id", quantum_trace(a.Rinv, a), id));
  rep.checks.push_back(check("(n x id)(id x u~) = id_V", kron(a.n, id) * kron(id, a.utilde), id));
  rep.checks.push_back(check("(id x n~)(u x id) = id_V", kron(id, a.ntilde) * kron(a.u, id), id));
  rep.checks.push_back(check("(n~ x id)(id x u) = id_V*", kron(a.ntilde, id) * kron(id, a.u), id));
  rep.checks.push_back(check("(id x n)(u~ x id) = id_V*", kron(id, a.n) * kron(a.utilde, id), id));
  return rep;
}

Bracket bracket(const SlicedDiagram& diagram, const TensorAssignment& a) {
  check_shapes(a);
  const int d = a.dim;
  Matrix state = Matrix::identity(ipow(d, diagram.bottom().size()));
  std::size_t width = diagram.bottom().size();
  for (const auto& row : diagram.rows()) {
    std::size_t position = 0;
    for (Piece p : row) {
      const std::size_t k = piece_inputs(p).size();
      if (!is_identity_piece(p)) {
        const std::size_t b = piece_outputs(p).size();
        state = apply_local(state, d, width, position, k, b, piece_matrix(p, a));
        width = width - k + b;
        break;
      }
      position += k;
    }
  }
  return Bracket{diagram.bottom(), diagram.top(), std::move(state)};
}

RationalFn scalar_of(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw NotScalar("matrix is not square");
  const RationalFn lambda = m.at(0, 0);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const RationalFn& want = r == c ? lambda : RationalFn();
      if (!(m.at(r, c) == want)) {
        throw NotScalar("entry (" + std::to_string(r) + "," + std::to_string(c) + ") is " + m.at(r, c).to_string() +
                        ", expected " + want.to_string());
      }
    }
  }
  return lambda;
}

RationalFn scalar_of(const Bracket& b) { return scalar_of(b.matrix); }

RationalFn tensor_invariant(const BraidWord& b, const TensorAssignment& a) {
  return scalar_of(bracket(to_sliced(b, true), a));
}

namespace {

Matrix parse_matrix(int rows, int cols, std::initializer_list<const char*> entries) {
  std::vector<RationalFn> data;
  for (const char* e : entries) data.push_back(parse_rational(e));
  return Matrix(rows, cols, std::move(data));
}

}  // namespace

TensorAssignment lg11_fixture() {
  TensorAssignment a;
  a.dim = 2;
  a.R = parse_matrix(4, 4, {"t", "0", "0", "0",
                            "0", "0", "1", "0",
                            "0", "1", "t - t^-1", "0",
                            "0", "0", "0", "-t^-1"});
  a.Rinv = parse_matrix(4, 4, {"t^-1", "0", "0", "0",
                               "0", "-t + t^-1", "1", "0",
                               "0", "1", "0", "0",
                               "0", "0", "0", "-t"});
  a.n = parse_matrix(1, 4, {"1", "0", "0", "1"});
  a.ntilde = parse_matrix(1, 4, {"t", "0", "0", "-t"});
  a.u = parse_matrix(4, 1, {"t^-1", "0", "0", "-t^-1"});
  a.utilde = parse_matrix(4, 1, {"1", "0", "0", "1"});
  return a;
}

}  // namespace lgkit
