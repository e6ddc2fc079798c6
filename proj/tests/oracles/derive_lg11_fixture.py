"""Derive the two-dimensional tensor assignment from an ansatz with sympy and
compare it with a fixture file.

R is taken weight-preserving with eigenvalues t and -1/t; the Hecke relation
and the Yang-Baxter equation fix its entries. Caps and cups are diagonal and
are solved from the zigzag identities and cl(R) = cl(R^-1) = id.
"""

import json
import sys

import sympy as sp

t = sp.symbols("t", nonzero=True)
I2 = sp.eye(2)


def kron(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = sp.kronecker_product(out, m)
    return out


def derive_r():
    a, b, c, d = sp.symbols("a b c d")
    R = sp.Matrix([[a, 0, 0, 0], [0, 0, b, 0], [0, b, c, 0], [0, 0, 0, d]])
    hecke = (R - t * sp.eye(4)) * (R + sp.eye(4) / t)
    yb = kron(R, I2) * kron(I2, R) * kron(R, I2) - kron(I2, R) * kron(R, I2) * kron(I2, R)
    equations = [e for e in list(hecke) + list(yb) if e != 0]
    # Normalise the off-diagonal entry and pick the a = t, d = -1/t branch.
    solutions = sp.solve(equations + [b - 1, a - t, d + 1 / t], [a, b, c, d], dict=True)
    assert len(solutions) == 1, solutions
    return R.subs(solutions[0]).applyfunc(sp.simplify)


def derive_caps(R):
    x = sp.symbols("n0 n3 m0 m3 u0 u3 v0 v3")
    n = sp.Matrix([[x[0], 0, 0, x[1]]])
    ntilde = sp.Matrix([[x[2], 0, 0, x[3]]])
    u = sp.Matrix([x[4], 0, 0, x[5]])
    utilde = sp.Matrix([x[6], 0, 0, x[7]])
    Rinv = R.inv().applyfunc(sp.simplify)
    cl = lambda X: kron(I2, n) * kron(X, I2) * kron(I2, u)
    identities = [
        kron(I2, ntilde) * kron(u, I2) - I2,
        kron(ntilde, I2) * kron(I2, u) - I2,
        kron(I2, n) * kron(utilde, I2) - I2,
        kron(n, I2) * kron(I2, utilde) - I2,
        cl(R) - I2,
        cl(Rinv) - I2,
    ]
    equations = [sp.simplify(e) for m in identities for e in m if sp.simplify(e) != 0]
    # The solution is unique up to rescaling u by c and n~ by 1/c, and up to
    # rescaling each basis vector of V*; fix these by n0 = 1 and u~ = (1, 1).
    solutions = sp.solve(equations + [x[0] - 1, x[6] - 1, x[7] - 1], list(x), dict=True)
    assert len(solutions) == 1, solutions
    s = solutions[0]
    return Rinv, n.subs(s), ntilde.subs(s), u.subs(s), utilde.subs(s)


def parse_entry(text):
    return sp.sympify(text.replace("^", "**"), locals={"t": t})


def load(path):
    with open(path, encoding="utf-8") as f:
        doc = json.load(f)
    shape = {"R": (4, 4), "Rinv": (4, 4), "n": (1, 4), "ntilde": (1, 4), "u": (4, 1), "utilde": (4, 1)}
    out = {}
    for key, (rows, cols) in shape.items():
        flat = [e for row in doc[key] for e in (row if isinstance(row, list) else [row])]
        out[key] = sp.Matrix(rows, cols, [parse_entry(e) for e in flat])
    return doc["dim"], out


def main(path):
    R = derive_r()
    Rinv, n, ntilde, u, utilde = derive_caps(R)
    derived = {"R": R, "Rinv": Rinv, "n": n, "ntilde": ntilde, "u": u, "utilde": utilde}
    dim, fixture = load(path)
    ok = dim == 2
    for key, value in derived.items():
        same = (value - fixture[key]).applyfunc(sp.simplify) == sp.zeros(*value.shape)
        print(f"{'ok  ' if same else 'FAIL'} {key}: derived {list(value)}")
        ok = ok and same
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
