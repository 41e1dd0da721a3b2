import sympy
import pytest

from fivevertex.algebra import Frac, VarId


def sym(v: VarId) -> sympy.Symbol:
    return sympy.Symbol(f"v{v.key}")


def to_sympy(p) -> sympy.Expr:
    """Independent image of a Poly or Frac in sympy, built term by term."""
    if isinstance(p, Frac):
        return to_sympy(p.num) / to_sympy(p.den_poly())
    out = sympy.Integer(0)
    for m, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator) if hasattr(c, "numerator") else sympy.Integer(c)
        for k, e in m:
            term *= sym(VarId.from_key(k)) ** e
        out += term
    return out


def same(a, b) -> bool:
    return sympy.simplify(to_sympy(a) - to_sympy(b)) == 0


def double_schubert_table(N: int):
    """Double Schubert polynomials of S_N with beta hard-coded to 0.

    Built in sympy from prod_{i+j<=N}(a_i - b_j) by ordinary divided
    differences, independently of the package's operators.  Keys are
    one-line tuples.
    """
    xs = sympy.symbols(f"a1:{N + 1}")
    ys = sympy.symbols(f"b1:{N + 1}")
    top = sympy.Integer(1)
    for i in range(1, N):
        for j in range(1, N + 1 - i):
            top *= xs[i - 1] - ys[j - 1]
    longest = tuple(range(N, 0, -1))
    out = {longest: sympy.expand(top)}
    frontier = [longest]
    while frontier:
        w = frontier.pop()
        for i in range(N - 1):
            if w[i] > w[i + 1]:
                v = list(w)
                v[i], v[i + 1] = v[i + 1], v[i]
                v = tuple(v)
                if v in out:
                    continue
                f = out[w]
                g = f.subs({xs[i]: xs[i + 1], xs[i + 1]: xs[i]}, simultaneous=True)
                out[v] = sympy.expand(sympy.cancel((f - g) / (xs[i] - xs[i + 1])))
                frontier.append(v)
    return out, xs, ys


@pytest.fixture
def sympy_of():
    return to_sympy
