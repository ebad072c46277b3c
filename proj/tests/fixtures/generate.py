"""Regenerates the reference data in this directory with sympy.

    python3 generate.py

Each output is computed independently of the C++ library.
"""

from fractions import Fraction
from pathlib import Path

import sympy as sp

HERE = Path(__file__).resolve().parent
DIGITS = 30


def szpiro_ullmo():
    rows = []
    for n in (1, 2, 3, 4, 6, 12):
        for fh, c in ((0, 0), (sp.Rational(3, 2), 0), (0, sp.Rational(1, 4)), (sp.Rational(-7, 3), sp.Rational(5, 2))):
            total = sp.Rational(fh) + sp.log(n) / 2 - c
            for p, e in sp.factorint(n).items():
                total -= sp.Rational(p**e - 1, (p**2 - 1) * p ** (e - 1)) * sp.log(p)
            rows.append(f"{n} {sp.N(fh, DIGITS)} {sp.N(c, DIGITS)} {sp.N(sp.simplify(total), DIGITS)}")
    (HERE / "szpiro_ullmo.txt").write_text(
        "# N faltings_h c value\n" + "\n".join(rows) + "\n")


def x_double(x, lam):
    # x([2]P) on y^2 = x (x - 1)(x - lam).
    return (x * x - lam) ** 2 / (4 * x * (x - 1) * (x - lam))


def tate_partials():
    rows = []
    for k in (2, 3, 5, 10):
        lam = Fraction(2 - 2 * k * k)
        x = Fraction(2)
        for depth in range(0, 9):
            h = sp.log(max(abs(x.numerator), abs(x.denominator)))
            value = h / (2 * 4**depth)
            rows.append(f"{lam} 2 {2 * k} 1 {depth} {sp.N(value, DIGITS)}")
            x = x_double(x, lam)
    (HERE / "tate_partials.txt").write_text(
        "# lambda x y z depth h(x([2^depth]P)) / (2 * 4^depth)\n" + "\n".join(rows) + "\n")


def duplication_level2():
    X0, X1, X2, X3 = sp.symbols("X0 X1 X2 X3")
    g10 = 2*X1*X2**3*X3**2 + (2*X0**3*X1 - 6*X0**2*X1*X2)*X3 + (2*X0**3*X1 + 2*X0*X1**3)
    g11 = ((-4*X0**2*X2**2 + 6*X0*X2**3 - X2**4)*X3**3
           + (-X0**4 + 9*X0**3*X2 - 17*X0**2*X2**2 + 6*X0*X2**3 - 4*X1**2*X2**2)*X3**2
           + (-2*X0**4 + 9*X0**3*X2 - 4*X0**2*X2**2 + 3*X0*X1**2*X2 - 4*X1**2*X2**2)*X3
           + (-X0**4 + X1**4))
    g12 = 8*X1**3*X2
    base = (g10, g11, g12)
    lifted = [sp.expand(g.subs({X0: g10, X1: g11, X2: g12}, simultaneous=True)) for g in base]
    lines = []
    for i, g in enumerate(lifted):
        poly = sp.Poly(g, X0, X1, X2, X3)
        terms = sorted(poly.terms())
        lines.append(f"# G level=2 index={i} terms={len(terms)}")
        for exps, coeff in terms:
            lines.append(" ".join(str(e) for e in exps) + f" {coeff}")
    (HERE / "duplication_level2.txt").write_text("\n".join(lines) + "\n")


if __name__ == "__main__":
    szpiro_ullmo()
    tate_partials()
    duplication_level2()
