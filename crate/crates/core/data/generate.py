"""Writes the bundled field-tower files. Requires sympy.

Each file describes a splitting field N = Q[x]/(g), its automorphisms (by the
image of x), subfields given by spanning sets inside N, and the arrows of the
groupoid of isomorphisms between those subfields (target, source, and an
automorphism of N whose restriction realizes the arrow).
"""

import json
import sys
from fractions import Fraction
from pathlib import Path

import sympy as sp

x = sp.symbols("x")


def coeffs(expr, g, n):
    r = sp.Poly(sp.rem(sp.expand(expr), g, x), x, domain="QQ")
    c = [Fraction(0)] * n
    for (k,), v in r.terms():
        c[k] = Fraction(int(v.p), int(v.q))
    return [str(v) if v.denominator != 1 else str(v.numerator) for v in c]


def as_expr(cs):
    return sum(sp.Rational(c) * x**k for k, c in enumerate(cs))


def check_aut(g, img):
    assert sp.rem(sp.expand(g.subs(x, img)), g, x) == 0, img


def tower(name, g, autos, subfields, arrows, notes):
    n = sp.degree(g, x)
    for _, img in autos:
        check_aut(g, img)
    for _, basis in subfields:
        m = sp.Matrix([[sp.Rational(c) for c in coeffs(b, g, n)] for b in basis])
        assert m.rank() == len(basis)
    doc = {
        "name": name,
        "notes": notes,
        "modulus": [str(c) for c in reversed(sp.Poly(g, x).all_coeffs())],
        "automorphisms": [{"label": l, "image": coeffs(img, g, n)} for l, img in autos],
        "subfields": [{"label": l, "basis": [coeffs(b, g, n) for b in basis]} for l, basis in subfields],
        "arrows": [{"target": t, "source": s, "automorphism": a} for t, s, a in arrows],
    }
    return doc


def cbrt2():
    g = x**6 + 108
    theta = x
    c1 = theta**4 / 18
    sqrt_m3 = -theta**3 / 6
    zeta = (-1 + sqrt_m3) / 2
    c2 = sp.expand(zeta * c1)
    c3 = sp.expand(zeta**2 * c1)
    for c in (c1, c2, c3):
        assert sp.rem(sp.expand(c**3 - 2), g, x) == 0
    assert sp.rem(sp.expand(sqrt_m3**2 + 3), g, x) == 0
    autos = []
    for sign, z in ((1, 1), (-1, 1), (1, zeta), (-1, zeta), (1, zeta**2), (-1, zeta**2)):
        img = sp.rem(sp.expand(sign * z * theta), g, x)
        autos.append(img)
    labels = ["id", "neg", "zeta", "neg zeta", "zeta^2", "neg zeta^2"]
    conj = [c1, c2, c3]

    def image_of(a, c):
        return sp.rem(sp.expand(sp.Poly(c, x).as_expr().subs(x, a)), g, x)

    arrows = []
    for t in range(3):
        for s in range(3):
            for k, a in enumerate(autos):
                if sp.rem(sp.expand(image_of(a, conj[s]) - conj[t]), g, x) == 0:
                    arrows.append((t, s, k))
                    break
            else:
                raise AssertionError((t, s))
    subfields = [
        ("Q(c1)", [sp.Integer(1), theta**4, theta**2]),
        ("Q(c2)", [sp.Integer(1), c2, sp.rem(sp.expand(c2**2), g, x)]),
        ("Q(c3)", [sp.Integer(1), c3, sp.rem(sp.expand(c3**2), g, x)]),
    ]
    notes = [
        "N = Q(t), t^6 = -108, the splitting field of X^3 - 2 over Q.",
        "c1 = t^4/18 satisfies c1^3 = t^12/5832 = 108^2/5832 = 2.",
        "s = -t^3/6 satisfies s^2 = t^6/36 = -3, so zeta = (-1 + s)/2 is a primitive cube root of 1.",
        "c2 = zeta c1 = t/2 - t^4/36 and c3 = zeta^2 c1 = -t/2 - t^4/36 are the other cube roots of 2.",
        "Q(c1) is spanned by 1, t^4, t^2 since (t^4)^2 = -108 t^2.",
        "The six automorphisms send t to +-t, +-zeta t, +-zeta^2 t.",
        "Arrow (i, j) is the isomorphism Q(cj) -> Q(ci) with cj -> ci, realized by the first automorphism doing so.",
    ]
    return tower("cbrt2", g, list(zip(labels, autos)), subfields, arrows, notes)


def klein():
    g = x**4 - 10 * x**2 + 1
    theta = x
    r2 = (theta**3 - 9 * theta) / 2
    r3 = (11 * theta - theta**3) / 2
    assert sp.rem(sp.expand(r2**2 - 2), g, x) == 0
    assert sp.rem(sp.expand(r3**2 - 3), g, x) == 0
    autos = [
        ("e", theta),
        ("a", sp.expand(-r2 + r3)),
        ("b", sp.expand(r2 - r3)),
        ("c", -theta),
    ]
    subfields = [("Q(sqrt2, sqrt3)", [theta**k for k in range(4)])]
    arrows = [(0, 0, k) for k in range(4)]
    notes = [
        "N = Q(t), t = sqrt2 + sqrt3, minimal polynomial X^4 - 10 X^2 + 1.",
        "sqrt2 = (t^3 - 9t)/2 and sqrt3 = (11t - t^3)/2.",
        "a negates sqrt2: t -> 10t - t^3; b negates sqrt3: t -> t^3 - 10t; c = ab: t -> -t.",
    ]
    return tower("klein-galois", g, autos, subfields, arrows, notes)


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent)
    for doc in (cbrt2(), klein()):
        text = json.dumps(doc, indent=2, ensure_ascii=False)
        (out / f"{doc['name']}.json").write_text(text + "\n")


if __name__ == "__main__":
    main()
