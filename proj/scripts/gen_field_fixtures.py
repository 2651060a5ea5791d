#!/usr/bin/env python3
"""Regenerate data/fields/*.json and tests/descent_fixture_data.hpp.

Each fixture presents a Galois closure as Q(theta) with automorphisms given by
polynomial images of theta, plus frozen coordinate vectors for the elements the
tests need.  Run from the repository root.
"""

import json
import os

import sympy as sp
from sympy import I, Rational, sqrt


class Fixture:
    def __init__(self, name, theta, autos, binding):
        self.name = name
        self.theta = theta
        self.autos = autos          # name -> image of theta (algebraic expr)
        self.binding = binding      # name -> cycle string
        self.min_poly = sp.minimal_polynomial(theta, sp.Symbol("x"), polys=True)
        self.d = self.min_poly.degree()

    def theta_poly(self, expr):
        """coefficients c_0..c_{d-1} with expr = sum c_k theta^k, exact"""
        a = sp.to_number_field(expr, self.theta)
        cs = list(reversed(a.coeffs()))
        cs += [Rational(0)] * (self.d - len(cs))
        val = sum(c * self.theta**k for k, c in enumerate(cs))
        assert sp.simplify(sp.expand(val - expr)) == 0, expr
        return [Rational(c) for c in cs]

    def min_poly_coeffs(self):
        cs = list(reversed(self.min_poly.all_coeffs()))
        assert cs[-1] == 1
        return [Rational(c) for c in cs]


def rat_json(r):
    r = Rational(r)
    if r.q == 1:
        return int(r.p)
    return "%d/%d" % (r.p, r.q)


def rat_cpp(r):
    r = Rational(r)
    return '"%d/%d"' % (r.p, r.q) if r.q != 1 else '"%d"' % r.p


def emit_fixture(fix, fields_dir):
    doc = {
        "name": fix.name,
        "min_poly": [rat_json(c) for c in fix.min_poly_coeffs()],
        "generators": {g: [rat_json(c) for c in fix.theta_poly(img)]
                       for g, img in fix.autos.items()},
        "binding": dict(fix.binding),
    }
    with open(os.path.join(fields_dir, fix.name + ".json"), "w") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def cpp_vec(name, coeffs):
    return "constexpr const char* %s[] = {%s};" % (name, ", ".join(rat_cpp(c) for c in coeffs))


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    root = os.path.dirname(here)
    fields_dir = os.path.join(root, "data", "fields")
    os.makedirs(fields_dir, exist_ok=True)

    hpp = ["// Frozen coordinate vectors for the bundled field presentations.",
           "// Generated by scripts/gen_field_fixtures.py; do not edit by hand.",
           "#pragma once", ""]

    # --- Q(omega, 2^(1/3)), theta = omega + 2^(1/3) --------------------------
    c = 2 ** Rational(1, 3)
    w = (-1 + sqrt(3) * I) / 2
    fix1 = Fixture("cbrt2", w + c,
                   {"sigma": w + w * c,      # omega -> omega, alpha -> omega*alpha
                    "tau": w**2 + c},        # omega -> omega^2, alpha -> alpha
                   {"sigma": "(1,2,3)", "tau": "(2,3)"})
    emit_fixture(fix1, fields_dir)
    hpp.append("namespace fixture_cbrt2 {")
    hpp.append(cpp_vec("kOmega", fix1.theta_poly(w)))
    hpp.append(cpp_vec("kOmegaSq", fix1.theta_poly(w**2)))
    hpp.append(cpp_vec("kAlpha", fix1.theta_poly(c)))
    hpp.append(cpp_vec("kAlphaSq", fix1.theta_poly(c**2)))
    hpp.append("}  // namespace fixture_cbrt2")
    hpp.append("")

    # --- Q(sqrt2, sqrt3), theta = sqrt2 + sqrt3 ------------------------------
    r2, r3 = sqrt(2), sqrt(3)
    fix2 = Fixture("biquadratic", r2 + r3,
                   {"sigma": -r2 + r3,       # sqrt2 -> -sqrt2
                    "tau": r2 - r3},         # sqrt3 -> -sqrt3
                   {"sigma": "(1,2)(3,4)", "tau": "(1,3)(2,4)"})
    emit_fixture(fix2, fields_dir)
    hpp.append("namespace fixture_biquadratic {")
    hpp.append(cpp_vec("kSqrt2", fix2.theta_poly(r2)))
    hpp.append(cpp_vec("kSqrt3", fix2.theta_poly(r3)))
    hpp.append(cpp_vec("kSqrt6", fix2.theta_poly(r2 * r3)))
    hpp.append("}  // namespace fixture_biquadratic")
    hpp.append("")

    # --- Q(2^(1/4), i), theta = 2^(1/4) + i ----------------------------------
    al = 2 ** Rational(1, 4)
    fix3 = Fixture("quartic2", al + I,
                   {"r": I * al + I,         # alpha -> i*alpha, i -> i
                    "s": al - I},            # alpha -> alpha, i -> -i
                   {"r": "(1,2,3,4)", "s": "(2,4)"})
    emit_fixture(fix3, fields_dir)
    hpp.append("namespace fixture_quartic2 {")
    hpp.append(cpp_vec("kI", fix3.theta_poly(I)))
    hpp.append(cpp_vec("kAlpha", fix3.theta_poly(al)))
    hpp.append(cpp_vec("kAlphaSq", fix3.theta_poly(al**2)))
    hpp.append(cpp_vec("kIAlphaSq", fix3.theta_poly(I * al**2)))
    hpp.append("}  // namespace fixture_quartic2")
    hpp.append("")

    with open(os.path.join(root, "tests", "descent_fixture_data.hpp"), "w") as fh:
        fh.write("\n".join(hpp))

    for f in (fix1, fix2, fix3):
        print(f.name, "degree", f.d, "min_poly", [str(x) for x in f.min_poly_coeffs()])


if __name__ == "__main__":
    main()
