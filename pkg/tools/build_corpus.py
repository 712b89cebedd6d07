"""Regenerate the bundled proof corpus (src/meadow/corpus/*.proof).

Each derivation below lists the intermediate terms of a textbook proof; the
helpers in proofkit fill in the explicit kernel steps.  Run from the repository
root:  python tools/build_corpus.py
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from proofkit import Derivation  # noqa: E402

from meadow.proofs import Proof, Registry, check_proof, format_proof  # noqa: E402
from meadow.syntax import parse  # noqa: E402

OUT = Path(__file__).resolve().parent.parent / "src" / "meadow" / "corpus"

registry = Registry()
files: dict[str, list[tuple[str, Proof]]] = {}


def record(filename: str, proof: Proof, comment: str = "") -> None:
    result = check_proof(proof, registry)
    if not hasattr(result, "rules"):
        raise SystemExit(f"kernel rejected {proof.name}: {result}")
    files.setdefault(filename, []).append((comment, proof))


def D(name: str, lhs: str) -> Derivation:
    return Derivation(name, lhs, registry)


def uniqueness(name: str, a: str, b: str, f3: str, f4: str) -> Proof:
    """b = a^-1 from a*(a*b) = a (lemma f3) and b*(b*a) = b (lemma f4).

    With c = a^-1:  b = b(ba) = b(b(a(ac))) = (b(ba))(ac) = b(ac) = c(ab)
    = (c(ca))(ab) = c(c(a(ab))) = c(ca) = c.
    """
    c = f"({a})^-1"
    A, B, C = f"({a})", f"({b})", f"({c})"
    d = D(name, b)
    d.to(f"{B} * ({B} * {A})", via=f4)
    d.to(f"{B} * ({B} * ({A} * ({A} * {C})))", via="md.10")
    d.to(f"({B} * ({B} * {A})) * ({A} * {C})")
    d.to(f"{B} * ({A} * {C})", via=f4)
    d.to(f"{C} * ({A} * {B})")
    d.to(f"({C} * ({C} * {C}^-1)) * ({A} * {B})", via="md.10")
    d.to(f"({C} * ({C} * {A})) * ({A} * {B})", via="md.9")
    d.to(f"{C} * ({C} * ({A} * ({A} * {B})))")
    d.to(f"{C} * ({C} * {A})", via=f3)
    d.to(f"{C} * ({C} * {C}^-1)", via="md.9")
    return d.qed(c)


# ---------------------------------------------------------------- ring identities
RING = "00_ring.proof"

record(RING, D("zero_mul", "0 * x").chain(
    "0 * x + 0",
    "0 * x + (0 * x + -(0 * x))",
    "(0 * x + 0 * x) + -(0 * x)",
    "(x * 0 + x * 0) + -(0 * x)",
    "x * (0 + 0) + -(0 * x)",
    "x * 0 + -(0 * x)",
    "0 * x + -(0 * x)",
).qed("0"), "0 * x = 0")

record(RING, D("neg_zero", "-0").chain("-0 + 0", "0 + -0").qed("0"))

record(RING, D("neg_neg", "-(-x)").chain(
    "-(-x) + 0",
    "-(-x) + (x + -x)",
    "-(-x) + (-x + x)",
    "(-(-x) + -x) + x",
    "(-x + -(-x)) + x",
    "0 + x",
    "x + 0",
).qed("x"), "-(-x) = x")

record(RING, D("mul_neg", "x * -y").chain(
    "x * -y + 0",
    "x * -y + (x * y + -(x * y))",
    "(x * -y + x * y) + -(x * y)",
    "(x * y + x * -y) + -(x * y)",
    "x * (y + -y) + -(x * y)",
    "x * 0 + -(x * y)",
    "0 * x + -(x * y)",
    "0 + -(x * y)",
    "-(x * y) + 0",
).qed("-(x * y)"), "x * -y = -(x * y)")

record(RING, D("mul_one", "x * 1").chain("1 * x").qed("x"))
record(RING, D("zero_add", "0 + x").chain("x + 0").qed("x"))
record(RING, D("neg_mul", "-x * y").chain("y * -x", "-(y * x)").qed("-(x * y)"))
record(RING, D("neg_mul_neg", "-x * -y").chain("-(-x * y)", "-(-(x * y))").qed("x * y"))

record(RING, D("neg_add", "-(x + y)").chain(
    "-(x + y) + 0",
    "-(x + y) + (x + -x)",
    "-(x + y) + ((x + -x) + 0)",
    "-(x + y) + ((x + -x) + (y + -y))",
    "((x + y) + -(x + y)) + (-x + -y)",
    "0 + (-x + -y)",
).qed("-x + -y"))

record(RING, D("zero_inv", "0^-1").chain(
    "0^-1 * (0^-1 * (0^-1)^-1)",
    "0^-1 * (0^-1 * 0)",
    "0^-1 * (0 * 0^-1)",
    "0^-1 * 0",
    "0 * 0^-1",
).qed("0"), "0^-1 = 0")

record(RING, D("mul_inv_unit", "(x * y) * ((x * y) * (x^-1 * y^-1))").chain(
    "(x * (x * x^-1)) * (y * (y * y^-1))",
    "x * (y * (y * y^-1))",
).qed("x * y"))

record(RING, D("mul_inv_unit2", "(x^-1 * y^-1) * ((x^-1 * y^-1) * (x * y))").chain(
    "(x^-1 * (x^-1 * x)) * (y^-1 * (y^-1 * y))",
    "(x^-1 * (x^-1 * (x^-1)^-1)) * (y^-1 * (y^-1 * y))",
    "x^-1 * (y^-1 * (y^-1 * y))",
    "x^-1 * (y^-1 * (y^-1 * (y^-1)^-1))",
).qed("x^-1 * y^-1"))

mul_inv = uniqueness("mul_inv", "x * y", "x^-1 * y^-1", "mul_inv_unit", "mul_inv_unit2")
# stated left to right as (x*y)^-1 = x^-1 * y^-1
record(RING, mul_inv, "proved as x^-1 * y^-1 = (x * y)^-1")

record(RING, D("neg_inv_unit", "-x * (-x * -(x^-1))").chain(
    "-x * (x * x^-1)",
    "-(x * (x * x^-1))",
).qed("-x"))

record(RING, D("neg_inv_unit2", "-(x^-1) * (-(x^-1) * -x)").chain(
    "-(x^-1) * (x^-1 * x)",
    "-(x^-1 * (x^-1 * x))",
    "-(x^-1 * (x^-1 * (x^-1)^-1))",
).qed("-(x^-1)"))

record(RING, uniqueness("neg_inv", "-x", "-(x^-1)", "neg_inv_unit", "neg_inv_unit2"),
       "proved as -(x^-1) = (-x)^-1")


# ---------------------------------------------------------------- pseudo units and zeros
PSEUDO = "01_pseudo.proof"

record(PSEUDO, D("pu_mul", "one(x) * x").chain("x * (x * x^-1)").qed("x"), "one(x) * x = x")
record(PSEUDO, D("pu_inv", "one(x) * x^-1").chain(
    "x^-1 * (x^-1 * x)",
    "x^-1 * (x^-1 * (x^-1)^-1)",
).qed("x^-1"))
record(PSEUDO, D("pu_sq", "one(x) * one(x)").chain("(x * (x * x^-1)) * x^-1").qed("one(x)"))
record(PSEUDO, D("pz_pu", "zero(x) + one(x)").chain(
    "1 + (-one(x) + one(x))",
    "1 + (one(x) + -one(x))",
    "1 + 0",
).qed("1"), "zero(x) + one(x) = 1")
record(PSEUDO, D("pu_pz", "one(x) * zero(x)").chain(
    "one(x) * 1 + one(x) * -one(x)",
    "one(x) + one(x) * -one(x)",
    "one(x) + -(one(x) * one(x))",
    "one(x) + -one(x)",
).qed("0"))
record(PSEUDO, D("pz_mul", "zero(x) * x").chain(
    "x * zero(x)",
    "x * 1 + x * -one(x)",
    "x + x * -one(x)",
    "x + -(x * one(x))",
    "x + -x",
).qed("0"))
record(PSEUDO, D("pz_inv", "zero(x) * x^-1").chain(
    "x^-1 * zero(x)",
    "x^-1 * 1 + x^-1 * -one(x)",
    "x^-1 + x^-1 * -one(x)",
    "x^-1 + -(x^-1 * one(x))",
    "x^-1 + -(one(x) * x^-1)",
    "x^-1 + -x^-1",
).qed("0"))
record(PSEUDO, D("pz_sq", "zero(x) * zero(x)").chain(
    "zero(x) * 1 + zero(x) * -one(x)",
    "zero(x) + zero(x) * -one(x)",
    "zero(x) + -(zero(x) * one(x))",
    "zero(x) + -(one(x) * zero(x))",
    "zero(x) + -0",
    "zero(x) + 0",
).qed("zero(x)"))


def idempotent_inverse(name: str, e: str, square: str) -> Proof:
    """e^-1 = e for an idempotent e (``square`` proves e * e = e)."""
    E = f"({e})"
    return D(name, f"{E}^-1").chain(
        f"{E}^-1 * ({E}^-1 * ({E}^-1)^-1)",
        f"{E}^-1 * ({E}^-1 * {E})",
    ).to(f"{E}^-1 * ({E}^-1 * ({E} * {E}))", via=square).chain(
        f"({E} * {E}^-1) * ({E} * {E}^-1)",
        f"{E} * {E}^-1",
    ).to(f"({E} * {E}) * {E}^-1", via=square).chain(
        f"{E} * ({E} * {E}^-1)",
    ).qed(e)


record(PSEUDO, idempotent_inverse("pu_inv_self", "one(x)", "pu_sq"), "one(x)^-1 = one(x)")
record(PSEUDO, idempotent_inverse("pz_inv_self", "zero(x)", "pz_sq"))

# ---------------------------------------------------------------- sign
SIGN = "02_sign.proof"

record(SIGN, D("sign_zero", "s(0)").chain("s(0 * 0^-1)", "0 * 0^-1").qed("0"), "s(0) = 0")
record(SIGN, D("sign_one", "s(1)").chain(
    "s(1 + 0)", "s(1 + -0)", "s(zero(0))", "zero(0)", "1 + -0", "1 + 0",
).qed("1"), "s(1) = 1")
record(SIGN, D("sign_square", "s(x * x)").chain(
    "s(x) * s(x)", "s(x) * s(x^-1)", "s(x * x^-1)",
).qed("one(x)"), "s(x * x) = one(x)")
record(SIGN, D("sign_unit", "one(x) * s(x)").chain(
    "s(x) * one(x)", "s(x) * s(x * x^-1)", "s(x * (x * x^-1))",
).qed("s(x)"), "one(x) * s(x) = s(x)")
record(SIGN, D("sign_cube", "s((x * x) * x)").chain("s(x * x) * s(x)", "one(x) * s(x)").qed("s(x)"))

A = "s(x)"
record(SIGN, D("sign_inv", f"{A}^-1").chain(
    f"{A}^-1 * ({A}^-1 * ({A}^-1)^-1)",
    f"{A}^-1 * ({A}^-1 * {A})",
    f"{A}^-1 * ({A}^-1 * s((x * x) * x))",
    f"{A}^-1 * ({A}^-1 * (s(x * x) * {A}))",
    f"{A}^-1 * ({A}^-1 * (({A} * {A}) * {A}))",
    f"({A} * {A}^-1) * (({A} * {A}^-1) * {A})",
    f"({A} * {A}^-1) * {A}",
).qed(A), "s(x)^-1 = s(x)")

record(SIGN, D("sign_cases", f"({A} * (1 - {A})) * (1 + {A})").chain(
    f"({A} * 1 + {A} * -{A}) * (1 + {A})",
    f"({A} + {A} * -{A}) * (1 + {A})",
    f"({A} + -({A} * {A})) * (1 + {A})",
    f"(1 + {A}) * ({A} + -({A} * {A}))",
    f"(1 + {A}) * {A} + (1 + {A}) * -({A} * {A})",
    f"(1 + {A}) * {A} + -((1 + {A}) * ({A} * {A}))",
    f"{A} * (1 + {A}) + -((1 + {A}) * ({A} * {A}))",
    f"({A} * 1 + {A} * {A}) + -((1 + {A}) * ({A} * {A}))",
    f"({A} + {A} * {A}) + -((1 + {A}) * ({A} * {A}))",
    f"({A} + {A} * {A}) + -(({A} * {A}) * (1 + {A}))",
    f"({A} + {A} * {A}) + -(({A} * {A}) * 1 + ({A} * {A}) * {A})",
    f"({A} + {A} * {A}) + -({A} * {A} + ({A} * {A}) * {A})",
    f"({A} + {A} * {A}) + (-({A} * {A}) + -(({A} * {A}) * {A}))",
    f"({A} * {A} + -({A} * {A})) + ({A} + -(({A} * {A}) * {A}))",
    f"0 + ({A} + -(({A} * {A}) * {A}))",
    f"{A} + -(({A} * {A}) * {A})",
    f"{A} + -(s(x * x) * {A})",
    f"{A} + -s((x * x) * x)",
    f"{A} + -{A}",
).qed("0"), "s(x) * (1 - s(x)) * (1 + s(x)) = 0")

record(SIGN, D("sign_zero_part", "zero(x) * s(x)").chain(
    "zero(x) * (one(x) * s(x))",
    "(zero(x) * one(x)) * s(x)",
    "(one(x) * zero(x)) * s(x)",
    "0 * s(x)",
    "0",
).qed("zero(x) * x"), "zero(x) * s(x) = zero(x) * x")

Z = "zero(1 - y)"
record(SIGN, D("pz_one_minus", f"{Z} * y").chain(
    f"{Z} * (y + 0)",
    f"{Z} * (0 + y)",
    f"{Z} * ((1 + -1) + y)",
    f"{Z} * (1 + (-1 + y))",
    f"{Z} * (1 + (-1 + -(-y)))",
    f"{Z} * (1 + -(1 + -y))",
    f"{Z} * 1 + {Z} * -(1 - y)",
    f"{Z} + {Z} * -(1 - y)",
    f"{Z} + -({Z} * (1 - y))",
    f"{Z} + -0",
    f"{Z} + 0",
).qed(Z), "zero(1 - y) * y = zero(1 - y)")
record(SIGN, D("sign_one_part", f"{Z} * s(y)").chain(
    f"s({Z}) * s(y)",
    f"s({Z} * y)",
    f"s({Z})",
    Z,
).qed(f"{Z} * y"), "zero(1 - y) * s(y) = zero(1 - y) * y")

record(SIGN, D("sign_units", "s(one(y) * one(z))").chain(
    "s(one(y)) * s(one(z))",
    "one(y) * s(one(z))",
).qed("one(y) * one(z)"))

B = f"(1 - {A})"
W = f"(one({A}) * one({B}))"
record(SIGN, D("sign_minus_part", f"{W} * {A}").chain(
    f"{W} * {A} + 0",
    f"{W} * {A} + ({W} + -{W})",
    f"({W} * {A} + {W}) + -{W}",
    f"({W} + {W} * {A}) + -{W}",
    f"({W} * 1 + {W} * {A}) + -{W}",
    f"{W} * (1 + {A}) + -{W}",
    f"(({A} * {B}) * (1 + {A})) * ({A}^-1 * {B}^-1) + -{W}",
    f"0 * ({A}^-1 * {B}^-1) + -{W}",
    f"0 + -{W}",
).qed(f"-{W}"), "one(s(x)) * one(1 - s(x)) * s(x) = -(one(s(x)) * one(1 - s(x)))")
record(SIGN, D("sign_minus_sign", f"{W} * s({A})").chain(
    f"s({W}) * s({A})",
    f"s({W} * {A})",
    f"s(-{W})",
    f"s(-(1 * {W}))",
    f"s(-1 * {W})",
    f"s(-1) * s({W})",
    f"-1 * s({W})",
    f"-1 * {W}",
    f"-(1 * {W})",
    f"-{W}",
).qed(f"{W} * {A}"))

SA = f"s({A})"
UA, ZA, UB, ZB = f"one({A})", f"zero({A})", f"one({B})", f"zero({B})"
# inlined rather than citing sign_zero_part, which sign_idem itself uses
record(SIGN, D("sign_idem_zero_case", f"{ZA} * {SA}").chain(
    f"{ZA} * ({UA} * {SA})",
    f"({ZA} * {UA}) * {SA}",
    f"({UA} * {ZA}) * {SA}",
    f"0 * {SA}",
    "0",
).qed(f"{ZA} * {A}"), "zero(s(x)) * s(s(x)) = zero(s(x)) * s(x)")
record(SIGN, D("sign_idem_mixed_case", f"{UA} * {ZB} * {SA}").chain(
    f"{UA} * ({ZB} * {SA})",
    f"{UA} * ({ZB} * {A})",
).qed(f"{UA} * {ZB} * {A}"), "one(s(x)) * zero(1 - s(x)) * s(s(x)) = one(s(x)) * zero(1 - s(x)) * s(x)")
record(SIGN, D("sign_idem_unit_case", f"{UA} * {SA}").chain(
    f"({UA} * 1) * {SA}",
    f"({UA} * ({ZB} + {UB})) * {SA}",
    f"({UA} * {ZB} + {UA} * {UB}) * {SA}",
    f"{SA} * ({UA} * {ZB} + {UA} * {UB})",
    f"{SA} * ({UA} * {ZB}) + {SA} * ({UA} * {UB})",
    f"{UA} * {ZB} * {SA} + {UA} * {UB} * {SA}",
    f"{UA} * {ZB} * {A} + {UA} * {UB} * {SA}",
    f"{UA} * {ZB} * {A} + {UA} * {UB} * {A}",
    f"{A} * ({UA} * {ZB}) + {A} * ({UA} * {UB})",
    f"{A} * ({UA} * {ZB} + {UA} * {UB})",
    f"({UA} * {ZB} + {UA} * {UB}) * {A}",
    f"({UA} * ({ZB} + {UB})) * {A}",
    f"({UA} * 1) * {A}",
).qed(f"{UA} * {A}"), "one(s(x)) * s(s(x)) = one(s(x)) * s(x)")

record(SIGN, D("sign_idem", SA).chain(
    f"1 * {SA}",
    f"({ZA} + {UA}) * {SA}",
    f"{SA} * ({ZA} + {UA})",
    f"{SA} * {ZA} + {SA} * {UA}",
    f"{ZA} * {SA} + {SA} * {UA}",
    f"{ZA} * {A} + {SA} * {UA}",
    f"{ZA} * {A} + {SA} * ({UA} * 1)",
    f"{ZA} * {A} + {SA} * ({UA} * ({ZB} + {UB}))",
    f"{ZA} * {A} + {SA} * ({UA} * {ZB} + {UA} * {UB})",
    f"{ZA} * {A} + ({SA} * ({UA} * {ZB}) + {SA} * ({UA} * {UB}))",
    f"{ZA} * {A} + ({UA} * ({ZB} * {SA}) + ({UA} * {UB}) * {SA})",
    f"{ZA} * {A} + ({UA} * ({ZB} * {A}) + ({UA} * {UB}) * {SA})",
    f"{ZA} * {A} + ({UA} * ({ZB} * {A}) + ({UA} * {UB}) * {A})",
    f"{ZA} * {A} + ({A} * ({UA} * {ZB}) + {A} * ({UA} * {UB}))",
    f"{ZA} * {A} + {A} * ({UA} * {ZB} + {UA} * {UB})",
    f"{ZA} * {A} + {A} * ({UA} * ({ZB} + {UB}))",
    f"{ZA} * {A} + {A} * ({UA} * 1)",
    f"{ZA} * {A} + {A} * {UA}",
    f"{A} * {ZA} + {A} * {UA}",
    f"{A} * ({ZA} + {UA})",
    f"{A} * 1",
).qed(A), "s(s(x)) = s(x)")

record(SIGN, D("sign_two", "s(1 + 1)").chain(
    "s(1 + 1) + 0",
    "s(1 + 1) + (s(1) + -s(1))",
    "s(1 + 1) + (-s(1) + s(1))",
    "(s(1 + 1) + -s(1)) + s(1)",
    "1 * (s(1 + 1) - s(1)) + s(1)",
    "(1 + 0) * (s(1 + 1) - s(1)) + s(1)",
    "(1 + -0) * (s(1 + 1) - s(1)) + s(1)",
    "zero(0) * (s(1 + 1) - s(1)) + s(1)",
    "(1 + -((s(1) - s(1)) * 0^-1)) * (s(1 + 1) - s(1)) + s(1)",
    "zero(s(1) - s(1)) * (s(1 + 1) - s(1)) + s(1)",
    "0 + s(1)",
    "s(1)",
).qed("1"), "closed instance: s(2) = 1")


# ---------------------------------------------------------------- propagation
# E * C[r] = E * C[E * r] for E = one(t) and E = zero(t), one proof per
# single-layer context.  Floor is an axiom in both modes.
PROP = "03_propagation.proof"

MODES = {
    "unit": ("one(t)", "pu_sq", "pu_inv_self", "fc.1"),
    "zero": ("zero(t)", "pz_sq", "pz_inv_self", "fc.2"),
}

for mode, (e, square, inverse, floor_axiom) in MODES.items():
    E = f"({e})"
    ER = f"({E} * r)"
    record(PROP, D(f"prop_add_left_{mode}", f"{E} * (r + u)").chain(
        f"{E} * r + {E} * u",
        f"({E} * {E}) * r + {E} * u",
        f"{E} * {ER} + {E} * u",
    ).qed(f"{E} * ({ER} + u)"), f"{e} * (r + u) = {e} * ({e} * r + u)")
    record(PROP, D(f"prop_add_right_{mode}", f"{E} * (u + r)").chain(
        f"{E} * u + {E} * r",
        f"{E} * u + ({E} * {E}) * r",
        f"{E} * u + {E} * {ER}",
    ).qed(f"{E} * (u + {ER})"))
    record(PROP, D(f"prop_mul_left_{mode}", f"{E} * (r * u)").chain(
        f"({E} * {E}) * (r * u)",
    ).qed(f"{E} * ({ER} * u)"))
    record(PROP, D(f"prop_mul_right_{mode}", f"{E} * (u * r)").chain(
        f"({E} * {E}) * (u * r)",
    ).qed(f"{E} * (u * {ER})"))
    record(PROP, D(f"prop_neg_{mode}", f"{E} * -r").chain(
        f"-({E} * r)",
        f"-(({E} * {E}) * r)",
        f"-({E} * {ER})",
    ).qed(f"{E} * -{ER}"))
    record(PROP, D(f"prop_inv_{mode}", f"{E} * r^-1").chain(
        f"({E} * {E}) * r^-1",
        f"{E} * ({E} * r^-1)",
    ).to(f"{E} * ({E}^-1 * r^-1)", via=inverse).qed(f"{E} * {ER}^-1"))
    record(PROP, D(f"prop_sign_{mode}", f"{E} * s(r)").chain(
        f"({E} * {E}) * s(r)",
        f"{E} * ({E} * s(r))",
        f"{E} * (s({E}) * s(r))",
    ).qed(f"{E} * s({ER})"))
    record(PROP, D(f"prop_floor_{mode}", f"{E} * floor(r)").to(
        f"{E} * floor({ER})", via=floor_axiom,
    ).qed())
    record(PROP, D(f"prop_ceil_{mode}", f"{E} * ceil(r)").chain(
        f"{E} * -floor(-r)",
        f"-({E} * floor(-r))",
    ).to(f"-({E} * floor({E} * -r))", via=floor_axiom).chain(
        f"-({E} * floor(-{ER}))",
        f"{E} * -floor(-{ER})",
    ).qed(f"{E} * ceil({ER})"))


def write() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.proof"):
        old.unlink()
    for filename, entries in files.items():
        chunks = []
        for comment, proof in entries:
            head = f"# {comment}\n" if comment else ""
            chunks.append(head + format_proof(proof))
        (OUT / filename).write_text("\n".join(chunks), encoding="utf-8")
    total = sum(len(v) for v in files.values())
    print(f"wrote {total} proofs to {OUT}")


if __name__ == "__main__":
    write()
