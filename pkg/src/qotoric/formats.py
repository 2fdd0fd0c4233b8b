"""JSON encodings of the objects exchanged by the command-line driver.

Rationals are strings ``"p/q"`` (or ``"p"``); integers are accepted on input.
A series is ``{"d", "m", "trunc", "terms": [{"u": [...], "c": coefficient}]}``
with coefficients ``{"level": L, "coords": [...]}`` in the power basis of
``Q(zeta_L)``; a plain rational is accepted as a coefficient on input.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .cyclotomic import CyclotomicNumber
from .lattice import Cone, RationalVector, common_denominator, vector
from .newton import Fan
from .qo import QuasiOrdinaryBranch, WeierstrassPolynomial
from .semigroup import AffineSemigroup
from .series import INF, FractionalSeries


class FormatError(ValueError):
    """Malformed input document."""


def rational(x) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise FormatError(f"expected an integer or a 'p/q' string, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {x!r}") from exc


def rational_out(x: Fraction) -> str:
    return str(Fraction(x))


def vector_in(v) -> RationalVector:
    if not isinstance(v, list):
        raise FormatError(f"expected a list, got {v!r}")
    return tuple(rational(x) for x in v)


def vector_out(v) -> list[str]:
    return [rational_out(x) for x in v]


def parse_weight(text: str) -> RationalVector:
    """``"1,1"`` or ``"1/2,1/2"``."""
    try:
        return vector(part.strip() for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad weight {text!r}") from exc


def cyclotomic_in(c) -> CyclotomicNumber:
    if isinstance(c, dict):
        try:
            level = c["level"]
            coords = [rational(x) for x in c["coords"]]
        except KeyError as exc:
            raise FormatError(f"coefficient is missing {exc}") from exc
        if not isinstance(level, int) or level < 1:
            raise FormatError(f"bad level {level!r}")
        return CyclotomicNumber(level, coords)
    return CyclotomicNumber.rational(rational(c))


def cyclotomic_out(c: CyclotomicNumber) -> dict:
    return {"level": c.level, "coords": [rational_out(x) for x in c.coeffs]}


def trunc_in(t) -> Fraction | float:
    if t is None or t == "inf":
        return INF
    return rational(t)


def trunc_out(t) -> str:
    return "inf" if t == INF else rational_out(t)


def series_in(doc) -> FractionalSeries:
    if not isinstance(doc, dict) or "terms" not in doc:
        raise FormatError("a series needs a 'terms' list")
    terms = []
    for t in doc["terms"]:
        try:
            terms.append((vector_in(t["u"]), cyclotomic_in(t["c"])))
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad term {t!r}") from exc
    if "d" in doc:
        d = doc["d"]
    elif terms:
        d = len(terms[0][0])
    else:
        raise FormatError("an empty series needs 'd'")
    m = doc.get("m", 1)
    if not isinstance(m, int) or m < 1:
        raise FormatError(f"bad denominator {m!r}")
    return FractionalSeries(d, terms, trunc_in(doc.get("trunc", "inf")), m)


def series_out(phi: FractionalSeries) -> dict:
    return {
        "d": phi.d,
        "m": phi.m,
        "trunc": trunc_out(phi.trunc),
        "terms": [{"u": vector_out(u), "c": cyclotomic_out(c)} for u, c in sorted(phi.terms.items())],
    }


def poly_in(doc) -> WeierstrassPolynomial:
    try:
        coeffs = tuple(series_in(c) for c in doc["coefficients"])
        return WeierstrassPolynomial(doc["degree"], coeffs)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad polynomial: {exc}") from exc


def poly_out(f: WeierstrassPolynomial) -> dict:
    return {"degree": f.degree, "coefficients": [series_out(c) for c in f.coefficients]}


def branch_in(doc, trunc=None) -> QuasiOrdinaryBranch:
    phi = series_in(doc)
    if trunc is not None:
        phi = phi.truncate(trunc)
    return QuasiOrdinaryBranch(phi, bool(doc.get("complete", False)))


def semigroup_in(doc) -> AffineSemigroup:
    """Generators are read as ``g / m``."""
    try:
        m = doc.get("m", 1)
        gens = [vector_in(g) for g in doc["generators"]]
    except (KeyError, AttributeError) as exc:
        raise FormatError("a semigroup needs 'generators'") from exc
    if not isinstance(m, int) or m < 1:
        raise FormatError(f"bad denominator {m!r}")
    d = doc.get("d", len(gens[0]) if gens else None)
    if d is None:
        raise FormatError("an empty semigroup needs 'd'")
    return AffineSemigroup.from_generators([[x / m for x in g] for g in gens], d)


def semigroup_out(gens, d: int) -> dict:
    gens = sorted(vector(g) for g in gens)
    m = common_denominator(gens)
    return {"d": d, "m": m, "generators": [[int(x * m) for x in g] for g in gens]}


def fan_out(fan: Fan) -> dict:
    return {"cones": [[list(r) for r in c.rays] for c in fan.cones]}


def cone_in(rays, d: int) -> Cone:
    return Cone.from_generators([vector_in(r) for r in rays], d)


def matrix_out(W) -> Any:
    if W is None:
        return None
    return [[int(x) for x in row] for row in W]


def report_out(report) -> dict:
    return {
        "weight": vector_out(report.weight),
        "max_grade": report.max_grade,
        "dims_semigroup": report.dims_semigroup,
        "dims_filtration": report.dims_filtration,
        "samples": report.samples,
        "multiplicativity_failures": report.multiplicativity_failures,
        "leading_form_witnesses": [
            {"u": vector_out(u), "element": series_out(w)}
            for u, w in sorted(report.leading_form_witnesses.items())
        ],
        "checks": dict(report.checks),
        "verdict": "pass" if report.passed else "fail",
        "counterexample": report.counterexample,
        "caveat": report.caveat,
    }
