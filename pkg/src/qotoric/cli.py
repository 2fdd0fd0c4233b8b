"""Command-line driver: one operation per invocation, JSON in and out.

Exit status is 0 on success, 2 on domain errors and 3 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from . import formats as fmt
from .errors import QotoricError
from .grading import (
    DEFAULT_SEED,
    divisorial_valuation,
    exceptional_weights,
    invariance_check,
    verify_qo_graded_iso,
    verify_toric_graded_iso,
)
from .lattice import Cone, dual_cone
from .newton import dual_newton_diagram, exceptional_edges, face_of, polyhedron_from_support
from .qo import branch_polynomial, discriminant, is_quasi_ordinary, semiroot_value
from .semigroup import are_isomorphic, graded_dims, minimal_generators, saturation
from .series import newton_polyhedron, symbolic_restriction

EXIT_OK, EXIT_DOMAIN, EXIT_PARSE = 0, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _load(path: str | None, flag: str):
    if path is None:
        raise InputError(f"{flag} is required")
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _weight(args, required: bool = True):
    if args.weight is None:
        if required:
            raise InputError("--weight is required")
        return None
    return fmt.parse_weight(args.weight)


def _trunc(args):
    return None if args.trunc is None else fmt.trunc_in(args.trunc)


def _series(args):
    phi = fmt.series_in(_load(args.series, "--series"))
    t = _trunc(args)
    return phi if t is None else phi.truncate(t)


def _branch(args, path=None, flag="--branch"):
    return fmt.branch_in(_load(path if path is not None else args.branch, flag), _trunc(args))


def _semigroup(args, path=None, flag="--semigroup"):
    return fmt.semigroup_in(_load(path if path is not None else args.semigroup, flag))


# Each command returns a callable doing the domain work, so that parsing
# errors (exit 3) are raised before any domain error (exit 2).

def cmd_valuation(args):
    phi, n = _series(args), _weight(args)
    return lambda: {"valuation": divisorial_valuation(phi, n)}


def cmd_restrict(args):
    phi, n = _series(args), _weight(args)
    return lambda: {"restriction": fmt.series_out(symbolic_restriction(phi, n))}


def cmd_newton(args):
    n = _weight(args, required=False)
    if args.support is not None:
        doc = _load(args.support, "--support")
        points = [fmt.vector_in(p) for p in doc["points"]]
        d = len(points[0]) if points else doc.get("d", 1)
        recession = fmt.cone_in(doc["recession"], d) if "recession" in doc else Cone.orthant(d)
        build = lambda: polyhedron_from_support(points, recession)
    else:
        phi = _series(args)
        build = lambda: newton_polyhedron(phi)

    def run():
        P = build()
        out = {"vertices": [fmt.vector_out(v) for v in P.vertices],
               "recession": [list(r) for r in P.recession.generators]}
        if n is not None:
            out["face"] = [fmt.vector_out(p) for p in face_of(P, n)]
        return out
    return run


def cmd_blowup_fan(args):
    if args.semigroup is not None:
        s = _semigroup(args)

        def run():
            sat = saturation(s)
            sigma = dual_cone(s.cone)
            fan = dual_newton_diagram(polyhedron_from_support(sat.generators, s.cone), sigma)
            return {"fan": fmt.fan_out(fan),
                    "exceptional_weights": [fmt.vector_out(w) for w in exceptional_weights(s)]}
        return run
    doc = _load(args.support, "--support")
    points = [fmt.vector_in(p) for p in doc["points"]]

    def run():
        d = len(points[0])
        orthant = Cone.orthant(d)
        fan = dual_newton_diagram(polyhedron_from_support(points, orthant), orthant)
        return {"fan": fmt.fan_out(fan),
                "exceptional_weights": [fmt.vector_out(w) for w in exceptional_edges(fan, orthant)]}
    return run


def cmd_qo_check(args):
    f = fmt.poly_in(_load(args.poly, "--poly"))

    def run():
        delta = is_quasi_ordinary(f)
        return {"quasi_ordinary": delta is not None,
                "delta": None if delta is None else fmt.vector_out(delta),
                "discriminant": fmt.series_out(discriminant(f))}
    return run


def cmd_qo_invariants(args):
    zeta = _branch(args)

    def run():
        data = zeta.data
        gamma = data.gamma_semigroup
        return {
            "exponents": [fmt.vector_out(l) for l in data.exponents],
            "indices": list(data.indices),
            "gammas": [fmt.vector_out(g) for g in data.gammas],
            "lattices": [[fmt.vector_out(b) for b in M.basis] for M in data.lattices],
            "semigroup": fmt.semigroup_out(minimal_generators(gamma), zeta.d),
            "degree": data.degree,
            "branch_polynomial": fmt.poly_out(branch_polynomial(zeta)),
        }
    return run


def cmd_semiroot(args):
    zeta = _branch(args)

    def run():
        g = zeta.data.g
        top = g if args.upto is None else min(g, args.upto)
        return {"semiroots": [{"j": j, "value": fmt.series_out(semiroot_value(zeta, j))}
                              for j in range(1, top + 1)]}
    return run


def cmd_semigroup_mingens(args):
    s = _semigroup(args)
    return lambda: {"minimal_generators": fmt.semigroup_out(minimal_generators(s), s.ambient_rank)}


def cmd_semigroup_saturate(args):
    s = _semigroup(args)

    def run():
        sat = saturation(s)
        return {"saturation": fmt.semigroup_out(sat.generators, s.ambient_rank)}
    return run


def cmd_semigroup_dims(args):
    s, n = _semigroup(args), _weight(args)
    if args.upto is None:
        raise InputError("--upto is required")
    return lambda: {"dims": graded_dims(s, n, args.upto)}


def _iso_out(W):
    return {"isomorphic": W is not None, "witness": fmt.matrix_out(W)}


def cmd_semigroup_iso(args):
    a, b = _semigroup(args, args.a, "--a"), _semigroup(args, args.b, "--b")
    return lambda: _iso_out(are_isomorphic(a, b))


def _reports(weights, verify):
    return {"reports": [fmt.report_out(verify(w)) for w in weights]}


def cmd_verify_toric(args):
    s, n = _semigroup(args), _weight(args, required=False)
    K = 10 if args.upto is None else args.upto

    def run():
        weights = [n] if n is not None else exceptional_weights(s)
        return _reports(weights, lambda w: verify_toric_graded_iso(s, w, K, args.samples, args.seed))
    return run


def cmd_verify_qo(args):
    zeta, n = _branch(args), _weight(args, required=False)
    K = 8 if args.upto is None else args.upto

    def run():
        weights = [n] if n is not None else exceptional_weights(zeta.data.gamma_semigroup)
        return _reports(weights, lambda w: verify_qo_graded_iso(zeta, w, K, args.samples, args.seed))
    return run


def cmd_invariance(args):
    a, b = _branch(args, args.a, "--a"), _branch(args, args.b, "--b")
    return lambda: _iso_out(invariance_check(a, b))


COMMANDS: dict[str, Callable] = {
    "valuation": cmd_valuation,
    "restrict": cmd_restrict,
    "newton": cmd_newton,
    "blowup-fan": cmd_blowup_fan,
    "qo-check": cmd_qo_check,
    "qo-invariants": cmd_qo_invariants,
    "semiroot": cmd_semiroot,
    "semigroup-mingens": cmd_semigroup_mingens,
    "semigroup-saturate": cmd_semigroup_saturate,
    "semigroup-dims": cmd_semigroup_dims,
    "semigroup-iso": cmd_semigroup_iso,
    "verify-toric": cmd_verify_toric,
    "verify-qo": cmd_verify_qo,
    "invariance": cmd_invariance,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qotoric", description="Toric and quasi-ordinary singularity invariants.")
    p.add_argument("command", choices=sorted(COMMANDS))
    for flag in ("--series", "--poly", "--branch", "--a", "--b", "--support", "--semigroup"):
        p.add_argument(flag, metavar="FILE")
    p.add_argument("--weight", help="comma separated rationals, e.g. 1/2,1")
    p.add_argument("--upto", type=int, help="maximal grade (or index j for semiroot)")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--trunc", help="truncate input series at this total degree")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return p


def _emit(doc: dict, stream) -> None:
    stream.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def main(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        run = COMMANDS[args.command](args)
    except QotoricError as exc:
        _emit({"errors": [{"type": type(exc).__name__, "message": str(exc)}]}, stdout)
        return EXIT_DOMAIN
    except (InputError, ValueError, KeyError, TypeError, IndexError) as exc:
        print(f"qotoric: {exc}", file=sys.stderr)
        _emit({"errors": [{"type": "InputError", "message": str(exc)}]}, stdout)
        return EXIT_PARSE
    try:
        result = run()
    except (QotoricError, ValueError) as exc:
        print(f"qotoric: {exc}", file=sys.stderr)
        _emit({"errors": [{"type": type(exc).__name__, "message": str(exc)}]}, stdout)
        return EXIT_DOMAIN
    result["errors"] = []
    _emit(result, stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
