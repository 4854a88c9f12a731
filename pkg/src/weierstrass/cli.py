"""Command line front end.

    weierstrass generators --preset hermitian 5 1 --m 3 --format json
    weierstrass dimension --a 3 --b 28 --m 3 --alpha 8,7,-1
    weierstrass supported-floor --a 3 --b 28 --m 3 --alpha 8,7,-1 --verify

Exit status: 0 ok, 1 bad input, 2 math-domain error (e.g. floor of a divisor
with trivial space), 3 ``--verify`` mismatch, 4 size limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import oracle
from .curve import CurveFamily, hermitian_type_preset, new_curve, pole_vector
from .errors import (
    CapExceeded,
    FloorUndefined,
    InvalidArgument,
    LatticeOverflowError,
    OracleFailure,
    WeierstrassError,
)
from .lattice import IntVec, leq, lub
from .riemann_roch import (
    basis,
    dimension,
    full_floor,
    full_support_terms,
    supported_floor,
)
from .semigroup import (
    default_cap,
    gamma_below,
    generating_data,
    in_window,
    is_absolute_maximal,
    is_discrepancy,
    is_member,
)

EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3, 4

COMMANDS = (
    "generators",
    "dimension",
    "basis",
    "member",
    "absmax",
    "discrepancy",
    "supported-floor",
    "floor",
    "gamma-below",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Mismatch(Exception):
    def __init__(self, expected, got, detail=None):
        super().__init__("verification mismatch")
        self.expected, self.got, self.detail = expected, got, detail


def parse_alpha(text: str) -> IntVec:
    parts = "".join(text.split()).split(",")
    try:
        return IntVec(int(p) for p in parts)
    except ValueError:
        raise InvalidArgument(f"cannot parse vector {text!r}; expected comma-separated integers") from None


def _glue_vectors(argv: List[str]) -> List[str]:
    """Turn ``--alpha -1,0,0`` into ``--alpha=-1,0,0`` so argparse keeps the sign."""
    out, k = [], 0
    while k < len(argv):
        tok = argv[k]
        if tok == "--alpha" and k + 1 < len(argv):
            out.append(f"--alpha={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("curve")
    g.add_argument("--preset", nargs="+", metavar="ARG",
                   help="'hermitian ELL R' or 'raw A B'")
    g.add_argument("--a", type=int)
    g.add_argument("--b", type=int)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--q", type=int)
    common.add_argument("--alpha", help="comma-separated integers, e.g. 8,7,-1")
    common.add_argument("--i", type=int, dest="pi", help="first point index (discrepancy)")
    common.add_argument("--j", type=int, dest="pj", help="second point index (discrepancy)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--verify", action="store_true",
                        help="recompute the answer with the brute-force oracle")
    common.add_argument("--cap", type=int, default=None,
                        help="enumeration limit (default from WEIERSTRASS_CAP or 10^7)")

    parser = _Parser(prog="weierstrass", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def curve_from_args(ns) -> CurveFamily:
    if ns.preset:
        kind, *params = ns.preset
        try:
            params = [int(p) for p in params]
        except ValueError:
            raise UsageError(f"preset parameters must be integers: {ns.preset}") from None
        if len(params) != 2:
            raise UsageError(f"preset {kind!r} takes two integers")
        if kind == "hermitian":
            c = hermitian_type_preset(params[0], params[1], ns.m)
            if ns.q is not None and ns.q != c.q:
                raise UsageError(f"--q {ns.q} conflicts with the preset field size {c.q}")
            return c
        if kind == "raw":
            return new_curve(params[0], params[1], ns.m, ns.q)
        raise UsageError(f"unknown preset {kind!r} (expected 'hermitian' or 'raw')")
    if ns.a is None or ns.b is None:
        raise UsageError("give either --preset or both --a and --b")
    return new_curve(ns.a, ns.b, ns.m, ns.q)


def _vec_text(v) -> str:
    return ",".join(str(x) for x in v)


def _tuples_text(vs) -> str:
    return ", ".join(str(IntVec(v)) for v in vs)


def _compute(c: CurveFamily, ns, alpha: Optional[IntVec], cap: int):
    """Return ``(result, breakdown, text)`` for the requested command."""
    cmd = ns.command
    if cmd == "generators":
        gd = generating_data(c)
        res = {"s_m": [list(v) for v in gd.s_m], "etas": [list(v) for v in gd.etas]}
        return res, None, _tuples_text(gd.all_vectors())
    if cmd == "dimension":
        br = dimension(c, alpha)
        return br.total, list(br.n), str(br.total)
    if cmd == "basis":
        monos = basis(c, alpha)
        res = [{"e_h": mo.e_h, "e_g": list(mo.e_g), "pole_vector": list(pole_vector(c, mo))}
               for mo in monos]
        text = "\n".join(f"{mo}  {pole_vector(c, mo)}" for mo in monos)
        return res, None, text
    if cmd == "member":
        r = is_member(c, alpha)
        return r, None, str(r).lower()
    if cmd == "absmax":
        r = is_absolute_maximal(c, alpha)
        return r, None, str(r).lower()
    if cmd == "discrepancy":
        if ns.pi is None or ns.pj is None:
            raise UsageError("discrepancy needs --i and --j")
        for k in (ns.pi, ns.pj):
            if not 1 <= k <= c.m:
                raise InvalidArgument(f"point index {k} outside 1..{c.m}")
        r = is_discrepancy(c, alpha, ns.pi, ns.pj)
        return r, None, str(r).lower()
    if cmd == "supported-floor":
        br = dimension(c, alpha)
        v = supported_floor(c, alpha)
        return list(v), list(br.n), _vec_text(v)
    if cmd == "floor":
        v = full_floor(c, alpha)
        return list(v), list(full_support_terms(c, alpha)), _vec_text(v)
    if cmd == "gamma-below":
        vs = gamma_below(c, alpha, cap)
        return [list(v) for v in vs], None, _tuples_text(vs)
    raise UsageError(f"unknown command {cmd!r}")


def _floor_oracle(c: CurveFamily, alpha: IntVec) -> IntVec:
    try:
        return oracle.floor_by_exhaustion(c, alpha)
    except CapExceeded:
        # the minimiser lies within b of alpha in every coordinate
        return oracle.floor_by_exhaustion(c, alpha, margin=c.b)


def _verify(c: CurveFamily, ns, alpha: Optional[IntVec], result, cap: int):
    cmd = ns.command
    if cmd == "generators":
        bad = [v for v in result["s_m"] if not in_window(c, v)
               or not oracle.absolute_maximal_by_definition(c, v, cap)]
        for e in result["etas"]:
            if not oracle.absolute_maximal_by_definition(c, e, cap):
                bad.append(e)
        if bad:
            raise Mismatch("absolute maximal", "not absolute maximal", bad)
    elif cmd == "dimension":
        counts = [oracle.dim_by_class_counting(c, alpha, j, cap) for j in range(1, c.m + 1)]
        if any(k != result for k in counts):
            raise Mismatch(counts, result)
    elif cmd == "basis":
        expected = oracle.dim_by_class_counting(c, alpha, 1, cap)
        poles = [IntVec(r["pole_vector"]) for r in result]
        if len(poles) != expected or not all(leq(p, alpha) for p in poles) \
                or len({p[0] for p in poles}) != len(poles):
            raise Mismatch(expected, len(poles), [list(p) for p in poles])
    elif cmd == "member":
        expected = oracle.member_by_generators(c, alpha, cap)
        if expected != result:
            raise Mismatch(expected, result)
    elif cmd == "absmax":
        expected = oracle.absolute_maximal_by_definition(c, alpha, cap)
        if expected != result:
            raise Mismatch(expected, result)
    elif cmd == "discrepancy":
        expected = oracle.discrepancy_by_counting(c, alpha, ns.pi, ns.pj, cap)
        if expected != result:
            raise Mismatch(expected, result)
    elif cmd in ("supported-floor", "floor"):
        expected = _floor_oracle(c, alpha)
        via_lub = lub(gamma_below(c, alpha, cap))
        if list(expected) != result or list(via_lub) != result:
            raise Mismatch(list(expected), result, {"lub": list(via_lub)})
    elif cmd == "gamma-below":
        expected = [list(v) for v in oracle.gamma_below_by_scan(c, alpha)]
        if expected != result:
            raise Mismatch(expected, result)


def run(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        argv = sys.argv[1:] if argv is None else list(argv)
        ns = build_parser().parse_args(_glue_vectors(argv))
        c = curve_from_args(ns)
        cap = default_cap() if ns.cap is None else ns.cap
        if cap <= 0:
            raise UsageError("--cap must be positive")
        alpha = None
        if ns.command != "generators":
            if ns.alpha is None:
                raise UsageError(f"{ns.command} needs --alpha")
            alpha = parse_alpha(ns.alpha)
            if len(alpha) != c.m:
                raise InvalidArgument(f"--alpha has {len(alpha)} entries, expected m={c.m}")
        if ns.command == "floor" and c.m != c.a + 1:
            raise InvalidArgument(f"floor needs m = a+1 = {c.a + 1}; use supported-floor otherwise")
        result, breakdown, text = _compute(c, ns, alpha, cap)

        if ns.format == "json":
            doc = {"curve": c.as_dict(), "command": ns.command, "result": result}
            if alpha is not None:
                doc["alpha"] = list(alpha)
            if breakdown is not None:
                doc["breakdown"] = breakdown
            out.write(json.dumps(doc, sort_keys=True) + "\n")
        else:
            out.write(text + "\n")

        if ns.verify:
            try:
                _verify(c, ns, alpha, result, cap)
            except Mismatch as exc:
                diff = {"verify": "mismatch", "command": ns.command,
                        "expected": exc.expected, "got": exc.got}
                if exc.detail is not None:
                    diff["detail"] = exc.detail
                err.write(json.dumps(diff, sort_keys=True, default=list) + "\n")
                return EXIT_VERIFY
            except OracleFailure as exc:
                err.write(json.dumps({"verify": "oracle-failure", "message": str(exc)}) + "\n")
                return EXIT_VERIFY
        return EXIT_OK
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except CapExceeded as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    except (FloorUndefined, LatticeOverflowError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MATH
    except InvalidArgument as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except WeierstrassError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_MATH


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
