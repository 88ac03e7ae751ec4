"""JSON command-line front end.

Roots of unity are passed as exponents: with L = lcm(n, m), ``--q-exp k`` means
q = zeta_L^(k L/m) and ``--qbar-exp k`` means qbar = zeta_L^(k L/n); k must be a
unit modulo the order.  ``--alpha`` takes a rational ("2", "-1/3") or "zeta:k"
for zeta_L^k.

Exit status: 0 on success, 2 when a verification fails, 1 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from math import gcd, lcm
from typing import Any

from .bicrossed import PresentationParams, drinfeld_double, presentation, qalpha, tsigma
from .cyclotomic import CycScalar, rational, root_of_unity
from .hopf import verify_hopf
from .matched_pair import enumerate_matched_pairs, verify_matched_pair
from .morphism import automorphisms, classify, double_witness, iso_search
from .taft import TaftDescriptor, taft_structure

log = logging.getLogger("taft_bicross")

VERBS = ("build", "verify", "enumerate-pairs", "classify", "double", "aut", "iso")
FAMILIES = ("taft", "sigma", "alpha")


class UsageError(Exception):
    pass


def _root(L: int, order: int, exp: int | None, flag: str) -> CycScalar:
    if exp is None:
        raise UsageError(f"{flag} is required")
    if gcd(exp, order) != 1:
        raise UsageError(f"{flag}={exp} does not give a primitive {order}-th root of unity")
    return root_of_unity(L, exp * (L // order))


def parse_alpha(text: str, L: int) -> CycScalar:
    if text.startswith("zeta:"):
        try:
            k = int(text[5:])
        except ValueError as exc:
            raise UsageError(f"--alpha={text!r} is not of the form zeta:k") from exc
        return root_of_unity(L, k)
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--alpha={text!r} is not a rational number") from exc
    if value == 0:
        raise UsageError("--alpha must be nonzero")
    return rational(value, L)


def _need(args, *names: str) -> None:
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            raise UsageError(f"--{name} is required for {args.verb}")


def _params(args, family: str, sigma_index: int | None, alpha: str | None) -> PresentationParams:
    if family == "sigma":
        _need(args, "n", "m", "q-exp", "qbar-exp")
        n, m = args.n, args.m
        L = lcm(n, m)
        q = _root(L, m, args.q_exp, "--q-exp")
        qbar = _root(L, n, args.qbar_exp, "--qbar-exp")
        d = gcd(n, m)
        idx = 0 if sigma_index is None else sigma_index
        sigma = root_of_unity(L, (idx % d) * (L // d))
        return tsigma(n, m, qbar, q, sigma)
    if family == "alpha":
        _need(args, "n", "q-exp")
        n = args.n
        if args.m not in (None, n):
            raise UsageError("--m must equal --n for the alpha family")
        q = _root(n, n, args.q_exp, "--q-exp")
        return qalpha(n, q, parse_alpha(alpha or "1", n))
    raise UsageError(f"--family={family!r} does not name a presented bicrossed product")


def _taft(args) -> TaftDescriptor:
    _need(args, "m", "q-exp")
    return TaftDescriptor(args.m, _root(args.m, args.m, args.q_exp, "--q-exp"))


def _structure(args):
    if args.family == "taft":
        return taft_structure(_taft(args))
    return presentation(_params(args, args.family, args.sigma_index, args.alpha))


def cmd_build(args) -> tuple[dict, int]:
    return _structure(args).to_json(), 0


def cmd_verify(args) -> tuple[dict, int]:
    hs = _structure(args)
    rep = verify_hopf(hs)
    if args.family != "taft":
        rep.merge(verify_matched_pair(_params(args, args.family, args.sigma_index, args.alpha).matched_pair()))
    return rep.to_json(), 0 if rep.passed else 2


def cmd_enumerate(args) -> tuple[dict, int]:
    _need(args, "n", "m", "q-exp", "qbar-exp")
    L = lcm(args.n, args.m)
    q = _root(L, args.m, args.q_exp, "--q-exp")
    qbar = _root(L, args.n, args.qbar_exp, "--qbar-exp")
    pairs = enumerate_matched_pairs(args.n, args.m, qbar, q)
    reports = [verify_matched_pair(mp) for mp in pairs]
    doc = {"pairs": [mp.to_json() for mp in pairs], "verified": [r.passed for r in reports]}
    return doc, 0 if all(doc["verified"]) else 2


def cmd_classify(args) -> tuple[dict, int]:
    _need(args, "n", "m", "q-exp", "qbar-exp")
    L = lcm(args.n, args.m)
    q = _root(L, args.m, args.q_exp, "--q-exp")
    qbar = _root(L, args.n, args.qbar_exp, "--qbar-exp")
    rep = classify(args.n, args.m, qbar, q)
    return rep.to_json(), 0 if rep.consistent else 2


def cmd_double(args) -> tuple[dict, int]:
    _need(args, "n", "q-exp")
    q = _root(args.n, args.n, args.q_exp, "--q-exp")
    dd = drinfeld_double(args.n, q)
    w = double_witness(args.n, q)
    ok = w["transport_matches"] and w["witness_is_iso"]
    doc = {
        "double": dd.structure.to_json(),
        "witness": {
            "target": qalpha(args.n, q, 1).label(),
            "transport_matches": w["transport_matches"],
            "raw_alpha": w["raw_alpha"].to_json(),
            "scale": w["scale"].to_json(),
            "is_hopf_isomorphism": w["witness_is_iso"],
            "map": w["witness"].to_json(),
        },
    }
    return doc, 0 if ok else 2


def cmd_aut(args) -> tuple[dict, int]:
    rep = automorphisms(_params(args, args.family, args.sigma_index, args.alpha))
    return rep.to_json(), 0 if rep.passed else 2


def cmd_iso(args) -> tuple[dict, int]:
    src = _params(args, args.family, args.sigma_index, args.alpha)
    tgt = _params(args, args.target_family or args.family, args.target_sigma_index, args.target_alpha)
    try:
        res = iso_search(src, tgt)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    doc = res.to_json()
    if res.found:
        doc["map"] = res.witness.to_json()
    return doc, 0


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "enumerate-pairs": cmd_enumerate,
    "classify": cmd_classify,
    "double": cmd_double,
    "aut": cmd_aut,
    "iso": cmd_iso,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taft-bicross", description="Bicrossed products of Taft algebras")
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("--family", choices=FAMILIES, default="sigma")
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--q-exp", type=int)
    parser.add_argument("--qbar-exp", type=int)
    parser.add_argument("--sigma-index", type=int)
    parser.add_argument("--alpha")
    parser.add_argument("--target-family", choices=FAMILIES)
    parser.add_argument("--target-sigma-index", type=int)
    parser.add_argument("--target-alpha")
    parser.add_argument("--out", help="write the JSON document here instead of stdout")
    parser.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; sweeps run serially")
    parser.add_argument("--verbose", "-v", action="store_true")
    return parser


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    if args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return 1
    try:
        doc, status = COMMANDS[args.verb](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # parameter validation inside the library
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %s", args.out)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
