"""Command-line front end: ``inspect``, ``build`` and ``distance`` on spec files.

Exit status is 0 on success, 1 when a requested verification fails and 2 for
malformed input or a refused computation.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Sequence

from gcqc.builder import (
    ClaimError,
    GcqcResult,
    build_gcqc,
    counting_identities,
    verify_lemma1,
)
from gcqc.distance import DEFAULT_CAP, BudgetExceeded, min_distance
from gcqc.partition import coset_code
from gcqc.pauli import PauliOperator, format_pauli
from gcqc.report import render
from gcqc.specfile import CodeSpec, chain_of, inner_code, load_spec, outer_codes
from gcqc.stabilizer import DegeneracyUndecided, StabilizerCode, degeneracy_witness, rank_gf2

log = logging.getLogger("gcqc")

EXIT_OK, EXIT_VERIFY_FAILED, EXIT_ERROR = 0, 1, 2


def _strs(ops: Sequence[PauliOperator]) -> list[str]:
    return [format_pauli(p) for p in ops]


def _code_summary(code: StabilizerCode) -> dict[str, Any]:
    return {
        "parameters": f"[[{code.n},{code.k}]]",
        "n": code.n,
        "k": code.k,
        "rank": rank_gf2(code.generators),
        "generators": _strs(code.generators),
        "logical_x": _strs(code.logical_x),
        "logical_z": _strs(code.logical_z),
    }


def cmd_inspect(spec: CodeSpec) -> tuple[dict[str, Any], bool]:
    inner = inner_code(spec)
    inner_doc = {"valid": True, **_code_summary(inner)}
    if inner.claimed_distance is not None:
        inner_doc["claimed_distance"] = inner.claimed_distance
        witness = degeneracy_witness(inner, inner.claimed_distance)
        inner_doc["degenerate"] = witness is not None
        inner_doc["degeneracy_witness"] = format_pauli(witness) if witness else None
    doc: dict[str, Any] = {"inner": inner_doc}

    if spec.chain is not None:
        chain = chain_of(spec, inner)
        subcodes = {}
        for i in range(1, len(chain.level_ks) + 1):
            b = chain.subcode(i)
            subcodes[f"B{i}"] = {"parameters": f"[[{b.n},{b.k}]]", "generators": _strs(b.generators)}
        levels = {}
        for i in range(1, chain.num_levels + 1):
            coset = coset_code(chain, i)
            levels[str(i)] = {
                "r": coset.r,
                "dimension": coset.dimension,
                "stabilizers": _strs(coset.stabilizers),
                "logical_x": _strs([x for x, _ in coset.logical_pairs]),
                "logical_z": _strs([z for _, z in coset.logical_pairs]),
            }
        doc["chain"] = {
            "ks": list(chain.level_ks),
            "swaps": sorted(chain.strategy.swaps),
            "subcodes": subcodes,
            "coset_codes": levels,
        }

    if spec.outers:
        outers = {}
        for o in outer_codes(spec):
            outers[str(o.level)] = {
                "parameters": f"[[{o.N},{o.K},{o.D}]]_{2**o.r}",
                "qubits": o.binary_form.n,
                "r": o.r,
                "K": o.K,
                "D": o.D,
                "rank": rank_gf2(o.binary_form.generators),
                "generators": _strs(o.binary_form.generators),
                "degenerate": o.degenerate,
                "degeneracy_witness": format_pauli(o.degeneracy_witness) if o.degenerate else None,
            }
        doc["outer"] = outers
    return doc, True


def _result_doc(result: GcqcResult) -> dict[str, Any]:
    m = len(result.level_rs)
    params = {
        "length": result.length,
        "dimension": result.dimension,
        "bound": result.bound,
        "mu": result.mu,
        "exact_distance": result.exact.distance if result.exact else None,
        "witness": format_pauli(result.exact.witness) if result.exact else None,
    }
    if result.exact:
        params["enumerated"] = result.exact.enumerated
    levels = {
        str(i + 1): {
            "r": result.level_rs[i],
            "d": result.level_ds[i],
            "K": result.outer_Ks[i],
            "D": result.outer_Ds[i],
            "degenerate": result.degenerate[i],
            "lifted_generators": _strs(result.lifted_outer[i]),
            "logical_x": _strs([x for x, _ in result.lifted_logicals[i]]),
            "logical_z": _strs([z for _, z in result.lifted_logicals[i]]),
        }
        for i in range(m)
    }
    return {
        "parameters": params,
        "levels": levels,
        "stabilizer": {"s_i": _strs(result.s_i_part), "all": _strs(result.code.generators)},
        "counting": counting_identities(result),
    }


def cmd_build(
    spec: CodeSpec,
    exact_distance: bool = False,
    verify_bound: bool = False,
    verify_lemma: bool = False,
    cap: int = DEFAULT_CAP,
) -> tuple[dict[str, Any], bool]:
    chain = chain_of(spec)
    outers = outer_codes(spec)
    verification: dict[str, Any] = {}
    try:
        result = build_gcqc(chain, outers, verify_claims=verify_bound, cap=cap)
    except ClaimError as exc:
        return {"verification": {"claims": "fail", "detail": str(exc)}}, False
    if verify_bound:
        verification["claims"] = "pass"
    if exact_distance or verify_bound:
        result = result.with_exact_distance(cap)
    doc = _result_doc(result)
    ok = all(doc["counting"].values())
    if verify_bound:
        holds = result.exact.distance >= result.bound
        verification["bound"] = "pass" if holds else "fail"
        ok &= holds
    if verify_lemma:
        report = verify_lemma1(result)
        verification["lemma1"] = "pass" if report.ok else "fail"
        verification["lemma1_exhaustive"] = report.exhaustive
        if report.counterexample:
            i, j, block, part = report.counterexample
            verification["lemma1_counterexample"] = f"levels {i},{j} block {block + 1}: {part}"
        ok &= report.ok
    if verification:
        doc["verification"] = verification
    return doc, ok


def cmd_distance(spec: CodeSpec, cap: int = DEFAULT_CAP) -> tuple[dict[str, Any], bool]:
    code = inner_code(spec)
    report = min_distance(code, cap)
    doc = {
        "code": f"[[{code.n},{code.k},{report.distance}]]",
        "distance": report.distance,
        "witness": format_pauli(report.witness),
        "enumerated": report.enumerated,
        "budget_required": report.required,
    }
    if code.claimed_distance is not None:
        doc["claimed_distance"] = code.claimed_distance
        doc["claim_matches"] = code.claimed_distance == report.distance
    log.info("distance search took %.3fs", report.elapsed)
    return doc, True


def parse_cap(text: str) -> int:
    """Accept ``268435456``, ``2^28`` or ``1<<28``."""
    text = text.strip()
    try:
        if "^" in text:
            base, exp = text.split("^")
            value = int(base) ** int(exp)
        elif "<<" in text:
            base, shift = text.split("<<")
            value = int(base) << int(shift)
        else:
            value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid cap {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("cap must be positive")
    return value


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "machine"), default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    # separate actions from `common`: parents share action objects, so top-level
    # defaults would leak into the subcommands and clobber a leading --output
    parser = argparse.ArgumentParser(
        prog="gcqc",
        description="Build generalized concatenated stabilizer codes and check their distance.",
    )
    parser.add_argument("--output", choices=("text", "machine"), default="text")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("inspect", parents=[common], help="validate a spec and describe its codes")
    p.add_argument("file")

    p = sub.add_parser("build", parents=[common], help="build the concatenated code")
    p.add_argument("file")
    p.add_argument("--exact-distance", action="store_true")
    p.add_argument("--verify-bound", action="store_true",
                   help="recheck claimed distances and require exact >= bound")
    p.add_argument("--verify-lemma1", action="store_true")
    p.add_argument("--cap", type=parse_cap, default=DEFAULT_CAP)

    p = sub.add_parser("distance", parents=[common], help="exact distance of the [inner] code")
    p.add_argument("file")
    p.add_argument("--cap", type=parse_cap, default=DEFAULT_CAP)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        spec = load_spec(args.file)
        if args.command == "inspect":
            doc, ok = cmd_inspect(spec)
        elif args.command == "build":
            doc, ok = cmd_build(
                spec, args.exact_distance, args.verify_bound, args.verify_lemma1, args.cap
            )
        else:
            doc, ok = cmd_distance(spec, args.cap)
    except (ValueError, BudgetExceeded, DegeneracyUndecided, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(render(doc, args.output))
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
