"""Command-line front end: construct code files, verify their certificates,
and regenerate the parameter tables.

Code files are canonical JSON (sorted keys, two-space indent, trailing
newline), so identical flags always produce byte-identical output.  The
verify subcommand is claims-based: each check certifies what the file
says about itself and reports "skipped" for properties it never claimed.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from math import comb

from .errors import (
    BadDimension,
    CongruenceViolated,
    EnumerationTooLarge,
    FileMalformed,
    QmdsError,
    VerificationFailure,
    WorkBudgetExceeded,
)
from .gf import Field, field_for_q
from .grs import (
    ConstructionParams,
    LinearCode,
    construct_extended,
    construct_family_A,
    construct_family_B,
    construct_family_C,
    construct_full_field,
    grs_generator,
    valid_parameter_sets,
)
from .linalg import Matrix
from .mpc import mp6_ladder
from .quantum import (
    ladder_quantum_record,
    quantum_mds_from_self_orthogonal,
    singleton_check,
    table1,
)
from .verify import (
    DEFAULT_ENUM_CAP,
    CheckResult,
    VerificationReport,
    dual_containing_check,
    enumeration_classes,
    is_mds,
    min_distance_at_least,
    min_distance_exact,
    self_orthogonal_check,
)

SCHEMA_VERSION = 1

# family flag -> (constructor, m from the congruence)
_GRS_FAMILIES = {
    "grs-a": (construct_family_A, lambda q, a: (q - 1) // (2 * a)),
    "grs-b": (construct_family_B, lambda q, a: (q + 1) // (2 * a)),
    "grs-c": (construct_family_C, lambda q, a: (q + 1) // (2 * a + 1)),
}


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- code file serialization -------------------------------------------------------


def code_file_payload(code: LinearCode, provenance: dict, certificates: list[dict]) -> dict:
    f = code.field
    return {
        "schema_version": SCHEMA_VERSION,
        "field": {"p": f.p, "t": f.t, "modulus": list(f.modulus)},
        "code": {
            "n": code.n,
            "k": code.k,
            "generator": [list(row) for row in code.generator.data],
        },
        "provenance": provenance,
        "certificates": certificates,
    }


def load_code_file(path: str) -> LinearCode:
    """Parse and validate a code file; any defect maps to FileMalformed."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as e:
        raise FileMalformed(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise FileMalformed(f"{path} is not valid JSON: {e}") from e
    try:
        if raw["schema_version"] != SCHEMA_VERSION:
            raise FileMalformed(f"unsupported schema_version {raw['schema_version']!r}")
        fld = raw["field"]
        field = Field(int(fld["p"]), int(fld["t"]), tuple(int(c) for c in fld["modulus"]))
        sec = raw["code"]
        n, k = int(sec["n"]), int(sec["k"])
        gen = [[int(x) for x in row] for row in sec["generator"]]
        if len(gen) != k or any(len(row) != n for row in gen):
            raise FileMalformed("generator shape disagrees with the declared n, k")
        code = LinearCode(field=field, generator=Matrix(field, gen, cols=n))
    except FileMalformed:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise FileMalformed(f"{path} does not match the code file schema: {e}") from e
    except QmdsError as e:
        raise FileMalformed(f"{path} holds invalid code data: {e}") from e
    provenance = raw.get("provenance")
    code.provenance = provenance if isinstance(provenance, dict) else {}
    claims = code.provenance.get("claims", {})
    if isinstance(claims, dict):
        known = claims.get("known_distance")
        lb = claims.get("claimed_distance_lb")
        code.known_distance = known if isinstance(known, int) else None
        code.claimed_distance_lb = lb if isinstance(lb, int) else None
    return code


# -- construct --------------------------------------------------------------------


def cmd_construct(args) -> int:
    code, provenance = _build(args)
    certificates = [_self_certificate(code, provenance)]
    payload = code_file_payload(code, provenance, certificates)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(payload))
    print(f"wrote {args.out}: [{code.n},{code.k}] over GF({code.field.q2})")
    return 0


def _build(args) -> tuple[LinearCode, dict]:
    family, q = args.family, args.q
    if family in _GRS_FAMILIES:
        _require(args.a is not None, f"--a is required for {family}")
        _require(args.d is not None, f"--d is required for {family}")
        floor_a = 0 if family == "grs-c" else 1
        if args.a < floor_a:
            raise CongruenceViolated(f"{family} needs a >= {floor_a}, got {args.a}")
        ctor, derive_m = _GRS_FAMILIES[family]
        m = derive_m(q, args.a)
        code = grs_generator(ctor(ConstructionParams(q=q, a=args.a, m=m, d=args.d)))
        return code, {
            "construction": family,
            "parameters": {"q": q, "a": args.a, "m": m, "d": args.d},
            "claims": _claims("self-orthogonal", code),
        }
    if family in ("full-field", "extended"):
        _require(args.k is not None, f"--k is required for {family}")
        field = field_for_q(q)
        build = construct_full_field if family == "full-field" else construct_extended
        code = build(field, args.k)
        return code, {
            "construction": family,
            "parameters": {"q": q, "k": args.k},
            "claims": _claims("dual-containing", code),
        }
    # mp6 / mp7
    _require(args.d is not None, f"--d is required for {family}")
    _require(args.variant is not None, f"--variant is required for {family}")
    code = mp6_ladder(q, args.d, args.variant, force=args.force)
    certified = code.provenance.get("certified", False)
    provenance = {
        "construction": family,
        "parameters": {"q": q, "d": args.d, "variant": args.variant, "forced": not certified},
        "claims": _claims("dual-containing" if certified else None, code),
    }
    if not certified:
        provenance["construction_checks"] = code.provenance.get("forced_checks", {})
    if family == "mp7":
        record = ladder_quantum_record(code, q, args.d, args.variant)
        provenance["quantum"] = {
            "q": record.q,
            "n": record.n,
            "k": record.k,
            "d": record.d,
            "d_is_exact": record.d_is_exact,
            "mds": record.mds,
            "certification": record.ancestor["certification"],
            "singleton": singleton_check(record),
        }
    return code, provenance


def _claims(orthogonality: str | None, code: LinearCode) -> dict:
    return {
        "orthogonality": orthogonality,
        "claimed_distance_lb": code.claimed_distance_lb,
        "known_distance": code.known_distance,
    }


def _self_certificate(code: LinearCode, provenance: dict) -> dict:
    """Construction-time re-check of the orthogonality claim."""
    report = VerificationReport(target=provenance["construction"])
    claim = provenance["claims"]["orthogonality"]
    if claim == "self-orthogonal":
        ok = self_orthogonal_check(code)
        report.checks.append(
            CheckResult(
                name="gram",
                verdict="pass" if ok else "fail",
                method="hermitian gram matrix",
                work_count=code.k * code.k,
                detail="construction-time self-certification",
            )
        )
    elif claim == "dual-containing":
        ok = dual_containing_check(code)
        report.checks.append(
            CheckResult(
                name="dual-containing",
                verdict="pass" if ok else "fail",
                method="rank of stacked generators",
                work_count=code.n,
                detail="construction-time self-certification",
            )
        )
    else:
        report.checks.append(
            CheckResult(
                name="orthogonality",
                verdict="skipped",
                method="none",
                detail="forced construction carries no orthogonality claim",
            )
        )
    return report.to_dict()


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise BadDimension(message)


# -- verify -----------------------------------------------------------------------


def cmd_verify(args) -> int:
    code = load_code_file(args.infile)
    if args.max_enum is not None:
        cap = args.max_enum
    else:
        cap = int(os.environ.get("QMDS_MAX_ENUM", DEFAULT_ENUM_CAP))
    report = run_checks(code, args.check, cap)
    sys.stdout.write(canonical_json(report.to_dict()))
    return 0 if report.overall == "pass" else VerificationFailure.exit_code


def run_checks(code: LinearCode, which: str, cap: int = DEFAULT_ENUM_CAP) -> VerificationReport:
    claimed = code.provenance.get("claims", {})
    orthogonality = claimed.get("orthogonality") if isinstance(claimed, dict) else None
    report = VerificationReport(target=f"[{code.n},{code.k}] over GF({code.field.q2})")
    names = ("gram", "dual-containing", "min-distance", "mds") if which == "all" else (which,)
    for name in names:
        report.checks.append(_CHECK_RUNNERS[name](code, orthogonality, cap))
    return report


def _check_gram(code, orthogonality, cap) -> CheckResult:
    if orthogonality != "self-orthogonal":
        return CheckResult(
            name="gram",
            verdict="skipped",
            method="hermitian gram matrix",
            detail="file does not claim self-orthogonality",
        )
    ok = self_orthogonal_check(code)
    return CheckResult(
        name="gram",
        verdict="pass" if ok else "fail",
        method="hermitian gram matrix",
        work_count=code.k * code.k,
        detail="gram matrix is zero" if ok else "gram matrix has a nonzero entry",
    )


def _check_dual_containing(code, orthogonality, cap) -> CheckResult:
    if orthogonality != "dual-containing":
        return CheckResult(
            name="dual-containing",
            verdict="skipped",
            method="rank of stacked generators",
            detail="file does not claim dual containment",
        )
    ok = dual_containing_check(code)
    return CheckResult(
        name="dual-containing",
        verdict="pass" if ok else "fail",
        method="rank of stacked generators",
        work_count=code.n,
        detail="hermitian dual is contained" if ok else "hermitian dual escapes the code",
    )


def _check_min_distance(code, orthogonality, cap) -> CheckResult:
    exact_claim = code.known_distance
    floor = exact_claim if exact_claim is not None else code.claimed_distance_lb
    if floor is None:
        return CheckResult(
            name="min-distance",
            verdict="skipped",
            method="none",
            detail="file carries no distance claim",
        )
    try:
        d = min_distance_exact(code, cap=cap)
    except EnumerationTooLarge as too_large:
        try:
            ok = min_distance_at_least(code, floor)
        except WorkBudgetExceeded as over:
            return CheckResult(
                name="min-distance",
                verdict="skipped",
                method="column-independence floor",
                detail=f"{too_large}; {over}",
            )
        return CheckResult(
            name="min-distance",
            verdict="pass" if ok else "fail",
            method="column-independence floor (EnumerationTooLarge for exact search)",
            work_count=comb(code.n, floor - 1) if floor > 1 else 0,
            detail=f"d >= {floor} {'certified' if ok else 'refuted'}; {too_large}",
        )
    if exact_claim is not None:
        ok = d == exact_claim
        detail = f"exact d = {d}, claimed d = {exact_claim}"
    else:
        ok = d >= floor
        detail = f"exact d = {d}, claimed d >= {floor}"
    return CheckResult(
        name="min-distance",
        verdict="pass" if ok else "fail",
        method="exhaustive message enumeration",
        work_count=enumeration_classes(code),
        detail=detail,
    )


def _check_mds(code, orthogonality, cap) -> CheckResult:
    w = code.n - code.k + 1
    floor = code.known_distance if code.known_distance is not None else code.claimed_distance_lb
    if floor != w:
        return CheckResult(
            name="mds",
            verdict="skipped",
            method="none",
            detail="file does not claim an MDS distance",
        )
    enumerable = code.k and code.field.q2**code.k <= cap
    try:
        ok = is_mds(code, cap=cap)
    except WorkBudgetExceeded as over:
        return CheckResult(
            name="mds",
            verdict="skipped",
            method="column-independence floor",
            detail=str(over),
        )
    return CheckResult(
        name="mds",
        verdict="pass" if ok else "fail",
        method="exhaustive message enumeration" if enumerable else "column-independence floor",
        work_count=enumeration_classes(code) if enumerable else comb(code.n, w - 1) if w > 1 else 0,
        detail=f"d = n - k + 1 = {w}" if ok else f"d falls short of n - k + 1 = {w}",
    )


_CHECK_RUNNERS = {
    "gram": _check_gram,
    "dual-containing": _check_dual_containing,
    "min-distance": _check_min_distance,
    "mds": _check_mds,
}


# -- table ------------------------------------------------------------------------

_SWEEP_CONSTRUCTORS = {
    "family-a": ("grs-a", construct_family_A),
    "family-b": ("grs-b", construct_family_B),
    "family-c": ("grs-c", construct_family_C),
}

_TABLE1_COLUMNS = ["family", "q", "d", "n", "k", "bound_type", "certification"]
_SWEEP_COLUMNS = ["family", "q", "a", "m", "d", "n", "k", "bound_type", "certification"]


def cmd_table(args) -> int:
    if args.which == "table1":
        columns = _TABLE1_COLUMNS
        rows = [
            {
                "family": f"mp7-v{record.ancestor['variant']}",
                "q": record.q,
                "d": record.d,
                "n": record.n,
                "k": record.k,
                "bound_type": "exact" if record.d_is_exact else "lower-bound",
                "certification": record.ancestor["certification"],
            }
            for record in table1()
        ]
    else:
        columns = _SWEEP_COLUMNS
        family, ctor = _SWEEP_CONSTRUCTORS[args.which]
        rows = []
        for q in _odd_prime_powers(args.q_max):
            for params in valid_parameter_sets(family, q):
                record = quantum_mds_from_self_orthogonal(grs_generator(ctor(params)))
                rows.append(
                    {
                        "family": family,
                        "q": q,
                        "a": params.a,
                        "m": params.m,
                        "d": record.d,
                        "n": record.n,
                        "k": record.k,
                        "bound_type": "exact",
                        "certification": "FULL",
                    }
                )
    if args.format == "json":
        sys.stdout.write(canonical_json(rows))
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return 0


def _odd_prime_powers(q_max: int) -> list[int]:
    out = []
    for q in range(3, q_max + 1, 2):
        try:
            field_for_q(q)
        except QmdsError:
            continue
        out.append(q)
    return out


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmds",
        description="Construct, verify, and tabulate Hermitian self-orthogonal "
        "GRS and matrix-product codes and their quantum descendants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a code and write its JSON file")
    c.add_argument(
        "--family",
        required=True,
        choices=["grs-a", "grs-b", "grs-c", "full-field", "extended", "mp6", "mp7"],
    )
    c.add_argument("--q", type=int, required=True, help="subfield size (odd prime power)")
    c.add_argument("--a", type=int, help="congruence parameter for the grs families")
    c.add_argument("--d", type=int, help="design distance")
    c.add_argument("--k", type=int, help="dimension for full-field / extended")
    c.add_argument("--variant", type=int, help="ladder variant 1..6")
    c.add_argument("--force", action="store_true", help="assemble past the certified window")
    c.add_argument("--out", required=True, help="output file path")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="re-run certification oracles on a code file")
    v.add_argument("--in", dest="infile", required=True, help="code file to verify")
    v.add_argument(
        "--check",
        required=True,
        choices=["gram", "dual-containing", "min-distance", "mds", "all"],
    )
    v.add_argument("--max-enum", dest="max_enum", type=int, help="enumeration cap override")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="emit parameter tables as CSV or JSON")
    t.add_argument(
        "--which", required=True, choices=["table1", "family-a", "family-b", "family-c"]
    )
    t.add_argument("--q-max", dest="q_max", type=int, default=13)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QmdsError as e:
        sys.stderr.write(
            canonical_json({"error": type(e).__name__, "exit_code": e.exit_code, "message": str(e)})
        )
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
