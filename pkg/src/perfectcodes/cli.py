"""Command-line front end.

    perfectcodes construct hamming --m 3 -o h7.code
    perfectcodes construct vasilev --base h7.code --lambda nonlinear:seed=2 -o v15.code
    perfectcodes construct mollard --C h3.code --D h3.code -o m15.code
    perfectcodes construct mollard-sts --S1 a.sts --S2 b.sts -o m.sts
    perfectcodes invariants h7.code
    perfectcodes verify theorem2 --t 3 --m 3

Exit codes: 0 all claims pass, 1 some claim failed, 2 usage or parse error,
3 failures together with claims skipped for resource limits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from . import io as fmt
from .bitcode import MAX_EXPLICIT, BinaryCode, dual, hamming_code, is_perfect, nonlinear_lambda, rank, vasilev
from .design import TripleSystem, is_projective, lin_nu, pasch_configurations, span_dimension, sts_of_code
from .errors import InvalidInput, InvalidParameter, PerfectCodesError, ResourceLimit
from .fundpart import fundamental_partition
from .linearity import mu_profile
from .mollard import MollardCode, mollard_sts
from .report import VerificationReport
from .verify import verify_lemmas, verify_mollard, verify_theorem2, verify_theorem3


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _hamming_of_length(n: int) -> BinaryCode:
    if n < 3 or (n + 1) & n:
        raise UsageError(f"no Hamming code of length {n}; use 2^k - 1 with k >= 2")
    return hamming_code((n + 1).bit_length() - 1)


def parse_lambda(text: str, base: BinaryCode) -> tuple[dict[int, int], dict]:
    """'zero' or 'nonlinear:seed=N'."""
    if text == "zero":
        return {w: 0 for w in base.words()}, {"lambda": "zero"}
    kind, _, rest = text.partition(":")
    if kind != "nonlinear" or not rest.startswith("seed="):
        raise UsageError(f"bad --lambda {text!r}; expected 'zero' or 'nonlinear:seed=N'")
    try:
        seed = int(rest[5:])
    except ValueError as exc:
        raise UsageError(f"bad seed in {text!r}") from exc
    return nonlinear_lambda(base, seed), {"lambda": "nonlinear", "seed": seed}


# construct


def cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "hamming":
        if args.m is None:
            raise UsageError("construct hamming needs --m")
        _emit(fmt.format_code(hamming_code(args.m)), args.output)
    elif kind == "vasilev":
        if not args.base:
            raise UsageError("construct vasilev needs --base")
        base = fmt.read_code(args.base)
        lam, info = parse_lambda(args.lam, base)
        code = vasilev(base, lam)
        header = f"# vasilev base={os.path.basename(args.base)} " + " ".join(f"{k}={v}" for k, v in info.items()) + "\n"
        _emit(header + fmt.format_code(code), args.output)
    elif kind == "mollard":
        if not (args.C and args.D):
            raise UsageError("construct mollard needs --C and --D")
        M = MollardCode(fmt.read_code(args.C), fmt.read_code(args.D))
        if M.size <= MAX_EXPLICIT:
            _emit(fmt.format_code(M), args.output)
        else:
            where = Path(args.output).parent if args.output else Path(".")
            desc = fmt.mollard_descriptor(M, os.path.relpath(args.C, where), os.path.relpath(args.D, where))
            _emit(json.dumps(desc, indent=2), args.output)
    elif kind == "mollard-sts":
        if not (args.S1 and args.S2):
            raise UsageError("construct mollard-sts needs --S1 and --S2")
        _emit(fmt.format_sts(mollard_sts(fmt.read_sts(args.S1), fmt.read_sts(args.S2))), args.output)
    return 0


# invariants


def code_invariants(code: BinaryCode) -> dict:
    rk = rank(code)
    prof = mu_profile(code)
    out = {
        "n": code.n,
        "size": code.size,
        "perfect": is_perfect(code),
        "rank": rk,
        "kernel_dim": len(code.kernel_basis()),
        "dual_dim": dual(code).dimension,
        "partition": fundamental_partition(code).to_json(),
    }
    out.update(prof.to_json())
    return out


def sts_invariants(ts: TripleSystem) -> dict:
    return {
        "n": ts.n,
        "triples": len(ts.triples),
        "nu": {str(i): ts.nu[i] for i in ts.points},
        "lin_nu": sorted(lin_nu(ts)),
        "projective": is_projective(ts),
        "pasch_total": len(pasch_configurations(ts)),
        "span_dim": span_dimension(ts),
    }


def _as_text(d: dict) -> str:
    return "\n".join(f"{k}: {json.dumps(v)}" for k, v in d.items())


def cmd_invariants(args: argparse.Namespace) -> int:
    if fmt.sniff(args.file) == "sts":
        data = sts_invariants(fmt.read_sts(args.file))
    else:
        data = code_invariants(fmt.read_code(args.file))
    _emit(json.dumps(data, indent=2) if args.format == "json" else _as_text(data), args.output)
    return 0


# verify


def _components(args: argparse.Namespace) -> tuple[BinaryCode, BinaryCode]:
    C = fmt.read_code(args.C) if args.C else _hamming_of_length(args.t)
    D = fmt.read_code(args.D) if args.D else _hamming_of_length(args.m)
    return C, D


def _systems(args: argparse.Namespace, C: BinaryCode, D: BinaryCode) -> tuple[TripleSystem, TripleSystem]:
    S1 = fmt.read_sts(args.S1) if args.S1 else sts_of_code(C)
    S2 = fmt.read_sts(args.S2) if args.S2 else sts_of_code(D)
    return S1, S2


def _run_job(job: tuple) -> VerificationReport:
    name, payload, budget, seed = job
    if name == "lemmas":
        code, label = payload
        return verify_lemmas(code, name=label, budget=budget)
    if name == "mollard":
        return verify_mollard(*payload, seed=seed)
    if name == "theorem2":
        return verify_theorem2(*payload, budget=budget)
    if name == "theorem3":
        return verify_theorem3(*payload, budget=budget)
    raise ValueError(name)


def cmd_verify(args: argparse.Namespace) -> int:
    suite = args.suite
    jobs: list[tuple] = []
    if suite == "lemmas" and args.code:
        jobs.append(("lemmas", (fmt.read_code(args.code), os.path.basename(args.code)), args.budget, args.seed))
    else:
        C, D = _components(args)
        if suite in ("lemmas", "all"):
            jobs.append(("lemmas", (C, f"C (n={C.n})"), args.budget, args.seed))
            jobs.append(("lemmas", (D, f"D (n={D.n})"), args.budget, args.seed))
            if args.code:
                jobs.append(("lemmas", (fmt.read_code(args.code), os.path.basename(args.code)), args.budget, args.seed))
        if suite in ("mollard", "all"):
            jobs.append(("mollard", (C, D), args.budget, args.seed))
        if suite in ("theorem2", "all"):
            jobs.append(("theorem2", (C, D), args.budget, args.seed))
        if suite in ("theorem3", "all"):
            jobs.append(("theorem3", _systems(args, C, D), args.budget, args.seed))

    if args.parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            reports = list(pool.map(_run_job, jobs))
    else:
        reports = [_run_job(j) for j in jobs]

    combined = VerificationReport(suite, {"seed": args.seed, "budget": args.budget})
    for r in reports:
        for c in r.claims:
            c.claim = f"{r.suite}: {c.claim}"
        combined.extend(r)
    if len(reports) == 1:
        combined.instance = {**reports[0].instance, "seed": args.seed}
    else:
        combined.instance["parts"] = [{"suite": r.suite, **r.instance} for r in reports]
    _emit(combined.dumps() if args.format == "json" else combined.text(), args.output)
    return combined.exit_code()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="perfectcodes", description="Perfect codes, Steiner triple systems and Mollard symmetries.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--budget", type=int, default=None, help="search node budget")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--parallel", type=int, default=1, help="worker processes for independent suites")

    c = sub.add_parser("construct", parents=[common], help="write a code or triple system")
    c.add_argument("kind", choices=("hamming", "vasilev", "mollard", "mollard-sts"))
    c.add_argument("--m", type=int, help="Hamming redundancy (length 2^m - 1)")
    c.add_argument("--base", help="base .code file for vasilev")
    c.add_argument("--lambda", dest="lam", default="zero", help="'zero' or 'nonlinear:seed=N'")
    c.add_argument("--C")
    c.add_argument("--D")
    c.add_argument("--S1")
    c.add_argument("--S2")
    c.set_defaults(func=cmd_construct)

    i = sub.add_parser("invariants", parents=[common], help="rank, kernel, partition, mu / nu report")
    i.add_argument("file")
    i.set_defaults(func=cmd_invariants)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=("lemmas", "mollard", "theorem2", "theorem3", "all"))
    v.add_argument("--t", type=int, default=3, help="length of C when --C is not given (Hamming)")
    v.add_argument("--m", type=int, default=3, help="length of D when --D is not given (Hamming)")
    v.add_argument("--C")
    v.add_argument("--D")
    v.add_argument("--S1")
    v.add_argument("--S2")
    v.add_argument("--code", help="code file for the lemmas suite")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidInput, InvalidParameter, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except PerfectCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
