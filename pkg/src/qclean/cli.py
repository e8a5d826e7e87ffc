"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 invariant
violation, 4 infeasible, 5 budget exceeded.  With --json every
subcommand emits a single report object conforming to
``schemas/report.schema.json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .codes import (
    CssCode,
    Region,
    StabilizerCode,
    SubsystemCode,
    clean,
    css_ells,
    css_to_stabilizer,
    distance_brute,
    distance_certify_lb,
    is_correctable,
    region_subspace,
    stab_ell,
    subsystem_gs,
    tripartition_bound,
    universal_logops,
    verify_stab_cl,
)
from .errors import (
    BudgetExceededError,
    InfeasibleError,
    InvariantViolationError,
    ParseError,
)
from .fileio import parse_code_file, serialize
from .gf2 import BinaryVector
from .generators import (
    example_42,
    random_css,
    random_stabilizer,
    random_subsystem,
    rng_from_seed,
    toric,
)
from .homology import betti1, duality_check, from_css, restricted_class_dim
from .lattice import (
    AbelianGroup,
    Bicharacter,
    GradedLatticeInstance,
    Subgroup,
    abelian_cl,
    abelian_cl_alternative,
    all_subgroups,
    dagger,
    generated_subgroup,
    verify_graded_identity,
)
from .oracle import css_ells_brute, stab_ell_brute, subgroup_dagger_brute
from .subspaces import BilinearForm, Subspace, q_sigma_duality_check, span

__all__ = ["main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit code 1 instead of argparse's 2
        raise _UsageError(message)


def _parse_qubit_list(spec: str) -> list[int]:
    """1-based comma list with ranges: '1,3-5' -> [1, 3, 4, 5]."""
    out: list[int] = []
    if not spec.strip():
        return out
    for part in spec.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _parse_int_list(spec: str) -> list[int]:
    return [int(p) for p in spec.split(",") if p.strip()] if spec.strip() else []


def _load(path: str):
    return parse_code_file(Path(path).read_text())


def _kind(code) -> str:
    if isinstance(code, CssCode):
        return "css"
    if isinstance(code, StabilizerCode):
        return "stabilizer"
    return "subsystem"


def _as_stabilizer(code) -> StabilizerCode:
    if isinstance(code, StabilizerCode):
        return code
    if isinstance(code, CssCode):
        return css_to_stabilizer(code)
    raise InvariantViolationError(
        "this subcommand needs a stabilizer (or CSS) code, got a subsystem code"
    )


def _bits(v: BinaryVector) -> str:
    return "".join(map(str, v.to_bits()))


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (exit_code, report)


def _cmd_info(args) -> tuple[int, dict]:
    code = _load(args.file)
    report = {"command": "info", "status": "ok", "kind": _kind(code), "n": code.n}
    report["k"] = code.k
    if isinstance(code, SubsystemCode):
        report["g"] = code.g
    return 0, report


def _cmd_region(args) -> tuple[int, dict]:
    code = _load(args.file)
    qubits = _parse_qubit_list(args.qubits)
    m = Region(code.n, qubits)
    report = {
        "command": "region",
        "status": "ok",
        "kind": _kind(code),
        "n": code.n,
        "qubits": list(m.qubits),
    }
    if isinstance(code, SubsystemCode):
        dressed, bare = subsystem_gs(code, m)
        report.update(g_dressed=dressed, g_bare_complement=bare, k=code.k)
    else:
        sc = _as_stabilizer(code)
        ell = stab_ell(sc, m)
        report.update(
            ell=ell,
            ell_complement=stab_ell(sc, m.complement()),
            correctable=ell == 0,
            k=sc.k,
        )
        if isinstance(code, CssCode):
            e = css_ells(code, m)
            report.update(
                ell_x=e.ell_x,
                ell_z=e.ell_z,
                ell_x_prime=e.ell_x_prime,
                ell_z_prime=e.ell_z_prime,
            )
    return 0, report


def _cmd_clean(args) -> tuple[int, dict]:
    code = _as_stabilizer(_load(args.file))
    m = Region(code.n, _parse_qubit_list(args.qubits))
    op = args.op.strip()
    if len(op) != 2 * code.n or set(op) - {"0", "1"}:
        raise _UsageError(f"--op must be a string of 2n = {2 * code.n} bits")
    v = BinaryVector.from_bits(int(c) for c in op)
    if not code.centralizer.contains(v):
        raise InvariantViolationError("operator is not in the centralizer S-perp")
    cleaned = clean(code, m, v)
    report = {
        "command": "clean",
        "n": code.n,
        "qubits": list(m.qubits),
        "status": "ok" if cleaned is not None else "infeasible",
        "cleaned": _bits(cleaned) if cleaned is not None else None,
    }
    return (0 if cleaned is not None else 4), report


def _cmd_distance(args) -> tuple[int, dict]:
    code = _as_stabilizer(_load(args.file))
    report = {
        "command": "distance",
        "status": "ok",
        "n": code.n,
        "k": code.k,
        "method": args.method,
    }
    if args.method == "brute":
        d = distance_brute(code, args.max_weight, args.budget)
        report["distance"] = d
    else:
        w = args.max_weight
        if w is None:
            raise _UsageError("--method certify requires --max-weight")
        report["weight"] = w
        report["certified"] = distance_certify_lb(
            code, w, args.budget, threads=args.threads
        )
    return 0, report


def _cmd_tripartition(args) -> tuple[int, dict]:
    code = _as_stabilizer(_load(args.file))
    a = Region(code.n, _parse_qubit_list(args.A))
    b = Region(code.n, _parse_qubit_list(args.B))
    g = Region(code.n, _parse_qubit_list(args.C))
    res = tripartition_bound(code, a, b, g)
    return 0, {
        "command": "tripartition",
        "status": "ok" if res.verified else "failed",
        "verified": res.verified,
        "failed_hypothesis": res.failed_hypothesis,
        "code_bound": res.code_bound,
        "region_capacity": res.region_capacity,
    }


def _cmd_homology(args) -> tuple[int, dict]:
    code = _load(args.file)
    if not isinstance(code, CssCode):
        raise InvariantViolationError("homology is defined for CSS code files")
    cx = from_css(code)
    report = {
        "command": "homology",
        "status": "ok",
        "n": code.n,
        "betti1": betti1(cx),
    }
    if args.alpha_qubits is not None:
        m = Region(code.n, _parse_qubit_list(args.alpha_qubits))
        alpha = region_subspace(m, "plain-n")
        report.update(
            qubits=list(m.qubits),
            restricted_homology=restricted_class_dim(cx, alpha, "homology"),
            restricted_cohomology=restricted_class_dim(cx, alpha, "cohomology"),
            duality=duality_check(cx, alpha),
        )
    return 0, report


def _universal_alpha(n: int) -> Subspace:
    half = n // 2
    return span(
        [BinaryVector.from_support([i, half + i], n) for i in range(half)], n
    )


def _cmd_universal(args) -> tuple[int, dict]:
    code = _load(args.file)
    if not isinstance(code, CssCode):
        raise InvariantViolationError("universal is defined for CSS code files")
    if code.n % 2:
        raise InfeasibleError("a self-dual alpha needs an even qubit count")
    res = universal_logops(code, _universal_alpha(code.n))
    return 0, {
        "command": "universal",
        "status": "ok",
        "n": code.n,
        "k": code.k,
        "ell_x": res.ell_x,
        "ell_z": res.ell_z,
        "x_reps": [_bits(r) for r in res.x_reps],
        "z_reps": [_bits(r) for r in res.z_reps],
    }


# ---------------------------------------------------------------------------
# verify suites


def _suite_cl(trials: int, seed: int, oracle: bool) -> tuple[int, int]:
    checks = failures = 0
    rng = rng_from_seed(seed)
    for t in range(trials):
        n = int(rng.integers(2, 9))
        s_dim = int(rng.integers(0, n + 1))
        code = random_stabilizer(n, s_dim, seed=seed * 7919 + t)
        m = Region(n, [i + 1 for i in range(n) if rng.integers(0, 2)])
        checks += 1
        if not verify_stab_cl(code, m):
            failures += 1
        if oracle and n <= 6:
            checks += 1
            if stab_ell_brute(code, m) != stab_ell(code, m):
                failures += 1
    return checks, failures


def _suite_css(trials: int, seed: int, oracle: bool) -> tuple[int, int]:
    checks = failures = 0
    rng = rng_from_seed(seed + 1)
    for t in range(trials):
        n = int(rng.integers(4, 11))
        mx = int(rng.integers(0, n // 2 + 1))
        mz = int(rng.integers(0, n - mx + 1))
        try:
            code = random_css(n, mx, mz, seed=seed * 104729 + t)
        except InfeasibleError:
            continue
        m = Region(n, [i + 1 for i in range(n) if rng.integers(0, 2)])
        e = css_ells(code, m)  # asserts both k-identities internally
        sc = css_to_stabilizer(code)
        msym = Region(n, m.qubits)
        checks += 1
        if sum(e) != stab_ell(sc, msym) + stab_ell(sc, msym.complement()):
            failures += 1
        if oracle and n <= 8:
            checks += 1
            if css_ells_brute(code, m) != tuple(e):
                failures += 1
    return checks, failures


def _suite_subsystem(trials: int, seed: int, oracle: bool) -> tuple[int, int]:
    checks = failures = 0
    rng = rng_from_seed(seed + 2)
    for t in range(trials):
        n = int(rng.integers(2, 7))
        g_dim = int(rng.integers(0, 2 * n + 1))
        code = random_subsystem(n, g_dim, seed=seed * 15485863 + t)
        m = Region(n, [i + 1 for i in range(n) if rng.integers(0, 2)])
        dressed, bare = subsystem_gs(code, m)  # asserts the 2k identity
        checks += 1
        if dressed + bare != 2 * code.k:
            failures += 1
    return checks, failures


def _random_subspace(rng, ambient: int, dim: int) -> Subspace:
    return span(
        [
            BinaryVector.from_bits(rng.integers(0, 2, size=ambient, dtype=np.uint8))
            for _ in range(dim)
        ],
        ambient,
    )


def _suite_lattice(trials: int, seed: int, oracle: bool) -> tuple[int, int]:
    checks = failures = 0
    rng = rng_from_seed(seed + 3)
    for _ in range(trials):
        m = int(rng.integers(1, 5))
        d = 2 * m
        form = BilinearForm.euclidean_dot(d)
        eta = _random_subspace(rng, d, int(rng.integers(0, d + 1)))
        xi = eta.annihilator(form) & _random_subspace(rng, d, int(rng.integers(0, d + 1)))
        alpha = _random_subspace(rng, d, int(rng.integers(0, d + 1)))
        lat = GradedLatticeInstance.grassmannian(form)
        checks += 1
        if not verify_graded_identity(lat, xi, eta, alpha):
            failures += 1
        # symplectic h/q duality on a random isotropic sigma
        sform = BilinearForm.symplectic(d)
        sigma = Subspace.zero(d)
        for _ in range(int(rng.integers(0, m + 1))):
            cand = _random_subspace(rng, d, 1)
            trial = sigma + (sigma.annihilator(sform) & cand)
            if trial.is_isotropic(sform):
                sigma = trial
        beta = _random_subspace(rng, d, int(rng.integers(0, d + 1)))
        checks += 1
        if not q_sigma_duality_check(sigma, beta, sform):
            failures += 1
    return checks, failures


def _suite_abelian(trials: int, seed: int, oracle: bool) -> tuple[int, int]:
    checks = failures = 0
    for moduli in ((2, 2), (4, 4), (2, 6), (3, 3)):
        g = AbelianGroup(moduli)
        chi = Bicharacter.product(g, [1] * len(moduli))
        for h in all_subgroups(g):
            hd = dagger(h, chi)
            if not h <= hd:
                continue
            if oracle:
                checks += 1
                if subgroup_dagger_brute(h, chi) != hd:
                    failures += 1
            for bits in range(1 << len(moduli)):
                factors = [i + 1 for i in range(len(moduli)) if bits >> i & 1]
                res = abelian_cl(g, chi, h, factors)  # asserts the identity
                checks += 1
                if res.ell_m * res.ell_mc != res.quotient:
                    failures += 1
    return checks, failures


_SUITES = {
    "cl": _suite_cl,
    "css": _suite_css,
    "subsystem": _suite_subsystem,
    "lattice": _suite_lattice,
    "abelian": _suite_abelian,
}


def _cmd_verify(args) -> tuple[int, dict]:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    checks = failures = 0
    for name in names:
        c, f = _SUITES[name](args.trials, args.seed, args.oracle)
        checks += c
        failures += f
    report = {
        "command": "verify",
        "status": "ok" if failures == 0 else "failed",
        "suite": args.suite,
        "checks": checks,
        "failures": failures,
    }
    return (0 if failures == 0 else 3), report


_FAMILIES = {
    "example42": (example_42, 1),
    "toric": (toric, 1),
    "random-css": (random_css, 4),
    "random-stab": (random_stabilizer, 3),
    "random-gauge": (random_subsystem, 3),
}


def _cmd_gen(args) -> tuple[int, dict]:
    if args.family not in _FAMILIES:
        raise _UsageError(
            f"unknown family {args.family!r}; choose from {sorted(_FAMILIES)}"
        )
    fn, arity = _FAMILIES[args.family]
    if len(args.params) != arity:
        raise _UsageError(f"family {args.family} takes {arity} integer parameter(s)")
    code = fn(*args.params)
    text = serialize(code)
    if args.output:
        Path(args.output).write_text(text)
    report = {
        "command": "gen",
        "status": "ok",
        "family": args.family,
        "params": list(args.params),
        "n": code.n,
        "k": code.k,
        "output": args.output,
        "text": text,
    }
    return 0, report


def _cmd_abelian(args) -> tuple[int, dict]:
    moduli = _parse_int_list(args.moduli)
    if not moduli:
        raise _UsageError("--moduli must list at least one modulus")
    g = AbelianGroup(moduli)
    multipliers = (
        _parse_int_list(args.multipliers) if args.multipliers else [1] * len(moduli)
    )
    chi = Bicharacter.product(g, multipliers)
    if args.subgroup_gens:
        gens = []
        for part in args.subgroup_gens.split(","):
            comps = [int(x) for x in part.split(":")]
            if len(comps) != len(moduli):
                raise _UsageError(
                    "each generator needs one ':'-separated component per modulus"
                )
            gens.append(g.encode(comps))
        h = generated_subgroup(g, gens)
    else:
        h = Subgroup.trivial(g)
    factors = _parse_int_list(args.factors)
    res = abelian_cl(g, chi, h, factors)
    alt = abelian_cl_alternative(g, chi, h, factors)
    report = {
        "command": "abelian",
        "status": "ok",
        "moduli": moduli,
        "factors": factors,
        "ell_m": int(res.ell_m),
        "ell_mc": int(res.ell_mc),
        "quotient": int(res.quotient),
        "outcome": alt.outcome,
        "witness": list(g.decode(alt.witness)) if alt.witness is not None else None,
    }
    return 0, report


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    p = _Parser(prog="qclean", description=__doc__)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--threads", type=int, default=1, help="threads for region scans")
    p.add_argument("--budget", type=int, default=None, help="enumeration budget")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("info", help="code parameters")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_info)

    s = sub.add_parser("region", help="l-values and correctability of a region")
    s.add_argument("file")
    s.add_argument("--qubits", required=True, help="1-based list, e.g. 1,3-5")
    s.set_defaults(fn=_cmd_region)

    s = sub.add_parser("clean", help="clean an operator off a region")
    s.add_argument("file")
    s.add_argument("--qubits", required=True)
    s.add_argument("--op", required=True, help="2n-bit operator (x block, z block)")
    s.set_defaults(fn=_cmd_clean)

    s = sub.add_parser("distance", help="minimum distance (brute or certified bound)")
    s.add_argument("file")
    s.add_argument("--max-weight", type=int, default=None)
    s.add_argument("--method", choices=("brute", "certify"), default="brute")
    s.set_defaults(fn=_cmd_distance)

    s = sub.add_parser("tripartition", help="2k <= 2|C| bound from regions A, B, C")
    s.add_argument("file")
    s.add_argument("--A", required=True)
    s.add_argument("--B", required=True)
    s.add_argument("--C", required=True)
    s.set_defaults(fn=_cmd_tripartition)

    s = sub.add_parser("homology", help="Betti number and restricted class dims")
    s.add_argument("file")
    s.add_argument("--alpha-qubits", default=None)
    s.set_defaults(fn=_cmd_homology)

    s = sub.add_parser("universal", help="logical representatives in a self-dual alpha")
    s.add_argument("file")
    s.set_defaults(fn=_cmd_universal)

    s = sub.add_parser("verify", help="randomized/exhaustive identity suites")
    s.add_argument(
        "--suite",
        choices=("cl", "css", "subsystem", "lattice", "abelian", "all"),
        default="all",
    )
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--oracle", action="store_true")
    s.set_defaults(fn=_cmd_verify)

    s = sub.add_parser("gen", help="generate an example or random code file")
    s.add_argument("family")
    s.add_argument("params", nargs="*", type=int)
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(fn=_cmd_gen)

    s = sub.add_parser("abelian", help="abelian cleaning identity on a product group")
    s.add_argument("--moduli", required=True, help="e.g. 4,4")
    s.add_argument("--multipliers", default=None)
    s.add_argument("--subgroup-gens", default=None, help="e.g. 2:0,0:2")
    s.add_argument("--factors", required=True, help="1-based factor list, e.g. 1")
    s.set_defaults(fn=_cmd_abelian)
    return p


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    if report["command"] == "gen" and report.get("output") is None:
        print(report["text"], end="")
        return
    for key, value in report.items():
        if key in ("command", "text"):
            continue
        print(f"{key}: {value}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        code, report = args.fn(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"cannot read file: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (InvariantViolationError, ValueError) as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 4
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 5
    _emit(report, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
