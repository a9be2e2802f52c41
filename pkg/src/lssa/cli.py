"""Command-line entry point: ``lssa <command> [options]`` (or ``python -m lssa``)."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .scalars import DenominatorVanishes, canonical_str, parse_scalar


@dataclass
class Check:
    name: str
    status: str  # pass | fail | skip
    detail: object = None
    seconds: float = 0.0


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks) and any(c.status == "pass" for c in self.checks)

    def add(self, name: str, ok: bool, detail=None, seconds: float = 0.0) -> None:
        self.checks.append(Check(name, "pass" if ok else "fail", detail, round(seconds, 3)))

    def skip(self, name: str, detail=None) -> None:
        self.checks.append(Check(name, "skip", detail))

    def as_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [asdict(c) for c in self.checks]}

    def render(self) -> str:
        lines = [f"== {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            tail = f"  ({c.seconds}s)" if c.seconds else ""
            lines.append(f"  [{c.status}] {c.name}{tail}")
            if c.detail not in (None, "", [], {}) and c.status != "pass":
                lines.append(f"      {json.dumps(c.detail, default=str)[:2000]}")
        return "\n".join(lines)


class _Timer:
    def __enter__(self):
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t


def parse_bindings(text: str | None) -> dict:
    """'k1=1,k2=-3/2' -> {'k1': 1, 'k2': -3/2}."""
    out = {}
    if not text:
        return out
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"expected name=value, got {part!r}")
        name, value = part.split("=", 1)
        v = parse_scalar(value.strip())
        out[name.strip()] = v
    return out


# -- commands -------------------------------------------------------------------------

def cmd_verify_tables(args) -> Report:
    from .sl21 import verify_reference_tables

    rep = Report("verify-tables")
    bindings = parse_bindings(args.at)
    if args.symbolic and bindings:
        raise ValueError("use either --symbolic or --at")
    with _Timer() as t:
        results = verify_reference_tables(bindings or None, families=args.family)
    if bindings and not results:
        rep.skip("no family has all its parameters bound", bindings)
    for r in results:
        if r.error and r.error.startswith("ExcludedParameter"):
            rep.skip(f"table {r.which}: excluded parameter value", r.error)
        elif r.error:
            rep.add(f"table {r.which}", False, r.error)
        else:
            rep.add(f"table {r.which}: {r.matched}/{r.checked} entries", r.ok,
                    [{"product": p, "computed": a, "stored": b} for p, a, b in r.mismatches])
    rep.checks.append(Check("elapsed", "skip", None, round(t.seconds, 3)))
    return rep


def cmd_build(args) -> Report:
    from .core import check_lssa, recovers_bracket, table_to_json
    from .reps import rep_to_json
    from .sl21 import FAMILY_PARAMETERS, ExcludedParameter, build_family

    rep = Report(f"build {args.family}")
    bindings = parse_bindings(args.param)
    try:
        with _Timer() as t:
            fb = build_family(args.family, bindings or None,
                              parse_scalar(args.w1_scale) if args.w1_scale else None)
    except ExcludedParameter as exc:
        rep.add("bijective evaluation map", False, str(exc))
        return rep
    rep.add("bijective evaluation map", True, None, t.seconds)
    rep.add("left-symmetry identity", check_lssa(fb.table))
    rep.add("associated bracket", recovers_bracket(fb.table))
    names = [n for n in FAMILY_PARAMETERS[args.family.upper()] if n not in bindings]
    data = table_to_json(fb.table, names)
    if args.out:
        Path(args.out).write_text(json.dumps(data, indent=1) + "\n")
        rep.skip("wrote product table", args.out)
    else:
        rep.checks.append(Check("product table", "skip", data))
    if args.rep_out:
        Path(args.rep_out).write_text(json.dumps(rep_to_json(fb.rep), indent=1) + "\n")
        rep.skip("wrote module", args.rep_out)
    return rep


def _product_checks(rep: Report, table) -> None:
    from .core import check_lssa, recovers_bracket, supertraces_vanish

    with _Timer() as t:
        ok = check_lssa(table)
    rep.add("left-symmetry identity", ok, None, t.seconds)
    rep.add("associated bracket equals the algebra bracket", recovers_bracket(table))
    rep.add("str rho(x) = str gamma(x) = 0", supertraces_vanish(table))


def cmd_check_product(args) -> Report:
    from .core import table_from_json

    rep = Report(f"check-product {args.path}")
    table = table_from_json(json.loads(Path(args.path).read_text()))
    _product_checks(rep, table)
    return rep


def cmd_check_cocycle(args) -> Report:
    from .core import Cocycle, NotBijective, check_cocycle, evaluation_map, lssa_from_cocycle
    from .linalg import Matrix, ZERO
    from .reps import check_representation, rep_from_json

    rep = Report(f"check-cocycle {args.rep}")
    data = json.loads(Path(args.rep).read_text())
    module = rep_from_json(data)
    names = tuple(data.get("parameters", ()))
    rep.add("representation", check_representation(module))
    if args.q:
        qd = json.loads(Path(args.q).read_text())
        cols = []
        for lab in module.algebra.labels:
            col = [ZERO] * module.dim
            for vlab, s in qd.get(lab, {}).items():
                col[module.labels.index(vlab)] = parse_scalar(s, names)
            cols.append(col)
        c = Cocycle(module, Matrix.from_columns(cols, rows=module.dim))
    else:
        a = [ZERO] * module.dim
        for part in (args.point or "").split(","):
            if part.strip():
                lab, s = part.rsplit("=", 1)
                a[module.labels.index(lab.strip())] = parse_scalar(s.strip(), names)
        c = evaluation_map(module, a)
    rep.add("cocycle identity", check_cocycle(c))
    try:
        table = lssa_from_cocycle(c)
    except NotBijective as exc:
        rep.skip("induced product", str(exc))
        return rep
    _product_checks(rep, table)
    return rep


def cmd_slmm(args) -> Report:
    from .core import table_to_json
    from .slmm import check_expansion, verify

    rep = Report(f"thm4 m={args.m}")
    with _Timer() as t:
        r, inst = verify(args.m, max_m=args.max_m)
    dim = sum(r.superdim_algebra)
    rep.add(f"superdim U = superdim g = {r.superdim_algebra[0]}|{r.superdim_algebra[1]}",
            r.superdim_module == r.superdim_algebra)
    rep.add(f"ev_a rank {r.rank} = {dim}", r.rank == dim, None, t.seconds)
    k = r.kernel
    rep.add("gl kernel is span diag(I, -I)", k.kernel_dim == 1 and k.kernel_is_scalar_type,
            {"kernel_dim": k.kernel_dim})
    rep.add(f"supertrace on the kernel generator = {k.expected_supertrace}",
            k.supertrace == k.expected_supertrace, {"supertrace": str(k.supertrace)})
    rep.add("sl kernel is zero", k.sl_kernel_dim == 0)
    rep.add("left-symmetry identity", r.lssa)
    rep.add("associated bracket", r.bracket)
    rep.add("supertraces vanish", r.supertraces)
    rep.add("closed-form expansion of ev_a", check_expansion(args.m, seed=args.seed))
    if args.emit:
        Path(args.emit).write_text(json.dumps(table_to_json(inst.table), indent=1) + "\n")
        rep.skip("wrote product table", args.emit)
    return rep


def cmd_nonexist(args) -> Report:
    from .nonexistence import (CertificationFailed, build_P, build_P_dual, build_Q3,
                               build_Q3_dual, certify_no_bijective_ev)

    rep = Report(f"nonexist m={args.m}")
    if args.m < 3:
        raise ValueError("m must be at least 3")
    jobs = [(f"P_{args.m}", lambda: build_P(args.m), "P"),
            (f"P_{args.m}*", lambda: build_P_dual(args.m), "P*"),
            ("Q_3", build_Q3, "Q"), ("Q_3*", build_Q3_dual, "Q*")]
    for name, make, kind in jobs:
        with _Timer() as t:
            try:
                w = certify_no_bijective_ev(make(), kind, name)
            except CertificationFailed as exc:
                rep.add(f"{name}: no bijective evaluation map", False, str(exc))
                continue
        rep.add(f"{name}: no bijective evaluation map", True, w.as_dict(), t.seconds)
    return rep


def cmd_kacdim(args) -> Report:
    from .sl21 import kac_grid

    rep = Report("kacdim")
    extra = tuple(parse_scalar(s) for s in args.k) if args.k else (7,)
    for d in kac_grid(args.i_max, extra):
        i, k = d.i, canonical_str(d.k)
        rep.add(f"K({i},{k}) superdim {d.superdim[0]}|{d.superdim[1]}",
                d.superdim == (2 * (i + 1), 2 * (i + 1)))
        if not d.typical:
            expected = (i + 1, i) if d.k == i else (i + 1, i + 2)
            v = d.irreducible_superdim
            rep.add(f"V({i},{k}) superdim {v[0]}|{v[1]}", v == expected,
                    {"expected": f"{expected[0]}|{expected[1]}"})
            rep.add(f"T-({i},{k}) = singular weight {d.singular_weight[0]},{canonical_str(d.singular_weight[1])}",
                    bool(d.t_minus_matches))
    return rep


def cmd_negst(args) -> Report:
    from .sl21 import verify_distinct_families, verify_negst_relations

    rep = Report("negst")
    for c in verify_negst_relations(seed=args.seed) + verify_distinct_families(seed=args.seed):
        verdict = "isomorphic" if c.found else "not isomorphic"
        rep.add(f"{c.description}: {verdict}", c.ok,
                {"hom_dim": c.hom_dim, "generic_rank": c.generic_rank})
    return rep


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lssa", description="Exact checks of left-symmetric superalgebras.")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-tables", help="compare A, B, C with the stored tables")
    s.add_argument("--symbolic", action="store_true", help="compare over the function field (default)")
    s.add_argument("--at", help="specialise, e.g. k=0 or k1=1,k2=2")
    s.add_argument("--family", nargs="+", default=["A", "B", "C"], choices=["A", "B", "C"])
    s.set_defaults(func=cmd_verify_tables)

    s = sub.add_parser("build", help="build a family and emit its product table")
    s.add_argument("family", choices=["A", "B", "C", "a", "b", "c"])
    s.add_argument("--param", help="bindings, e.g. k=2 or k1=1,k2=3 (default symbolic)")
    s.add_argument("--w1-scale", help="relative scale of w1 in the base point")
    s.add_argument("--out", help="write the ProductTable JSON here")
    s.add_argument("--rep-out", help="write the module as Representation JSON here")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("check-product", help="check a ProductTable JSON file")
    s.add_argument("path")
    s.set_defaults(func=cmd_check_product)

    s = sub.add_parser("check-cocycle", help="check a cocycle on a Representation JSON module")
    s.add_argument("rep", help="Representation JSON")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--q", help="JSON {algebra label: {module label: scalar}}")
    g.add_argument("--point", help="even base point, e.g. \"1*u0=1,y1y2*u1=-1/2\"")
    s.set_defaults(func=cmd_check_cocycle)

    s = sub.add_parser("thm4", help="the evaluation-map LSSA on sl(m+1|m)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--max-m", type=int, default=6, help="ceiling on m (default 6)")
    s.add_argument("--emit", help="write the ProductTable JSON here")
    s.set_defaults(func=cmd_slmm)

    s = sub.add_parser("nonexist", help="witnesses against bijective evaluation maps on sl(m|1)")
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(func=cmd_nonexist)

    s = sub.add_parser("kacdim", help="Kac module dimensions, atypical quotients and T-")
    s.add_argument("--i-max", type=int, default=4)
    s.add_argument("--k", nargs="*", help="extra rational k values (default 7)")
    s.set_defaults(func=cmd_kacdim)

    s = sub.add_parser("negst", help="-st twist isomorphisms and family separation")
    s.set_defaults(func=cmd_negst)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except (ValueError, KeyError, OSError, DenominatorVanishes) as exc:
        report = Report(args.command)
        report.add("input", False, f"{type(exc).__name__}: {exc}")
    if args.json:
        print(json.dumps(report.as_dict(), indent=1, default=str))
    else:
        print(report.render())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
