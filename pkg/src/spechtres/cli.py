"""Command-line front end: ``betti``, ``build``, ``verify`` and ``hilbert``.

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
errors (bad arguments, ``n < 2d`` and the like).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .resolution import ChainComplex, ComplexError, build_complex, check_nd
from .verify import (
    betti_alternating_sum_check,
    betti_table,
    chain_complex_failures,
    default_j_max,
    euler_characteristic_check,
    filtration_check,
    graded_exactness,
    hilbert_cross_check,
    hilbert_series,
    minimality_violations,
    statement_star_check,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    n: int
    d: int
    j_max: Optional[int] = None
    jobs: int = 1
    fmt: str = "text"
    out: Optional[str] = None

    def validate(self) -> None:
        try:
            check_nd(self.n, self.d)
        except ComplexError as exc:
            raise UsageError(str(exc)) from None
        if self.j_max is not None and self.j_max < self.d:
            raise UsageError(f"--j-max must be at least d = {self.d}")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")


# --- serialisation ------------------------------------------------------------------


def complex_to_json(c: ChainComplex) -> dict:
    return {
        "n": c.n,
        "d": c.d,
        "modules": [
            {
                "index": m.index,
                "shape": list(m.shape),
                "twist": m.twist,
                "rank": m.rank,
                "basis": [[list(row) for row in t] for t in m.basis],
            }
            for m in c.modules
        ],
        "differentials": [
            {
                "index": mat.index,
                "entries": [
                    {"row": r, "col": col, "poly": p.to_triples()}
                    for (r, col), p in sorted(mat.entries.items())
                ],
            }
            for mat in c.differentials
        ],
        "generators": [g.to_triples() for g in c.generators],
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, ensure_ascii=False) + "\n"


# --- commands ------------------------------------------------------------------------


def cmd_betti(cfg: RunConfig) -> tuple[str, int]:
    rows = betti_table(cfg.n, cfg.d).rows()
    if cfg.fmt == "json":
        return dumps({"n": cfg.n, "d": cfg.d, "betti": [{"i": i, "j": j, "beta": b} for i, j, b in rows]}), EXIT_OK
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "j", "beta"])
        writer.writerows(rows)
        return buf.getvalue(), EXIT_OK
    lines = [f"Betti numbers of the ({cfg.n - cfg.d},{cfg.d}) Specht ideal", "   i    j  beta"]
    lines += [f"{i:4d} {j:4d} {b:5d}" for i, j, b in rows]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_build(cfg: RunConfig, c: Optional[ChainComplex] = None) -> tuple[str, int]:
    c = c or build_complex(cfg.n, cfg.d, jobs=cfg.jobs)
    if cfg.fmt == "json":
        return dumps(complex_to_json(c)), EXIT_OK
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "row", "col", "poly"])
        for mat in c.differentials:
            for (r, col), p in sorted(mat.entries.items()):
                writer.writerow([mat.index, r, col, str(p)])
        return buf.getvalue(), EXIT_OK
    lines = []
    for m in c.modules:
        lines.append(f"F_{m.index}: V{m.shape} ⊗ R({m.twist}), rank {m.rank}")
    for mat in c.differentials:
        lines.append(f"∂_{mat.index}: {mat.rows}x{mat.cols}, {len(mat.entries)} nonzero entries")
    return "\n".join(lines) + "\n", EXIT_OK


def verify_complex(c: ChainComplex, j_max: Optional[int] = None, jobs: int = 1) -> dict:
    """Run every check on ``c`` and return a report; ``report["ok"]`` aggregates."""
    n, d = c.n, c.d
    if j_max is None:
        j_max = default_j_max(c)
    checks: dict[str, dict] = {}
    cc = chain_complex_failures(c)
    checks["chain_complex"] = {
        "ok": not cc,
        "failures": [{"composite": f"d{i}d{i + 1}", "row": r, "col": col} for i, r, col in cc],
    }
    mv = minimality_violations(c)
    checks["minimality"] = {"ok": not mv, "failures": [{"index": i, "row": r, "col": col} for i, r, col in mv]}
    checks["euler"] = {"ok": euler_characteristic_check(c)}
    checks["betti_closed_form"] = {"ok": betti_alternating_sum_check(n, d)}
    table = betti_table(n, d)
    checks["statement_star"] = {"ok": statement_star_check(table)}
    if cc:
        checks["graded_exactness"] = {"ok": False, "failures": ["skipped: not a complex"]}
        checks["hilbert"] = {"ok": False, "failures": ["skipped: not a complex"]}
    else:
        reports = graded_exactness(c, max(j_max, d), jobs=jobs)
        checks["graded_exactness"] = {
            "ok": all(r.ok for r in reports),
            "j_max": j_max,
            "degrees": [
                {"j": r.j, "homology": r.homology, "ideal_dim": r.ideal_dim, "failures": r.failures}
                for r in reports
            ],
        }
        cross = hilbert_cross_check(n, d, reports, j_max)
        checks["hilbert"] = {
            "ok": all(series == oracle for _, series, oracle in cross),
            "numerator": list(hilbert_series(n, d).numerator),
            "degrees": [{"j": j, "series": s, "oracle": o} for j, s, o in cross],
        }
    if n > 2 * d:
        fr = filtration_check(n, d, tabloid_coordinates=n <= 7)
        checks["filtration"] = {"ok": fr.ok, "problems": fr.problems, "truncation_boundary": fr.truncation_boundary}
    return {"n": n, "d": d, "ok": all(v["ok"] for v in checks.values()), "checks": checks}


def cmd_verify(cfg: RunConfig, c: Optional[ChainComplex] = None) -> tuple[str, int]:
    c = c or build_complex(cfg.n, cfg.d, jobs=cfg.jobs)
    report = verify_complex(c, cfg.j_max, cfg.jobs)
    code = EXIT_OK if report["ok"] else EXIT_FAILED
    if cfg.fmt == "json":
        return dumps(report), code
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "ok"])
        for name, res in report["checks"].items():
            writer.writerow([name, int(res["ok"])])
        return buf.getvalue(), code
    lines = [f"verify (n, d) = ({c.n}, {c.d})"]
    for name, res in report["checks"].items():
        lines.append(f"  {'PASS' if res['ok'] else 'FAIL'}  {name}")
        for f in res.get("failures", [])[:10]:
            if isinstance(f, dict):
                f = ", ".join(f"{k} {v}" for k, v in f.items())
            lines.append(f"        {f}")
        for deg in res.get("degrees", []):
            for f in deg.get("failures", []) or []:
                lines.append(f"        j={deg['j']}: {f}")
        for f in res.get("problems", [])[:10]:
            lines.append(f"        {f}")
    lines.append("all checks passed" if report["ok"] else "verification FAILED")
    return "\n".join(lines) + "\n", code


def cmd_hilbert(cfg: RunConfig) -> tuple[str, int]:
    hs = hilbert_series(cfg.n, cfg.d)
    j_max = cfg.j_max if cfg.j_max is not None else default_j_max((cfg.n, cfg.d))
    coeffs = hs.coefficients(j_max)
    if cfg.fmt == "json":
        return dumps(
            {
                "n": cfg.n,
                "d": cfg.d,
                "numerator": list(hs.numerator),
                "denominator_exponent": hs.denominator_exponent,
                "coefficients": coeffs,
            }
        ), EXIT_OK
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["j", "dim"])
        writer.writerows(enumerate(coeffs))
        return buf.getvalue(), EXIT_OK
    terms = []
    for k, h in enumerate(hs.numerator):
        if h:
            power = "" if k == 0 else "t" if k == 1 else f"t^{k}"
            terms.append(str(h) if not power else power if h == 1 else f"{h}{power}")
    num = " + ".join(terms)
    lines = [
        f"H(R/I, t) = ({num}) / (1-t)^{hs.denominator_exponent}",
        "coefficients: " + " ".join(map(str, coeffs)),
    ]
    return "\n".join(lines) + "\n", EXIT_OK


# --- argument parsing -----------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spechtres", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fmt in (("betti", "text"), ("build", "json"), ("verify", "text"), ("hilbert", "text")):
        p = sub.add_parser(name)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--j-max", type=int, default=None)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--format", choices=("json", "csv", "text"), default=fmt)
        p.add_argument("--out", default=None, help="write here instead of stdout")
        if name == "verify":
            p.add_argument(
                "--flip-sign",
                default=None,
                metavar="I:ROW:COL",
                help="negate one entry of ∂_I before verifying (exercises the failure path)",
            )
    return parser


def _flip(c: ChainComplex, entry: str) -> None:
    try:
        i, r, col = (int(x) for x in entry.split(":"))
        mat = c.differential(i)
        p = mat.entries[(r, col)]
    except (ValueError, IndexError, KeyError):
        raise UsageError(f"--flip-sign {entry!r} does not name a nonzero entry") from None
    mat.entries[(r, col)] = -p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors already
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    cfg = RunConfig(args.n, args.d, args.j_max, args.jobs, args.format, args.out)
    try:
        cfg.validate()
        if args.command == "betti":
            text, code = cmd_betti(cfg)
        elif args.command == "build":
            text, code = cmd_build(cfg)
        elif args.command == "hilbert":
            text, code = cmd_hilbert(cfg)
        else:
            c = build_complex(cfg.n, cfg.d, jobs=cfg.jobs)
            if args.flip_sign:
                _flip(c, args.flip_sign)
            text, code = cmd_verify(cfg, c)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
