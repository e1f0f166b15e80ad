"""Command-line front end: single evaluations, grid verification, tables.

`verify` runs the three independent routes (closed form, lemma route,
direct series) over a parameter grid and writes one record per point;
`table` emits closed/lemma values only; `eval` prints a single value.

Exit codes: 0 all good, 1 tolerance failures in verify, 2 bad configuration.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .closed_forms import closed_route, closed_sum, lemma_sum
from .laguerre import MINUS, PLUS, InvalidSumSpecError, SumSpec, oracle_sum
from .pfq import DEFAULT_MAX_TERMS, DEFAULT_TOL

VARIANTS = ("+nu+p", "+nu-p", "-nu+p", "-nu-p")

CSV_HEADER = (
    "variant,m,p,nu,f,x,dispatch,closed,lemma,oracle,"
    "rel_err_closed,rel_err_lemma,terms_oracle,status"
)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_SKIPPED = "skipped-invalid"

# Grid points this close to a validity-constraint violation are recorded as
# skipped-invalid instead of being evaluated.
NEAR_VIOLATION_TOL = 1e-6

DEFAULT_GRID = {
    "nu_values": [0.3, 0.5, 1.7],
    "f_values": [0.7, 2.3],
    "x_values": [0.1, 0.5, 1.0, 2.0, 5.0],
    "m_max": 3,
    "p_max": 4,
    "signs": list(VARIANTS),
    "tol": 1e-9,
    "max_terms": DEFAULT_MAX_TERMS,
}


class ConfigError(ValueError):
    pass


@dataclass
class GridConfig:
    nu_values: list[float]
    f_values: list[float]
    x_values: list[float]
    m_max: int
    p_max: int
    signs: list[str]
    tol: float
    max_terms: int

    def validate(self) -> None:
        for name in ("nu_values", "f_values", "x_values"):
            if not getattr(self, name):
                raise ConfigError(f"{name} must be non-empty")
        if self.m_max < 0 or self.p_max < 0:
            raise ConfigError("m_max and p_max must be non-negative")
        if not self.signs:
            raise ConfigError("signs must be non-empty")
        for v in self.signs:
            if v not in VARIANTS:
                raise ConfigError(f"unknown sign variant {v!r}")
        if self.tol <= 0.0:
            raise ConfigError("tol must be positive")
        if self.max_terms <= 0:
            raise ConfigError("max_terms must be positive")

    def points(self) -> list[SumSpec]:
        """Grid points in the canonical (variant, m, p, nu, f, x) order."""
        out = []
        for variant in sorted(set(self.signs), key=VARIANTS.index):
            sign_nu, sign_p = variant[0], variant[3]
            for m in range(self.m_max + 1):
                for p in range(self.p_max + 1):
                    for nu in sorted(self.nu_values):
                        for f in sorted(self.f_values):
                            for x in sorted(self.x_values):
                                out.append(SumSpec(m=m, p=p, sign_nu=sign_nu,
                                                   sign_p=sign_p, nu=nu, f=f, x=x))
        return out


@dataclass
class VerifyRecord:
    spec: SumSpec
    dispatch: str
    closed: float
    lemma: float
    oracle: float
    rel_err_closed: float
    rel_err_lemma: float
    terms_oracle: int
    status: str
    reason: str = field(default="")

    def row(self) -> str:
        s = self.spec
        return ",".join(
            (
                s.variant,
                str(s.m),
                str(s.p),
                repr(s.nu),
                repr(s.f),
                repr(s.x),
                self.dispatch,
                repr(self.closed),
                repr(self.lemma),
                repr(self.oracle),
                repr(self.rel_err_closed),
                repr(self.rel_err_lemma),
                str(self.terms_oracle),
                self.status,
            )
        )

    def as_dict(self) -> dict:
        s = self.spec
        return {
            "variant": s.variant,
            "m": s.m,
            "p": s.p,
            "nu": s.nu,
            "f": s.f,
            "x": s.x,
            "dispatch": self.dispatch,
            "closed": self.closed,
            "lemma": self.lemma,
            "oracle": self.oracle,
            "rel_err_closed": self.rel_err_closed,
            "rel_err_lemma": self.rel_err_lemma,
            "terms_oracle": self.terms_oracle,
            "status": self.status,
        }


def rel_err(value: float, reference: float) -> float:
    return abs(value - reference) / max(1.0, abs(reference))


def verify_point(spec: SumSpec, tol: float, max_terms: int,
                 eval_tol: float = DEFAULT_TOL) -> VerifyRecord:
    """Three-way comparison at one grid point."""
    bad = spec.violations(NEAR_VIOLATION_TOL)
    if bad:
        return VerifyRecord(spec, "-", float("nan"), float("nan"), float("nan"),
                            float("nan"), float("nan"), 0, STATUS_SKIPPED,
                            reason="; ".join(bad))
    dispatch = closed_route(spec)
    try:
        oracle = oracle_sum(spec, tol=eval_tol, max_terms=max_terms)
        closed = closed_sum(spec, tol=eval_tol, max_terms=max_terms)
        lemma = lemma_sum(spec, tol=eval_tol, max_terms=max_terms)
    except Exception as exc:  # record, never crash the sweep
        return VerifyRecord(spec, dispatch, float("nan"), float("nan"), float("nan"),
                            float("nan"), float("nan"), 0, STATUS_FAIL,
                            reason=f"{type(exc).__name__}: {exc}")
    ec = rel_err(closed, oracle.value)
    el = rel_err(lemma, oracle.value)
    status = STATUS_PASS if (ec <= tol and el <= tol) else STATUS_FAIL
    return VerifyRecord(spec, dispatch, closed, lemma, oracle.value,
                        ec, el, oracle.terms_used, status)


def run_verify(grid: GridConfig) -> list[VerifyRecord]:
    grid.validate()
    return [verify_point(s, grid.tol, grid.max_terms) for s in grid.points()]


# ---------------------------------------------------------------------------
# configuration parsing
# ---------------------------------------------------------------------------

def _parse_float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def load_grid_file(path: str) -> GridConfig:
    """Flat key = value format, comma-separated lists, '#' comments."""
    values = dict(DEFAULT_GRID)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            for lineno, raw in enumerate(handle, start=1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key = value")
                key, _, val = line.partition("=")
                key = key.strip()
                val = val.strip()
                if key in ("nu_values", "f_values", "x_values"):
                    values[key] = _parse_float_list(val)
                elif key in ("m_max", "p_max", "max_terms"):
                    values[key] = int(val)
                elif key == "tol":
                    values[key] = float(val)
                elif key == "signs":
                    values[key] = [tok.strip() for tok in val.split(",") if tok.strip()]
                else:
                    raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    except OSError as exc:
        raise ConfigError(f"cannot read grid config {path}: {exc}") from exc
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"bad value in grid config {path}: {exc}") from exc
    return GridConfig(**values)


def _grid_from_args(args: argparse.Namespace) -> GridConfig:
    if args.grid:
        cfg = load_grid_file(args.grid)
    else:
        cfg = GridConfig(**DEFAULT_GRID)
    if args.tol is not None:
        cfg.tol = args.tol
    if args.max_terms is not None:
        cfg.max_terms = args.max_terms
    return cfg


def _spec_from_args(args: argparse.Namespace) -> SumSpec:
    return SumSpec(m=args.m, p=args.p, sign_nu=args.sign_nu, sign_p=args.sign_p,
                   nu=args.nu, f=args.f, x=args.x)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_eval(args: argparse.Namespace) -> int:
    try:
        spec = _spec_from_args(args)
    except InvalidSumSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    bad = spec.violations(NEAR_VIOLATION_TOL)
    if bad:
        print(f"error: invalid parameters: {'; '.join(bad)}", file=sys.stderr)
        return 2
    tol = args.tol if args.tol is not None else DEFAULT_TOL
    max_terms = args.max_terms if args.max_terms is not None else DEFAULT_MAX_TERMS
    if args.method == "oracle":
        res = oracle_sum(spec, tol=tol, max_terms=max_terms)
        print(f"value = {res.value!r}")
        print("method = oracle")
        print(f"terms_used = {res.terms_used}")
        print(f"trunc_estimate = {res.trunc_estimate!r}")
        print(f"status = {res.status}")
    elif args.method == "lemma":
        value = lemma_sum(spec, tol=tol, max_terms=max_terms)
        print(f"value = {value!r}")
        print("method = lemma")
        print(f"tol = {tol!r}")
    else:
        value = closed_sum(spec, tol=tol, max_terms=max_terms)
        print(f"value = {value!r}")
        print(f"method = closed (dispatch: {closed_route(spec)})")
        print(f"tol = {tol!r}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        grid = _grid_from_args(args)
        grid.validate()
        records = run_verify(grid)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    body = render_records(records, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(body)
    else:
        sys.stdout.write(body)
    passed = sum(1 for r in records if r.status == STATUS_PASS)
    failed = sum(1 for r in records if r.status == STATUS_FAIL)
    skipped = sum(1 for r in records if r.status == STATUS_SKIPPED)
    for r in records:
        if r.status == STATUS_SKIPPED:
            s = r.spec
            print(f"skipped {s.variant} m={s.m} p={s.p} nu={s.nu!r} f={s.f!r} "
                  f"x={s.x!r}: {r.reason}")
        elif r.status == STATUS_FAIL and r.reason:
            s = r.spec
            print(f"failed {s.variant} m={s.m} p={s.p} nu={s.nu!r} f={s.f!r} "
                  f"x={s.x!r}: {r.reason}")
    print(f"passed/failed/skipped: {passed}/{failed}/{skipped}")
    return 1 if failed else 0


def render_records(records: list[VerifyRecord], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.as_dict() for r in records], indent=2) + "\n"
    lines = [CSV_HEADER]
    lines.extend(r.row() for r in records)
    return "\n".join(lines) + "\n"


TABLE_HEADER = "variant,m,p,nu,f,x,dispatch,closed,lemma"


def cmd_table(args: argparse.Namespace) -> int:
    try:
        grid = _grid_from_args(args)
        grid.validate()
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = [TABLE_HEADER]
    for spec in grid.points():
        bad = spec.violations(NEAR_VIOLATION_TOL)
        if bad:
            rows.append(",".join((spec.variant, str(spec.m), str(spec.p),
                                  repr(spec.nu), repr(spec.f), repr(spec.x),
                                  "-", "nan", "nan")))
            continue
        closed = closed_sum(spec, max_terms=grid.max_terms)
        lemma = lemma_sum(spec, max_terms=grid.max_terms)
        rows.append(",".join((spec.variant, str(spec.m), str(spec.p),
                              repr(spec.nu), repr(spec.f), repr(spec.x),
                              closed_route(spec), repr(closed), repr(lemma))))
    body = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(body)
    else:
        sys.stdout.write(body)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laguerre-sums",
        description="Evaluate and cross-check Laguerre series closed forms",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one parameter point")
    ev.add_argument("--m", type=int, required=True)
    ev.add_argument("--p", type=int, required=True)
    ev.add_argument("--sign-nu", choices=[PLUS, MINUS], default=PLUS)
    ev.add_argument("--sign-p", choices=[PLUS, MINUS], default=PLUS)
    ev.add_argument("--nu", type=float, required=True)
    ev.add_argument("--f", type=float, required=True)
    ev.add_argument("--x", type=float, required=True)
    ev.add_argument("--method", choices=["closed", "lemma", "oracle"],
                    default="closed")
    ev.add_argument("--tol", type=float, default=None,
                    help="series stopping tolerance (default 1e-14)")
    ev.add_argument("--max-terms", type=int, default=None)
    ev.set_defaults(func=cmd_eval)

    vf = sub.add_parser("verify", help="three-way comparison over a grid")
    vf.add_argument("--grid", help="grid config file (flat key = value)")
    vf.add_argument("--tol", type=float, default=None,
                    help="pass/fail relative tolerance (default 1e-9)")
    vf.add_argument("--max-terms", type=int, default=None)
    vf.add_argument("--out", help="output path (default stdout)")
    vf.add_argument("--format", choices=["csv", "json"], default="csv")
    vf.set_defaults(func=cmd_verify)

    tb = sub.add_parser("table", help="closed/lemma values over a grid")
    tb.add_argument("--grid", help="grid config file (flat key = value)")
    tb.add_argument("--tol", type=float, default=None)
    tb.add_argument("--max-terms", type=int, default=None)
    tb.add_argument("--out", help="output path (default stdout)")
    tb.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidSumSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
