"""Command-line surface for the package.

Subcommands
-----------

``classify``
    Existence check and parameter normalization for an angle set, with the
    analytic upper bound and the real-solution lower bound.
``spectrum``
    Real accessory values at a single figure-chart position.
``curve``
    Sweep the figure chart over a grid and write the real spectrum per
    sample as CSV (``a, degree, real_count, lambda_1..lambda_D``).
``nets``
    Combinatorial counts: maximal net types for ``(n, k)``, adjacent-corner
    class counts for corner orders, and chain counts (``aa``, ``ab``).
``verify``
    Certificate verification at one position: divisibility of every
    certificate construction by the minimal one (exact data), residuals of
    all constructions per root, and the critical-point identity of the
    assembled developing pair.

Angles and moduli are accepted as exact fractions (``p/q``) or decimals;
decimal input restricts the run to the double model.  Exit codes: 0 on
success, 2 on invalid input, 3 on internal inconsistency (a computed
result violating its own bounds or certificates).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from sphquad import developing as DV
from sphquad import nets as NT
from sphquad import params as PM
from sphquad import polys as P
from sphquad import spectra as SP
from sphquad.heun import min_cert_poly
from sphquad.params import AngleSet, CornerOrders, NormalizedParams, Scalar

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_INTERNAL = 3

#: default cap on brute-force enumeration sizes (per parameter)
DEFAULT_ENUM_CAP = 12


class InvalidInput(ValueError):
    """Raised for malformed command-line values (exit code 2)."""


class InternalInconsistency(RuntimeError):
    """Raised when a computed result contradicts its own bounds (exit 3)."""


# ---------------------------------------------------------------------------
# Input parsing
# ---------------------------------------------------------------------------

def parse_scalar(text: str) -> Scalar:
    """Parse ``p/q`` as an exact fraction, an integer literal as ``int``,
    and anything else as a decimal ``float`` (double model only)."""
    token = text.strip()
    if not token:
        raise InvalidInput("empty numeric token")
    try:
        if "/" in token:
            value = Fraction(token)
            return int(value) if value.denominator == 1 else value
        if token.lstrip("+-").isdigit():
            return int(token)
        return float(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"cannot parse number {token!r}: {exc}") from exc


def parse_angles(text: str) -> AngleSet:
    parts = text.split(",")
    if len(parts) != 4:
        raise InvalidInput("expected four comma-separated angles")
    values = [parse_scalar(p) for p in parts]
    try:
        return AngleSet(*values)
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc


def parse_orders(text: str) -> CornerOrders:
    parts = text.split(",")
    if len(parts) != 4:
        raise InvalidInput("expected four comma-separated corner orders")
    try:
        return CornerOrders(*[int(p) for p in parts])
    except ValueError as exc:
        raise InvalidInput(str(exc)) from exc


def scalar_json(x: Scalar):
    """JSON encoding that keeps exact values exact: fractions become
    ``"p/q"`` strings, everything else passes through."""
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    return x


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation.

    ``grid`` is ``(min, max, steps)`` in the figure chart and must satisfy
    ``0 < min < max < 1`` with at least two steps; ``model`` is ``double``
    or ``rational`` (exact arithmetic, requires exact inputs)."""

    command: str
    angles: AngleSet | None = None
    orders: CornerOrders | None = None
    a: Scalar | None = None
    grid: tuple[Scalar, Scalar, int] | None = None
    model: str = "double"
    out: str | None = None
    cap: int = DEFAULT_ENUM_CAP
    threads: int | None = None
    lam: Scalar | None = None
    total: int | None = None
    nk: tuple[int, int] | None = None

    def __post_init__(self):
        if self.model not in ("double", "rational"):
            raise InvalidInput(f"unknown scalar model {self.model!r}")
        if self.grid is not None:
            amin, amax, steps = self.grid
            if not (0 < amin < amax < 1):
                raise InvalidInput("grid must satisfy 0 < min < max < 1")
            if steps < 2:
                raise InvalidInput("grid needs at least 2 steps")
        if self.cap < 1:
            raise InvalidInput("enumeration cap must be positive")

    @property
    def library_model(self) -> str:
        return "exact" if self.model == "rational" else "double"


def _require_exact_for_rational(cfg: RunConfig, *values) -> None:
    if cfg.model == "rational":
        bad = [v for v in values if v is not None and not PM.is_exact(v)]
        if bad:
            raise InvalidInput(
                "the rational model needs exact inputs; got decimals "
                f"{bad!r} (write them as p/q)"
            )


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_classify(cfg: RunConfig) -> dict:
    angles = cfg.angles
    result = PM.existence_check(angles)
    report = {
        "angles": [scalar_json(a) for a in angles.as_tuple()],
        "exists": result.exists,
    }
    if not result.exists:
        return report
    prm = PM.normalize(angles)
    report.update(
        case=prm.case.value,
        m=prm.m,
        n=prm.n,
        kappa=prm.kappa,
        sigma=scalar_json(prm.sigma),
        upper=PM.upper_bound(prm),
        lower=PM.real_lower_bound(angles),
    )
    return report


def params_from_report(report: dict) -> NormalizedParams:
    """Rebuild the normalized parameters from a ``classify`` report."""
    if not report.get("exists"):
        raise InvalidInput("report describes a non-existent metric")
    sigma = report["sigma"]
    if isinstance(sigma, str):
        sigma = Fraction(sigma)
    return NormalizedParams(
        m=report["m"],
        n=report["n"],
        kappa=report["kappa"],
        sigma=sigma,
        case=PM.CaseTag(report["case"]),
    )


def cmd_spectrum(cfg: RunConfig) -> dict:
    _require_exact_for_rational(cfg, cfg.a, *cfg.angles.as_tuple())
    prm = PM.normalize(cfg.angles)
    t = SP.figure_to_band(cfg.a)
    rep = SP.solve_lambda(prm, t, cfg.library_model)
    count = SP.count_real(prm, t, cfg.library_model)
    report = {
        "a": float(cfg.a),
        "t": float(t),
        "model": rep.model,
        "degree": rep.degree,
        "real_count": rep.real_count,
        "nonreal_pairs": rep.nonreal_pairs,
        "lambda_real": list(rep.lam_real),
        "simple": rep.simple,
        "lower": count.lower,
        "upper": count.upper,
        "within_bounds": count.within_bounds,
    }
    if not count.within_bounds:
        raise InternalInconsistency(
            f"real count {rep.real_count} outside [{count.lower}, {count.upper}] "
            f"at a={cfg.a}: " + json.dumps(report)
        )
    return report


def _figure_grid(cfg: RunConfig) -> list[Scalar]:
    amin, amax, steps = cfg.grid
    span = amax - amin
    return [amin + span * Fraction(i, steps - 1) for i in range(steps)]


def cmd_curve(cfg: RunConfig) -> dict:
    _require_exact_for_rational(cfg, *cfg.grid[:2], *cfg.angles.as_tuple())
    if cfg.out is None:
        raise InvalidInput("curve requires --out PATH for the CSV")
    prm = PM.normalize(cfg.angles)
    samples = SP.curve_trace(
        prm, _figure_grid(cfg), model=cfg.library_model, threads=cfg.threads
    )
    with open(cfg.out, "w", encoding="ascii", newline="") as fh:
        SP.write_curve_csv(samples, fh)
    failed = sum(1 for s in samples if not s.ok)
    return {
        "out": cfg.out,
        "samples": len(samples),
        "failed": failed,
        "degree": samples[0].degree,
        "real_counts": sorted({s.real_count for s in samples if s.ok}),
    }


def cmd_nets(cfg: RunConfig) -> dict:
    if cfg.nk is not None:
        n, k = cfg.nk
        report = {"n": n, "k": k, "count": NT.count_maximal(n, k)}
        if n <= cfg.cap:
            types = NT.enumerate_maximal_types(n, k) if report["count"] else []
            report["types"] = [t.to_json_dict() for t in types]
        else:
            report["types"] = None
            report["capped"] = True
        return report
    orders = cfg.orders
    report = {"orders": list(orders.as_tuple())}
    if cfg.command == "nets-adjacent":
        same_vertex = sum(orders.as_tuple()) % 2 == 1
        report["same_vertex"] = same_vertex
        try:
            report["count"] = NT.count_adjacent(orders, same_vertex=same_vertex)
            report["realizable"] = True
        except PM.NotRealizable as exc:
            report.update(count=0, realizable=False, reason=str(exc))
        report["classes"] = [list(row) for row in
                             NT.enumerate_quad_classes_adjacent(orders)]
        return report
    # chain counts
    report["aa"] = NT.count_aa_chains(orders)
    report["aa_classes"] = [c.to_json_dict() for c in NT.enumerate_aa_classes(orders)]
    if cfg.total is not None:
        try:
            report["total"] = cfg.total
            report["ab"] = NT.count_ab_chains(orders, cfg.total)
        except NT.NegativeCount as exc:
            raise InvalidInput(str(exc)) from exc
    return report


def cmd_chains(cfg: RunConfig) -> dict:
    """Chain counts derived from an angle set, cross-checked against the
    analytic solution counts."""
    angles = cfg.angles
    prm = PM.normalize(angles)
    orders = PM.chain_orders(angles)
    total = PM.upper_bound(prm)
    aa = NT.count_aa_chains(orders)
    ab = NT.count_ab_chains(orders, total)
    lower = PM.real_lower_bound(angles)
    report = {
        "angles": [scalar_json(a) for a in angles.as_tuple()],
        "orders": list(orders.as_tuple()),
        "total": total,
        "aa": aa,
        "ab": ab,
        "analytic_lower": lower,
        "consistent": ab == lower,
    }
    if ab != lower:
        raise InternalInconsistency(
            "chain count disagrees with the analytic lower bound: "
            + json.dumps(report)
        )
    return report


def cmd_verify(cfg: RunConfig) -> dict:
    _require_exact_for_rational(cfg, cfg.a, cfg.lam, *cfg.angles.as_tuple())
    prm = PM.normalize(cfg.angles)
    seated = PM.denormalize(prm)
    t = SP.figure_to_band(cfg.a)
    exact_data = prm.exact and PM.is_exact(t)
    report = {
        "a": float(cfg.a),
        "t": float(t),
        "model": cfg.model,
        "seated_angles": [scalar_json(a) for a in seated.as_tuple()],
    }
    if exact_data:
        div = SP.verify_unitary(prm, t)
        report["divisibility"] = {"residuals": div.residuals, "ok": div.ok}
        if not div.ok:
            raise InternalInconsistency(
                "a certificate construction is not divisible by the minimal "
                "certificate: " + json.dumps(report)
            )
    supplied = cfg.lam is not None
    if supplied:
        lams: list[Scalar] = [cfg.lam]
    else:
        rep = SP.solve_lambda(prm, t, cfg.library_model)
        lams = list(rep.lam_real)
        if exact_data:
            # recover exactly-rational roots so their certificates can run
            # in exact arithmetic (residuals exactly zero)
            coeffs = list(min_cert_poly(prm, t).coeffs)
            upgraded = []
            for lam in lams:
                cand = Fraction(lam).limit_denominator(10**9)
                upgraded.append(cand if P.peval(coeffs, cand) == 0 else lam)
            lams = upgraded
    roots = []
    all_ok = True
    for lam in lams:
        entry = {"lambda": float(lam), "exact": PM.is_exact(lam) and exact_data}
        numeric = SP.verify_unitary(prm, t, lam=float(lam))
        entry["residuals"] = numeric.residuals
        entry["certificates_ok"] = numeric.ok
        lam_used = lam if entry["exact"] else float(lam)
        t_used = t if entry["exact"] else float(t)
        try:
            pair = DV.assemble_developing_pair(prm, t_used, lam_used)
            wr = DV.wronskian_verify(pair, t_used, seated)
            entry["wronskian"] = {
                "residual": float(wr.residual_norm),
                "ok": wr.ok,
            }
            entry["exponents_ok"] = DV.exponent_system_ok(pair, seated)
            ok = numeric.ok and wr.ok and entry["exponents_ok"]
        except ValueError as exc:
            entry["wronskian"] = None
            entry["error"] = f"{type(exc).__name__}: {exc}"
            ok = False
        entry["ok"] = ok
        all_ok = all_ok and ok
        roots.append(entry)
    report["roots"] = roots
    report["ok"] = all_ok
    if not all_ok and not supplied:
        raise InternalInconsistency(
            "a computed root failed its own certificate: " + json.dumps(report)
        )
    return report


# ---------------------------------------------------------------------------
# Argument wiring
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="sphquad",
        description="spherical quadrilaterals with two integer angles",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_angles(p):
        p.add_argument(
            "--alpha", required=True, metavar="A0,A1,A2,A3",
            help="four angles; fractions p/q stay exact, decimals force "
                 "the double model",
        )

    def add_model(p):
        p.add_argument(
            "--model", choices=("double", "rational"), default="double",
            help="scalar model (rational requires exact inputs)",
        )

    p = sub.add_parser("classify", help="existence, case, bounds")
    add_angles(p)

    p = sub.add_parser("spectrum", help="real accessory values at one position")
    add_angles(p)
    add_model(p)
    p.add_argument("--a", required=True, help="figure-chart position")

    p = sub.add_parser("curve", help="sweep a grid and write the curve CSV")
    add_angles(p)
    add_model(p)
    p.add_argument("--a-min", required=True, help="grid start (exclusive of 0)")
    p.add_argument("--a-max", required=True, help="grid end (exclusive of 1)")
    p.add_argument("--steps", type=int, required=True, help="grid size (>= 2)")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--threads", type=int, default=None,
                   help="sweep pool size (default: HEUN_THREADS or machine)")

    p = sub.add_parser("nets", help="net-type and chain counts")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--max-types", nargs=2, type=int, metavar=("N", "K"),
                       help="count and list maximal types")
    group.add_argument("--adjacent", metavar="A0,A1,A2,A3",
                       help="adjacent-corner class count for corner orders")
    group.add_argument("--aa", metavar="A0,A1,A2,A3",
                       help="aa-chain count for corner orders")
    group.add_argument("--chains", metavar="ANGLES",
                       help="chain counts derived from an angle set")
    p.add_argument("--total", type=int, default=None,
                   help="with --aa: total class count, reports ab = total - 2*aa")
    p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                   help=f"enumeration size cap (default {DEFAULT_ENUM_CAP})")

    p = sub.add_parser("verify", help="certificate checks at one position")
    add_angles(p)
    add_model(p)
    p.add_argument("--a", required=True, help="figure-chart position")
    p.add_argument("--lam", default=None,
                   help="check this accessory value instead of computed roots")

    return top


def _config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.command == "classify":
        return RunConfig(command="classify", angles=parse_angles(ns.alpha))
    if ns.command == "spectrum":
        return RunConfig(
            command="spectrum", angles=parse_angles(ns.alpha),
            a=parse_scalar(ns.a), model=ns.model,
        )
    if ns.command == "curve":
        return RunConfig(
            command="curve", angles=parse_angles(ns.alpha), model=ns.model,
            grid=(parse_scalar(ns.a_min), parse_scalar(ns.a_max), ns.steps),
            out=ns.out, threads=ns.threads,
        )
    if ns.command == "nets":
        if ns.max_types is not None:
            return RunConfig(command="nets-types", nk=tuple(ns.max_types),
                             cap=ns.cap)
        if ns.adjacent is not None:
            return RunConfig(command="nets-adjacent",
                             orders=parse_orders(ns.adjacent), cap=ns.cap)
        if ns.aa is not None:
            return RunConfig(command="nets-aa", orders=parse_orders(ns.aa),
                             total=ns.total, cap=ns.cap)
        return RunConfig(command="nets-chains", angles=parse_angles(ns.chains),
                         cap=ns.cap)
    if ns.command == "verify":
        return RunConfig(
            command="verify", angles=parse_angles(ns.alpha),
            a=parse_scalar(ns.a), model=ns.model,
            lam=None if ns.lam is None else parse_scalar(ns.lam),
        )
    raise InvalidInput(f"unknown command {ns.command!r}")


_DISPATCH = {
    "classify": cmd_classify,
    "spectrum": cmd_spectrum,
    "curve": cmd_curve,
    "nets-types": cmd_nets,
    "nets-adjacent": cmd_nets,
    "nets-aa": cmd_nets,
    "nets-chains": cmd_chains,
    "verify": cmd_verify,
}


def run(argv: list[str]) -> tuple[dict, int]:
    """Parse ``argv``, run the command, and return (report, exit code).

    Input errors produce an ``error`` report with exit code 2; detected
    internal inconsistencies exit 3.  The report is JSON-serializable and
    deterministic for a fixed configuration.
    """
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_INVALID_INPUT
        if code == 0:
            return {}, EXIT_OK
        return {"error": {"type": "usage", "message": "bad arguments"}}, \
            EXIT_INVALID_INPUT
    try:
        cfg = _config_from_args(ns)
        report = _DISPATCH[cfg.command](cfg)
        return report, EXIT_OK
    except (InvalidInput, PM.InvalidAngles, PM.NotRealizable,
            SP.DegenerateModulus, OSError) as exc:
        return {"error": {"type": type(exc).__name__, "message": str(exc)}}, \
            EXIT_INVALID_INPUT
    except InternalInconsistency as exc:
        return {"error": {"type": "InternalInconsistency",
                          "message": str(exc)}}, EXIT_INTERNAL
    except Exception as exc:  # genuine bug: surface it loudly but machine-readably
        return {"error": {"type": type(exc).__name__, "message": str(exc)}}, \
            EXIT_INTERNAL


def main(argv: list[str] | None = None) -> int:
    report, code = run(sys.argv[1:] if argv is None else argv)
    if report:
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    raise SystemExit(main())
