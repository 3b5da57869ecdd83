"""Command-line interface.

Subcommands
-----------
points       write a deterministic grid as CSV (j,y1,...,yd)
fit          least-squares fit of tabulated values on tabulated points
cond-study   Gram condition number vs order q (CSV: q,N,m,M,cond_A)
conv-study   discrete L2 error vs order q    (CSV: q,N,m,M,l2_error)
equidist     box-counting vs the product arcsine measure
check-bounds run the Gram-bound / spectral-gap / exponential-sum suites

Exit codes: 0 success, 2 invalid arguments or malformed input, 3 numerical
failure (singular system), 4 I/O error.

Every output CSV starts with `# key=value` comment lines echoing the full
resolved configuration, enough to re-run the command.  Floats are written as
shortest round-trip decimals.  Study cells run in deterministic (q,
repetition) order; Monte Carlo cells draw their points from PCG64 seeded with
SeedSequence([seed, q, rep]), and weil grids force repetitions=1.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from . import diagnostics, targets
from .indexsets import build_index_set
from .lstsq import (SingularSystemError, UNIT_WEIGHTS, WeightScheme,
                    compute_weights, solve)
from .pointgen import (arcsine_box_measure, equidist_box_fraction, is_prime,
                       mc_sample, nearest_prime, weil_exponential_sum,
                       weil_grid, write_points_csv)
from .polybasis import BasisSpec, basis_matrix

GRIDS = ("weil", "mc_chebyshev", "mc_uniform")
SCALINGS = ("linear", "quadratic")


# ---------------------------------------------------------------------------
# study configuration

@dataclass
class StudyConfig:
    space: str = "TD"
    d: int = 2
    q_min: int = 1
    q_max: int = 10
    scaling: str = "quadratic"
    c: float = 0.5
    family: str = "chebyshev"
    normalization: str = "orthonormal"
    weights: str = "unit"
    target_density: str = "uniform"
    grid: str = "weil"
    repetitions: int = 100
    seed: int = 0
    target: str = "expsum"
    coeffs: str = ""        # comma-separated floats; empty = published set
    coeff_seed: int = -1    # -1 = unset
    n_test: int = 2000

    def __post_init__(self):
        if self.space not in ("TP", "TD"):
            raise ValueError(f"unknown space {self.space!r}")
        if self.scaling not in SCALINGS:
            raise ValueError(f"unknown scaling {self.scaling!r}")
        if self.grid not in GRIDS:
            raise ValueError(f"unknown grid {self.grid!r}")
        if self.q_min < 0 or self.q_max < self.q_min:
            raise ValueError(f"bad q range [{self.q_min}, {self.q_max}]")
        if self.c <= 0:
            raise ValueError(f"scaling constant c must be positive, got {self.c}")
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.grid == "weil":
            self.repetitions = 1  # deterministic grid: averaging is a no-op

    def basis_spec(self) -> BasisSpec:
        return BasisSpec(self.family, self.normalization)

    def weight_scheme(self) -> WeightScheme:
        if self.weights == "unit":
            return UNIT_WEIGHTS
        return WeightScheme("density_ratio", self.target_density)

    def target_coeffs(self):
        if self.coeffs:
            return tuple(float(t) for t in self.coeffs.split(","))
        seed = None if self.coeff_seed < 0 else self.coeff_seed
        return targets.coefficients(self.target, self.d, seed)

    def echo_lines(self):
        out = []
        for f in fields(self):
            v = getattr(self, f.name)
            out.append(f"{f.name}={v}")
        return out


def _coerce(text, typ):
    if typ is int:
        return int(text)
    if typ is float:
        return float(text)
    return text


def load_config(path) -> dict:
    """Parse a flat key=value config file ('#' starts a comment)."""
    known = {f.name: f.type for f in fields(StudyConfig)}
    typemap = {"int": int, "float": float, "str": str}
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, val = (t.strip() for t in line.split("=", 1))
            if key not in known:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            values[key] = _coerce(val, typemap.get(str(known[key]), str))
    return values


def resolve_config(args) -> StudyConfig:
    """Config file first, then explicit command-line overrides."""
    values = {}
    if getattr(args, "config", None):
        values.update(load_config(args.config))
    for f in fields(StudyConfig):
        v = getattr(args, f.name, None)
        if v is not None:
            values[f.name] = v
    return StudyConfig(**values)


# ---------------------------------------------------------------------------
# study cells

def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def realize_cell(cfg: StudyConfig, q: int):
    """(index_set, N, m, M) for one study cell.

    m_target = round(c*N) or round(c*N^2); M = nearest_prime(2*m_target - 1);
    m = floor(M/2)+1.  The same prime rule fixes the point count for Monte
    Carlo cells so weil and MC rows are comparable at equal m.
    """
    index_set = build_index_set(cfg.space, q, cfg.d)
    N = index_set.N
    size = N * N if cfg.scaling == "quadratic" else N
    m_target = max(1, _round_half_up(cfg.c * size))
    M = nearest_prime(max(2, 2 * m_target - 1))
    m = M // 2 + 1
    return index_set, N, m, M


def _cell_points(cfg: StudyConfig, q: int, m: int, M: int, rep: int):
    if cfg.grid == "weil":
        return weil_grid(M, cfg.d)
    seed = int(np.random.SeedSequence([cfg.seed, q, rep]).generate_state(1)[0])
    measure = "chebyshev" if cfg.grid == "mc_chebyshev" else "uniform"
    return mc_sample(measure, m, cfg.d, seed)


def _cond_A(pts, index_set, spec, scheme) -> float:
    D = basis_matrix(spec, index_set, pts)
    w = compute_weights(scheme, pts)
    s = np.linalg.svd(D * np.sqrt(w)[:, None], compute_uv=False)
    if s.size < len(index_set.indices) or s[-1] <= 0.0:
        return float("inf")
    c = float(s[0] / s[-1])
    return c * c


def _open_out(path):
    try:
        return open(path, "w", newline="")
    except OSError:
        raise


def _write_study_csv(path, cfg, colname, rows, rep_lines):
    with _open_out(path) as fh:
        for line in cfg.echo_lines():
            fh.write(f"# {line}\n")
        for line in rep_lines:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(["q", "N", "m", "M", colname])
        for q, N, m, M, val in rows:
            assert is_prime(M) and m == M // 2 + 1  # emit-time bookkeeping check
            writer.writerow([q, N, m, M, repr(float(val)) if np.isfinite(val) else "inf"])


def cmd_points(args) -> int:
    M = nearest_prime(args.M)
    grid = weil_grid(M, args.d)
    write_points_csv(grid, args.out,
                     header_comments=[f"M={M}", f"M_target={args.M}", f"d={args.d}"])
    print(f"M={M}")
    print(f"wrote {grid.n_points} points to {args.out}")
    return 0


def _read_points_csv(path):
    rows = []
    d = None
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split(",")
            if parts[0] == "j":
                d = len(parts) - 1
                continue
            try:
                rows.append([float(v) for v in parts[1:]])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: malformed point row {raw.strip()!r}")
            if d is not None and len(rows[-1]) != d:
                raise ValueError(f"{path}:{lineno}: expected {d} coordinates")
    if not rows:
        raise ValueError(f"{path}: no point rows found")
    return np.asarray(rows)


def _read_values_csv(path):
    vals = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line in ("f", "value", "values"):
                continue
            try:
                vals.append(float(line.split(",")[0]))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: malformed value row {raw.strip()!r}")
    if not vals:
        raise ValueError(f"{path}: no value rows found")
    return np.asarray(vals)


def cmd_fit(args) -> int:
    pts = _read_points_csv(args.points)
    fvals = _read_values_csv(args.values)
    if len(fvals) != pts.shape[0]:
        raise ValueError(
            f"row count mismatch: {pts.shape[0]} points in {args.points} but "
            f"{len(fvals)} values in {args.values}"
        )
    index_set = build_index_set(args.space, args.q, pts.shape[1])
    spec = BasisSpec(args.family, args.normalization)
    scheme = (UNIT_WEIGHTS if args.weights == "unit"
              else WeightScheme("density_ratio", args.target_density))
    fit = solve(pts, fvals, index_set, spec, scheme)
    rep = fit.condition_report
    with _open_out(args.out) as fh:
        for line in [f"space={args.space}", f"q={args.q}", f"d={pts.shape[1]}",
                     f"family={args.family}", f"normalization={args.normalization}",
                     f"weights={args.weights}", f"target_density={args.target_density}",
                     f"n_points={pts.shape[0]}", f"N={index_set.N}",
                     f"cond_D={repr(rep.cond_D)}", f"cond_A={repr(rep.cond_A)}",
                     f"residual_norm={repr(fit.residual_norm)}"]:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(["index", "coefficient"])
        for n, coef in zip(index_set.indices, fit.coefficients):
            writer.writerow(["(" + ",".join(str(c) for c in n) + ")", repr(float(coef))])
    print(f"N={index_set.N} cond_D={rep.cond_D:.6e} cond_A={rep.cond_A:.6e} "
          f"residual={fit.residual_norm:.6e}")
    return 0


def cmd_cond_study(args) -> int:
    cfg = resolve_config(args)
    spec, scheme = cfg.basis_spec(), cfg.weight_scheme()
    rows, rep_lines = [], []
    for q in range(cfg.q_min, cfg.q_max + 1):
        index_set, N, m, M = realize_cell(cfg, q)
        vals = []
        for rep in range(cfg.repetitions):
            pts = _cell_points(cfg, q, m, M, rep)
            vals.append(_cond_A(pts, index_set, spec, scheme))
            if cfg.repetitions > 1:
                rep_lines.append(f"rep q={q} rep={rep} cond_A={repr(vals[-1])}")
        rows.append((q, N, m, M, float(np.mean(vals))))
    _write_study_csv(args.out, cfg, "cond_A", rows, rep_lines)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_conv_study(args) -> int:
    cfg = resolve_config(args)
    spec, scheme = cfg.basis_spec(), cfg.weight_scheme()
    coeffs = cfg.target_coeffs()
    f = targets.make(cfg.target, coeffs)
    rows, rep_lines = [], []
    rep_lines.append("target_coeffs=" + ",".join(repr(float(v)) for v in coeffs))
    for q in range(cfg.q_min, cfg.q_max + 1):
        index_set, N, m, M = realize_cell(cfg, q)
        vals = []
        for rep in range(cfg.repetitions):
            pts = _cell_points(cfg, q, m, M, rep)
            try:
                fit = solve(pts, f(pts), index_set, spec, scheme)
                err = diagnostics.l2_error(fit, f, cfg.n_test, seed=cfg.seed,
                                           scaling=cfg.scaling, c=cfg.c).l2_error
            except SingularSystemError:
                err = float("inf")
            vals.append(err)
            if cfg.repetitions > 1:
                rep_lines.append(f"rep q={q} rep={rep} l2_error={repr(vals[-1])}")
        rows.append((q, N, m, M, float(np.mean(vals))))
    _write_study_csv(args.out, cfg, "l2_error", rows, rep_lines)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def parse_boxes(text: str, d: int):
    """Boxes: ';' between boxes, 'x' between coordinates, 'a:b' per interval,
    e.g. '0:0.5x0:0.5;-1:0x-1:1'."""
    boxes = []
    for token in text.split(";"):
        token = token.strip()
        if not token:
            continue
        intervals = []
        for part in token.split("x"):
            pieces = part.split(":")
            if len(pieces) != 2:
                raise ValueError(f"malformed interval {part!r} in box {token!r}")
            intervals.append((float(pieces[0]), float(pieces[1])))
        if len(intervals) != d:
            raise ValueError(f"box {token!r} has {len(intervals)} intervals; expected {d}")
        boxes.append((token, intervals))
    if not boxes:
        raise ValueError("no boxes given")
    return boxes


def cmd_equidist(args) -> int:
    M = nearest_prime(args.M)
    grid = weil_grid(M, args.d)
    boxes = parse_boxes(args.boxes, args.d)
    with _open_out(args.out) as fh:
        for line in [f"M={M}", f"M_target={args.M}", f"d={args.d}", f"boxes={args.boxes}"]:
            fh.write(f"# {line}\n")
        writer = csv.writer(fh)
        writer.writerow(["box", "observed_fraction", "arcsine_measure", "abs_deviation"])
        for token, box in boxes:
            frac = equidist_box_fraction(grid, box)
            meas = arcsine_box_measure(box)
            writer.writerow([token, repr(frac), repr(meas), repr(abs(frac - meas))])
    print(f"M={M}")
    print(f"wrote {len(boxes)} rows to {args.out}")
    return 0


def cmd_check_bounds(args) -> int:
    ds = [int(t) for t in args.dims.split(",")]
    qs = [int(t) for t in args.orders.split(",")]
    reports = []
    for d in ds:
        for q in qs:
            first = 2 * q + 2  # smallest prime beyond the bound hypothesis
            while not is_prime(first):
                first += 1
            index_set = build_index_set("TD", q, d)
            for M in sorted({first, 97, 997}):
                reports.append(diagnostics.check_gram_bounds(M, index_set, restrict_nonzero=True))
    diagnostics.write_gram_reports_csv(
        reports, args.out,
        header_comments=[f"dims={args.dims}", f"orders={args.orders}", "basis=chebyshev/classical", "weights=unit"],
    )
    n_fail = sum(1 for r in reports if not r.passed)
    for r in reports:
        if r.passed:
            status = "pass"
        else:
            parts = [name for name, ok in
                     [("offdiag", r.offdiag_pass), ("diag", r.diag_pass)] if not ok]
            status = "FAIL(" + ",".join(parts) + ")"
        print(f"gram-bounds d={r.d} q={r.q} M={r.M}: {status} "
              f"(max_offdiag={r.max_offdiag_abs:.4f} bound={r.offdiag_bound:.4f} "
              f"diag=[{r.diag_min:.4f},{r.diag_max:.4f}] "
              f"target=[{r.diag_bounds[0]:.4f},{r.diag_bounds[1]:.4f}])")

    gap1 = diagnostics.spectral_gap(67, [(1,), (2,)])
    gap2 = diagnostics.spectral_gap(4099, [(1, 1), (1, 2), (2, 1), (2, 2)])
    ok1, ok2 = gap1 <= 0.5, gap2 <= 0.5
    print(f"spectral-gap d=1 M=67: {gap1:.6f} {'pass' if ok1 else 'FAIL'}")
    print(f"spectral-gap d=2 M=4099: {gap2:.6f} {'pass' if ok2 else 'FAIL'}")

    rng = np.random.Generator(np.random.PCG64(args.seed if args.seed is not None else 0))
    n_sum_fail = 0
    for _ in range(48):
        M = int(rng.choice([101, 499, 997, 2309, 10007]))
        deg = int(rng.integers(1, 7))
        coeffs = rng.integers(-10, 11, deg)
        while all(int(c) % M == 0 for c in coeffs):
            coeffs = rng.integers(-10, 11, deg)
        s = weil_exponential_sum([int(c) for c in coeffs], M)
        if abs(s) > (deg - 1) * math.sqrt(M) + 1e-9:
            n_sum_fail += 1
    print(f"exponential-sum bound, 48 draws: {'pass' if n_sum_fail == 0 else 'FAIL'}")

    n_fail += (not ok1) + (not ok2) + n_sum_fail
    print(f"wrote {len(reports)} rows to {args.out}")
    if args.strict and n_fail:
        print(f"{n_fail} check(s) failed", file=sys.stderr)
        return 3
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_study_flags(p):
    p.add_argument("--config", help="flat key=value config file")
    p.add_argument("--space", choices=["TP", "TD"])
    p.add_argument("--d", type=int, dest="d")
    p.add_argument("--q-min", type=int, dest="q_min")
    p.add_argument("--q-max", type=int, dest="q_max")
    p.add_argument("--scaling", choices=list(SCALINGS))
    p.add_argument("--c", type=float, dest="c")
    p.add_argument("--family", choices=["chebyshev", "legendre"])
    p.add_argument("--normalization", choices=["classical", "orthonormal"])
    p.add_argument("--weights", choices=["unit", "density_ratio"])
    p.add_argument("--target-density", choices=["uniform", "chebyshev"], dest="target_density")
    p.add_argument("--grid", choices=list(GRIDS))
    p.add_argument("--repetitions", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--target", choices=list(targets.TARGET_NAMES))
    p.add_argument("--coeffs", help="comma-separated target coefficients")
    p.add_argument("--coeff-seed", type=int, dest="coeff_seed")
    p.add_argument("--n-test", type=int, dest="n_test")
    p.add_argument("--out", required=True)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="weilfit",
        description="Least-squares polynomial approximation on deterministic "
                    "prime-residue (Weil-type) collocation grids.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", help="write a deterministic grid as CSV")
    p.add_argument("--M", type=int, required=True, help="target modulus (nearest prime is used)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("fit", help="least-squares fit of tabulated values")
    p.add_argument("--points", required=True, help="CSV from the points subcommand")
    p.add_argument("--values", required=True, help="CSV/text with one value per point row")
    p.add_argument("--space", choices=["TP", "TD"], default="TD")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--family", choices=["chebyshev", "legendre"], default="chebyshev")
    p.add_argument("--normalization", choices=["classical", "orthonormal"],
                   default="orthonormal")
    p.add_argument("--weights", choices=["unit", "density_ratio"], default="unit")
    p.add_argument("--target-density", choices=["uniform", "chebyshev"],
                   dest="target_density", default="uniform")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("cond-study", help="condition number vs order")
    _add_study_flags(p)
    p.set_defaults(func=cmd_cond_study)

    p = sub.add_parser("conv-study", help="discrete L2 error vs order")
    _add_study_flags(p)
    p.set_defaults(func=cmd_conv_study)

    p = sub.add_parser("equidist", help="box counts vs the arcsine measure")
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--boxes", required=True,
                   help="';'-separated boxes, 'x'-separated 'a:b' intervals")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_equidist)

    p = sub.add_parser("check-bounds", help="run the diagnostic bound suites")
    p.add_argument("--dims", default="1,2,3", help="comma-separated dimensions")
    p.add_argument("--orders", default="1,2,3", help="comma-separated orders q")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true",
                   help="exit 3 if any check fails")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_check_bounds)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except SingularSystemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
