"""Command-line surface.

Commands: basis-table, verify <suite>, reconstruct, poisson, lp-check,
lattice-density, classical.  Exit codes: 0 all checks passed, 1 a check
failed, 2 usage error, 3 numerical failure.  Reports are machine-readable
(CSV or JSON); every reported number carries the tolerance it was checked
against, and output files are byte-deterministic for a fixed configuration.

Configuration precedence: command-line flags > config file (--config, a flat
``key = value`` text file) > built-in defaults.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, replace
from typing import Optional, Sequence

import numpy as np

from . import basis, classical, kernels, lattices, modular, transforms
from ._quad import QuadratureError

USAGE_ERROR = 2
NUMERICAL_ERROR = 3


@dataclass(frozen=True)
class RunConfig:
    command: str = ""
    abs_tol: float = 1e-9
    abs_tol_given: bool = False
    truncation_N: int = 40
    max_n: int = 6
    x_grid: tuple[float, float, float] = (0.0, 2.5, 0.1)
    output_path: str = ""
    format: str = "csv"
    seed: int = 0
    fixture: str = ""
    lattice_file: str = ""

    def __post_init__(self) -> None:
        if self.x_grid[2] <= 0:
            raise ValueError("x-grid step must be positive")
        if self.abs_tol <= 0:
            raise ValueError("abs-tol must be positive")
        if self.format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.format!r}")


_CONFIG_KEYS = {
    "abs_tol": float,
    "truncation_N": int,
    "max_n": int,
    "x_grid": str,
    "out": str,
    "format": str,
    "seed": int,
    "fixture": str,
    "lattice_file": str,
}


def _parse_x_grid(text: str) -> tuple[float, float, float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"x-grid must be start:stop:step, got {text!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0:
        raise ValueError("x-grid step must be positive")
    return (start, stop, step)


def load_config_file(path: str) -> dict:
    """Flat key = value lines; '#' starts a comment; keys match the long
    option names with underscores."""
    out: dict = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key = value")
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            value = value.strip()
            if key == "truncation_n":
                key = "truncation_N"
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown key {key!r}")
            out[key] = _CONFIG_KEYS[key](value)
    return out


def build_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if getattr(args, "config", None):
        filecfg = load_config_file(args.config)
        if "abs_tol" in filecfg:
            cfg = replace(cfg, abs_tol=filecfg["abs_tol"], abs_tol_given=True)
        if "truncation_N" in filecfg:
            cfg = replace(cfg, truncation_N=filecfg["truncation_N"])
        if "max_n" in filecfg:
            cfg = replace(cfg, max_n=filecfg["max_n"])
        if "x_grid" in filecfg:
            cfg = replace(cfg, x_grid=_parse_x_grid(filecfg["x_grid"]))
        if "out" in filecfg:
            cfg = replace(cfg, output_path=filecfg["out"])
        if "format" in filecfg:
            cfg = replace(cfg, format=filecfg["format"])
        if "seed" in filecfg:
            cfg = replace(cfg, seed=filecfg["seed"])
        if "fixture" in filecfg:
            cfg = replace(cfg, fixture=filecfg["fixture"])
        if "lattice_file" in filecfg:
            cfg = replace(cfg, lattice_file=filecfg["lattice_file"])
    if getattr(args, "abs_tol", None) is not None:
        cfg = replace(cfg, abs_tol=args.abs_tol, abs_tol_given=True)
    if getattr(args, "truncation_N", None) is not None:
        cfg = replace(cfg, truncation_N=args.truncation_N)
    if getattr(args, "max_n", None) is not None:
        cfg = replace(cfg, max_n=args.max_n)
    if getattr(args, "x_grid", None) is not None:
        cfg = replace(cfg, x_grid=_parse_x_grid(args.x_grid))
    if getattr(args, "out", None) is not None:
        cfg = replace(cfg, output_path=args.out)
    if getattr(args, "format", None) is not None:
        cfg = replace(cfg, format=args.format)
    if getattr(args, "seed", None) is not None:
        cfg = replace(cfg, seed=args.seed)
    if getattr(args, "fixture", None) is not None:
        cfg = replace(cfg, fixture=args.fixture)
    if getattr(args, "lattice_file", None) is not None:
        cfg = replace(cfg, lattice_file=args.lattice_file)
    return cfg


# ---------------------------------------------------------------------------
# report plumbing


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    threshold: float
    value: Optional[str] = None

    @property
    def passed(self) -> bool:
        return bool(self.residual < self.threshold)

    def as_dict(self) -> dict:
        d = {
            "name": self.name,
            "residual": float(self.residual),
            "threshold": float(self.threshold),
            "passed": self.passed,
        }
        if self.value is not None:
            d["value"] = self.value
        return d


def _write_text(cfg: RunConfig, text: str) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def emit_report(cfg: RunConfig, title: str, checks: Sequence[Check]) -> int:
    doc = {
        "report": title,
        "checks": [c.as_dict() for c in checks],
        "passed": all(c.passed for c in checks),
    }
    if cfg.format == "json":
        _write_text(cfg, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        lines = ["name,residual,threshold,passed"]
        for c in checks:
            lines.append(f"{c.name},{c.residual:.17g},{c.threshold:.17g},{c.passed}")
        _write_text(cfg, "\n".join(lines) + "\n")
    failing = [c for c in checks if not c.passed]
    if failing:
        print(
            f"FAIL {title}: {failing[0].name} residual "
            f"{failing[0].residual:.3e} >= {failing[0].threshold:.3e}",
            file=sys.stderr,
        )
        return 1
    return 0


def _grid_points(cfg: RunConfig) -> tuple[float, ...]:
    start, stop, step = cfg.x_grid
    return basis.default_x_grid(start, stop, step)


# ---------------------------------------------------------------------------
# verify suites


def _suite_theta(cfg: RunConfig) -> list[Check]:
    rng = np.random.default_rng(cfg.seed)
    res = {"theta_period": 0.0, "theta_inversion": 0.0, "lambda_inversion": 0.0, "J_inversion": 0.0}
    for _ in range(200):
        z = complex(rng.uniform(-2.0, 2.0), rng.uniform(0.2, 5.0))
        t = modular.theta3(z)
        res["theta_period"] = max(res["theta_period"], abs(modular.theta3(z + 2) - t) / abs(t))
        res["theta_inversion"] = max(
            res["theta_inversion"],
            abs(modular.theta3(-1.0 / z) - modular.sqrt_neg_iz(z) * t) / abs(t),
        )
        lam = modular.lambda_modular(z)
        res["lambda_inversion"] = max(
            res["lambda_inversion"],
            abs(modular.lambda_modular(-1.0 / z) - (1.0 - lam)) / max(1.0, abs(lam)),
        )
        jj = modular.hauptmodul_J(z)
        res["J_inversion"] = max(
            res["J_inversion"], abs(modular.hauptmodul_J(-1.0 / z) - jj) / max(1.0, abs(jj))
        )
    return [Check(k, v, 1e-10) for k, v in res.items()]


def _sample_kernel_points(rng, count: int):
    pts = []
    while len(pts) < count:
        tau = complex(rng.uniform(-0.8, 0.8), rng.uniform(0.9, 1.9))
        z = complex(rng.uniform(-0.8, 0.8), rng.uniform(0.6, 1.6))
        try:
            kernels.kernel("plain", tau, z)
            kernels.kernel("hat", tau, z)
            kernels.kernel("plain", -1.0 / tau, z)
            kernels.kernel("plain", tau, -1.0 / z)
            kernels.kernel("hat", tau, -1.0 / z)
        except kernels.NearPoleError:
            continue
        pts.append((tau, z))
    return pts


def _suite_kernels(cfg: RunConfig, samples: int = 50) -> list[Check]:
    rng = np.random.default_rng(cfg.seed)
    laws = {"tau_period": 0.0, "z_period": 0.0, "tau_inversion": 0.0, "z_inversion": 0.0}
    for tau, z in _sample_kernel_points(rng, samples):
        k = kernels.kernel("plain", tau, z)
        scale = max(1.0, abs(k))
        laws["tau_period"] = max(
            laws["tau_period"], abs(kernels.kernel("plain", tau + 2, z) - k) / scale
        )
        zp, zi = kernels.verify_z_transformations("plain", tau, z)
        laws["z_period"] = max(laws["z_period"], zp / scale)
        laws["z_inversion"] = max(laws["z_inversion"], zi / scale)
        laws["tau_inversion"] = max(
            laws["tau_inversion"],
            abs(
                kernels.kernel("plain", -1.0 / tau, z)
                + modular.sqrt_neg_iz(tau) * kernels.kernel("hat", tau, z)
            )
            / scale,
        )
    checks = [Check(k, v, 1e-9) for k, v in laws.items()]
    tau = 1.3j
    r1 = kernels.residue_at("plain", tau, tau, 0.1)
    r2 = kernels.residue_at("plain", tau, tau, 0.05)
    target = 1.0 / (2.0j * math.pi)
    checks.append(
        Check(
            "residue_at_tau",
            abs(r1.residue - target),
            1e-8,
            value=f"{r1.residue.real:.6f}{r1.residue.imag:+.6f}j",
        )
    )
    checks.append(Check("residue_radius_independence", abs(r1.residue - r2.residue), 1e-7))
    checks.append(
        Check(
            "residue_at_neg_inv_tau",
            abs(kernels.residue_at("plain", tau, -1.0 / tau, 0.05).residue),
            1e-8,
        )
    )
    checks.append(
        Check("hat_residue_at_tau", abs(kernels.residue_at("hat", tau, tau, 0.1).residue), 1e-8)
    )
    return checks


def _suite_interpolation(cfg: RunConfig) -> list[Check]:
    checks = [Check("a0_at_0", abs(basis.a0(0.0) - 0.5), 1e-6, value=f"{basis.a0(0.0):.9f}")]
    worst = max(abs(basis.a0(math.sqrt(m))) for m in range(1, 9))
    checks.append(Check("a0_at_sqrt_nodes", worst, 1e-5))
    from .contours import clipped_polygon, clipped_semicircle

    agree = max(
        abs(
            basis.a0(x, contour=clipped_semicircle(basis.DEFAULT_CUSP_CLIP))
            - basis.a0(x, contour=clipped_polygon(basis.DEFAULT_CUSP_CLIP))
        )
        for x in (0.5, 1.0, 1.5)
    )
    checks.append(Check("a0_contour_agreement", agree, 1e-6))
    ev = basis.BasisEvaluator(max_n=max(6, min(cfg.max_n, 12)))
    checks.append(Check("node_matrix_deviation", ev.node_matrix_deviation(6), 1e-4))
    zero_col = max(
        abs(ev.value(n, False, 0.0) + ev.value(n, True, 0.0)) for n in range(1, 7)
    )
    checks.append(Check("a_plus_ahat_at_zero", zero_col, 1e-4))
    grid = _grid_points(cfg)
    duality = max(abs(ev.value(0, False, x) - ev.value(0, True, x)) for x in grid)
    checks.append(Check("a0_self_duality", duality, 1e-5))
    return checks


def _suite_poisson(cfg: RunConfig) -> list[Check]:
    checks = []
    cases = [
        ("z1", transforms.gaussian(1.0), 6.0),
        ("z2", transforms.gaussian(1.0), 6.0),
        ("hex", transforms.gaussian(1.0), 6.0),
        ("hex", transforms.gaussian(2.0), 6.0),
        ("z2", transforms.hermite_gaussian(), 6.0),
        ("e8", transforms.gaussian(1.0), 3.2),
    ]
    for label, pair, radius in cases:
        shell = 0.5 if label == "e8" else 1.0
        rep = lattices.poisson_check(pair, lattices.lattice_by_label(label), radius, shell=shell)
        checks.append(Check(f"poisson_{label}_{pair.f.label}", rep.residual, 1e-9))
    for z in (0.5j, 1j, 2j):
        rep = lattices.poisson_check(transforms.complex_gaussian(z), lattices.lattice_by_label("z1"), 8.0)
        direct = modular.theta3(z)
        checks.append(
            Check(f"theta_replay_im_{z.imag:g}", abs(rep.lhs - direct) + rep.residual, 1e-10)
        )
    return checks


def _suite_lp(cfg: RunConfig) -> list[Check]:
    checks = []
    e8 = lattices.lattice_by_label("e8")
    dens = lattices.lattice_packing_density(e8)
    checks.append(
        Check("e8_density", abs(dens - math.pi**4 / 384.0), 1e-12, value=f"{dens:.15f}")
    )
    checks.append(
        Check("e8_density_8th_root", abs(dens**0.125 - 0.84242944), 1e-7, value=f"{dens**0.125:.8f}")
    )
    hx = math.sqrt(lattices.lattice_packing_density(lattices.lattice_by_label("hex")))
    checks.append(Check("hex_density_sqrt", abs(hx - 0.95231281), 1e-7, value=f"{hx:.8f}"))
    cert = lattices.triangle_certificate()
    res = lattices.lp_certificate_check(cert)
    bound = res.bound if res.passed else math.inf
    checks.append(Check("triangle_certificate_bound", abs(bound - 1.0), 1e-7, value=f"{bound:.7f}"))
    gap = lattices.lp_bound_sharpness_gap(lattices.lattice_by_label("z1"), cert)
    checks.append(Check("triangle_sharpness_gap", gap.total, 1e-10))
    return checks


def _suite_classical(cfg: RunConfig) -> list[Check]:
    checks = []
    nodes = classical.lagrange_nodes([0.0, 0.7, 1.3, 2.0, 3.1])
    xs = np.linspace(-0.5, 3.5, 29)
    unity = max(
        abs(sum(classical.lagrange_basis(nodes, k, x) for k in range(5)) - 1.0) for x in xs
    )
    checks.append(Check("lagrange_partition_of_unity", unity, 1e-10))
    poly = lambda x: 2.0 - x + 0.5 * x**3 - 0.1 * x**4
    data = [[poly(p)] for p in nodes.points]
    coeffs = classical.hermite_interpolate(nodes, data)
    exact = max(abs(classical.polyval_ascending(coeffs, x) - poly(x)) for x in xs)
    checks.append(Check("lagrange_exactness_deg4", exact, 1e-10))
    lag = max(
        abs(
            sum(poly(p) * classical.lagrange_basis(nodes, k, x) for k, p in enumerate(nodes.points))
            - classical.polyval_ascending(coeffs, x)
        )
        for x in xs
    )
    checks.append(Check("hermite_lagrange_agreement", lag, 1e-10))
    big_n = 60
    samples = [np.sinc(n / 2.0) ** 2 for n in range(-big_n, big_n + 1)]
    at_nodes = max(
        abs(classical.shannon_reconstruct(samples, 2.0, n / 2.0) - np.sinc(n / 2.0) ** 2)
        for n in range(-5, 6)
    )
    checks.append(Check("shannon_cardinal_at_nodes", at_nodes, 1e-12))
    off = max(
        abs(classical.shannon_reconstruct(samples, 2.0, x) - np.sinc(x) ** 2)
        for x in (0.13, 0.77, 1.9, 2.41)
    )
    checks.append(Check("shannon_truncated_reconstruction", off, 1e-4))
    prod = classical.sinc_product_partial(0.5, 10_000)
    checks.append(Check("sinc_product_half", abs(prod - 2.0 / math.pi), 1e-4, value=f"{prod:.8f}"))
    return checks


_SUITES = {
    "theta": _suite_theta,
    "kernels": _suite_kernels,
    "interpolation": _suite_interpolation,
    "poisson": _suite_poisson,
    "lp": _suite_lp,
    "classical": _suite_classical,
}


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    if suite not in _SUITES:
        print(f"unknown suite {suite!r}", file=sys.stderr)
        return USAGE_ERROR
    return emit_report(cfg, f"verify-{suite}", _SUITES[suite](cfg))


# ---------------------------------------------------------------------------
# commands


def cmd_basis_table(cfg: RunConfig) -> int:
    ev = basis.BasisEvaluator(max_n=cfg.max_n)
    grid = _grid_points(cfg)
    try:
        table = basis.build_table(ev, grid)
    except QuadratureError as exc:
        print(f"numerical failure while building the table: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR
    path = cfg.output_path or f"basis_table.{cfg.format}"
    if cfg.format == "json":
        table.to_json(path)
    else:
        table.to_csv(path)
    if cfg.max_n == 0:
        val = ev.value(0, False, 0.0)
        dev = abs(val - 0.5)
        threshold = 1e-8
        print(f"a0(0) = {val:.12f} (|a0(0) - 1/2| = {dev:.3e}, threshold {threshold:g})")
    else:
        dev = ev.node_matrix_deviation(min(cfg.max_n, 6))
        threshold = 1e-4
        print(f"node-matrix max deviation from delta_nm: {dev:.6e} (threshold {threshold:g})")
    print(f"wrote {path}")
    return 0 if dev < threshold else 1


def cmd_reconstruct(cfg: RunConfig, fixture_label: str, x_list: Sequence[float]) -> int:
    try:
        pair = transforms.fixture_by_label(fixture_label)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return USAGE_ERROR
    big_n = cfg.truncation_N
    ev = basis.BasisEvaluator(max_n=big_n)
    default_tol = cfg.abs_tol if cfg.abs_tol_given else 1e-3
    rows = []
    for x in x_list:
        tol = default_tol
        if x > basis.DEFAULT_X_CAP:
            print(
                f"warning: x = {x:g} exceeds the accuracy cap {basis.DEFAULT_X_CAP}; "
                "tolerance widened by 1e3",
                file=sys.stderr,
            )
            tol = default_tol * 1e3
        rep = basis.reconstruct(pair, x, big_n, ev)
        rows.append((rep, tol))
    if cfg.format == "json":
        doc = {
            "report": "reconstruct",
            "fixture": fixture_label,
            "truncation_N": big_n,
            "rows": [
                {
                    "x": r.x,
                    "reconstructed": r.reconstructed,
                    "reference": r.reference,
                    "abs_error": r.abs_error,
                    "term_tail_bound": r.term_tail_bound,
                    "tolerance": tol,
                    "passed": r.abs_error < tol,
                }
                for r, tol in rows
            ],
            "passed": all(r.abs_error < tol for r, tol in rows),
        }
        _write_text(cfg, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        lines = ["x,reconstructed,reference,abs_error,term_tail_bound,tolerance,passed"]
        for r, tol in rows:
            lines.append(
                f"{r.x:.17g},{r.reconstructed:.17g},{r.reference:.17g},"
                f"{r.abs_error:.17g},{r.term_tail_bound:.17g},{tol:.17g},"
                f"{r.abs_error < tol}"
            )
        _write_text(cfg, "\n".join(lines) + "\n")
    return 0 if all(r.abs_error < tol for r, tol in rows) else 1


def _resolve_lattice(cfg: RunConfig, label: str) -> lattices.Lattice:
    if cfg.lattice_file:
        return lattices.load_lattice(cfg.lattice_file)
    return lattices.lattice_by_label(label or "z1")


def cmd_poisson(cfg: RunConfig, lattice_label: str) -> int:
    try:
        L = _resolve_lattice(cfg, lattice_label)
        pair = transforms.fixture_by_label(cfg.fixture or "gauss")
    except (KeyError, OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    radius, shell = (3.2, 0.5) if L.dimension >= 6 else (6.0, 1.0)
    rep = lattices.poisson_check(pair, L, radius, shell=shell)
    check = Check(
        f"poisson_{L.label or 'lattice'}_{pair.f.label}",
        rep.residual,
        cfg.abs_tol,
        value=f"lhs={rep.lhs.real:.12g} rhs={rep.rhs.real:.12g} "
        f"tails<=({rep.lhs_tail_bound:.3g},{rep.rhs_tail_bound:.3g})",
    )
    return emit_report(cfg, "poisson", [check])


def cmd_lp_check(cfg: RunConfig, lattice_label: str) -> int:
    try:
        L = _resolve_lattice(cfg, lattice_label)
    except (KeyError, OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    if L.dimension != 1:
        print(
            f"no built-in certificate for dimension {L.dimension}; "
            "use lattice-density for density reports",
            file=sys.stderr,
        )
        return USAGE_ERROR
    cert = lattices.triangle_certificate()
    res = lattices.lp_certificate_check(cert, slack=cfg.abs_tol)
    checks = []
    if res.passed:
        checks.append(
            Check("certificate_conditions", 0.0, cfg.abs_tol, value=f"bound={res.bound:.12g}")
        )
        gap = lattices.lp_bound_sharpness_gap(L, cert)
        checks.append(
            Check(
                "sharpness_gap",
                gap.total,
                1e-10,
                value=f"dropped=({gap.dropped_primal:.3g},{gap.dropped_dual:.3g}) "
                f"covolume_slack={gap.covolume_slack:.3g}",
            )
        )
        dens = lattices.lattice_packing_density(L)
        checks.append(
            Check("density_within_bound", max(0.0, dens - res.bound), cfg.abs_tol,
                  value=f"density={dens:.12g}")
        )
    else:
        checks.append(
            Check(
                "certificate_conditions",
                abs(res.value or math.inf),
                cfg.abs_tol,
                value=f"condition {res.condition} violated at radius {res.radius:g}",
            )
        )
    return emit_report(cfg, "lp-check", checks)


def cmd_lattice_density(cfg: RunConfig, lattice_label: str) -> int:
    try:
        L = _resolve_lattice(cfg, lattice_label)
    except (KeyError, OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    dens = lattices.lattice_packing_density(L)
    doc = {
        "report": "lattice-density",
        "label": L.label,
        "dimension": L.dimension,
        "covolume": L.covolume,
        "minimal_norm": lattices.minimal_norm(L),
        "density": dens,
        "density_nth_root": dens ** (1.0 / L.dimension),
    }
    if cfg.format == "json":
        _write_text(cfg, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        keys = ["label", "dimension", "covolume", "minimal_norm", "density", "density_nth_root"]
        vals = [
            doc[k] if isinstance(doc[k], str) else f"{doc[k]:.17g}" if isinstance(doc[k], float) else str(doc[k])
            for k in keys
        ]
        _write_text(cfg, ",".join(keys) + "\n" + ",".join(vals) + "\n")
    return 0


def cmd_classical(cfg: RunConfig) -> int:
    """Plot-ready data: truncated Shannon reconstruction of the band-limited
    fixture sinc(x)^2 over the x-grid, CSV columns x, value, error."""
    big_n = 60
    samples = [np.sinc(n / 2.0) ** 2 for n in range(-big_n, big_n + 1)]
    grid = _grid_points(cfg)
    rows = []
    for x in grid:
        val = classical.shannon_reconstruct(samples, 2.0, x)
        rows.append((x, val, abs(val - float(np.sinc(x)) ** 2)))
    if cfg.format == "json":
        doc = {
            "report": "classical",
            "rows": [{"x": x, "value": v, "error": e} for x, v, e in rows],
            "tolerance": 1e-4,
            "passed": all(e < 1e-4 for _, _, e in rows),
        }
        _write_text(cfg, json.dumps(doc, indent=1, sort_keys=True) + "\n")
    else:
        lines = ["x,value,error"]
        lines += [f"{x:.17g},{v:.17g},{e:.17g}" for x, v, e in rows]
        _write_text(cfg, "\n".join(lines) + "\n")
    return 0 if all(e < 1e-4 for _, _, e in rows) else 1


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--abs-tol", dest="abs_tol", type=float)
    common.add_argument("--max-n", dest="max_n", type=int)
    common.add_argument("--truncation-N", dest="truncation_N", type=int)
    common.add_argument("--x-grid", dest="x_grid", metavar="START:STOP:STEP")
    common.add_argument("--fixture", dest="fixture")
    common.add_argument("--lattice-file", dest="lattice_file")
    common.add_argument("--format", dest="format", choices=("csv", "json"))
    common.add_argument("--out", dest="out")
    common.add_argument("--seed", dest="seed", type=int)
    common.add_argument("--config", dest="config")

    parser = argparse.ArgumentParser(
        prog="fourinterp",
        description="Fourier interpolation basis tables and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("basis-table", parents=[common])
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("suite", choices=sorted(_SUITES))
    p = sub.add_parser("reconstruct", parents=[common])
    p.add_argument("x", nargs="*", type=float)
    p = sub.add_parser("poisson", parents=[common])
    p.add_argument("lattice", nargs="?", default="z1")
    p = sub.add_parser("lp-check", parents=[common])
    p.add_argument("lattice", nargs="?", default="z1")
    p = sub.add_parser("lattice-density", parents=[common])
    p.add_argument("lattice", nargs="?", default="z1")
    sub.add_parser("classical", parents=[common])
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    try:
        if args.command == "basis-table":
            return cmd_basis_table(cfg)
        if args.command == "verify":
            return cmd_verify(cfg, args.suite)
        if args.command == "reconstruct":
            xs = tuple(args.x) if args.x else (0.0, 0.3, 0.8, 1.4, 2.1)
            if any(x < 0 for x in xs):
                print("x values must be nonnegative", file=sys.stderr)
                return USAGE_ERROR
            return cmd_reconstruct(cfg, cfg.fixture or "gauss", xs)
        if args.command == "poisson":
            return cmd_poisson(cfg, args.lattice)
        if args.command == "lp-check":
            return cmd_lp_check(cfg, args.lattice)
        if args.command == "lattice-density":
            return cmd_lattice_density(cfg, args.lattice)
        if args.command == "classical":
            return cmd_classical(cfg)
        print(f"unknown command {args.command!r}", file=sys.stderr)
        return USAGE_ERROR
    except (QuadratureError, lattices.EnumerationBudgetError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return NUMERICAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
