"""Command line front end: reproducible certification reports.

Every subcommand runs one module's certification and emits a structured
text document with a fixed schema: a parameter block followed by
``checks:`` entries (name, measured, expected, tol, provenance, pass).
Reports are deterministic functions of (subcommand, parameters, seed);
wall time goes to stderr so documents diff cleanly.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
parameter error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kern as kern
from . import engine, hopfmo, liegeo, morse, otfkm, ptdeform
from . import kernel_backend
from .clifford import build_system, verify_system
from .errors import (
    ArgumentError,
    ChartDomainError,
    DegenerateCrossRatioError,
    DupinError,
    RadonHurwitzError,
)
from .quat import Quaternion

__all__ = ["main", "run", "RunReport", "Check", "lie_invariance_suite"]


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.17g" % float(v)
    return str(v)


@dataclass
class Check:
    name: str
    measured: object
    expected: object
    tol: object
    provenance: str
    passed: bool


@dataclass
class RunReport:
    command: str
    parameters: dict
    seed: int
    checks: list = field(default_factory=list)
    sections: list = field(default_factory=list)

    def add_close(self, name, measured, expected, tol, provenance):
        ok = bool(abs(float(measured) - float(expected)) <= float(tol))
        self.checks.append(Check(name, measured, expected, tol, provenance, ok))
        return ok

    def add_min(self, name, measured, bound, provenance):
        ok = bool(float(measured) >= float(bound))
        self.checks.append(Check(name, measured, f">= {_fmt(bound)}", 0.0,
                                 provenance, ok))
        return ok

    def add_max(self, name, measured, bound, provenance):
        ok = bool(float(measured) <= float(bound))
        self.checks.append(Check(name, measured, f"<= {_fmt(bound)}", 0.0,
                                 provenance, ok))
        return ok

    def add_flag(self, name, passed, measured, expected, provenance):
        self.checks.append(Check(name, measured, expected, 0.0, provenance,
                                 bool(passed)))
        return bool(passed)

    def section(self, title, lines):
        self.sections.append((title, list(lines)))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        out = ["dupin certification report",
               f"command: {self.command}",
               f"backend: {kernel_backend}",
               f"seed: {self.seed}",
               "parameters:"]
        for key in sorted(self.parameters):
            out.append(f"  {key}: {_fmt(self.parameters[key])}")
        out.append("checks:")
        for c in self.checks:
            out.append(f"  - name: {c.name}")
            out.append(f"    measured: {_fmt(c.measured)}")
            out.append(f"    expected: {_fmt(c.expected)}")
            out.append(f"    tol: {_fmt(c.tol)}")
            out.append(f"    provenance: {c.provenance}")
            out.append(f"    pass: {_fmt(c.passed)}")
        for title, lines in self.sections:
            out.append(f"{title}:")
            out.extend(f"  {ln}" for ln in lines)
        n_ok = sum(1 for c in self.checks if c.passed)
        verdict = "PASS" if self.passed else "FAIL"
        out.append(f"result: {verdict} ({n_ok}/{len(self.checks)} checks)")
        return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# subcommand runners


def run_clifford(m, l, seed, ts) -> RunReport:
    rep = RunReport("clifford", {"m": m, "l": l}, seed)
    try:
        system = build_system(m, l)
    except RadonHurwitzError as exc:
        rep.add_flag("admissibility", False, f"rejected: {exc}", "admissible",
                     "radon-hurwitz-bound")
        return rep
    rep.add_flag("admissibility", True, "admissible", "admissible",
                 "radon-hurwitz-bound")
    v = verify_system(system)
    tol = 1e-12 * ts
    for name, val in [("square-identity", v.square), ("skew-symmetry", v.skew),
                      ("orthogonality", v.orthogonal),
                      ("anticommutation", v.anticommute)]:
        rep.add_close(name, val, 0.0, tol, "clifford-system-identities")
    lines = []
    for i, e in enumerate(system.mats):
        lines.append(f"E{i}:")
        for row in e:
            lines.append("  " + " ".join(_fmt(x) for x in row))
    rep.section("matrices", lines)
    return rep


def _tube_checks(rep: RunReport, system, t, samples, seed, ts):
    man = otfkm.v2_manifold(system)
    tb = engine.tube(man, t, rng=np.random.default_rng(seed + 101))
    charts = tb.sample_charts(np.random.default_rng(seed + 202), samples)
    values, psis, pair_ok = [], [], True
    for ch in charts:
        res = engine.hyp_spectrum(ch, np.zeros(ch.nparams))
        if res.spectrum.g != 4:
            rep.add_flag("tube-distinct-count", False, res.spectrum.g, 4,
                         "isoparametric-tube-spectrum")
            return
        values.append(res.spectrum.values)
        psis.append(engine.lie_curvature(res))
        mults = np.sort(res.spectrum.multiplicities)
        pair_ok &= bool(mults[0] == mults[1] and mults[2] == mults[3])
    values = np.array(values)
    rep.add_flag("tube-distinct-count", True, 4, 4,
                 "isoparametric-tube-spectrum")
    rep.add_close("tube-cluster-std", float(np.max(values.std(axis=0))), 0.0,
                  1e-6 * ts, "isoparametric-tube-spectrum")
    rep.add_close("tube-lie-curvature", float(np.max(np.abs(np.array(psis) - 0.5))),
                  0.0, 1e-6 * ts, "isoparametric-lie-curvature")
    rep.add_flag("tube-multiplicity-pairing", pair_ok,
                 "sorted multiplicities pair up" if pair_ok else "pairing broken",
                 "m1=m2 and m3=m4", "tube-multiplicity-pairing")
    rep.section("tube spectra", (
        " ".join(_fmt(v) for v in row) for row in values))


def run_otfkm(m, l, samples, normals, tube_t, seed, ts) -> RunReport:
    params = {"m": m, "l": l, "samples": samples, "normals": normals}
    if tube_t is not None:
        params["tube"] = tube_t
    rep = RunReport("otfkm", params, seed)
    system = build_system(m, l)
    otfkm.check_admissible(system)
    cert = otfkm.v2_spectrum_certify(system, samples=samples,
                                     normals_per_sample=normals, seed=seed,
                                     value_tol=1e-6 * ts)
    rep.add_close("spectrum-values", cert.max_value_dev, 0.0, 1e-6 * ts,
                  "clifford-stiefel-spectrum")
    mult_ok = not any("mults" in f or "infinite_mult" in f for f in cert.failures)
    rep.add_flag("spectrum-multiplicities", mult_ok,
                 str(cert.expected_multiplicities) if mult_ok else "see failures",
                 str(cert.expected_multiplicities), "clifford-stiefel-multiplicities")
    rep.add_close("lie-curvature", cert.max_psi_dev, 0.0, 1e-6 * ts,
                  "isoparametric-lie-curvature")
    rep.add_close("normal-independence", cert.max_normal_spread, 0.0, 1e-6 * ts,
                  "clifford-stiefel-spectrum")
    rep.add_flag("certification", cert.passed, "pass" if cert.passed else "fail",
                 "pass", "clifford-stiefel-spectrum")
    if cert.failures:
        rep.section("failures", cert.failures)
    if tube_t is not None:
        _tube_checks(rep, system, tube_t, max(samples, 20), seed, ts)
    return rep


def run_pt(m, l, alpha2, samples, normals, seed, ts) -> RunReport:
    rep = RunReport("pt", {"m": m, "l": l, "alpha2": alpha2,
                           "samples": samples, "normals": normals}, seed)
    params = ptdeform.PTParams.from_alpha2(alpha2)
    system = build_system(m, l)
    otfkm.check_admissible(system)
    a, b = params.alpha, params.beta
    expected = np.array([-a / b, 0.0, b / a])
    fps = otfkm.sample_v2(system, seed, samples)
    man = ptdeform.pt_manifold(params, system)
    spec_dev = 0.0
    psi_xi_dev = 0.0
    psi_neg_dev = 0.0
    spec_lines = []
    for fp in fps:
        x = man.project(ptdeform.deform(params, fp))
        xi = man.xi_field(x)
        res = engine.principal_spectrum(man, x, xi)
        spec_dev = max(spec_dev, float(np.max(np.abs(res.spectrum.values - expected))))
        spec_lines.append(" ".join(_fmt(v) for v in res.spectrum.values)
                          + "  mults " + str(tuple(int(x) for x in res.spectrum.multiplicities)))
        psi_xi_dev = max(psi_xi_dev, abs(engine.lie_curvature(res) - a * a))
        psi_neg_dev = max(psi_neg_dev,
                          abs(engine.lie_curvature(
                              engine.principal_spectrum(man, x, -xi)) - b * b))
    rep.add_close("spectrum-closed-form", spec_dev, 0.0, 1e-6 * ts,
                  "deformed-spectrum-closed-form")
    rep.add_close("lie-curvature-at-xi", psi_xi_dev, 0.0, 1e-5 * ts,
                  "lie-curvature-weight-squares")
    rep.add_close("lie-curvature-at-minus-xi", psi_neg_dev, 0.0, 1e-5 * ts,
                  "lie-curvature-weight-squares")
    scan = ptdeform.psi_scan(params, system, samples=samples,
                             normals_per_sample=normals, seed=seed)
    rep.add_min("lie-curvature-spread", scan.spread, 0.2,
                "lie-curvature-nonconstancy")
    rep.add_close("lie-curvature-min", scan.min_psi, min(a * a, b * b),
                  1e-5 * ts, "lie-curvature-weight-squares")
    rep.add_close("lie-curvature-max", scan.max_psi, max(a * a, b * b),
                  1e-5 * ts, "lie-curvature-weight-squares")
    rep.section("per-sample spectra at xi", spec_lines)
    rep.section("psi scan", [
        f"values: {len(scan.values)}  skipped: {scan.skipped}",
        "min: " + _fmt(scan.min_psi), "max: " + _fmt(scan.max_psi),
        "histogram (20 bins on (0,1)): " + " ".join(str(c) for c in scan.hist_counts),
    ])
    return rep


def _mo_surface(base, r, warp):
    if base == "cyclide":
        surf = hopfmo.cyclide(r if r is not None else 0.6)
    else:
        surf = hopfmo.cartan_tube(t=r if r is not None else 0.4)
    if warp != 1.0:
        surf = hopfmo.mobius_warp(warp, hopfmo.DEFAULT_POLE, surf)
    return surf


def run_mo(base, r, warp, samples, seed, ts) -> RunReport:
    rep = RunReport("mo", {"base": base, "r": r if r is not None else
                           (0.6 if base == "cyclide" else 0.4),
                           "warp": warp, "samples": samples}, seed)
    surf = _mo_surface(base, r, warp)
    doubling = hopfmo.lifted_spectrum_check(surf, samples=samples, seed=seed)
    rep.add_flag("lift-curvature-count",
                 all(len(s.lift_values) == 2 * surf.g for s in doubling.samples)
                 and not doubling.failures,
                 f"2g = {2 * surf.g} at {len(doubling.samples)} samples",
                 f"2g = {2 * surf.g}", "hopf-lift-curvature-doubling")
    rep.add_close("doubling-match-error", doubling.max_match_error, 0.0,
                  1e-5 * ts, "hopf-lift-curvature-doubling")
    rep.add_flag("multiplicity-transport",
                 all(s.mults_ok for s in doubling.samples),
                 "base multiplicities transported", "base multiplicities transported",
                 "doubling-multiplicity-transport")
    spec_lines = [
        "base " + " ".join(_fmt(v) for v in s.base_values)
        + "  ->  lift " + " ".join(_fmt(v) for v in s.lift_values)
        for s in doubling.samples
    ]
    rep.section("lifted spectra", spec_lines)
    if doubling.failures:
        rep.section("doubling failures", doubling.failures)
    if surf.g == 2:
        scan = hopfmo.lift_psi_scan(surf, samples=max(50, samples), seed=seed)
        pv = scan.pairing_values()
        rep.add_close("pairing-formula-agreement", scan.max_formula_dev, 0.0,
                      1e-6 * ts, "lift-lie-curvature-pairing")
        if warp != 1.0:
            rep.add_min("psi-range-width", scan.spread, 0.05,
                        "lift-lie-curvature-nonconstancy")
        else:
            rep.add_close("psi-constancy", scan.spread, 0.0, 1e-6 * ts,
                          "isoparametric-lift-constancy")
        rep.section("lift lie curvature", [
            "pairing min: " + _fmt(pv.min()), "pairing max: " + _fmt(pv.max()),
            "ordered min: " + _fmt(scan.ordered_values().min()),
            "ordered max: " + _fmt(scan.ordered_values().max()),
        ])
    return rep


def run_taut(base, r, warp, dirs, starts, seed, ts) -> RunReport:
    rep = RunReport("taut", {"base": base, "r": r if r is not None else
                             (0.6 if base == "cyclide" else 0.4),
                             "warp": warp, "dirs": dirs, "starts": starts}, seed)
    surf = _mo_surface(base, r, warp)
    taut = morse.taut_doubling_check(surf.meta, directions=dirs, seed=seed,
                                     starts_base=starts, starts_lift=5 * starts)
    included = [d for d in taut.directions if not d.excluded]
    doubled = sum(1 for d in included if d.doubled)
    need = int(np.ceil(0.9 * len(taut.directions)))
    ok = doubled >= need and doubled == len(included)
    rep.add_flag("doubling-counts", ok,
                 f"{doubled}/{len(taut.directions)} doubled, {taut.n_excluded} excluded",
                 f">= {need} doubled, every included direction doubled",
                 "taut-doubling-counts")
    rep.add_max("excluded-fraction", taut.n_excluded / max(len(taut.directions), 1),
                0.2, "taut-doubling-counts")
    if included:
        rep.add_close("lift-value-pairing",
                      float(max(d.pairing_dev for d in included)), 0.0,
                      1e-6 * ts, "lift-critical-value-pairing")
    if base == "cyclide":
        rep.add_flag("counts-mode", taut.common_counts() == (4, 8),
                     str(taut.common_counts()), "(4, 8)", "taut-doubling-counts")
    else:
        mode = taut.common_counts()
        frac = (sum(1 for p in taut.pairs if p == mode) / max(len(taut.pairs), 1))
        rep.add_min("counts-mode-constancy", frac, 0.9, "taut-doubling-counts")
        rep.section("measured counts", [f"mode: {mode}"])
    # fiber critical values against the grid oracle and the height identity
    rng = np.random.default_rng(seed + 777)
    grid_dev, g_dev, sq_dev = 0.0, 0.0, 0.0
    trials = 0
    while trials < 5:
        ab = rng.normal(size=8)
        ab /= np.linalg.norm(ab)
        a, b = Quaternion.from_array(ab[:4]), Quaternion.from_array(ab[4:])
        pt5 = rng.normal(size=5)
        pt5 /= np.linalg.norm(pt5)
        w, t = Quaternion.from_array(pt5[:4]), pt5[4]
        if t > 0.9:
            continue
        fc = morse.fiber_critical_values(a, b, w, t)
        if fc.degenerate:
            continue
        gmax, gmin = morse.fiber_value_oracle(a, b, w, t, seed=seed + trials)
        grid_dev = max(grid_dev, abs(gmax - fc.value_plus),
                       abs(gmin - fc.value_minus))
        abar = np.concatenate([a.conj().as_array(), b.conj().as_array()])
        ell = float(kern.hopf5(abar) @ pt5)
        g_dev = max(g_dev, abs(fc.value_plus ** 2 - (0.5 + 0.5 * ell)))
        u, v = hopfmo.fiber_param(w, t, Quaternion.from_array(fc.z_plus))
        f_at = float(abar @ np.concatenate([u.as_array(), v.as_array()]))
        sq_dev = max(sq_dev, abs(f_at ** 2 - fc.value_plus ** 2))
        trials += 1
    rep.add_close("fiber-critical-values-grid", grid_dev, 0.0, 1e-4 * ts,
                  "fiber-critical-values-grid-oracle")
    rep.add_close("fiber-height-identity", g_dev, 0.0, 1e-12 * ts,
                  "fiber-height-square-identity")
    rep.add_close("fiber-square-relation", sq_dev, 0.0, 1e-10 * ts,
                  "fiber-height-square-identity")
    rep.section("directions", taut.lines())
    return rep


def lie_invariance_suite(seed, trials, rep: RunReport = None) -> RunReport:
    """Random Lie sphere transformations preserve the cross ratio of the
    four curvature spheres on a Legendre line; parallel transforms shift
    every curvature angle by the same amount."""
    n = 6
    if rep is None:
        rep = RunReport("lie-invariance", {"trials": trials, "n": n}, seed)
    rng = np.random.default_rng(seed)

    def draw_line():
        f = rng.normal(size=n + 1)
        f /= np.linalg.norm(f)
        xi = rng.normal(size=n + 1)
        xi -= (xi @ f) * f
        xi /= np.linalg.norm(xi)
        return liegeo.legendre_line(f, xi)

    def draw_thetas():
        while True:
            th = np.sort(rng.uniform(0.15, np.pi - 0.15, size=4))
            if np.min(np.diff(th)) > 0.1:
                return th

    # identity transform: the reread parameters reproduce cot(theta)
    line = draw_line()
    th = draw_thetas()
    params0 = liegeo.reread_curvatures(np.eye(n + 3), line, th)
    id_dev = max(abs(p.kappa - 1.0 / np.tan(t)) for p, t in zip(params0, th))
    rep.add_close("identity-transform", id_dev, 0.0, 1e-12, "identity-reread")

    # parallel transform: every curvature angle shifts by the same t
    shift_dev = 0.0
    for _ in range(10):
        line = draw_line()
        t = rng.uniform(0.05, 0.4)
        while True:
            th = draw_thetas()
            if th[-1] + t < np.pi - 0.1:
                break
        params = liegeo.reread_curvatures(liegeo.parallel_matrix(t, n), line, th)
        shift_dev = max(shift_dev, max(
            abs(p.kappa - 1.0 / np.tan(tt + t)) for p, tt in zip(params, th)))
    rep.add_close("parallel-shift", shift_dev, 0.0, 1e-10, "parallel-shift-oracle")

    # random transforms preserve the cross ratio
    max_dev = 0.0
    redraws = 0
    done = 0
    while done < trials:
        line = draw_line()
        th = draw_thetas()
        b_mat = liegeo.random_lie_transform(rng, n)
        ref = liegeo.cross_ratio(*[liegeo.ProjParam(np.cos(t), np.sin(t))
                                   for t in th])
        try:
            params = liegeo.reread_curvatures(b_mat, line, th)
            val = liegeo.cross_ratio(*params)
        except (DegenerateCrossRatioError, ChartDomainError):
            redraws += 1
            if redraws > trials:
                raise
            continue
        max_dev = max(max_dev, abs(val - ref))
        done += 1
    rep.add_close("cross-ratio-invariance", max_dev, 0.0, 1e-8,
                  "lie-transform-cross-ratio-invariance")
    if redraws:
        rep.section("redraws", [f"degenerate trials redrawn: {redraws}"])
    return rep


def run_all(seed, samples, ts) -> RunReport:
    rep = RunReport("all", {"samples": samples if samples else "defaults"}, seed)

    def merge(sub: RunReport):
        for c in sub.checks:
            rep.checks.append(Check(f"{sub.command}:{c.name}", c.measured,
                                    c.expected, c.tol, c.provenance, c.passed))
        for title, lines in sub.sections:
            rep.section(f"{sub.command}: {title}", lines)

    for m, l in [(2, 2), (2, 4), (3, 4), (2, 8), (3, 8), (4, 8)]:
        sub = run_clifford(m, l, seed, ts)
        sub.sections = []
        sub.command = f"clifford({m},{l})"
        merge(sub)
    for m, l in [(2, 3), (5, 4)]:
        sub = run_clifford(m, l, seed, ts)
        ok = not sub.passed
        rep.add_flag(f"clifford({m},{l}):rejected", ok,
                     "rejected" if ok else "accepted", "rejected",
                     "radon-hurwitz-bound")
    n = samples or 10

    def relabel(sub, label):
        sub.command = label
        return sub

    merge(relabel(run_otfkm(2, 4, n, 5, np.pi / 8, seed, ts), "otfkm(2,4)+tube"))
    merge(relabel(run_otfkm(3, 8, n, 5, None, seed, ts), "otfkm(3,8)"))
    merge(run_pt(2, 4, 0.3, n, 10, seed, ts))
    merge(relabel(run_mo("cyclide", 0.6, 1.5, max(n, 20), seed, ts),
                  "mo(cyclide,warped)"))
    merge(relabel(run_mo("cyclide", 0.6, 1.0, max(n, 20), seed, ts),
                  "mo(cyclide,unwarped)"))
    merge(relabel(run_mo("cartan", 0.4, 1.5, max(n, 20), seed, ts),
                  "mo(cartan,warped)"))
    merge(relabel(run_taut("cyclide", 0.6, 1.0, 20, 200, seed, ts),
                  "taut(unwarped)"))
    merge(relabel(run_taut("cyclide", 0.6, 1.5, 20, 200, seed, ts),
                  "taut(warped)"))
    merge(lie_invariance_suite(seed, samples or 100))
    return rep


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dupin",
        description="numerical certification of Dupin hypersurface structure")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="rng seed (default: env DUPIN_SEED or 0)")
    common.add_argument("--tol-scale", type=float, default=1.0,
                        help="multiply all tolerances by this factor")
    common.add_argument("--samples", type=int, default=None,
                        help="sample count override")
    common.add_argument("--out", type=str, default=None,
                        help="write the report to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("clifford", parents=[common],
                       help="build and verify a Clifford system")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("otfkm", parents=[common],
                       help="certify the Clifford-Stiefel spectrum")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--normals", type=int, default=5)
    p.add_argument("--tube", type=float, default=None,
                   help="also certify the tube at this radius")

    p = sub.add_parser("pt", parents=[common],
                       help="certify the deformed family")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--l", type=int, default=4)
    p.add_argument("--alpha2", type=float, required=True)
    p.add_argument("--normals", type=int, default=10)

    p = sub.add_parser("mo", parents=[common],
                       help="certify Hopf-lift curvature doubling")
    p.add_argument("--base", choices=["cyclide", "cartan"], default="cyclide")
    p.add_argument("--r", type=float, default=None,
                   help="cyclide radius or tube radius")
    p.add_argument("--warp", type=float, default=1.5)

    p = sub.add_parser("taut", parents=[common],
                       help="taut critical-point doubling counts")
    p.add_argument("--base", choices=["cyclide", "cartan"], default="cyclide")
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--warp", type=float, default=1.5)
    p.add_argument("--dirs", type=int, default=20)
    p.add_argument("--starts", type=int, default=200)

    sub.add_parser("lie-invariance", parents=[common],
                   help="cross-ratio invariance under Lie transforms")

    sub.add_parser("all", parents=[common], help="run the full suite")
    return parser


def run(argv) -> tuple:
    """Parse argv, execute, and return (exit_code, report_text)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("DUPIN_SEED", "0"))
    ts = args.tol_scale

    t0 = time.time()
    try:
        if args.command == "clifford":
            rep = run_clifford(args.m, args.l, seed, ts)
        elif args.command == "otfkm":
            rep = run_otfkm(args.m, args.l, args.samples or 10, args.normals,
                            args.tube, seed, ts)
        elif args.command == "pt":
            rep = run_pt(args.m, args.l, args.alpha2, args.samples or 10,
                         args.normals, seed, ts)
        elif args.command == "mo":
            rep = run_mo(args.base, args.r, args.warp, args.samples or 20,
                         seed, ts)
        elif args.command == "taut":
            rep = run_taut(args.base, args.r, args.warp, args.dirs,
                           args.starts, seed, ts)
        elif args.command == "lie-invariance":
            rep = lie_invariance_suite(seed, args.samples or 100)
        else:
            rep = run_all(seed, args.samples, ts)
    except ArgumentError as exc:
        return 2, f"parameter error: {exc}\n"
    except DupinError as exc:
        return 1, f"certification aborted: {type(exc).__name__}: {exc}\n"
    wall = time.time() - t0

    text = rep.render()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        text_out = f"report written to {args.out}\n"
    else:
        text_out = text
    print(f"wall time: {wall:.2f}s", file=sys.stderr)
    return (0 if rep.passed else 1), text_out


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
