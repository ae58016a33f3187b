"""Verification runner, structured reports, and the powspec command line.

Check statuses are three-valued on purpose.  pass and fail mean what they
say; mismatch-reported marks the places where the claimed closed forms
are known not to line up with a direct computation (the energy constant
and the clique-versus-true-graph gap), so those documented discrepancies
stay visible without drowning out genuine regressions.  Exit codes:
0 when nothing failed, 1 when any check failed, 2 on usage or runtime
errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exact_linalg import MatrixCapExceeded, char_poly_exact, matrix_of
from .formulas import (
    ModelParameters,
    adjacency_charpoly_formula,
    laplacian_charpoly_formula,
    laplacian_energy_formula,
    laplacian_spectrum_formula,
    signless_charpoly_formula,
    spectral_radius_bounds,
)
from .group_core import Cyclic, SemidihedralType, validate_parameters, validate_presentation
from .powergraph import (
    build_model_graph,
    build_power_graph,
    edge_count,
    graph_diff,
    model_adjacency_split,
    to_dot,
    verify_decomposition,
)
from .spectra import (
    cluster_multiplicities,
    laplacian_energy,
    spectral_radius,
    spectrum_to_csv,
    summaries_match,
    symmetric_eigenvalues,
)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_MISMATCH = "mismatch-reported"

MATRIX_KINDS = ("adjacency", "laplacian", "signless")
CONSTRUCTIONS = ("model", "true")
NUMERIC_TOL = 1e-9
CLUSTER_TOL = 1e-6

# Fixed registry tying each check to the closed-form claim it exercises.
_ANCHORS = {
    ("presentation", None): "group-presentation",
    ("vertex-count", None): "order-count",
    ("edge-count", None): "edge-count-closed-form",
    ("trace", None): "trace-identities",
    ("charpoly", "adjacency"): "adjacency-charpoly-closed-form",
    ("charpoly", "laplacian"): "laplacian-charpoly-closed-form",
    ("charpoly", "signless"): "signless-charpoly-closed-form",
    ("spectrum-divides", "laplacian"): "laplacian-spectrum-table",
    ("spectrum-numeric", "laplacian"): "laplacian-spectrum-table",
    ("laplacian-energy", "laplacian"): "laplacian-energy-closed-form",
    ("decomposition", None): "pendant-quad-decomposition",
    ("model-vs-true-diff", None): "clique-model-comparison",
    ("radius-bounds", "adjacency"): "spectral-radius-bracket",
    ("split-spectra", "adjacency"): "adjacency-split-spectra",
    ("execution", None): "runner",
}


def _anchor(name: str, matrix: str | None) -> str:
    return _ANCHORS.get((name, matrix)) or _ANCHORS[(name, None)]


def _fmt(v):
    if v is None:
        return None
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (int, Fraction)):
        return str(v)
    return str(v)


@dataclass
class Check:
    name: str
    status: str
    construction: str | None = None
    matrix: str | None = None
    computed: str | None = None
    claimed: str | None = None
    tolerance: str | None = None
    detail: dict | None = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": _anchor(self.name, self.matrix),
            "construction": self.construction,
            "matrix": self.matrix,
            "status": self.status,
            "tolerance": self.tolerance,
            "computed": self.computed,
            "claimed": self.claimed,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    k: int
    p: int
    n: int
    theta: int
    m_model: int | None
    m_true: int | None
    checks: tuple[Check, ...] = ()
    notices: tuple[str, ...] = ()

    def counts(self) -> dict:
        out = {STATUS_PASS: 0, STATUS_MISMATCH: 0, STATUS_FAIL: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def status(self) -> str:
        return STATUS_FAIL if self.counts()[STATUS_FAIL] else STATUS_PASS

    def to_dict(self) -> dict:
        return {
            "schema": "powspec-report-v1",
            "params": {
                "k": self.k,
                "p": self.p,
                "n": self.n,
                "theta": self.theta,
                "m_model": self.m_model,
                "m_true": self.m_true,
            },
            "status": self.status,
            "counts": self.counts(),
            "notices": list(self.notices),
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _normalize_kinds(kinds) -> tuple[str, ...]:
    kinds = tuple(kinds)
    for kind in kinds:
        if kind not in MATRIX_KINDS:
            raise ValueError(f"unknown matrix kind {kind!r}")
    return tuple(k for k in MATRIX_KINDS if k in kinds)


def _normalize_constructions(constructions) -> tuple[str, ...]:
    constructions = tuple(constructions)
    for c in constructions:
        if c not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {c!r}")
    return tuple(c for c in CONSTRUCTIONS if c in constructions)


def _charpoly_formula(kind: str, k: int, p: int):
    return {
        "adjacency": adjacency_charpoly_formula,
        "laplacian": laplacian_charpoly_formula,
        "signless": signless_charpoly_formula,
    }[kind](k, p)


def _poly_difference_detail(computed, claimed) -> dict:
    top = max(computed.degree, claimed.degree)

    def coeff(poly, d):
        return poly.coeffs[d] if d <= poly.degree else 0

    diffs = [d for d in range(top + 1) if coeff(computed, d) != coeff(claimed, d)]
    return {
        "degree_computed": computed.degree,
        "degree_claimed": claimed.degree,
        "differing_coefficients": len(diffs),
        "lowest_differing_degree": diffs[0] if diffs else None,
    }


def run_verification(
    k: int,
    p: int,
    kinds: Iterable[str] = MATRIX_KINDS,
    constructions: Iterable[str] = CONSTRUCTIONS,
    out: str | None = None,
) -> VerificationReport:
    """Run every applicable check for one (k, p) and assemble a report.

    kinds narrows which matrix families are exercised; an empty tuple
    keeps only the counting, decomposition, and diff checks, which makes
    large sweeps cheap.  Exact or numeric checks beyond the configured
    matrix-order cap are skipped with a notice instead of failing.
    """
    spec = SemidihedralType(k, p)
    mp = ModelParameters(k, p)
    kinds = _normalize_kinds(kinds)
    constructions = _normalize_constructions(constructions)
    q = mp.rotation_order

    checks: list[Check] = []
    notices: list[str] = []

    graphs = {}
    if "model" in constructions:
        graphs["model"] = build_model_graph(k, p)
    if "true" in constructions:
        graphs["true"] = build_power_graph(spec)
    m_counts = {name: edge_count(g) for name, g in graphs.items()}

    pres = validate_presentation(spec)
    checks.append(
        Check(
            name="presentation",
            status=STATUS_PASS if pres.ok else STATUS_FAIL,
            computed=", ".join(f"{i.name}={'ok' if i.ok else 'FAIL'}" for i in pres.items),
            claimed="all relations hold",
        )
    )

    for cname, g in graphs.items():
        checks.append(
            Check(
                name="vertex-count",
                construction=cname,
                status=STATUS_PASS if g.n == mp.vertex_count else STATUS_FAIL,
                computed=_fmt(g.n),
                claimed=_fmt(mp.vertex_count),
            )
        )
    if "model" in graphs:
        checks.append(
            Check(
                name="edge-count",
                construction="model",
                status=STATUS_PASS if m_counts["model"] == mp.model_edge_count else STATUS_FAIL,
                computed=_fmt(m_counts["model"]),
                claimed=_fmt(mp.model_edge_count),
            )
        )

    matrices: dict[tuple[str, str], object] = {}

    def matrix_for(cname: str, kind: str):
        key = (cname, kind)
        if key not in matrices:
            matrices[key] = matrix_of(graphs[cname], kind)
        return matrices[key]

    # trace identities, exact
    for cname in constructions:
        for kind in kinds:
            mat = matrix_for(cname, kind)
            want = 0 if kind == "adjacency" else 2 * m_counts[cname]
            got = mat.trace()
            checks.append(
                Check(
                    name="trace",
                    construction=cname,
                    matrix=kind,
                    status=STATUS_PASS if got == want else STATUS_FAIL,
                    computed=_fmt(got),
                    claimed=_fmt(want),
                )
            )

    # characteristic polynomials against the claimed closed forms, exact.
    # The model matrices are the ones the claims describe; the true power
    # graph is expected to deviate (clique assumption), so an inequality
    # there is reported as a mismatch rather than a failure.
    for cname in constructions:
        for kind in kinds:
            formula = _charpoly_formula(kind, k, p)
            claimed_poly = formula.expand().monic_normalized()
            try:
                computed_poly = char_poly_exact(matrix_for(cname, kind))
            except MatrixCapExceeded as exc:
                notices.append(f"charpoly {kind}/{cname} skipped: {exc}")
                continue
            if computed_poly == claimed_poly:
                status = STATUS_PASS
                computed = "matches the claimed expansion"
                detail = {"degree": computed_poly.degree}
            else:
                status = STATUS_MISMATCH if cname == "true" else STATUS_FAIL
                computed = "differs from the claimed expansion"
                detail = _poly_difference_detail(computed_poly, claimed_poly)
            checks.append(
                Check(
                    name="charpoly",
                    construction=cname,
                    matrix=kind,
                    status=status,
                    computed=computed,
                    claimed=str(formula),
                    detail=detail,
                )
            )

    if "laplacian" in kinds:
        # claimed spectrum must divide the claimed polynomial exactly
        spectrum = laplacian_spectrum_formula(k, p)
        poly = laplacian_charpoly_formula(k, p).expand()
        quotient = poly
        failed_at = None
        try:
            for value, mult in spectrum.pairs():
                for _ in range(mult):
                    quotient = quotient.deflate(int(value))
        except ValueError:
            failed_at = value
        ok = failed_at is None and quotient.coeffs == (1,)
        checks.append(
            Check(
                name="spectrum-divides",
                matrix="laplacian",
                status=STATUS_PASS if ok else STATUS_FAIL,
                computed=(
                    "all claimed eigenvalues divide out, quotient 1"
                    if ok
                    else f"division failed at eigenvalue {failed_at}, quotient {quotient}"
                ),
                claimed="spectrum exhausts the polynomial with multiplicities",
                detail={"total_multiplicity": spectrum.total},
            )
        )

        if "model" in graphs:
            try:
                eig = symmetric_eigenvalues(matrix_for("model", "laplacian"), NUMERIC_TOL)
            except MatrixCapExceeded as exc:
                notices.append(f"laplacian spectrum numeric check skipped: {exc}")
                eig = None
            if eig is not None:
                scale = max(1.0, max(abs(v) for v in eig.eigenvalues))
                clustered = cluster_multiplicities(eig.eigenvalues, CLUSTER_TOL * scale)
                ok, dev = summaries_match(clustered, spectrum, NUMERIC_TOL * scale)
                checks.append(
                    Check(
                        name="spectrum-numeric",
                        construction="model",
                        matrix="laplacian",
                        status=STATUS_PASS if ok else STATUS_FAIL,
                        computed=f"{len(clustered.entries)} clusters, max deviation {dev:.3e}",
                        claimed=str(list(spectrum.pairs())),
                        tolerance=_fmt(NUMERIC_TOL * scale),
                        detail={
                            "residual": eig.residual,
                            "multiplicities": [e.multiplicity for e in clustered.entries],
                        },
                    )
                )

        # energy investigation: claimed constant vs both recomputations
        claimed_energy = laplacian_energy_formula(k, p)
        with_mult = laplacian_energy(spectrum, mp.model_edge_count, mp.vertex_count, True)
        without_mult = laplacian_energy(spectrum, mp.model_edge_count, mp.vertex_count, False)
        checks.append(
            Check(
                name="laplacian-energy",
                matrix="laplacian",
                status=STATUS_PASS if with_mult == claimed_energy else STATUS_MISMATCH,
                computed=_fmt(with_mult),
                claimed=_fmt(claimed_energy),
                detail={
                    "with_multiplicity": _fmt(with_mult),
                    "without_multiplicity": _fmt(without_mult),
                    "mean_degree": _fmt(Fraction(2 * mp.model_edge_count, mp.vertex_count)),
                },
            )
        )

    # structural decomposition census
    for cname, g in graphs.items():
        rep = verify_decomposition(g, k, p)
        expected_rotation = (
            math.comb(q, 2) if cname == "model" else edge_count(build_power_graph(Cyclic(q)))
        )
        ok = (
            rep.pendant_count == mp.half_rotation
            and rep.quad_count == mp.quarter_rotation
            and not rep.incomplete_quads
            and rep.covered
            and rep.rotation_part_edges == expected_rotation
        )
        checks.append(
            Check(
                name="decomposition",
                construction=cname,
                status=STATUS_PASS if ok else STATUS_FAIL,
                computed=(
                    f"pendants={rep.pendant_count}, quads={rep.quad_count}, "
                    f"rotation_edges={rep.rotation_part_edges}, "
                    f"uncovered={len(rep.uncovered_edges)}"
                ),
                claimed=(
                    f"pendants={mp.half_rotation}, quads={mp.quarter_rotation}, "
                    f"rotation_edges={expected_rotation}, uncovered=0"
                ),
            )
        )

    if "model" in graphs and "true" in graphs:
        diff = graph_diff(graphs["model"], graphs["true"])
        expected_size = math.comb(q, 2) - edge_count(build_power_graph(Cyclic(q)))
        inside_rotations = all(
            x.a == 0 and y.a == 0 and x.b != 0 and y.b != 0 for x, y in diff
        )
        if not diff:
            status = STATUS_PASS
        elif len(diff) == expected_size and inside_rotations:
            status = STATUS_MISMATCH
        else:
            status = STATUS_FAIL
        checks.append(
            Check(
                name="model-vs-true-diff",
                status=status,
                computed=f"{len(diff)} differing edges, all inside rotations: {inside_rotations}",
                claimed="constructions coincide (clique assumption)",
                detail={
                    "expected_from_counts": expected_size,
                    "sample": [f"{x} ~ {y}" for x, y in diff[:8]],
                },
            )
        )

    # spectral radius bracket, one check per construction
    if "adjacency" in kinds:
        for cname, g in graphs.items():
            try:
                lam1 = spectral_radius(g, NUMERIC_TOL)
                if cname == "model":
                    base = float(q - 1)
                else:
                    base = spectral_radius(build_power_graph(Cyclic(q)), NUMERIC_TOL)
            except MatrixCapExceeded as exc:
                notices.append(f"radius bounds for {cname} skipped: {exc}")
                continue
            bounds = spectral_radius_bounds(k, p, base)
            tol = NUMERIC_TOL * max(1.0, lam1)
            ok = bounds.lower < lam1 <= bounds.upper_shifted_radical + tol
            checks.append(
                Check(
                    name="radius-bounds",
                    construction=cname,
                    matrix="adjacency",
                    status=STATUS_PASS if ok else STATUS_FAIL,
                    computed=_fmt(lam1),
                    claimed=(
                        f"{_fmt(bounds.lower)} < lambda1 <= "
                        f"{_fmt(bounds.upper_shifted_radical)}"
                    ),
                    tolerance=_fmt(tol),
                    detail={
                        "base": bounds.lower,
                        "upper_plain_radical": bounds.upper_plain_radical,
                        "upper_shifted_radical": bounds.upper_shifted_radical,
                        "within_plain_variant": lam1 <= bounds.upper_plain_radical + tol,
                    },
                )
            )

    if "adjacency" in kinds and "model" in graphs:
        split_check = _split_spectra_check(k, p, matrix_for("model", "adjacency"), notices)
        if split_check is not None:
            checks.append(split_check)

    report = VerificationReport(
        k=k,
        p=p,
        n=mp.vertex_count,
        theta=mp.twist,
        m_model=m_counts.get("model"),
        m_true=m_counts.get("true"),
        checks=tuple(checks),
        notices=tuple(notices),
    )
    if out is not None:
        with open(out, "w", newline="\n") as fh:
            fh.write(report.to_json())
    return report


def _split_spectra_check(k: int, p: int, model_adjacency, notices: list[str]) -> Check | None:
    """The additive split behind the radius bound: reassembly must be exact,
    the star part must have spectrum {+-sqrt(q), 0...}, the rest part must
    peak at (1 + sqrt(1 + 2q)) / 2, and the top eigenvalues must obey
    subadditivity."""
    mp = ModelParameters(k, p)
    q = mp.rotation_order
    split = model_adjacency_split(k, p)
    problems = []
    if split.full.rows != model_adjacency.rows:
        problems.append("split does not reassemble the adjacency matrix")
    try:
        star = symmetric_eigenvalues(split.star_only, NUMERIC_TOL)
        rest = symmetric_eigenvalues(split.rest, NUMERIC_TOL)
        whole = symmetric_eigenvalues(split.full, NUMERIC_TOL)
        climbed = symmetric_eigenvalues(split.clique_plus_star, NUMERIC_TOL)
    except MatrixCapExceeded as exc:
        notices.append(f"split spectra skipped: {exc}")
        return None
    n = mp.vertex_count
    root_q = math.sqrt(q)
    tol = NUMERIC_TOL * max(1.0, float(q))
    star_expected = [-root_q] + [0.0] * (n - 2) + [root_q]
    if any(abs(a - b) > tol for a, b in zip(star.eigenvalues, star_expected)):
        problems.append("star spectrum is not {+-sqrt(q), 0}")
    rest_peak_claim = (1 + math.sqrt(1 + 2 * q)) / 2
    if abs(rest.eigenvalues[-1] - rest_peak_claim) > tol:
        problems.append(
            f"rest part peaks at {rest.eigenvalues[-1]}, claimed {rest_peak_claim}"
        )
    if whole.eigenvalues[-1] > climbed.eigenvalues[-1] + rest.eigenvalues[-1] + tol:
        problems.append("top eigenvalue is not subadditive across the split")
    return Check(
        name="split-spectra",
        construction="model",
        matrix="adjacency",
        status=STATUS_PASS if not problems else STATUS_FAIL,
        computed="; ".join(problems) if problems else "split reassembles and spectra agree",
        claimed=f"star +-sqrt({q}), rest peak {_fmt(rest_peak_claim)}, subadditive top",
        tolerance=_fmt(tol),
        detail={
            "star_extremes": [star.eigenvalues[0], star.eigenvalues[-1]],
            "rest_peak": rest.eigenvalues[-1],
            "full_peak": whole.eigenvalues[-1],
        },
    )


def _sweep_one(args) -> VerificationReport:
    k, p, kinds, constructions = args
    try:
        return run_verification(k, p, kinds=kinds, constructions=constructions)
    except Exception:
        mp = ModelParameters(k, p)
        return VerificationReport(
            k=k,
            p=p,
            n=mp.vertex_count,
            theta=mp.twist,
            m_model=None,
            m_true=None,
            checks=(
                Check(
                    name="execution",
                    status=STATUS_FAIL,
                    computed="unhandled exception",
                    detail={"traceback": traceback.format_exc()},
                ),
            ),
        )


def sweep(
    ks: Iterable[int],
    ps: Iterable[int],
    kinds: Iterable[str] = MATRIX_KINDS,
    constructions: Iterable[str] = CONSTRUCTIONS,
    jobs: int = 1,
) -> list[VerificationReport]:
    """Verify every (k, p) pair of the two lists; rejects invalid parameters
    up front.  jobs > 1 fans the pairs out to a process pool; errors inside
    one pair are contained in that pair's report."""
    pairs = [(k, p) for k in ks for p in ps]
    if not pairs:
        return []
    for k, p in pairs:
        validate_parameters(k, p)
    kinds = _normalize_kinds(kinds)
    constructions = _normalize_constructions(constructions)
    work = [(k, p, kinds, constructions) for k, p in pairs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_sweep_one, work))
    return [_sweep_one(w) for w in work]


def sweep_summary_table(reports: list[VerificationReport]) -> str:
    lines = ["k p n pass mismatch fail status"]
    for r in reports:
        c = r.counts()
        lines.append(
            f"{r.k} {r.p} {r.n} {c[STATUS_PASS]} {c[STATUS_MISMATCH]} "
            f"{c[STATUS_FAIL]} {r.status}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# command line


def _parse_kinds(raw: str) -> tuple[str, ...]:
    return MATRIX_KINDS if raw == "all" else (raw,)


def _parse_constructions(raw: str) -> tuple[str, ...]:
    return CONSTRUCTIONS if raw == "both" else (raw,)


def _parse_k_range(raw: str) -> list[int]:
    if ".." in raw:
        lo, hi = raw.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in raw.split(",") if x]


def _parse_int_list(raw: str) -> list[int]:
    return [int(x) for x in raw.split(",") if x]


def _emit(payload: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(payload)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(payload)


def _cmd_verify(args) -> int:
    report = run_verification(
        args.k,
        args.p,
        kinds=_parse_kinds(args.matrix),
        constructions=_parse_constructions(args.construction),
        out=args.out,
    )
    print(f"powspec verify k={report.k} p={report.p} n={report.n}")
    for check in report.checks:
        scope = "/".join(x for x in (check.construction, check.matrix) if x)
        scope = f" ({scope})" if scope else ""
        print(f"  [{check.status}] {check.name}{scope}: {check.computed}")
    for notice in report.notices:
        print(f"  note: {notice}")
    c = report.counts()
    print(
        f"status: {report.status} ({c[STATUS_PASS]} pass, "
        f"{c[STATUS_MISMATCH]} mismatch-reported, {c[STATUS_FAIL]} fail)"
    )
    return 0 if report.status == STATUS_PASS else 1


def _cmd_sweep(args) -> int:
    reports = sweep(
        _parse_k_range(args.k),
        _parse_int_list(args.p),
        kinds=_parse_kinds(args.matrix),
        constructions=_parse_constructions(args.construction),
        jobs=args.jobs,
    )
    sys.stdout.write(sweep_summary_table(reports))
    if args.out is not None:
        payload = json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
        _emit(payload, args.out)
    return 0 if all(r.status == STATUS_PASS for r in reports) else 1


def _graph_json(g) -> str:
    data = {
        "n": g.n,
        "directed": g.directed,
        "labels": [str(lab) for lab in g.labels],
        "edges": [[i, j] for i, j in g.edges()],
    }
    return json.dumps(data, indent=2) + "\n"


def _formula_json(k: int, p: int, kind: str) -> str:
    formula = _charpoly_formula(kind, k, p)
    data = {
        "matrix": kind,
        "k": k,
        "p": p,
        "factored": {
            "scalar": formula.scalar,
            "factors": [[base.to_coeff_list(), e] for base, e in formula.factors],
        },
        "expanded": formula.expand().to_coeff_list(),
    }
    return json.dumps(data, indent=2) + "\n"


def _cmd_export(args) -> int:
    what, fmt = args.what, args.format
    if what == "graph":
        if fmt not in ("dot", "json"):
            raise ValueError("graph export supports dot or json")
        g = (
            build_model_graph(args.k, args.p)
            if args.construction == "model"
            else build_power_graph(SemidihedralType(args.k, args.p))
        )
        payload = to_dot(g) if fmt == "dot" else _graph_json(g)
    elif what == "spectrum":
        if fmt not in ("csv", "json"):
            raise ValueError("spectrum export supports csv or json")
        spectrum = laplacian_spectrum_formula(args.k, args.p)
        if fmt == "csv":
            payload = spectrum_to_csv(spectrum)
        else:
            payload = (
                json.dumps(
                    {"matrix": "laplacian", "pairs": [[int(v), m] for v, m in spectrum.pairs()]},
                    indent=2,
                )
                + "\n"
            )
    else:  # formula
        if fmt != "json":
            raise ValueError("formula export supports json only")
        payload = _formula_json(args.k, args.p, args.matrix)
    _emit(payload, args.out)
    return 0


def _cmd_formulas(args) -> int:
    k, p = args.k, args.p
    mp = ModelParameters(k, p)
    spectrum = laplacian_spectrum_formula(k, p)
    data = {
        "k": k,
        "p": p,
        "n": mp.vertex_count,
        "m_model": mp.model_edge_count,
        "theta": mp.twist,
        "charpoly": {},
        "laplacian_spectrum": [[int(v), m] for v, m in spectrum.pairs()],
        "laplacian_energy": _fmt(laplacian_energy_formula(k, p)),
    }
    for kind in MATRIX_KINDS:
        formula = _charpoly_formula(kind, k, p)
        data["charpoly"][kind] = {
            "factored": {
                "scalar": formula.scalar,
                "factors": [[base.to_coeff_list(), e] for base, e in formula.factors],
            },
            "expanded": formula.expand().to_coeff_list(),
        }
    _emit(json.dumps(data, indent=2) + "\n", args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powspec",
        description="Exact spectral verifier for power graphs of the twisted group family.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    vp = sub.add_parser("verify", help="verify one (k, p) pair")
    vp.add_argument("--k", type=int, required=True)
    vp.add_argument("--p", type=int, required=True)
    vp.add_argument("--matrix", choices=MATRIX_KINDS + ("all",), default="all")
    vp.add_argument("--construction", choices=CONSTRUCTIONS + ("both",), default="both")
    vp.add_argument("--out", default=None, help="write the JSON report here")
    vp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("sweep", help="verify a grid of (k, p) pairs")
    sp.add_argument("--k", required=True, help="range A..B or comma list")
    sp.add_argument("--p", required=True, help="comma list of odd primes")
    sp.add_argument("--matrix", choices=MATRIX_KINDS + ("all",), default="all")
    sp.add_argument("--construction", choices=CONSTRUCTIONS + ("both",), default="both")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--out", default=None, help="write the JSON report array here")
    sp.set_defaults(func=_cmd_sweep)

    ep = sub.add_parser("export", help="export a graph, spectrum, or formula")
    ep.add_argument("--what", choices=("graph", "spectrum", "formula"), required=True)
    ep.add_argument("--format", choices=("dot", "json", "csv"), required=True)
    ep.add_argument("--k", type=int, required=True)
    ep.add_argument("--p", type=int, required=True)
    ep.add_argument("--construction", choices=CONSTRUCTIONS, default="model")
    ep.add_argument("--matrix", choices=MATRIX_KINDS, default="adjacency")
    ep.add_argument("--out", default=None)
    ep.set_defaults(func=_cmd_export)

    fp = sub.add_parser("formulas", help="dump all closed forms as JSON")
    fp.add_argument("--k", type=int, required=True)
    fp.add_argument("--p", type=int, required=True)
    fp.add_argument("--out", default=None)
    fp.set_defaults(func=_cmd_formulas)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, MatrixCapExceeded, ArithmeticError) as exc:
        print(f"powspec: error: {exc}", file=sys.stderr)
        return 2
