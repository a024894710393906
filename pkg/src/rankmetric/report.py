"""Build an object from plain parameters and report its derived attributes as JSON."""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from . import delsarte as dl
from . import gabidulin as gb
from .basis import (
    ExtensionBasis,
    dual_basis,
    find_almost_self_dual_basis,
    find_self_dual_basis,
    gram_matrix,
    is_almost_self_dual,
    is_self_dual,
    self_dual_admissible,
)
from .delsarte import MatrixCode, Subspace
from .errors import ConfigError, EnumerationTooLarge, NotABasis
from .field import FieldTower, make_tower, nested_coords
from .gabidulin import VectorCode
from .linalg import DEFAULT_MAX_ENUM

KINDS = ("field", "self-dual-basis", "almost-self-dual-basis", "gabidulin", "expand", "anticode",
         "dual-basis", "vector-code", "matrix-code")

LCD_VECTOR = "G G^T nonsingular"
LCD_MATRIX = "C meets its trace dual only in 0"
MRD_VECTOR = "m k = max(n, m) (min(n, m) - d_r + 1)"
MRD_MATRIX = "dim = max(n, m) (min(n, m) - d + 1)"


def _loads(value):
    return json.loads(value) if isinstance(value, str) else value


def tower_from_params(params: dict) -> FieldTower:
    if params.get("tower") is not None:
        return FieldTower.from_descriptor(_loads(params["tower"]))
    if params.get("p") is None:
        raise ConfigError("give p (and optionally e, m) or a tower descriptor")
    return make_tower(int(params["p"]), int(params.get("e") or 1), int(params.get("m") or 1))


def resolve_basis(tower: FieldTower, choice, seed: int | None = None) -> ExtensionBasis:
    """``choice`` is 'self-dual', 'almost', 'polynomial', or a JSON list of element coordinates."""
    choice = "polynomial" if choice is None else choice
    if isinstance(choice, ExtensionBasis):
        return choice
    if choice == "self-dual":
        B = find_self_dual_basis(tower, seed=seed)
        if not B:
            raise NotABasis(B.reason)
        return B
    if choice in ("almost", "almost-self-dual"):
        return find_almost_self_dual_basis(tower, seed=seed)
    if choice == "polynomial":
        return ExtensionBasis.polynomial(tower)
    return ExtensionBasis.from_json(tower, _loads(choice))


def _mat_json(tower_field, M) -> list:
    return [[nested_coords(tower_field, int(c)) for c in row] for row in np.asarray(M)]


def _vector_code_report(C: VectorCode, max_enum: int) -> dict:
    tower = C.tower
    out: dict[str, Any] = {"code": C.to_json(), "n": C.n, "k": C.k}
    out["gram_product"] = _mat_json(tower.ext, gb.gram_product(C)) if C.k else []
    H = gb.hull(C)
    out["hull_dim"] = H.k
    out["lcd"] = {"value": gb.is_lcd_massey(C), "criterion": LCD_VECTOR}
    out["lcd_by_hull"] = H.k == 0
    try:
        prof = gb.min_rank_distance(C, max_enum) if C.k else None
    except EnumerationTooLarge:
        prof = None
        out["enumerated"] = False
    if prof is not None:
        out["d_r"] = prof.min_rank
        out["rank_distribution"] = prof.to_json()["counts"]
        out["mrd"] = {"value": gb.is_mrd(C, profile=prof), "criterion": MRD_VECTOR}
    return out


def _matrix_code_report(M: MatrixCode, max_enum: int) -> dict:
    out: dict[str, Any] = {"code": M.to_json(), "n": M.n, "m": M.m, "dim": M.dim}
    D = dl.dual(M)
    out["dual_dim"] = D.dim
    out["hull_dim"] = dl.intersect(M, D).dim
    out["lcd"] = {"value": dl.is_lcd(M), "criterion": LCD_MATRIX}
    try:
        rr = dl.rank_range(M, max_enum)
    except EnumerationTooLarge:
        out["enumerated"] = False
        return out
    out["rank_distribution"] = {str(r): c for r, c in sorted(rr.counts.items())}
    out["max_rank"] = rr.max_rank
    if rr.has_nonzero:
        out["d"] = rr.min_rank
        out["mrd"] = {"value": dl.is_mrd_delsarte(M, ranks=rr), "criterion": MRD_MATRIX}
        out["optimal_anticode"] = dl.is_optimal_anticode(M, ranks=rr)
    return out


def _gabidulin(params: dict, tower: FieldTower) -> VectorCode:
    if params.get("code") is not None:
        return VectorCode.from_json(_loads(params["code"]))
    if params.get("k") is None:
        raise ConfigError("gabidulin needs k")
    seed = params.get("seed")
    B = resolve_basis(tower, params.get("basis"), seed)
    n = int(params.get("n") or tower.m)
    C = gb.gabidulin_code(tower, B.codes[:n], int(params["k"]))
    s = int(params.get("s") or 1)
    return gb.cartesian_power(C, s) if s > 1 else C


def construct_and_report(kind: str, params: dict) -> dict:
    """Serialized object plus derived attributes; raises RankMetricError on bad input."""
    if kind not in KINDS:
        raise ConfigError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    max_enum = int(params.get("max_enum") or DEFAULT_MAX_ENUM)
    seed = params.get("seed")
    report: dict[str, Any] = {"kind": kind}

    if kind == "anticode":
        p = params.get("p")
        if p is None:
            raise ConfigError("anticode needs p")
        F = make_tower(int(p), int(params.get("e") or 1), 1).base
        n, m = int(params["n"]), int(params["m"])
        U = Subspace.span(F, n, _loads(params.get("U") or []))
        A = dl.ambient_restriction(U, m)
        report.update(U=U.to_json(), dim_U=U.dim, U_lcd=U.is_lcd())
        report.update(_matrix_code_report(A, max_enum))
        rr = dl.rank_range(A, max_enum)
        optimal = dl.is_optimal_anticode(A, ranks=rr)
        report["optimal"] = optimal
        if A.dim and optimal:
            report["criterion"] = dl.lcd_anticode_criterion(A, ranks=rr)
        return report

    if kind == "matrix-code":
        M = MatrixCode.from_json(_loads(params["code"]))
        report.update(_matrix_code_report(M, max_enum))
        return report

    if kind == "vector-code":
        C = VectorCode.from_json(_loads(params["code"]))
        report["tower"] = C.tower.descriptor()
        report.update(_vector_code_report(C, max_enum))
        return report

    tower = tower_from_params(params)
    report["tower"] = tower.descriptor()

    if kind == "field":
        report.update(q=tower.q, order=tower.order, self_dual_admissible=self_dual_admissible(tower.q, tower.m),
                      frobenius_matrix=tower.frobenius_matrix.tolist())
    elif kind == "self-dual-basis":
        B = find_self_dual_basis(tower, seed=seed)
        report.update(exists=bool(B), admissible=self_dual_admissible(tower.q, tower.m))
        if B:
            report.update(basis=B.to_json(), gram=gram_matrix(B).tolist())
        else:
            report["reason"] = B.reason
    elif kind == "almost-self-dual-basis":
        B = find_almost_self_dual_basis(tower, seed=seed)
        report.update(basis=B.to_json(), a=is_almost_self_dual(B), gram=gram_matrix(B).tolist(),
                      self_dual=is_self_dual(B))
    elif kind == "dual-basis":
        B = resolve_basis(tower, params.get("basis"), seed)
        D = dual_basis(B)
        report.update(basis=B.to_json(), dual=D.to_json(), pairing=gram_matrix(B, D).tolist(),
                      self_dual=is_self_dual(B))
    elif kind == "gabidulin":
        report.update(_vector_code_report(_gabidulin(params, tower), max_enum))
    elif kind == "expand":
        C = _gabidulin({**params, "s": 1}, tower)
        B = resolve_basis(tower, params.get("expand_basis") or params.get("basis"), seed)
        M = gb.expand_code(C, B)
        s = int(params.get("s") or 1)
        if s > 1:
            M = dl.matrix_cartesian_power(M, s)
        report.update(expand_basis=B.to_json(), self_dual_basis=is_self_dual(B), s=s)
        report.update(_matrix_code_report(M, max_enum))
    return report


__all__ = ["KINDS", "construct_and_report", "resolve_basis", "tower_from_params"]
