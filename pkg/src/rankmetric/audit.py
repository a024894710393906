"""Desk-scale theorem audit producing one certificate per (claim, parameter point).

Each claim is a method ``claim_<id>`` taking concrete objects and returning a
verdict plus observed values.  A FAIL certificate stores those objects as its
witness, so :func:`reverify` can rebuild them and rerun the same check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from . import delsarte as dl
from . import gabidulin as gb
from .basis import (
    ExtensionBasis,
    all_bases_count,
    dual_basis,
    find_almost_self_dual_basis,
    find_self_dual_basis,
    gram_matrix,
    is_almost_self_dual,
    is_self_dual,
    iter_ordered_bases,
    iter_orthonormal_bases,
    self_dual_admissible,
)
from .delsarte import MatrixCode, Subspace
from .errors import ConfigError, EnumerationTooLarge, RankMetricError
from .field import MAX_FIELD_ORDER, FieldTower, make_tower, nested_coords
from .gabidulin import VectorCode
from .linalg import DEFAULT_MAX_ENUM

PASS, FAIL, NOT_APPLICABLE = "PASS", "FAIL", "NOT_APPLICABLE"

DEFAULT_TOWERS = [(2, 1, 2), (2, 1, 3), (3, 1, 2), (3, 1, 3), (2, 2, 2), (2, 2, 3), (5, 1, 2), (5, 1, 3)]
DEFAULT_ANTICODE_SPACES = [(2, 1, 2), (2, 1, 3), (3, 1, 2)]
EXHAUSTIVE_BASIS_LIMIT = 20000


@dataclass
class SuiteConfig:
    towers: list[tuple[int, int, int]] = field(default_factory=lambda: list(DEFAULT_TOWERS))
    anticode_spaces: list[tuple[int, int, int]] = field(default_factory=lambda: list(DEFAULT_ANTICODE_SPACES))
    anticode_m: list[int] = field(default_factory=lambda: [2, 3])
    cartesian_s: list[int] = field(default_factory=lambda: [1, 2, 3])
    max_enum: int = DEFAULT_MAX_ENUM
    seed: int | None = None
    out: str | None = None

    def validate(self) -> None:
        for t in list(self.towers) + list(self.anticode_spaces):
            if len(t) != 3 or any(int(x) < 1 for x in t):
                raise ConfigError(f"bad triple {t!r}")
        for p, e, m in self.towers:
            try:
                make_tower(int(p), int(e), int(m))
            except RankMetricError as exc:
                raise ConfigError(f"tower {(p, e, m)}: {exc}") from exc
        for p, e, n in self.anticode_spaces:
            try:
                make_tower(int(p), int(e), 1)
            except RankMetricError as exc:
                raise ConfigError(f"anticode space {(p, e, n)}: {exc}") from exc
        if any(int(s) < 1 for s in self.cartesian_s) or any(int(m) < 1 for m in self.anticode_m):
            raise ConfigError("s and m values must be positive")
        if self.max_enum < 1:
            raise ConfigError("max_enum must be positive")

    @classmethod
    def from_dict(cls, data: dict) -> SuiteConfig:
        known = {"towers", "anticode_spaces", "anticode_m", "cartesian_s", "max_enum", "seed", "out"}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls()
        for key in known & set(data):
            value = data[key]
            if key in ("towers", "anticode_spaces"):
                value = [tuple(int(x) for x in t) for t in value]
            setattr(cfg, key, value)
        cfg.validate()
        return cfg


@dataclass
class Certificate:
    claim_id: str
    params: dict
    verdict: str
    details: dict = field(default_factory=dict)
    witness: dict | None = None

    def to_json(self) -> dict:
        return {"claim_id": self.claim_id, "params": self.params, "verdict": self.verdict,
                "details": self.details, "witness": self.witness}

    def line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @property
    def sort_key(self) -> tuple[str, str]:
        return self.claim_id, json.dumps(self.params, sort_keys=True)


# -- witness encoding ----------------------------------------------------------

def encode_object(obj: Any) -> Any:
    if isinstance(obj, FieldTower):
        return {"type": "tower", "value": obj.descriptor()}
    if isinstance(obj, ExtensionBasis):
        return {"type": "basis", "value": {"tower": obj.tower.descriptor(), "elements": obj.to_json()}}
    if isinstance(obj, VectorCode):
        return {"type": "vector_code", "value": obj.to_json()}
    if isinstance(obj, MatrixCode):
        return {"type": "matrix_code", "value": obj.to_json()}
    if isinstance(obj, Subspace):
        return {"type": "subspace", "value": obj.to_json()}
    if isinstance(obj, (int, np.integer)):
        return {"type": "int", "value": int(obj)}
    raise TypeError(f"cannot encode {type(obj).__name__}")


def decode_object(data: dict) -> Any:
    kind, value = data["type"], data["value"]
    if kind == "tower":
        return FieldTower.from_descriptor(value)
    if kind == "basis":
        return ExtensionBasis.from_json(FieldTower.from_descriptor(value["tower"]), value["elements"])
    if kind == "vector_code":
        return VectorCode.from_json(value)
    if kind == "matrix_code":
        return MatrixCode.from_json(value)
    if kind == "subspace":
        return Subspace.from_json(value)
    if kind == "int":
        return int(value)
    raise ValueError(f"unknown witness object type {kind!r}")


def _elements_json(tower: FieldTower, M: np.ndarray) -> list:
    return [[nested_coords(tower.ext, c) for c in row] for row in np.asarray(M)]


def _tower_params(tower: FieldTower) -> dict:
    return {"p": tower.p, "e": tower.e, "q": tower.q, "m": tower.m}


class Auditor:
    """Runs claims with shared caches for the expensive enumerations."""

    def __init__(self, max_enum: int = DEFAULT_MAX_ENUM):
        self.max_enum = max_enum
        self._profiles: dict[VectorCode, gb.RankProfile | None] = {}
        self._ranges: dict[MatrixCode, dl.RankRange | None] = {}
        self.matrix_codes: dict[MatrixCode, str] = {}

    # -- cached enumerations --------------------------------------------------

    def profile(self, C: VectorCode) -> gb.RankProfile | None:
        if C not in self._profiles:
            try:
                self._profiles[C] = gb.min_rank_distance(C, self.max_enum)
            except EnumerationTooLarge:
                self._profiles[C] = None
        return self._profiles[C]

    def ranks(self, M: MatrixCode) -> dl.RankRange | None:
        if M not in self._ranges:
            try:
                self._ranges[M] = dl.rank_range(M, self.max_enum)
            except EnumerationTooLarge:
                self._ranges[M] = None
        return self._ranges[M]

    def seen(self, M: MatrixCode, origin: str) -> MatrixCode:
        self.matrix_codes.setdefault(M, origin)
        return M

    # -- dispatch --------------------------------------------------------------

    def run(self, claim_id: str, params: dict, **objects) -> Certificate:
        method = getattr(self, f"claim_{claim_id}")
        verdict, details = method(**objects)
        witness = None
        if verdict == FAIL:
            witness = {"inputs": {k: encode_object(v) for k, v in objects.items()}, "observed": details}
        return Certificate(claim_id, params, verdict, details, witness)

    # -- bases -------------------------------------------------------------------

    def claim_selfdual_existence(self, tower: FieldTower, seed: int | None = None):
        admissible = self_dual_admissible(tower.q, tower.m)
        found = find_self_dual_basis(tower, seed=seed)
        details: dict[str, Any] = {"admissible": admissible, "found": bool(found),
                                   "basis": found.to_json() if found else None}
        ok = bool(found) == admissible and (not found or is_self_dual(found))
        if all_bases_count(tower.q, tower.m) <= EXHAUSTIVE_BASIS_LIMIT:
            exhaustive = sum(1 for B in iter_ordered_bases(tower) if is_self_dual(B))
            searched = sum(1 for _ in iter_orthonormal_bases(tower))
            details.update(exhaustive_self_dual_count=exhaustive, search_self_dual_count=searched)
            ok = ok and exhaustive == searched and (exhaustive > 0) == admissible
        return (PASS if ok else FAIL), details

    def claim_almost_selfdual_existence(self, tower: FieldTower, seed: int | None = None):
        if tower.q % 2 == 0:
            return NOT_APPLICABLE, {"reason": "q even"}
        B = find_almost_self_dual_basis(tower, seed=seed)
        a = is_almost_self_dual(B)
        return (PASS if a is not None else FAIL), {"basis": B.to_json(), "a": a}

    def claim_dual_basis_pairing(self, basis: ExtensionBasis):
        D = dual_basis(basis)
        pairing = gram_matrix(basis, D)
        ok = np.array_equal(pairing, np.eye(len(basis), dtype=np.int64)) and dual_basis(D) == basis
        return (PASS if ok else FAIL), {"dual": D.to_json(), "self_dual": is_self_dual(basis)}

    # -- Gabidulin constructions ------------------------------------------------

    def _construction(self, tower: FieldTower, basis: ExtensionBasis, k: int) -> tuple[VectorCode, dict]:
        C = gb.gabidulin_code(tower, basis.codes, k)
        GG = gb.gram_product(C)
        H = gb.hull(C)
        massey = gb.is_lcd_massey(C)
        prof = self.profile(C)
        details = {
            "gram_product": _elements_json(tower, GG),
            "massey_lcd": massey,
            "hull_dim": H.k,
            "hull_equals_code": H == C,
            "massey_hull_consistent": massey == (H.k == 0),
            "enumerated": prof is not None,
            "min_rank": prof.min_rank if prof else None,
            "singleton": tower.m - k + 1,
            "mrd": (prof.min_rank == tower.m - k + 1) if prof else None,
        }
        if H.k:
            details["hull_generator"] = _elements_json(tower, H.generator)
        return C, details

    def claim_selfdual_construction(self, tower: FieldTower, basis: ExtensionBasis, k: int):
        if not is_self_dual(basis):
            return NOT_APPLICABLE, {"reason": "basis is not self-dual"}
        C, d = self._construction(tower, basis, k)
        d["gram_is_identity"] = bool(np.array_equal(gb.gram_product(C), np.eye(k, dtype=np.int64)))
        ok = d["gram_is_identity"] and d["hull_dim"] == 0 and d["massey_hull_consistent"] and d["mrd"] is not False
        return (PASS if ok else FAIL), d

    def claim_almost_selfdual_construction(self, tower: FieldTower, basis: ExtensionBasis, k: int):
        a = is_almost_self_dual(basis)
        if tower.q % 2 == 0 or a is None:
            return NOT_APPLICABLE, {"reason": "needs odd q and an almost self-dual basis"}
        C, d = self._construction(tower, basis, k)
        expected = np.eye(k, dtype=np.int64)
        if k == tower.m:
            expected[-1, -1] = a
        d["a"] = a
        d["gram_claim_holds"] = bool(np.array_equal(gb.gram_product(C), expected))
        ok = d["hull_dim"] == 0 and d["massey_hull_consistent"] and d["mrd"] is not False
        return (PASS if ok else FAIL), d

    # -- expansion ---------------------------------------------------------------

    def _expanded(self, code: VectorCode, basis: ExtensionBasis) -> MatrixCode:
        return self.seen(gb.expand_code(code, basis), "expansion")

    def claim_expansion_dimension_rank(self, code: VectorCode, basis: ExtensionBasis):
        M = self._expanded(code, basis)
        m = code.tower.m
        prof, rr = self.profile(code), self.ranks(M)
        d = {"dim": M.dim, "expected_dim": m * code.k}
        ok = M.dim == m * code.k
        if prof and rr:
            d.update(min_rank_vector=prof.min_rank, min_rank_matrix=rr.min_rank,
                     distribution_equal=prof.counts == rr.counts)
            ok = ok and prof.min_rank == rr.min_rank and prof.counts == rr.counts
        else:
            d["enumerated"] = False
        return (PASS if ok else FAIL), d

    def claim_expansion_mrd_equiv(self, code: VectorCode, basis: ExtensionBasis):
        if code.n > code.tower.m or code.k == 0:
            return NOT_APPLICABLE, {"reason": "needs 0 < k and n <= m"}
        M = self._expanded(code, basis)
        prof, rr = self.profile(code), self.ranks(M)
        if not (prof and rr):
            return NOT_APPLICABLE, {"reason": "beyond enumeration cap"}
        vec = gb.is_mrd(code, profile=prof)
        mat = dl.is_mrd_delsarte(M, ranks=rr)
        return (PASS if vec == mat else FAIL), {"gabidulin_mrd": vec, "delsarte_mrd": mat}

    def claim_delsarte_bound(self, code: VectorCode, basis: ExtensionBasis):
        M = self._expanded(code, basis)
        rr = self.ranks(M)
        if not rr or not rr.has_nonzero:
            return NOT_APPLICABLE, {"reason": "zero code or beyond enumeration cap"}
        bound = dl.delsarte_bound(M.n, M.m, rr.min_rank)
        big = max(M.n, M.m)
        plus_form = (M.n * M.m + M.dim) / big + 1
        d = {"dim": M.dim, "min_rank": rr.min_rank, "dim_bound": bound, "attained": M.dim == bound,
             "rank_bound_minus_form": min(M.n, M.m) - M.dim / big + 1, "rank_bound_plus_form": plus_form}
        return (PASS if M.dim <= bound else FAIL), d

    def claim_expansion_dual_commutation(self, code: VectorCode, basis: ExtensionBasis):
        if not is_self_dual(basis):
            return NOT_APPLICABLE, {"reason": "basis is not self-dual"}
        M = self._expanded(code, basis)
        lhs = self.seen(gb.expand_code(gb.dual_code(code), basis), "expansion of dual")
        rhs = self.seen(dl.dual(M), "dual of expansion")
        return (PASS if lhs == rhs else FAIL), {"dim_expanded_dual": lhs.dim, "dim_dual_expanded": rhs.dim}

    def claim_expansion_lcd_equiv(self, code: VectorCode, basis: ExtensionBasis):
        if not is_self_dual(basis):
            return NOT_APPLICABLE, {"reason": "basis is not self-dual"}
        M = self._expanded(code, basis)
        H = gb.hull(code)
        meet = self.seen(dl.intersect(M, dl.dual(M)), "hull of expansion")
        hull_image = gb.expand_code(H, basis)
        gab_lcd, del_lcd = H.k == 0, meet.dim == 0
        ok = gab_lcd == del_lcd and hull_image == meet
        return (PASS if ok else FAIL), {"gabidulin_lcd": gab_lcd, "delsarte_lcd": del_lcd,
                                        "hull_commutes": hull_image == meet}

    def claim_expansion_power_lcd_mrd(self, code: VectorCode, basis: ExtensionBasis, s: int):
        M = self._expanded(code, basis)
        Ms = self.seen(dl.matrix_cartesian_power(M, s), "cartesian power of expansion")
        structural = Ms == gb.expand_code(gb.cartesian_power(code, s), basis)
        lcd = dl.is_lcd(Ms)
        rr = self.ranks(Ms)
        mrd = dl.is_mrd_delsarte(Ms, ranks=rr) if rr else None
        d = {"lcd": lcd, "mrd": mrd, "structural": structural, "self_dual_basis": is_self_dual(basis),
             "base_lcd": dl.is_lcd(M)}
        ok = structural and lcd and mrd is not False
        return (PASS if ok else FAIL), d

    # -- cartesian powers ------------------------------------------------------------

    def claim_cartesian_dual_identity(self, code: VectorCode, s: int):
        lhs = gb.dual_code(gb.cartesian_power(code, s))
        rhs = gb.cartesian_power(gb.dual_code(code), s)
        return (PASS if lhs == rhs else FAIL), {"dual_dim": lhs.k}

    def claim_cartesian_lcd_iff(self, code: VectorCode, s: int):
        h, hs = gb.hull(code).k, gb.hull(gb.cartesian_power(code, s)).k
        d = {"hull_dim": h, "power_hull_dim": hs, "massey": gb.is_lcd_massey(code)}
        return (PASS if (h == 0) == (hs == 0) and hs == s * h else FAIL), d

    def claim_cartesian_min_rank(self, code: VectorCode, s: int):
        prof, pprof = self.profile(code), self.profile(gb.cartesian_power(code, s))
        if not (prof and pprof):
            return NOT_APPLICABLE, {"reason": "beyond enumeration cap"}
        return (PASS if prof.min_rank == pprof.min_rank else FAIL), {
            "min_rank": prof.min_rank, "power_min_rank": pprof.min_rank}

    def claim_cartesian_mrd_iff(self, code: VectorCode, s: int):
        if s < 2 or not 1 <= code.k < code.n:
            return NOT_APPLICABLE, {"reason": "needs s >= 2 and 1 <= k < n"}
        prof = self.profile(code)
        power = gb.cartesian_power(code, s)
        pprof = self.profile(power)
        if not (prof and pprof):
            return NOT_APPLICABLE, {"reason": "beyond enumeration cap"}
        if not gb.is_mrd(code, profile=prof):
            return NOT_APPLICABLE, {"reason": "base code is not MRD"}
        power_mrd = gb.is_mrd(power, profile=pprof)
        square = code.n == code.tower.m
        return (PASS if power_mrd == square else FAIL), {"power_mrd": power_mrd, "n_equals_m": square}

    # -- ambient restrictions and anticodes ----------------------------------------

    def claim_restriction_dimension(self, U: Subspace, m: int):
        A = self.seen(dl.ambient_restriction(U, m), "restriction")
        return (PASS if A.dim == m * U.dim else FAIL), {"dim": A.dim, "dim_U": U.dim}

    def claim_restriction_dual(self, U: Subspace, m: int):
        A = dl.ambient_restriction(U, m)
        lhs = self.seen(dl.ambient_restriction(U.dual(), m), "restriction")
        rhs = self.seen(dl.dual(A), "dual of restriction")
        return (PASS if lhs == rhs else FAIL), {"dim": lhs.dim}

    def claim_restriction_sum(self, U: Subspace, m: int):
        Ud = U.dual()
        lhs = self.seen(dl.ambient_restriction(U + Ud, m), "restriction")
        rhs = self.seen(dl.code_sum(dl.ambient_restriction(U, m), dl.ambient_restriction(Ud, m)), "sum")
        return (PASS if lhs == rhs else FAIL), {"dim": lhs.dim}

    def claim_restriction_intersection(self, U: Subspace, m: int):
        Ud = U.dual()
        lhs = self.seen(dl.intersect(dl.ambient_restriction(U, m), dl.ambient_restriction(Ud, m)), "intersection")
        rhs = self.seen(dl.ambient_restriction(U & Ud, m), "restriction")
        return (PASS if lhs == rhs else FAIL), {"dim": lhs.dim, "dim_U_hull": (U & Ud).dim}

    def claim_restriction_lcd_iff(self, U: Subspace, m: int):
        A = dl.ambient_restriction(U, m)
        u, a = U.is_lcd(), dl.is_lcd(A)
        return (PASS if u == a else FAIL), {"subspace_lcd": u, "code_lcd": a}

    def claim_anticode_bound(self, U: Subspace, m: int):
        A = dl.ambient_restriction(U, m)
        rows = []
        ok = True
        for C in (A, dl.dual(A)):
            rr = self.ranks(C)
            if rr is None:
                return NOT_APPLICABLE, {"reason": "beyond enumeration cap"}
            bound = max(C.n, C.m) * rr.max_rank
            rows.append({"dim": C.dim, "max_rank": rr.max_rank, "bound": bound})
            ok = ok and C.dim <= bound
        return (PASS if ok else FAIL), {"code": rows[0], "dual": rows[1]}

    def claim_dual_of_anticode(self, U: Subspace, m: int):
        A = dl.ambient_restriction(U, m)
        rr = self.ranks(A)
        if rr is None:
            return NOT_APPLICABLE, {"reason": "beyond enumeration cap"}
        if not dl.is_optimal_anticode(A, ranks=rr):
            return NOT_APPLICABLE, {"reason": "not an optimal anticode", "dim": A.dim, "max_rank": rr.max_rank}
        D = dl.dual(A)
        rd = self.ranks(D)
        if rd is None:
            return NOT_APPLICABLE, {"reason": "beyond enumeration cap"}
        ok = dl.is_optimal_anticode(D, ranks=rd)
        return (PASS if ok else FAIL), {"dual_dim": D.dim, "dual_max_rank": rd.max_rank}

    def claim_anticode_lcd_sufficient(self, U: Subspace, m: int):
        A = dl.ambient_restriction(U, m)
        rr = self.ranks(A)
        if rr is None:
            return NOT_APPLICABLE, {"reason": "beyond enumeration cap"}
        if A.dim == 0 or not dl.is_optimal_anticode(A, ranks=rr):
            return NOT_APPLICABLE, {"reason": "not a nonzero optimal anticode"}
        criterion = dl.lcd_anticode_criterion(A, ranks=rr)
        lcd = dl.is_lcd(A)
        d = {"criterion": criterion, "lcd": lcd, "min_rank": rr.min_rank, "max_rank": rr.max_rank,
             "optimal": True}
        return (PASS if lcd or not criterion else FAIL), d

    def claim_delsarte_duality(self, code: MatrixCode):
        D = dl.dual(code)
        ok = code.dim + D.dim == code.n * code.m and dl.dual(D) == code
        return (PASS if ok else FAIL), {"dim": code.dim, "dual_dim": D.dim}


# -- the suite ---------------------------------------------------------------------

def _code_params(tower: FieldTower, label: str, code: VectorCode, **extra) -> dict:
    return {**_tower_params(tower), "code": label, "n": code.n, "k": code.k, **extra}


def _base_codes(tower: FieldTower, sd, almost) -> list[tuple[str, ExtensionBasis | None, VectorCode]]:
    """Gabidulin codes from the found bases plus two small comparison codes."""
    out = []
    for label, B in (("gabidulin/selfdual", sd), ("gabidulin/almost", almost)):
        if B is None:
            continue
        for k in range(1, tower.m + 1):
            out.append((label, B, gb.gabidulin_code(tower, B.codes, k)))
    short_from = sd or almost
    if short_from is not None and tower.m >= 3:
        out.append(("gabidulin_short", None, gb.gabidulin_code(tower, short_from.codes[:-1], 1)))
    out.append(("repetition", None, VectorCode(tower, [[1, 1]])))
    return out


def run_suite(cfg: SuiteConfig, auditor: Auditor | None = None) -> list[Certificate]:
    cfg.validate()
    aud = auditor or Auditor(cfg.max_enum)
    certs: list[Certificate] = []
    seed_param = {} if cfg.seed is None else {"seed": cfg.seed}

    for p, e, m in cfg.towers:
        tower = make_tower(int(p), int(e), int(m))
        tp = {**_tower_params(tower), **seed_param}
        certs.append(aud.run("selfdual_existence", tp, tower=tower, **({} if cfg.seed is None else {"seed": cfg.seed})))
        certs.append(aud.run("almost_selfdual_existence", tp, tower=tower,
                             **({} if cfg.seed is None else {"seed": cfg.seed})))

        found = find_self_dual_basis(tower, seed=cfg.seed)
        sd = found if found else None
        almost = find_almost_self_dual_basis(tower, seed=cfg.seed) if tower.q % 2 else None

        for label, B in (("polynomial", ExtensionBasis.polynomial(tower)), ("selfdual", sd), ("almost", almost)):
            if B is not None:
                certs.append(aud.run("dual_basis_pairing", {**tp, "basis": label}, basis=B))

        for k in range(1, tower.m + 1):
            kp = {**tp, "n": tower.m, "k": k}
            if sd is not None:
                certs.append(aud.run("selfdual_construction", kp, tower=tower, basis=sd, k=k))
            if almost is not None:
                certs.append(aud.run("almost_selfdual_construction", kp, tower=tower, basis=almost, k=k))
        if sd is None:
            certs.append(Certificate("selfdual_construction", tp, NOT_APPLICABLE,
                                     {"reason": "no self-dual basis exists"}))
        if almost is None:
            certs.append(Certificate("almost_selfdual_construction", tp, NOT_APPLICABLE, {"reason": "q even"}))

        expand_bases = [("selfdual", sd), ("polynomial", ExtensionBasis.polynomial(tower))]
        codes = _base_codes(tower, sd, almost)
        for label, gen_basis, C in codes:
            if gen_basis is None:
                continue
            for blabel, B in expand_bases:
                if B is None:
                    continue
                params = _code_params(tower, label, C, expand_basis=blabel)
                for claim in ("expansion_dimension_rank", "expansion_mrd_equiv", "delsarte_bound",
                              "expansion_dual_commutation", "expansion_lcd_equiv"):
                    certs.append(aud.run(claim, params, code=C, basis=B))
            for s in cfg.cartesian_s:
                params = _code_params(tower, label, C, s=int(s), expand_basis=label.split("/")[1])
                certs.append(aud.run("expansion_power_lcd_mrd", params, code=C, basis=gen_basis, s=int(s)))

        for label, _, C in codes:
            for s in cfg.cartesian_s:
                params = _code_params(tower, label, C, s=int(s))
                for claim in ("cartesian_dual_identity", "cartesian_lcd_iff", "cartesian_min_rank",
                              "cartesian_mrd_iff"):
                    certs.append(aud.run(claim, params, code=C, s=int(s)))

    for p, e, n in cfg.anticode_spaces:
        F = make_tower(int(p), int(e), 1).base
        for m in cfg.anticode_m:
            for U in dl.iter_subspaces(F, int(n)):
                params = {"p": int(p), "e": int(e), "q": F.order, "n": int(n), "m": int(m),
                          "U": U.basis.tolist()}
                for claim in ("restriction_dimension", "restriction_dual", "restriction_sum",
                              "restriction_intersection", "restriction_lcd_iff", "anticode_bound",
                              "dual_of_anticode", "anticode_lcd_sufficient"):
                    certs.append(aud.run(claim, params, U=U, m=int(m)))

    for M, origin in list(aud.matrix_codes.items()):
        params = {"q": M.field.order, "n": M.n, "m": M.m, "dim": M.dim, "origin": origin,
                  "basis": M.basis.tolist()}
        certs.append(aud.run("delsarte_duality", params, code=M))

    certs.sort(key=lambda c: c.sort_key)
    return certs


def worst_verdict(certs: Iterable[Certificate]) -> str:
    verdicts = {c.verdict for c in certs}
    return FAIL if FAIL in verdicts else PASS


def reverify(cert: Certificate, max_enum: int = DEFAULT_MAX_ENUM) -> Certificate:
    """Rebuild a FAIL certificate's inputs from its witness and rerun the claim."""
    if not cert.witness:
        raise ValueError("certificate carries no witness")
    objects = {k: decode_object(v) for k, v in cert.witness["inputs"].items()}
    return Auditor(max_enum).run(cert.claim_id, cert.params, **objects)


def write_certificates(certs: list[Certificate], stream, fmt: str = "json") -> None:
    if fmt == "json":
        for c in certs:
            stream.write(c.line() + "\n")
    elif fmt == "csv":
        import csv

        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(["claim_id", "verdict", "params", "details", "witness"])
        for c in certs:
            dump = lambda x: json.dumps(x, sort_keys=True, separators=(",", ":"))  # noqa: E731
            writer.writerow([c.claim_id, c.verdict, dump(c.params), dump(c.details), dump(c.witness)])
    else:
        raise ConfigError(f"unknown format {fmt!r}")


__all__ = [
    "Auditor",
    "Certificate",
    "FAIL",
    "MAX_FIELD_ORDER",
    "NOT_APPLICABLE",
    "PASS",
    "SuiteConfig",
    "reverify",
    "run_suite",
    "worst_verdict",
    "write_certificates",
]
