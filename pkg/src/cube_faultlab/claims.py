"""Catalog of verifiable claims about fault-tolerant hypercube structure.

Each claim pairs a published-value statement (a connectivity, a fault
diameter, an extremal family's behavior, or a structural property used
by the router) with a desk-scale check that recomputes it from scratch
through the brute-force oracle, the metrics engine, or direct
enumeration.  Claim ids follow the package's claim catalog numbering
(lem/thm prefix plus instance parameters), e.g. "lem2.4(n=5,m=3)" or
"thm3.3"; the verify CLI subcommand accepts these ids.

Oracle calls are cached per (n, mode, budget), so claims that share a
scan (several theorems constrain the same sweep) pay for it once per
process.  Randomized claims draw from seeds fixed by the claim id, so
every run checks the identical case list.
"""

from __future__ import annotations

import random
import time
import zlib
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Sequence

from .core import (
    Subcube,
    Vertex,
    common_neighbors,
    enumerate_subcubes,
    hamming,
    subcube_vertices,
)
from .errors import InvariantViolation
from .faults import (
    FaultMode,
    adversarial_q1_family,
    adversarial_subcube_family,
    enumerate_families,
    restrict_along,
    sample_families,
    validate_family,
)
from .metrics import SurvivalGraph, bfs_distance, component_of, diameter, is_connected
from .oracle import connectivity_bruteforce, fault_diameter_bruteforce
from .router import pick_crossing_dimension

RANDOM_CASES = 10_000

_jobs = 1


def _seed(claim_id: str) -> int:
    return zlib.crc32(claim_id.encode())


@lru_cache(maxsize=None)
def _kappa(n: int, mode_label: str):
    return connectivity_bruteforce(n, FaultMode.from_label(mode_label), jobs=_jobs)


@lru_cache(maxsize=None)
def _fd(n: int, mode_label: str, budget: int):
    return fault_diameter_bruteforce(
        n, FaultMode.from_label(mode_label), budget, jobs=_jobs
    )


@dataclass
class Claim:
    claim_id: str
    max_n: int
    params: dict
    statement: str
    expected: str
    run: Callable[[], tuple[str, bool, list[str]]]


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    params: dict
    statement: str
    expected: str
    computed: str
    status: str
    witness: tuple[str, ...]
    seconds: float

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_record(self) -> dict:
        return {
            "claim": self.claim_id,
            "params": dict(self.params),
            "statement": self.statement,
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "witness": list(self.witness),
            "seconds": round(self.seconds, 3),
        }


# ---------------------------------------------------------------------------
# individual checks


def _check_two_modes(n: int, expected: int, label_a: str, label_b: str, name_a: str, name_b: str):
    ra = _kappa(n, label_a)
    rb = _kappa(n, label_b)
    ok = ra.kappa == expected and rb.kappa == expected
    computed = (
        str(ra.kappa) if ra.kappa == rb.kappa else f"{name_a}={ra.kappa}, {name_b}={rb.kappa}"
    )
    return computed, ok, ra.witness.patterns()


def _check_fd(n: int, mode_label: str, budget: int, expected: int, at_most: bool = False):
    r = _fd(n, mode_label, budget)
    ok = r.value <= expected if at_most else r.value == expected
    return str(r.value), ok, r.witness.patterns()


def _check_fd_pair(n: int, budget: int, expected: int):
    rs = _fd(n, "structure:1", budget)
    rb = _fd(n, "substructure", budget)
    ok = rs.value == expected and rb.value == expected
    computed = (
        str(rs.value)
        if rs.value == rb.value
        else f"structure={rs.value}, substructure={rb.value}"
    )
    return computed, ok, rb.witness.patterns()


def _check_common_neighbors_exhaustive(n: int):
    bad = 0
    witness: list[str] = []
    for ub in range(1 << n):
        u = Vertex(ub, n)
        for vb in range(ub + 1, 1 << n):
            v = Vertex(vb, n)
            got = len(common_neighbors(u, v))
            want = 2 if hamming(u, v) == 2 else 0
            if got != want:
                bad += 1
                if not witness:
                    witness = [u.pattern, v.pattern]
    return f"{bad} violations", bad == 0, witness


def _check_common_neighbors_random(n: int, seed: int):
    rng = random.Random(seed)
    bad = 0
    witness: list[str] = []
    for _ in range(RANDOM_CASES):
        ub = rng.randrange(1 << n)
        vb = rng.randrange(1 << n)
        if ub == vb:
            continue
        u, v = Vertex(ub, n), Vertex(vb, n)
        got = len(common_neighbors(u, v))
        want = 2 if hamming(u, v) == 2 else 0
        if got != want:
            bad += 1
            if not witness:
                witness = [u.pattern, v.pattern]
    return f"{bad} violations", bad == 0, witness


def _subcube_closed_under_common_neighbors(s: Subcube) -> tuple[bool, list[str]]:
    verts = sorted(subcube_vertices(s), key=lambda x: x.bits)
    inside = set(verts)
    for u, v in combinations(verts, 2):
        if not common_neighbors(u, v) <= inside:
            return False, [s.pattern, u.pattern, v.pattern]
    return True, []


def _check_subcube_closure_exhaustive(n: int):
    bad = 0
    witness: list[str] = []
    for k in range(1, n + 1):
        for s in enumerate_subcubes(n, k):
            ok, w = _subcube_closed_under_common_neighbors(s)
            if not ok:
                bad += 1
                witness = witness or w
    return f"{bad} violations", bad == 0, witness


def _check_subcube_closure_random(n: int, seed: int):
    rng = random.Random(seed)
    bad = 0
    witness: list[str] = []
    size = 1 << n
    for _ in range(RANDOM_CASES):
        k = rng.randint(1, n)
        free = 0
        for p in rng.sample(range(n), k):
            free |= 1 << p
        base = rng.randrange(size) & ~free
        s = Subcube(free, base, n)
        vs = sorted(s.vertex_bits())
        ub, vb = rng.sample(vs, 2)
        u, v = Vertex(ub, n), Vertex(vb, n)
        if not common_neighbors(u, v) <= subcube_vertices(s):
            bad += 1
            witness = witness or [s.pattern, u.pattern, v.pattern]
    return f"{bad} violations", bad == 0, witness


def _check_connected_removal_diameter(n: int):
    """Removals of fewer than half the vertices keep the diameter >= n."""
    labels = range(1 << n)
    worst = None
    witness: list[str] = []
    for size in range(0, (1 << (n - 1))):
        for removed in combinations(labels, size):
            g = SurvivalGraph(n, frozenset(removed))
            if not is_connected(g):
                continue
            d = diameter(g)
            if worst is None or d < worst:
                worst = d
                witness = [Vertex(w, n).pattern for w in removed]
    assert worst is not None
    return str(worst), worst >= n, witness


def _check_small_removal_diameter(n: int):
    """Any <= n-2 vertex faults leave the diameter exactly n."""
    lo, hi = None, None
    witness: list[str] = []
    for size in range(0, n - 1):
        for fam in enumerate_families(n, FaultMode.structure(0), size):
            g = SurvivalGraph.from_family(fam)
            d = diameter(g)
            if d is None:
                return "disconnected", False, fam.patterns()
            if hi is None or d > hi:
                hi = d
                witness = fam.patterns()
            lo = d if lo is None else min(lo, d)
    computed = str(lo) if lo == hi else f"min={lo}, max={hi}"
    return computed, lo == hi == n, witness


def _check_crossing_dimension_random(n: int, seed: int):
    """Symmetric pairs keep a safe crossing coordinate under n-1 small faults."""
    rng = random.Random(seed)
    mode = FaultMode.subcube(n - 3)
    bad = 0
    witness: list[str] = []
    full = (1 << n) - 1
    cases = 0
    while cases < RANDOM_CASES:
        size = rng.randint(0, n - 1)
        fam = sample_families(n, mode, size, 1, rng.randrange(1 << 30))[0]
        removed = {b for s in fam.elements for b in s.vertex_bits()}
        ub = rng.randrange(1 << n)
        if ub in removed or (ub ^ full) in removed:
            continue
        cases += 1
        u, v = Vertex(ub, n), Vertex(ub ^ full, n)
        try:
            pick_crossing_dimension(u, v, fam)
        except InvariantViolation:
            bad += 1
            witness = witness or [u.pattern, *fam.patterns()]
    return f"{bad} violations", bad == 0, witness


def _check_pinned_edge_family(n: int):
    """The n-2 parallel edges disconnect one half but only stretch the cube."""
    fam = adversarial_q1_family(n)
    witness = fam.patterns()
    if validate_family(fam) is not None or fam.size != n - 2:
        return "invalid family", False, witness
    half = restrict_along(fam, n, 0)
    gh = SurvivalGraph.from_family(half)
    if is_connected(gh):
        return "half stays connected", False, witness
    comp = component_of(gh, Vertex(0, n - 1))
    if {x.bits for x in comp} != {0, 1 << (n - 2)}:
        return "pinned component is not the expected edge", False, witness
    g = SurvivalGraph.from_family(fam)
    if not is_connected(g):
        return "whole cube disconnected", False, witness
    d = diameter(g)
    return str(d), d == n + 1, witness


def _check_blocking_subcube_family(n: int, m: int):
    """The n-m-1 disjoint m-cubes force an n+1 step route between far corners."""
    fam = adversarial_subcube_family(n, m)
    witness = fam.patterns()
    if validate_family(fam) is not None or fam.size != n - m - 1:
        return "invalid family", False, witness
    half = restrict_along(fam, n, 0)
    if is_connected(SurvivalGraph.from_family(half)):
        return "half stays connected", False, witness
    g = SurvivalGraph.from_family(fam)
    if not is_connected(g):
        return "whole cube disconnected", False, witness
    x = Vertex(0, n)
    y = Vertex(((1 << n) - 1) ^ 1, n)
    d = bfs_distance(g, x, y)
    return str(d), d is not None and d >= n + 1, witness


# ---------------------------------------------------------------------------
# the registry


def _add(reg: dict[str, Claim], claim_id: str, max_n: int, params: dict,
         statement: str, expected: str, run) -> None:
    if claim_id in reg:
        raise ValueError(f"duplicate claim id {claim_id}")
    reg[claim_id] = Claim(claim_id, max_n, params, statement, expected, run)


def _build_registry() -> dict[str, Claim]:
    reg: dict[str, Claim] = {}

    for n in (3, 4):
        _add(
            reg, f"lem2.2(n={n})", n, {"n": n},
            f"vertex fault diameter of Q_{n} (budget {n - 1}) equals {n + 1}",
            str(n + 1),
            lambda n=n: _check_fd(n, "structure:0", n - 1, n + 1),
        )

    for n in (3, 4, 5):
        _add(
            reg, f"lem2.3(n={n})", n, {"n": n},
            f"edge-structure and substructure connectivity of Q_{n} equal {n - 1}",
            str(n - 1),
            lambda n=n: _check_two_modes(
                n, n - 1, "structure:1", "substructure", "kappa", "kappa^s"
            ),
        )

    for n, m in ((3, 1), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3)):
        _add(
            reg, f"lem2.4(n={n},m={m})", n, {"n": n, "m": m},
            f"Q_{m}-structure and subcube connectivity of Q_{n} equal {n - m}",
            str(n - m),
            lambda n=n, m=m: _check_two_modes(
                n, n - m, f"structure:{m}", f"subcube:{m}", "kappa", "kappa^sc"
            ),
        )

    for n in (3, 4, 5):
        _add(
            reg, f"lem2.5(n={n})", n, {"n": n},
            f"distinct vertices of Q_{n} have 2 common neighbors at Hamming "
            "distance 2 and none otherwise (exhaustive)",
            "0 violations",
            lambda n=n: _check_common_neighbors_exhaustive(n),
        )
    _add(
        reg, "lem2.5(n=6)", 6, {"n": 6},
        "common-neighbor counts in Q_6 (randomized)",
        "0 violations",
        lambda: _check_common_neighbors_random(6, _seed("lem2.5(n=6)")),
    )

    for n in (3, 4):
        _add(
            reg, f"cor2.6(n={n})", n, {"n": n},
            f"subcubes of Q_{n} are closed under common neighbors (exhaustive)",
            "0 violations",
            lambda n=n: _check_subcube_closure_exhaustive(n),
        )
    for n in (5, 6):
        _add(
            reg, f"cor2.6(n={n})", n, {"n": n},
            f"subcubes of Q_{n} are closed under common neighbors (randomized)",
            "0 violations",
            lambda n=n: _check_subcube_closure_random(n, _seed(f"cor2.6(n={n})")),
        )

    _add(
        reg, "lem2.7(n=3)", 3, {"n": 3},
        "removing fewer than 4 vertices of Q_3 without disconnecting it keeps "
        "the diameter at least 3 (exhaustive)",
        ">= 3",
        lambda: _check_connected_removal_diameter(3),
    )

    for n in (5, 6):
        _add(
            reg, f"lem3.1(n={n})", n, {"n": n},
            f"symmetric pairs of Q_{n} keep a safe crossing coordinate under "
            f"up to {n - 1} faults of dimension <= {n - 3} (randomized)",
            "0 violations",
            lambda n=n: _check_crossing_dimension_random(n, _seed(f"lem3.1(n={n})")),
        )

    for n in (3, 4):
        _add(
            reg, f"lem3.2(n={n})", n, {"n": n},
            f"any <= {n - 2} vertex faults leave Q_{n} with diameter exactly {n}",
            str(n),
            lambda n=n: _check_small_removal_diameter(n),
        )

    _add(
        reg, "thm3.3", 3, {"n": 3},
        "substructure fault diameter of Q_3 (budget 1) equals 3",
        "3",
        lambda: _check_fd(3, "substructure", 1, 3),
    )

    for n in range(4, 9):
        _add(
            reg, f"lem3.4(n={n})", n, {"n": n},
            f"the pinned-edge family of Q_{n} disconnects one half and raises "
            f"the diameter to {n + 1}",
            str(n + 1),
            lambda n=n: _check_pinned_edge_family(n),
        )

    _add(
        reg, "lem3.5(n=4)", 4, {"n": 4},
        "substructure fault diameter of Q_4 (budget 2) is at most 5",
        "<= 5",
        lambda: _check_fd(4, "substructure", 2, 5, at_most=True),
    )

    for n, expected in ((4, 5), (5, 6)):
        _add(
            reg, f"lem3.6(n={n})", n, {"n": n},
            f"substructure fault diameter of Q_{n} (budget {n - 2}) equals {expected}",
            str(expected),
            lambda n=n, expected=expected: _check_fd(n, "substructure", n - 2, expected),
        )

    for n in (4, 5):
        _add(
            reg, f"thm3.7(n={n})", n, {"n": n},
            f"edge-structure and substructure fault diameters of Q_{n} equal {n + 1}",
            str(n + 1),
            lambda n=n: _check_fd_pair(n, n - 2, n + 1),
        )

    for m in (1, 2, 3):
        n = m + 2
        _add(
            reg, f"thm3.20(m={m})", n, {"n": n, "m": m},
            f"subcube fault diameter of Q_{n} under one Q_<= {m} fault equals {n}",
            str(n),
            lambda n=n, m=m: _check_fd(n, f"subcube:{m}", 1, n),
        )

    for m in (1, 2):
        n = m + 3
        _add(
            reg, f"lem3.21(m={m})", n, {"n": n, "m": m},
            f"subcube fault diameter of Q_{n} under <= 2 Q_<= {m} faults is at most {n + 1}",
            f"<= {n + 1}",
            lambda n=n, m=m: _check_fd(n, f"subcube:{m}", 2, n + 1, at_most=True),
        )

    for n, m in ((4, 1), (5, 1), (5, 2)):
        _add(
            reg, f"lem3.22(n={n},m={m})", n, {"n": n, "m": m},
            f"at most {n - m - 2} Q_<= {m} faults keep the diameter of Q_{n} at most {n}",
            f"<= {n}",
            lambda n=n, m=m: _check_fd(n, f"subcube:{m}", n - m - 2, n, at_most=True),
        )

    for n, m in ((4, 1), (5, 2)):
        _add(
            reg, f"lem3.23(n={n},m={m})", n, {"n": n, "m": m},
            f"subcube fault diameter of Q_{n} under <= {n - m - 1} Q_<= {m} "
            f"faults is at most {n + 1}",
            f"<= {n + 1}",
            lambda n=n, m=m: _check_fd(n, f"subcube:{m}", n - m - 1, n + 1, at_most=True),
        )

    for n, m in ((4, 1), (5, 1), (5, 2), (6, 2), (6, 3)):
        _add(
            reg, f"lem3.24(n={n},m={m})", n, {"n": n, "m": m},
            f"the blocking family of {n - m - 1} Q_{m}'s in Q_{n} disconnects "
            f"one half and forces a route of length >= {n + 1}",
            f">= {n + 1}",
            lambda n=n, m=m: _check_blocking_subcube_family(n, m),
        )

    for n, m in ((4, 1), (5, 2)):
        _add(
            reg, f"thm3.25(n={n},m={m})", n, {"n": n, "m": m},
            f"subcube fault diameter of Q_{n} over Q_<= {m} faults equals {n + 1}",
            str(n + 1),
            lambda n=n, m=m: _check_fd(n, f"subcube:{m}", n - m - 1, n + 1),
        )

    for n, m, expected in (
        (3, 1, 3),
        (4, 1, 5),
        (4, 2, 4),
        (5, 1, 6),
        (5, 2, 6),
        (5, 3, 5),
    ):
        _add(
            reg, f"thm3.26(n={n},m={m})", n, {"n": n, "m": m},
            f"Q_{m}-structure fault diameter of Q_{n} equals {expected}",
            str(expected),
            lambda n=n, m=m, expected=expected: _check_fd(
                n, f"structure:{m}", n - m - 1, expected
            ),
        )

    return reg


@lru_cache(maxsize=1)
def _registry() -> dict[str, Claim]:
    return _build_registry()


def claim_ids() -> list[str]:
    """All known claim ids, in catalog order."""
    return list(_registry())


def verify_claims(
    claims: Sequence[str] | None = None,
    max_n: int | None = None,
    jobs: int = 1,
) -> list[ClaimResult]:
    """Run the claim catalog and report pass/fail per claim.

    `claims` selects ids (None means all); `max_n` keeps only claims
    whose largest ambient dimension is within reach; `jobs` is passed to
    the brute-force scans.  Unknown ids raise ValueError.
    """
    global _jobs
    reg = _registry()
    if claims is None:
        selected: Iterable[Claim] = reg.values()
    else:
        missing = [c for c in claims if c not in reg]
        if missing:
            raise ValueError(f"unknown claim ids: {', '.join(missing)}")
        selected = [reg[c] for c in claims]
    if max_n is not None:
        selected = [c for c in selected if c.max_n <= max_n]
    out = []
    _jobs = jobs
    try:
        for claim in selected:
            t0 = time.perf_counter()
            computed, ok, witness = claim.run()
            out.append(
                ClaimResult(
                    claim.claim_id,
                    claim.params,
                    claim.statement,
                    claim.expected,
                    computed,
                    "pass" if ok else "fail",
                    tuple(witness),
                    time.perf_counter() - t0,
                )
            )
    finally:
        _jobs = 1
    return out
