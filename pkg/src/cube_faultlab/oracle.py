"""Brute-force ground truth for connectivity and fault diameters.

Two questions are answered by exhaustion, with no symmetry shortcuts,
so the results are usable as an independent check on both the closed
formulas and the router:

* connectivity: the smallest number of disjoint admissible faults whose
  removal disconnects Q_n (leaving a nonempty, non-connected survivor
  set), found by sweeping family sizes upward and scanning every
  placement in canonical order;
* fault diameter: the largest survivor diameter over every family of at
  most `budget` elements, including the empty family.

Enumeration order is fixed (ascending element index tuples over the
canonical element space, sizes ascending), so the reported witnesses
are reproducible: the connectivity witness is the first disconnecting
family encountered, the diameter witness the first family attaining
the maximum.

Scans can be split across processes; chunks partition the range of the
first element index, and chunk results are reduced in canonical order,
so the answer is identical for any worker count.  Exhaustive requests
beyond desk scale are refused with a resource error instead of running
for days; the sampled search is the escape hatch for bigger instances.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InvariantViolation, ResourceLimitError
from .faults import (
    FaultFamily,
    FaultMode,
    _element_space,
    _mask_space,
    _sample_one,
)
from .metrics import _connected_mask, _diameter_mask, _full_mask

_CONNECTIVITY_MAX_N = 7

_MAX_CHUNKS_PER_JOB = 3


@dataclass(frozen=True)
class SearchSpec:
    """How a fault-diameter search walks the family space."""

    kind: str
    seed: int | None = None
    draws: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "exhaustive":
            if self.seed is not None or self.draws is not None:
                raise ValueError("exhaustive search takes no seed or draw count")
        elif self.kind == "sampled":
            if not isinstance(self.seed, int) or not isinstance(self.draws, int):
                raise ValueError("sampled search needs an int seed and draw count")
            if self.draws < 1:
                raise ValueError("sampled search needs draws >= 1")
        else:
            raise ValueError(f"unknown search kind {self.kind!r}")

    @classmethod
    def exhaustive(cls) -> "SearchSpec":
        return cls("exhaustive")

    @classmethod
    def sampled(cls, seed: int, draws: int) -> "SearchSpec":
        return cls("sampled", seed, draws)

    @property
    def label(self) -> str:
        if self.kind == "exhaustive":
            return "exhaustive"
        return f"sampled(seed={self.seed},draws={self.draws})"


@dataclass(frozen=True)
class ConnectivityResult:
    """Smallest disconnecting family size and the first family attaining it."""

    n: int
    mode: FaultMode
    kappa: int
    witness: FaultFamily
    families_scanned: int


@dataclass(frozen=True)
class FaultDiameterResult:
    """Worst survivor diameter over families within the budget."""

    n: int
    mode: FaultMode
    budget: int
    value: int
    witness: FaultFamily
    search: SearchSpec
    families_scanned: int
    disconnected_skipped: int


def _iter_packings(masks: tuple[int, ...], size: int, lo: int, hi: int):
    """Ascending index tuples of pairwise-disjoint elements.

    The first index ranges over [lo, hi), later ones over the full
    space; yields (indices, union bitset).  Lexicographic order of the
    tuples is exactly the canonical family order.
    """
    count = len(masks)
    idx = [0] * size

    def rec(depth: int, start: int, stop: int, acc: int):
        if depth == size:
            yield tuple(idx), acc
            return
        for i in range(start, stop):
            mi = masks[i]
            if mi & acc:
                continue
            idx[depth] = i
            yield from rec(depth + 1, i + 1, count, acc | mi)

    if size == 0:
        if lo == 0:
            yield (), 0
        return
    yield from rec(0, lo, hi, 0)


def _kappa_chunk(args: tuple[int, str, int, int, int]) -> tuple[tuple[int, ...] | None, int]:
    """Scan one chunk for a disconnecting family; stop at the first hit."""
    n, mode_label, size, lo, hi = args
    mode = FaultMode.from_label(mode_label)
    elems = _element_space(n, mode)
    masks = _mask_space(n, mode)
    full = _full_mask(n)
    scanned = 0
    for idx, acc in _iter_packings(masks, size, lo, hi):
        scanned += 1
        surv = full & ~acc
        if surv and not _connected_mask(n, surv):
            return idx, scanned
    return None, scanned


def _diameter_chunk(
    args: tuple[int, str, int, int, int, bool],
) -> tuple[int, tuple[int, ...] | None, int, int]:
    """Max survivor diameter over one chunk; ties keep the earliest family."""
    n, mode_label, size, lo, hi, budget_safe = args
    mode = FaultMode.from_label(mode_label)
    elems = _element_space(n, mode)
    masks = _mask_space(n, mode)
    full = _full_mask(n)
    best = -1
    best_idx: tuple[int, ...] | None = None
    scanned = 0
    skipped = 0
    for idx, acc in _iter_packings(masks, size, lo, hi):
        scanned += 1
        surv = full & ~acc
        d = _diameter_mask(n, surv) if surv else None
        if d is None:
            if budget_safe:
                pats = ", ".join(elems[i].pattern for i in idx)
                raise InvariantViolation(
                    f"family within the connectivity budget disconnected Q_{n} "
                    f"(mode {mode_label}, size {size}): {pats}"
                )
            skipped += 1
            continue
        if d > best:
            best, best_idx = d, idx
    return best, best_idx, scanned, skipped


def _chunk_ranges(total: int, jobs: int) -> list[tuple[int, int]]:
    if jobs <= 1 or total <= 1:
        return [(0, total)]
    parts = min(total, jobs * _MAX_CHUNKS_PER_JOB)
    step = -(-total // parts)
    return [(lo, min(lo + step, total)) for lo in range(0, total, step)]


def _run_chunks(worker, argses: list, jobs: int) -> list:
    if jobs <= 1 or len(argses) <= 1:
        out = []
        for a in argses:
            out.append(worker(a))
        return out
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(worker, argses))


def connectivity_bruteforce(n: int, mode: FaultMode, jobs: int = 1) -> ConnectivityResult:
    """Exact connectivity of Q_n under `mode`, by exhausting family sizes.

    Sweeps t = 1, 2, ... and scans every valid family of exactly t
    elements; the first disconnecting family (canonical order) fixes
    kappa = t.  Disconnection requires survivors: a removal that leaves
    a single component, or nothing at all, does not count.

    kappa and the witness do not depend on `jobs`; families_scanned
    counts work actually done, so with several workers it can exceed
    the single-job count (each chunk stops at its own first hit).
    """
    mode.kappa(n)  # validates the (n, mode) pairing
    if n > _CONNECTIVITY_MAX_N:
        raise ResourceLimitError(
            f"exhaustive connectivity is supported for n <= {_CONNECTIVITY_MAX_N}, got n={n}"
        )
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    elems = _element_space(n, mode)
    total_scanned = 0
    for size in range(1, (1 << n) + 1):
        if jobs == 1:
            results = [_kappa_chunk((n, mode.label, size, 0, len(elems)))]
        else:
            argses = [
                (n, mode.label, size, lo, hi)
                for lo, hi in _chunk_ranges(len(elems), jobs)
            ]
            results = _run_chunks(_kappa_chunk, argses, jobs)
        size_scanned = 0
        witness_idx = None
        for idx, scanned in results:
            size_scanned += scanned
            if idx is not None and witness_idx is None:
                witness_idx = idx
        total_scanned += size_scanned
        if witness_idx is not None:
            witness = FaultFamily(tuple(elems[i] for i in witness_idx), mode, n)
            return ConnectivityResult(n, mode, size, witness, total_scanned)
        if size_scanned == 0:
            break
    raise InvariantViolation(
        f"no disconnecting family of any size exists in Q_{n} under mode {mode.label}"
    )


def _check_exhaustive_feasible(n: int, budget: int) -> None:
    if n <= 5 or (n == 6 and budget <= 2) or (n == 7 and budget <= 1):
        return
    raise ResourceLimitError(
        f"exhaustive fault-diameter search for n={n}, budget={budget} is beyond "
        "desk scale; use a sampled search (SearchSpec.sampled) or shrink n"
    )


def fault_diameter_bruteforce(
    n: int,
    mode: FaultMode,
    budget: int,
    search: SearchSpec | None = None,
    jobs: int = 1,
) -> FaultDiameterResult:
    """Worst diameter of Q_n minus any family of at most `budget` elements.

    The empty family is included, so the result is at least the fault-free
    diameter n.  Under budget <= kappa - 1 every searched family must leave
    the survivors connected; a disconnection there raises, since it
    contradicts the connectivity value.  With a larger budget,
    disconnecting families are skipped and counted instead, because the
    maximum is over connected survivor graphs only.
    """
    kappa = mode.kappa(n)
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    if search is None:
        search = SearchSpec.exhaustive()
    budget_safe = budget <= kappa - 1
    if search.kind == "sampled":
        return _fault_diameter_sampled(n, mode, budget, search, budget_safe)
    _check_exhaustive_feasible(n, budget)
    elems = _element_space(n, mode)
    best = -1
    best_idx: tuple[int, ...] | None = None
    scanned = 0
    skipped = 0
    for size in range(budget + 1):
        if jobs == 1 or size == 0:
            results = [_diameter_chunk((n, mode.label, size, 0, len(elems), budget_safe))]
        else:
            argses = [
                (n, mode.label, size, lo, hi, budget_safe)
                for lo, hi in _chunk_ranges(len(elems), jobs)
            ]
            results = _run_chunks(_diameter_chunk, argses, jobs)
        for value, idx, chunk_scanned, chunk_skipped in results:
            scanned += chunk_scanned
            skipped += chunk_skipped
            if idx is not None and value > best:
                best, best_idx = value, idx
    if best_idx is None:
        raise InvariantViolation(
            f"every family within budget {budget} disconnected Q_{n}; "
            "no diameter is defined"
        )
    witness = FaultFamily(tuple(elems[i] for i in best_idx), mode, n)
    return FaultDiameterResult(n, mode, budget, best, witness, search, scanned, skipped)


def _fault_diameter_sampled(
    n: int, mode: FaultMode, budget: int, search: SearchSpec, budget_safe: bool
) -> FaultDiameterResult:
    """Seeded random walk over the family space; a lower bound on the max.

    Each draw picks a size uniformly in [0, budget], then
    rejection-samples a family of that size.  Deterministic for a fixed
    seed and draw count.
    """
    assert search.seed is not None and search.draws is not None
    rng = random.Random(search.seed)
    elems = _element_space(n, mode)
    masks = _mask_space(n, mode)
    full = _full_mask(n)
    best = -1
    witness: FaultFamily | None = None
    skipped = 0
    for _ in range(search.draws):
        size = rng.randint(0, budget)
        family, acc = _sample_one(rng, n, mode, elems, masks, size)
        surv = full & ~acc
        d = _diameter_mask(n, surv) if surv else None
        if d is None:
            if budget_safe:
                raise InvariantViolation(
                    f"family within the connectivity budget disconnected Q_{n} "
                    f"(mode {mode.label}): {', '.join(family.patterns())}"
                )
            skipped += 1
            continue
        if d > best:
            best, witness = d, family
    if witness is None:
        raise InvariantViolation(
            f"every sampled family within budget {budget} disconnected Q_{n}"
        )
    return FaultDiameterResult(n, mode, budget, best, witness, search, search.draws, skipped)
