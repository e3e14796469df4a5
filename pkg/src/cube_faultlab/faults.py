"""Vertex-disjoint subcube fault families and their admissible shapes.

A fault family is a set of pairwise vertex-disjoint subcubes of one
ambient cube, removed wholesale from Q_n.  Three admissibility modes
cover the regimes of interest:

* structure:m   every element is exactly a Q_m (m = 0 is the classical
                single-vertex fault model),
* substructure  every element is a Q_0 or a Q_1, i.e. any piece of a
                Q_1 structure,
* subcube:m     every element is a Q_k with k <= m (any piece of a Q_m
                structure).

Element-wise, substructure coincides with subcube:1; it is kept as its
own mode because its connectivity budget differs from structure:1 only
in name, and because files and reports read better with the intended
regime spelled out.

The module also builds the two extremal families that make the known
fault-diameter bounds tight: a family of n-2 parallel edges that pins
two adjacent vertices into a corner of one half, and a family of
n-m-1 disjoint Q_m's that forces every route between two chosen
vertices to take n+1 steps.

Text format: a family file starts with ``n=<n> mode=<label>`` and lists
one subcube pattern per line.  Blank lines and lines starting with '#'
are ignored.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .core import MAX_DIM, Subcube, Vertex, _check_ambient, coord_bit
from .errors import ResourceLimitError

_MODE_KINDS = ("structure", "substructure", "subcube")

SAMPLING_ATTEMPTS = 10_000


@dataclass(frozen=True)
class FaultMode:
    """Admissible element shapes for a fault family.

    kind is one of structure/substructure/subcube; m is the element
    dimension (exact for structure, an upper bound for subcube, absent
    for substructure).
    """

    kind: str
    m: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _MODE_KINDS:
            raise ValueError(f"unknown fault mode kind {self.kind!r}")
        if self.kind == "substructure":
            if self.m is not None:
                raise ValueError("substructure mode takes no element dimension")
        else:
            if not isinstance(self.m, int) or not 0 <= self.m <= MAX_DIM:
                raise ValueError(f"element dimension must be an int in [0, {MAX_DIM}], got {self.m!r}")
            if self.kind == "subcube" and self.m < 1:
                raise ValueError("subcube mode needs m >= 1; use structure:0 for vertex faults")

    @classmethod
    def structure(cls, m: int) -> "FaultMode":
        return cls("structure", m)

    @classmethod
    def substructure(cls) -> "FaultMode":
        return cls("substructure")

    @classmethod
    def subcube(cls, m: int) -> "FaultMode":
        return cls("subcube", m)

    @classmethod
    def from_label(cls, label: str) -> "FaultMode":
        """Parse 'structure:m', 'substructure', or 'subcube:m'."""
        kind, sep, rest = label.partition(":")
        if kind == "substructure" and not sep:
            return cls.substructure()
        if kind in ("structure", "subcube") and sep:
            try:
                m = int(rest)
            except ValueError:
                raise ValueError(f"bad element dimension in mode label {label!r}") from None
            return cls(kind, m)
        raise ValueError(f"bad mode label {label!r}")

    @property
    def label(self) -> str:
        return self.kind if self.m is None else f"{self.kind}:{self.m}"

    @property
    def max_element_dim(self) -> int:
        return 1 if self.kind == "substructure" else self.m  # type: ignore[return-value]

    def admits(self, element_dim: int) -> bool:
        if self.kind == "structure":
            return element_dim == self.m
        return element_dim <= self.max_element_dim

    def kappa(self, n: int) -> int:
        """Connectivity of Q_n under this fault shape.

        The smallest number of disjoint admissible elements whose removal
        disconnects Q_n: n - m for structure:m and subcube:m (m <= n-2),
        n - 1 for substructure.  These are the values the brute-force
        oracle reproduces at desk scale.
        """
        _check_ambient(n)
        if self.kind == "substructure":
            if n < 3:
                raise ValueError("substructure connectivity needs n >= 3")
            return n - 1
        m = self.max_element_dim
        if m > n - 2:
            raise ValueError(f"mode {self.label} needs element dimension <= n-2 = {n - 2}")
        if self.kind == "structure" and m == 0:
            return n
        if n < 3:
            raise ValueError(f"mode {self.label} connectivity needs n >= 3")
        return n - m

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class FaultFamily:
    """A tuple of subcube faults in Q_ambient, stored in canonical order.

    Canonical order is ascending (free_mask, base).  Construction does
    not enforce disjointness or mode admissibility; validate_family
    reports violations so that invalid input can be described rather
    than rejected blind.
    """

    elements: tuple[Subcube, ...]
    mode: FaultMode
    ambient: int

    def __post_init__(self) -> None:
        _check_ambient(self.ambient)
        for s in self.elements:
            if s.dim_ambient != self.ambient:
                raise ValueError(
                    f"element {s.pattern} lives in Q_{s.dim_ambient}, family in Q_{self.ambient}"
                )
        ordered = tuple(sorted(self.elements, key=lambda s: (s.free_mask, s.base)))
        object.__setattr__(self, "elements", ordered)

    @classmethod
    def from_patterns(cls, patterns: Iterable[str], mode: FaultMode, n: int) -> "FaultFamily":
        elems = []
        for p in patterns:
            s = Subcube.from_pattern(p)
            if s.dim_ambient != n:
                raise ValueError(f"pattern {p!r} has width {s.dim_ambient}, expected {n}")
            elems.append(s)
        return cls(tuple(elems), mode, n)

    @property
    def size(self) -> int:
        return len(self.elements)

    def patterns(self) -> list[str]:
        return [s.pattern for s in self.elements]

    def budget(self) -> int:
        """Largest family size guaranteed to leave Q_n connected."""
        return self.mode.kappa(self.ambient) - 1


@dataclass(frozen=True)
class FamilyViolation:
    """First problem found in a family: what went wrong and which elements."""

    reason: str
    members: tuple[Subcube, ...]

    def __str__(self) -> str:
        pats = ", ".join(s.pattern for s in self.members)
        return f"{self.reason}: {pats}"


def validate_family(family: FaultFamily) -> FamilyViolation | None:
    """Check mode admissibility and pairwise disjointness.

    Returns None when the family is valid, otherwise a report naming the
    first offending element or pair (in canonical order).
    """
    for s in family.elements:
        if not family.mode.admits(s.dim):
            return FamilyViolation(
                f"element of dimension {s.dim} not admitted by mode {family.mode.label}", (s,)
            )
    elems = family.elements
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            if not elems[i].disjoint_from(elems[j]):
                return FamilyViolation("elements intersect", (elems[i], elems[j]))
    return None


def require_valid(family: FaultFamily) -> None:
    issue = validate_family(family)
    if issue is not None:
        raise ValueError(f"invalid fault family, {issue}")


def fault_bits(family: FaultFamily) -> set[int]:
    """Labels of all faulty vertices."""
    out: set[int] = set()
    for s in family.elements:
        out.update(s.vertex_bits())
    return out


def fault_vertices(family: FaultFamily) -> set[Vertex]:
    """All faulty vertices of the family (union of its elements)."""
    require_valid(family)
    n = family.ambient
    return {Vertex(b, n) for b in fault_bits(family)}


@dataclass(frozen=True)
class SplitClassification:
    """Family elements sorted against the two halves of a coordinate split.

    An element straddles the split iff the split coordinate is free in
    it; then each half sees a face of one lower dimension.  Otherwise
    the element lies entirely in the half matching its fixed value.
    """

    split_dim: int
    in_zero: tuple[Subcube, ...]
    in_one: tuple[Subcube, ...]
    straddling: tuple[Subcube, ...]


def classify_along(family: FaultFamily, d: int) -> SplitClassification:
    """Partition the family's elements against the split along x_d."""
    bit = coord_bit(family.ambient, d)
    zero, one, both = [], [], []
    for s in family.elements:
        if s.free_mask & bit:
            both.append(s)
        elif s.base & bit:
            one.append(s)
        else:
            zero.append(s)
    return SplitClassification(d, tuple(zero), tuple(one), tuple(both))


def _drop_coordinate(mask: int, n: int, d: int) -> int:
    """Remove coordinate x_d from an n-bit mask, closing the gap."""
    p = n - d
    low = mask & ((1 << p) - 1)
    high = mask >> (p + 1)
    return high << p | low


def restrict_along(family: FaultFamily, d: int, h: int) -> FaultFamily:
    """The family's trace on one half of a split, as a Q_{n-1} family.

    Elements fixed to the other side vanish; straddling elements project
    to their face in the chosen half.  Coordinate x_d is dropped from
    the labels, so callers get an honest (n-1)-cube family.  The mode is
    kept when every surviving element still fits it and widened to
    subcube admissibility otherwise (a structure element loses a
    dimension when projected).
    """
    if h not in (0, 1):
        raise ValueError(f"half must be 0 or 1, got {h!r}")
    n = family.ambient
    if n < 2:
        raise ValueError("cannot restrict a 1-dimensional cube")
    bit = coord_bit(n, d)
    cls = classify_along(family, d)
    keep = list(cls.in_zero if h == 0 else cls.in_one)
    keep.extend(cls.straddling)
    elems = []
    for s in keep:
        free = _drop_coordinate(s.free_mask & ~bit, n, d)
        base = _drop_coordinate(s.base & ~bit, n, d)
        elems.append(Subcube(free, base, n - 1))
    mode = family.mode
    if mode.kind == "structure" and any(s.dim != mode.m for s in elems):
        mode = FaultMode.subcube(mode.m)
    return FaultFamily(tuple(elems), mode, n - 1)


def adversarial_q1_family(n: int) -> FaultFamily:
    """n-2 disjoint edges that leave one pinned edge in a far corner.

    Take x = 00...0 and z its flip in coordinate 1.  For each coordinate
    i in 2..n-1 the element is the edge {x^(i), z^(i)}, i.e. the subcube
    free in coordinate 1 with coordinate i set.  Removing the family
    disconnects the half with x_n = 0 (the component of x is exactly
    {x, z}), while Q_n itself stays connected with diameter n + 1: the
    family is one element below the substructure connectivity n - 1, and
    any route leaving {x, z} must first cross to the other half.
    """
    _check_ambient(n)
    if n < 4:
        raise ValueError("the pinned-edge family needs n >= 4")
    free = coord_bit(n, 1)
    elems = tuple(Subcube(free, coord_bit(n, i), n) for i in range(2, n))
    return FaultFamily(elems, FaultMode.structure(1), n)


def adversarial_subcube_family(n: int, m: int) -> FaultFamily:
    """n-m-1 disjoint Q_m's forcing a route of length n + 1.

    Position the cubes inside the half x_n = 0: element i (for i in
    1..n-m-1) is free in coordinates 1..m and has coordinate m+i set to
    1, every other coordinate 0.  Their removal disconnects that half,
    and in the whole cube every path from x = 00...0 to y = 11...10 has
    length at least n + 1, matching the fault-diameter upper bound for
    families of up to n - m - 1 subcubes of dimension at most m.
    """
    _check_ambient(n)
    if not 1 <= m <= n - 3:
        raise ValueError(f"need 1 <= m <= n-3, got m={m} for n={n}")
    free = 0
    for i in range(1, m + 1):
        free |= coord_bit(n, i)
    elems = tuple(
        Subcube(free, coord_bit(n, m + i), n) for i in range(1, n - m)
    )
    return FaultFamily(elems, FaultMode.subcube(m), n)


# ---------------------------------------------------------------------------
# element spaces, enumeration, sampling


@lru_cache(maxsize=64)
def _element_space(n: int, mode: FaultMode) -> tuple[Subcube, ...]:
    """All admissible elements in canonical (free_mask, base) order."""
    _check_ambient(n)
    out = []
    for free in range(1 << n):
        if not mode.admits(free.bit_count()):
            continue
        rest = (~free) & ((1 << n) - 1)
        base = 0
        while True:
            out.append(Subcube(free, base, n))
            if base == rest:
                break
            base = (base - rest) & rest
    return tuple(out)


@lru_cache(maxsize=64)
def _mask_space(n: int, mode: FaultMode) -> tuple[int, ...]:
    """Vertex bitsets matching _element_space, cached for reuse."""
    return tuple(_vertex_mask(s) for s in _element_space(n, mode))


def element_space_size(n: int, mode: FaultMode) -> int:
    """Number of admissible elements, sum of C(n,k) * 2^(n-k) over admitted k."""
    from math import comb

    _check_ambient(n)
    return sum(
        comb(n, k) * (1 << (n - k)) for k in range(n + 1) if mode.admits(k)
    )


def enumerate_families(n: int, mode: FaultMode, size: int) -> Iterator[FaultFamily]:
    """All valid families of exactly `size` elements, in canonical order.

    Families are ascending index tuples into the canonical element
    space, emitted lexicographically; every emitted family is pairwise
    disjoint and mode-admissible by construction.
    """
    if size < 0:
        raise ValueError(f"family size must be >= 0, got {size}")
    elems = _element_space(n, mode)
    masks = _mask_space(n, mode)

    def rec(start: int, acc: int, chosen: list[int]) -> Iterator[FaultFamily]:
        if len(chosen) == size:
            yield FaultFamily(tuple(elems[i] for i in chosen), mode, n)
            return
        for i in range(start, len(elems)):
            if masks[i] & acc:
                continue
            chosen.append(i)
            yield from rec(i + 1, acc | masks[i], chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def _vertex_mask(s: Subcube) -> int:
    """Bitset of the subcube's vertices (bit w set iff vertex w inside)."""
    mask = 0
    for b in s.vertex_bits():
        mask |= 1 << b
    return mask


def _sample_one(
    rng: random.Random,
    n: int,
    mode: FaultMode,
    elems: tuple[Subcube, ...],
    masks: tuple[int, ...],
    size: int,
) -> tuple[FaultFamily, int]:
    """One rejection-sampled family plus the bitset of its vertices."""
    for _attempt in range(SAMPLING_ATTEMPTS):
        picks = [rng.randrange(len(elems)) for _ in range(size)]
        acc = 0
        for i in picks:
            if masks[i] & acc:
                break
            acc |= masks[i]
        else:
            return FaultFamily(tuple(elems[i] for i in picks), mode, n), acc
    raise ResourceLimitError(
        f"could not draw a disjoint family of {size} {mode.label} elements "
        f"in Q_{n} within {SAMPLING_ATTEMPTS} attempts; lower the size"
    )


def sample_families(
    n: int, mode: FaultMode, size: int, count: int, seed: int
) -> list[FaultFamily]:
    """Draw `count` valid families of `size` elements, reproducibly.

    Rejection sampling from a seeded generator: each attempt draws
    `size` admissible elements uniformly and keeps the draw when they
    are pairwise disjoint.  More than SAMPLING_ATTEMPTS rejections for
    a single family means the size is too close to the packing limit,
    and the caller gets a resource error rather than a silent stall.
    """
    if size < 0 or count < 0:
        raise ValueError("size and count must be >= 0")
    rng = random.Random(seed)
    elems = _element_space(n, mode)
    masks = _mask_space(n, mode)
    return [_sample_one(rng, n, mode, elems, masks, size)[0] for _ in range(count)]


# ---------------------------------------------------------------------------
# text format


def family_to_text(family: FaultFamily) -> str:
    """Serialize as the family file format: header line, one pattern per line."""
    lines = [f"n={family.ambient} mode={family.mode.label}"]
    lines.extend(family.patterns())
    return "\n".join(lines) + "\n"


def family_from_text(text: str) -> FaultFamily:
    """Parse the family file format; inverse of family_to_text."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty family text, expected an 'n=... mode=...' header")
    header = lines[0].split()
    fields = dict(part.partition("=")[::2] for part in header)
    if set(fields) != {"n", "mode"}:
        raise ValueError(f"bad family header {lines[0]!r}, expected 'n=<n> mode=<label>'")
    try:
        n = int(fields["n"])
    except ValueError:
        raise ValueError(f"bad ambient dimension {fields['n']!r}") from None
    mode = FaultMode.from_label(fields["mode"])
    return FaultFamily.from_patterns(lines[1:], mode, n)


def write_family(family: FaultFamily, path: str | os.PathLike) -> None:
    with open(path, "w") as fh:
        fh.write(family_to_text(family))


def read_family(path: str | os.PathLike) -> FaultFamily:
    with open(path) as fh:
        return family_from_text(fh.read())
