"""Graded-support decisions via pattern-avoiding arrangements.

A degree vector g lies in the support iff the multiset holding |g_i| copies
of the signed column sgn(g_i)*gamma(e_i) admits an ordering whose entries,
restricted to any Clifford row, never repeat a nonzero sign without a sign
change in between (no consecutive (s, 0, ..., 0, s) pattern).  The search
keeps only the remaining multiplicities and the last nonzero sign per
Clifford row, visiting columns in ascending order, so the first witness
found is deterministic.

``oracle_membership`` decides the same question by exhaustively multiplying
generator images over all arrangements; it shares no logic with the pattern
search and exists to validate it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .algebra import SuperElement
from .datum import GammaMatrix, phi_generator, require_valid
from .errors import ResourceCapError

# A witness is a tuple of (column, sign) pairs, 0-based columns.
Witness = tuple[tuple[int, int], ...]

DEFAULT_BOX_CAP = 10**6
DEFAULT_ORACLE_CAP = 8


def _letters(gm: GammaMatrix, g: Sequence[int]):
    """Distinct signed letters with multiplicities, in column order."""
    cliff_rows = [r for r in range(gm.n) if gm.sig.is_clifford(r)]
    letters = []
    for c in range(gm.m):
        if g[c] == 0:
            continue
        sign = 1 if g[c] > 0 else -1
        entries = tuple(sign * gm.rows[r][c] for r in cliff_rows)
        letters.append((c, sign, entries))
    return cliff_rows, letters


def clifford_image_ok(gm: GammaMatrix, g: Sequence[int]) -> bool:
    """Necessary condition: Clifford rows of gamma(g) stay within {-1,0,1}."""
    image = gm.apply(g)
    return all(
        abs(image[r]) <= 1 for r in range(gm.n) if gm.sig.is_clifford(r)
    )


def is_in_support(gm: GammaMatrix, g: Sequence[int]) -> Optional[Witness]:
    """First admissible ordering of the letter multiset, or None.

    Branches are explored in ascending column order, so the returned witness
    is the lexicographically least admissible column sequence.
    """
    require_valid(gm)
    g = tuple(int(v) for v in g)
    if len(g) != gm.m:
        raise ValueError(f"degree vector has length {len(g)}, expected {gm.m}")
    if not any(g):
        return ()
    if not clifford_image_ok(gm, g):
        return None
    cliff_rows, letters = _letters(gm, g)
    counts = [abs(g[c]) for c, _, _ in letters]
    total = sum(counts)
    failed: set[tuple] = set()
    acc: list[tuple[int, int]] = []

    def dfs(last: tuple[int, ...]) -> bool:
        if len(acc) == total:
            return True
        state = (tuple(counts), last)
        if state in failed:
            return False
        for idx, (col, sign, entries) in enumerate(letters):
            if counts[idx] == 0:
                continue
            if any(e and e == last[r] for r, e in enumerate(entries)):
                continue
            new_last = tuple(
                e if e else last[r] for r, e in enumerate(entries)
            )
            counts[idx] -= 1
            acc.append((col, sign))
            if dfs(new_last):
                return True
            acc.pop()
            counts[idx] += 1
        failed.add(state)
        return False

    if dfs((0,) * len(cliff_rows)):
        return tuple(acc)
    return None


def verify_witness(gm: GammaMatrix, g: Sequence[int], witness: Witness) -> bool:
    """Independent check of a claimed ordering: multiplicities, parts, pattern."""
    g = tuple(int(v) for v in g)
    seen = {}
    for col, sign in witness:
        if sign not in (-1, 1):
            return False
        key = (col, sign)
        seen[key] = seen.get(key, 0) + 1
    for c in range(gm.m):
        expected = abs(g[c])
        sign = 1 if g[c] > 0 else -1
        if expected:
            if seen.pop((c, sign), 0) != expected:
                return False
    if seen:
        return False
    # parts must sum to the image of g
    total = [0] * gm.n
    for col, sign in witness:
        for r in range(gm.n):
            total[r] += sign * gm.rows[r][col]
    if tuple(total) != gm.apply(g):
        return False
    # per Clifford row, nonzero entries alternate in sign
    for r in range(gm.n):
        if not gm.sig.is_clifford(r):
            continue
        last = 0
        for col, sign in witness:
            e = sign * gm.rows[r][col]
            if e == 0:
                continue
            if e == last:
                return False
            last = e
    return True


def enumerate_support(
    gm: GammaMatrix,
    box: Sequence[tuple[int, int]],
    even_lattice: bool = False,
    cap: int = DEFAULT_BOX_CAP,
) -> list[tuple[tuple[int, ...], Witness]]:
    """All support points in a finite box, with their witnesses, sorted."""
    require_valid(gm)
    box = [(int(lo), int(hi)) for lo, hi in box]
    if len(box) != gm.m:
        raise ValueError(f"box has {len(box)} intervals, expected {gm.m}")
    if any(lo > hi for lo, hi in box):
        raise ValueError("box intervals must satisfy lo <= hi")
    count = 1
    for lo, hi in box:
        count *= hi - lo + 1
    if count > cap:
        raise ResourceCapError(f"box holds {count} candidate points, cap is {cap}")
    found = []
    for g in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
        if even_lattice and sum(g) % 2 != 0:
            continue
        witness = is_in_support(gm, g)
        if witness is not None:
            found.append((g, witness))
    return found


def oracle_membership(gm: GammaMatrix, g: Sequence[int], cap: int = DEFAULT_ORACLE_CAP) -> bool:
    """Brute-force membership: some arrangement has a nonzero image product.

    Exhausts the arrangements of the letter multiset through the generator
    images, pruning prefixes whose product is already zero (right
    multiplication cannot revive them).
    """
    require_valid(gm)
    g = tuple(int(v) for v in g)
    total = sum(abs(v) for v in g)
    if total > cap:
        raise ResourceCapError(f"|g| = {total} exceeds the oracle cap {cap}")
    if total == 0:
        return True
    gens = []
    counts = []
    for c in range(gm.m):
        if g[c] == 0:
            continue
        kind = "X" if g[c] > 0 else "Y"
        gens.append(phi_generator(gm, c, kind))
        counts.append(abs(g[c]))

    def dfs(prefix: SuperElement, remaining: int) -> bool:
        if remaining == 0:
            return True
        for idx, gen in enumerate(gens):
            if counts[idx] == 0:
                continue
            nxt = prefix * gen
            if nxt.is_zero:
                continue
            counts[idx] -= 1
            if dfs(nxt, remaining - 1):
                counts[idx] += 1
                return True
            counts[idx] += 1
        return False

    return dfs(SuperElement.one(gm.sig), total)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def gamma_rank_kernel(gm: GammaMatrix) -> tuple[int, list[tuple[int, ...]]]:
    """Rational rank and an integer kernel basis, by unimodular column ops."""
    n, m = gm.n, gm.m
    cols = [list(gm.column(c)) for c in range(m)]
    track = [[1 if i == c else 0 for i in range(m)] for c in range(m)]
    pc = 0
    for r in range(n):
        nz = [c for c in range(pc, m) if cols[c][r] != 0]
        if not nz:
            continue
        c0 = nz[0]
        for c in nz[1:]:
            a, b = cols[c0][r], cols[c][r]
            gg, s, t = _egcd(a, b)
            ca, cb = cols[c0], cols[c]
            ta, tb = track[c0], track[c]
            new_a = [s * u + t * v for u, v in zip(ca, cb)]
            new_b = [-(b // gg) * u + (a // gg) * v for u, v in zip(ca, cb)]
            cols[c0], cols[c] = new_a, new_b
            track[c0] = [s * u + t * v for u, v in zip(ta, tb)]
            track[c] = [-(b // gg) * u + (a // gg) * v for u, v in zip(ta, tb)]
        cols[pc], cols[c0] = cols[c0], cols[pc]
        track[pc], track[c0] = track[c0], track[pc]
        pc += 1
    kernel = []
    for c in range(pc, m):
        vec = track[c]
        g = 0
        for v in vec:
            g = gcd(g, v)
        if g > 1:
            vec = [v // g for v in vec]
        lead = next((v for v in vec if v), 0)
        if lead < 0:
            vec = [-v for v in vec]
        kernel.append(tuple(vec))
    return pc, kernel


@dataclass
class InjectivityReport:
    """Box-restricted injectivity evidence plus the global rank certificate.

    ``gamma_distinct_on_box`` is pairwise distinctness of the plain images
    over the boxed support.  For the projected map (Clifford rows reduced
    mod 2) the operative condition is the trivial zero fiber: a projected
    image of zero forces g = 0.  Pairwise distinctness of projected images
    is also reported, but only as data; it can fail for perfectly injective
    matrices because support coordinates -1 and 1 agree mod 2.
    """

    rank: int
    m: int
    kernel: list[tuple[int, ...]]
    box: list[tuple[int, int]]
    points: list[tuple[int, ...]] = field(default_factory=list)
    gamma_distinct_on_box: bool = True
    p_gamma_zero_fiber: bool = True
    p_gamma_distinct_on_box: bool = True
    containment_ok: bool = True

    @property
    def globally_injective(self) -> bool:
        return self.rank == self.m

    @property
    def passed(self) -> bool:
        return (
            self.gamma_distinct_on_box
            and self.p_gamma_zero_fiber
            and self.containment_ok
        )

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "columns": self.m,
            "kernel": [list(v) for v in self.kernel],
            "globally_injective": self.globally_injective,
            "box": [[lo, hi] for lo, hi in self.box],
            "support_points": len(self.points),
            "gamma_distinct_on_box": self.gamma_distinct_on_box,
            "p_gamma_zero_fiber": self.p_gamma_zero_fiber,
            "p_gamma_distinct_on_box": self.p_gamma_distinct_on_box,
            "clifford_containment": self.containment_ok,
            "pass": self.passed,
        }


def injectivity_report(
    gm: GammaMatrix,
    box: Sequence[tuple[int, int]],
    cap: int = DEFAULT_BOX_CAP,
) -> InjectivityReport:
    """Enumerate the support in a box and test the injectivity criteria.

    rank == m certifies global injectivity of the matrix; otherwise the
    distinctness result is labeled box-restricted by the caller.
    """
    rank, kernel = gamma_rank_kernel(gm)
    pts = [g for g, _ in enumerate_support(gm, box, cap=cap)]
    images = [gm.apply(g) for g in pts]
    cliff = [gm.sig.is_clifford(r) for r in range(gm.n)]
    projected = [
        tuple(v % 2 if cliff[r] else v for r, v in enumerate(img)) for img in images
    ]
    zero_proj = (0,) * gm.n
    zero_fiber = all(
        not any(g) for g, proj in zip(pts, projected) if proj == zero_proj
    )
    containment = all(
        abs(img[r]) <= 1 for img in images for r in range(gm.n) if cliff[r]
    )
    return InjectivityReport(
        rank=rank,
        m=gm.m,
        kernel=kernel,
        box=[(lo, hi) for lo, hi in box],
        points=pts,
        gamma_distinct_on_box=len(set(images)) == len(images),
        p_gamma_zero_fiber=zero_fiber,
        p_gamma_distinct_on_box=len(set(projected)) == len(projected),
        containment_ok=containment,
    )
