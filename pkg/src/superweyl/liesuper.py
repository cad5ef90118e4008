"""Chevalley presentations realized by differential operators.

Three families are provided.  ``gl`` and ``osp_even`` act on the ``minus``
variant with parity (1,...,1,0,...,0) (p odd indices first); ``osp_odd``
acts on the ``plus`` variant with parity (0,...,0,1,...,1).  The raising
images are pi(e_i) = x_i d_{i+1} for i < n, with the last generator mapped
to x_n^2 (osp_even) or x_n (osp_odd); lowering images are involutions of
the raising ones, and pi(h_i) = x_i d_i + c_i for a central constant c_i
fixed by the variant.

The bracket residual of every displayed relation is computed exactly on
scaled images.  Scale factors live in version-controlled fixtures; the
``calibrate`` solver re-derives them by exact scalar-ratio matching (the
raising scale is pinned by the column-word comparison, the lowering scale
by the diagonal e-f relation) and verifies the full relation list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Optional

from .algebra import Signature, SuperElement
from .basering import BaseRingElement, iota_embed
from .datum import GammaMatrix, phi_generator, require_valid
from .errors import SignatureMismatchError

FAMILIES = ("gl", "osp_even", "osp_odd")


def super_bracket(a: SuperElement, b: SuperElement, pa: int, pb: int) -> SuperElement:
    """ab - (-1)^(pa*pb) ba for declared parities pa, pb."""
    if a.sig != b.sig:
        raise SignatureMismatchError("operands live in different signatures")
    if pa & pb:
        return a * b + b * a
    return a * b - b * a


def zeta_matrix(family: str, p: int, q: int) -> GammaMatrix:
    """Column matrix of the family: bidiagonal plus a family-specific last column."""
    sig = _target_signature(family, p, q)
    n = p + q
    m = n - 1 if family == "gl" else n
    rows = [[0] * m for _ in range(n)]
    for c in range(min(m, n - 1)):
        rows[c][c] = 1
        rows[c + 1][c] = -1
    if family == "osp_even":
        rows[n - 1][n - 1] = 2
    elif family == "osp_odd":
        rows[n - 1][n - 1] = 1
    return GammaMatrix(sig, tuple(tuple(r) for r in rows))


def _target_signature(family: str, p: int, q: int) -> Signature:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0 with p + q >= 1")
    n = p + q
    if family == "gl" and n < 2:
        raise ValueError("the gl family needs p + q >= 2")
    if family == "osp_even" and q < 1:
        raise ValueError(
            "osp_even needs q >= 1: its squared last generator would sit on a "
            "Clifford direction otherwise"
        )
    if family == "osp_odd":
        return Signature("plus", (0,) * p + (1,) * q)
    return Signature("minus", (1,) * p + (0,) * q)


@dataclass(frozen=True)
class Relation:
    label: str
    kind: str  # hh, he, hf, ef, hen, hfn, enfn, efn, enf
    i: int = -1
    j: int = -1


@dataclass(frozen=True)
class Calibration:
    """Per-generator scale factors and h shifts, plus expected h offsets."""

    e_scale: tuple[Fraction, ...]
    f_scale: tuple[Fraction, ...]
    h_shift: tuple[Fraction, ...]
    expected_h_offsets: tuple[Fraction, ...]

    def to_dict(self) -> dict:
        return {
            "e_scale": [str(c) for c in self.e_scale],
            "f_scale": [str(c) for c in self.f_scale],
            "h_shift": [str(c) for c in self.h_shift],
            "h_offsets": [str(c) for c in self.expected_h_offsets],
        }


def unit_calibration(ne: int, n: int) -> Calibration:
    one = Fraction(1)
    zero = Fraction(0)
    return Calibration((one,) * ne, (one,) * ne, (zero,) * n, (zero,) * n)


@dataclass(frozen=True)
class LiePreset:
    family: str
    p: int
    q: int
    sig: Signature
    zeta: GammaMatrix
    e_images: tuple[SuperElement, ...]
    f_images: tuple[SuperElement, ...]
    h_images: tuple[SuperElement, ...]
    e_parity: tuple[int, ...]
    relations: tuple[Relation, ...]
    scalings: Calibration

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def ne(self) -> int:
        return len(self.e_images)


def preset(family: str, p: int, q: int) -> LiePreset:
    """Fully populated presentation for one family at size (p, q)."""
    sig = _target_signature(family, p, q)
    n = p + q
    zeta = zeta_matrix(family, p, q)
    require_valid(zeta)
    ne = zeta.m
    half = Fraction(1, 2)
    h_const_sign = 1 if sig.sign == "minus" else -1

    e_images = []
    for j in range(ne):
        if j < n - 1:
            img = SuperElement.x(sig, j) * SuperElement.d(sig, j + 1)
        elif family == "osp_even":
            img = SuperElement.x(sig, n - 1) * SuperElement.x(sig, n - 1)
        else:
            img = SuperElement.x(sig, n - 1)
        e_images.append(img)
    f_images = [img.star() for img in e_images]
    h_images = []
    for i in range(n):
        const = h_const_sign * (half if sig.parity[i] == 0 else -half)
        h_images.append(
            SuperElement.x(sig, i) * SuperElement.d(sig, i)
            + const * SuperElement.one(sig)
        )

    e_parity = []
    for j in range(ne):
        if j < n - 1:
            conventional = 1 if (p >= 1 and j == p - 1) else 0
        elif family == "osp_even":
            conventional = 0
        else:
            conventional = sig.parity[n - 1]
        ambient = e_images[j].parity()
        if ambient != conventional:
            raise ValueError(
                f"generator parity mismatch for e{j + 1}: presentation says "
                f"{conventional}, image parity is {ambient}"
            )
        e_parity.append(conventional)

    return LiePreset(
        family=family,
        p=p,
        q=q,
        sig=sig,
        zeta=zeta,
        e_images=tuple(e_images),
        f_images=tuple(f_images),
        h_images=tuple(h_images),
        e_parity=tuple(e_parity),
        relations=_relations(family, n, p),
        scalings=unit_calibration(ne, n),
    )


def _relations(family: str, n: int, p: int) -> tuple[Relation, ...]:
    rels = []
    ngl = n - 1  # generators carried over from the gl presentation
    for i in range(n):
        for j in range(i + 1, n):
            rels.append(Relation(f"[h{i + 1},h{j + 1}]", "hh", i, j))
    for i in range(n):
        for j in range(ngl):
            rels.append(Relation(f"[h{i + 1},e{j + 1}]", "he", i, j))
            rels.append(Relation(f"[h{i + 1},f{j + 1}]", "hf", i, j))
    for i in range(ngl):
        for j in range(ngl):
            rels.append(Relation(f"[e{i + 1},f{j + 1}]", "ef", i, j))
    if family == "osp_odd":
        last = n - 1
        for i in range(n):
            rels.append(Relation(f"[h{i + 1},e{n}]", "hen", i, last))
            rels.append(Relation(f"[h{i + 1},f{n}]", "hfn", i, last))
        rels.append(Relation(f"[e{n},f{n}]", "enfn", last, last))
        for i in range(ngl):
            rels.append(Relation(f"[e{i + 1},f{n}]", "efn", i, last))
            rels.append(Relation(f"[e{n},f{i + 1}]", "enf", last, i))
    return tuple(rels)


@dataclass
class RelationResult:
    label: str
    passed: bool
    residual: SuperElement


@dataclass
class ResidualReport:
    results: list[RelationResult]

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[RelationResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {
            "all_pass": self.all_pass,
            "relations": [
                {"relation": r.label, "pass": r.passed, "residual": str(r.residual)}
                for r in self.results
            ],
        }


def _scaled_images(preset: LiePreset, cal: Calibration):
    E = [c * img for c, img in zip(cal.e_scale, preset.e_images)]
    F = [c * img for c, img in zip(cal.f_scale, preset.f_images)]
    one = SuperElement.one(preset.sig)
    H = [img + s * one for s, img in zip(cal.h_shift, preset.h_images)]
    return E, F, H


def _relation_residual(preset: LiePreset, rel: Relation, E, F, H) -> SuperElement:
    pe = preset.e_parity
    p = preset.p
    i, j = rel.i, rel.j
    if rel.kind == "hh":
        return super_bracket(H[i], H[j], 0, 0)
    if rel.kind == "he":
        coeff = (1 if i == j else 0) - (1 if i == j + 1 else 0)
        return super_bracket(H[i], E[j], 0, pe[j]) - coeff * E[j]
    if rel.kind == "hf":
        coeff = -(1 if i == j else 0) + (1 if i == j + 1 else 0)
        return super_bracket(H[i], F[j], 0, pe[j]) - coeff * F[j]
    if rel.kind == "ef":
        res = super_bracket(E[i], F[j], pe[i], pe[j])
        if i == j:
            sign = -1 if i == p - 1 else 1
            res = res - (H[i] - sign * H[i + 1])
        return res
    if rel.kind == "hen":
        coeff = 1 if i == j else 0
        return super_bracket(H[i], E[j], 0, pe[j]) - coeff * E[j]
    if rel.kind == "hfn":
        coeff = -1 if i == j else 0
        return super_bracket(H[i], F[j], 0, pe[j]) - coeff * F[j]
    if rel.kind == "enfn":
        return super_bracket(E[i], F[j], pe[i], pe[j]) - H[i]
    if rel.kind == "efn":
        return super_bracket(E[i], F[j], pe[i], pe[j])
    if rel.kind == "enf":
        return super_bracket(E[i], F[j], pe[i], pe[j])
    raise ValueError(f"unknown relation kind {rel.kind!r}")


def check_relations(preset: LiePreset, scalings: Optional[Calibration] = None) -> ResidualReport:
    """Residual of every listed relation on the scaled images."""
    cal = scalings or preset.scalings
    E, F, H = _scaled_images(preset, cal)
    results = []
    for rel in preset.relations:
        res = _relation_residual(preset, rel, E, F, H)
        results.append(RelationResult(rel.label, res.is_zero, res))
    return ResidualReport(results)


@dataclass
class TriangleReport:
    """Column-word vs scaled raising images, and the central h offsets."""

    x_matches: list[bool]
    h_offsets: list[Optional[Fraction]]
    expected_offsets: tuple[Fraction, ...]

    @property
    def all_x_match(self) -> bool:
        return all(self.x_matches)

    @property
    def offsets_constant(self) -> bool:
        return all(o is not None for o in self.h_offsets)

    @property
    def offsets_match_expected(self) -> bool:
        return self.offsets_constant and tuple(self.h_offsets) == tuple(
            self.expected_offsets
        )

    @property
    def passed(self) -> bool:
        return self.all_x_match and self.offsets_match_expected

    def to_dict(self) -> dict:
        return {
            "x_matches": self.x_matches,
            "h_offsets": [None if o is None else str(o) for o in self.h_offsets],
            "expected_h_offsets": [str(o) for o in self.expected_offsets],
            "pass": self.passed,
        }


def check_triangle(preset: LiePreset, scalings: Optional[Calibration] = None) -> TriangleReport:
    """Compare column words with scaled raising images and extract h offsets.

    The ring-side image of h_i is lam(i,i)*(u_i - 1), which embeds to
    x_i d_i exactly, so the reported offset is the central constant carried
    by the differential-operator image of h_i.
    """
    cal = scalings or preset.scalings
    E, _, H = _scaled_images(preset, cal)
    sig = preset.sig
    x_matches = []
    for c in range(preset.zeta.m):
        x_matches.append(phi_generator(preset.zeta, c, "X") == E[c])
    h_offsets: list[Optional[Fraction]] = []
    for i in range(preset.n):
        lam = sig.lam(i, i)
        ring_side = lam * (
            BaseRingElement.u(sig, i) - BaseRingElement.one(sig)
        )
        diff = H[i] - iota_embed(ring_side)
        h_offsets.append(diff.constant_value())
    return TriangleReport(x_matches, h_offsets, cal.expected_h_offsets)


def _scalar_ratio(num: SuperElement, den: SuperElement) -> Optional[Fraction]:
    """rho with num == rho * den, when one exists."""
    if den.is_zero:
        return Fraction(1) if num.is_zero else None
    mono, c = next(iter(den.terms.items()))
    rho = num.terms.get(mono, Fraction(0)) / c
    return rho if num == rho * den else None


@dataclass
class CalibrationResult:
    calibration: Calibration
    solved: bool
    message: str


def calibrate(preset: LiePreset) -> CalibrationResult:
    """Solve for scale factors by exact ratio matching, then verify.

    The raising scales come from the column-word comparison, the lowering
    scales from the diagonal e-f relations evaluated on raw images; h
    shifts stay at zero unless verification fails.
    """
    ne, n = preset.ne, preset.n
    pe = preset.e_parity
    e_scale = []
    for c in range(ne):
        rho = _scalar_ratio(phi_generator(preset.zeta, c, "X"), preset.e_images[c])
        if rho is None or rho == 0:
            return CalibrationResult(
                unit_calibration(ne, n), False,
                f"column word {c + 1} is not a scalar multiple of the raising image",
            )
        e_scale.append(rho)
    f_scale = [Fraction(1)] * ne
    for rel in preset.relations:
        if rel.kind == "ef" and rel.i == rel.j:
            i = rel.i
            raw = super_bracket(preset.e_images[i], preset.f_images[i], pe[i], pe[i])
            sign = -1 if i == preset.p - 1 else 1
            target = preset.h_images[i] - sign * preset.h_images[i + 1]
        elif rel.kind == "enfn":
            i = rel.i
            raw = super_bracket(preset.e_images[i], preset.f_images[i], pe[i], pe[i])
            target = preset.h_images[i]
        else:
            continue
        rho = _scalar_ratio(target, raw)
        if rho is None or rho == 0:
            return CalibrationResult(
                unit_calibration(ne, n), False,
                f"relation {rel.label} is not a scalar away from its target",
            )
        f_scale[i] = rho / e_scale[i]
    h_shift = [Fraction(0)] * n
    cal = Calibration(tuple(e_scale), tuple(f_scale), tuple(h_shift), (Fraction(0),) * n)
    triangle = check_triangle(preset, cal)
    if not triangle.offsets_constant:
        return CalibrationResult(cal, False, "h comparison is not a central constant")
    cal = Calibration(
        tuple(e_scale), tuple(f_scale), tuple(h_shift),
        tuple(triangle.h_offsets),
    )
    report = check_relations(preset, cal)
    if not report.all_pass:
        labels = [r.label for r in report.failures()]
        return CalibrationResult(cal, False, f"unresolved residuals: {labels}")
    return CalibrationResult(cal, True, "solved")


def load_calibration(preset: LiePreset, path: Optional[str] = None) -> Calibration:
    """Frozen scale factors for a preset, from the packaged fixture or a file."""
    if path is None:
        text = resources.files("superweyl").joinpath("data/lie_calibration.json").read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)[preset.family]
    ne, n = preset.ne, preset.n
    e_scale = [Fraction(data["e_scale"])] * ne
    f_scale = [Fraction(data["f_scale"])] * ne
    if ne and preset.family == "osp_odd":
        f_scale[-1] = Fraction(data["f_scale_last"])
    h_shift = [Fraction(data["h_shift"])] * n
    off = Fraction(data["h_offset_scale"])
    expected = tuple(off * (1 if preset.sig.parity[i] == 0 else -1) for i in range(n))
    return Calibration(tuple(e_scale), tuple(f_scale), tuple(h_shift), expected)
