"""Integer matrices, their validation, and the ring data they induce.

A matrix gamma with n rows (one per superalgebra index) and m columns maps
each column i to a pair of generator words: X_i with image
x_1^(g_1i) ... x_n^(g_ni) and Y_i, the involution of X_i.  A valid matrix
yields central elements t_i, commuting shift automorphisms sigma_i (the
columns, as exponent vectors) and a symmetric sign matrix mu, which
together satisfy the twisted commutation relations

    X_i r = sigma_i(r) X_i,   Y_i X_i = t_i,   X_i Y_i = sigma_i(t_i),
    X_i Y_j = mu_ij Y_j X_i   (i != j)

inside the superalgebra, where words of column degree g are represented by
their images together with the formal degree vector g.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import Signature, SuperElement
from .basering import BaseRingElement, project_zero, tau_apply
from .errors import InvalidGammaError, SignatureMismatchError


@dataclass(frozen=True)
class GammaMatrix:
    """n x m integer matrix over a signature; rows carry the parities."""

    sig: Signature
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        if len(rows) != self.sig.n:
            raise ValueError(f"matrix has {len(rows)} rows, signature has {self.sig.n}")
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one column")
        m = len(rows[0])
        if any(len(row) != m for row in rows):
            raise ValueError("all rows must have the same length")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    def entry(self, r: int, c: int) -> int:
        return self.rows[r][c]

    def column(self, c: int) -> tuple[int, ...]:
        return tuple(row[c] for row in self.rows)

    def apply(self, g: Sequence[int]) -> tuple[int, ...]:
        """Image of g under the linear map Z^m -> Z^n."""
        if len(g) != self.m:
            raise ValueError(f"vector has length {len(g)}, expected {self.m}")
        return tuple(sum(row[c] * g[c] for c in range(self.m)) for row in self.rows)


def identity_gamma(sig: Signature) -> GammaMatrix:
    n = sig.n
    return GammaMatrix(sig, tuple(
        tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
    ))


def gamma_from_dict(data: dict) -> GammaMatrix:
    """Build a matrix from the JSON schema {sign, parity, gamma}."""
    try:
        sign = data["sign"]
        parity = data["parity"]
        rows = data["gamma"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"matrix object needs keys sign, parity, gamma: {exc}")
    return GammaMatrix(Signature(sign, tuple(parity)), tuple(tuple(r) for r in rows))


def gamma_to_dict(gm: GammaMatrix) -> dict:
    return {
        "sign": gm.sig.sign,
        "parity": list(gm.sig.parity),
        "gamma": [list(row) for row in gm.rows],
    }


@dataclass
class ValidationReport:
    """Per-violation diagnostics; the matrix is valid iff all lists are empty.

    Indices are 0-based; ``to_dict`` renders them 1-based for reports.
    """

    zero_columns: list[int] = field(default_factory=list)
    clifford_violations: list[tuple[int, int]] = field(default_factory=list)
    sign_violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not (self.zero_columns or self.clifford_violations or self.sign_violations)

    def summary(self) -> str:
        if self.valid:
            return "valid"
        bits = []
        if self.zero_columns:
            bits.append(f"zero columns {[c + 1 for c in self.zero_columns]}")
        if self.clifford_violations:
            bits.append(
                "entries above 1 on Clifford rows at "
                + str([(r + 1, c + 1) for r, c in self.clifford_violations])
            )
        if self.sign_violations:
            bits.append(
                "column pairs with an uncancelled positive overlap "
                + str([(i + 1, j + 1) for i, j in self.sign_violations])
            )
        return "; ".join(bits)

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "zero_columns": [c + 1 for c in self.zero_columns],
            "clifford_violations": [[r + 1, c + 1] for r, c in self.clifford_violations],
            "sign_violations": [[i + 1, j + 1] for i, j in self.sign_violations],
        }


def validate_gamma(gm: GammaMatrix) -> ValidationReport:
    """Check zero columns, the Clifford entry bound, and the sign condition.

    A column pair (i, j) is acceptable when some Clifford row has a strictly
    negative entry product (the crossed words collapse to zero on that row),
    or when every row has a non-positive entry product (the words commute up
    to a sign).
    """
    report = ValidationReport()
    n, m = gm.n, gm.m
    cliff = [gm.sig.is_clifford(r) for r in range(n)]
    for c in range(m):
        if all(gm.rows[r][c] == 0 for r in range(n)):
            report.zero_columns.append(c)
    for r in range(n):
        if not cliff[r]:
            continue
        for c in range(m):
            if abs(gm.rows[r][c]) > 1:
                report.clifford_violations.append((r, c))
    for i in range(m):
        for j in range(i + 1, m):
            prods = [gm.rows[r][i] * gm.rows[r][j] for r in range(n)]
            if any(p < 0 and cliff[r] for r, p in enumerate(prods)):
                continue
            if any(p > 0 for p in prods):
                report.sign_violations.append((i, j))
    return report


def require_valid(gm: GammaMatrix) -> None:
    report = validate_gamma(gm)
    if not report.valid:
        raise InvalidGammaError(report)


def derive_t(gm: GammaMatrix, col: int) -> BaseRingElement:
    """Central element t_i = product over rows of the paired-word factor.

    Row r with entry k contributes u_r (u_r + 1) ... (u_r + k - 1) for k > 0
    and (u_r - 1)...(u_r - |k|) for k < 0 on non-Clifford rows; on a Clifford
    row the k = -1 factor is 1 - u_r (the reduced form of x_r d_r).
    """
    require_valid(gm)
    sig = gm.sig
    t = BaseRingElement.one(sig)
    for r in range(gm.n):
        k = gm.rows[r][col]
        if k == 0:
            continue
        u = BaseRingElement.u(sig, r)
        if k > 0:
            factor = BaseRingElement.one(sig)
            for s in range(k):
                factor = factor * (u + BaseRingElement.const(sig, s))
        elif sig.is_clifford(r):
            factor = BaseRingElement.one(sig) - u
        else:
            factor = BaseRingElement.one(sig)
            for s in range(1, -k + 1):
                factor = factor * (u - BaseRingElement.const(sig, s))
        t = t * factor
    return t


def derive_sigma(gm: GammaMatrix, col: int) -> tuple[int, ...]:
    """Exponent vector of sigma_i: column i of the matrix."""
    require_valid(gm)
    return gm.column(col)


def derive_parities(gm: GammaMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Column parities: p(i) twisted by the row parities, p'(i) the plain sum."""
    p_rows = gm.sig.parity
    pparity = tuple(
        sum(gm.rows[r][c] * p_rows[r] for r in range(gm.n)) & 1 for c in range(gm.m)
    )
    pprime = tuple(sum(gm.rows[r][c] for r in range(gm.n)) & 1 for c in range(gm.m))
    return pparity, pprime


def derive_mu(gm: GammaMatrix):
    """Sign matrix mu plus the column parities it is built from.

    mu_ij = base^(p'(i)p'(j)) * (-1)^(p(i)p(j)) with base = -1 for the plus
    variant and +1 for minus.  The matrix is symmetric; only off-diagonal
    entries enter the commutation relations.
    """
    require_valid(gm)
    pparity, pprime = derive_parities(gm)
    base = -1 if gm.sig.sign == "plus" else 1
    mu = tuple(
        tuple(
            (base if pprime[i] and pprime[j] else 1)
            * (-1 if pparity[i] and pparity[j] else 1)
            for j in range(gm.m)
        )
        for i in range(gm.m)
    )
    return mu, pparity, pprime


@dataclass(frozen=True)
class TgwDatum:
    """Derived data bundle for a validated matrix."""

    gm: GammaMatrix
    t: tuple[BaseRingElement, ...]
    sigma: tuple[tuple[int, ...], ...]
    mu: tuple[tuple[int, ...], ...]
    pparity: tuple[int, ...]
    pprime: tuple[int, ...]


def derive_datum(gm: GammaMatrix) -> TgwDatum:
    require_valid(gm)
    mu, pparity, pprime = derive_mu(gm)
    return TgwDatum(
        gm=gm,
        t=tuple(derive_t(gm, c) for c in range(gm.m)),
        sigma=tuple(gm.column(c) for c in range(gm.m)),
        mu=mu,
        pparity=pparity,
        pprime=pprime,
    )


CONSISTENCY_NOTE = (
    "diagnostic only: when some t_i is a zero divisor these identities are "
    "not known to decide consistency, so failures are reported, not judged"
)


@dataclass
class ConsistencyInstance:
    kind: str  # "pair" or "triple"
    indices: tuple[int, ...]
    passed: bool


@dataclass
class ConsistencyReport:
    instances: list[ConsistencyInstance]
    note: str = CONSISTENCY_NOTE

    @property
    def all_pass(self) -> bool:
        return all(inst.passed for inst in self.instances)

    def to_dict(self) -> dict:
        return {
            "diagnostic": self.note,
            "all_pass": self.all_pass,
            "pairs": [
                {"i": i + 1, "j": j + 1, "pass": inst.passed}
                for inst in self.instances
                if inst.kind == "pair"
                for i, j in [inst.indices]
            ],
            "triples": [
                {"i": i + 1, "j": j + 1, "k": k + 1, "pass": inst.passed}
                for inst in self.instances
                if inst.kind == "triple"
                for i, j, k in [inst.indices]
            ],
        }


def consistency_check(datum: TgwDatum) -> ConsistencyReport:
    """Evaluate the pair and triple identities symbolically in the base ring.

    Pairs i < j:   sigma_i sigma_j(t_i t_j) = mu_ij mu_ji sigma_i(t_i) sigma_j(t_j)
    Triples:       sigma_i sigma_k(t_j) t_j = sigma_i(t_j) sigma_k(t_j),
                   for j and an unordered pair {i, k} disjoint from j.

    Both families are symmetric in the swapped indices, so unordered
    iteration covers all instances.
    """
    m = datum.gm.m
    instances: list[ConsistencyInstance] = []
    for i in range(m):
        for j in range(i + 1, m):
            si, sj = datum.sigma[i], datum.sigma[j]
            both = tuple(a + b for a, b in zip(si, sj))
            lhs = tau_apply(both, datum.t[i] * datum.t[j])
            rhs = (datum.mu[i][j] * datum.mu[j][i]) * (
                tau_apply(si, datum.t[i]) * tau_apply(sj, datum.t[j])
            )
            instances.append(ConsistencyInstance("pair", (i, j), lhs == rhs))
    for j in range(m):
        for i in range(m):
            if i == j:
                continue
            for k in range(i + 1, m):
                if k == j:
                    continue
                si, sk = datum.sigma[i], datum.sigma[k]
                both = tuple(a + b for a, b in zip(si, sk))
                lhs = tau_apply(both, datum.t[j]) * datum.t[j]
                rhs = tau_apply(si, datum.t[j]) * tau_apply(sk, datum.t[j])
                instances.append(ConsistencyInstance("triple", (i, j, k), lhs == rhs))
    return ConsistencyReport(instances)


def phi_generator(gm: GammaMatrix, col: int, kind: str = "X") -> SuperElement:
    """Image of the generator X_i (column word) or Y_i (its involution)."""
    require_valid(gm)
    if kind not in ("X", "Y"):
        raise ValueError(f"kind must be 'X' or 'Y', got {kind!r}")
    if not 0 <= col < gm.m:
        raise IndexError(f"column {col} out of range for m={gm.m}")
    sig = gm.sig
    pairs = [(0, 0)] * sig.n
    for r in range(sig.n):
        k = gm.rows[r][col]
        pairs[r] = (k, 0) if k >= 0 else (0, -k)
    el = SuperElement.from_mono(sig, tuple(pairs))
    return el if kind == "X" else el.star()


@dataclass(frozen=True)
class GradedElement:
    """A superalgebra element tagged with its formal column degree."""

    degree: tuple[int, ...]
    image: SuperElement

    @property
    def is_zero(self) -> bool:
        return self.image.is_zero

    def star(self) -> "GradedElement":
        return GradedElement(tuple(-d for d in self.degree), self.image.star())


def eval_word(gm: GammaMatrix, word: Iterable[tuple[str, int]]) -> GradedElement:
    """Ordered product of generator images for a word over {X_i, Y_i}.

    A zero image with a nonzero formal degree means the word vanishes in the
    graded algebra the matrix defines.
    """
    require_valid(gm)
    degree = [0] * gm.m
    image = SuperElement.one(gm.sig)
    for kind, col in word:
        gen = phi_generator(gm, col, kind)
        degree[col] += 1 if kind == "X" else -1
        image = image * gen
    return GradedElement(tuple(degree), image)


def gradation_pair(a: GradedElement, b: GradedElement) -> BaseRingElement:
    """Degree-zero component of the product of two graded elements."""
    if a.image.sig != b.image.sig:
        raise SignatureMismatchError("operands live in different signatures")
    return project_zero(a.image * b.image)
