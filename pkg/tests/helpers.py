"""Shared test utilities.

The action oracle here is deliberately independent of the package's
rewriting engine: basis vectors of a polynomial-times-exterior space are
acted on letter by letter, with Koszul signs tracked directly.  Clifford
directions contribute exterior factors (kept sorted, insertion and deletion
signs counted), the remaining directions contribute polynomial factors, and
a polynomial-direction letter crossing the exterior block picks up the
mixed swap sign of the variant (+1 for minus, -1 for plus).
"""

from fractions import Fraction

from superweyl import GammaMatrix, Signature, SuperElement, validate_gamma
from superweyl.algebra import _mono_letters

# A basis vector is (exterior subset frozenset, polynomial exponent tuple).


def basis_vec(exts=(), poly=None, n=1):
    return (frozenset(exts), tuple(poly) if poly is not None else (0,) * n)


def apply_letter(sig, code, vec):
    """Apply one generator letter; returns (sign_or_coeff, vec) or None."""
    i, kind = code >> 1, code & 1
    exts, poly = vec
    if sig.is_clifford(i):
        sign = -1 if sum(1 for j in exts if j < i) % 2 else 1
        if kind == 0:
            if i in exts:
                return None
            return sign, (exts | {i}, poly)
        if i not in exts:
            return None
        return sign, (exts - {i}, poly)
    mixed = 1 if sig.sign == "minus" else -1
    cross = mixed ** len(exts)
    if kind == 0:
        p = list(poly)
        p[i] += 1
        return cross, (exts, tuple(p))
    if poly[i] == 0:
        return None
    p = list(poly)
    p[i] -= 1
    return cross * poly[i], (exts, tuple(p))


def act(sig, elem, states):
    """Apply an element to a dict {vec: coeff}; returns the same shape."""
    if isinstance(states, tuple):
        states = {states: Fraction(1)}
    out = {}
    for mono, coeff in elem.terms.items():
        letters = _mono_letters(mono)
        cur = dict(states)
        for code in reversed(letters):
            nxt = {}
            for vec, c in cur.items():
                hit = apply_letter(sig, code, vec)
                if hit is None:
                    continue
                s, vec2 = hit
                c2 = nxt.get(vec2, Fraction(0)) + c * s
                if c2:
                    nxt[vec2] = c2
                else:
                    nxt.pop(vec2, None)
            cur = nxt
        for vec, c in cur.items():
            c2 = out.get(vec, Fraction(0)) + coeff * c
            if c2:
                out[vec] = c2
            else:
                out.pop(vec, None)
    return out


def sample_basis(sig, rng, max_poly=2):
    exts = frozenset(i for i in sig.clifford_indices if rng.random() < 0.5)
    poly = tuple(
        0 if sig.is_clifford(i) else rng.randint(0, max_poly) for i in range(sig.n)
    )
    return (exts, poly)


def random_monomial(sig, rng, max_exp=2, budget=4):
    pairs = []
    left = budget
    for i in range(sig.n):
        cap = 1 if sig.is_clifford(i) else max_exp
        a = rng.randint(0, min(cap, left))
        left -= a
        b = rng.randint(0, min(cap, left))
        left -= b
        pairs.append((a, b))
    return tuple(pairs)


def random_element(sig, rng, max_terms=3, max_exp=2, budget=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = random_monomial(sig, rng, max_exp, budget)
        coeff = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        if coeff:
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
    return SuperElement(sig, terms)


def random_homogeneous(sig, rng, max_terms=3, max_exp=2):
    """Nonzero element whose monomials all share one degree vector."""
    degree = tuple(
        rng.randint(-1, 1) if sig.is_clifford(i) else rng.randint(-max_exp, max_exp)
        for i in range(sig.n)
    )
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        pairs = []
        for i, d in enumerate(degree):
            cap = 1 if sig.is_clifford(i) else max_exp
            b = rng.randint(max(0, -d), max(0, min(cap - d, cap)))
            a = d + b
            if not 0 <= a <= cap or not 0 <= b <= cap:
                a, b = (d, 0) if d >= 0 else (0, -d)
            pairs.append((a, b))
        coeff = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 2))
        mono = tuple(pairs)
        terms[mono] = terms.get(mono, Fraction(0)) + coeff
    el = SuperElement(sig, terms)
    if el.is_zero:
        mono = tuple((d, 0) if d >= 0 else (0, -d) for d in degree)
        el = SuperElement(sig, {mono: Fraction(1)})
    return el


def random_signature(rng, max_n=3):
    n = rng.randint(1, max_n)
    return Signature(
        rng.choice(["minus", "plus"]), tuple(rng.randint(0, 1) for _ in range(n))
    )


def random_word(sig, rng, max_len=8):
    length = rng.randint(0, max_len)
    return [
        (rng.choice(["x", "d"]), rng.randrange(sig.n)) for _ in range(length)
    ]


def random_valid_gamma(rng, max_n=3, max_m=3, sign=None, parity=None):
    """Rejection-sample a valid matrix; sparse columns keep acceptance high."""
    while True:
        n = len(parity) if parity is not None else rng.randint(1, max_n)
        m = rng.randint(1, max_m)
        sig = Signature(
            sign or rng.choice(["minus", "plus"]),
            tuple(parity) if parity is not None else tuple(
                rng.randint(0, 1) for _ in range(n)
            ),
        )
        rows = [[0] * m for _ in range(n)]
        for c in range(m):
            while True:
                col = [
                    rng.choice((-1, 0, 0, 1)) if sig.is_clifford(r)
                    else rng.choice((-2, -1, 0, 0, 1, 2))
                    for r in range(n)
                ]
                if any(col):
                    break
            for r in range(n):
                rows[r][c] = col[r]
        gm = GammaMatrix(sig, tuple(tuple(r) for r in rows))
        if validate_gamma(gm).valid:
            return gm


def random_degree_vector(rng, m, max_total=6):
    total = rng.randint(0, max_total)
    g = [0] * m
    for _ in range(total):
        g[rng.randrange(m)] += rng.choice((-1, 1))
    return tuple(g)


def bidiagonal_matrix(sig, m, last=None):
    """Columns e_c - e_(c+1), plus an optional single entry closing column."""
    n = sig.n
    rows = [[0] * m for _ in range(n)]
    for c in range(min(m, n - 1)):
        rows[c][c] = 1
        rows[c + 1][c] = -1
    if last is not None:
        rows[n - 1][m - 1] = last
    return GammaMatrix(sig, tuple(tuple(r) for r in rows))


def inj_example_matrices(p=1, q=2):
    """The three injectivity example shapes over the plus variant."""
    sig = Signature("plus", (0,) * p + (1,) * q)
    n = p + q
    return {
        "alpha": bidiagonal_matrix(sig, n - 1),
        "beta": bidiagonal_matrix(sig, n, last=1),
        "gamma": bidiagonal_matrix(sig, n, last=2),
    }
