"""The Heisenberg-Virasoro Lie algebra and its map algebras.

Basis of the core algebra: d_n, I_n (n ranging over the integers) plus the
central elements C, C_D, C_I.  The defining brackets are

    [d_n, d_m] = (m - n) d_{n+m}  +  delta_{n,-m} (n^3 - n)/12 C
    [d_n, I_m] = m I_{n+m}        +  delta_{n,-m} (n^2 + n)   C_D
    [I_n, I_m] = n delta_{n,-m} C_I
    [C, -] = [C_D, -] = [C_I, -] = 0

and the map algebra over a commutative coefficient algebra extends them by
[g1 (x) p, g2 (x) q] = [g1, g2] (x) pq.

Two coefficient algebras are supported: the full polynomial algebra
C[b_1..b_k] (sparse exponent keys) and finite direct sums of jet quotients
B/m^s at distinct points (point-tagged jet keys).  The plain algebra is the
k = 0 polynomial case, whose only monomial is the empty one.

The cocycle coefficients are stored as exact rationals; no normalization
freedom is taken.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, NamedTuple

from .errors import ConfigurationError, DimensionMismatchError, ParseError
from .polys import PolyB, exponents_upto, jet_expand
from .scalars import ONE, ZERO, parse_scalar, render_scalar, scalar

_CENTRAL_KINDS = ("C", "CD", "CI")
_KINDS = ("d", "I") + _CENTRAL_KINDS


class Generator(NamedTuple):
    """A basis generator of the core algebra.  Central kinds carry index 0."""

    kind: str
    index: int = 0

    @property
    def degree(self) -> int:
        return self.index if self.kind in ("d", "I") else 0

    @property
    def is_central_kind(self) -> bool:
        return self.kind in _CENTRAL_KINDS

    def render(self) -> str:
        if self.kind == "d":
            return f"d({self.index})"
        if self.kind == "I":
            return f"I({self.index})"
        return {"C": "C", "CD": "C_D", "CI": "C_I"}[self.kind]


def d(n: int) -> Generator:
    return Generator("d", n)


def I(n: int) -> Generator:  # noqa: E743 - matches the classical name
    return Generator("I", n)


C = Generator("C")
C_D = Generator("CD")
C_I = Generator("CI")

# structure function signature: (kind1, n1, kind2, n2) -> tuple of
# (kind, index, rational coefficient); used by brackets and straightening.
StructureFn = Callable[[str, int, str, int], tuple]


def hv_structure(k1: str, n1: int, k2: str, n2: int) -> tuple:
    """Structure constants of the bracket on basis generators."""
    if k1 in _CENTRAL_KINDS or k2 in _CENTRAL_KINDS:
        return ()
    if k1 == "d":
        if k2 == "d":
            out = []
            if n1 != n2:
                out.append(("d", n1 + n2, n2 - n1))
            if n1 == -n2:
                c = Fraction(n1**3 - n1, 12)
                if c:
                    out.append(("C", 0, c))
            return tuple(out)
        out = []
        if n2:
            out.append(("I", n1 + n2, n2))
        if n1 == -n2:
            c = n1 * n1 + n1
            if c:
                out.append(("CD", 0, c))
        return tuple(out)
    if k2 == "d":
        # [I_n, d_m] = -[d_m, I_n]
        out = []
        if n1:
            out.append(("I", n1 + n2, -n1))
        if n2 == -n1:
            c = n2 * n2 + n2
            if c:
                out.append(("CD", 0, -c))
        return tuple(out)
    if n1 == -n2 and n1:
        return (("CI", 0, n1),)
    return ()


# ---------------------------------------------------------------------------
# coefficient algebras
# ---------------------------------------------------------------------------


class PolynomialCoefficients:
    """The polynomial algebra C[b_1..b_k]; keys are exponent tuples.

    k = 0 gives the trivial coefficient algebra C, i.e. the core algebra
    itself: the single key is the empty tuple.
    """

    __slots__ = ("k",)

    def __init__(self, k: int):
        if k < 0:
            raise ConfigurationError(f"variable count must be >= 0, got {k}")
        object.__setattr__(self, "k", int(k))

    def __setattr__(self, name, value):
        raise AttributeError("PolynomialCoefficients is immutable")

    def multiply(self, r, s):
        return (((tuple(a + b for a, b in zip(r, s))), 1),)

    def unit_keys(self):
        return (((0,) * self.k, ONE),)

    def keys_upto(self, bound: int) -> list:
        return exponents_upto(self.k, bound)

    def render_key(self, key) -> str:
        return "" if not any(key) else "b[" + ",".join(str(e) for e in key) + "]"

    def __eq__(self, other):
        return isinstance(other, PolynomialCoefficients) and self.k == other.k

    def __hash__(self):
        return hash(("poly", self.k))

    def __repr__(self):
        return f"PolynomialCoefficients(k={self.k})"


class QuotientCoefficients:
    """A finite direct sum of jet quotients B/m_i^{s_i} at distinct points.

    Keys are (point_index, jet_exponents).  Products of keys at different
    points vanish; at the same point they follow the truncated ring.  The
    unit decomposes as the sum of the degree-zero jets of every point.
    """

    __slots__ = ("quotients",)

    def __init__(self, quotients):
        quotients = tuple(quotients)
        if not quotients:
            raise ConfigurationError("need at least one jet quotient")
        k = quotients[0].k
        if any(q.k != k for q in quotients):
            raise DimensionMismatchError("all quotient points must share k")
        points = [q.point for q in quotients]
        if len(set(points)) != len(points):
            raise ConfigurationError("quotient points must be distinct")
        object.__setattr__(self, "quotients", quotients)

    def __setattr__(self, name, value):
        raise AttributeError("QuotientCoefficients is immutable")

    @property
    def k(self) -> int:
        return self.quotients[0].k

    @property
    def dimension(self) -> int:
        return sum(q.dimension for q in self.quotients)

    def basis_keys(self) -> list:
        return [(i, r) for i, q in enumerate(self.quotients) for r in q.basis()]

    def multiply(self, key1, key2):
        i, r = key1
        j, s = key2
        if i != j:
            return ()
        out = self.quotients[i].multiply_exps(r, s)
        return () if out is None else (((i, out), 1),)

    def unit_keys(self):
        return tuple(((i, (0,) * self.k), ONE) for i in range(len(self.quotients)))

    def keys_upto(self, bound: int) -> list:
        return [(i, r) for (i, r) in self.basis_keys() if sum(r) <= bound]

    def project(self, p: PolyB) -> dict:
        """Image of a polynomial: jet-expand at every point.  A ring map."""
        out = {}
        for i, q in enumerate(self.quotients):
            for r, c in jet_expand(p, q).items():
                out[(i, r)] = c
        return out

    def render_key(self, key) -> str:
        i, r = key
        inner = ",".join(str(e) for e in r)
        if len(self.quotients) == 1:
            return f"e[{inner}]"
        return f"e{i}[{inner}]"

    def __eq__(self, other):
        return isinstance(other, QuotientCoefficients) and self.quotients == other.quotients

    def __hash__(self):
        return hash(self.quotients)

    def __repr__(self):
        return f"QuotientCoefficients({list(self.quotients)!r})"


HV = PolynomialCoefficients(0)


def quotient_algebra(quotients) -> QuotientCoefficients:
    """Coefficient algebra of the quotient map algebra over distinct points."""
    return QuotientCoefficients(quotients)


# ---------------------------------------------------------------------------
# algebra elements
# ---------------------------------------------------------------------------


class AlgebraElement:
    """Finite linear combination of generators tensored with coefficient keys."""

    __slots__ = ("coeffs", "terms")

    def __init__(self, coeffs, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = scalar(c)
            if not c.is_zero:
                clean[key] = c
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "AlgebraElement"):
        if self.coeffs != other.coeffs:
            raise DimensionMismatchError("elements live over different coefficient algebras")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, ZERO) + c
        return AlgebraElement(self.coeffs, out)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return AlgebraElement(self.coeffs, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        try:
            c = scalar(other)
        except TypeError:
            return NotImplemented
        return AlgebraElement(self.coeffs, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.terms == other.terms

    def __hash__(self):
        return hash((self.coeffs, frozenset(self.terms.items())))

    def degree(self) -> int | None:
        """Common degree of all terms, or None if mixed (0 for the zero element)."""
        degs = {g.degree for g, _key in self.terms}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None

    def grade_split(self):
        """Split into (negative, zero, positive) graded parts; they sum back."""
        neg, zero, pos = {}, {}, {}
        for (g, key), c in self.terms.items():
            bucket = zero if g.degree == 0 else (pos if g.degree > 0 else neg)
            bucket[(g, key)] = c
        return (
            AlgebraElement(self.coeffs, neg),
            AlgebraElement(self.coeffs, zero),
            AlgebraElement(self.coeffs, pos),
        )

    def render(self) -> str:
        return render_element(self)

    def __repr__(self):
        return f"AlgebraElement({self.render()})"


def element(coeffs, terms) -> AlgebraElement:
    """Build an element from {(Generator, key): coefficient}-like pairs."""
    acc: dict = {}
    items = terms.items() if isinstance(terms, dict) else terms
    for key, c in items:
        acc[key] = acc.get(key, ZERO) + scalar(c)
    return AlgebraElement(coeffs, acc)


def gen_elt(coeffs, g: Generator, key=None, coefficient=ONE) -> AlgebraElement:
    """Single term g (x) key; key defaults to the zero-exponent monomial."""
    if key is None:
        if isinstance(coeffs, PolynomialCoefficients):
            key = (0,) * coeffs.k
        else:
            raise ConfigurationError("key required over quotient coefficients")
    return AlgebraElement(coeffs, {(g, key): scalar(coefficient)})


def zero_element(coeffs) -> AlgebraElement:
    return AlgebraElement(coeffs, {})


def bracket(x: AlgebraElement, y: AlgebraElement, structure: StructureFn = hv_structure) -> AlgebraElement:
    """The Lie bracket, extended to the map algebra by multiplying keys."""
    x._check(y)
    multiply = x.coeffs.multiply
    acc: dict = {}
    for (g1, k1), c1 in x.terms.items():
        for (g2, k2), c2 in y.terms.items():
            struct = structure(g1.kind, g1.index, g2.kind, g2.index)
            if not struct:
                continue
            c12 = c1 * c2
            for key3, cm in multiply(k1, k2):
                base = c12 if cm == 1 else c12 * cm
                for kind, idx, sc in struct:
                    tk = (Generator(kind, idx), key3)
                    acc[tk] = acc.get(tk, ZERO) + base * sc
    return AlgebraElement(x.coeffs, acc)


def jacobi_check(x: AlgebraElement, y: AlgebraElement, z: AlgebraElement,
                 structure: StructureFn = hv_structure) -> AlgebraElement:
    """[x,[y,z]] + [y,[z,x]] + [z,[x,y]]; zero certifies Jacobi on the triple."""
    return (
        bracket(x, bracket(y, z, structure), structure)
        + bracket(y, bracket(z, x, structure), structure)
        + bracket(z, bracket(x, y, structure), structure)
    )


def grade_split(x: AlgebraElement):
    return x.grade_split()


def project_element(x: AlgebraElement, quotient: QuotientCoefficients) -> AlgebraElement:
    """Push an element over C[b..] down to the quotient algebra.

    Jet expansion term by term; this is a Lie algebra map because jets
    multiply like the truncated ring.
    """
    if not isinstance(x.coeffs, PolynomialCoefficients):
        raise DimensionMismatchError("can only project from polynomial coefficients")
    if x.coeffs.k != quotient.k:
        raise DimensionMismatchError("variable count mismatch")
    acc: dict = {}
    for (g, exps), c in x.terms.items():
        for key, jc in quotient.project(PolyB.monomial(exps)).items():
            tk = (g, key)
            acc[tk] = acc.get(tk, ZERO) + c * jc
    return AlgebraElement(quotient, acc)


# ---------------------------------------------------------------------------
# exhaustive bracket-law sweep
# ---------------------------------------------------------------------------


@dataclass
class JacobiSweepReport:
    """Outcome of the exhaustive bracket-law sweep."""

    index_bound: int
    monomial_bound: int
    k: int
    pairs_checked: int = 0
    triples_checked: int = 0
    antisymmetry_violations: list = field(default_factory=list)
    jacobi_violations: list = field(default_factory=list)
    centrality_violations: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not (
            self.antisymmetry_violations
            or self.jacobi_violations
            or self.centrality_violations
        )


def sweep_terms(index_bound: int, monomial_bound: int, k: int) -> list:
    """All decorated generators (kind, index, exponents) within the bounds."""
    gens = [("d", n) for n in range(-index_bound, index_bound + 1)]
    gens += [("I", n) for n in range(-index_bound, index_bound + 1)]
    gens += [(kind, 0) for kind in _CENTRAL_KINDS]
    monos = exponents_upto(k, monomial_bound)
    return [(kind, n, m) for (kind, n) in gens for m in monos]


def jacobi_antisymmetry_sweep(
    index_bound: int,
    monomial_bound: int,
    k: int,
    structure: StructureFn = hv_structure,
    max_violations: int = 20,
) -> JacobiSweepReport:
    """Exhaustively check antisymmetry and Jacobi on decorated generators.

    Covers every ordered pair for antisymmetry and centrality, and every
    ordered triple for Jacobi, over indices |n| <= index_bound and monomial
    exponents |r| <= monomial_bound in k variables.  Runs on raw terms for
    speed; the structure function and the exponent-addition product are the
    same ones the element-level bracket uses.
    """
    report = JacobiSweepReport(index_bound, monomial_bound, k)
    terms = sweep_terms(index_bound, monomial_bound, k)
    nterms = len(terms)

    def term_bracket(k1, n1, m1, k2, n2, m2):
        struct = structure(k1, n1, k2, n2)
        if not struct:
            return ()
        mono = tuple(a + b for a, b in zip(m1, m2))
        return tuple((kind, idx, mono, c) for kind, idx, c in struct)

    # pair table, antisymmetry, centrality
    pair_table = [None] * (nterms * nterms)
    for i, (k1, n1, m1) in enumerate(terms):
        base = i * nterms
        for j, (k2, n2, m2) in enumerate(terms):
            pair_table[base + j] = term_bracket(k1, n1, m1, k2, n2, m2)
    for i in range(nterms):
        for j in range(i, nterms):
            report.pairs_checked += 1
            acc: dict = {}
            for kind, idx, mono, c in pair_table[i * nterms + j]:
                key = (kind, idx, mono)
                acc[key] = acc.get(key, 0) + c
            for kind, idx, mono, c in pair_table[j * nterms + i]:
                key = (kind, idx, mono)
                acc[key] = acc.get(key, 0) + c
            if any(acc.values()) and len(report.antisymmetry_violations) < max_violations:
                report.antisymmetry_violations.append((terms[i], terms[j], dict(acc)))
    for i, (k1, n1, m1) in enumerate(terms):
        if k1 in _CENTRAL_KINDS or (k1 == "I" and n1 == 0):
            # I_0 is central in the core algebra; over coefficients this is
            # the statement [I_0 (x) p, g (x) q] = 0, swept here too.
            for j in range(nterms):
                if pair_table[i * nterms + j] or pair_table[j * nterms + i]:
                    if len(report.centrality_violations) < max_violations:
                        report.centrality_violations.append((terms[i], terms[j]))

    # Jacobi on all ordered triples
    triples = 0
    violations = report.jacobi_violations
    for i, (k1, n1, m1) in enumerate(terms):
        row_i = i * nterms
        for j in range(nterms):
            k2, n2, m2 = terms[j]
            row_j = j * nterms
            b_ij = pair_table[row_i + j]
            for l in range(nterms):
                triples += 1
                acc: dict = {}
                # [x, [y, z]]
                for kind, idx, mono, c in pair_table[row_j + l]:
                    for kk, ii, mm, cc in term_bracket(k1, n1, m1, kind, idx, mono):
                        key = (kk, ii, mm)
                        v = acc.get(key, 0) + c * cc
                        if v:
                            acc[key] = v
                        elif key in acc:
                            del acc[key]
                # [y, [z, x]]
                k3, n3, m3 = terms[l]
                for kind, idx, mono, c in pair_table[l * nterms + i]:
                    for kk, ii, mm, cc in term_bracket(k2, n2, m2, kind, idx, mono):
                        key = (kk, ii, mm)
                        v = acc.get(key, 0) + c * cc
                        if v:
                            acc[key] = v
                        elif key in acc:
                            del acc[key]
                # [z, [x, y]]
                for kind, idx, mono, c in b_ij:
                    for kk, ii, mm, cc in term_bracket(k3, n3, m3, kind, idx, mono):
                        key = (kk, ii, mm)
                        v = acc.get(key, 0) + c * cc
                        if v:
                            acc[key] = v
                        elif key in acc:
                            del acc[key]
                if acc and len(violations) < max_violations:
                    violations.append((terms[i], terms[j], terms[l], dict(acc)))
    report.triples_checked = triples
    return report


# ---------------------------------------------------------------------------
# text rendering and parsing of elements
# ---------------------------------------------------------------------------

_GEN_ORDER = {"d": 0, "I": 1, "C": 2, "CD": 3, "CI": 4}


def _term_sort_key(item):
    (g, key), _c = item
    return (g.degree, _GEN_ORDER[g.kind], g.index, key)


def render_element(x: AlgebraElement) -> str:
    """Text form like ``-4*d(0) + 1/2*C`` or ``I(2)(x)b[1,1]``."""
    if x.is_zero:
        return "0"
    parts = []
    for (g, key), c in sorted(x.terms.items(), key=_term_sort_key):
        keytext = x.coeffs.render_key(key)
        body = g.render() + (f"⊗{keytext}" if keytext else "")
        if c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            sc = render_scalar(c)
            if "+" in sc[1:] or "-" in sc[1:]:
                sc = f"({sc})"
            parts.append(f"{sc}*{body}")
    text = parts[0]
    for p in parts[1:]:
        text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return text


_GEN_NAMES = {"C": C, "C_D": C_D, "C_I": C_I}


def _parse_generator(text: str) -> Generator:
    text = text.strip()
    if text in _GEN_NAMES:
        return _GEN_NAMES[text]
    for kind in ("d", "I"):
        if text.startswith(kind + "(") and text.endswith(")"):
            try:
                return Generator(kind, int(text[2:-1]))
            except ValueError as exc:
                raise ParseError(f"bad generator index in {text!r}") from exc
    raise ParseError(f"unknown generator {text!r}")


def parse_element(text: str, coeffs: PolynomialCoefficients) -> AlgebraElement:
    """Parse the grammar emitted by :func:`render_element` (polynomial keys)."""
    s = text.strip().replace("−", "-")
    if s == "0":
        return zero_element(coeffs)
    # split on top-level +/- (parens only occur inside scalar parts)
    chunks, depth, start = [], 0, 0
    for pos, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and pos > start:
            chunks.append(s[start:pos].strip())
            start = pos
    chunks.append(s[start:].strip())
    terms: dict = {}
    for chunk in chunks:
        if not chunk:
            raise ParseError(f"malformed element {text!r}")
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:].strip()
        coeff = ONE
        if "*" in chunk:
            head, _, rest = chunk.partition("*")
            probe = head.strip()
            if probe.startswith("(") and probe.endswith(")"):
                probe = probe[1:-1]
            try:
                coeff = parse_scalar(probe)
                chunk = rest.strip()
            except ParseError:
                pass  # the * belonged to something else; treat whole as body
        body = chunk
        key = (0,) * coeffs.k
        if "⊗" in body:
            gen_text, _, key_text = body.partition("⊗")
            key_text = key_text.strip()
            if not (key_text.startswith("b[") and key_text.endswith("]")):
                raise ParseError(f"bad monomial {key_text!r}")
            try:
                key = tuple(int(v) for v in key_text[2:-1].split(","))
            except ValueError as exc:
                raise ParseError(f"bad monomial {key_text!r}") from exc
            if len(key) != coeffs.k:
                raise DimensionMismatchError(f"monomial {key} needs k={coeffs.k}")
            body = gen_text
        g = _parse_generator(body)
        tk = (g, key)
        terms[tk] = terms.get(tk, ZERO) + sign * coeff
    return AlgebraElement(coeffs, terms)
