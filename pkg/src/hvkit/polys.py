"""Polynomial coefficient machinery.

Three flavours live here:

* ``PolyT`` -- dense univariate polynomials in t over Q(i).  These are the
  underlying vectors of the rank-one-free module family, where degrees stay
  small, so a dense coefficient list is the right shape.
* ``PolyB`` -- sparse multivariate polynomials in b_1..b_k, the coefficient
  algebra B of the map construction.  Terms map exponent tuples to scalars;
  zero coefficients are never stored.
* ``JetQuotient`` -- the finite-dimensional quotient B/m^s at a point, with
  basis the monomials (b - mu)^r of total degree < s.  Order 1 reproduces
  plain evaluation at the point; :func:`jet_expand` is the quotient map.

Points of C^k are plain tuples of scalars (type alias ``PointB``).
"""

from __future__ import annotations

import itertools
from math import comb

from .errors import ConfigurationError, DimensionMismatchError
from .scalars import ONE, ZERO, Scalar, render_scalar, scalar

MonomialExp = tuple[int, ...]
PointB = tuple[Scalar, ...]


def exponents_upto(k: int, bound: int) -> list[MonomialExp]:
    """All exponent k-tuples r with |r| <= bound, sorted by (|r|, r)."""
    if k == 0:
        return [()]
    out = []
    for total in range(bound + 1):
        for cuts in itertools.combinations(range(total + k - 1), k - 1):
            prev, exps = -1, []
            for c in cuts:
                exps.append(c - prev - 1)
                prev = c
            exps.append(total + k - 2 - prev)
            out.append(tuple(exps))
    return out


# ---------------------------------------------------------------------------
# dense univariate polynomials in t
# ---------------------------------------------------------------------------


class PolyT:
    """Polynomial in t, coefficients ascending by degree, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("PolyT is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls((ONE,))

    @classmethod
    def t_power(cls, n: int):
        return cls((ZERO,) * n + (ONE,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Scalar:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else ZERO

    def __add__(self, other):
        if not isinstance(other, PolyT):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return PolyT(out)

    def __sub__(self, other):
        if not isinstance(other, PolyT):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return PolyT(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, PolyT):
            if not self.coeffs or not other.coeffs:
                return PolyT()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return PolyT(out)
        try:
            c = scalar(other)
        except TypeError:
            return NotImplemented
        return PolyT(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyT):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x) -> Scalar:
        x = scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, n: int) -> "PolyT":
        """Return f(t - n): precompose with the translation t -> t - n."""
        if n == 0 or not self.coeffs:
            return self
        out = [ZERO] * len(self.coeffs)
        for j, cj in enumerate(self.coeffs):
            if cj.is_zero:
                continue
            # (t - n)^j expanded by the binomial theorem
            for i in range(j + 1):
                out[i] = out[i] + (comb(j, i) * (-n) ** (j - i)) * cj
        return PolyT(out)

    def render(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c.is_zero:
                continue
            mono = "1" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if j == 0:
                body = render_scalar(c)
            elif c == 1:
                body = mono
            elif c == -1:
                body = f"-{mono}"
            else:
                sc = render_scalar(c)
                sc = f"({sc})" if ("+" in sc[1:] or "-" in sc[1:]) else sc
                body = f"{sc}*{mono}"
            parts.append(body)
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    def __repr__(self):
        return f"PolyT({self.render()})"


def polyt_shift(f: PolyT, n: int) -> PolyT:
    """Substitute t -> t - n.  Degree-preserving; shifts compose additively."""
    return f.shift(n)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials in b_1..b_k
# ---------------------------------------------------------------------------


class PolyB:
    """Element of B = C[b_1..b_k] as a sparse exponent-to-scalar map."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != k or any(e < 0 for e in exps):
                raise DimensionMismatchError(f"exponent {exps} invalid for k={k}")
            c = scalar(c)
            if not c.is_zero:
                clean[exps] = clean.get(exps, ZERO) + c
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if not c.is_zero})

    def __setattr__(self, name, value):
        raise AttributeError("PolyB is immutable")

    @classmethod
    def zero(cls, k: int):
        return cls(k, {})

    @classmethod
    def const(cls, k: int, value):
        return cls(k, {(0,) * k: scalar(value)})

    @classmethod
    def variable(cls, k: int, i: int):
        """The polynomial b_{i+1} (0-based index i)."""
        exps = [0] * k
        exps[i] = 1
        return cls(k, {tuple(exps): ONE})

    @classmethod
    def monomial(cls, exps: MonomialExp, coeff=ONE):
        return cls(len(exps), {tuple(exps): scalar(coeff)})

    @property
    def is_zero(self):
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def _check(self, other: "PolyB"):
        if self.k != other.k:
            raise DimensionMismatchError(f"k mismatch: {self.k} vs {other.k}")

    def __add__(self, other):
        if not isinstance(other, PolyB):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, ZERO) + c
        return PolyB(self.k, out)

    def __sub__(self, other):
        if not isinstance(other, PolyB):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return PolyB(self.k, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PolyB):
            self._check(other)
            out: dict[MonomialExp, Scalar] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    out[e] = out.get(e, ZERO) + c1 * c2
            return PolyB(self.k, out)
        try:
            c = scalar(other)
        except TypeError:
            return NotImplemented
        return PolyB(self.k, {e: c * v for e, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PolyB):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exps]
            mono = render_monomial(exps)
            if mono == "1":
                parts.append(render_scalar(c))
            elif c == 1:
                parts.append(mono)
            else:
                sc = render_scalar(c)
                sc = f"({sc})" if ("+" in sc[1:] or "-" in sc[1:]) else sc
                parts.append(f"{sc}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PolyB({self.render()})"


def render_monomial(exps: MonomialExp) -> str:
    factors = [
        f"b{i + 1}" if e == 1 else f"b{i + 1}^{e}"
        for i, e in enumerate(exps)
        if e
    ]
    return "*".join(factors) if factors else "1"


def poly_eval(p: PolyB, point: PointB) -> Scalar:
    """Evaluate p at a point of C^k.  This is the ring map eta: B -> C."""
    if len(point) != p.k:
        raise DimensionMismatchError(f"point has {len(point)} coords, poly has k={p.k}")
    point = tuple(scalar(x) for x in point)
    acc = ZERO
    for exps, c in p.terms.items():
        val = c
        for x, e in zip(point, exps):
            if e:
                val = val * x**e
        acc = acc + val
    return acc


# ---------------------------------------------------------------------------
# jet quotients B/m^s
# ---------------------------------------------------------------------------


class JetQuotient:
    """The quotient B/m^s at a point, m the maximal ideal (b_1-mu_1, .., b_k-mu_k).

    Concretely: scalars on the monomials (b - mu)^r with |r| < order, with
    multiplication truncating everything of total degree >= order.
    """

    __slots__ = ("point", "order")

    def __init__(self, point, order: int):
        if order < 1:
            raise ConfigurationError(f"jet order must be >= 1, got {order}")
        object.__setattr__(self, "point", tuple(scalar(x) for x in point))
        object.__setattr__(self, "order", int(order))

    def __setattr__(self, name, value):
        raise AttributeError("JetQuotient is immutable")

    @property
    def k(self) -> int:
        return len(self.point)

    def basis(self) -> list[MonomialExp]:
        return exponents_upto(self.k, self.order - 1)

    @property
    def dimension(self) -> int:
        return len(self.basis())

    def multiply_exps(self, r: MonomialExp, s: MonomialExp) -> MonomialExp | None:
        """Product of two basis monomials, or None if it truncates to zero."""
        out = tuple(a + b for a, b in zip(r, s))
        return out if sum(out) < self.order else None

    def __eq__(self, other):
        if not isinstance(other, JetQuotient):
            return NotImplemented
        return self.point == other.point and self.order == other.order

    def __hash__(self):
        return hash((self.point, self.order))

    def __repr__(self):
        pt = ", ".join(render_scalar(x) for x in self.point)
        return f"JetQuotient(point=({pt}), order={self.order})"


def jet_expand(p: PolyB, q: JetQuotient) -> dict[MonomialExp, Scalar]:
    """Taylor coefficients of p at q.point, truncated at the quotient order.

    Returns the image of p in B/m^s as a map from (b - mu)^r exponents to
    scalars.  A ring map: the degree-0 coefficient is poly_eval(p, q.point),
    and jets multiply like the truncated ring.
    """
    if p.k != q.k:
        raise DimensionMismatchError(f"poly k={p.k} vs quotient k={q.k}")
    out: dict[MonomialExp, Scalar] = {}
    for exps, c in p.terms.items():
        # b^e = prod_i ((b_i - mu_i) + mu_i)^{e_i}, expanded binomially
        for r in itertools.product(*(range(min(e, q.order - 1) + 1) for e in exps)):
            if sum(r) >= q.order:
                continue
            w = c
            for e_i, r_i, mu_i in zip(exps, r, q.point):
                if e_i > r_i:
                    w = w * (comb(e_i, r_i) * mu_i ** (e_i - r_i))
                else:
                    w = w * comb(e_i, r_i)
            key = tuple(r)
            out[key] = out.get(key, ZERO) + w
    return {r: c for r, c in out.items() if not c.is_zero}


def jets_multiply(
    q: JetQuotient,
    a: dict[MonomialExp, Scalar],
    b: dict[MonomialExp, Scalar],
) -> dict[MonomialExp, Scalar]:
    """Product of two jet-coefficient maps in the truncated ring."""
    out: dict[MonomialExp, Scalar] = {}
    for r, cr in a.items():
        for s, cs in b.items():
            key = q.multiply_exps(r, s)
            if key is None:
                continue
            out[key] = out.get(key, ZERO) + cr * cs
    return {r: c for r, c in out.items() if not c.is_zero}
