"""The five module families behind one action interface.

Every family is a handle object with ``act(x, v)`` taking an algebra element
over the family's coefficient algebra and a family-specific vector:

* ``IntermediateSeries`` -- weight lines v_{alpha+k} indexed by integer
  offsets; d_i shifts a line by i with coefficient alpha + k + beta*i, I_i
  shifts with the fixed scalar f, and the central elements act as zero.
* ``OmegaModule`` -- C[t] with the translation action
  d_n (x) b^r : f |-> mu^r lambda^{n-|r|} f(t-n)(t - n*alpha), the rank-one
  family free over the subalgebra generated by d_0 (d_0 acts as
  multiplication by t).  lambda must be nonzero.
* ``EvaluationModule`` -- wraps a module over a single jet quotient (or over
  the core algebra when the order is 1) into a module over the polynomial
  map algebra: x (x) p acts through the jet expansion of p.
* ``TruncatedVerma`` -- the highest-weight module induced from a functional
  on the zero part, materialized on its PBW basis up to a truncation level.
  Raising operators are never truncated (they lower the level); lowering
  past the truncation raises :class:`LevelOverflowError`.
* ``TensorModule`` -- Leibniz action on pairs of factor basis vectors.

Handles are immutable descriptors and ``act`` is pure, so concurrent use is
safe.  Descriptors round-trip through :func:`describe` /
:func:`module_from_descriptor` as JSON-shaped dicts.
"""

from __future__ import annotations

from .algebra import (
    AlgebraElement,
    Generator,
    PolynomialCoefficients,
    QuotientCoefficients,
    StructureFn,
    hv_structure,
)
from .errors import (
    ConfigurationError,
    DimensionMismatchError,
    LevelOverflowError,
)
from .polys import JetQuotient, PolyB, PolyT, jet_expand
from .scalars import ONE, ZERO, Scalar, parse_scalar, render_scalar, scalar


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


class _MapVector:
    """Finitely supported map from basis keys to scalars."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = scalar(c)
            if not c.is_zero:
                clean[key] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def is_zero(self):
        return not self.terms

    def coeff(self, key) -> Scalar:
        return self.terms.get(key, ZERO)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, ZERO) + c
        return type(self)(out)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        try:
            c = scalar(other)
        except TypeError:
            return NotImplemented
        return type(self)({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"{type(self).__name__}({self.terms!r})"


class WeightVector(_MapVector):
    """Combination of weight lines, keyed by the integer offset k of v_{alpha+k}."""

    @classmethod
    def line(cls, k: int, coeff=ONE):
        return cls({int(k): scalar(coeff)})

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            body = f"v[{k}]"
            parts.append(body if c == 1 else f"{render_scalar(c)}*{body}")
        return " + ".join(parts)


class PBWVector(_MapVector):
    """Combination of PBW monomials applied to the highest-weight generator."""

    @classmethod
    def highest_weight(cls, coeff=ONE):
        return cls({(): scalar(coeff)})

    def render(self, coeffs=None) -> str:
        def factor_text(f):
            kind, idx, key = f
            body = Generator(kind, idx).render()
            if coeffs is not None:
                keytext = coeffs.render_key(key)
                if keytext:
                    body += f"⊗{keytext}"
            return body

        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            body = "·".join([factor_text(f) for f in mono] + ["hw"])
            if c == 1:
                parts.append(body)
            else:
                parts.append(f"{render_scalar(c)}*{body}")
        return " + ".join(parts)


class TensorVector(_MapVector):
    """Combination of pure tensors, keyed by (left basis key, right basis key)."""

    @classmethod
    def pure(cls, left_key, right_key, coeff=ONE):
        return cls({(left_key, right_key): scalar(coeff)})


# ---------------------------------------------------------------------------
# base handle
# ---------------------------------------------------------------------------


class Module:
    family = "abstract"

    def algebra(self):
        raise NotImplementedError

    def act(self, x: AlgebraElement, v):
        raise NotImplementedError

    def zero_vector(self):
        raise NotImplementedError

    def basis_vector(self, key):
        raise NotImplementedError

    def components(self, v):
        """Decompose a vector into (basis key, coefficient) pairs."""
        raise NotImplementedError

    def window_basis(self, window: int):
        """Finite list of (key, basis vector) pairs used by sweeps and probes."""
        raise NotImplementedError

    def describe(self) -> dict:
        raise NotImplementedError

    def _check_element(self, x: AlgebraElement):
        if x.coeffs != self.algebra():
            raise DimensionMismatchError(
                f"element over {x.coeffs!r} cannot act on a {self.family} module over {self.algebra()!r}"
            )


# ---------------------------------------------------------------------------
# intermediate series
# ---------------------------------------------------------------------------


class IntermediateSeries(Module):
    """The uniformly bounded family with one-dimensional weight spaces.

    Basis lines v_{alpha+k}, k an integer; the actions are

        d_i . v_{alpha+k} = (alpha + k + beta*i) v_{alpha+k+i}
        I_i . v_{alpha+k} = f v_{alpha+k+i}
        C = C_D = C_I = 0.

    ``drop_line`` realizes the simple subquotient obtained by deleting one
    basis line; this is only a module when that line is both killed by and
    unreachable from every operator, which forces beta = 0, f = 0 and
    alpha + drop_line = 0 (the classical degenerate case).
    """

    family = "intermediate"

    __slots__ = ("alpha", "beta", "f", "drop_line", "_coeffs")

    def __init__(self, alpha, beta, f, drop_line: int | None = None):
        object.__setattr__(self, "alpha", scalar(alpha))
        object.__setattr__(self, "beta", scalar(beta))
        object.__setattr__(self, "f", scalar(f))
        object.__setattr__(self, "drop_line", drop_line)
        object.__setattr__(self, "_coeffs", PolynomialCoefficients(0))
        if drop_line is not None:
            if not (self.f.is_zero and self.beta.is_zero and (self.alpha + drop_line).is_zero):
                raise ConfigurationError(
                    "drop_line requires the degenerate parameters alpha+drop_line=0, beta=0, f=0"
                )

    def __setattr__(self, name, value):
        raise AttributeError("IntermediateSeries is immutable")

    @classmethod
    def primed_zero(cls):
        """The nontrivial simple subquotient of the (0,0,0) module."""
        return cls(0, 0, 0, drop_line=0)

    def algebra(self):
        return self._coeffs

    def act(self, x: AlgebraElement, v: WeightVector) -> WeightVector:
        self._check_element(x)
        drop = self.drop_line
        out: dict = {}
        for (g, _key), c in x.terms.items():
            if g.is_central_kind:
                continue
            i = g.index
            if g.kind == "d":
                for k, cv in v.terms.items():
                    if k == drop:
                        continue
                    w = self.alpha + k + self.beta * i
                    if w.is_zero:
                        continue
                    tgt = k + i
                    if tgt == drop:
                        continue
                    out[tgt] = out.get(tgt, ZERO) + c * cv * w
            else:
                if self.f.is_zero:
                    continue
                cf = c * self.f
                for k, cv in v.terms.items():
                    if k == drop:
                        continue
                    tgt = k + i
                    if tgt == drop:
                        continue
                    out[tgt] = out.get(tgt, ZERO) + cf * cv
        return WeightVector(out)

    def zero_vector(self):
        return WeightVector()

    def basis_vector(self, key):
        return WeightVector.line(key)

    def components(self, v: WeightVector):
        return sorted(v.terms.items())

    def window_basis(self, window: int):
        return [
            (k, WeightVector.line(k))
            for k in range(-window, window + 1)
            if k != self.drop_line
        ]

    def describe(self) -> dict:
        out = {
            "family": self.family,
            "alpha": render_scalar(self.alpha),
            "beta": render_scalar(self.beta),
            "F": render_scalar(self.f),
        }
        if self.drop_line is not None:
            out["drop_line"] = self.drop_line
        return out


# ---------------------------------------------------------------------------
# rank-one free family
# ---------------------------------------------------------------------------


class OmegaModule(Module):
    """C[t] with the action

        d_n (x) b^r . f = mu^r lambda^{n-|r|} f(t-n) (t - n*alpha)
        I_n (x) b^r . f = mu^r lambda^{n-|r|} beta f(t-n)
        C = C_D = C_I = 0  (and their decorated versions).

    Free of rank one over the polynomial algebra in d_0: acting by d_0 is
    multiplication by t.  Negative powers of lambda occur, so lambda != 0.
    """

    family = "omega"

    __slots__ = ("lam", "alpha", "mu", "beta", "_coeffs", "_term_cache")

    def __init__(self, lam, alpha, mu, beta):
        lam = scalar(lam)
        if lam.is_zero:
            raise ConfigurationError("lambda must be nonzero")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "alpha", scalar(alpha))
        object.__setattr__(self, "mu", tuple(scalar(m) for m in mu))
        object.__setattr__(self, "beta", scalar(beta))
        object.__setattr__(self, "_coeffs", PolynomialCoefficients(len(self.mu)))
        object.__setattr__(self, "_term_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("OmegaModule is immutable")

    @property
    def k(self) -> int:
        return len(self.mu)

    def algebra(self):
        return self._coeffs

    def _lambda_power(self, n: int, total: int) -> Scalar:
        return self.lam ** (n - total)

    def _scale(self, n: int, exps) -> Scalar:
        s = self._lambda_power(n, sum(exps))
        for mu_i, e in zip(self.mu, exps):
            if e:
                s = s * mu_i**e
        return s

    def _term_on_power(self, kind: str, n: int, exps, j: int) -> PolyT:
        """Action of one decorated generator on t^j, cached per handle."""
        key = (kind, n, exps, j)
        hit = self._term_cache.get(key)
        if hit is None:
            s = self._scale(n, exps)
            shifted = PolyT.t_power(j).shift(n)
            if kind == "d":
                hit = s * (shifted * PolyT((-n * self.alpha, ONE)))
            else:
                hit = (s * self.beta) * shifted
            self._term_cache[key] = hit
        return hit

    def act(self, x: AlgebraElement, f: PolyT) -> PolyT:
        self._check_element(x)
        acc: dict = {}
        for (g, exps), c in x.terms.items():
            if g.is_central_kind:
                continue
            for j, fc in enumerate(f.coeffs):
                if fc.is_zero:
                    continue
                base = self._term_on_power(g.kind, g.index, exps, j)
                w = c * fc
                for deg, bc in enumerate(base.coeffs):
                    if not bc.is_zero:
                        acc[deg] = acc.get(deg, ZERO) + w * bc
        if not acc:
            return PolyT.zero()
        top = max(acc)
        return PolyT([acc.get(i, ZERO) for i in range(top + 1)])

    def zero_vector(self):
        return PolyT.zero()

    def basis_vector(self, key):
        return PolyT.t_power(key)

    def components(self, f: PolyT):
        return [(j, c) for j, c in enumerate(f.coeffs) if not c.is_zero]

    def window_basis(self, window: int):
        return [(j, PolyT.t_power(j)) for j in range(window + 1)]

    def describe(self) -> dict:
        return {
            "family": self.family,
            "lambda": render_scalar(self.lam),
            "alpha": render_scalar(self.alpha),
            "mu": [render_scalar(m) for m in self.mu],
            "beta": render_scalar(self.beta),
        }


# ---------------------------------------------------------------------------
# evaluation wrappers
# ---------------------------------------------------------------------------


class EvaluationModule(Module):
    """Turn a module over one jet quotient into a module over the map algebra.

    x (x) p acts as x (x) jet_expand(p): for order 1 this is the scalar
    eta(p) times the core-algebra action (single point evaluation); for
    higher orders the inner module must live over the quotient algebra of
    the jet (generalized evaluation).
    """

    family = "evaluation"

    __slots__ = ("quotient", "inner", "_mode", "_coeffs", "_jet_cache")

    def __init__(self, quotient: JetQuotient, inner: Module):
        object.__setattr__(self, "quotient", quotient)
        object.__setattr__(self, "inner", inner)
        object.__setattr__(self, "_coeffs", PolynomialCoefficients(quotient.k))
        object.__setattr__(self, "_jet_cache", {})
        inner_alg = inner.algebra()
        if isinstance(inner_alg, PolynomialCoefficients) and inner_alg.k == 0:
            if quotient.order != 1:
                raise ConfigurationError(
                    "a core-algebra inner module supports only order-1 evaluation"
                )
            object.__setattr__(self, "_mode", "scalar")
        elif inner_alg == QuotientCoefficients((quotient,)):
            object.__setattr__(self, "_mode", "jet")
        else:
            raise DimensionMismatchError(
                "inner module must live over the wrapped jet quotient"
            )

    def __setattr__(self, name, value):
        raise AttributeError("EvaluationModule is immutable")

    def algebra(self):
        return self._coeffs

    def _jets(self, exps):
        jets = self._jet_cache.get(exps)
        if jets is None:
            jets = jet_expand(PolyB.monomial(exps), self.quotient)
            self._jet_cache[exps] = jets
        return jets

    def translate(self, x: AlgebraElement) -> AlgebraElement:
        """Image of an element of the polynomial map algebra in the inner algebra."""
        self._check_element(x)
        acc: dict = {}
        for (g, exps), c in x.terms.items():
            jets = self._jets(exps)
            if self._mode == "scalar":
                eta = jets.get((0,) * self.quotient.k)
                if eta is None:
                    continue
                tk = (g, ())
                acc[tk] = acc.get(tk, ZERO) + c * eta
            else:
                for r, jc in jets.items():
                    tk = (g, (0, r))
                    acc[tk] = acc.get(tk, ZERO) + c * jc
        return AlgebraElement(self.inner.algebra(), acc)

    def act(self, x: AlgebraElement, v):
        return self.inner.act(self.translate(x), v)

    def zero_vector(self):
        return self.inner.zero_vector()

    def basis_vector(self, key):
        return self.inner.basis_vector(key)

    def components(self, v):
        return self.inner.components(v)

    def window_basis(self, window: int):
        return self.inner.window_basis(window)

    def describe(self) -> dict:
        return {
            "family": self.family,
            "point": [render_scalar(x) for x in self.quotient.point],
            "order": self.quotient.order,
            "inner": self.inner.describe(),
        }


# ---------------------------------------------------------------------------
# highest-weight functionals and truncated Verma modules
# ---------------------------------------------------------------------------

_PHI_SLOTS = ("d0", "I0", "C", "C_D", "C_I")
_SLOT_OF = {("d", 0): "d0", ("I", 0): "I0", ("C", 0): "C", ("CD", 0): "C_D", ("CI", 0): "C_I"}


class HighestWeightFunctional:
    """Linear functional on the zero part of the (quotient) map algebra.

    Keyed by (slot, coefficient key) where slot names one of d0, I0, C,
    C_D, C_I.  The zero part is abelian, so any functional is a
    one-dimensional representation.
    """

    __slots__ = ("values",)

    def __init__(self, values=None):
        clean = {}
        for (slot, key), c in (values or {}).items():
            if slot not in _PHI_SLOTS:
                raise ConfigurationError(f"unknown zero-part slot {slot!r}")
            c = scalar(c)
            if not c.is_zero:
                clean[(slot, key)] = c
        object.__setattr__(self, "values", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HighestWeightFunctional is immutable")

    @classmethod
    def zero(cls):
        return cls({})

    def __call__(self, slot: str, key) -> Scalar:
        return self.values.get((slot, key), ZERO)

    def of_generator(self, g: Generator, key) -> Scalar:
        slot = _SLOT_OF.get((g.kind, g.index))
        if slot is None:
            raise ConfigurationError(f"{g.render()} is not in the zero part")
        return self(slot, key)

    def of_element(self, x: AlgebraElement) -> Scalar:
        """Evaluate on an element whose terms all have degree zero."""
        acc = ZERO
        for (g, key), c in x.terms.items():
            acc = acc + c * self.of_generator(g, key)
        return acc

    def __eq__(self, other):
        if not isinstance(other, HighestWeightFunctional):
            return NotImplemented
        return self.values == other.values

    def __repr__(self):
        return f"HighestWeightFunctional({self.values!r})"


class PbwOrder:
    """A total order on lowering factors (kind, index, key), fixing the PBW basis."""

    __slots__ = ("name", "key")

    def __init__(self, name: str, key):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "key", key)

    def __setattr__(self, name, value):
        raise AttributeError("PbwOrder is immutable")

    def __repr__(self):
        return f"PbwOrder({self.name!r})"


# default: d factors before I factors, indices descending, keys in enumeration order
PBW_D_FIRST = PbwOrder("d-first-descending", lambda f: (0 if f[0] == "d" else 1, -f[1], f[2]))
# alternative used by the order spot-check
PBW_I_FIRST = PbwOrder("I-first-ascending", lambda f: (0 if f[0] == "I" else 1, f[1], f[2]))


class TruncatedVerma(Module):
    """Highest-weight module induced from a zero-part functional, truncated.

    The level-n space has the PBW monomials in the lowering generators
    (decorated by the coefficient basis) with indices summing to -n, for
    n up to ``max_level``.  The positive part kills the highest-weight
    generator, the zero part acts through the functional, and a general
    element acts by bracket-and-reorder straightening.

    Only finite-dimensional coefficient algebras are materializable; over
    the full polynomial algebra the level spaces would be infinite
    dimensional.
    """

    family = "verma"

    __slots__ = ("phi", "coeffs", "max_level", "order", "structure", "_cache", "_level_cache")

    def __init__(
        self,
        phi: HighestWeightFunctional,
        coeffs,
        max_level: int = 6,
        order: PbwOrder = PBW_D_FIRST,
        structure: StructureFn = hv_structure,
    ):
        if isinstance(coeffs, PolynomialCoefficients):
            if coeffs.k != 0:
                raise ConfigurationError(
                    "Verma modules need a finite-dimensional coefficient algebra; "
                    "use jet quotients for k >= 1"
                )
        elif not isinstance(coeffs, QuotientCoefficients):
            raise ConfigurationError(f"unsupported coefficient algebra {coeffs!r}")
        if max_level < 1:
            raise ConfigurationError("max_level must be >= 1")
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "max_level", int(max_level))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "_cache", {})
        object.__setattr__(self, "_level_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedVerma is immutable")

    def algebra(self):
        return self.coeffs

    def coefficient_keys(self) -> list:
        if isinstance(self.coeffs, PolynomialCoefficients):
            return [()]
        return self.coeffs.basis_keys()

    @staticmethod
    def level_of(mono) -> int:
        return -sum(f[1] for f in mono)

    def highest_weight_vector(self) -> PBWVector:
        return PBWVector.highest_weight()

    # -- action ------------------------------------------------------------

    def act(self, x: AlgebraElement, v: PBWVector) -> PBWVector:
        self._check_element(x)
        out: dict = {}
        for (g, key), c in x.terms.items():
            for mono, cv in v.terms.items():
                cc = c * cv
                for m2, c2 in self._act_term(g.kind, g.index, key, mono).items():
                    out[m2] = out.get(m2, ZERO) + cc * c2
        return PBWVector(out)

    def _act_term(self, kind: str, idx: int, key, mono) -> dict:
        cache_key = (kind, idx, key, mono)
        hit = self._cache.get(cache_key)
        if hit is not None:
            return hit
        deg = idx if kind in ("d", "I") else 0
        if not mono:
            if deg > 0:
                out = {}
            elif deg == 0:
                slot = _SLOT_OF[(kind, idx)]
                c = self.phi(slot, key)
                out = {(): c} if not c.is_zero else {}
            else:
                if -deg > self.max_level:
                    raise LevelOverflowError(
                        f"level {-deg} exceeds truncation level {self.max_level}"
                    )
                out = {((kind, idx, key),): ONE}
        else:
            okey = self.order.key
            fac = (kind, idx, key)
            if deg < 0 and okey(fac) <= okey(mono[0]):
                level = self.level_of(mono) - deg
                if level > self.max_level:
                    raise LevelOverflowError(
                        f"level {level} exceeds truncation level {self.max_level}"
                    )
                out = {(fac,) + mono: ONE}
            else:
                u_kind, u_idx, u_key = mono[0]
                rest = mono[1:]
                out = {}
                # [x, u] . rest
                struct = self.structure(kind, idx, u_kind, u_idx)
                if struct:
                    for key3, cm in self.coeffs.multiply(key, u_key):
                        for k3, n3, sc in struct:
                            c3 = scalar(sc) if cm == 1 else scalar(sc) * cm
                            for m2, c2 in self._act_term(k3, n3, key3, rest).items():
                                out[m2] = out.get(m2, ZERO) + c3 * c2
                # u . (x . rest)
                for m2, c2 in self._act_term(kind, idx, key, rest).items():
                    for m3, c3 in self._act_term(u_kind, u_idx, u_key, m2).items():
                        out[m3] = out.get(m3, ZERO) + c2 * c3
                out = {m: c for m, c in out.items() if not c.is_zero}
        self._cache[cache_key] = out
        return out

    # -- basis -------------------------------------------------------------

    def level_monomials(self, level: int) -> list:
        if level > self.max_level:
            raise LevelOverflowError(
                f"level {level} exceeds truncation level {self.max_level}"
            )
        hit = self._level_cache.get(level)
        if hit is not None:
            return hit
        factors = [
            (kind, -i, key)
            for i in range(1, level + 1)
            for kind in ("d", "I")
            for key in self.coefficient_keys()
        ]
        factors.sort(key=self.order.key)
        out: list = []

        def rec(start, remaining, acc):
            if remaining == 0:
                out.append(tuple(acc))
                return
            for pos in range(start, len(factors)):
                f = factors[pos]
                if -f[1] <= remaining:
                    acc.append(f)
                    rec(pos, remaining + f[1], acc)
                    acc.pop()

        rec(0, level, [])
        self._level_cache[level] = out
        return out

    def level_dimension(self, level: int) -> int:
        return len(self.level_monomials(level))

    def zero_vector(self):
        return PBWVector()

    def basis_vector(self, key):
        return PBWVector({key: ONE})

    def components(self, v: PBWVector):
        return sorted(v.terms.items())

    def window_basis(self, window: int):
        out = []
        for level in range(min(window, self.max_level) + 1):
            for mono in self.level_monomials(level):
                out.append((mono, PBWVector({mono: ONE})))
        return out

    def describe(self) -> dict:
        if isinstance(self.coeffs, PolynomialCoefficients):
            quotients = []
        else:
            quotients = [
                {"point": [render_scalar(x) for x in q.point], "order": q.order}
                for q in self.coeffs.quotients
            ]
        phi_entries = []
        for (slot, key), c in sorted(
            self.phi.values.items(), key=lambda item: (item[0][0], str(item[0][1]))
        ):
            entry = {"gen": slot, "value": render_scalar(c)}
            if key == ():
                entry["point"] = 0
                entry["exp"] = []
            else:
                entry["point"] = key[0]
                entry["exp"] = list(key[1])
            phi_entries.append(entry)
        return {
            "family": self.family,
            "quotients": quotients,
            "max_level": self.max_level,
            "phi": phi_entries,
        }


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------


class TensorModule(Module):
    """x . (u (x) w) = (x . u) (x) w + u (x) (x . w), both factors over one algebra."""

    family = "tensor"

    __slots__ = ("left", "right")

    def __init__(self, left: Module, right: Module):
        if left.algebra() != right.algebra():
            raise DimensionMismatchError("tensor factors live over different algebras")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __setattr__(self, name, value):
        raise AttributeError("TensorModule is immutable")

    def algebra(self):
        return self.left.algebra()

    def act(self, x: AlgebraElement, v: TensorVector) -> TensorVector:
        self._check_element(x)
        out: dict = {}
        for (lk, rk), c in v.terms.items():
            lw = self.left.act(x, self.left.basis_vector(lk))
            for k2, c2 in self.left.components(lw):
                key = (k2, rk)
                out[key] = out.get(key, ZERO) + c * c2
            rw = self.right.act(x, self.right.basis_vector(rk))
            for k2, c2 in self.right.components(rw):
                key = (lk, k2)
                out[key] = out.get(key, ZERO) + c * c2
        return TensorVector(out)

    def zero_vector(self):
        return TensorVector()

    def basis_vector(self, key):
        return TensorVector({key: ONE})

    def components(self, v: TensorVector):
        return sorted(v.terms.items(), key=lambda item: str(item[0]))

    def window_basis(self, window: int):
        out = []
        for lk, _lv in self.left.window_basis(window):
            for rk, _rv in self.right.window_basis(window):
                key = (lk, rk)
                out.append((key, TensorVector({key: ONE})))
        return out

    def describe(self) -> dict:
        return {
            "family": self.family,
            "left": self.left.describe(),
            "right": self.right.describe(),
        }


# ---------------------------------------------------------------------------
# descriptors
# ---------------------------------------------------------------------------


def describe(module: Module) -> dict:
    return module.describe()


def _take(data: dict, required, optional, context: str) -> dict:
    unknown = set(data) - set(required) - set(optional)
    if unknown:
        raise ConfigurationError(f"{context}: unknown field {sorted(unknown)[0]!r}")
    missing = [name for name in required if name not in data]
    if missing:
        raise ConfigurationError(f"{context}: missing field {missing[0]!r}")
    return data


def _parse_point(values, context: str):
    if not isinstance(values, (list, tuple)):
        raise ConfigurationError(f"{context}: point must be a list of scalars")
    return tuple(parse_scalar(v) for v in values)


def module_from_descriptor(data: dict) -> Module:
    """Rebuild a module handle from its JSON-shaped descriptor."""
    if not isinstance(data, dict):
        raise ConfigurationError("module descriptor must be an object")
    family = data.get("family")
    if family == "intermediate":
        _take(data, ("family", "alpha", "beta", "F"), ("drop_line",), "intermediate")
        return IntermediateSeries(
            parse_scalar(data["alpha"]),
            parse_scalar(data["beta"]),
            parse_scalar(data["F"]),
            drop_line=data.get("drop_line"),
        )
    if family == "omega":
        _take(data, ("family", "lambda", "alpha", "mu", "beta"), (), "omega")
        if not isinstance(data["mu"], (list, tuple)):
            raise ConfigurationError("omega: mu must be a list of scalars")
        return OmegaModule(
            parse_scalar(data["lambda"]),
            parse_scalar(data["alpha"]),
            [parse_scalar(m) for m in data["mu"]],
            parse_scalar(data["beta"]),
        )
    if family == "evaluation":
        _take(data, ("family", "point", "order", "inner"), (), "evaluation")
        quotient = JetQuotient(_parse_point(data["point"], "evaluation"), data["order"])
        return EvaluationModule(quotient, module_from_descriptor(data["inner"]))
    if family == "verma":
        _take(data, ("family",), ("quotients", "max_level", "phi"), "verma")
        quotients = data.get("quotients") or []
        if quotients:
            coeffs = QuotientCoefficients(
                JetQuotient(_parse_point(q["point"], "verma quotient"), q["order"])
                for q in (
                    _take(q, ("point", "order"), (), "verma quotient")
                    for q in quotients
                )
            )
        else:
            coeffs = PolynomialCoefficients(0)
        values = {}
        for entry in data.get("phi") or []:
            _take(entry, ("gen", "value"), ("point", "exp"), "phi entry")
            slot = entry["gen"]
            if slot not in _PHI_SLOTS:
                raise ConfigurationError(f"phi entry: unknown gen {slot!r}")
            exp = tuple(int(e) for e in entry.get("exp") or ())
            if isinstance(coeffs, PolynomialCoefficients):
                if any(exp):
                    raise ConfigurationError("phi entry: exp must be empty over trivial B")
                key = ()
            else:
                key = (int(entry.get("point", 0)), exp)
                if key not in set(coeffs.basis_keys()):
                    raise ConfigurationError(f"phi entry: key {key} outside the quotient basis")
            values[(slot, key)] = parse_scalar(entry["value"])
        return TruncatedVerma(
            HighestWeightFunctional(values), coeffs, max_level=data.get("max_level", 6)
        )
    if family == "tensor":
        _take(data, ("family", "left", "right"), (), "tensor")
        return TensorModule(
            module_from_descriptor(data["left"]),
            module_from_descriptor(data["right"]),
        )
    raise ConfigurationError(f"family: unknown module family {family!r}")
