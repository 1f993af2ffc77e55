"""Verification and exploration procedures.

Everything here is a bounded, exact check: axiom sweeps replay the bracket
against double actions, probes hunt for invariant subspaces inside a finite
window, and singular vectors come out of an exact kernel computation.  A
reducibility witness is conclusive; a "window-irreducible" verdict is a
bounded-scope certificate, never a proof.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .algebra import (
    AlgebraElement,
    C,
    C_D,
    C_I,
    Generator,
    PolynomialCoefficients,
    QuotientCoefficients,
    bracket,
    d,
    element,
    I,
)
from .errors import (
    ConfigurationError,
    DimensionMismatchError,
    LevelOverflowError,
    UnsupportedModuleError,
)
from .linalg import nullspace
from .modules import (
    EvaluationModule,
    IntermediateSeries,
    Module,
    OmegaModule,
    PBWVector,
    TruncatedVerma,
    PbwOrder,
)
from .polys import PolyB, PolyT
from .scalars import ONE, ZERO, Scalar, render_scalar


class WeightTuple(NamedTuple):
    """Joint eigenvalues of (d_0, I_0, C, C_I, C_D) on a weight vector."""

    d0: Scalar
    I0: Scalar
    C: Scalar
    CI: Scalar
    CD: Scalar

    def render(self) -> tuple:
        return tuple(render_scalar(x) for x in self)

    def sort_key(self):
        return tuple(x.sort_key() for x in self)


def unit_element(coeffs, g: Generator) -> AlgebraElement:
    """g tensored with the unit of the coefficient algebra."""
    return element(coeffs, {(g, key): c for key, c in coeffs.unit_keys()})


def algebra_generator_elements(coeffs, index_bound: int, monomial_bound: int) -> list:
    """Single-term homogeneous elements within the sweep bounds.

    All d_n, I_n with |n| <= index_bound plus the three central kinds, each
    decorated by every coefficient key of total degree <= monomial_bound.
    """
    gens = [d(n) for n in range(-index_bound, index_bound + 1)]
    gens += [I(n) for n in range(-index_bound, index_bound + 1)]
    gens += [C, C_D, C_I]
    keys = coeffs.keys_upto(monomial_bound)
    return [AlgebraElement(coeffs, {(g, key): ONE}) for g in gens for key in keys]


def _term_label(x: AlgebraElement) -> str:
    return x.render()


# ---------------------------------------------------------------------------
# module axiom sweep
# ---------------------------------------------------------------------------


@dataclass
class AxiomSweepReport:
    index_bound: int
    monomial_bound: int
    window: int
    triples_checked: int = 0
    violations_found: int = 0
    violations: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return self.violations_found == 0

    def summary(self) -> dict:
        return {
            "index_bound": self.index_bound,
            "monomial_bound": self.monomial_bound,
            "window": self.window,
            "triples_checked": self.triples_checked,
            "violations": self.violations_found,
            "inconclusive": len(self.inconclusive),
            "violation_samples": [
                {"x": x, "y": y, "vector": v} for (x, y, v) in self.violations[:5]
            ],
        }


def axiom_sweep(
    module: Module,
    index_bound: int = 5,
    monomial_bound: int = 2,
    window: int = 4,
    order_seed: int | None = None,
    max_violations: int = 50,
) -> AxiomSweepReport:
    """Check act([x,y], v) = act(x, act(y, v)) - act(y, act(x, v)) exactly.

    Sweeps every unordered pair of decorated generators within the bounds
    against every window basis vector.  The ordered-pair identity follows
    from the swept one because the bracket engine's antisymmetry is checked
    exhaustively elsewhere.  A Verma truncation overflow inside a triple is
    recorded as inconclusive for that triple, never as a violation.
    """
    report = AxiomSweepReport(index_bound, monomial_bound, window)
    ops = algebra_generator_elements(module.algebra(), index_bound, monomial_bound)
    basis = module.window_basis(window)
    nops = len(ops)
    pairs = [(i, j) for i in range(nops) for j in range(i + 1, nops)]
    if order_seed is not None:
        random.Random(order_seed).shuffle(pairs)

    _OVERFLOW = "overflow"
    acted: dict = {}

    def act_on_basis(oi: int, vi: int):
        key = (oi, vi)
        hit = acted.get(key)
        if hit is None:
            try:
                hit = module.act(ops[oi], basis[vi][1])
            except LevelOverflowError:
                hit = _OVERFLOW
            acted[key] = hit
        return hit

    for i, j in pairs:
        xy = bracket(ops[i], ops[j])
        for vi, (label, v) in enumerate(basis):
            report.triples_checked += 1
            try:
                wy = act_on_basis(j, vi)
                wx = act_on_basis(i, vi)
                if wy is _OVERFLOW or wx is _OVERFLOW:
                    raise LevelOverflowError("window vector saturates the truncation")
                lhs = module.act(xy, v)
                rhs = module.act(ops[i], wy) - module.act(ops[j], wx)
            except LevelOverflowError:
                report.inconclusive.append(
                    (_term_label(ops[i]), _term_label(ops[j]), str(label))
                )
                continue
            if lhs != rhs:
                report.violations.append(
                    (_term_label(ops[i]), _term_label(ops[j]), str(label))
                )
    report.violations_found = len(report.violations)
    report.violations.sort()
    del report.violations[max_violations:]
    report.inconclusive.sort()
    return report


# ---------------------------------------------------------------------------
# weight tables
# ---------------------------------------------------------------------------

_WEIGHT_GENS = (d(0), I(0), C, C_I, C_D)


def weight_table(module: Module, window: int = 4) -> dict:
    """Joint eigenspace dimensions of (d_0, I_0, C, C_I, C_D) on the window.

    Every window basis vector must be a joint eigenvector; a module whose
    basis vectors are not (the rank-one free family, say, where d_0 is
    multiplication by t) raises :class:`UnsupportedModuleError`.
    """
    coeffs = module.algebra()
    ops = [unit_element(coeffs, g) for g in _WEIGHT_GENS]
    table: dict[WeightTuple, int] = {}
    for label, v in module.window_basis(window):
        comps = list(module.components(v))
        key0, c0 = comps[0]
        evs = []
        for op in ops:
            w = module.act(op, v)
            if w.is_zero:
                evs.append(ZERO)
                continue
            ev = None
            for wk, wc in module.components(w):
                if wk == key0:
                    ev = wc / c0
                    break
            if ev is None or w != ev * v:
                raise UnsupportedModuleError(
                    f"basis vector {label} is not a joint eigenvector; "
                    "weight tables need a weight module"
                )
            evs.append(ev)
        wt = WeightTuple(*evs)
        table[wt] = table.get(wt, 0) + 1
    return table


# ---------------------------------------------------------------------------
# reducibility probes
# ---------------------------------------------------------------------------


@dataclass
class WindowReport:
    window: int
    operator_bound: int
    verdict: str  # "reducible-with-witness" | "window-irreducible"
    witness: dict | None = None

    @property
    def reducible(self) -> bool:
        return self.verdict == "reducible-with-witness"

    def summary(self) -> dict:
        return {
            "window": self.window,
            "operator_bound": self.operator_bound,
            "verdict": self.verdict,
            "witness": self.witness,
        }


def _line_probe(module: Module, window: int, operator_bound: int) -> WindowReport:
    coeffs = module.algebra()
    shifts = [i for i in range(-operator_bound, operator_bound + 1) if i != 0]
    ops = [unit_element(coeffs, d(i)) for i in shifts]
    ops += [unit_element(coeffs, I(i)) for i in shifts]
    lines = [label for label, _v in module.window_basis(window)]

    dead = []
    for k in lines:
        vk = module.basis_vector(k)
        if all(module.act(op, vk).is_zero for op in ops):
            dead.append(k)
    if dead:
        return WindowReport(
            window,
            operator_bound,
            "reducible-with-witness",
            {"kind": "lines", "lines": sorted(dead)},
        )

    unreachable = []
    op_by_shift = {}
    for i in shifts:
        op_by_shift[("d", i)] = unit_element(coeffs, d(i))
        op_by_shift[("I", i)] = unit_element(coeffs, I(i))
    for k0 in lines:
        hit = False
        for i in shifts:
            source = module.basis_vector(k0 - i)
            for kind in ("d", "I"):
                w = module.act(op_by_shift[(kind, i)], source)
                if not w.coeff(k0).is_zero:
                    hit = True
                    break
            if hit:
                break
        if not hit:
            unreachable.append(k0)
    if unreachable:
        return WindowReport(
            window,
            operator_bound,
            "reducible-with-witness",
            {"kind": "complement-of-lines", "lines": sorted(unreachable)},
        )
    return WindowReport(window, operator_bound, "window-irreducible")


def _omega_probe(module: OmegaModule, window: int, operator_bound: int) -> WindowReport:
    coeffs = module.algebra()
    keys = coeffs.keys_upto(1)
    gens = [d(i) for i in range(-operator_bound, operator_bound + 1)]
    gens += [I(i) for i in range(-operator_bound, operator_bound + 1)]
    ops = [AlgebraElement(coeffs, {(g, key): ONE}) for g in gens for key in keys]
    # the degree-shifted subspace t*C[t]: closed iff no action reintroduces constants
    closed = True
    for j in range(1, window + 1):
        tj = PolyT.t_power(j)
        for op in ops:
            if not module.act(op, tj).coeff(0).is_zero:
                closed = False
                break
        if not closed:
            break
    if closed:
        return WindowReport(
            window,
            operator_bound,
            "reducible-with-witness",
            {"kind": "t-multiples"},
        )
    return WindowReport(window, operator_bound, "window-irreducible")


def probe_irreducible(module: Module, window: int = 4, operator_bound: int = 3) -> WindowReport:
    """Hunt for an invariant subspace within the window.

    Weight-line modules: looks for basis lines that every shift operator
    kills (an invariant span) and for lines nothing maps into (an invariant
    complement).  The rank-one free family: tests closure of the
    degree-shifted subspace t*C[t].  Witnesses are conclusive; the
    irreducible verdict is only as strong as the window.
    """
    if window < 1 or operator_bound < 1:
        raise ConfigurationError("window and operator bound must be >= 1")
    if isinstance(module, OmegaModule):
        return _omega_probe(module, window, operator_bound)
    if isinstance(module, IntermediateSeries):
        return _line_probe(module, window, operator_bound)
    if isinstance(module, EvaluationModule) and isinstance(module.inner, IntermediateSeries):
        return _line_probe(module, window, operator_bound)
    raise UnsupportedModuleError(
        f"no reducibility probe for the {module.family} family"
    )


# ---------------------------------------------------------------------------
# singular vectors and the maximal submodule
# ---------------------------------------------------------------------------


def _raising_factors(module: TruncatedVerma, level: int, raising: str) -> list:
    keys = module.coefficient_keys()
    if raising == "generators":
        gens = [("d", 1), ("d", 2), ("I", 1)]
    elif raising == "full":
        gens = [(kind, i) for i in range(1, level + 1) for kind in ("d", "I")]
    else:
        raise ConfigurationError(f"unknown raising set {raising!r}")
    return [(kind, idx, key) for (kind, idx) in gens for key in keys]


def _raising_words(factors: list, degree: int) -> list:
    """All ordered words over the factors with index degrees summing to `degree`."""
    out: list = []

    def rec(remaining, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for fac in factors:
            if fac[1] <= remaining:
                acc.append(fac)
                rec(remaining - fac[1], acc)
                acc.pop()

    rec(degree, [])
    return out


def singular_vectors(module: TruncatedVerma, level: int, raising: str = "generators") -> list:
    """Basis of the maximal-submodule slice at the given level.

    A level-n vector generates a proper submodule exactly when every word of
    raising operators of total degree n sends it to zero in the
    highest-weight line; the kernel of that joint map is computed by exact
    elimination.  The restricted raising set {d_1, d_2, I_1} (decorated by
    the coefficient basis) suffices because it generates the whole positive
    part, so its words span the same functionals as all raising words; the
    "full" mode exists to cross-validate exactly that.
    """
    monos = module.level_monomials(level)
    factors = _raising_factors(module, level, raising)
    words = _raising_words(factors, level)
    single_ops = {
        fac: AlgebraElement(module.coeffs, {(Generator(fac[0], fac[1]), fac[2]): ONE})
        for fac in factors
    }
    rows = []
    for word in words:
        row = []
        for mono in monos:
            vec = PBWVector({mono: ONE})
            for fac in reversed(word):
                vec = module.act(single_ops[fac], vec)
                if vec.is_zero:
                    break
            row.append(vec.coeff(()))
        rows.append(row)
    if not rows:
        rows = [[ZERO] * len(monos)]
    kernel = nullspace(rows, len(monos))
    return [
        PBWVector({mono: c for mono, c in zip(monos, vec)})
        for vec in kernel
    ]


def in_maximal_submodule(module: TruncatedVerma, v: PBWVector) -> bool:
    """Membership test for the maximal proper submodule.

    Recursively: a vector lies in it iff each restricted raising generator
    maps it into the maximal submodule one or two levels down, with the
    level-0 slice being zero.  Equivalent to the word-kernel computation,
    but only walks the reachable cone of the given vector.
    """
    by_level: dict[int, dict] = {}
    for mono, c in v.terms.items():
        lvl = TruncatedVerma.level_of(mono)
        by_level.setdefault(lvl, {})[mono] = c
    factors = _raising_factors(module, 2, "generators")
    single_ops = {
        fac: AlgebraElement(module.coeffs, {(Generator(fac[0], fac[1]), fac[2]): ONE})
        for fac in factors
    }

    def rec(vec: PBWVector, level: int) -> bool:
        if vec.is_zero:
            return True
        if level == 0:
            return False
        for fac in factors:
            if fac[1] > level:
                continue
            if not rec(module.act(single_ops[fac], vec), level - fac[1]):
                return False
        return True

    return all(rec(PBWVector(part), lvl) for lvl, part in by_level.items())


# ---------------------------------------------------------------------------
# highest-weight criterion suite
# ---------------------------------------------------------------------------


@dataclass
class HcSuiteReport:
    identities: list = field(default_factory=list)  # (name, passed)
    phi_kills_ideal: bool = False
    singular_checks: list = field(default_factory=list)  # (name, expected, actual)

    @property
    def identities_pass(self) -> bool:
        return all(ok for _name, ok in self.identities)

    @property
    def singular_pass(self) -> bool:
        return all(exp == act for _n, exp, act in self.singular_checks)

    @property
    def passed(self) -> bool:
        return self.identities_pass and self.singular_pass

    def summary(self) -> dict:
        return {
            "identities": {name: ok for name, ok in self.identities},
            "phi_kills_ideal": self.phi_kills_ideal,
            "singular_checks": [
                {"vector": n, "expected_in_kernel": e, "in_kernel": a}
                for n, e, a in self.singular_checks
            ],
            "passed": self.passed,
        }


def _project_poly(coeffs, f: PolyB) -> dict:
    if isinstance(coeffs, QuotientCoefficients):
        if f.k != coeffs.k:
            raise DimensionMismatchError("polynomial k mismatch with quotient")
        return coeffs.project(f)
    if isinstance(coeffs, PolynomialCoefficients) and coeffs.k == 0:
        if f.k != 0:
            raise DimensionMismatchError("trivial coefficients need k=0 polynomials")
        c = f.terms.get((), ZERO)
        return {(): c} if not c.is_zero else {}
    raise ConfigurationError(f"unsupported coefficient algebra {coeffs!r}")


def hc_criterion_suite(module: TruncatedVerma, f: PolyB, singular_depth: int = 4) -> HcSuiteReport:
    """Check the five straightening identities behind the highest-weight
    finiteness criterion, plus the singular-kernel mechanism.

    The identities are bracket identities, so they must pass for every
    functional.  When the functional kills the whole zero part tensored
    with the ideal generated by f, the lowering vectors decorated by f land
    in the maximal submodule; when the functional sees d_0 (x) f, the
    double-d_1 word certifies the d_{-2} (x) f vector escapes it.
    """
    report = HcSuiteReport()
    coeffs = module.coeffs
    fim = _project_poly(coeffs, f)
    hw = module.highest_weight_vector()

    def decorated(g: Generator) -> AlgebraElement:
        return AlgebraElement(coeffs, {(g, key): c for key, c in fim.items()})

    def phi_of(g: Generator) -> Scalar:
        acc = ZERO
        for key, c in fim.items():
            acc = acc + c * module.phi.of_generator(g, key)
        return acc

    u = lambda g: unit_element(coeffs, g)  # noqa: E731
    dm2f = module.act(decorated(d(-2)), hw)
    im2f = module.act(decorated(I(-2)), hw)

    half = Scalar(1) / 2
    checks = [
        (
            "d2.(d-2(x)f)",
            module.act(u(d(2)), dm2f),
            (Scalar(-4) * phi_of(d(0)) + half * phi_of(C)) * hw,
        ),
        (
            "d1.d1.(d-2(x)f)",
            module.act(u(d(1)), module.act(u(d(1)), dm2f)),
            (6 * phi_of(d(0))) * hw,
        ),
        (
            "I2.(d-2(x)f)",
            module.act(u(I(2)), dm2f),
            (Scalar(-2) * phi_of(I(0)) - 2 * phi_of(C_D)) * hw,
        ),
        (
            "d2.(I-2(x)f)",
            module.act(u(d(2)), im2f),
            (Scalar(-2) * phi_of(I(0)) + 6 * phi_of(C_D)) * hw,
        ),
        (
            "I2.(I-2(x)f)",
            module.act(u(I(2)), im2f),
            (2 * phi_of(C_I)) * hw,
        ),
    ]
    for name, lhs, rhs in checks:
        report.identities.append((name, lhs == rhs))

    # does the functional kill the zero part tensored with the ideal (f)?
    ideal_span = []
    basis_keys = (
        [()] if isinstance(coeffs, PolynomialCoefficients) else coeffs.basis_keys()
    )
    for bkey in basis_keys:
        prod: dict = {}
        for fkey, fc in fim.items():
            for key2, cm in coeffs.multiply(fkey, bkey):
                prod[key2] = prod.get(key2, ZERO) + (fc if cm == 1 else fc * cm)
        if any(not c.is_zero for c in prod.values()):
            ideal_span.append(prod)
    kills = True
    for prod in ideal_span:
        for slot_gen in (d(0), I(0), C, C_D, C_I):
            acc = ZERO
            for key, c in prod.items():
                acc = acc + c * module.phi.of_generator(slot_gen, key)
            if not acc.is_zero:
                kills = False
                break
        if not kills:
            break
    report.phi_kills_ideal = kills

    depth = min(singular_depth, module.max_level)
    if kills:
        for n in range(1, depth + 1):
            for kind, gen in (("d", d(-n)), ("I", I(-n))):
                vec = module.act(decorated(gen), hw)
                report.singular_checks.append(
                    (f"{kind}(-{n})(x)f.hw", True, in_maximal_submodule(module, vec))
                )
    else:
        if not phi_of(d(0)).is_zero and module.max_level >= 2:
            report.singular_checks.append(
                ("d(-2)(x)f.hw", False, in_maximal_submodule(module, dm2f))
            )
        escape_i = (
            not (Scalar(-2) * phi_of(I(0)) + 6 * phi_of(C_D)).is_zero
            or not phi_of(C_I).is_zero
        )
        if escape_i and module.max_level >= 2:
            report.singular_checks.append(
                ("I(-2)(x)f.hw", False, in_maximal_submodule(module, im2f))
            )
    return report


# ---------------------------------------------------------------------------
# isomorphism invariants of the rank-one free family
# ---------------------------------------------------------------------------


def omega_invariants(module: Module):
    """Recover (lambda, alpha, mu, beta) purely from action values.

    lambda and alpha come out of acting by d_1 on the cyclic generator
    (a degree-one polynomial: leading coefficient and root), each mu_i from
    d_1 (x) b_i, and beta from I_0.  Works through the uniform action
    interface, so it is an isomorphism invariant of the cyclic generator.
    """
    coeffs = module.algebra()
    if not isinstance(coeffs, PolynomialCoefficients):
        raise UnsupportedModuleError("rank-one invariants need the polynomial map algebra")
    one = PolyT.one()
    g1 = module.act(AlgebraElement(coeffs, {(d(1), (0,) * coeffs.k): ONE}), one)
    if g1.degree != 1:
        raise UnsupportedModuleError("acting by d_1 on 1 is not degree one; not a rank-one free action")
    lam = g1.coeff(1)
    alpha = ZERO - g1.coeff(0) / lam
    mu = []
    for i in range(coeffs.k):
        exps = tuple(1 if j == i else 0 for j in range(coeffs.k))
        gi = module.act(AlgebraElement(coeffs, {(d(1), exps): ONE}), one)
        if gi.is_zero:
            mu.append(ZERO)
            continue
        if gi.degree != 1:
            raise UnsupportedModuleError("decorated d_1 action is not degree one")
        m = gi.coeff(1)
        if gi.coeff(0) != -(m * alpha):
            raise UnsupportedModuleError("decorated d_1 action has the wrong root")
        mu.append(m)
    b = module.act(unit_element(coeffs, I(0)), one)
    if b.degree > 0:
        raise UnsupportedModuleError("I_0 does not act by a constant on 1")
    beta = b.coeff(0)
    return (lam, alpha, tuple(mu), beta)


# ---------------------------------------------------------------------------
# annihilator probe
# ---------------------------------------------------------------------------


@dataclass
class AnnihilatorReport:
    window: int
    index_bound: int
    entries: list = field(default_factory=list)  # (generator text, annihilates)

    def annihilates(self, text: str) -> bool:
        for name, flag in self.entries:
            if name == text:
                return flag
        raise KeyError(text)

    def summary(self) -> dict:
        return {
            "window": self.window,
            "index_bound": self.index_bound,
            "generators": [{"polynomial": n, "annihilates": f} for n, f in self.entries],
        }


def annihilator_probe(
    module: Module,
    generators: list,
    window: int = 2,
    index_bound: int = 2,
) -> AnnihilatorReport:
    """For each polynomial p, does x (x) p kill the whole window for every
    homogeneous x within the index bound?

    For an order-s evaluation wrapper every generator of m^s must
    annihilate, and the m^{s-1} generators must not.
    """
    coeffs = module.algebra()
    if not isinstance(coeffs, PolynomialCoefficients):
        raise UnsupportedModuleError("annihilator probes run over the polynomial map algebra")
    report = AnnihilatorReport(window, index_bound)
    gens = [d(n) for n in range(-index_bound, index_bound + 1)]
    gens += [I(n) for n in range(-index_bound, index_bound + 1)]
    gens += [C, C_D, C_I]
    basis = module.window_basis(window)
    for p in generators:
        if p.k != coeffs.k:
            raise DimensionMismatchError("polynomial k mismatch with the module")
        ann = True
        for g in gens:
            x = AlgebraElement(coeffs, {(g, exps): c for exps, c in p.terms.items()})
            if x.is_zero:
                continue
            for _label, v in basis:
                if not module.act(x, v).is_zero:
                    ann = False
                    break
            if not ann:
                break
        report.entries.append((p.render(), ann))
    return report


# ---------------------------------------------------------------------------
# PBW order spot-check
# ---------------------------------------------------------------------------


@dataclass
class PbwSpotcheckReport:
    rows: list = field(default_factory=list)  # (level, dim_a, dim_b, sing_a, sing_b)
    value_mismatches: list = field(default_factory=list)  # (lowering word, raising word)
    values_compared: int = 0

    @property
    def passed(self) -> bool:
        return not self.value_mismatches and all(
            da == db and sa == sb for _l, da, db, sa, sb in self.rows
        )

    def summary(self) -> dict:
        return {
            "levels": [
                {"level": l, "dims": [da, db], "singular_dims": [sa, sb]}
                for l, da, db, sa, sb in self.rows
            ],
            "values_compared": self.values_compared,
            "value_mismatches": len(self.value_mismatches),
            "passed": self.passed,
        }


def pbw_order_spotcheck(
    module: TruncatedVerma,
    alternative_order: PbwOrder,
    level_bound: int = 3,
    alternative_structure=None,
) -> PbwSpotcheckReport:
    """Differential check of two straightening configurations.

    Rebuilds the module under the alternative order (and, for mutation
    controls, optionally an alternative structure function) and compares
    level dimensions, singular-slice dimensions, and the highest-weight-line
    scalars of lowering-then-raising word chains.  The chains build one
    abstract vector per lowering word in each basis and collapse it with
    every matching raising word; any divergence between the two engines --
    a reordered basis, a dropped central term -- shows up as a value
    mismatch even when the kernel dimensions happen to agree.
    """
    alt = TruncatedVerma(
        module.phi,
        module.coeffs,
        max_level=module.max_level,
        order=alternative_order,
        structure=alternative_structure or module.structure,
    )
    report = PbwSpotcheckReport()
    for level in range(level_bound + 1):
        da = module.level_dimension(level)
        db = alt.level_dimension(level)
        sa = len(singular_vectors(module, level))
        sb = len(singular_vectors(alt, level))
        report.rows.append((level, da, db, sa, sb))

    keys = module.coefficient_keys()
    lowering = [("d", -i, key) for i in (1, 2) for key in keys]
    lowering += [("I", -i, key) for i in (1, 2) for key in keys]
    lowering_words = [(f,) for f in lowering] + [
        (f1, f2) for f1 in lowering for f2 in lowering
    ]
    for word in lowering_words:
        level = -sum(f[1] for f in word)
        if level > min(level_bound, module.max_level):
            continue
        va = module.highest_weight_vector()
        vb = alt.highest_weight_vector()
        for fac in reversed(word):
            x = AlgebraElement(module.coeffs, {(Generator(fac[0], fac[1]), fac[2]): ONE})
            va = module.act(x, va)
            vb = alt.act(x, vb)
        for rword in _raising_words(_raising_factors(module, level, "generators"), level):
            wa, wb = va, vb
            for fac in reversed(rword):
                x = AlgebraElement(module.coeffs, {(Generator(fac[0], fac[1]), fac[2]): ONE})
                wa = module.act(x, wa)
                wb = alt.act(x, wb)
            report.values_compared += 1
            if wa.coeff(()) != wb.coeff(()):
                report.value_mismatches.append((word, rword))
    return report
