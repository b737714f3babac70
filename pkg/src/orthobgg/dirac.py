"""
Clifford-valued polynomial fields and Dirac operators in several vector
variables x_1, ..., x_k in R^n.

The Clifford algebra has generators e_1..e_n with e_i e_i = -1 and
e_i e_j = -e_j e_i.  A blade e_{i_1} ... e_{i_r} (i_1 < ... < i_r) is
stored as a bitmask.  A field is a finite sum of monomials in the
variables x_{ij} (i-th vector variable, j-th coordinate) with Clifford
coefficients.

    >>> e1, e2 = CliffordElement.gen(2, 1), CliffordElement.gen(2, 2)
    >>> str(e1 * e1)
    '-1'
    >>> str((e1 * e2) * e1)
    'e2'
"""
from __future__ import annotations

import dataclasses
import itertools
import random
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple

from .liealg import format_fraction

DEGREE_GUARD = 8
DIMENSION_GUARD = 8


class DiracError(ValueError):
    pass


def blade_product(a: int, b: int) -> Tuple[int, int]:
    """(sign, mask) with e_a e_b = sign * e_mask."""
    swaps = 0
    x = a >> 1
    while x:
        swaps += bin(x & b).count("1")
        x >>= 1
    sign = -1 if swaps % 2 else 1
    if bin(a & b).count("1") % 2:
        sign = -sign  # each repeated generator squares to -1
    return sign, a ^ b


def blade_name(mask: int) -> str:
    if not mask:
        return "1"
    return "e" + "".join(str(i + 1) for i in range(mask.bit_length()) if mask >> i & 1)


class CliffordElement:
    """Element of the Clifford algebra Cl_n with e_i^2 = -1."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[int, Fraction] = ()):
        self.n = n
        self.coeffs = {m: Fraction(c) for m, c in dict(coeffs).items() if c}
        if any(m >> n for m in self.coeffs):
            raise DiracError(f"blade outside Cl_{n}")

    @classmethod
    def scalar(cls, n: int, c=1) -> "CliffordElement":
        return cls(n, {0: c})

    @classmethod
    def gen(cls, n: int, i: int) -> "CliffordElement":
        if not 1 <= i <= n:
            raise DiracError(f"e_{i} is not a generator of Cl_{n}")
        return cls(n, {1 << (i - 1): 1})

    @classmethod
    def blade(cls, n: int, indices: Sequence[int]) -> "CliffordElement":
        out = cls.scalar(n)
        for i in indices:
            out = out * cls.gen(n, i)
        return out

    def _same(self, other: "CliffordElement"):
        if other.n != self.n:
            raise DiracError(f"dimension mismatch: Cl_{self.n} vs Cl_{other.n}")

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        self._same(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return CliffordElement(self.n, out)

    def __neg__(self):
        return CliffordElement(self.n, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other) -> "CliffordElement":
        if not isinstance(other, CliffordElement):
            return CliffordElement(self.n, {m: c * Fraction(other) for m, c in self.coeffs.items()})
        self._same(other)
        out: Dict[int, Fraction] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                s, m = blade_product(a, b)
                out[m] = out.get(m, 0) + s * ca * cb
        return CliffordElement(self.n, out)

    def __rmul__(self, c) -> "CliffordElement":
        return self * c

    def __eq__(self, other):
        return isinstance(other, CliffordElement) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs, key=lambda m: (bin(m).count("1"), m)):
            c = self.coeffs[m]
            name = blade_name(m)
            if m == 0:
                body = format_fraction(c)
            elif abs(c) == 1:
                body = ("-" if c < 0 else "") + name
            else:
                body = f"{format_fraction(c)}*{name}"
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def clifford_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a * b


def grade_basis(n: int, max_grade: int) -> List[int]:
    """Blade masks of grade <= max_grade."""
    out = []
    for r in range(min(max_grade, n) + 1):
        for idx in itertools.combinations(range(n), r):
            out.append(sum(1 << i for i in idx))
    return out


Exponent = Tuple[int, ...]


class PolyField:
    """
    A polynomial in x_{ij} (1 <= i <= k, 1 <= j <= n) with values in Cl_n.

    Stored as {(exponent, blade mask): coefficient}; the exponent of x_{ij}
    sits at position (i-1)*n + (j-1).
    """

    __slots__ = ("k", "n", "terms")

    def __init__(self, k: int, n: int, terms: Mapping[Tuple[Exponent, int], Fraction] = ()):
        self.k, self.n = k, n
        self.terms = {key: Fraction(c) for key, c in dict(terms).items() if c}

    @classmethod
    def zero(cls, k: int, n: int) -> "PolyField":
        return cls(k, n)

    @classmethod
    def monomial(cls, k: int, n: int, powers: Mapping[Tuple[int, int], int], value=None) -> "PolyField":
        """prod x_{ij}^{p_ij} times a Clifford value (default 1)."""
        exp = [0] * (k * n)
        for (i, j), p in powers.items():
            if not (1 <= i <= k and 1 <= j <= n):
                raise DiracError(f"x_{i}{j} is not a variable")
            exp[(i - 1) * n + (j - 1)] += p
        value = value if value is not None else CliffordElement.scalar(n)
        return cls(k, n, {(tuple(exp), m): c for m, c in value.coeffs.items()})

    def _same(self, other: "PolyField"):
        if (other.k, other.n) != (self.k, self.n):
            raise DiracError("field shape mismatch")

    def __add__(self, other: "PolyField") -> "PolyField":
        self._same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return PolyField(self.k, self.n, out)

    def __neg__(self):
        return PolyField(self.k, self.n, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyField":
        return PolyField(self.k, self.n, {key: v * Fraction(c) for key, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PolyField) and (self.k, self.n) == (other.k, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {sum(exp) for exp, _ in self.terms}

    def left_mul(self, a: CliffordElement) -> "PolyField":
        out: Dict[Tuple[Exponent, int], Fraction] = {}
        for (exp, m), c in self.terms.items():
            for b, cb in a.coeffs.items():
                s, mm = blade_product(b, m)
                key = (exp, mm)
                out[key] = out.get(key, 0) + s * cb * c
        return PolyField(self.k, self.n, out)

    def partial(self, i: int, j: int) -> "PolyField":
        pos = self._pos(i, j)
        out: Dict[Tuple[Exponent, int], Fraction] = {}
        for (exp, m), c in self.terms.items():
            p = exp[pos]
            if p:
                e2 = exp[:pos] + (p - 1,) + exp[pos + 1 :]
                out[(e2, m)] = out.get((e2, m), 0) + p * c
        return PolyField(self.k, self.n, out)

    def _pos(self, i: int, j: int) -> int:
        if not (1 <= i <= self.k and 1 <= j <= self.n):
            raise DiracError(f"x_{i}{j} is not a variable of this field")
        return (i - 1) * self.n + (j - 1)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (exp, m), c in sorted(self.terms.items()):
            mono = "*".join(
                f"x{p // self.n + 1}{p % self.n + 1}" + (f"^{e}" if e > 1 else "")
                for p, e in enumerate(exp)
                if e
            )
            body = "*".join(x for x in (mono, blade_name(m) if m else "") if x) or "1"
            parts.append(f"{format_fraction(c)}*{body}")
        return " + ".join(parts)

    __repr__ = __str__


def dirac(i: int, f: PolyField) -> PolyField:
    """D_i f = sum_j e_j * d f / d x_{ij}."""
    if not 1 <= i <= f.k:
        raise DiracError(f"variable index {i} out of range 1..{f.k}")
    out = PolyField.zero(f.k, f.n)
    for j in range(1, f.n + 1):
        out = out + f.partial(i, j).left_mul(CliffordElement.gen(f.n, j))
    return out


def laplacian(i: int, f: PolyField) -> PolyField:
    out = PolyField.zero(f.k, f.n)
    for j in range(1, f.n + 1):
        out = out + f.partial(i, j).partial(i, j)
    return out


def laplacian_identity(i: int, f: PolyField) -> PolyField:
    """D_i D_i f + Delta_i f, which vanishes identically."""
    return dirac(i, dirac(i, f)) + laplacian(i, f)


def anticommutator_identity(i: int, j: int, f: PolyField) -> PolyField:
    """(D_i D_j + D_j D_i) f + 2 sum_m d_im d_jm f, which vanishes identically."""
    out = dirac(i, dirac(j, f)) + dirac(j, dirac(i, f))
    for m in range(1, f.n + 1):
        out = out + f.partial(i, m).partial(j, m).scale(2)
    return out


# ---------------------------------------------------------------------------
# the operator sequence for two variables


@dataclasses.dataclass(frozen=True)
class Convention:
    """
    Which form of the sequence to use.

    alternative: second operator (D_2', D_2'') = (D_2, -D_1) of the default,
    paired with the third operator h -> D_1 h_1 + D_2 h_2.
    literal_third: with `alternative`, use h -> D_1 h_2 + D_2 h_1 instead.
    mutate: flip the sign of the second term of the first component of the
    second operator (a deliberately broken sequence, for negative controls).
    """

    alternative: bool = False
    literal_third: bool = False
    mutate: bool = False


DEFAULT = Convention()


def _stage2(g1: PolyField, g2: PolyField, conv: Convention) -> Tuple[PolyField, PolyField]:
    s = 1 if conv.mutate else -1
    c1 = dirac(1, dirac(1, g2)) + dirac(2, dirac(1, g1)).scale(s)
    c2 = dirac(1, dirac(2, g2)) - dirac(2, dirac(2, g1))
    if conv.alternative:
        return c2, -c1
    return c1, c2


def _stage3(h1: PolyField, h2: PolyField, conv: Convention) -> PolyField:
    if conv.alternative:
        if conv.literal_third:
            return dirac(1, h2) + dirac(2, h1)
        return dirac(1, h1) + dirac(2, h2)
    return dirac(1, h2) - dirac(2, h1)


def sequence_k2(stage: int, fields: Sequence[PolyField], conv: Convention = DEFAULT):
    """
    One stage of the sequence  f -> (g1, g2) -> (h1, h2) -> scalar field.

    stage 1: f -> (D_1 f, D_2 f)
    stage 2: (g1, g2) -> (D_1 D_1 g2 - D_2 D_1 g1, D_1 D_2 g2 - D_2 D_2 g1)
    stage 3: (h1, h2) -> D_1 h2 - D_2 h1
    """
    fields = list(fields)
    arity = {1: 1, 2: 2, 3: 2}
    if stage not in arity:
        raise DiracError(f"no stage {stage}")
    if len(fields) != arity[stage]:
        raise DiracError(f"stage {stage} takes {arity[stage]} field(s), got {len(fields)}")
    for f in fields:
        if f.k != 2:
            raise DiracError("the sequence is defined for k = 2 variables")
        fields[0]._same(f)
    if stage == 1:
        return dirac(1, fields[0]), dirac(2, fields[0])
    if stage == 2:
        return _stage2(fields[0], fields[1], conv)
    return _stage3(fields[0], fields[1], conv)


def kth_component(gs: Sequence[PolyField]) -> PolyField:
    """D_{k-1} D_k g_k - D_k D_k g_{k-1} for fields g_1..g_k in k variables."""
    k = len(gs)
    if k < 2 or any(g.k != k for g in gs):
        raise DiracError("need k >= 2 fields in k variables")
    return dirac(k - 1, dirac(k, gs[k - 1])) - dirac(k, dirac(k, gs[k - 2]))


# ---------------------------------------------------------------------------
# verification


def monomials(num_vars: int, max_degree: int) -> Iterator[Exponent]:
    for d in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(num_vars), d):
            exp = [0] * num_vars
            for v in combo:
                exp[v] += 1
            yield tuple(exp)


@dataclasses.dataclass
class ComplexReport:
    n: int
    max_degree: int
    mode: str
    inputs: int = 0
    nonzero_inputs: int = 0
    failures: List[dict] = dataclasses.field(default_factory=list)
    laplacian_failures: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures and not self.laplacian_failures

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "mode": self.mode,
            "inputs": self.inputs,
            "nonzero_inputs": self.nonzero_inputs,
            "failures": len(self.failures),
            "laplacian_failures": self.laplacian_failures,
            "ok": self.ok,
            "first_failures": self.failures[:5],
        }


def _fields(n: int, max_degree: int, mode: str, trials: int, seed: int, max_grade: int) -> Iterator[PolyField]:
    blades = grade_basis(n, max_grade)
    if mode == "exhaustive":
        for exp in monomials(2 * n, max_degree):
            for m in blades:
                yield PolyField(2, n, {(exp, m): 1})
    elif mode == "random":
        rng = random.Random(seed)
        exps = list(monomials(2 * n, max_degree))
        for _ in range(trials):
            terms = {}
            for _ in range(rng.randint(1, 4)):
                terms[(rng.choice(exps), rng.choice(blades))] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            yield PolyField(2, n, terms)
    else:
        raise DiracError(f"unknown mode {mode!r}")


def verify_complex(
    n: int,
    max_degree: int,
    mode: str = "exhaustive",
    trials: int = 200,
    seed: int = 0,
    max_grade: int = 2,
    conv: Convention = DEFAULT,
    laplacian_check: bool = True,
) -> ComplexReport:
    """
    Check stage2 o stage1 = 0 and stage3 o stage2 = 0 on a set of fields.

    Exhaustive mode runs over all monomials of degree <= max_degree in the
    2n variables times all blades of grade <= max_grade; the second check is
    run with the monomial in either slot.  Everything is linear, so this
    covers the whole space of such fields.
    """
    if n < 1 or n > DIMENSION_GUARD:
        raise DiracError(f"n must be in 1..{DIMENSION_GUARD}")
    if max_degree < 0 or max_degree > DEGREE_GUARD:
        raise DiracError(f"max_degree must be in 0..{DEGREE_GUARD}")
    report = ComplexReport(n, max_degree, mode)
    zero = PolyField.zero(2, n)
    for f in _fields(n, max_degree, mode, trials, seed, max_grade):
        report.inputs += 1
        g = sequence_k2(1, [f], conv)
        if not (g[0].is_zero() and g[1].is_zero()):
            report.nonzero_inputs += 1
        r = sequence_k2(2, g, conv)
        if not (r[0].is_zero() and r[1].is_zero()):
            report.failures.append({"check": "2o1", "input": str(f), "residual_terms": len(r[0].terms) + len(r[1].terms)})
        for pair in ((f, zero), (zero, f)):
            h = sequence_k2(2, pair, conv)
            out = sequence_k2(3, h, conv)
            if not out.is_zero():
                report.failures.append({"check": "3o2", "input": [str(p) for p in pair], "residual_terms": len(out.terms)})
        if laplacian_check:
            for i in (1, 2):
                if not laplacian_identity(i, f).is_zero():
                    report.laplacian_failures += 1
    return report
