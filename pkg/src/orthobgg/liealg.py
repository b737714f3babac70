"""
Matrix realization of so(2m) and so(2m+1) and the root data that goes with it.

The algebra is realized as N x N matrices that are antisymmetric with respect
to the anti-diagonal, N = 2m (type D) or N = 2m + 1 (type B).  The generator
attached to a position (i, j), i != j, i + j <= N, is

    E_{ij} - E_{N+1-j, N+1-i}

and the Cartan subalgebra is spanned by h_i = E_{ii} - E_{N+1-i, N+1-i}.
All indices are 1-based so that the matrix pictures of the orthogonal
algebras translate into literal (i, j) pairs.

Weights live in the epsilon basis and are stored as doubled integers.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

Rational = Union[int, Fraction]


class AlgebraError(ValueError):
    """Raised for malformed algebra specifications or elements outside the algebra."""


# ---------------------------------------------------------------------------
# weights


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        f = Fraction(x)
        if f.denominator > 2:
            raise AlgebraError(f"{x!r} is not a half-integer")
        return f
    return Fraction(x)


@functools.total_ordering
class Weight:
    """
    An element of h^* in the epsilon basis with half-integer coordinates.

    Coordinates are kept as doubled integers so that equality and hashing are
    exact.

    >>> w = Weight([Fraction(-5, 2), Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)])
    >>> w.twice
    (-5, 1, 1, 1)
    >>> str(w)
    '[-5/2,1/2,1/2,1/2]'
    """

    __slots__ = ("twice",)

    def __init__(self, coords: Iterable = ()):
        doubled = []
        for c in coords:
            f = _to_fraction(c) * 2
            if f.denominator != 1:
                raise AlgebraError(f"coordinate {c} is not a half-integer")
            doubled.append(int(f))
        object.__setattr__(self, "twice", tuple(doubled))

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @classmethod
    def from_twice(cls, twice: Iterable[int]) -> "Weight":
        w = object.__new__(cls)
        object.__setattr__(w, "twice", tuple(int(t) for t in twice))
        return w

    @classmethod
    def half(cls, coords: Iterable[int]) -> "Weight":
        """Weight 1/2 [c_1, ..., c_m]."""
        return cls.from_twice(coords)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls.from_twice((0,) * rank)

    @classmethod
    def unit(cls, rank: int, i: int, sign: int = 1) -> "Weight":
        """sign * epsilon_i, i is 1-based."""
        t = [0] * rank
        t[i - 1] = 2 * sign
        return cls.from_twice(t)

    @property
    def rank(self) -> int:
        return len(self.twice)

    @property
    def coords(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(t, 2) for t in self.twice)

    def __len__(self):
        return len(self.twice)

    def __getitem__(self, i) -> Fraction:
        return Fraction(self.twice[i], 2)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def _check(self, other: "Weight"):
        if not isinstance(other, Weight):
            return NotImplemented
        if len(other.twice) != len(self.twice):
            raise AlgebraError("rank mismatch")
        return None

    def __add__(self, other: "Weight") -> "Weight":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Weight.from_twice(a + b for a, b in zip(self.twice, other.twice))

    def __sub__(self, other: "Weight") -> "Weight":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Weight.from_twice(a - b for a, b in zip(self.twice, other.twice))

    def __neg__(self) -> "Weight":
        return Weight.from_twice(-a for a in self.twice)

    def scale(self, c: int) -> "Weight":
        if int(c) != c:
            raise AlgebraError("weights can only be scaled by integers")
        return Weight.from_twice(int(c) * a for a in self.twice)

    def __rmul__(self, c: int) -> "Weight":
        return self.scale(c)

    def dot(self, other: "Weight") -> Fraction:
        self._check(other)
        return Fraction(sum(a * b for a, b in zip(self.twice, other.twice)), 4)

    def is_zero(self) -> bool:
        return not any(self.twice)

    def is_integral(self) -> bool:
        """All coordinates integers or all half-integers."""
        parities = {t % 2 for t in self.twice}
        return len(parities) <= 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Weight) and self.twice == other.twice

    def __lt__(self, other: "Weight") -> bool:
        # lexicographic order, only used for deterministic sorting
        return self.twice < other.twice

    def __hash__(self):
        return hash(("Weight", self.twice))

    def __repr__(self):
        return f"Weight({str(self)})"

    def __str__(self):
        return "[" + ",".join(format_fraction(c) for c in self.coords) + "]"


def format_fraction(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def weight_from_blocks(a: Sequence, b: Sequence = ()) -> Weight:
    return Weight(list(a) + list(b))


# ---------------------------------------------------------------------------
# algebra specification


@dataclasses.dataclass(frozen=True)
class AlgebraSpec:
    """Series B or D and rank m."""

    series: str
    rank: int

    def __post_init__(self):
        series = str(self.series).upper()
        object.__setattr__(self, "series", series)
        if series not in ("B", "D"):
            raise AlgebraError(f"unsupported series {self.series!r}")
        if not isinstance(self.rank, int) or self.rank < (2 if series == "D" else 1):
            raise AlgebraError(f"rank {self.rank!r} out of range for series {series}")

    @property
    def size(self) -> int:
        return 2 * self.rank + (1 if self.series == "B" else 0)

    @property
    def num_positive_roots(self) -> int:
        m = self.rank
        return m * (m - 1) if self.series == "D" else m * m

    def __str__(self):
        return f"{self.series}{self.rank}"


@dataclasses.dataclass(frozen=True, order=True)
class GeneratorId:
    """
    A basis element of the algebra, addressed by its matrix position.

    kind is "lower" (i > j), "raise" (i < j) or "cartan" (i == j <= m).
    Whether a lower generator is written y or Y depends on the grading,
    see `generator_name`.
    """

    kind: str
    i: int
    j: int

    @classmethod
    def at(cls, i: int, j: int) -> "GeneratorId":
        if i == j:
            return cls("cartan", i, i)
        return cls("lower" if i > j else "raise", i, j)

    @property
    def pos(self) -> Tuple[int, int]:
        return (self.i, self.j)

    def __str__(self):
        if self.kind == "cartan":
            return f"h{self.i}"
        return f"{'y' if self.kind == 'lower' else 'x'}[{self.i},{self.j}]"


class MatrixElement:
    """
    Sparse N x N matrix with exact rational entries.

    Entries are 1-based; zero entries are never stored.
    """

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Mapping[Tuple[int, int], Rational] = ()):
        clean = {}
        for (i, j), v in dict(entries).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise AlgebraError(f"entry ({i},{j}) outside a {n}x{n} matrix")
            v = Fraction(v)
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixElement is immutable")

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "MatrixElement":
        return cls(n, {(i, j): 1})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]]) -> "MatrixElement":
        n = len(rows)
        return cls(n, {(i + 1, j + 1): v for i, r in enumerate(rows) for j, v in enumerate(r) if v})

    def to_rows(self) -> List[List[Fraction]]:
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for (i, j), v in self.entries.items():
            rows[i - 1][j - 1] = v
        return rows

    def _same(self, other: "MatrixElement"):
        if not isinstance(other, MatrixElement):
            raise TypeError("expected a MatrixElement")
        if other.n != self.n:
            raise AlgebraError(f"size mismatch: {self.n} vs {other.n}")

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        return self.entries.get(ij, Fraction(0))

    def __add__(self, other: "MatrixElement") -> "MatrixElement":
        self._same(other)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return MatrixElement(self.n, out)

    def __neg__(self) -> "MatrixElement":
        return MatrixElement(self.n, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "MatrixElement") -> "MatrixElement":
        return self + (-other)

    def scale(self, c: Rational) -> "MatrixElement":
        return MatrixElement(self.n, {k: c * v for k, v in self.entries.items()})

    def __rmul__(self, c: Rational) -> "MatrixElement":
        return self.scale(c)

    def __matmul__(self, other: "MatrixElement") -> "MatrixElement":
        self._same(other)
        by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: Dict[Tuple[int, int], Fraction] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return MatrixElement(self.n, out)

    def is_zero(self) -> bool:
        return not self.entries

    def is_antidiagonal_antisymmetric(self) -> bool:
        n = self.n
        keys = set(self.entries) | {(n + 1 - j, n + 1 - i) for (i, j) in self.entries}
        return all(self[(i, j)] == -self[(n + 1 - j, n + 1 - i)] for (i, j) in keys)

    def __eq__(self, other) -> bool:
        return isinstance(other, MatrixElement) and self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, frozenset(self.entries.items())))

    def __repr__(self):
        items = ", ".join(f"({i},{j}):{format_fraction(v)}" for (i, j), v in sorted(self.entries.items()))
        return f"MatrixElement({self.n}, {{{items}}})"


def bracket(a: MatrixElement, b: MatrixElement) -> MatrixElement:
    """The commutator ab - ba."""
    a._same(b)
    return (a @ b) - (b @ a)


# ---------------------------------------------------------------------------
# roots and weights attached to a spec


def _basis_vector(spec: AlgebraSpec, a: int) -> Weight:
    """Weight of the standard basis vector e_a of C^N (epsilon_a, -epsilon_{N+1-a} or 0)."""
    m, n = spec.rank, spec.size
    if a <= m:
        return Weight.unit(m, a)
    if spec.series == "B" and a == m + 1:
        return Weight.zero(m)
    return Weight.unit(m, n + 1 - a, -1)


def position_root(spec: AlgebraSpec, i: int, j: int) -> Weight:
    """Weight of the matrix unit E_{ij} under the adjoint action of the Cartan."""
    return _basis_vector(spec, i) - _basis_vector(spec, j)


def delta(spec: AlgebraSpec) -> Weight:
    """Half the sum of the positive roots."""
    m = spec.rank
    if spec.series == "D":
        return Weight(range(m - 1, -1, -1))
    return Weight.half(range(2 * m - 1, 0, -2))


def simple_roots(spec: AlgebraSpec) -> List[Weight]:
    """
    Simple roots alpha_1 .. alpha_m.

    For D_m the two spin nodes are alpha_{m-1} = eps_{m-1} + eps_m and
    alpha_m = eps_{m-1} - eps_m, which matches the fundamental weights
    pi_{m-1} = 1/2[1,..,1] and pi_m = 1/2[1,..,1,-1].
    """
    m = spec.rank
    out = []
    for i in range(1, m):
        out.append(Weight.unit(m, i) - Weight.unit(m, i + 1))
    if spec.series == "B":
        out.append(Weight.unit(m, m))
    else:
        out[m - 2] = Weight.unit(m, m - 1) + Weight.unit(m, m)
        out.append(Weight.unit(m, m - 1) - Weight.unit(m, m))
    return out


def fundamental_weights(spec: AlgebraSpec) -> List[Weight]:
    m = spec.rank
    out = []
    top = m - 2 if spec.series == "D" else m - 1
    for j in range(1, top + 1):
        out.append(Weight([1] * j + [0] * (m - j)))
    if spec.series == "D":
        out.append(Weight.half([1] * m))
        out.append(Weight.half([1] * (m - 1) + [-1]))
    else:
        out.append(Weight.half([1] * m))
    return out


def positive_roots(spec: AlgebraSpec) -> List[Weight]:
    """Positive roots, listed in matrix order of their raising generators."""
    return [position_root(spec, i, j) for (i, j) in _raise_positions(spec)]


def _raise_positions(spec: AlgebraSpec) -> List[Tuple[int, int]]:
    n = spec.size
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if i + j <= n]


def coroot_pairing(w: Weight, gamma: Weight) -> Fraction:
    """<w, H_gamma> = 2 (w, gamma) / (gamma, gamma)."""
    gg = gamma.dot(gamma)
    if gg == 0:
        raise AlgebraError("coroot of the zero weight")
    return 2 * w.dot(gamma) / gg


def is_root(spec: AlgebraSpec, gamma: Weight) -> bool:
    return gamma in _root_set(spec)


@functools.lru_cache(maxsize=None)
def _root_set(spec: AlgebraSpec) -> frozenset:
    pos = positive_roots(spec)
    return frozenset(pos) | frozenset(-r for r in pos)


def simple_coordinates(spec: AlgebraSpec, w: Weight) -> List[Fraction]:
    """Coefficients c_i with w = sum c_i alpha_i."""
    m = spec.rank
    v = w.coords
    partial = []
    s = Fraction(0)
    for x in v:
        s += x
        partial.append(s)
    if spec.series == "B":
        return partial
    if m == 2:
        # alpha_1 = eps1+eps2, alpha_2 = eps1-eps2
        return [(v[0] + v[1]) / 2, (v[0] - v[1]) / 2]
    c = partial[: m - 2]
    s = partial[m - 2]
    c.append((s + v[m - 1]) / 2)  # eps_{m-1} + eps_m
    c.append((s - v[m - 1]) / 2)  # eps_{m-1} - eps_m
    return c


def weight_leq(spec: AlgebraSpec, mu: Weight, lam: Weight) -> bool:
    """mu <= lam: lam - mu is a nonnegative integral combination of simple roots."""
    # simple_coordinates on doubled integer coordinates; every doubled
    # coefficient must be even and nonnegative
    d = [a - b for a, b in zip(lam.twice, mu.twice)]
    partial = list(itertools.accumulate(d))
    if spec.series == "D":
        m = spec.rank
        head, last = partial[m - 2], d[m - 1]
        if (head + last) % 2:
            return False
        partial = partial[: m - 2] + [(head + last) // 2, (head - last) // 2]
    return all(c >= 0 and c % 2 == 0 for c in partial)


# ---------------------------------------------------------------------------
# the algebra proper


class Algebra:
    """
    Generator table of so(N) in the anti-diagonal realization.

    Generators are indexed 0..dim-1: raising generators, then lowering
    generators, then the Cartan elements h_1..h_m.  Brackets are computed by
    the matrix commutator and decomposed back into the generator basis;
    results are cached.
    """

    def __init__(self, spec: AlgebraSpec):
        self.spec = spec
        self.n = spec.size
        m = spec.rank
        raise_pos = _raise_positions(spec)
        gens = [GeneratorId("raise", i, j) for (i, j) in raise_pos]
        gens += [GeneratorId("lower", j, i) for (i, j) in raise_pos]
        gens += [GeneratorId("cartan", i, i) for i in range(1, m + 1)]
        self.generators: Tuple[GeneratorId, ...] = tuple(gens)
        self.index: Dict[GeneratorId, int] = {g: t for t, g in enumerate(gens)}
        self._by_pos = {g.pos: g for g in gens}
        self.roots: Tuple[Weight, ...] = tuple(
            Weight.zero(m) if g.kind == "cartan" else position_root(spec, g.i, g.j) for g in gens
        )
        self._root_index = {r: t for t, r in enumerate(self.roots) if not r.is_zero()}
        self._matrices: Dict[int, MatrixElement] = {}
        self._brackets: Dict[Tuple[int, int], Tuple[Tuple[int, Fraction], ...]] = {}

    def __repr__(self):
        return f"Algebra({self.spec})"

    @property
    def dim(self) -> int:
        return len(self.generators)

    def gen(self, i: int, j: int) -> GeneratorId:
        """Generator at 1-based position (i, j)."""
        try:
            return self._by_pos[(i, j)]
        except KeyError:
            raise AlgebraError(f"no generator at position ({i},{j}) in {self.spec}") from None

    def idx(self, i: int, j: int) -> int:
        return self.index[self.gen(i, j)]

    def cartan(self, i: int) -> GeneratorId:
        return self.gen(i, i)

    def root(self, g: Union[GeneratorId, int]) -> Weight:
        t = g if isinstance(g, int) else self.index[g]
        return self.roots[t]

    def generator_for_root(self, gamma: Weight) -> GeneratorId:
        try:
            return self.generators[self._root_index[gamma]]
        except KeyError:
            raise AlgebraError(f"{gamma} is not a root of {self.spec}") from None

    def matrix(self, g: Union[GeneratorId, int]) -> MatrixElement:
        t = g if isinstance(g, int) else self.index[g]
        mat = self._matrices.get(t)
        if mat is None:
            g = self.generators[t]
            n = self.n
            i, j = g.i, g.j
            mat = MatrixElement(n, {(i, j): 1}) - MatrixElement(n, {(n + 1 - j, n + 1 - i): 1})
            self._matrices[t] = mat
        return mat

    def element(self, combo: Mapping[Union[GeneratorId, int], Rational]) -> MatrixElement:
        out = MatrixElement(self.n)
        for g, c in combo.items():
            out = out + self.matrix(g).scale(c)
        return out

    def decompose(self, mat: MatrixElement) -> Dict[GeneratorId, Fraction]:
        """
        Coordinates of an algebra element in the generator basis.

        Raises AlgebraError when the matrix is not in so(N).
        """
        if mat.n != self.n:
            raise AlgebraError(f"size mismatch: {mat.n} vs {self.n}")
        out: Dict[GeneratorId, Fraction] = {}
        for (i, j), v in mat.entries.items():
            if i == j:
                if i <= self.spec.rank:
                    out[self.cartan(i)] = v
            elif i + j <= self.n:
                out[GeneratorId.at(i, j)] = v
        if self.element(out) != mat:
            raise AlgebraError("matrix is not anti-diagonal antisymmetric")
        return out

    def bracket_ids(self, a: int, b: int) -> Tuple[Tuple[int, Fraction], ...]:
        """[g_a, g_b] as a tuple of (generator index, coefficient)."""
        key = (a, b)
        hit = self._brackets.get(key)
        if hit is None:
            ra, rb = self.roots[a], self.roots[b]
            target = ra + rb
            if not target.is_zero() and target not in self._root_index:
                hit = ()
            else:
                dec = self.decompose(bracket(self.matrix(a), self.matrix(b)))
                hit = tuple(sorted((self.index[g], c) for g, c in dec.items()))
            self._brackets[key] = hit
            self._brackets[(b, a)] = tuple((t, -c) for t, c in hit)
        return hit

    def bracket_gens(self, a: GeneratorId, b: GeneratorId) -> Dict[GeneratorId, Fraction]:
        return {self.generators[t]: c for t, c in self.bracket_ids(self.index[a], self.index[b])}

    def cartan_value(self, lam: Weight, t: int) -> Fraction:
        """lambda(h_i) for the Cartan generator with index t."""
        return lam[self.generators[t].i - 1]


@functools.lru_cache(maxsize=None)
def build_algebra(spec: AlgebraSpec) -> Algebra:
    return Algebra(spec)


# ---------------------------------------------------------------------------
# grading


@dataclasses.dataclass(frozen=True)
class Grading:
    """
    The grading of so(N) defined by crossing the single simple root alpha_k.

    The grading element is E = diag(1^k, 0, ..., 0, -1^k); it evaluates a
    weight [a_1..a_k | b_1..b_n] to a_1 + ... + a_k.
    """

    spec: AlgebraSpec
    k: int

    def __post_init__(self):
        m = self.spec.rank
        top = m - 2 if self.spec.series == "D" else m
        if not isinstance(self.k, int) or not 1 <= self.k <= top:
            raise AlgebraError(
                f"crossing alpha_{self.k} of {self.spec} is not a block grading "
                f"(need 1 <= k <= {top})"
            )

    @property
    def n(self) -> int:
        return self.spec.rank - self.k

    def evaluate(self, w: Weight) -> Fraction:
        return Fraction(sum(w.twice[: self.k]), 2)

    def matrix(self) -> MatrixElement:
        n, k = self.spec.size, self.k
        ent = {(i, i): 1 for i in range(1, k + 1)}
        ent.update({(n + 1 - i, n + 1 - i): -1 for i in range(1, k + 1)})
        return MatrixElement(n, ent)

    def degree(self, g: GeneratorId) -> int:
        if g.kind == "cartan":
            return 0
        return int(self.evaluate(position_root(self.spec, g.i, g.j)))

    def uncrossed(self) -> List[int]:
        """1-based indices of the simple roots of the Levi factor."""
        return [i for i in range(1, self.spec.rank + 1) if i != self.k]


def grading_element(spec: AlgebraSpec, sigma: Iterable[int]) -> Grading:
    sigma = list(sigma)
    if len(sigma) != 1:
        raise AlgebraError("exactly one crossed node is supported")
    return Grading(spec, sigma[0])


def grading_degree(g: GeneratorId, spec: AlgebraSpec, sigma: Iterable[int]) -> int:
    return grading_element(spec, sigma).degree(g)


def generator_name(g: GeneratorId, grading: Grading) -> str:
    """Display name: y/x off the Levi factor, Y/X inside it, h for the Cartan."""
    if g.kind == "cartan":
        return f"h{g.i}"
    letter = "y" if g.kind == "lower" else "x"
    if grading.degree(g) == 0:
        letter = letter.upper()
    return f"{letter}[{g.i},{g.j}]"
