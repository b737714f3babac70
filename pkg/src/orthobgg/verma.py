"""
Generalized Verma modules M_p(lam) = U(g_-) (x) L(lam) with exact arithmetic.

A vector is a finite sum of terms  c * y_1 ... y_r (x) Y_1 ... Y_s v,  where
y_1 ... y_r is a PBW monomial in g_- and Y_1 ... Y_s v is one of the chosen
basis vectors of the finite-dimensional inducing module L(lam).

L(lam) is realized as the Verma module of the Levi factor modulo the
submodule generated by the vectors Y_a^{<lam, H_a> + 1} v, a an uncrossed
simple root.  Each weight space gets a basis of Levi words (shortest words
preferred) and a reduction map for all other words.

Everything is computed by straightening: a generator is commuted to the
right with  z y = y z + [z, y]  until it reaches the inducing module, where
g_+ acts by zero and g_0 acts on L(lam).
"""
from __future__ import annotations

import dataclasses
import json
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .liealg import (
    AlgebraError,
    GeneratorId,
    Weight,
    build_algebra,
    coroot_pairing,
    format_fraction,
    generator_name,
    simple_coordinates,
    simple_roots,
)
from .parabolic import ParabolicSpec, is_p_integral, is_p_regular_vertex

Word = Tuple[int, ...]  # generator indices
Term = Tuple[Word, Word]  # (g_- monomial, Levi word)
Terms = Dict[Term, Fraction]


def _add(acc: Dict, key, c):
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _qq(c: Fraction):
    return QQ(c.numerator, c.denominator)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _rref_rows(rows: List[List[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], List[int]]:
    """Nonzero rows of the reduced row echelon form and the pivot columns."""
    if not rows:
        return [], []
    dm = DomainMatrix([[_qq(Fraction(c)) for c in r] for r in rows], (len(rows), ncols), QQ)
    red, pivots = dm.rref()
    dense = red.to_Matrix().tolist()
    out = [[_frac(c) for c in dense[t]] for t in range(len(pivots))]
    return out, list(pivots)


def _nullspace(rows: List[List[Fraction]], ncols: int) -> List[List[Fraction]]:
    """Basis of the kernel, in reduced echelon form (first nonzero entry 1)."""
    red, pivots = _rref_rows(rows, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            v[p] = -r[f]
        basis.append(v)
    # echelonize the kernel basis itself so that normalization is canonical
    red, _ = _rref_rows(basis, ncols)
    return red


@dataclasses.dataclass
class LWeightSpace:
    """
    A weight space of L(lam).

    `offset` is nu - lam in simple-root coordinates, `basis` the chosen Levi
    words, and `reduction` sends every non-basis word of this weight to its
    expansion in the basis.
    """

    lam: Weight
    nu: Weight
    offset: Tuple[int, ...]
    basis: List[Word]
    reduction: Dict[Word, Dict[Word, Fraction]]
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, word: Word) -> Dict[Word, Fraction]:
        if word in self.reduction:
            return self.reduction[word]
        raise AlgebraError(f"word {word} does not have weight {self.nu}")


class VermaModule:
    """M_p(lam) for a p-dominant, p-integral weight lam."""

    def __init__(self, ps: ParabolicSpec, lam: Weight):
        if not is_p_regular_vertex(lam, ps):
            raise AlgebraError(f"{ps.render(lam)} is not p-dominant and p-integral")
        self.ps = ps
        self.lam = lam
        self.alg = build_algebra(ps.algebra)
        self.grading = ps.grading
        alg, gr = self.alg, self.grading
        self.degree = [gr.degree(g) for g in alg.generators]
        self.kind = [g.kind for g in alg.generators]
        self.coords = [tuple(int(c) for c in simple_coordinates(ps.algebra, r)) for r in alg.roots]
        self.lower = [t for t in range(alg.dim) if self.degree[t] < 0]
        self.levi_lower = [t for t in range(alg.dim) if self.kind[t] == "lower" and self.degree[t] == 0]
        # PBW keys: monomials and words are nonincreasing in these
        self.key = {}
        for t, g in enumerate(alg.generators):
            self.key[t] = (-self.degree[t], g.i, g.j)
        self._simple_raise = [alg.index[alg.generator_for_root(a)] for a in simple_roots(ps.algebra)]
        self._positive = [t for t in range(alg.dim) if self.kind[t] == "raise"]
        self._levi_simple = []
        for i in gr.uncrossed():
            a = simple_roots(ps.algebra)[i - 1]
            m = coroot_pairing(lam, a)
            if m.denominator != 1 or m < 0:
                raise AlgebraError(f"<lam, H_{i}> = {m} is not a nonnegative integer")
            self._levi_simple.append((alg.index[alg.generator_for_root(-a)], int(m), i - 1))
        self._lower_cache: Dict[Tuple[int, Word], Dict[Word, Fraction]] = {}
        self._levi_cache: Dict[Tuple[int, Word], Dict[Word, Fraction]] = {}
        self._levi_mult_cache: Dict[Tuple[int, Word], Dict[Word, Fraction]] = {}
        self._act_cache: Dict[Tuple[int, Term], Terms] = {}
        self._spaces: Dict[Tuple[int, ...], LWeightSpace] = {}

    def __repr__(self):
        return f"VermaModule({self.ps}, {self.ps.render(self.lam)})"

    # -- bookkeeping --------------------------------------------------------

    def name(self, t: int) -> str:
        return generator_name(self.alg.generators[t], self.grading)

    def offset(self, word: Iterable[int]) -> Tuple[int, ...]:
        acc = [0] * self.ps.rank
        for t in word:
            for a, c in enumerate(self.coords[t]):
                acc[a] += c
        return tuple(acc)

    def weight_of(self, term: Term) -> Weight:
        w = self.lam
        for t in term[0] + term[1]:
            w = w + self.alg.roots[t]
        return w

    def highest(self) -> "VermaVector":
        return VermaVector(self, {((), ()): Fraction(1)})

    def zero(self) -> "VermaVector":
        return VermaVector(self, {})

    def gen_index(self, g: Union[GeneratorId, int, Tuple[int, int]]) -> int:
        if isinstance(g, int):
            return g
        if isinstance(g, GeneratorId):
            return self.alg.index[g]
        return self.alg.idx(*g)

    # -- U(g_-) and U(n_0^-) products ---------------------------------------

    def _insert(self, z: int, word: Word, cache: Dict) -> Dict[Word, Fraction]:
        """z * word in the enveloping algebra of the lowering part, straightened."""
        hit = cache.get((z, word))
        if hit is not None:
            return hit
        if not word or self.key[z] >= self.key[word[0]]:
            out = {(z,) + word: Fraction(1)}
        else:
            out = {}
            head, rest = word[0], word[1:]
            for w, c in self._insert(z, rest, cache).items():
                for w2, c2 in self._insert(head, w, cache).items():
                    _add(out, w2, c * c2)
            for t, cb in self.alg.bracket_ids(z, head):
                for w, c in self._insert(t, rest, cache).items():
                    _add(out, w, cb * c)
        cache[(z, word)] = out
        return out

    def _levi_act(self, z: int, word: Word) -> Dict[Word, Fraction]:
        """z * word * v in the Levi Verma module (no reduction)."""
        hit = self._levi_cache.get((z, word))
        if hit is not None:
            return hit
        kind = self.kind[z]
        if kind == "lower":
            out = self._insert(z, word, self._levi_mult_cache)
        elif not word:
            out = {(): Fraction(self.alg.cartan_value(self.lam, z))} if kind == "cartan" else {}
            out = {k: v for k, v in out.items() if v}
        else:
            out = {}
            head, rest = word[0], word[1:]
            for w, c in self._levi_act(z, rest).items():
                for w2, c2 in self._insert(head, w, self._levi_mult_cache).items():
                    _add(out, w2, c * c2)
            for t, cb in self.alg.bracket_ids(z, head):
                for w, c in self._levi_act(t, rest).items():
                    _add(out, w, cb * c)
        self._levi_cache[(z, word)] = out
        return out

    # -- L(lam) weight spaces -------------------------------------------------

    def levi_words(self, offset: Sequence[int]) -> List[Word]:
        """Nonincreasing Levi words whose roots sum to `offset`."""
        gens = sorted(self.levi_lower, key=lambda t: self.key[t], reverse=True)
        out: List[Word] = []

        def rec(start: int, remaining: Tuple[int, ...], acc: Word):
            if not any(remaining):
                out.append(acc)
                return
            for s in range(start, len(gens)):
                t = gens[s]
                nxt = tuple(a - b for a, b in zip(remaining, self.coords[t]))
                if all(x <= 0 for x in nxt):
                    rec(s, nxt, acc + (t,))

        if all(x <= 0 for x in offset) and offset[self.ps.k - 1] == 0:
            rec(0, tuple(offset), ())
        return out

    def l_space(self, offset: Sequence[int]) -> LWeightSpace:
        offset = tuple(offset)
        hit = self._spaces.get(offset)
        if hit is not None:
            return hit
        words = self.levi_words(offset)
        # least preferred columns first, so that pivots fall on them
        words.sort(key=lambda w: (len(w), w), reverse=True)
        col = {w: j for j, w in enumerate(words)}
        rows: List[List[Fraction]] = []
        for z, m, a in self._levi_simple:
            need = list(offset)
            need[a] += m + 1
            if need[a] > 0:
                continue
            seed = (z,) * (m + 1)
            for u in self.levi_words(need):
                vec = {seed: Fraction(1)}
                for letter in reversed(u):
                    nxt: Dict[Word, Fraction] = {}
                    for w, c in vec.items():
                        for w2, c2 in self._insert(letter, w, self._levi_mult_cache).items():
                            _add(nxt, w2, c * c2)
                    vec = nxt
                if vec:
                    row = [Fraction(0)] * len(words)
                    for w, c in vec.items():
                        row[col[w]] += c
                    rows.append(row)
        red, pivots = _rref_rows(rows, len(words))
        pivot_set = set(pivots)
        basis = [w for j, w in enumerate(words) if j not in pivot_set]
        reduction: Dict[Word, Dict[Word, Fraction]] = {w: {w: Fraction(1)} for w in basis}
        for r, p in zip(red, pivots):
            reduction[words[p]] = {words[j]: -r[j] for j in range(len(words)) if j not in pivot_set and r[j]}
        basis.sort(key=lambda w: (len(w), w))
        nu = self.lam
        for a, c in enumerate(offset):
            nu = nu + simple_roots(self.ps.algebra)[a].scale(c)
        space = LWeightSpace(self.lam, nu, offset, basis, reduction, len(words))
        self._spaces[offset] = space
        return space

    def reduce_levi(self, vec: Mapping[Word, Fraction]) -> Dict[Word, Fraction]:
        out: Dict[Word, Fraction] = {}
        for w, c in vec.items():
            for b, cb in self.l_space(self.offset(w)).reduce(w).items():
                _add(out, b, c * cb)
        return out

    # -- the action -------------------------------------------------------------

    def act_term(self, z: int, term: Term) -> Terms:
        """z * (mono (x) word v), in canonical form."""
        key = (z, term)
        hit = self._act_cache.get(key)
        if hit is not None:
            return hit
        mono, word = term
        out: Terms = {}
        if self.degree[z] < 0:
            for m, c in self._insert(z, mono, self._lower_cache).items():
                out[(m, word)] = c
        elif not mono:
            if self.degree[z] == 0:
                for b, c in self.reduce_levi(self._levi_act(z, word)).items():
                    out[((), b)] = c
        else:
            head, rest = mono[0], mono[1:]
            for (m, w), c in self.act_term(z, (rest, word)).items():
                for m2, c2 in self._insert(head, m, self._lower_cache).items():
                    _add(out, (m2, w), c * c2)
            for t, cb in self.alg.bracket_ids(z, head):
                for tm, c in self.act_term(t, (rest, word)).items():
                    _add(out, tm, cb * c)
        self._act_cache[key] = out
        return out

    def act(self, g, v: "VermaVector") -> "VermaVector":
        """
        Left action of a generator or of a linear combination of generators.

        `g` may be a GeneratorId, a generator index, a position (i, j), or a
        mapping from any of these to coefficients.
        """
        self._own(v)
        combo = g.items() if isinstance(g, Mapping) else [(g, 1)]
        out: Terms = {}
        for gg, cg in combo:
            z = self.gen_index(gg)
            for term, c in v.terms.items():
                for t2, c2 in self.act_term(z, term).items():
                    _add(out, t2, Fraction(cg) * c * c2)
        return VermaVector(self, out)

    def apply_word(self, letters: Sequence[int], v: "VermaVector") -> "VermaVector":
        """letters[0] * letters[1] * ... * v, applied right to left."""
        for z in reversed(letters):
            v = self.act(z, v)
        return v

    def _own(self, v: "VermaVector"):
        if v.module is not self:
            raise AlgebraError("vector belongs to a different module")

    # -- weight spaces and singular vectors ------------------------------------

    def weight_space_basis(self, mu: Weight) -> List["VermaVector"]:
        return [VermaVector(self, {t: Fraction(1)}) for t in self.weight_space_terms(mu)]

    def weight_space_terms(self, mu: Weight) -> List[Term]:
        diff = mu - self.lam
        try:
            target = tuple(simple_coordinates(self.ps.algebra, diff))
        except AlgebraError:
            return []
        if any(c.denominator != 1 or c > 0 for c in target):
            return []
        target = tuple(int(c) for c in target)
        k = self.ps.k - 1
        gens = sorted(self.lower, key=lambda t: self.key[t], reverse=True)
        terms: List[Term] = []

        def rec(start: int, remaining: Tuple[int, ...], acc: Word):
            if remaining[k] == 0:
                for w in self.l_space(remaining).basis:
                    terms.append((acc, w))
                return
            for s in range(start, len(gens)):
                t = gens[s]
                nxt = tuple(a - b for a, b in zip(remaining, self.coords[t]))
                if all(x <= 0 for x in nxt):
                    rec(s, nxt, acc + (t,))

        rec(0, target, ())
        terms.sort(key=self.term_order)
        return terms

    def term_order(self, term: Term):
        """Fixed basis order: pure v-terms first, larger monomials first."""
        mono, word = term
        return (bool(word), tuple((-a, -b, -c) for a, b, c in (self.key[t] for t in mono)), -len(mono),
                tuple(self.key[t] for t in word))

    def singular_vectors(self, mu: Weight, verify: bool = True) -> List["VermaVector"]:
        """Basis of {v in M_p(lam)_mu : n^+ v = 0}, echelonized in the basis order."""
        terms = self.weight_space_terms(mu)
        if not terms:
            return []
        row_index: Dict[Term, int] = {}
        entries: Dict[Tuple[int, int], Fraction] = {}
        for j, term in enumerate(terms):
            for e in self._simple_raise:
                for t2, c in self.act_term(e, term).items():
                    r = row_index.setdefault((e,) + t2, len(row_index))
                    entries[(r, j)] = c
        rows = [[Fraction(0)] * len(terms) for _ in range(len(row_index))]
        for (r, j), c in entries.items():
            rows[r][j] = c
        kernel = _nullspace(rows, len(terms)) if rows else _nullspace([[Fraction(0)] * len(terms)], len(terms))
        out = [VermaVector(self, {terms[j]: c for j, c in enumerate(vec) if c}) for vec in kernel]
        if verify:
            for v in out:
                for e in self._positive:
                    if not self.act(e, v).is_zero():
                        raise AlgebraError(f"solver output is not killed by {self.name(e)}")
        return out


@lru_cache(maxsize=64)
def verma_module(ps: ParabolicSpec, lam: Weight) -> VermaModule:
    return VermaModule(ps, lam)


# ---------------------------------------------------------------------------
# vectors


class VermaVector:
    """An element of M_p(lam): immutable map (monomial, Levi word) -> rational."""

    __slots__ = ("module", "terms")

    def __init__(self, module: VermaModule, terms: Mapping[Term, Fraction]):
        object.__setattr__(self, "module", module)
        object.__setattr__(self, "terms", {k: Fraction(v) for k, v in terms.items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("VermaVector is immutable")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def weight(self) -> Optional[Weight]:
        """Common weight of all terms (None for the zero vector)."""
        ws = {self.module.weight_of(t) for t in self.terms}
        if len(ws) > 1:
            raise AlgebraError("vector is not a weight vector")
        return next(iter(ws), None)

    def _same(self, other: "VermaVector"):
        if other.module is not self.module:
            raise AlgebraError("vectors live in different modules")

    def __add__(self, other: "VermaVector") -> "VermaVector":
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return VermaVector(self.module, out)

    def __neg__(self) -> "VermaVector":
        return VermaVector(self.module, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + (-other)

    def scale(self, c) -> "VermaVector":
        return VermaVector(self.module, {k: v * Fraction(c) for k, v in self.terms.items()})

    def __rmul__(self, c) -> "VermaVector":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        return isinstance(other, VermaVector) and other.module is self.module and other.terms == self.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def normalized(self) -> "VermaVector":
        """Scaled so that the first coefficient in the basis order is 1."""
        if not self.terms:
            return self
        first = min(self.terms, key=self.module.term_order)
        return self.scale(1 / self.terms[first])

    def sorted_terms(self) -> List[Tuple[Term, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: self.module.term_order(kv[0]))

    def to_text(self) -> str:
        """
        Plain-text rendering.

        >>> from orthobgg.liealg import Weight
        >>> from orthobgg.parabolic import ParabolicSpec
        >>> m = verma_module(ParabolicSpec.of("D", 4, 1), Weight.half([-5, 1, 1, 1]))
        >>> m.act((5, 1), m.highest()).to_text()
        'y[5,1] v'
        >>> m.zero().to_text()
        '0'
        """
        if not self.terms:
            return "0"
        parts = []
        for (mono, word), c in self.sorted_terms():
            factors = [self.module.name(t) for t in mono + word]
            body = "*".join(factors) + " v" if factors else "v"
            mag = abs(c)
            text = body if mag == 1 else f"{format_fraction(mag)}*{body}"
            if not parts:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append((" - " if c < 0 else " + ") + text)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"VermaVector({self.to_text()!r})"

    def to_json(self) -> dict:
        gens = self.module.alg.generators
        w = self.weight()
        return {
            "lambda": [format_fraction(x) for x in self.module.lam.coords],
            "weight": None if w is None else [format_fraction(x) for x in w.coords],
            "terms": [
                {
                    "coeff": format_fraction(c),
                    "mono": [[gens[t].i, gens[t].j] for t in mono],
                    "word": [[gens[t].i, gens[t].j] for t in word],
                }
                for (mono, word), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, module: VermaModule, doc: Mapping) -> "VermaVector":
        out: Terms = {}
        for t in doc["terms"]:
            mono = tuple(module.alg.idx(i, j) for i, j in t["mono"])
            word = tuple(module.alg.idx(i, j) for i, j in t["word"])
            _add(out, (mono, word), Fraction(t["coeff"]))
        return cls(module, out)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# elements of U(g) as formal words


class UElement:
    """
    A formal linear combination of words in the generators of g.

    Used to write down operators such as  y51 - y31*Y53  and let them act on
    vectors; products are concatenation, nothing is straightened here.
    """

    def __init__(self, spec, terms: Mapping[Word, Fraction] = ()):
        self.spec = spec
        self.terms = {w: Fraction(c) for w, c in dict(terms).items() if c}

    @classmethod
    def gen(cls, spec, i: int, j: int) -> "UElement":
        return cls(spec, {(build_algebra(spec).idx(i, j),): 1})

    @classmethod
    def one(cls, spec) -> "UElement":
        return cls(spec, {(): 1})

    def __add__(self, other: "UElement") -> "UElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add(out, w, c)
        return UElement(self.spec, out)

    def __neg__(self):
        return UElement(self.spec, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "UElement") -> "UElement":
        return self + (-other)

    def __mul__(self, other) -> "UElement":
        if not isinstance(other, UElement):
            return UElement(self.spec, {w: c * Fraction(other) for w, c in self.terms.items()})
        out: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _add(out, w1 + w2, c1 * c2)
        return UElement(self.spec, out)

    def __rmul__(self, c) -> "UElement":
        return UElement(self.spec, {w: v * Fraction(c) for w, v in self.terms.items()})

    def act(self, v: VermaVector) -> VermaVector:
        out = v.module.zero()
        for w, c in self.terms.items():
            out = out + v.module.apply_word(w, v).scale(c)
        return out

    def __str__(self):
        alg = build_algebra(self.spec)
        parts = []
        for w, c in sorted(self.terms.items()):
            body = "*".join(str(alg.generators[t]) for t in w) or "1"
            parts.append(f"{format_fraction(c)}*{body}")
        return " + ".join(parts) or "0"


# ---------------------------------------------------------------------------
# module-level operations


def _module(ps: ParabolicSpec, lam: Weight) -> VermaModule:
    return verma_module(ps, lam)


def l_weight_space(lam: Weight, nu: Weight, ps: ParabolicSpec) -> LWeightSpace:
    """L(lam)_nu; empty when nu is not below lam in the Levi root lattice."""
    m = _module(ps, lam)
    coords = simple_coordinates(ps.algebra, nu - lam)
    if any(c.denominator != 1 for c in coords):
        return LWeightSpace(lam, nu, (), [], {}, 0)
    return m.l_space(tuple(int(c) for c in coords))


def act(g, v: VermaVector) -> VermaVector:
    return v.module.act(g, v)


def weight_space_basis(lam: Weight, mu: Weight, ps: ParabolicSpec) -> List[VermaVector]:
    return _module(ps, lam).weight_space_basis(mu)


@dataclasses.dataclass
class ExtremalSolution:
    lam: Weight
    mu: Weight
    basis: List[VermaVector]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vector(self) -> VermaVector:
        if len(self.basis) != 1:
            raise AlgebraError(f"solution space has dimension {len(self.basis)}, expected 1")
        return self.basis[0]


def extremal_vectors(lam: Weight, mu: Weight, ps: ParabolicSpec) -> ExtremalSolution:
    """Singular vectors of weight mu in M_p(lam), i.e. homomorphisms M_p(mu) -> M_p(lam)."""
    m = _module(ps, lam)
    if not (is_p_integral(mu, ps) and is_p_regular_vertex(mu, ps)):
        raise AlgebraError(f"{ps.render(mu)} is not p-dominant and p-integral")
    return ExtremalSolution(lam, mu, m.singular_vectors(mu))


def hom_apply(vec: VermaVector, u: Union[UElement, Sequence[int]]) -> VermaVector:
    """Image of u (x) v_mu under the homomorphism defined by `vec`."""
    if isinstance(u, UElement):
        return u.act(vec)
    return vec.module.apply_word(tuple(u), vec)


def compose(outer: VermaVector, inner: VermaVector) -> VermaVector:
    """
    The vector describing M_p(nu) -> M_p(mu) -> M_p(lam).

    `outer` is a singular vector of weight mu in M_p(lam), `inner` one of
    weight nu in M_p(mu).  Each term mono (x) word v_mu of `inner` is sent
    to mono * word * outer.
    """
    mu = outer.weight()
    if mu is None:
        return outer
    if inner.module.lam != mu:
        raise AlgebraError(
            f"inner vector lives in M_p({inner.module.ps.render(inner.module.lam)}), "
            f"expected M_p({outer.module.ps.render(mu)})"
        )
    m = outer.module
    out = m.zero()
    for (mono, word), c in inner.terms.items():
        out = out + m.apply_word(mono + word, outer).scale(c)
    return out


def compose_is_zero(outer: VermaVector, inner: VermaVector) -> Tuple[bool, VermaVector]:
    residual = compose(outer, inner)
    return residual.is_zero(), residual


# ---------------------------------------------------------------------------
# explicit operators in U(g)


def y(spec, i: int, j: int) -> UElement:
    return UElement.gen(spec, i, j)


def first_order_operator(spec, k: int, n: int, primed: bool = False) -> UElement:
    """
    y_{t,k} - sum_j y_{k+j,k} Y_{t,k+j}  with t = k+n+1 (or k+n when primed).

    For primed vectors the top index is k+n and the sum runs over
    j = 1..n-1 as well.
    """
    top = k + n if primed else k + n + 1
    out = y(spec, top, k)
    for j in range(1, n):
        out = out - y(spec, k + j, k) * y(spec, top, k + j)
    return out


def d_plus(spec, n: int, i: int) -> UElement:
    out = y(spec, n + 3, i)
    for j in range(3, n + 2):
        out = out - y(spec, j, i) * y(spec, n + 3, j)
    return out


def d_minus(spec, n: int, i: int) -> UElement:
    out = y(spec, n + 2, i)
    for j in range(3, n + 2):
        out = out - y(spec, j, i) * y(spec, n + 2, j)
    return out


def second_order_operator(spec, n: int) -> UElement:
    """D1+ D2- + D2+ D2- Y21 - y_{2n+3,1} in D_{2+n}."""
    return (
        d_plus(spec, n, 1) * d_minus(spec, n, 2)
        + d_plus(spec, n, 2) * d_minus(spec, n, 2) * y(spec, 2, 1)
        - y(spec, 2 * n + 3, 1)
    )


def third_order_chain_operator(spec, n: int) -> UElement:
    """D1- + D2- Y21."""
    return d_minus(spec, n, 1) + d_minus(spec, n, 2) * y(spec, 2, 1)


def delta2_expression(spec, n: int) -> UElement:
    """y_{2n+2,2} y_{32} + y_{2n+1,2} y_{42} + ... + y_{n+3,2} y_{n+2,2}."""
    out = UElement(spec)
    for j in range(n):
        out = out + y(spec, 2 * n + 2 - j, 2) * y(spec, 3 + j, 2)
    return out
