"""
Weyl groups of types B and D as signed permutations.

Convention: a signed permutation w = (perm, signs) sends coordinate j of a
weight to position perm[j] and then multiplies position i by signs[i], so

    (w mu)[i] = signs[i] * mu[perm^{-1}(i)].

Everything is 0-based internally; weights use the `Weight` class.
"""
from __future__ import annotations

import dataclasses
import itertools
from collections import deque
from typing import Dict, Iterator, Optional, Set, Tuple

from .liealg import (
    AlgebraError,
    AlgebraSpec,
    Weight,
    coroot_pairing,
    delta,
    is_root,
    positive_roots,
    simple_roots,
)

GROUP_RANK_GUARD = 7


class GuardExceeded(RuntimeError):
    """A computation would exceed a configured size guard."""


@dataclasses.dataclass(frozen=True)
class SignedPermutation:
    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise AlgebraError(f"{self.perm} is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise AlgebraError("signs must be +-1, one per coordinate")

    @classmethod
    def identity(cls, rank: int) -> "SignedPermutation":
        return cls(tuple(range(rank)), (1,) * rank)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def negatives(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    def in_series(self, series: str) -> bool:
        return series == "B" or self.negatives() % 2 == 0

    def inverse_perm(self) -> Tuple[int, ...]:
        inv = [0] * len(self.perm)
        for j, p in enumerate(self.perm):
            inv[p] = j
        return tuple(inv)

    def __call__(self, mu: Weight) -> Weight:
        return apply(self, mu)

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self o other."""
        if other.rank != self.rank:
            raise AlgebraError("rank mismatch")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.rank))
        inv = self.inverse_perm()
        signs = tuple(self.signs[i] * other.signs[inv[i]] for i in range(self.rank))
        return SignedPermutation(perm, signs)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return self.compose(other)

    def inverse(self) -> "SignedPermutation":
        inv = self.inverse_perm()
        # w^{-1} sends position i back to inv[i]; sign applied on the way back
        signs = tuple(self.signs[self.perm[j]] for j in range(self.rank))
        return SignedPermutation(inv, signs)

    @classmethod
    def mapping(cls, source: Weight, target: Weight, series: str = "B") -> "SignedPermutation":
        """
        The signed permutation taking `source` to `target`.

        `source` must have pairwise distinct absolute values; at most one zero
        coordinate is allowed, whose sign is then fixed by the D parity rule.
        """
        src, dst = source.twice, target.twice
        if len(src) != len(dst):
            raise AlgebraError("rank mismatch")
        where = {}
        for j, v in enumerate(src):
            if abs(v) in where:
                raise AlgebraError(f"{source} is not regular enough to define a mapping")
            where[abs(v)] = j
        perm = [0] * len(src)
        signs = [1] * len(src)
        zero_pos = None
        for i, v in enumerate(dst):
            j = where.get(abs(v))
            if j is None:
                raise AlgebraError(f"{target} is not a signed permutation of {source}")
            perm[j] = i
            if v == 0:
                zero_pos = i
            else:
                signs[i] = 1 if (v > 0) == (src[j] > 0) else -1
        if len(set(perm)) != len(perm):
            raise AlgebraError(f"{target} is not a signed permutation of {source}")
        if series == "D" and zero_pos is not None and sum(1 for s in signs if s < 0) % 2:
            signs[zero_pos] = -1
        w = cls(tuple(perm), tuple(signs))
        if not w.in_series(series):
            raise AlgebraError(f"{target} is not in the W({series})-orbit of {source}")
        return w


def apply(w: SignedPermutation, mu: Weight) -> Weight:
    if w.rank != mu.rank:
        raise AlgebraError("rank mismatch")
    out = [0] * w.rank
    for j, v in enumerate(mu.twice):
        i = w.perm[j]
        out[i] = w.signs[i] * v
    return Weight.from_twice(out)


def reflect(gamma: Weight, mu: Weight, spec: Optional[AlgebraSpec] = None) -> Weight:
    """s_gamma(mu) = mu - <mu, H_gamma> gamma."""
    if spec is not None and not is_root(spec, gamma):
        raise AlgebraError(f"{gamma} is not a root of {spec}")
    g, x = gamma.twice, mu.twice
    if len(g) != len(x):
        raise AlgebraError("rank mismatch")
    den = sum(t * t for t in g)
    if den == 0:
        raise AlgebraError("cannot reflect in the zero weight")
    num = 2 * sum(a * b for a, b in zip(x, g))
    out = []
    for a, b in zip(x, g):
        q, r = divmod(num * b, den)
        if r:
            raise AlgebraError(f"s_{gamma} does not preserve half-integrality of {mu}")
        out.append(a - q)
    return Weight.from_twice(out)


def reflection(gamma: Weight, series: str) -> SignedPermutation:
    """s_gamma as a signed permutation (gamma a root of B or D)."""
    m = gamma.rank
    nz = [(i, v) for i, v in enumerate(gamma.twice) if v]
    perm = list(range(m))
    signs = [1] * m
    if len(nz) == 1:
        signs[nz[0][0]] = -1
    elif len(nz) == 2 and abs(nz[0][1]) == abs(nz[1][1]):
        (a, va), (b, vb) = nz
        perm[a], perm[b] = b, a
        if (va > 0) == (vb > 0):
            signs[a] = signs[b] = -1
    else:
        raise AlgebraError(f"{gamma} is not a root")
    return SignedPermutation(tuple(perm), tuple(signs))


def affine_apply(w: SignedPermutation, mu: Weight, spec: AlgebraSpec) -> Weight:
    d = delta(spec)
    return apply(w, mu + d) - d


def affine_reflect(gamma: Weight, mu: Weight, spec: AlgebraSpec) -> Weight:
    d = delta(spec)
    return reflect(gamma, mu + d, spec) - d


def length_of_image(x: Weight, spec: AlgebraSpec) -> int:
    """Length of w, read off from x = w(delta): #{gamma > 0 : (x, gamma) < 0}."""
    xs = x.twice
    return sum(1 for g in _positive_twice(spec) if sum(a * b for a, b in zip(xs, g)) < 0)


def _positive_twice(spec: AlgebraSpec):
    hit = _POS_CACHE.get(spec)
    if hit is None:
        hit = _POS_CACHE[spec] = tuple(r.twice for r in positive_roots(spec))
    return hit


_POS_CACHE: Dict[AlgebraSpec, tuple] = {}


def length(w: SignedPermutation, spec: AlgebraSpec) -> int:
    """Number of positive roots sent to negative roots by w."""
    if w.rank != spec.rank:
        raise AlgebraError("rank mismatch")
    return length_of_image(apply(w.inverse(), delta(spec)), spec)


def enumerate_group(spec: AlgebraSpec) -> Iterator[SignedPermutation]:
    if spec.rank > GROUP_RANK_GUARD:
        raise GuardExceeded(f"full Weyl group enumeration is limited to rank <= {GROUP_RANK_GUARD}")
    m = spec.rank
    for perm in itertools.permutations(range(m)):
        for signs in itertools.product((1, -1), repeat=m):
            w = SignedPermutation(perm, signs)
            if w.in_series(spec.series):
                yield w


def group_order(spec: AlgebraSpec) -> int:
    m = spec.rank
    f = 1
    for i in range(2, m + 1):
        f *= i
    return f * 2 ** (m if spec.series == "B" else m - 1)


def orbit(mu: Weight, spec: AlgebraSpec) -> Set[Weight]:
    """W-orbit of mu, by closure under simple reflections."""
    if spec.rank > GROUP_RANK_GUARD:
        raise GuardExceeded(f"orbit enumeration is limited to rank <= {GROUP_RANK_GUARD}")
    simples = simple_roots(spec)
    seen = {mu}
    todo = deque([mu])
    while todo:
        x = todo.popleft()
        for a in simples:
            y = reflect(a, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def in_same_orbit(x: Weight, y: Weight, spec: AlgebraSpec) -> bool:
    if sorted(abs(t) for t in x.twice) != sorted(abs(t) for t in y.twice):
        return False
    if spec.series == "B" or 0 in x.twice:
        return True
    neg = lambda w: sum(1 for t in w.twice if t < 0)  # noqa: E731
    return neg(x) % 2 == neg(y) % 2


def dominant_representative(x: Weight, spec: AlgebraSpec) -> Weight:
    """The dominant element of the W-orbit of x."""
    vals = sorted((abs(t) for t in x.twice), reverse=True)
    if spec.series == "D" and vals[-1] != 0:
        if sum(1 for t in x.twice if t < 0) % 2:
            vals[-1] = -vals[-1]
    return Weight.from_twice(vals)


def reflection_connecting(mu: Weight, nu: Weight, spec: AlgebraSpec) -> Optional[Weight]:
    """A positive root gamma with s_gamma(mu) = nu and <mu, H_gamma> != 0, if any."""
    for g in positive_roots(spec):
        if coroot_pairing(mu, g) != 0 and reflect(g, mu) == nu:
            return g
    return None
