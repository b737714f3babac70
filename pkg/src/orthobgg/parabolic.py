"""
Parabolic combinatorics for a single crossed node: dominance, W^p, Hasse
graphs, the BGG criterion for true Verma modules and the standard-map test.

Elements of W^p are represented throughout by the weight w(delta), which is
strictly p-dominant exactly when w lies in W^p.
"""
from __future__ import annotations

import dataclasses
import itertools
from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .liealg import (
    AlgebraError,
    AlgebraSpec,
    Grading,
    Weight,
    delta,
    format_fraction,
    positive_roots,
    simple_roots,
    weight_leq,
)
from .weyl import (
    GuardExceeded,
    SignedPermutation,
    apply,
    dominant_representative,
    in_same_orbit,
    length_of_image,
    reflect,
)

WP_GUARD = 20000


@dataclasses.dataclass(frozen=True)
class ParabolicSpec:
    """A B/D algebra with the simple root alpha_k crossed."""

    algebra: AlgebraSpec
    k: int

    def __post_init__(self):
        Grading(self.algebra, self.k)  # validates k

    @classmethod
    def of(cls, series: str, rank: int, k: int) -> "ParabolicSpec":
        return cls(AlgebraSpec(series, rank), k)

    @property
    def grading(self) -> Grading:
        return Grading(self.algebra, self.k)

    @property
    def n(self) -> int:
        return self.algebra.rank - self.k

    @property
    def series(self) -> str:
        return self.algebra.series

    @property
    def rank(self) -> int:
        return self.algebra.rank

    def delta(self) -> Weight:
        return delta(self.algebra)

    def evaluate(self, w: Weight) -> Fraction:
        return self.grading.evaluate(w)

    def uncrossed_simple_roots(self) -> List[Weight]:
        return [a for i, a in enumerate(simple_roots(self.algebra), 1) if i != self.k]

    def wp_size(self) -> int:
        return comb(self.rank, self.k) * 2 ** self.k

    def blocks(self, w: Weight) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Doubled coordinates split at the bar."""
        self._check(w)
        return w.twice[: self.k], w.twice[self.k :]

    def _check(self, w: Weight):
        if w.rank != self.rank:
            raise AlgebraError(f"weight {w} has rank {w.rank}, expected {self.rank}")

    def render(self, w: Weight) -> str:
        """[a_1,..,a_k|b_1,..,b_n] with reduced fractions."""
        c = [format_fraction(x) for x in w.coords]
        return "[" + ",".join(c[: self.k]) + "|" + ",".join(c[self.k :]) + "]"

    def __str__(self):
        return f"{self.algebra} cross {self.k}"


# ---------------------------------------------------------------------------
# dominance and integrality


def _decreasing(xs: Sequence[int], strict: bool) -> bool:
    return all((a > b) if strict else (a >= b) for a, b in zip(xs, xs[1:]))


def _dominant(mu: Weight, ps: ParabolicSpec, strict: bool) -> bool:
    a, b = ps.blocks(mu)
    if not _decreasing(a, strict):
        return False
    if not b:
        return True
    if ps.series == "D":
        head = list(b[:-1]) + [abs(b[-1])]
        return _decreasing(head, strict)
    tail = list(b) + [0]
    return _decreasing(tail, strict)


def is_p_dominant(mu: Weight, ps: ParabolicSpec) -> bool:
    return _dominant(mu, ps, strict=False)


def is_strictly_p_dominant(mu: Weight, ps: ParabolicSpec) -> bool:
    return _dominant(mu, ps, strict=True)


def is_p_integral(mu: Weight, ps: ParabolicSpec) -> bool:
    """Integral pairing with every uncrossed simple coroot."""
    a, b = ps.blocks(mu)
    return len({t % 2 for t in a}) <= 1 and len({t % 2 for t in b}) <= 1


def is_p_regular_vertex(mu: Weight, ps: ParabolicSpec) -> bool:
    """mu is p-dominant and p-integral (so M_p(mu) is defined)."""
    d = ps.delta()
    return is_p_integral(mu, ps) and is_strictly_p_dominant(mu + d, ps)


def p_dominant_orbit(x: Weight, ps: ParabolicSpec, strict: bool = True) -> List[Weight]:
    """
    The (strictly) p-dominant elements of the W-orbit of x.

    Enumerated by choosing the signed entries of the first block; the second
    block is then forced up to the sign of its last entry.
    """
    ps._check(x)
    k = ps.k
    absv = sorted((abs(t) for t in x.twice), reverse=True)
    has_zero = 0 in absv
    parity = sum(1 for t in x.twice if t < 0) % 2
    out: Set[Weight] = set()
    for first in set(itertools.combinations(range(len(absv)), k)):
        rest = [absv[i] for i in range(len(absv)) if i not in first]
        chosen = [absv[i] for i in first]
        for signs in itertools.product((1, -1), repeat=k):
            a = [s * v for s, v in zip(signs, chosen)]
            if any(v == 0 and s < 0 for s, v in zip(signs, chosen)):
                continue
            a.sort(reverse=True)
            tails = [rest]
            if ps.series == "D" and rest and rest[-1] != 0:
                tails.append(rest[:-1] + [-rest[-1]])
            for b in tails:
                y = Weight.from_twice(a + b)
                if ps.series == "D" and not has_zero:
                    if sum(1 for t in y.twice if t < 0) % 2 != parity:
                        continue
                if _dominant(y, ps, strict):
                    out.add(y)
    return sorted(out, key=lambda w: (-ps.evaluate(w), tuple(-t for t in w.twice)))


def wp_images(ps: ParabolicSpec) -> List[Weight]:
    """W^p, each element w represented by w(delta)."""
    if ps.wp_size() > WP_GUARD:
        raise GuardExceeded(f"|W^p| = {ps.wp_size()} exceeds the guard {WP_GUARD}")
    return p_dominant_orbit(ps.delta(), ps, strict=True)


def wp_elements(ps: ParabolicSpec) -> List[SignedPermutation]:
    d = ps.delta()
    return [SignedPermutation.mapping(d, x, ps.series) for x in wp_images(ps)]


# ---------------------------------------------------------------------------
# graphs


@dataclasses.dataclass(frozen=True)
class Arrow:
    src: Weight
    dst: Weight
    order: Optional[Fraction]
    kind: str = "hasse"


@dataclasses.dataclass
class LabeledGraph:
    """
    Vertices (weights) with display labels and labelled arrows.

    For Hasse graphs over W^p the vertices are the weights w(delta); for
    orbit graphs they are the weights mu themselves (not mu + delta).
    """

    ps: ParabolicSpec
    vertices: List[Weight]
    arrows: List[Arrow]
    labels: Dict[Weight, str] = dataclasses.field(default_factory=dict)
    lam: Optional[Weight] = None
    title: str = ""

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for a in self.arrows:
            if a.src not in vs or a.dst not in vs:
                raise ValueError(f"arrow {a} references a missing vertex")

    def label(self, v: Weight) -> str:
        return self.labels.get(v) or self.ps.render(v)

    def edge_set(self) -> Set[Tuple[Weight, Weight]]:
        return {(a.src, a.dst) for a in self.arrows}

    def arrow(self, src: Weight, dst: Weight) -> Optional[Arrow]:
        for a in self.arrows:
            if a.src == src and a.dst == dst:
                return a
        return None

    def successors(self, v: Weight) -> List[Weight]:
        return [a.dst for a in self.arrows if a.src == v]

    def predecessors(self, v: Weight) -> List[Weight]:
        return [a.src for a in self.arrows if a.dst == v]

    def sources(self) -> List[Weight]:
        targets = {a.dst for a in self.arrows}
        return [v for v in self.vertices if v not in targets]

    def components(self) -> List[List[Weight]]:
        """Weakly connected components, in vertex order."""
        adj: Dict[Weight, Set[Weight]] = {v: set() for v in self.vertices}
        for a in self.arrows:
            adj[a.src].add(a.dst)
            adj[a.dst].add(a.src)
        seen: Set[Weight] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp, todo = [], [v]
            seen.add(v)
            while todo:
                u = todo.pop()
                comp.append(u)
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        todo.append(w)
            comps.append(sorted(comp, key=self.vertices.index))
        return comps

    def as_path(self) -> Optional[List[Weight]]:
        """The vertex sequence if the graph is a single directed path, else None."""
        if len(self.arrows) != len(self.vertices) - 1:
            return None
        src = self.sources()
        if len(src) != 1:
            return None
        path = [src[0]]
        while True:
            nxt = self.successors(path[-1])
            if not nxt:
                break
            if len(nxt) > 1:
                return None
            path.append(nxt[0])
        return path if len(path) == len(self.vertices) else None

    def orders_along(self, path: Sequence[Weight]) -> List[Optional[Fraction]]:
        return [self.arrow(a, b).order for a, b in zip(path, path[1:])]

    def subgraph(self, vertices: Iterable[Weight]) -> "LabeledGraph":
        keep = [v for v in self.vertices if v in set(vertices)]
        ks = set(keep)
        arrows = [a for a in self.arrows if a.src in ks and a.dst in ks]
        return LabeledGraph(self.ps, keep, arrows, {v: self.labels[v] for v in keep if v in self.labels}, self.lam, self.title)


def _vertex_key(ps: ParabolicSpec):
    return lambda w: (-ps.evaluate(w), tuple(-t for t in w.twice))


def regular_hasse_graph(ps: ParabolicSpec) -> LabeledGraph:
    """Hasse graph of W^p: w -> s_gamma w whenever the length goes up by one."""
    verts = wp_images(ps)
    vset = set(verts)
    lengths = {x: length_of_image(x, ps.algebra) for x in verts}
    roots = positive_roots(ps.algebra)
    arrows = []
    for x in verts:
        for g in roots:
            y = reflect(g, x)
            if y in vset and lengths[y] == lengths[x] + 1:
                arrows.append(Arrow(x, y, ps.evaluate(x) - ps.evaluate(y), "hasse"))
    labels = {x: f"w.delta={ps.render(x)} l={lengths[x]}" for x in verts}
    return LabeledGraph(ps, verts, arrows, labels, title="regular Hasse graph")


def weight_label(mu: Weight, ps: ParabolicSpec) -> str:
    return f"mu={ps.render(mu)} mu+delta={ps.render(mu + ps.delta())}"


def _require_vertex(lam: Weight, ps: ParabolicSpec):
    ps._check(lam)
    if not is_p_regular_vertex(lam, ps):
        raise AlgebraError(f"{ps.render(lam)} is not p-dominant and p-integral")


def orbit_vertices(ps: ParabolicSpec, lam: Weight) -> List[Weight]:
    """p-dominant, p-integral weights on the affine Weyl orbit of lam."""
    d = ps.delta()
    ims = p_dominant_orbit(lam + d, ps, strict=True)
    verts = [x - d for x in ims if is_p_integral(x - d, ps)]
    return sorted(verts, key=_vertex_key(ps))


def singular_hasse_graph(ps: ParabolicSpec, lam: Weight) -> LabeledGraph:
    """
    Project the arrows of W^p to the affine orbit of lam.

    mu -> nu whenever mu = w.lt, nu = w'.lt with w -> w' in W^p, where
    lt + delta is the dominant weight on the orbit of lam + delta.
    """
    _require_vertex(lam, ps)
    d = ps.delta()
    top = dominant_representative(lam + d, ps.algebra)
    verts = orbit_vertices(ps, lam)
    vset = set(verts)
    hasse = regular_hasse_graph(ps)
    image: Dict[Weight, Weight] = {}
    for x in hasse.vertices:
        w = SignedPermutation.mapping(d, x, ps.series)
        image[x] = apply(w, top) - d
    seen = set()
    arrows = []
    for a in hasse.arrows:
        mu, nu = image[a.src], image[a.dst]
        if mu == nu or mu not in vset or nu not in vset or (mu, nu) in seen:
            continue
        seen.add((mu, nu))
        arrows.append(Arrow(mu, nu, operator_order(mu, nu, ps), "hasse"))
    arrows.sort(key=lambda a: (verts.index(a.src), verts.index(a.dst)))
    labels = {v: weight_label(v, ps) for v in verts}
    return LabeledGraph(ps, verts, arrows, labels, lam=lam, title="singular Hasse graph")


# ---------------------------------------------------------------------------
# homomorphisms


def operator_order(lam: Weight, mu: Weight, ps: ParabolicSpec) -> Fraction:
    """(lam - mu)(E); equals the order of the dual operator when it is 1 or 2."""
    return ps.evaluate(lam) - ps.evaluate(mu)


def true_verma_hom_exists(mu: Weight, lam: Weight, spec: AlgebraSpec) -> bool:
    """
    Whether M(mu) embeds in M(lam).

    Searches for a chain lam = l_0, l_{i+1} = s_b . l_i, ..., mu with every
    <l_i + delta, H_b> a positive integer.  Reflections with zero pairing fix
    the weight and are skipped; the search only visits weights >= mu.
    """
    d = delta(spec)
    return _reachable(mu + d, lam + d, spec)


@lru_cache(maxsize=200000)
def _reachable(target: Weight, start: Weight, spec: AlgebraSpec) -> bool:
    if target == start:
        return True
    if not in_same_orbit(target, start, spec) or not weight_leq(spec, target, start):
        return False
    # plain integer tuples in the inner loop; Weight is too slow here
    roots = [(r.twice, sum(t * t for t in r.twice)) for r in positive_roots(spec)]
    goal = target.twice
    above = _leq_test(spec, goal)
    seen = {start.twice}
    todo = deque(seen)
    while todo:
        xs = todo.popleft()
        for g, den in roots:
            num = 2 * sum(a * b for a, b in zip(xs, g))
            if num <= 0 or num % den:
                continue
            c = num // den
            y = tuple(a - c * b for a, b in zip(xs, g))
            if y == goal:
                return True
            if y in seen or not above(y):
                continue
            seen.add(y)
            todo.append(y)
    return False


def _leq_test(spec: AlgebraSpec, goal: Tuple[int, ...]):
    """Predicate y -> (goal <= y) on doubled coordinates."""
    m = spec.rank

    def above(y):
        s = 0
        partial = []
        for a, b in zip(y, goal):
            s += a - b
            partial.append(s)
        if spec.series == "D":
            head, last = partial[m - 2], y[m - 1] - goal[m - 1]
            if (head + last) % 2:
                return False
            partial = partial[: m - 2] + [(head + last) // 2, (head - last) // 2]
        return all(c >= 0 and c % 2 == 0 for c in partial)

    return above


def simple_affine_reflection(alpha: Weight, lam: Weight, spec: AlgebraSpec) -> Weight:
    d = delta(spec)
    return reflect(alpha, lam + d) - d


def standard_map_is_zero(mu: Weight, lam: Weight, ps: ParabolicSpec) -> bool:
    """
    Whether the standard map M_p(mu) -> M_p(lam) vanishes.

    It does iff M(mu) lies in M(s_a . lam) for some uncrossed simple root a.
    """
    _require_vertex(mu, ps)
    _require_vertex(lam, ps)
    if not true_verma_hom_exists(mu, lam, ps.algebra):
        raise AlgebraError("no true Verma module homomorphism, so no standard map is defined")
    for a in ps.uncrossed_simple_roots():
        if true_verma_hom_exists(mu, simple_affine_reflection(a, lam, ps.algebra), ps.algebra):
            return True
    return False


def bgg_graph(ps: ParabolicSpec, lam: Weight, confirm_with_extremal: bool = False) -> LabeledGraph:
    """
    BGG graph on the affine orbit of lam.

    Arrow kinds: "standard" (nonzero standard map), "nonstandard" (zero
    standard map but a singular vector found by the solver) and
    "conjectural" (zero standard map of order 2, not checked).  Arrows that
    factor through a chain of two or more known homomorphisms are dropped.
    """
    _require_vertex(lam, ps)
    verts = orbit_vertices(ps, lam)
    if len(verts) > 512:
        raise GuardExceeded(f"orbit has {len(verts)} vertices, BGG graph guard is 512")
    homs: Dict[Tuple[Weight, Weight], str] = {}
    for mu in verts:
        for nu in verts:
            order = operator_order(mu, nu, ps)
            if order <= 0 or not true_verma_hom_exists(nu, mu, ps.algebra):
                continue
            if not standard_map_is_zero(nu, mu, ps):
                homs[(mu, nu)] = "standard"
            elif order == 2:
                if confirm_with_extremal:
                    from .verma import extremal_vectors

                    if extremal_vectors(mu, nu, ps).basis:
                        homs[(mu, nu)] = "nonstandard"
                else:
                    homs[(mu, nu)] = "conjectural"
    succ: Dict[Weight, List[Weight]] = {v: [] for v in verts}
    for (mu, nu) in homs:
        succ[mu].append(nu)

    def long_path(mu: Weight, nu: Weight) -> bool:
        # is there a chain mu -> xi -> ... -> nu with at least one intermediate step
        todo = [x for x in succ[mu] if x != nu]
        seen = set(todo)
        while todo:
            x = todo.pop()
            if nu in succ[x]:
                return True
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return False

    arrows = [
        Arrow(mu, nu, operator_order(mu, nu, ps), kind)
        for (mu, nu), kind in homs.items()
        if not long_path(mu, nu)
    ]
    arrows.sort(key=lambda a: (verts.index(a.src), verts.index(a.dst)))
    labels = {v: weight_label(v, ps) for v in verts}
    return LabeledGraph(ps, verts, arrows, labels, lam=lam, title="BGG graph")
