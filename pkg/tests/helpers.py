"""Shared fixtures: weights of the standard examples."""
from orthobgg.liealg import Weight, delta
from orthobgg.parabolic import ParabolicSpec

# filled by the acceptance tests, printed in the terminal summary
ACCEPTANCE_LINES = {}


def shifted(ps: ParabolicSpec, twice):
    """The weight mu with mu + delta = twice / 2."""
    return Weight.from_twice(twice) - delta(ps.algebra)


def s2_chain(n: int):
    """lambda, mu, nu, xi of the second-order orbit in D_{2+n}, cross 2."""
    ps = ParabolicSpec.of("D", 2 + n, 2)
    tail = list(range(2 * n - 1, 2, -2))
    return ps, [
        shifted(ps, [3, 1] + tail + [1]),
        shifted(ps, [3, -1] + tail + [-1]),
        shifted(ps, [1, -3] + tail + [-1]),
        shifted(ps, [-1, -3] + tail + [1]),
    ]


def k_chain(k: int, n: int):
    """The analogous four weights for k variables in D_{k+n}, cross k."""
    ps = ParabolicSpec.of("D", k + n, k)
    head = list(range(2 * k - 1, 4, -2))
    tail = list(range(2 * n - 1, 2, -2))
    return ps, [
        shifted(ps, head + [3, 1] + tail + [1]),
        shifted(ps, head + [3, -1] + tail + [-1]),
        shifted(ps, head + [1, -3] + tail + [-1]),
        shifted(ps, head + [-1, -3] + tail + [1]),
    ]


def first_order_pair(k: int, n: int, primed: bool = False):
    """(lambda, mu) for the first-order operator in k variables, D_{k+n}."""
    ps = ParabolicSpec.of("D", k + n, k)
    top = list(range(2 * k - 1, 2, -2))
    tail = list(range(2 * n - 1, 2, -2))
    sign = -1 if primed else 1
    lam = shifted(ps, top + [1] + tail + [sign])
    mu = shifted(ps, top + [-1] + tail + [-sign])
    return ps, lam, mu


def odd_chain(n: int):
    """The four weights of the k = 2 orbit in B_{2+n}."""
    ps = ParabolicSpec.of("B", 2 + n, 2)
    tail = [2 * i for i in range(n, 0, -1)]
    return ps, [
        shifted(ps, [3, 1] + tail),
        shifted(ps, [3, -1] + tail),
        shifted(ps, [1, -3] + tail),
        shifted(ps, [-1, -3] + tail),
    ]
