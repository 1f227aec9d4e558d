"""Weighted projective stacks P(a_0, ..., a_n).

The inertia stack has one component per root of unity that fixes some
coordinate; each component is itself a weighted projective stack on the
coordinates it fixes.  Diagonal Hodge numbers then put all of Hochschild
homology in degree zero with total dimension sum(a_i).
"""

from math import lcm


class WeightedStack:
    __slots__ = ("weights",)

    def __init__(self, weights):
        ws = tuple(weights)
        if not ws or any(not isinstance(a, int) or isinstance(a, bool) or a < 1
                         for a in ws):
            raise ValueError("weights must be a nonempty tuple of positive integers")
        self.weights = ws

    @property
    def dim(self):
        return len(self.weights) - 1

    def __repr__(self):
        return "WeightedStack%r" % (self.weights,)


class InertiaComponent:
    """One inertia component: the root zeta_N^k and the coordinates it fixes."""

    __slots__ = ("order", "k", "support", "component_weights")

    def __init__(self, order, k, support, component_weights):
        self.order = order
        self.k = k
        self.support = tuple(support)
        self.component_weights = tuple(component_weights)

    @property
    def dimension(self):
        return len(self.support) - 1

    def __repr__(self):
        return "InertiaComponent(zeta_%d^%d, support=%r)" % (
            self.order, self.k, self.support)


def inertia_components(stack):
    """Components of the inertia stack, ordered by k ascending.

    With N = lcm of the weights, the k-th component exists when the root
    zeta_N^k fixes at least one coordinate, i.e. N divides k * a_i for some i.

    >>> [c.dimension for c in inertia_components(WeightedStack((2, 3)))]
    [1, 0, 0, 0]
    """
    ws = stack.weights
    N = lcm(*ws)
    out = []
    for k in range(N):
        support = [i for i, a in enumerate(ws) if (k * a) % N == 0]
        if support:
            out.append(InertiaComponent(N, k, support,
                                        tuple(ws[i] for i in support)))
    return out


def hh_vector(stack):
    """Hochschild homology dimensions {i: dim HH_i}.

    Each component contributes its Hodge numbers along i = p - q, and for a
    weighted projective stack those are diagonal (h^{p,q} = 1 when p = q <=
    dimension, else 0), so everything lands in i = 0:

    >>> hh_vector(WeightedStack((1, 1)))
    {0: 2}
    >>> hh_vector(WeightedStack((2, 3)))
    {0: 5}
    """
    out = {}
    for comp in inertia_components(stack):
        for p in range(comp.dimension + 1):
            i = p - p
            out[i] = out.get(i, 0) + 1
    return out
