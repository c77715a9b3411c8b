"""Multicharges of n-cores and the charge-side weight formulas.

An n-core's boundary word splits into n runners, each a pure step word; the
vector of step positions is the multicharge.  It sums to zero, determines
the core, and carries the weight as an explicit quadratic form.  All weight
formulas are evaluated as exact rationals and asserted integral.
"""

from __future__ import annotations

from fractions import Fraction

from .littlewood import decompose
from .partitions import (
    BoundaryWord,
    Partition,
    is_n_core,
    psi,
    psi_inv,
    residue_counts,
)


class Multicharge:
    """Integer vector (m_0, ..., m_{n-1}) with zero sum."""

    __slots__ = ("m",)

    def __init__(self, m):
        m = tuple(int(x) for x in m)
        if sum(m) != 0:
            raise ValueError(f"charge {m} does not sum to zero")
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("Multicharge is immutable")

    @property
    def n(self):
        return len(self.m)

    def __eq__(self, other):
        return isinstance(other, Multicharge) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __iter__(self):
        return iter(self.m)

    def __repr__(self):
        return f"Multicharge({list(self.m)})"


def phi(core, n):
    """Multicharge of an n-core: per runner, the first index carrying a 1."""
    if not is_n_core(core, n):
        raise ValueError(f"{core!r} is not a {n}-core")
    word = psi(core)
    span = (max(abs(word.lo), word.hi) // n) + 2
    m = []
    for k in range(n):
        step = None
        for i in range(-span, span + 1):
            if word.letter(n * i + k) == 1:
                step = i
                break
        m.append(step)
    return Multicharge(m)


def phi_inv(charge):
    """The n-core whose runner k steps from 0 to 1 at position m_k."""
    n = charge.n
    span = max(abs(x) for x in charge.m) + 2
    letters = []
    for i in range(-span, span + 1):
        for k in range(n):
            letters.append(0 if i < charge.m[k] else 1)
    return psi_inv(BoundaryWord(-span * n, letters))


def weight_from_charge(charge):
    """|core| = (n/2) sum m_i^2 + sum i m_i, asserted integral."""
    n = charge.n
    w = Fraction(n, 2) * sum(x * x for x in charge.m) + sum(i * x for i, x in enumerate(charge.m))
    assert w.denominator == 1 and w >= 0, f"non-integral weight {w} from {charge!r}"
    return int(w)


def beta_from_residues(core, n):
    """Consecutive residue-count differences (beta_1, ..., beta_n)."""
    if not is_n_core(core, n):
        raise ValueError(f"{core!r} is not a {n}-core")
    a = residue_counts(core, n)
    return tuple(a[(i - 1) % n] - a[i % n] for i in range(1, n + 1))


def a_from_beta(beta):
    """Residue counts recovered from beta: a_0 = ||beta||^2 / 2, then differences."""
    n = len(beta)
    a0 = Fraction(sum(b * b for b in beta), 2)
    assert a0.denominator == 1, f"odd ||beta||^2 for {beta}"
    a = [int(a0)]
    for i in range(1, n):
        a.append(a[0] - sum(beta[:i]))
    return tuple(a)


def charge_from_beta(beta):
    """Multicharge from the beta vector: m_i = beta_{i+1}."""
    return Multicharge(beta)


def sc_charge_check(core, n):
    """Self-conjugacy of an n-core read off its charge, plus weight formulas.

    The core is self-conjugate iff m_{n-1-i} = -m_i; the specialized weight
    formula in the free half of the charge is evaluated and compared with the
    direct box count.
    """
    charge = phi(core, n)
    m = charge.m
    antisym = all(m[n - 1 - i] == -m[i] for i in range(n))
    report = {"charge": charge, "is_sc": antisym}
    if antisym:
        h = n // 2
        w = n * sum(m[i] ** 2 for i in range(h)) + sum((2 * i - n + 1) * m[i] for i in range(h))
        report["weight_formula"] = w
        report["weight_direct"] = core.weight()
        report["weight_ok"] = w == core.weight()
    return report


def dd_charge_check(core, n):
    """Doubled-distinct membership of an n-core read off its charge.

    Membership means m_0 = 0 and m_{n-i} = -m_i; the specialized weight
    formula is evaluated against the direct box count.
    """
    charge = phi(core, n)
    m = charge.m
    is_dd = m[0] == 0 and all(m[n - i] == -m[i] for i in range(1, (n - 1) // 2 + 1))
    if n % 2 == 0:
        is_dd = is_dd and m[n // 2] == 0
    report = {"charge": charge, "is_dd": is_dd}
    if is_dd:
        h = (n - 1) // 2
        w = n * sum(m[i] ** 2 for i in range(1, h + 1)) + sum((2 * i - n) * m[i] for i in range(1, h + 1))
        report["weight_formula"] = w
        report["weight_direct"] = core.weight()
        report["weight_ok"] = w == core.weight()
    return report


def ddbeta_parts(bar, g):
    """Recover a distinct partition from the charge of its doubled g-core.

    Requires the doubled partition to be a g-core; the parts are then read
    off the positive charge entries as {g*k + i : 0 <= k < m_i}.
    """
    from .partitions import double_distinct

    dd = double_distinct(bar)
    if not is_n_core(dd, g):
        raise ValueError(f"doubled partition {dd!r} is not a {g}-core")
    m = phi(dd, g).m
    parts = []
    for i in range(1, g):
        if m[i] > 0:
            parts.extend(g * k + i for k in range(m[i]))
    return tuple(sorted(parts, reverse=True))


def ddprime_quotient_shape(bar, g):
    """Quotient pattern of the conjugated doubled partition of a distinct bar.

    Classifies bar against the two families cut out by hooks of the
    transposed shifted diagram: plain membership allows a square middle
    quotient component, restricted membership requires all components before
    the last to vanish.  Returns the core charge data, the rectangle
    parameters, and the weight formula cross-check.
    """
    from .partitions import ddtr_from_distinct, distinct_hooks_tr

    if not bar.is_distinct():
        raise ValueError(f"{bar!r} is not a distinct partition")
    lam = ddtr_from_distinct(bar)
    data = decompose(lam, g)
    nu = data.quotient
    m = max([1] + [(g + p) // g for p in bar.parts if p % g == 0])
    rect = Partition([m - 1] * m)
    half_idx = g // 2 - 1 if g % 2 == 0 else None
    mprime = None
    if half_idx is not None:
        mprime = max([0] + [(p + g // 2) // g for p in bar.parts if p % g == g // 2])
    member_r = nu[g - 1] == rect and all(nu[j] == Partition() for j in range(g - 1))
    member_plain = nu[g - 1] == rect and all(
        nu[j] == Partition() for j in range(g - 1) if j != half_idx
    )
    if half_idx is not None:
        member_plain = member_plain and nu[half_idx] == Partition([mprime] * mprime)
    hooks_tr = distinct_hooks_tr(bar)
    hook_member = g not in hooks_tr
    hook_member_r = hook_member and (g % 2 == 1 or g // 2 not in bar.parts)
    report = {
        "core": data.core,
        "quotient": nu,
        "m": m,
        "mprime": mprime,
        "in_family": member_plain,
        "in_family_restricted": member_r,
        "family_matches_hooks": hook_member == member_plain,
        "restricted_matches_hooks": hook_member_r == member_r,
    }
    if member_plain:
        charge = phi(data.core, g)
        report["charge_pattern"] = charge.m
        report["weight_formula"] = _ddprime_weight(charge, g, m, None if member_r else mprime)
        report["weight_direct"] = bar.weight()
        report["weight_ok"] = report["weight_formula"] == bar.weight()
    return report


def _ddprime_weight(core_charge, g, m, mprime):
    """Weight of bar from its core charge and the rectangle parameters.

    Half of (core weight + g * rectangle sizes), the rectangle being
    (m-1) x m on the last runner plus an optional m' square in the middle.
    """
    squares = m * (m - 1) + (mprime * mprime if mprime is not None else 0)
    w = Fraction(weight_from_charge(core_charge) + g * squares, 2)
    assert w.denominator == 1, f"non-integral half weight {w}"
    return int(w)


def n_cores_of_weight(n, max_weight):
    """All n-cores of weight <= max_weight, grouped by weight.

    BFS over the residue-class node toggles, which adds or removes whole
    residue classes of boxes; complete because every nonempty core has a
    class of removable nodes.
    """
    from .grassmannian import all_residue_toggles

    by_weight = [[] for _ in range(max_weight + 1)]
    seen = {Partition()}
    by_weight[0].append(Partition())
    frontier = [Partition()]
    while frontier:
        new_frontier = []
        for core in frontier:
            for nxt in all_residue_toggles(core, n):
                if nxt not in seen and nxt.weight() <= max_weight:
                    seen.add(nxt)
                    by_weight[nxt.weight()].append(nxt)
                    new_frontier.append(nxt)
        frontier = new_frontier
    return [sorted(group, key=lambda p: p.parts) for group in by_weight]
