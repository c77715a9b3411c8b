"""Per-type bijections between core models and distinct-partition families.

Each affine type pairs its Grassmannian core model with a family of
distinct partitions on which the atomic length becomes the plain number of
boxes.  The dictionaries all pass through the multicharge: pad it with
zeros, double it, or run it through the parity-splitting map g.
"""

from __future__ import annotations

from fractions import Fraction

from .affine_data import AffineType, registry
from .charges import Multicharge, phi, phi_inv
from .grassmannian import CoreElement, atomic_length, core_charge_halves, core_from_halves, in_model
from .littlewood import LittlewoodData, compose, decompose
from .partitions import (
    Partition,
    distinct_from_dd,
    distinct_from_ddtr,
    distinct_from_sc,
    double_distinct,
    ddtr_from_distinct,
    is_n_core,
    is_sc,
    psi,
    sc_from_distinct,
    shifted_hooks,
    distinct_hooks_tr,
)

# how each family is carved out of distinct partitions:
#   cores    - the model element itself is the partition
#   sc-core  - the model element is self-conjugate, the half is the partition
#   dd       - doubled partner is a core of the stated modulus
#   sc       - self-conjugate partner is a core of the stated modulus
#   ddtr-r   - conjugated doubled partner decomposes to a lone rectangle
#   ddtr     - same, allowing a square middle component
FAMILY = {
    "A1": ("cores", lambda n: n),
    "C1": ("sc-core", lambda n: 2 * n),
    "D2": ("dd", lambda n: 2 * n + 2),
    "A2": ("dd", lambda n: 2 * n + 1),
    "A2p": ("sc", lambda n: 2 * n + 1),
    "B1": ("ddtr-r", lambda n: 2 * n),
    "A2o": ("ddtr-r", lambda n: 2 * n - 1),
    "D1": ("ddtr", lambda n: 2 * n - 2),
    "G21": ("ddtr-r", lambda n: 6),
    "D43": ("ddtr", lambda n: 4),
}


def family_of(typ):
    kind, gfun = FAMILY[typ.family]
    return kind, gfun(typ.n)


class TypedDistinctPartition:
    """A family member: the distinct partition plus its doubled companion."""

    __slots__ = ("type", "bar", "companion")

    def __init__(self, typ, bar, companion):
        object.__setattr__(self, "type", typ)
        object.__setattr__(self, "bar", bar)
        object.__setattr__(self, "companion", companion)

    def __setattr__(self, name, value):
        raise AttributeError("TypedDistinctPartition is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, TypedDistinctPartition)
            and (self.type, self.bar) == (other.type, other.bar)
        )

    def __hash__(self):
        return hash((self.type, self.bar))

    def __repr__(self):
        return f"TypedDistinctPartition({self.type.label}, {self.bar!r})"


def g_map(m, ms):
    """Parity-splitting embedding into antisymmetric charges of even size.

    Sends (m, m_0, ..., m_{k-1}) with m >= 1 to the charge whose half reads
    (m, m_0, ..., m_{k-1}) when m and sum(ms) share a parity, and to the
    half (-m+1, m_0, ..., m_{k-1}, ...) with the end sign flipped otherwise.
    """
    if m < 1:
        raise ValueError("leading parameter must be positive")
    ms = tuple(ms)
    if (m - sum(ms)) % 2 == 0:
        half = (m,) + ms
    else:
        half = (-m + 1,) + ms
    return half + tuple(-x for x in reversed(half))


def g_map_inverse(charge):
    """Recover (m, ms) from an antisymmetric charge with even entry sum."""
    x = tuple(charge)
    k = len(x) // 2
    if any(x[len(x) - 1 - i] != -x[i] for i in range(k)):
        raise ValueError(f"charge {x} is not antisymmetric")
    if sum(abs(v) for v in x[:k]) % 2:
        raise ValueError(f"charge {x} has odd half sum")
    ms = x[1:k]
    m = x[0] if x[0] >= 1 else 1 - x[0]
    return m, ms


def _rect(m):
    return Partition([m - 1] * m)


def _square(m):
    return Partition([m] * m)


def core_to_distinct(typ, element):
    """The family member attached to a model element."""
    core = element.core if isinstance(element, CoreElement) else element
    if not in_model(typ, core):
        raise ValueError(f"{core!r} not in the {typ.label} core model")
    kind, g = family_of(typ)
    halves = core_charge_halves(typ, core)
    n = len(halves)
    if kind == "cores":
        return TypedDistinctPartition(typ, core, core)
    if kind == "sc-core":
        return TypedDistinctPartition(typ, distinct_from_sc(core), core)
    if kind == "dd":
        if g % 2 == 0:
            padded = (0,) + tuple(halves) + (0,) + tuple(-h for h in reversed(halves))
        else:
            padded = (0,) + tuple(halves) + tuple(-h for h in reversed(halves))
        cprime = phi_inv(Multicharge(padded))
        return TypedDistinctPartition(typ, distinct_from_dd(cprime), cprime)
    if kind == "sc":
        padded = tuple(halves) + (0,) + tuple(-h for h in reversed(halves))
        cprime = phi_inv(Multicharge(padded))
        return TypedDistinctPartition(typ, distinct_from_sc(cprime), cprime)
    # ddtr kinds run through the g map and the Littlewood decomposition
    data = registry(typ)
    m, ms = g_map_inverse(phi(core, data.ambient).m)
    if kind == "ddtr-r":
        omega_charge = _ddtr_core_charge(ms, g)
        quotient = [Partition()] * (g - 1) + [_rect(m)]
    else:
        # the square component forgets the sign of the last free entry;
        # distinct_to_core resolves it again (uniquely where the model can)
        mprime = abs(ms[-1])
        omega_charge = _ddtr_core_charge(ms[:-1], g)
        quotient = [Partition()] * (g - 1) + [_rect(m)]
        quotient[g // 2 - 1] = _square(mprime)
    omega = phi_inv(Multicharge(omega_charge))
    lam = compose(LittlewoodData(omega, quotient, g))
    return TypedDistinctPartition(typ, distinct_from_ddtr(lam), lam)


def _ddtr_core_charge(ms, g):
    """Charge of a conjugated doubled-distinct g-core from free entries."""
    ms = tuple(ms)
    if g % 2 == 0:
        assert len(ms) == g // 2 - 1
        return ms + (0,) + tuple(-x for x in reversed(ms)) + (0,)
    assert len(ms) == (g - 1) // 2
    return ms + tuple(-x for x in reversed(ms)) + (0,)


def _ddtr_core_charge_free(charge, g):
    """Free entries of a conjugated doubled-distinct core charge."""
    m = tuple(charge)
    k = (g - 1) // 2 if g % 2 else g // 2 - 1
    expect = _ddtr_core_charge(m[:k], g)
    if m != expect:
        raise ValueError(f"charge {m} is not a conjugated doubled-distinct pattern")
    return m[:k]


def distinct_to_core(typ, bar):
    """Inverse of core_to_distinct."""
    kind, g = family_of(typ)
    data = registry(typ)
    if kind == "cores":
        if not in_model(typ, bar):
            raise ValueError(f"{bar!r} is not a {g}-core")
        return CoreElement(typ, bar)
    if kind == "sc-core":
        if not bar.is_distinct():
            raise ValueError(f"{bar!r} is not distinct")
        return CoreElement(typ, sc_from_distinct(bar))
    if kind == "dd":
        cprime = double_distinct(bar)
        if not is_n_core(cprime, g):
            raise ValueError(f"doubled {bar!r} is not a {g}-core")
        m = phi(cprime, g).m
        n = data.rank
        assert m[0] == 0 and (g % 2 or m[n + 1] == 0)
        halves = m[1:n + 1]
        return core_from_halves(typ, halves)
    if kind == "sc":
        cprime = sc_from_distinct(bar)
        if not is_n_core(cprime, g):
            raise ValueError(f"self-conjugate closure of {bar!r} is not a {g}-core")
        m = phi(cprime, g).m
        n = data.rank
        assert m[n] == 0
        return core_from_halves(typ, m[:n])
    # ddtr kinds
    lam = ddtr_from_distinct(bar)
    dec = decompose(lam, g)
    quotient = dec.quotient
    rect = quotient[g - 1]
    m = (rect.parts[0] if rect.parts else 0) + 1
    if rect != _rect(m):
        raise ValueError(f"{bar!r} does not reduce to a rectangle for {typ.label}")
    ms = _ddtr_core_charge_free(phi(dec.core, g).m, g)
    if kind == "ddtr":
        half = g // 2 - 1
        mprime = quotient[half].length()
        if quotient[half] != _square(mprime):
            raise ValueError(f"{bar!r} middle component is not a square")
        candidates = [ms + (mprime,)]
        if mprime:
            candidates.append(ms + (-mprime,))
        rest = [q for j, q in enumerate(quotient[:-1]) if j != half]
    else:
        candidates = [ms]
        rest = list(quotient[:-1])
    if any(q != Partition() for q in rest):
        raise ValueError(f"{bar!r} has extra quotient components for {typ.label}")
    for cand in candidates:
        core = phi_inv(Multicharge(g_map(m, cand)))
        if in_model(typ, core):
            return CoreElement(typ, core)
    raise ValueError(f"{bar!r} lands outside the {typ.label} model")


# ---------------------------------------------------------------------------
# signatures from hook counts


def _below(values, bound):
    return sum(1 for h in values if h < bound)


def signature_hooks(typ, element):
    """Sign of a model element from small hooks of its family partition.

    Equals the parity of the Coxeter length of the minimal coset
    representative.  Transposed types share their Coxeter graph, hence their
    sign; the statistic is read off whichever family of the pair carries it:
    the doubled families count small shifted hooks (with the diagonal ones
    and the number of parts for the even-modulus ones), the conjugated
    families count small transposed hooks.
    """
    core = element.core if isinstance(element, CoreElement) else element
    fam = typ.family
    if fam == "A1":
        _, g = family_of(typ)
        return -1 if _below(core.hooks(), g) % 2 else 1
    if fam in ("C1", "D2"):
        carrier = AffineType("D2", typ.n)
    elif fam in ("A2", "A2p"):
        carrier = AffineType("A2", typ.n)
    else:
        carrier = typ
    _, g = family_of(carrier)
    bar = core_to_distinct(carrier, CoreElement(carrier, core)).bar
    ell = bar.length()
    diag = tuple(2 * p for p in bar.parts)
    if carrier.family == "D2":
        exp = _below(shifted_hooks(bar) + diag, g) + ell
    elif carrier.family == "A2":
        exp = _below(shifted_hooks(bar), g)
    elif carrier.family == "B1":
        exp = _below(distinct_hooks_tr(bar) + diag, g)
    elif carrier.family in ("A2o", "D1", "G21", "D43"):
        exp = _below(distinct_hooks_tr(bar), g) + ell
    else:
        raise AssertionError(carrier.family)
    return -1 if exp % 2 else 1


# ---------------------------------------------------------------------------
# V-codings and the weight correspondence


class VCoding:
    """Sorted top slice of the runner tops of a partition's boundary word."""

    __slots__ = ("v", "g", "n")

    def __init__(self, v, g, n):
        object.__setattr__(self, "v", tuple(v))
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("VCoding is immutable")

    def __repr__(self):
        return f"VCoding(v={list(self.v)}, g={self.g}, n={self.n})"


def v_coding(lam, g, n):
    """Top-n sorted values (k+1)g + i over the zero letters of each runner."""
    if n > g:
        raise ValueError("slice length cannot exceed the runner count")
    word = psi(lam)
    span = (max(abs(word.lo), word.hi) // g) + 2
    tops = []
    for i in range(g):
        best = None
        for k in range(span, -span - 1, -1):
            if word.letter(k * g + i) == 0:
                best = (k + 1) * g + i
                break
        assert best is not None
        tops.append(best)
    tops.sort(reverse=True)
    v = tops[:n]
    assert all(a > b for a, b in zip(v, v[1:])), "coding not strictly decreasing"
    return VCoding(v, g, n)


DUAL_FAMILY = {"A1": "A1", "C1": "D2", "D2": "C1", "B1": "A2o", "A2o": "B1",
               "A2": "A2p", "A2p": "A2", "D1": "D1", "G21": "D43", "D43": "G21"}


def dual_type(typ):
    fam = DUAL_FAMILY[typ.family]
    return AffineType(fam, typ.n)


def coding_partner(typ, element):
    """The partition whose V-coding carries the expansion weight of the type.

    The grading of the denominator expansion is the dual atomic length, so
    the partition families attach to the transposed type.
    """
    dual = dual_type(typ)
    td = core_to_distinct(dual, CoreElement(dual, element.core if isinstance(element, CoreElement) else element))
    kind, g = family_of(dual)
    if kind == "cores":
        mu = td.bar
    elif kind in ("sc-core", "sc"):
        mu = td.companion
    elif kind == "dd":
        mu = td.companion
    else:
        mu = td.companion  # the conjugated doubled partition
    return mu, g


def correspondence_weight(typ, element):
    """Expansion weight of an element, from the V-coding of its partner.

    Entries are v_i + i - g over the top slice of the coding; for the
    untwisted A family the slice runs over all runners (the weight is only
    defined up to a constant vector there).
    """
    data = registry(typ)
    mu, g = coding_partner(typ, element)
    assert g == data.eta_tilde, (typ.label, g, data.eta_tilde)
    n = g if typ.family == "A1" else (3 if typ.family in ("G21", "D43") else data.roots.rank)
    coding = v_coding(mu, g, n)
    return tuple(v + i - g for i, v in enumerate(coding.v, start=1))


# comparison frames for the coding route: the classical self-dual types use
# the identity, untwisted A reverses and negates (the coding sees the dual),
# and the rank-2 exceptionals project the three runner values along fixed
# short directions (pinned against the translation-lattice route)
_G_FRAME = {
    "G21": ((0, -1, 1), (-1, 0, 1), (1, -1, 0)),
    "D43": ((0, 0, 0), (0, -1, 1), (-1, 0, 1)),
}


def weight_from_coding(typ, element):
    """The coding-route weight mapped into orthogonal coordinates."""
    r = correspondence_weight(typ, element)
    if typ.family == "A1":
        return tuple(-x for x in reversed(r))
    if typ.family in ("G21", "D43"):
        cols = _G_FRAME[typ.family]
        return tuple(sum(cols[j][k] * r[j] for j in range(3)) for k in range(3))
    return r


def correspondence_check(typ, element):
    """Coding route against the direct route; for untwisted A the weights
    agree up to the constant vector."""
    from .grassmannian import element_of_core

    core = element.core if isinstance(element, CoreElement) else element
    direct = element_of_core(typ, core).dominant_weight()
    coded = weight_from_coding(typ, element)
    if typ.family == "A1":
        n = len(direct)
        shift = (sum(Fraction(x) for x in direct) - sum(Fraction(x) for x in coded)) / n
        coded = tuple(Fraction(x) + shift for x in coded)
    return tuple(Fraction(x) for x in coded) == tuple(Fraction(x) for x in direct)
