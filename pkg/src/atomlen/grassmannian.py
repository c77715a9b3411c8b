"""Affine Weyl orbits on cores and the translation-lattice picture.

Two independent engines cover the same ground: reflections act on core
partitions through residue-class node toggles composed along the folding
words, while on the lattice side every minimal coset representative is the
pair (antidominant weight, minimal finite Weyl word) attached to a
translation vector.  The two are glued by reading the translation vector
off the residue counts of the core.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .affine_data import AffineType, registry
from .partitions import Partition, is_n_core, is_sc, residue_counts
from .rootsystems import _solve_exact


# ---------------------------------------------------------------------------
# residue-class node action on partitions


def addable_cells(lam, residue, n):
    """Cells that can be added to lam whose content is residue mod n."""
    parts = lam.parts
    out = []
    for i in range(1, len(parts) + 2):
        j = (parts[i - 1] if i <= len(parts) else 0) + 1
        if i == 1 or lam.part(i - 1) >= j:
            if (j - i) % n == residue:
                out.append((i, j))
    return out


def removable_cells(lam, residue, n):
    parts = lam.parts
    out = []
    for i in range(1, len(parts) + 1):
        j = parts[i - 1]
        if lam.part(i + 1) < j and (j - i) % n == residue:
            out.append((i, j))
    return out


def toggle_residue(lam, residue, n):
    """Add all addable cells of the residue, or remove all removable ones.

    On an n-core exactly one of the two kinds can be present; with neither
    present the partition is returned unchanged.
    """
    add = addable_cells(lam, residue, n)
    rem = removable_cells(lam, residue, n)
    if add and rem:
        raise ValueError(f"mixed addable/removable {residue}-cells on {lam!r}")
    if add:
        rows = list(lam.parts) + [0] * (len(add))
        for i, j in add:
            rows[i - 1] = j
        return Partition([r for r in rows if r])
    if rem:
        rows = list(lam.parts)
        for i, j in rem:
            rows[i - 1] = j - 1
        return Partition(rows)
    return lam


def all_residue_toggles(core, n):
    return [toggle_residue(core, r, n) for r in range(n)]


def reflect(typ, i, element):
    """Apply the i-th simple reflection of the type to a model element."""
    data = registry(typ)
    core = element.core if isinstance(element, CoreElement) else element
    for s in reversed(data.fold_words[i]):
        core = toggle_residue(core, s, data.ambient)
    return CoreElement(typ, core)


# ---------------------------------------------------------------------------
# core models


class CoreElement:
    """A core partition sitting in the model attached to an affine type."""

    __slots__ = ("type", "core")

    def __init__(self, typ, core, check=True):
        if check and not in_model(typ, core):
            raise ValueError(f"{core!r} is not in the core model of {typ.label}")
        object.__setattr__(self, "type", typ)
        object.__setattr__(self, "core", core)

    def __setattr__(self, name, value):
        raise AttributeError("CoreElement is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, CoreElement)
            and self.type == other.type
            and self.core == other.core
        )

    def __hash__(self):
        return hash((self.type, self.core))

    def __repr__(self):
        return f"CoreElement({self.type.label}, {self.core!r})"


def in_model(typ, core):
    data = registry(typ)
    N = data.ambient
    if not is_n_core(core, N):
        return False
    model = data.core_model
    if model == "cores":
        return True
    if not is_sc(core):
        return False
    if model == "sc-cores":
        return True
    if model == "sc-even-cores":
        return core.durfee() % 2 == 0
    # g-cores: charge pattern (x, y, x-y, y-x, -y, -x)
    from .charges import phi

    m = phi(core, 6).m
    x, y = m[0], m[1]
    return m == (x, y, x - y, y - x, -y, -x)


def core_charge_halves(typ, core):
    """Free charge coordinates of a model element (first half of the charge)."""
    from .charges import phi

    data = registry(typ)
    m = phi(core, data.ambient).m
    if data.core_model == "cores":
        return m
    if data.core_model == "g-cores":
        return m[:2]
    return m[: data.rank]


def core_from_halves(typ, halves):
    """Model element from free charge coordinates; inverse of core_charge_halves."""
    from .charges import Multicharge, phi_inv

    data = registry(typ)
    if data.core_model == "cores":
        return CoreElement(typ, phi_inv(Multicharge(halves)))
    if data.core_model == "g-cores":
        x, y = halves
        m = (x, y, x - y, y - x, -y, -x)
    else:
        m = tuple(halves) + tuple(-h for h in reversed(halves))
    return CoreElement(typ, phi_inv(Multicharge(m)))


# ---------------------------------------------------------------------------
# atomic lengths


def ambient_counts(typ, core):
    data = registry(typ)
    return residue_counts(core, data.ambient)


def folded_counts(typ, core):
    """Coefficients of the folded simple roots in the orbit difference.

    Solves k * sum a_j alpha_j = sum y_i (folded root i) over the ambient
    root basis, where k is the multiplier carried by the base weight.
    """
    data = registry(typ)
    a = ambient_counts(typ, core)
    target = [Fraction(data.lambda0_mult * x) for x in a]
    basis = [[Fraction(c) for c in root] for root in data.fold_roots]
    sol = _solve_exact(basis, target)
    if sol is None:
        raise ValueError(f"{core!r} residue counts not in the folded span for {typ.label}")
    return tuple(sol)


def atomic_length(typ, core):
    """Atomic length of a model element: the folded simple-root count.

    Computed by the per-family residue-count formula; asserted integral.
    The pi-weight route and the folded-coefficient route are separate
    functions so the three can be cross-checked.
    """
    if isinstance(core, CoreElement):
        core = core.core
    data = registry(typ)
    fam = typ.family
    a = ambient_counts(typ, core)
    total = sum(a)
    n = data.rank
    if fam in ("A1", "C1"):
        val = Fraction(total)
    elif fam == "B1":
        val = Fraction(total - a[0] + a[n], 2)
    elif fam == "D1":
        val = Fraction(total - a[0] - a[n], 2)
    elif fam == "D2":
        val = Fraction(total + a[0] + a[n], 2)
    elif fam == "A2":
        val = Fraction(total + a[0], 2)
    elif fam == "A2p":
        val = Fraction(total + a[n])
    elif fam == "A2o":
        val = Fraction(total - a[0], 2)
    elif fam == "G21":
        val = Fraction(total - a[0] + a[3], 2)
    elif fam == "D43":
        val = Fraction(total - a[0] - a[3], 2)
    else:
        raise AssertionError(fam)
    assert val.denominator == 1, f"non-integral atomic length for {core!r} in {typ.label}"
    return int(val)


def atomic_length_pi(typ, core):
    """Atomic length as the pi-weighted box count."""
    if isinstance(core, CoreElement):
        core = core.core
    data = registry(typ)
    a = ambient_counts(typ, core)
    val = sum(p * x for p, x in zip(data.pi, a))
    assert val.denominator == 1
    return int(val)


def atomic_length_fold(typ, core):
    """Atomic length as the coefficient sum over folded simple roots."""
    if isinstance(core, CoreElement):
        core = core.core
    val = sum(folded_counts(typ, core))
    assert val.denominator == 1
    return int(val)


def beta_of_core(typ, core):
    """Translation vector of the model element, in orthogonal coordinates.

    The finite part of the base-weight orbit difference, negated: the
    zero-node coefficient contributes through theta.
    """
    if isinstance(core, CoreElement):
        core = core.core
    data = registry(typ)
    y = folded_counts(typ, core)
    rs = data.roots
    beta = [Fraction(y[0], data.v[0]) * t for t in data.theta]
    for i in range(1, data.num_nodes):
        beta = [b - y[i] * r for b, r in zip(beta, rs.simple[i - 1])]
    beta = tuple(beta)
    assert data.in_mstar(beta), f"beta {beta} escapes the lattice for {typ.label}"
    return beta


def lattice_atomic_length(typ, beta):
    """Atomic length from the translation vector alone."""
    data = registry(typ)
    form = data.form(beta, beta)
    if typ.family == "A2p":
        # the transposed even twisted family carries the halved normalization
        form = form / 2
    height = sum(data.roots.simple_coords(beta))
    val = Fraction(data.eta, 2) * form - height
    assert val.denominator == 1
    return int(val)


def dual_atomic_length(typ, beta):
    """Dual atomic length of the element translating by beta."""
    data = registry(typ)
    if not data.in_mstar(beta):
        raise ValueError(f"{beta} is not in the translation lattice of {typ.label}")
    return data.eta_dual / 2 * data.form(beta, beta) - data.form(beta, data.roots.rho)


# ---------------------------------------------------------------------------
# minimal coset representatives


class GrassmannianElement:
    """Minimal coset representative c = u t_nu with translation vector beta."""

    __slots__ = ("type", "beta", "nu", "u", "length", "signature")

    def __init__(self, typ, beta, nu, u, length):
        object.__setattr__(self, "type", typ)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "signature", -1 if length % 2 else 1)

    def __setattr__(self, name, value):
        raise AttributeError("GrassmannianElement is immutable")

    def __repr__(self):
        return (f"GrassmannianElement({self.type.label}, beta={self.beta}, "
                f"nu={self.nu}, u={self.u}, length={self.length})")

    def dual_length(self):
        return dual_atomic_length(self.type, self.beta)

    def dominant_weight(self):
        return dominant_weight(self)


def chi(rs, alpha):
    """0 on positive roots, 1 on negative ones."""
    return 0 if rs.is_positive_root(alpha) else 1


def _root_steps(typ):
    """Per positive root, the minimal multiple landing in the lattice.

    Translating by gamma crosses, in the direction of alpha, one reflecting
    hyperplane per lattice step; the step is the smallest m with
    m * alpha in M*, so the crossing count is <gamma, alpha^vee> / m.
    """
    data = registry(typ)
    steps = []
    for alpha in data.roots.positive:
        for m in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)):
            if data.in_mstar(tuple(m * a for a in alpha)):
                steps.append(m)
                break
        else:
            raise AssertionError(f"no lattice multiple of {alpha} for {typ.label}")
    return steps


_STEPS = {}


def crossing_pairings(typ, gamma):
    """Normalized pairings of gamma with each positive root, all integral."""
    data = registry(typ)
    if typ not in _STEPS:
        _STEPS[typ] = _root_steps(typ)
    rs = data.roots
    out = []
    for alpha, m in zip(rs.positive, _STEPS[typ]):
        pair = rs.pairing(gamma, alpha) / m
        assert pair.denominator == 1, f"non-integral crossing count {pair}"
        out.append(int(pair))
    return out


def translation_length(typ, u_word, gamma):
    """Coxeter length of u t_gamma from the affine inversion count."""
    data = registry(typ)
    rs = data.roots
    pairs = crossing_pairings(typ, gamma)
    return sum(
        abs(p + chi(rs, rs.act(u_word, alpha)))
        for p, alpha in zip(pairs, rs.positive)
    )


def decompose(typ, beta):
    """Minimal coset representative whose translation part is beta."""
    data = registry(typ)
    if not data.in_mstar(beta):
        raise ValueError(f"{beta} is not in the translation lattice of {typ.label}")
    beta = tuple(Fraction(b) for b in beta)
    nu, u = data.roots.to_antidominant(beta)
    length = translation_length(typ, u, nu)
    return GrassmannianElement(typ, beta, nu, u, length)


def dominant_weight(gel):
    """The finite dominant weight carried by the element in the expansion."""
    data = registry(gel.type)
    rs = data.roots
    u_inv_rho = rs.act_inverse(gel.u, rs.rho)
    w = tuple(
        -data.eta_dual * nu_i + a - b
        for nu_i, a, b in zip(gel.nu, u_inv_rho, rs.rho)
    )
    for alpha in rs.simple:
        assert data.form(w, alpha) >= 0, f"weight {w} not dominant for {gel!r}"
    return w


# ---------------------------------------------------------------------------
# orbit enumeration


def orbit(typ, l_max):
    """All model elements with atomic length <= l_max, complete.

    Enumerates the free charge coordinates over growing boxes; the atomic
    length dominates a positive-definite form in these coordinates, so the
    enumeration stops once an entire outer shell misses the bound.
    """
    data = registry(typ)
    if data.core_model == "cores":
        from .charges import n_cores_of_weight

        groups = n_cores_of_weight(data.ambient, l_max)
        return [CoreElement(typ, c, check=False) for grp in groups for c in grp]
    dim = 2 if data.core_model == "g-cores" else data.rank
    out = []
    radius = 0
    while True:
        hits = 0
        for halves in _shell(dim, radius):
            if data.core_model == "sc-even-cores" and sum(abs(h) for h in halves) % 2:
                continue
            el = core_from_halves(typ, halves)
            if atomic_length(typ, el.core) <= l_max:
                out.append(el)
                hits += 1
        if hits == 0 and radius > 1:
            break
        radius += 1
    return sorted(out, key=lambda e: (atomic_length(typ, e.core), e.core.parts))


def _shell(dim, radius):
    """Integer points with max-norm exactly radius."""
    if radius == 0:
        yield (0,) * dim
        return
    span = range(-radius, radius + 1)
    for pt in itertools.product(span, repeat=dim):
        if max(abs(x) for x in pt) == radius:
            yield pt


def orbit_bfs(typ, l_max):
    """The same orbit by reflection search; independent of the charge route."""
    data = registry(typ)
    start = CoreElement(typ, Partition())
    seen = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for el in frontier:
            for i in range(data.num_nodes):
                other = reflect(typ, i, el)
                if other not in seen and atomic_length(typ, other.core) <= l_max:
                    seen[other] = seen[el] + 1
                    nxt.append(other)
        frontier = nxt
    return seen


def element_of_core(typ, core):
    """Lattice-side element matching a model core."""
    if isinstance(core, CoreElement):
        core = core.core
    return decompose(typ, beta_of_core(typ, core))
