"""Static registry of the ten affine families used by the package.

Each entry records the marks and comarks, the Coxeter-type numbers, the
finite root system underneath with the scaling of the bilinear form, the
translation-lattice membership rule, the residue weights on the core model,
and the realization inside an affine symmetric group: which products of
type-A reflections implement each simple reflection, and how simple roots
and fundamental weights unfold.

Family tags: A1 B1 C1 D1 (untwisted), A2o = twisted A of odd index,
A2 = twisted A of even index, A2p = its transpose, D2 = twisted D,
G21 and D43 (fixed rank 2).
"""

from __future__ import annotations

from fractions import Fraction

from .rootsystems import RootSystem

FAMILIES = ("A1", "B1", "C1", "D1", "A2o", "A2", "A2p", "D2", "G21", "D43")

_MIN_RANK = {"A1": 2, "B1": 2, "C1": 2, "D1": 4, "A2o": 2, "A2": 2, "A2p": 2,
             "D2": 2, "G21": 2, "D43": 2}
_FIXED_RANK = {"G21": 2, "D43": 2}


class AffineType:
    """A family tag plus a rank; the key into the registry."""

    __slots__ = ("family", "n")

    def __init__(self, family, n):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
        n = int(n)
        if family in _FIXED_RANK and n != _FIXED_RANK[family]:
            raise ValueError(f"{family} has fixed rank {_FIXED_RANK[family]}")
        if n < _MIN_RANK[family]:
            raise ValueError(f"{family} needs rank >= {_MIN_RANK[family]}, got {n}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("AffineType is immutable")

    def __eq__(self, other):
        return isinstance(other, AffineType) and (self.family, self.n) == (other.family, other.n)

    def __hash__(self):
        return hash((self.family, self.n))

    def __repr__(self):
        return f"AffineType({self.family!r}, {self.n})"

    @property
    def label(self):
        return f"{self.family}.{self.n}"


def parse_type(family, rank=None):
    """Build an AffineType from CLI-ish inputs, defaulting fixed ranks."""
    if rank is None and family in _FIXED_RANK:
        rank = _FIXED_RANK[family]
    if rank is None:
        raise ValueError(f"family {family} needs an explicit rank")
    return AffineType(family, rank)


class CartanData:
    """All per-type constants; built once per (family, rank) and cached."""

    def __init__(self, typ):
        self.type = typ
        n = typ.n
        fam = typ.family
        self.rank = n

        if fam == "A1":
            self.ambient = n  # affine symmetric group on n runners
            self.v = (1,) * n
            self.v_dual = (1,) * n
            self.finite = ("A", n - 1)
            self.norm_factor = Fraction(1)
            self.core_model = "cores"
            self.lambda0_mult = 1
            self.fold_words = tuple((i,) for i in range(n))
            self.fold_roots = tuple(_unit(n, i) for i in range(n))
            self.fold_weights = tuple(_unit(n, i) for i in range(n))
            self.pi = (Fraction(1),) * n
        elif fam in ("C1", "D2", "A2", "A2p"):
            N = 2 * n
            self.ambient = N
            self.core_model = "sc-cores"
            self.fold_words = tuple(
                [(0,)] + [(i, N - i) for i in range(1, n)] + [(n,)]
            )
            root0 = {"C1": 2, "D2": 1, "A2": 1, "A2p": 2}[fam]
            rootn = {"C1": 2, "D2": 1, "A2": 2, "A2p": 1}[fam]
            self.fold_roots = tuple(
                [_scaled_unit(N, 0, root0)]
                + [_pair(N, i, N - i) for i in range(1, n)]
                + [_scaled_unit(N, n, rootn)]
            )
            self.fold_weights = self.fold_roots  # same index pattern for Lambda
            self.lambda0_mult = root0
            self.v = {
                "C1": (1,) + (2,) * (n - 1) + (1,),
                "D2": (1,) * (n + 1),
                "A2": (2,) * n + (1,),
                "A2p": (1,) + (2,) * n,
            }[fam]
            self.v_dual = {
                "C1": (1,) * (n + 1),
                "D2": (1,) + (2,) * (n - 1) + (1,),
                "A2": (1,) + (2,) * n,
                "A2p": (2,) * n + (1,),
            }[fam]
            self.norm_factor = {"C1": Fraction(1, 2), "D2": Fraction(2),
                                "A2": Fraction(1), "A2p": Fraction(1)}[fam]
            self.finite = ("C", n) if fam in ("C1", "A2") else ("B", n)
            self.pi = {
                "C1": (Fraction(1),) * N,
                "D2": tuple(Fraction(1) if i in (0, n) else Fraction(1, 2) for i in range(N)),
                "A2": tuple(Fraction(1) if i == 0 else Fraction(1, 2) for i in range(N)),
                # weight 2 sits on residue n: the zero node of this labelling
                # is the diagram end folded onto residue n of the ambient
                "A2p": tuple(Fraction(2) if i == n else Fraction(1) for i in range(N)),
            }[fam]
        elif fam in ("B1", "A2o", "D1"):
            N = 2 * n
            self.ambient = N
            self.core_model = "sc-even-cores"
            base_words = [(0, 1, N - 1, 0)] + [(i, N - i) for i in range(1, n)]
            base_roots = [_combo(N, {0: 2, 1: 1, N - 1: 1})] + [_pair(N, i, N - i) for i in range(1, n)]
            lam0 = _unit(N, 0)
            lam1 = _combo(N, {1: 1, N - 1: 1, 0: -1})
            base_weights = [lam0, lam1] + [_pair(N, i, N - i) for i in range(2, n)]
            if fam == "D1":
                words = base_words[:n] + [(n, n - 1, n + 1, n)]
                roots = base_roots[:n] + [_combo(N, {n: 2, n - 1: 1, n + 1: 1})]
                weights = base_weights[:n - 1] + [_combo(N, {n - 1: 1, n + 1: 1, n: -1}), _unit(N, n)]
                self.v = (1, 1) + (2,) * (n - 3) + (1, 1)
                self.v_dual = self.v
                self.finite = ("D", n)
                self.norm_factor = Fraction(1)
                self.pi = tuple(Fraction(0) if i in (0, n) else Fraction(1, 2) for i in range(N))
            else:
                words = base_words + [(n,)]
                rootn = 1 if fam == "B1" else 2
                roots = base_roots + [_scaled_unit(N, n, rootn)]
                weights = base_weights + [_scaled_unit(N, n, rootn)]
                if fam == "B1":
                    self.v = (1, 1) + (2,) * (n - 1)
                    self.v_dual = (1, 1) + (2,) * (n - 2) + (1,)
                    self.finite = ("B", n)
                    self.norm_factor = Fraction(1)
                    self.pi = tuple(
                        Fraction(0) if i == 0 else Fraction(1) if i == n else Fraction(1, 2)
                        for i in range(N)
                    )
                else:
                    self.v = (1, 1) + (2,) * (n - 2) + (1,)
                    self.v_dual = (1, 1) + (2,) * (n - 1)
                    self.finite = ("C", n)
                    self.norm_factor = Fraction(1)
                    self.pi = tuple(Fraction(0) if i == 0 else Fraction(1, 2) for i in range(N))
            self.fold_words = tuple(words)
            self.fold_roots = tuple(roots)
            self.fold_weights = tuple(weights)
            self.lambda0_mult = 1
        elif fam in ("D43", "G21"):
            N = 6
            self.ambient = N
            self.core_model = "g-cores"
            # simple reflections of the rank-3 twisted layer inside the
            # affine symmetric group on six runners, then one more folding
            self.fold_words = ((0, 1, 5, 0), (2, 4), (1, 3, 5))
            a52_0 = _combo(N, {0: 2, 1: 1, 5: 1})
            a52_1 = _pair(N, 1, 5)
            a52_2 = _pair(N, 2, 4)
            a52_3 = _scaled_unit(N, 3, 2)
            l52_0 = _unit(N, 0)
            l52_1 = _combo(N, {1: 1, 5: 1, 0: -1})
            l52_2 = _pair(N, 2, 4)
            l52_3 = _scaled_unit(N, 3, 2)
            if fam == "D43":
                self.fold_roots = (a52_0, a52_2, _add(a52_1, a52_3))
                self.fold_weights = (l52_0, l52_2, _add(l52_1, l52_3))
                self.v = (1, 2, 1)
                self.v_dual = (1, 2, 3)
                self.finite = ("G2t", 2)
                self.norm_factor = Fraction(1)
                self.lambda0_mult = 1
                self.pi = tuple(Fraction(0) if i in (0, 3) else Fraction(1, 2) for i in range(N))
            else:
                self.fold_roots = (_scale(a52_0, 3), _scale(a52_2, 3), _add(a52_1, a52_3))
                self.fold_weights = (_scale(l52_0, 3), _scale(l52_2, 3), _add(l52_1, l52_3))
                self.v = (1, 2, 3)
                self.v_dual = (1, 2, 1)
                self.finite = ("G2", 2)
                self.norm_factor = Fraction(1, 3)
                self.lambda0_mult = 3
                self.pi = tuple(
                    Fraction(0) if i == 0 else Fraction(1) if i == 3 else Fraction(1, 2)
                    for i in range(N)
                )
            self.rank = 2
        else:
            raise AssertionError(fam)

        self.eta = sum(self.v)
        self.eta_dual = Fraction(sum(self.v_dual), self.v_dual[0])
        self.eta_tilde = 2 * self.eta_dual if fam == "C1" else self.eta_dual
        if fam == "A2p":
            # transposing the even twisted-A family halves the naive count;
            # the working abacus parameter stays at the full odd value
            self.eta_tilde = sum(self.v_dual)
        assert self.eta_tilde == int(self.eta_tilde)
        self.eta_tilde = int(self.eta_tilde)

        self.num_nodes = len(self.fold_words)
        self.roots = RootSystem(*self.finite)
        self.theta = _theta(self)

    # -- translation lattice -------------------------------------------------

    def mstar_contains(self, coeffs):
        """Membership of sum c_i alpha_i in the translation lattice.

        Coefficients are indexed 1..rank in the simple-root basis of the
        finite system; half-integers are allowed where the lattice has them.
        """
        fam = self.type.family
        n = self.roots.rank
        c = [Fraction(x) for x in coeffs]
        if len(c) != n:
            raise ValueError(f"expected {n} coordinates")
        if fam == "A2":
            ok = all(x.denominator == 1 for x in c[:-1]) and (2 * c[-1]).denominator == 1
        elif fam == "B1":
            ok = all(x.denominator == 1 for x in c) and c[-1] % 2 == 0
        elif fam == "C1":
            ok = all(x.denominator == 1 for x in c) and all(x % 2 == 0 for x in c[:-1])
        elif fam == "A2p":
            ok = all(x.denominator == 1 and x % 2 == 0 for x in c)
        elif fam == "G21":
            ok = all(x.denominator == 1 for x in c) and c[1] % 3 == 0
        else:
            ok = all(x.denominator == 1 for x in c)
        return ok

    def in_mstar(self, beta):
        """Membership of a vector in orthogonal coordinates."""
        coords = self.roots.simple_coords(beta)
        try:
            return self.mstar_contains(coords)
        except ValueError:
            return False

    def form(self, x, y):
        """The invariant bilinear form: scaled Euclidean dot product."""
        return self.norm_factor * self.roots.dot(x, y)

    def mstar_description(self):
        fam = self.type.family
        n = self.rank
        rules = {
            "A1": "all integer coefficients",
            "B1": f"integer coefficients, c{n} even",
            "C1": f"integer coefficients, c1..c{n - 1} even",
            "D1": "all integer coefficients",
            "A2o": "all integer coefficients",
            "A2": f"integer coefficients, c{n} in (1/2)Z",
            "A2p": "all coefficients even",
            "D2": "all integer coefficients",
            "G21": "c1 integer, c2 in 3Z",
            "D43": "all integer coefficients",
        }
        return rules[fam]

    def to_json(self):
        return {
            "type": self.type.label,
            "num_nodes": self.num_nodes,
            "marks": list(self.v),
            "comarks": list(self.v_dual),
            "eta": self.eta,
            "eta_dual": str(self.eta_dual),
            "eta_tilde": self.eta_tilde,
            "finite_type": f"{self.finite[0]}{self.finite[1]}",
            "norm_factor": str(self.norm_factor),
            "core_model": self.core_model,
            "ambient_runners": self.ambient,
            "mstar": self.mstar_description(),
            "pi": [str(p) for p in self.pi],
        }


def _unit(N, i):
    return tuple(1 if k == i else 0 for k in range(N))


def _scaled_unit(N, i, c):
    return tuple(c if k == i else 0 for k in range(N))


def _pair(N, i, j):
    return tuple(1 if k in (i, j) else 0 for k in range(N))


def _combo(N, d):
    return tuple(d.get(k, 0) for k in range(N))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _scale(a, c):
    return tuple(c * x for x in a)


def _theta(data):
    """delta - a_0 alpha_0 in orthogonal coordinates of the finite system."""
    rs = data.roots
    total = [Fraction(0)] * rs.dim
    for i in range(1, data.num_nodes):
        coeff = data.v[i]
        root = rs.simple[i - 1]
        total = [t + coeff * r for t, r in zip(total, root)]
    return tuple(total)


_REGISTRY = {}


def registry(typ):
    """CartanData for a type, cached; all consistency checks run on build."""
    if typ not in _REGISTRY:
        _REGISTRY[typ] = data = CartanData(typ)
        try:
            _check_consistency(data)
        except BaseException:
            del _REGISTRY[typ]
            raise
    return _REGISTRY[typ]


def fold_root(typ, i):
    """Expansion of the i-th simple root in ambient simple roots."""
    data = registry(typ)
    return data.fold_roots[i]


def fold_weight(typ, i):
    """Expansion of the i-th fundamental weight in ambient fundamental weights."""
    data = registry(typ)
    return data.fold_weights[i]


def ambient_cartan_column(N, j):
    """Column j of the affine type-A Cartan matrix on N nodes."""
    col = [0] * N
    col[j] = 2
    if N == 2:
        col[1 - j] = -2
    else:
        col[(j - 1) % N] -= 1
        col[(j + 1) % N] -= 1
    return col


def reconstructed_cartan(typ):
    """Cartan matrix of the folded system, from the ambient reflections.

    Entry (i, j) is read off by applying the word of node i to the folded
    root of node j: the result must be that root minus an integer multiple
    of the folded root of node i, and the multiple is the entry.
    """
    data = registry(typ)
    N = data.ambient
    m = data.num_nodes
    A = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            v = list(data.fold_roots[j])
            for s in reversed(data.fold_words[i]):
                row = ambient_cartan_column(N, s)
                pair = sum(v[k] * row[k] for k in range(N))
                v[s] -= pair
            diff = [a - b for a, b in zip(data.fold_roots[j], v)]
            root_i = data.fold_roots[i]
            scale = Fraction(0)
            for a, b in zip(diff, root_i):
                if b != 0:
                    c = Fraction(a, b)
                    if scale and scale != c:
                        raise AssertionError(f"fold not closed at {typ} ({i},{j})")
                    scale = c
                elif a != 0:
                    raise AssertionError(f"fold not closed at {typ} ({i},{j})")
            if scale.denominator != 1:
                raise AssertionError(f"non-integral Cartan entry at {typ} ({i},{j})")
            A[i][j] = int(scale)
    return A


def _check_consistency(data):
    typ = data.type
    A = reconstructed_cartan(typ)
    m = data.num_nodes
    assert len(data.v) == m == len(data.v_dual), typ
    for i in range(m):
        assert A[i][i] == 2, (typ, "diagonal", i)
        assert sum(A[i][j] * data.v[j] for j in range(m)) == 0, (typ, "Av", i)
    for j in range(m):
        assert sum(data.v_dual[i] * A[i][j] for i in range(m)) == 0, (typ, "vA", j)
    # norm of simple roots from marks: (alpha_i, alpha_i) = 2 a_i_dual / a_i
    rs = data.roots
    for i in range(1, m):
        expected = Fraction(2 * data.v_dual[i], data.v[i])
        got = data.norm_factor * rs.dot(rs.simple[i - 1], rs.simple[i - 1])
        assert got == expected, (typ, "norm", i, got, expected)
    # alpha_0 = (delta - theta)/a_0, so (theta, theta) = a_0^2 (alpha_0, alpha_0)
    expected0 = Fraction(2 * data.v_dual[0], data.v[0])
    got0 = data.norm_factor * rs.dot(data.theta, data.theta) / Fraction(data.v[0] ** 2)
    assert got0 == expected0, (typ, "theta norm", got0, expected0)
