"""Finite root systems in orthogonal coordinates, Weyl groups, alternants.

Types A, B, C, D are realized the classical way inside Z^dim; the two rank-2
exceptional systems live in the sum-zero slice of Z^3.  The bilinear form
used throughout the package is the Euclidean dot product scaled by a
per-type rational factor, so that pairings with roots stay exact.

Vectors are tuples of Fractions (or ints); Weyl elements are words in the
simple reflections.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache


class RootSystem:
    """Simple roots, positive roots and the Weyl group of a finite type."""

    def __init__(self, letter, rank):
        self.letter = letter
        self.rank = rank
        self.simple = _simple_roots(letter, rank)
        self.dim = len(self.simple[0])
        self.positive = _positive_roots(self.simple)
        self.rho = _weyl_vector(self)
        self.rho_dual = _dual_weyl_vector(self)

    # -- linear algebra on tuples ------------------------------------------

    def dot(self, x, y):
        return sum(Fraction(a) * Fraction(b) for a, b in zip(x, y))

    def pairing(self, x, alpha):
        """Cartan pairing <x, alpha^vee> = 2 (x, alpha) / (alpha, alpha)."""
        return 2 * self.dot(x, alpha) / self.dot(alpha, alpha)

    def reflect(self, x, alpha):
        c = self.pairing(x, alpha)
        return tuple(Fraction(a) - c * b for a, b in zip(x, alpha))

    def reflect_simple(self, x, i):
        return self.reflect(x, self.simple[i - 1])

    def act(self, word, x):
        """Apply a word (i_1, ..., i_k) of simple reflections, leftmost last."""
        for i in reversed(word):
            x = self.reflect_simple(x, i)
        return x

    def act_inverse(self, word, x):
        for i in word:
            x = self.reflect_simple(x, i)
        return x

    # -- dominance and minimal representatives ------------------------------

    def is_dominant(self, x):
        return all(self.dot(x, a) >= 0 for a in self.simple)

    def is_antidominant(self, x):
        return all(self.dot(x, a) <= 0 for a in self.simple)

    def to_antidominant(self, x):
        """Antidominant orbit representative nu and minimal word u with u(nu) = x."""
        word = []
        y = x
        while True:
            for i in range(1, self.rank + 1):
                if self.dot(y, self.simple[i - 1]) > 0:
                    y = self.reflect_simple(y, i)
                    word.append(i)
                    break
            else:
                return tuple(y), tuple(word)

    def length(self, word):
        """Coxeter length: inversions of the element the word represents."""
        inv = 0
        for a in self.positive:
            if not self.is_positive_root(self.act_inverse(word, a)):
                inv += 1
        return inv

    def is_positive_root(self, a):
        for b in self.positive:
            if all(x == y for x, y in zip(a, b)):
                return True
        return False

    def sign(self, word):
        return -1 if self.length(word) % 2 else 1

    def simple_coords(self, x):
        """Coordinates of x in the simple-root basis (exact, may be fractional)."""
        basis = [list(a) for a in self.simple]
        vec = [Fraction(c) for c in x]
        coords = _solve_exact(basis, vec)
        return tuple(coords)

    def weyl_elements(self):
        """All (word, image-of-rho) pairs, one reduced word per element."""
        return _weyl_elements_cached(self.letter, self.rank)

    def orbit(self, x):
        seen = {tuple(Fraction(c) for c in x)}
        frontier = [tuple(Fraction(c) for c in x)]
        while frontier:
            nxt = []
            for y in frontier:
                for i in range(1, self.rank + 1):
                    z = self.reflect_simple(y, i)
                    if z not in seen:
                        seen.add(z)
                        nxt.append(z)
            frontier = nxt
        return seen


def _simple_roots(letter, rank):
    f = Fraction
    if letter == "A":
        n = rank + 1
        return [tuple(f(1) if k == i else f(-1) if k == i + 1 else f(0) for k in range(n))
                for i in range(rank)]
    if letter in ("B", "C", "D"):
        n = rank
        roots = [tuple(f(1) if k == i else f(-1) if k == i + 1 else f(0) for k in range(n))
                 for i in range(rank - 1)]
        if letter == "B":
            roots.append(tuple(f(1) if k == n - 1 else f(0) for k in range(n)))
        elif letter == "C":
            roots.append(tuple(f(2) if k == n - 1 else f(0) for k in range(n)))
        else:
            if rank < 2:
                raise ValueError("type D needs rank >= 2")
            last = [f(0)] * n
            last[n - 2] = f(1)
            last[n - 1] = f(1)
            roots.append(tuple(last))
        return roots
    if letter == "G2":
        # alpha_1 long, alpha_2 short, in the sum-zero slice of Z^3
        return [(f(-2), f(1), f(1)), (f(1), f(-1), f(0))]
    if letter == "G2t":
        # alpha_1 short, alpha_2 long
        return [(f(1), f(-1), f(0)), (f(-2), f(1), f(1))]
    raise ValueError(f"unknown finite type {letter}")


def _positive_roots(simple):
    dot = lambda x, y: sum(a * b for a, b in zip(x, y))
    roots = set(simple)
    frontier = set(simple)
    while frontier:
        nxt = set()
        for a in frontier:
            for s in simple:
                c = 2 * dot(a, s) / dot(s, s)
                b = tuple(x - c * y for x, y in zip(a, s))
                if b not in roots:
                    roots.add(b)
                    nxt.add(b)
        frontier = nxt
    basis = [list(t) for t in simple]
    positive = []
    for b in roots:
        coords = _solve_exact(basis, list(b))
        if coords is not None and all(c >= 0 for c in coords):
            positive.append(b)
    return sorted(positive)


def _solve_exact(basis, vec):
    """Solve sum_i c_i basis[i] = vec exactly; None if inconsistent."""
    rows = len(basis)
    dim = len(vec)
    aug = [[Fraction(basis[i][j]) for i in range(rows)] + [Fraction(vec[j])] for j in range(dim)]
    piv_cols = []
    r = 0
    for c in range(rows):
        piv = next((k for k in range(r, dim) if aug[k][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        scale = aug[r][c]
        aug[r] = [x / scale for x in aug[r]]
        for k in range(dim):
            if k != r and aug[k][c] != 0:
                factor = aug[k][c]
                aug[k] = [x - factor * y for x, y in zip(aug[k], aug[r])]
        piv_cols.append(c)
        r += 1
    sol = [Fraction(0)] * rows
    for row, c in enumerate(piv_cols):
        sol[c] = aug[row][-1]
    # consistency
    for j in range(dim):
        if sum(sol[i] * Fraction(basis[i][j]) for i in range(rows)) != Fraction(vec[j]):
            return None
    return sol


def _weyl_vector(rs):
    """Vector with <rho, alpha_i^vee> = 1 for all simple alpha_i."""
    half = [Fraction(0)] * rs.dim
    for a in rs.positive:
        half = [h + Fraction(x, 2) for h, x in zip(half, a)]
    return tuple(half)


def _dual_weyl_vector(rs):
    """Half sum of positive coroots, normalized so (alpha_i, rho_dual) = 1... in
    pairing terms: the vector r with (alpha_i, r)-pairing giving height counts."""
    half = [Fraction(0)] * rs.dim
    for a in rs.positive:
        norm = rs.dot(a, a)
        half = [h + Fraction(x, 1) / norm for h, x in zip(half, a)]
    return tuple(half)


@lru_cache(maxsize=None)
def _weyl_elements_cached(letter, rank):
    rs = RootSystem(letter, rank)
    seen = {tuple(rs.rho): ()}
    frontier = [tuple(rs.rho)]
    while frontier:
        nxt = []
        for y in frontier:
            word = seen[y]
            for i in range(1, rank + 1):
                z = rs.reflect_simple(y, i)
                if z not in seen:
                    seen[z] = (i,) + word
                    nxt.append(z)
        frontier = nxt
    return tuple((word, pt) for pt, word in seen.items())
