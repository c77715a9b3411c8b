"""Integer partitions, hook lengths, boundary words, and the distinct families.

Everything here is a pure function on immutable values.  A partition is kept
as a tuple of weakly decreasing positive integers; its boundary word is the
bi-infinite {0,1} walk along the border of the Young diagram, stored as a
finite canonical window.  Multisets are returned as sorted tuples.
"""

from __future__ import annotations

import itertools


class Partition:
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts if p)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"negative part in {parts}")
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return (self.weight(), self.parts) < (other.weight(), other.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def part(self, i):
        """i-th part, 1-indexed, zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def weight(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def durfee(self):
        """Side of the largest square fitting inside the diagram."""
        d = 0
        for i, p in enumerate(self.parts, start=1):
            if p >= i:
                d = i
        return d

    def cells(self):
        """All boxes (i, j), 1-indexed row i, column j."""
        return [(i, j) for i, p in enumerate(self.parts, start=1) for j in range(1, p + 1)]

    def conjugate(self):
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def hook(self, i, j):
        """Hook length of the box in row i, column j (1-indexed)."""
        arm = self.parts[i - 1] - j
        leg = self.conjugate().parts[j - 1] - i
        return arm + leg + 1

    def hooks(self):
        """Sorted multiset of all hook lengths."""
        tr = self.conjugate().parts
        out = []
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                out.append(p - j + tr[j - 1] - i + 1)
        return tuple(sorted(out))

    def contents(self):
        """Multiset of contents j - i over all boxes, sorted."""
        return tuple(sorted(j - i for i, j in self.cells()))

    def is_distinct(self):
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def to_json(self):
        return list(self.parts)


def residue_counts(lam, n):
    """Counts (a_0, ..., a_{n-1}) of boxes by content mod n."""
    a = [0] * n
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            a[(j - i) % n] += 1
    return tuple(a)


def is_n_core(lam, n):
    """True iff no hook length equals n (hence none is a multiple of n)."""
    return all(h != n for h in lam.hooks())


def hooks_multiple_of(lam, n):
    """Sorted multiset of hook lengths divisible by n."""
    return tuple(sorted(h for h in lam.hooks() if h % n == 0))


def hooks_below(lam, n):
    """Sorted multiset of hook lengths strictly less than n."""
    return tuple(sorted(h for h in lam.hooks() if h < n))


# ---------------------------------------------------------------------------
# boundary words


class BoundaryWord:
    """Bi-infinite {0,1} word with all letters 0 far left and 1 far right.

    Only the canonical window [lo, lo + len(window)) is stored: it starts at
    the first letter ``1`` and ends at the last letter ``0``.  The empty
    window (lo == 0) encodes the empty partition.
    """

    __slots__ = ("lo", "window")

    def __init__(self, lo=0, window=()):
        window = tuple(int(c) for c in window)
        if any(c not in (0, 1) for c in window):
            raise ValueError("window letters must be 0 or 1")
        # canonical trim: drop leading 0s and trailing 1s
        start = 0
        while start < len(window) and window[start] == 0:
            start += 1
        end = len(window)
        while end > start and window[end - 1] == 1:
            end -= 1
        lo += start
        window = window[start:end]
        if not window:
            lo = 0
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "window", window)

    def __setattr__(self, name, value):
        raise AttributeError("BoundaryWord is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, BoundaryWord)
            and self.lo == other.lo
            and self.window == other.window
        )

    def __hash__(self):
        return hash((self.lo, self.window))

    def __repr__(self):
        w = "".join(str(c) for c in self.window)
        return f"BoundaryWord(lo={self.lo}, window={w!r})"

    @property
    def hi(self):
        """One past the last stored index."""
        return self.lo + len(self.window)

    def letter(self, k):
        if k < self.lo:
            return 0
        if k >= self.hi:
            return 1
        return self.window[k - self.lo]

    def ones(self):
        """Indices of the finitely many letters 1 below the far-right tail."""
        return [k for k in range(self.lo, self.hi) if self.letter(k) == 1]

    def zeros(self):
        """Indices of the finitely many letters 0 above the far-left tail."""
        return [k for k in range(self.lo, self.hi) if self.letter(k) == 0]

    def is_balanced(self):
        neg_ones = sum(1 for k in self.ones() if k <= -1)
        nonneg_zeros = sum(1 for k in self.zeros() if k >= 0)
        return neg_ones == nonneg_zeros

    def to_json(self):
        return {"lo": self.lo, "window": "".join(str(c) for c in self.window)}


def psi(lam):
    """Boundary word of a partition: 0 at the indices lambda_i - i, 1 elsewhere."""
    ell = len(lam.parts)
    tr = lam.conjugate().parts
    width = lam.parts[0] if lam.parts else 0
    lo = -ell
    hi = width  # letters at k >= lambda_1 are all 1, at k < -ell all 0
    zero_at = set(lam.parts[i - 1] - i for i in range(1, ell + 1))
    window = [0 if k in zero_at else 1 for k in range(lo, hi)]
    # sanity: letters 1 must sit exactly at j - tr_j - 1
    one_at = set(j - (tr[j - 1] if j <= len(tr) else 0) - 1 for j in range(1, width + ell + 1))
    for k in range(lo, hi):
        assert (k in zero_at) != (k in one_at), "boundary word mislabel"
    return BoundaryWord(lo, window)


def psi_inv(word):
    """Partition from a balanced boundary word, inverse of psi."""
    if not word.is_balanced():
        raise ValueError("boundary word is not balanced")
    zeros = sorted(word.zeros(), reverse=True)
    parts = []
    i = 1
    for z in zeros:
        p = z + i
        if p > 0:
            parts.append(p)
            i += 1
    # zeros below the window continue at lo-1, lo-2, ...
    z = word.lo - 1
    while z + i > 0:
        parts.append(z + i)
        i += 1
        z -= 1
    return Partition(parts)


def hook_index_pairs(lam):
    """Pairs (i, j, above) with letter(i) = 1, letter(j) = 0, i < j.

    Each box of the diagram corresponds to one pair; j - i is its hook
    length, and ``above`` tells whether the box lies strictly above the main
    diagonal.
    """
    word = psi(lam)
    ones = word.ones()
    zeros = word.zeros()
    pairs = []
    for i in ones:
        for j in zeros:
            if i < j:
                # column index = rank of i among ones, row index = rank of j
                # among zeros read downward; strictly above means col > row
                col = sum(1 for t in ones if t <= i)
                row = sum(1 for t in zeros if t >= j)
                pairs.append((i, j, col > row))
    return sorted(pairs)


def word_shift(word, s):
    """Word read with the origin moved by s: new letter(k) = old letter(k + s)."""
    return BoundaryWord(word.lo - s, word.window)


def word_charge(word):
    """#{k <= -1 : c_k = 1} - #{k >= 0 : c_k = 0}; zero iff balanced."""
    return sum(1 for k in word.ones() if k <= -1) - sum(1 for k in word.zeros() if k >= 0)


# ---------------------------------------------------------------------------
# distinct partitions and their doubled / self-conjugate companions


def _require_distinct(bar):
    if not bar.is_distinct():
        raise ValueError(f"{bar!r} is not a distinct partition")


def shifted_hooks(bar):
    """Sorted hook multiset of the shifted diagram of a distinct partition.

    The hook of a shifted box counts the boxes strictly right, strictly
    below, the box itself, plus the part indexed by its column.
    """
    _require_distinct(bar)
    ell = len(bar.parts)
    out = []
    for i in range(1, ell + 1):
        for j in range(i + 1, i + bar.parts[i - 1] + 1):
            arm = bar.parts[i - 1] - (j - i)
            leg = sum(1 for r in range(i + 1, ell + 1) if r + 1 <= j <= r + bar.parts[r - 1])
            out.append(arm + leg + 1 + bar.part(j))
    return tuple(sorted(out))


def double_distinct(bar):
    """The doubled distinct partition: shifted rows plus mirrored columns."""
    _require_distinct(bar)
    ell = len(bar.parts)
    cells = set()
    for i in range(1, ell + 1):
        for j in range(i + 1, i + bar.parts[i - 1] + 1):
            cells.add((i, j))
        for r in range(i, i + bar.parts[i - 1]):
            cells.add((r, i))
    return _partition_from_cells(cells)


def sc_from_distinct(bar):
    """The self-conjugate partition with diagonal hooks 2*part - 1."""
    _require_distinct(bar)
    ell = len(bar.parts)
    cells = set()
    for i in range(1, ell + 1):
        for j in range(i, i + bar.parts[i - 1]):
            cells.add((i, j))
            cells.add((j, i))
    return _partition_from_cells(cells)


def ddtr_from_distinct(bar):
    return double_distinct(bar).conjugate()


def _partition_from_cells(cells):
    rows = {}
    for i, j in cells:
        rows[i] = rows.get(i, 0) + 1
    if not rows:
        return Partition()
    assert set(rows) == set(range(1, max(rows) + 1)), "cells do not form a diagram"
    return Partition(rows[i] for i in sorted(rows))


def distinct_from_sc(mu):
    """Halve a self-conjugate partition along its diagonal."""
    d = mu.durfee()
    return Partition(mu.parts[i] - i for i in range(d))


def distinct_from_dd(mu):
    d = mu.durfee()
    return Partition(mu.parts[i] - i - 1 for i in range(d))


def distinct_from_ddtr(mu):
    return distinct_from_dd(mu.conjugate())


def is_sc(lam):
    return lam == lam.conjugate()


def is_dd(lam):
    d = lam.durfee()
    tr = lam.conjugate()
    return d >= 0 and all(lam.part(i) == tr.part(i) + 1 for i in range(1, d + 1))


def is_ddtr(lam):
    return is_dd(lam.conjugate())


def is_sc_word(lam):
    """Word characterization: c_{-k-1} = 1 - c_k for all k >= 0."""
    w = psi(lam)
    span = max(abs(w.lo), w.hi) + 2
    return all(w.letter(-k - 1) == 1 - w.letter(k) for k in range(span))


def is_dd_word(lam):
    """Word characterization: c_0 = 1 and c_{-k} = 1 - c_k for k >= 1."""
    w = psi(lam)
    span = max(abs(w.lo), w.hi) + 2
    return w.letter(0) == 1 and all(w.letter(-k) == 1 - w.letter(k) for k in range(1, span))


def is_ddtr_word(lam):
    """Word characterization: c_{-1} = 0 and c_{-k-2} = 1 - c_k for k >= 0."""
    w = psi(lam)
    span = max(abs(w.lo), w.hi) + 3
    return w.letter(-1) == 0 and all(w.letter(-k - 2) == 1 - w.letter(k) for k in range(span))


def dd_hook_multiset(bar):
    """Hook multiset of double_distinct(bar) assembled from shifted hooks.

    Two copies of the shifted hooks, plus the doubled parts, minus the parts.
    """
    _require_distinct(bar)
    sh = list(shifted_hooks(bar))
    out = sh + sh + [2 * p for p in bar.parts]
    for p in bar.parts:
        out.remove(p)
    return tuple(sorted(out))


def hooks_split_by_diagonal(lam):
    """Hook multisets (strictly above, on, strictly below) the main diagonal."""
    above, diag, below = [], [], []
    tr = lam.conjugate().parts
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            h = p - j + tr[j - 1] - i + 1
            if j > i:
                above.append(h)
            elif j == i:
                diag.append(h)
            else:
                below.append(h)
    return tuple(sorted(above)), tuple(sorted(diag)), tuple(sorted(below))


def distinct_hooks_tr(bar):
    """Hook multiset of the transposed shifted diagram: shifted hooks minus parts."""
    _require_distinct(bar)
    out = list(shifted_hooks(bar))
    for p in bar.parts:
        out.remove(p)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# enumeration helpers (used heavily by the test suites)


def partitions_of(n, max_part=None):
    """All partitions of n, largest part first, as Partition objects."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def partitions_up_to(n):
    """All partitions of weight 0..n."""
    for m in range(n + 1):
        yield from partitions_of(m)


def distinct_partitions_of(n, max_part=None):
    """All partitions of n into distinct parts."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in distinct_partitions_of(n - first, first - 1):
            yield Partition((first,) + rest.parts)


def distinct_partitions_up_to(n):
    for m in range(n + 1):
        yield from distinct_partitions_of(m)
