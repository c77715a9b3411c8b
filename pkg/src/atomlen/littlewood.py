"""Littlewood decomposition: n-core plus n-quotient, via boundary words.

The decomposition extracts the n residue subwords of the boundary word,
re-centers each one (the shift is the runner charge), and reads the core off
the step positions.  Runs in O(|partition| + n); the rim-hook peeling route
lives in the test suite as an independent oracle.
"""

from __future__ import annotations

from .partitions import (
    BoundaryWord,
    Partition,
    hooks_multiple_of,
    is_n_core,
    is_ddtr,
    is_sc,
    psi,
    psi_inv,
)


class LittlewoodData:
    """Value object holding (core, quotient, n) plus the runner shifts."""

    __slots__ = ("core", "quotient", "n", "shifts")

    def __init__(self, core, quotient, n, shifts=None):
        if not is_n_core(core, n):
            raise ValueError(f"{core!r} is not a {n}-core")
        quotient = tuple(quotient)
        if len(quotient) != n:
            raise ValueError(f"quotient must have {n} components")
        object.__setattr__(self, "core", core)
        object.__setattr__(self, "quotient", quotient)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "shifts", tuple(shifts) if shifts is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("LittlewoodData is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LittlewoodData)
            and (self.core, self.quotient, self.n) == (other.core, other.quotient, other.n)
        )

    def __repr__(self):
        return f"LittlewoodData(core={self.core!r}, quotient={list(self.quotient)}, n={self.n})"

    def to_json(self):
        return {
            "n": self.n,
            "core": self.core.to_json(),
            "quotient": [q.to_json() for q in self.quotient],
        }


def _runner_charge(word, n, k, span):
    """Charge of the residue-k subword: #1s at i <= -1 minus #0s at i >= 0."""
    ones = sum(1 for i in range(-span, 0) if word.letter(n * i + k) == 1)
    zeros = sum(1 for i in range(0, span + 1) if word.letter(n * i + k) == 0)
    return ones - zeros


def decompose(lam, n):
    """Littlewood decomposition of a partition into its n-core and n-quotient."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    word = psi(lam)
    span = (max(abs(word.lo), word.hi) // n) + 2
    quotient = []
    charges = []
    for k in range(n):
        ch = _runner_charge(word, n, k, span)
        charges.append(ch)
        # shifting the subword by -charge balances it
        letters = [word.letter(n * (i - ch) + k) for i in range(-span - abs(ch), span + abs(ch) + 1)]
        quotient.append(psi_inv(BoundaryWord(-span - abs(ch), letters)))
    # the core keeps each runner charge but drops all 10-patterns: runner k of
    # the core is the step word jumping to 1 at position -charge
    core_letters = []
    lo = -span * n
    for i in range(-span, span + 1):
        for k in range(n):
            core_letters.append(0 if i < -charges[k] else 1)
    core = psi_inv(BoundaryWord(lo, core_letters))
    return LittlewoodData(core, quotient, n, shifts=charges)


def compose(data):
    """Inverse of decompose: rebuild the partition from core and quotient."""
    n = data.n
    core_word = psi(data.core)
    quot_words = [psi(q) for q in data.quotient]
    span = max(
        [(max(abs(core_word.lo), core_word.hi) // n) + 2]
        + [max(abs(w.lo), w.hi) + 2 for w in quot_words]
    )
    charges = [_runner_charge(core_word, n, k, span) for k in range(n)]
    mx = max(abs(c) for c in charges) if charges else 0
    lo = -(span + mx) * n
    letters = []
    for i in range(-span - mx, span + mx + 1):
        for k in range(n):
            letters.append(quot_words[k].letter(i + charges[k]))
    return psi_inv(BoundaryWord(lo, letters))


def hook_quotient_multiset(lam, n):
    """Hook lengths of lam divisible by n; equals n times the quotient hooks."""
    return hooks_multiple_of(lam, n)


def quotient_hooks_scaled(data):
    """The multiset n * H(quotient), for comparison with hook_quotient_multiset."""
    out = []
    for q in data.quotient:
        out.extend(data.n * h for h in q.hooks())
    return tuple(sorted(out))


def ddtr_decompose_check(lam, n):
    """Structured report on the Littlewood decomposition restricted to DD^tr.

    Verifies, for lam a conjugate doubled distinct partition:
      * the core is again a DD^tr n-core,
      * component j is the conjugate of component n-2-j,
      * component n-1 is DD^tr, and the middle one is self-conjugate when n
        is even,
      * the weight identity for this family,
      * hooks divisible by n match the scaled quotient hook union.
    """
    if not is_ddtr(lam):
        raise ValueError(f"{lam!r} is not the conjugate of a doubled distinct partition")
    data = decompose(lam, n)
    core, nu = data.core, data.quotient
    checks = {}
    checks["core_ddtr"] = is_ddtr(core) and is_n_core(core, n)
    checks["mirror"] = all(nu[j] == nu[n - 2 - j].conjugate() for j in range(n // 2))
    checks["last_ddtr"] = is_ddtr(nu[n - 1])
    if n % 2 == 0:
        checks["middle_sc"] = is_sc(nu[n // 2 - 1])
    if n % 2 == 1:
        expected = core.weight() + 2 * n * sum(nu[i].weight() for i in range((n - 1) // 2)) \
            + n * nu[n - 1].weight()
    else:
        expected = core.weight() + 2 * n * sum(nu[i].weight() for i in range(n // 2 - 1)) \
            + n * nu[n - 1].weight() + n * nu[n // 2 - 1].weight()
    checks["weight"] = lam.weight() == expected
    checks["hooks"] = hooks_multiple_of(lam, n) == quotient_hooks_scaled(data)
    # mirrored components carry identical hook multisets
    checks["mirror_hooks"] = all(
        nu[j].hooks() == nu[n - 2 - j].hooks() for j in range(n - 1)
    )
    return {"data": data, "checks": checks, "ok": all(checks.values())}


def rim_hook_core(lam, n):
    """n-core by repeated rim-hook removal; independent oracle for decompose."""
    parts = list(lam.parts)
    while True:
        p = Partition(parts)
        target = None
        tr = p.conjugate().parts
        for i, row in enumerate(p.parts, start=1):
            for j in range(1, row + 1):
                if row - j + tr[j - 1] - i + 1 == n:
                    target = (i, j)
                    break
            if target:
                break
        if target is None:
            return p
        i, j = target
        # remove the border strip hanging from (i, j): rows i..l'-1 take the
        # next row's length minus one, row l' = column height of j ends at j-1
        leg_end = tr[j - 1]
        new_parts = list(p.parts)
        for r in range(i, leg_end):
            new_parts[r - 1] = p.parts[r] - 1
        new_parts[leg_end - 1] = j - 1
        parts = new_parts
