"""Finite groups with dense 0-based element indices.

Every group exposes ``order``, ``identity``, ``mul(a, b)``, ``inv(a)`` and a
stable ``descriptor`` string.  Structured families (cyclic, dihedral, direct
products) compute products on the fly; only groups imported from an explicit
Cayley table store the full N x N table.
"""

from __future__ import annotations

import hashlib
from typing import Optional, Sequence

import numpy as np

from .errors import CapacityError, GroupValidationError

# Bit-vector machinery elsewhere sizes to the group order; fail loudly beyond.
MAX_ORDER = 1 << 20

# Exhaustive law checking is affordable up to here; larger groups are sampled.
EXHAUSTIVE_LIMIT = 64
SAMPLED_TRIPLES = 100_000


class FiniteGroup:
    """Base interface; element indices run over ``range(order)``."""

    order: int
    identity: int
    descriptor: str

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        """Commutativity, exhaustive for small orders and sampled beyond."""
        cached = getattr(self, "_abelian", None)
        if cached is None:
            cached = _commutativity_check(self)
            self._abelian = cached
        return cached

    def mul_perm_table(self) -> np.ndarray:
        """uint32 matrix P with P[t, x] = mul(inv(t), x), cached.

        Row t is the permutation sending x to the element whose membership in
        tA decides x (x is in tA iff P[t, x] is in A).  The VC engine and the
        cover routines use it to build all translate bit-rows in one gather.
        """
        cached = getattr(self, "_perm_table", None)
        if cached is None:
            cached = self._build_perm_table()
            self._perm_table = cached
        return cached

    def _build_perm_table(self) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.uint32)
        for t in range(n):
            ti = self.inv(t)
            table[t] = [self.mul(ti, x) for x in range(n)]
        return table

    def right_perm_table(self) -> np.ndarray:
        """uint32 matrix Q with Q[t, y] = mul(y, inv(t)), cached.

        Row t decides right translates: y is in S*t iff Q[t, y] is in S.
        """
        cached = getattr(self, "_right_perm_table", None)
        if cached is None:
            cached = self._build_right_perm_table()
            self._right_perm_table = cached
        return cached

    def _build_right_perm_table(self) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.uint32)
        for t in range(n):
            ti = self.inv(t)
            table[t] = [self.mul(y, ti) for y in range(n)]
        return table

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.descriptor} order={self.order}>"


class CyclicGroup(FiniteGroup):
    """Z/nZ under addition; element i is the residue i."""

    def __init__(self, n: int) -> None:
        self.order = n
        self.identity = 0
        self.descriptor = f"C{n}"
        self._abelian = True

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.order

    def inv(self, a: int) -> int:
        return (-a) % self.order

    def _build_perm_table(self) -> np.ndarray:
        n = self.order
        x = np.arange(n, dtype=np.int64)
        return ((x[None, :] - x[:, None]) % n).astype(np.uint32)

    def _build_right_perm_table(self) -> np.ndarray:
        return self._build_perm_table()


class DihedralGroup(FiniteGroup):
    """D_n of order 2n: indices 0..n-1 are r^i, indices n..2n-1 are s*r^i."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.order = 2 * n
        self.identity = 0
        self.descriptor = f"D{n}"
        self._abelian = False

    # s^f1 r^i1 * s^f2 r^i2 = s^(f1^f2) r^(i2 + (-1)^f2 i1), from r s = s r^-1.
    def mul(self, a: int, b: int) -> int:
        n = self.n
        f1, i1 = divmod(a, n)
        f2, i2 = divmod(b, n)
        i = (i2 - i1) % n if f2 else (i1 + i2) % n
        return (f1 ^ f2) * n + i

    def inv(self, a: int) -> int:
        n = self.n
        f, i = divmod(a, n)
        return a if f else (-i) % n


class DirectProductGroup(FiniteGroup):
    """Componentwise product; index a*|h| + b encodes the pair (a, b)."""

    def __init__(self, g: FiniteGroup, h: FiniteGroup) -> None:
        if g.order * h.order > MAX_ORDER:
            raise CapacityError(
                f"product order {g.order * h.order} exceeds cap {MAX_ORDER}"
            )
        self.g = g
        self.h = h
        self.order = g.order * h.order
        self.identity = g.identity * h.order + h.identity
        self.descriptor = f"{g.descriptor}x{h.descriptor}"

    def mul(self, a: int, b: int) -> int:
        m = self.h.order
        a1, a2 = divmod(a, m)
        b1, b2 = divmod(b, m)
        return self.g.mul(a1, b1) * m + self.h.mul(a2, b2)

    def inv(self, a: int) -> int:
        m = self.h.order
        a1, a2 = divmod(a, m)
        return self.g.inv(a1) * m + self.h.inv(a2)

    def is_abelian(self) -> bool:
        return self.g.is_abelian() and self.h.is_abelian()


class TableGroup(FiniteGroup):
    """Group defined by a validated, stored multiplication table."""

    def __init__(self, table: np.ndarray, descriptor: str) -> None:
        self.table = table
        self.order = table.shape[0]
        self.descriptor = descriptor
        self.identity = _find_identity(table)
        self._inv = _find_inverses(table, self.identity)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self._inv[a])

    def _build_perm_table(self) -> np.ndarray:
        return self.table[self._inv].astype(np.uint32)


def make_cyclic(n: int) -> CyclicGroup:
    """Z/nZ; identity 0, inv(i) = (n - i) mod n."""
    if n < 1:
        raise ValueError(f"cyclic group order must be >= 1, got {n}")
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds cap {MAX_ORDER}")
    return CyclicGroup(n)


def make_dihedral(n: int) -> DihedralGroup:
    """D_n (order 2n) with the standard presentation, n >= 3."""
    if n < 3:
        raise ValueError(f"dihedral parameter must be >= 3, got {n}")
    if 2 * n > MAX_ORDER:
        raise CapacityError(f"order {2 * n} exceeds cap {MAX_ORDER}")
    return DihedralGroup(n)


def make_direct_product(g: FiniteGroup, h: FiniteGroup) -> DirectProductGroup:
    """Direct product g x h with componentwise multiplication."""
    return DirectProductGroup(g, h)


def from_cayley_table(table: Sequence[Sequence[int]]) -> TableGroup:
    """Build a group from an N x N table, validating every group axiom.

    Raises GroupValidationError naming the first violated axiom together with
    a witness tuple of indices.
    """
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise GroupValidationError(
            "shape", (), f"table must be square and nonempty, got {arr.shape}"
        )
    n = arr.shape[0]
    if n > MAX_ORDER:
        raise CapacityError(f"order {n} exceeds cap {MAX_ORDER}")
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise GroupValidationError(
            "entry-range",
            (int(bad[0]), int(bad[1])),
            f"entry at {tuple(bad)} is {arr[bad[0], bad[1]]}, outside [0,{n})",
        )
    _check_latin_square(arr)
    identity = _find_identity(arr)
    _find_inverses(arr, identity)
    _check_associativity(arr)
    digest = hashlib.sha256(arr.astype("<i8").tobytes()).hexdigest()[:12]
    return TableGroup(arr, f"table:{digest}")


def read_cayley_table(path) -> TableGroup:
    """Load the text format: line 1 is N, then N lines of N indices."""
    with open(path, "r", encoding="utf-8") as fh:
        tokens = fh.read().split()
    if not tokens:
        raise GroupValidationError("shape", (), f"{path}: empty file")
    n = int(tokens[0])
    if len(tokens) != 1 + n * n:
        raise GroupValidationError(
            "shape", (), f"{path}: expected {n * n} entries, got {len(tokens) - 1}"
        )
    rows = [[int(v) for v in tokens[1 + i * n : 1 + (i + 1) * n]] for i in range(n)]
    return from_cayley_table(rows)


def write_cayley_table(g: FiniteGroup, path) -> None:
    """Write the table file format for any group."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{g.order}\n")
        for a in g.elements():
            fh.write(" ".join(str(g.mul(a, b)) for b in g.elements()) + "\n")


def _find_identity(arr: np.ndarray) -> int:
    n = arr.shape[0]
    want = np.arange(n)
    for e in range(n):
        if np.array_equal(arr[e], want) and np.array_equal(arr[:, e], want):
            return e
    raise GroupValidationError("identity", (), "table has no two-sided identity")


def _find_inverses(arr: np.ndarray, identity: int) -> np.ndarray:
    n = arr.shape[0]
    inv = np.full(n, -1, dtype=np.int64)
    for a in range(n):
        hits = np.flatnonzero(arr[a] == identity)
        for b in hits:
            if arr[b, a] == identity:
                inv[a] = b
                break
        if inv[a] < 0:
            raise GroupValidationError(
                "inverse", (a,), f"element {a} has no two-sided inverse"
            )
    return inv


def _check_latin_square(arr: np.ndarray) -> None:
    n = arr.shape[0]
    want = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(arr[i]), want):
            raise GroupValidationError(
                "latin-square", (i,), f"row {i} is not a permutation of [0,{n})"
            )
        if not np.array_equal(np.sort(arr[:, i]), want):
            raise GroupValidationError(
                "latin-square", (i,), f"column {i} is not a permutation of [0,{n})"
            )


def _check_associativity(arr: np.ndarray) -> None:
    # (a*b)*c == a*(b*c) for all triples, chunked over a to bound memory.
    n = arr.shape[0]
    for a in range(n):
        left = arr[arr[a], :]
        right = arr[a, arr]
        if not np.array_equal(left, right):
            b, c = np.argwhere(left != right)[0]
            raise GroupValidationError(
                "associativity",
                (a, int(b), int(c)),
                f"(a*b)*c != a*(b*c) for (a,b,c)=({a},{b},{c})",
            )


def _commutativity_check(g: FiniteGroup, seed: int = 0) -> bool:
    n = g.order
    if n <= EXHAUSTIVE_LIMIT:
        return all(
            g.mul(a, b) == g.mul(b, a) for a in range(n) for b in range(a + 1, n)
        )
    rng = np.random.default_rng(seed)
    pairs = rng.integers(0, n, size=(SAMPLED_TRIPLES, 2))
    return all(g.mul(int(a), int(b)) == g.mul(int(b), int(a)) for a, b in pairs)


def validate_group(g: FiniteGroup, seed: int = 0) -> None:
    """Check all four group axioms; exhaustive for order <= 64, sampled beyond.

    Used by tests against every constructor; raises GroupValidationError on
    the first violation.
    """
    n = g.order
    e = g.identity
    for a in g.elements():
        if g.mul(e, a) != a or g.mul(a, e) != a:
            raise GroupValidationError("identity", (a,), f"identity law fails at {a}")
        if g.mul(a, g.inv(a)) != e or g.mul(g.inv(a), a) != e:
            raise GroupValidationError("inverse", (a,), f"inverse law fails at {a}")
    if n <= EXHAUSTIVE_LIMIT:
        triples = (
            (a, b, c) for a in range(n) for b in range(n) for c in range(n)
        )
    else:
        rng = np.random.default_rng(seed)
        triples = map(tuple, rng.integers(0, n, size=(SAMPLED_TRIPLES, 3)))
    for a, b, c in triples:
        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)):
            raise GroupValidationError(
                "associativity", (a, b, c), f"associativity fails at ({a},{b},{c})"
            )
    # Latin square: rows and columns are permutations.
    if n <= EXHAUSTIVE_LIMIT:
        rows = range(n)
    else:
        rng = np.random.default_rng(seed + 1)
        rows = (int(v) for v in rng.integers(0, n, size=64))
    full = set(range(n))
    for a in rows:
        if {g.mul(a, b) for b in range(n)} != full:
            raise GroupValidationError("latin-square", (a,), f"row {a} not a permutation")
        if {g.mul(b, a) for b in range(n)} != full:
            raise GroupValidationError("latin-square", (a,), f"column {a} not a permutation")


_FAMILY_PREFIXES = ("C", "D")


def group_from_descriptor(text: str) -> FiniteGroup:
    """Parse descriptors like C12, D5, C3xC4, D4xC2 or table:<path>."""
    text = text.strip()
    if text.startswith("table:"):
        return read_cayley_table(text[len("table:") :])
    parts = text.split("x")
    factors = []
    for part in parts:
        if len(part) < 2 or part[0] not in _FAMILY_PREFIXES or not part[1:].isdigit():
            raise ValueError(f"unrecognized group descriptor {text!r}")
        k = int(part[1:])
        factors.append(make_cyclic(k) if part[0] == "C" else make_dihedral(k))
    g = factors[0]
    for h in factors[1:]:
        g = make_direct_product(g, h)
    return g


def group_family(family: str, n: int) -> FiniteGroup:
    """Build the order-n member of a named family: 'C' -> C_n, 'D' -> D_(n/2)."""
    if family == "C":
        return make_cyclic(n)
    if family == "D":
        if n % 2 or n < 6:
            raise ValueError(f"dihedral family needs even order >= 6, got {n}")
        return make_dihedral(n // 2)
    raise ValueError(f"unknown group family {family!r}")
