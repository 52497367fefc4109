"""Subsets as bit-vectors, translate families, shattering and VC-dimension.

A Subset packs membership into a Python int (bit x set <=> element x in the
set).  Families are either implicit left-translate families {tA : t in G} or
explicit member lists (digraph neighborhoods, the Sisask variant, ad hoc
lists).  ``vc_dim`` is the optimized exact engine, ``vc_dim_naive`` the
independent brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapacityError, EmptyFamilyError
from .groups import FiniteGroup

# Trace masks are capped so restriction() cannot be asked to materialize
# astronomically many patterns.
MAX_PROBE_BITS = 30


@dataclass(frozen=True)
class Subset:
    """Subset of a ground set of ``size`` elements, packed into ``bits``."""

    bits: int
    size: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError(f"bits out of range for ground set of {self.size}")

    @staticmethod
    def empty(size: int) -> "Subset":
        return Subset(0, size)

    @staticmethod
    def full(size: int) -> "Subset":
        return Subset((1 << size) - 1, size)

    @staticmethod
    def from_elements(size: int, elems: Iterable[int]) -> "Subset":
        bits = 0
        for x in elems:
            if not 0 <= x < size:
                raise ValueError(f"element {x} outside [0,{size})")
            bits |= 1 << x
        return Subset(bits, size)

    @staticmethod
    def from_hex(size: int, text: str) -> "Subset":
        """Parse the lowercase-hex wire encoding (LSB = element 0)."""
        bits = int(text, 16)
        if bits >> size:
            raise ValueError(f"hex literal {text!r} does not fit in {size} bits")
        return Subset(bits, size)

    def to_hex(self) -> str:
        """Lowercase hex, zero-padded to ceil(size/4) digits."""
        return format(self.bits, f"0{(self.size + 3) // 4}x")

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.size and bool(self.bits >> x & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def elements(self) -> list[int]:
        return list(self)

    def _match(self, other: "Subset") -> None:
        if self.size != other.size:
            raise ValueError(
                f"ground set mismatch: {self.size} vs {other.size}"
            )

    def union(self, other: "Subset") -> "Subset":
        self._match(other)
        return Subset(self.bits | other.bits, self.size)

    def intersection(self, other: "Subset") -> "Subset":
        self._match(other)
        return Subset(self.bits & other.bits, self.size)

    def difference(self, other: "Subset") -> "Subset":
        self._match(other)
        return Subset(self.bits & ~other.bits, self.size)

    def complement(self) -> "Subset":
        return Subset(~self.bits & ((1 << self.size) - 1), self.size)

    def issubset(self, other: "Subset") -> bool:
        self._match(other)
        return not (self.bits & ~other.bits)

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def __repr__(self) -> str:
        return f"Subset({sorted(self)}, size={self.size})"


@dataclass(frozen=True)
class Trace:
    """Intersection pattern of one family member with an ordered probe set.

    Bit i of ``mask`` refers to the i-th element of the probe set in
    ascending index order.
    """

    mask: int
    width: int


KIND_TRANSLATES = "left-translates"
KIND_NEIGHBORHOODS = "neighborhoods-of-digraph"
KIND_SISASK = "sisask"
KIND_EXPLICIT = "explicit-list"


class TranslateFamily:
    """A family of subsets of one ground set.

    ``left-translates`` families denote {tA : t in G} and materialize members
    lazily; all other kinds carry an explicit member tuple.  Repeated member
    sets are allowed (translates of a set with a nontrivial stabilizer) and
    never affect results.
    """

    def __init__(
        self,
        ground_size: int,
        kind: str,
        group: Optional[FiniteGroup] = None,
        base: Optional[Subset] = None,
        members: Optional[Sequence[Subset]] = None,
    ) -> None:
        self.ground_size = ground_size
        self.kind = kind
        self.group = group
        self.base = base
        if kind == KIND_TRANSLATES:
            if group is None or base is None:
                raise ValueError("left-translates family needs a group and a base set")
            if base.size != group.order:
                raise ValueError(
                    f"base set sized {base.size} does not match group order {group.order}"
                )
            self._members = None
        else:
            if members is None:
                raise ValueError(f"{kind} family needs an explicit member list")
            for m in members:
                if m.size != ground_size:
                    raise ValueError("family members must share one ground set")
            self._members = tuple(members)

    def member_count(self) -> int:
        if self._members is None:
            return self.group.order
        return len(self._members)

    def member_bits(self) -> list[int]:
        """Members as raw bit masks, in family order."""
        if self._members is not None:
            return [m.bits for m in self._members]
        g, a = self.group, self.base
        return [left_translate(g, t, a).bits for t in g.elements()]

    def members(self) -> list[Subset]:
        n = self.ground_size
        return [Subset(b, n) for b in self.member_bits()]

    def member_sets(self) -> frozenset:
        """The family as a set of member sets (duplicates collapsed)."""
        return frozenset(self.member_bits())

    def __repr__(self) -> str:
        return (
            f"TranslateFamily(kind={self.kind!r}, ground={self.ground_size}, "
            f"members={self.member_count()})"
        )


def translate_family(g: FiniteGroup, a: Subset) -> TranslateFamily:
    """The family {tA : t in G} of left translates of a."""
    return TranslateFamily(g.order, KIND_TRANSLATES, group=g, base=a)


def explicit_family(
    ground_size: int, members: Sequence[Subset], kind: str = KIND_EXPLICIT
) -> TranslateFamily:
    return TranslateFamily(ground_size, kind, members=members)


def left_translate(g: FiniteGroup, t: int, a: Subset) -> Subset:
    """The set {mul(t, x) : x in a}; cardinality is preserved."""
    if a.size != g.order:
        raise ValueError(f"set sized {a.size} does not match group order {g.order}")
    if not 0 <= t < g.order:
        raise ValueError(f"translator {t} outside [0,{g.order})")
    bits = 0
    for x in a:
        bits |= 1 << g.mul(t, x)
    return Subset(bits, g.order)


def restriction(f: TranslateFamily, u: Subset) -> set[Trace]:
    """The de-duplicated set of traces {F intersect U : F in family}."""
    if u.size != f.ground_size:
        raise ValueError(
            f"probe sized {u.size} does not match family ground set {f.ground_size}"
        )
    elems = sorted(u)
    k = len(elems)
    if k > MAX_PROBE_BITS:
        raise CapacityError(f"probe has {k} elements, mask cap is {MAX_PROBE_BITS}")
    masks = set()
    for mbits in f.member_bits():
        mask = 0
        for i, x in enumerate(elems):
            mask |= (mbits >> x & 1) << i
        masks.add(mask)
    return {Trace(m, k) for m in masks}


def is_shattered(f: TranslateFamily, u: Subset) -> bool:
    """True iff every one of the 2^|u| patterns is cut out of u."""
    k = len(u)
    if k > MAX_PROBE_BITS:
        raise CapacityError(f"probe has {k} elements, mask cap is {MAX_PROBE_BITS}")
    if (1 << k) > f.member_count():
        return False
    return len(restriction(f, u)) == (1 << k)


def cuts_out(f: TranslateFamily, u: Subset, k: Subset) -> bool:
    """True iff some member F satisfies F intersect U = K."""
    if not k.issubset(u):
        raise ValueError("k must be a subset of u")
    ubits = u.bits
    kbits = k.bits
    return any(mbits & ubits == kbits for mbits in f.member_bits())


def sisask_family(g: FiniteGroup, a: Subset) -> TranslateFamily:
    """The variant family {tA intersect A : t in A A^-1}, deduplicated."""
    if not a.bits:
        raise ValueError("sisask family is undefined for an empty base set")
    diff = set()
    for x in a:
        for y in a:
            diff.add(g.mul(x, g.inv(y)))
    seen = set()
    members = []
    for t in sorted(diff):
        m = left_translate(g, t, a).bits & a.bits
        if m not in seen:
            seen.add(m)
            members.append(Subset(m, g.order))
    return TranslateFamily(g.order, KIND_SISASK, group=g, members=members)


def vc_dim_naive(f: TranslateFamily, order_cap: int = 24) -> int:
    """Ground-truth oracle: exhaustive scan of all 2^N probe sets.

    Independent of the optimized engine; the only shortcut is the counting
    fact that a family with M distinct traces cannot shatter a set larger
    than log2(M).
    """
    n = f.ground_size
    if n > order_cap:
        raise CapacityError(f"naive oracle capped at ground size {order_cap}")
    member_bits = f.member_bits()
    if not member_bits:
        raise EmptyFamilyError("family has no members")
    m = len(member_bits)
    best = 0
    for u in range(1 << n):
        k = u.bit_count()
        if k <= best or (1 << k) > m:
            continue
        traces = {mb & u for mb in member_bits}
        if len(traces) == (1 << k):
            best = k
    return best


def vc_dim(f: TranslateFamily, frontier_cap: int = 1_000_000) -> int:
    """Exact VC-dimension of the family via the optimized level search.

    Raises FrontierCapError when the search frontier exceeds ``frontier_cap``
    rather than degrading silently, and EmptyFamilyError for a family with no
    members.  Agrees exactly with ``vc_dim_naive`` wherever both run.
    """
    from .levelscan import exact_vc_dim

    if f.member_count() == 0:
        raise EmptyFamilyError("family has no members")
    result = exact_vc_dim(f, frontier_cap=frontier_cap)
    # Counting: shattering k elements needs 2^k distinct traces, so k is at
    # most log2(#members); translate families have at most N members, which
    # is the log2 N bound of the ground set.
    limit = min(f.ground_size, f.member_count().bit_length() - 1)
    assert 0 <= result <= max(limit, 0), "counting bound violated"
    return result
