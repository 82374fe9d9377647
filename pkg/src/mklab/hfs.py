"""Canonical hereditarily finite sets.

Every value is an immutable finite set whose members are themselves HfSet
values, kept in canonical form: deduplicated and sorted by a total order.
Canonical form makes extensional equality structural, so two constructions
of the same set compare equal, hash equal, and print identically.

The comparison order is not inclusion. Values compare by cardinality first,
then lexicographically on their member tuples (recursively). It exists to
give every set a unique representation and a well-defined least member,
which the default choice function relies on.

Membership is well-founded by construction: a value can only contain
previously constructed values, so no set is reachable from itself.
"""

from __future__ import annotations

import json
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator

from .errors import (
    EmptyInput,
    EmptyIntersection,
    NonCanonical,
    NotAFunction,
    NotAPair,
    NotARelation,
    OutsideDomain,
    ParseError,
    RankTooLarge,
)

DEFAULT_RANK_CAP = 4


@total_ordering
class HfSet:
    """A hereditarily finite set in canonical form.

    Do not call the constructor with unsorted or duplicated members; build
    values through canon(), hfs(), or the operations in this module.
    """

    __slots__ = ("_members", "_memberset", "_hash")

    def __init__(self, members: tuple["HfSet", ...] = ()):
        self._members = members
        self._memberset = frozenset(members)
        self._hash = hash(members)

    @property
    def members(self) -> tuple["HfSet", ...]:
        return self._members

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator["HfSet"]:
        return iter(self._members)

    def __contains__(self, item) -> bool:
        return item in self._memberset

    def __bool__(self) -> bool:
        return bool(self._members)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, HfSet):
            return NotImplemented
        return self._hash == other._hash and self._members == other._members

    def __lt__(self, other) -> bool:
        # cardinality first, then lexicographic on members; total on canonical values
        if not isinstance(other, HfSet):
            return NotImplemented
        if len(self._members) != len(other._members):
            return len(self._members) < len(other._members)
        return self._members < other._members

    def __repr__(self) -> str:
        return self.braces()

    def braces(self) -> str:
        """Readable rendering: von Neumann numerals as digits, else braces."""
        n = as_int(self)
        if n == 0:
            return "∅"
        if n is not None:
            return str(n)
        return "{" + ", ".join(m.braces() for m in self._members) + "}"


EMPTY = HfSet()


def canon(raw) -> HfSet:
    """Canonicalize an arbitrarily nested finite collection.

    Accepts HfSet values, and lists/tuples/sets/frozensets/generators of
    the same, nested to any depth. Two inputs with the same extension map
    to the identical value.
    """
    if isinstance(raw, HfSet):
        return raw
    if isinstance(raw, (str, bytes)):
        raise TypeError("strings are not set-like; build members explicitly")
    return HfSet(tuple(sorted({canon(m) for m in raw})))


def hfs(*members) -> HfSet:
    """Build a set from explicitly listed members."""
    return canon(members)


def from_int(n: int) -> HfSet:
    """The von Neumann numeral n: 0 = ∅, n+1 = {0, ..., n}."""
    if n < 0:
        raise ValueError("numerals are defined for n >= 0")
    vals: list[HfSet] = []
    current = EMPTY
    for _ in range(n):
        vals.append(current)
        current = HfSet(tuple(vals))  # numerals 0..i-1 are already sorted
    return current


def as_int(x: HfSet) -> int | None:
    """Return n when x is the numeral n, else None."""
    for i, m in enumerate(x.members):
        if as_int(m) != i:
            return None
    return len(x)


def member(x: HfSet, y: HfSet) -> bool:
    """x ∈ y under extensional equality."""
    return x in y


def subclass(x: HfSet, y: HfSet, proper: bool = False) -> bool:
    """x ⊆ y, or x ⊊ y when proper is set."""
    if len(x) > len(y):
        return False
    if proper and len(x) == len(y):
        return False
    return x._memberset <= y._memberset


def union(x: HfSet, y: HfSet) -> HfSet:
    return HfSet(tuple(sorted(x._memberset | y._memberset)))


def intersection(x: HfSet, y: HfSet) -> HfSet:
    return HfSet(tuple(sorted(x._memberset & y._memberset)))


def difference(x: HfSet, y: HfSet) -> HfSet:
    return HfSet(tuple(sorted(x._memberset - y._memberset)))


def set_algebra(kind: str, x: HfSet, y: HfSet) -> HfSet:
    """Dispatch union/intersection/difference by name (CLI convenience)."""
    ops = {"union": union, "intersection": intersection, "difference": difference}
    if kind not in ops:
        raise ValueError(f"unknown set_algebra kind: {kind!r}")
    return ops[kind](x, y)


def iter_subsets(x: HfSet, nonempty: bool = False, proper: bool = False) -> Iterator[HfSet]:
    """All subsets of x, sizes ascending, deterministic order.

    Subsequences of a sorted member tuple are sorted, so each subset is
    built directly without re-canonicalization.
    """
    n = len(x)
    lo = 1 if nonempty else 0
    hi = n if proper else n + 1
    for k in range(lo, hi):
        for combo in combinations(x.members, k):
            yield HfSet(combo)


def power_set(x: HfSet) -> HfSet:
    """The set of all subsets of x."""
    return HfSet(tuple(sorted(iter_subsets(x))))


def singleton(x: HfSet) -> HfSet:
    return HfSet((x,))


def unordered_pair(x: HfSet, y: HfSet) -> HfSet:
    if x == y:
        return HfSet((x,))
    return HfSet((x, y)) if x < y else HfSet((y, x))


def ordered_pair(x: HfSet, y: HfSet) -> HfSet:
    """Encoded pair {{x}, {x, y}}; collapses to {{x}} when x = y."""
    return hfs(singleton(x), unordered_pair(x, y))


def pairing(kind: str, x: HfSet, y: HfSet | None = None) -> HfSet:
    """Dispatch singleton/unordered/ordered pairing by name."""
    if kind == "singleton":
        return singleton(x)
    if y is None:
        raise ValueError(f"pairing kind {kind!r} requires a second argument")
    if kind == "unordered":
        return unordered_pair(x, y)
    if kind == "ordered":
        return ordered_pair(x, y)
    raise ValueError(f"unknown pairing kind: {kind!r}")


def is_pair(z: HfSet) -> bool:
    try:
        decode_pair(z)
        return True
    except NotAPair:
        return False


def decode_pair(z: HfSet) -> tuple[HfSet, HfSet]:
    """Invert the pair encoding, or raise NotAPair."""
    ms = z.members
    if len(ms) == 1:
        inner = ms[0]
        if len(inner) == 1:
            x = inner.members[0]
            return x, x
    elif len(ms) == 2:
        small, big = ms  # sorted by cardinality
        if len(small) == 1 and len(big) == 2:
            x = small.members[0]
            a, b = big.members
            if a == x:
                return x, b
            if b == x:
                return x, a
    raise NotAPair(f"not an encoded ordered pair: {z!r}")


def fst(z: HfSet) -> HfSet:
    return decode_pair(z)[0]


def snd(z: HfSet) -> HfSet:
    return decode_pair(z)[1]


def projection(kind: str, z: HfSet) -> HfSet:
    if kind == "first":
        return fst(z)
    if kind == "second":
        return snd(z)
    raise ValueError(f"unknown projection kind: {kind!r}")


def big_union(x: HfSet) -> HfSet:
    """Union of the members of x; ∅ for x = ∅."""
    acc: set[HfSet] = set()
    for m in x:
        acc |= m._memberset
    return HfSet(tuple(sorted(acc)))


def big_intersection(x: HfSet) -> HfSet:
    """Intersection of the members of x; undefined (error) for x = ∅."""
    if len(x) == 0:
        raise EmptyIntersection("intersection over ∅ is the universe, not a set")
    ms = x.members
    acc = set(ms[0]._memberset)
    for m in ms[1:]:
        acc &= m._memberset
    return HfSet(tuple(sorted(acc)))


def aggregate(kind: str, x: HfSet) -> HfSet:
    if kind == "big_union":
        return big_union(x)
    if kind == "big_intersection":
        return big_intersection(x)
    raise ValueError(f"unknown aggregate kind: {kind!r}")


def cartesian(x: HfSet, y: HfSet) -> HfSet:
    """{⟨a, b⟩ : a ∈ x, b ∈ y}."""
    return canon(ordered_pair(a, b) for a in x for b in y)


def relation_pairs(f: HfSet) -> list[tuple[HfSet, HfSet]]:
    """Decode every member as a pair, or raise NotARelation."""
    out = []
    for m in f:
        try:
            out.append(decode_pair(m))
        except NotAPair:
            raise NotARelation(f"member {m!r} is not an encoded pair") from None
    return out


def is_function(f: HfSet) -> bool:
    """True when f is a set of pairs with functional first coordinates."""
    seen: dict[HfSet, HfSet] = {}
    for m in f:
        try:
            a, b = decode_pair(m)
        except NotAPair:
            return False
        if a in seen and seen[a] != b:
            return False
        seen[a] = b
    return True


def fn_domain(f: HfSet) -> HfSet:
    return canon(a for a, _ in relation_pairs(f))


def fn_range(f: HfSet) -> HfSet:
    return canon(b for _, b in relation_pairs(f))


def fn_value(f: HfSet, x: HfSet) -> HfSet:
    """The value of f at x, with the usual failure modes."""
    images = {b for a, b in relation_pairs(f) if a == x}
    if len(images) > 1:
        raise NotAFunction(f"{x!r} has {len(images)} distinct images")
    if not images:
        raise OutsideDomain(f"{x!r} is not in the domain")
    return next(iter(images))


def function_suite(f: HfSet) -> dict:
    """Bundle of the function views of f (CLI convenience)."""
    ok = is_function(f)
    out = {"is_function": ok}
    try:
        out["domain"] = fn_domain(f)
        out["range"] = fn_range(f)
    except NotARelation:
        pass
    return out


def regularity_witness(x: HfSet) -> HfSet:
    """Some y ∈ x with x ∩ y = ∅; exists for every nonempty value."""
    if len(x) == 0:
        raise EmptyInput("no witness in ∅")
    for y in x.members:  # canonical order makes the witness deterministic
        if not (x._memberset & y._memberset):
            return y
    raise AssertionError("membership is well-founded; unreachable")


def rank_universe(k: int, cap: int = DEFAULT_RANK_CAP) -> HfSet:
    """Stage k of the cumulative hierarchy: V_0 = ∅, V_{i+1} = pow(V_i)."""
    if k < 0:
        raise ValueError("rank must be >= 0")
    if k > cap:
        raise RankTooLarge(f"rank {k} exceeds cap {cap}")
    v = EMPTY
    for _ in range(k):
        v = power_set(v)
    return v


# -- JSON encoding ------------------------------------------------------------
#
# An HfSet is a nested array; canonical form lists members deduplicated and
# sorted, e.g. the numeral 2 is [[],[[]]]. Default parsing normalizes, the
# strict flag rejects non-canonical input.

def to_obj(x: HfSet) -> list:
    return [to_obj(m) for m in x]


def to_json(x: HfSet) -> str:
    return json.dumps(to_obj(x), separators=(",", ":"))


def from_obj(obj, strict: bool = False) -> HfSet:
    if not isinstance(obj, list):
        raise ParseError(f"expected an array, got {type(obj).__name__}")
    kids = [from_obj(o, strict) for o in obj]
    value = HfSet(tuple(sorted(set(kids))))
    if strict and list(value.members) != kids:
        raise NonCanonical(f"members not deduplicated+sorted: {json.dumps(obj)}")
    return value


def from_json(text: str, strict: bool = False) -> HfSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(str(e)) from None
    return from_obj(obj, strict=strict)
