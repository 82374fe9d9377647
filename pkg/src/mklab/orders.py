"""Order-theoretic predicates over encoded relations and families.

A binary relation is an HfSet of encoded pairs together with a carrier.
Families are plain HfSet values read as sets of sets. Predicates come in
two layers: a witness function returning None on success or a small dict
describing the violation, and a boolean wrapper. The CLI prints witnesses
as counterexamples.

Empty-input conventions are strict: maximal/minimal member and element
raise on an empty family or carrier instead of being vacuously true, so a
regression can never hide behind vacuity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    EmptyCarrier,
    EmptyFamily,
    NotAPartialOrder,
    NotARelation,
    NotAWellOrder,
    PreconditionFailed,
)
from .hfs import (
    EMPTY,
    HfSet,
    big_union,
    canon,
    decode_pair,
    difference,
    fn_domain,
    fn_range,
    fn_value,
    intersection,
    is_function,
    is_pair,
    iter_subsets,
    ordered_pair,
    power_set,
    singleton,
    subclass,
    union,
)


@dataclass(frozen=True)
class BinRel:
    """A binary relation: a set of encoded pairs plus a carrier set."""

    pairs: HfSet
    carrier: HfSet
    _rel: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        decoded = frozenset()
        try:
            decoded = frozenset(decode_pair(m) for m in self.pairs)
        except Exception:
            raise NotARelation(f"member of {self.pairs!r} is not an encoded pair") from None
        object.__setattr__(self, "_rel", decoded)

    def relates(self, a: HfSet, b: HfSet) -> bool:
        return (a, b) in self._rel

    def tuples(self) -> list[tuple[HfSet, HfSet]]:
        return sorted(self._rel)

    def restrict(self, a: HfSet) -> "BinRel":
        """The relation intersected with a × a, carried by a."""
        kept = canon(ordered_pair(x, y) for (x, y) in self._rel if x in a and y in a)
        return BinRel(kept, a)

    @classmethod
    def from_tuples(cls, carrier: HfSet, tuples) -> "BinRel":
        return cls(canon(ordered_pair(a, b) for a, b in tuples), carrier)


def identity_rel(x: HfSet) -> BinRel:
    return BinRel.from_tuples(x, ((a, a) for a in x))


def subset_order(family: HfSet) -> BinRel:
    """Inclusion as a relation on the members of a family."""
    return BinRel.from_tuples(
        family, ((a, b) for a in family for b in family if subclass(a, b))
    )


def canonical_le(x: HfSet) -> BinRel:
    """The canonical total order of the set engine, as a relation on x."""
    return BinRel.from_tuples(x, ((a, b) for a in x for b in x if a == b or a < b))


def numeric_le(n: int) -> BinRel:
    from .hfs import from_int

    return canonical_le(from_int(n))


def rrelation(x: HfSet, le: BinRel, y: HfSet) -> bool:
    """x is le-related to y."""
    return le.relates(x, y)


# -- choice functions ---------------------------------------------------------

def choice_function_witness(eps: HfSet, x: HfSet):
    if not is_function(eps):
        return {"clause": "function", "value": eps}
    dom_expected = difference(power_set(x), singleton(EMPTY))
    dom = fn_domain(eps)
    if dom != dom_expected:
        return {"clause": "domain", "domain": dom, "expected": dom_expected}
    if not subclass(fn_range(eps), x):
        return {"clause": "range", "range": fn_range(eps)}
    for a in dom:
        if fn_value(eps, a) not in a:
            return {"clause": "selection", "argument": a, "value": fn_value(eps, a)}
    return None


def is_choice_function(eps: HfSet, x: HfSet) -> bool:
    """eps is a function on pow(x) minus {∅} picking a member of each argument."""
    return choice_function_witness(eps, x) is None


# -- families -----------------------------------------------------------------

def extreme_member_witness(kind: str, f_member: HfSet, f: HfSet):
    if kind not in ("max", "min"):
        raise ValueError(f"unknown kind: {kind!r}")
    if len(f) == 0:
        raise EmptyFamily("no maximal or minimal member of ∅")
    if f_member not in f:
        return {"clause": "membership", "value": f_member}
    for e in f:
        if kind == "max" and subclass(f_member, e, proper=True):
            return {"clause": "dominated", "by": e}
        if kind == "min" and subclass(e, f_member, proper=True):
            return {"clause": "dominated", "by": e}
    return None


def extreme_member(kind: str, f_member: HfSet, f: HfSet) -> bool:
    """No member of f properly contains (max) / is contained in (min) it."""
    return extreme_member_witness(kind, f_member, f) is None


def nest_witness(n: HfSet):
    ms = n.members
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if not subclass(a, b) and not subclass(b, a):
                return {"clause": "incomparable", "pair": [a, b]}
    return None


def is_nest(n: HfSet) -> bool:
    """Members are pairwise comparable under inclusion."""
    return nest_witness(n) is None


def iter_nests(members):
    """All inclusion-chains among the given sets, as tuples, by extension.

    Backtracking over the canonically sorted member list; output-sensitive,
    so cheap even when the family has exponentially few chains.
    """
    ms = sorted(set(members))

    def extend(prefix, start):
        yield tuple(prefix)
        for i in range(start, len(ms)):
            c = ms[i]
            if all(subclass(c, p) or subclass(p, c) for p in prefix):
                prefix.append(c)
                yield from extend(prefix, i + 1)
                prefix.pop()

    yield from extend([], 0)


def nests_in(family: HfSet) -> HfSet:
    """The family of all nests contained in the given family."""
    return canon(canon(chain) for chain in iter_nests(family.members))


def finite_character_witness(f: HfSet, u=None):
    fset = set(f)
    # condition 1: members keep all their subsets inside f
    for big in f:
        for z in iter_subsets(big):
            if z not in fset:
                return {"clause": "subset-closure", "member": big, "subset": z}
    # condition 2: a set all of whose subsets lie in f lies in f itself.
    # Quantified over subsets of ⋃f joined with the ambient carrier. The
    # scan is literal; z = F sits in the candidate pool, so in a finite
    # model the hypothesis can only hold when the conclusion already does.
    pool = big_union(f)
    if u is not None:
        pool = union(pool, u.carrier)
    for cand in iter_subsets(pool):
        if cand in fset:
            continue
        if all(z in fset for z in iter_subsets(cand)):
            return {"clause": "completion", "candidate": cand}
    return None


def is_finite_character(f: HfSet, u=None) -> bool:
    """Closed under subsets, and complete for sets whose subsets all belong."""
    return finite_character_witness(f, u) is None


def finite_char_properties(f: HfSet) -> bool:
    """Exhaustively confirm the two working consequences of finite character.

    For nonempty finite-character f: members absorb their subsets, and the
    union of every nest inside f is again a member.
    """
    if len(f) == 0 or not is_finite_character(f):
        raise PreconditionFailed("requires a nonempty family of finite character")
    fset = set(f)
    for a in f:
        for b in iter_subsets(a):
            if b not in fset:
                return False
    for chain in iter_nests(f.members):
        if big_union(canon(chain)) not in fset:
            return False
    return True


# -- orders on a carrier --------------------------------------------------------

def partial_order_report(le: BinRel, x: HfSet) -> dict:
    """Per-clause breakdown used by the boolean predicate and the CLI."""
    ok_subset = all(a in x and b in x for a, b in le._rel)
    ok_refl = all(le.relates(a, a) for a in x)
    ok_anti = all(
        not (le.relates(a, b) and le.relates(b, a)) or a == b for a in x for b in x
    )
    ok_trans = True
    for a, b in le._rel:
        if not ok_trans:
            break
        for c in x:
            if le.relates(b, c) and not le.relates(a, c):
                ok_trans = False
                break
    return {
        "subset": ok_subset,
        "reflexive": ok_refl,
        "antisymmetric": ok_anti,
        "transitive": ok_trans,
    }


def partial_order_witness(le: BinRel, x: HfSet):
    for a, b in le.tuples():
        if a not in x or b not in x:
            return {"clause": "subset", "pair": [a, b]}
    for a in x:
        if not le.relates(a, a):
            return {"clause": "reflexive", "element": a}
    for a, b in le.tuples():
        if a != b and le.relates(b, a):
            return {"clause": "antisymmetric", "pair": [a, b]}
    for a, b in le.tuples():
        for c in x:
            if le.relates(b, c) and not le.relates(a, c):
                return {"clause": "transitive", "triple": [a, b, c]}
    return None


def is_partial_order(le: BinRel, x: HfSet) -> bool:
    """Reflexive, antisymmetric, transitive, and contained in x × x."""
    return partial_order_witness(le, x) is None


def bound_witness(kind: str, x_elem: HfSet, a: HfSet, x: HfSet, le: BinRel):
    if kind not in ("upper", "lower"):
        raise ValueError(f"unknown kind: {kind!r}")
    if not is_partial_order(le, x) or len(x) == 0:
        raise NotAPartialOrder("requires a partial order on a nonempty carrier")
    if x_elem not in x:
        return {"clause": "membership", "value": x_elem}
    if not subclass(a, x):
        return {"clause": "subset", "value": a}
    for elem in a:
        related = le.relates(elem, x_elem) if kind == "upper" else le.relates(x_elem, elem)
        if not related:
            return {"clause": "unrelated", "element": elem}
    return None


def is_bound(kind: str, x_elem: HfSet, a: HfSet, x: HfSet, le: BinRel) -> bool:
    """x_elem bounds every element of a from above (upper) or below (lower)."""
    return bound_witness(kind, x_elem, a, x, le) is None


def extreme_element_witness(kind: str, x_elem: HfSet, x: HfSet, le: BinRel):
    if kind not in ("max", "min"):
        raise ValueError(f"unknown kind: {kind!r}")
    if len(x) == 0:
        raise EmptyCarrier("no maximal or minimal element of ∅")
    if x_elem not in x:
        return {"clause": "membership", "value": x_elem}
    for y in x:
        if y == x_elem:
            continue
        if kind == "max" and le.relates(x_elem, y):
            return {"clause": "dominated", "by": y}
        if kind == "min" and le.relates(y, x_elem):
            return {"clause": "dominated", "by": y}
    return None


def extreme_element(kind: str, x_elem: HfSet, x: HfSet, le: BinRel) -> bool:
    """Nothing in x sits strictly above (max) / below (min) the element."""
    return extreme_element_witness(kind, x_elem, x, le) is None


def total_order_witness(le: BinRel, x: HfSet):
    w = partial_order_witness(le, x)
    if w is not None:
        return w
    ms = x.members
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if not le.relates(a, b) and not le.relates(b, a):
                return {"clause": "connex", "pair": [a, b]}
    return None


def is_total_order(le: BinRel, x: HfSet) -> bool:
    """A partial order under which all carrier elements are comparable."""
    return total_order_witness(le, x) is None


def chain_witness(a: HfSet, x: HfSet, le: BinRel):
    if not is_partial_order(le, x):
        raise NotAPartialOrder("chains are defined relative to a partial order")
    if not subclass(a, x):
        return {"clause": "subset", "value": a}
    if len(a) == 0:
        return {"clause": "empty"}
    return total_order_witness(le.restrict(a), a)


def is_chain(a: HfSet, x: HfSet, le: BinRel) -> bool:
    """a is a nonempty subset of x totally ordered by the restriction of le."""
    return chain_witness(a, x, le) is None


def well_order_witness(le: BinRel, x: HfSet):
    w = total_order_witness(le, x)
    if w is not None:
        return w
    for a in iter_subsets(x, nonempty=True):
        if not any(extreme_element("min", z, a, le) for z in a):
            return {"clause": "least", "subset": a}
    return None


def is_well_order(le: BinRel, x: HfSet) -> bool:
    """Total order with a least element in every nonempty subset of x."""
    return well_order_witness(le, x) is None


def initial_segment_witness(y: HfSet, x: HfSet, le: BinRel):
    if not is_well_order(le, x):
        raise NotAWellOrder("initial segments are defined inside a well order")
    if not subclass(y, x):
        return {"clause": "subset", "value": y}
    for u in x:
        for v in y:
            if le.relates(u, v) and u not in y:
                return {"clause": "downward", "pair": [u, v]}
    return None


def is_initial_segment(y: HfSet, x: HfSet, le: BinRel) -> bool:
    """y is a downward-closed subset of the well-ordered carrier x."""
    return initial_segment_witness(y, x, le) is None
