"""Brute-force ground truth on finite groups.

Finite topologies are Alexandrov: a sub-base family is fully described by
the map g -> min(g), the intersection of generated sets containing g.
Everything downstream (discreteness, comparison, continuity of the group
operations) is decided from that map. Subsets of the group are bitmasks
over element indices; the identity always has index 0.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path

from . import kernels
from .errors import CarrierMismatch, NotAGroup, SpecMismatch, TooLarge


def mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class FiniteGroup:
    """Validated finite group: Cayley table, inverses, optional
    permutation realization (one-line rows)."""

    __slots__ = ("order", "names", "inverse", "_flat", "_rows", "_index")

    # Above this order the symmetric-group table is left lazy: the flat
    # table is quadratic in the order and composition is cheap anyway.
    EAGER_TABLE_LIMIT = 1000
    FILE_ORDER_LIMIT = 200

    def __init__(self, order: int, flat: array | None, names: list[str],
                 rows: list[tuple[int, ...]] | None):
        self.order = order
        self.names = names
        self._flat = flat
        self._rows = rows
        self._index = {r: i for i, r in enumerate(rows)} if rows is not None else None
        if rows is not None:
            inv = []
            for r in rows:
                invrow = [0] * len(r)
                for x, v in enumerate(r):
                    invrow[v] = x
                inv.append(self._index[tuple(invrow)])
        else:
            inv = [0] * order
            for i in range(order):
                for j in range(order):
                    if self.mul(i, j) == 0:
                        inv[i] = j
                        break
                else:
                    raise NotAGroup(f"element {i} has no inverse")
        self.inverse = inv

    def mul(self, i: int, j: int) -> int:
        if self._flat is not None:
            return self._flat[i * self.order + j]
        a, b = self._rows[i], self._rows[j]
        return self._index[tuple(a[x] for x in b)]

    def conj(self, x: int, b: int) -> int:
        return self.mul(self.mul(x, b), self.inverse[x])

    @property
    def has_table(self) -> bool:
        return self._flat is not None

    @property
    def has_realization(self) -> bool:
        return self._rows is not None

    def row(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    @staticmethod
    def symmetric(n: int) -> "FiniteGroup":
        """S_n on {0..n-1}, elements in lexicographic one-line order."""
        if n > 8:
            raise TooLarge(f"symmetric group degree {n} > 8")
        if n < 1:
            raise ValueError("degree must be positive")
        rows = list(permutations(range(n)))
        order = len(rows)
        names = ["".join(str(v) for v in r) for r in rows]
        flat = None
        if order <= FiniteGroup.EAGER_TABLE_LIMIT:
            index = {r: i for i, r in enumerate(rows)}
            flat = array("i", bytes(4 * order * order))
            for i, a in enumerate(rows):
                base = i * order
                for j, b in enumerate(rows):
                    flat[base + j] = index[tuple(a[x] for x in b)]
        # composition of bijections is associative and the lex-least row is
        # the identity, so only inverse existence is re-checked in __init__;
        # file-loaded tables get the full axiom validation instead
        return FiniteGroup(order, flat, names, rows)

    @staticmethod
    def from_table_text(text: str) -> "FiniteGroup":
        tokens = text.split()
        if not tokens:
            raise NotAGroup("empty table")
        try:
            order = int(tokens[0])
        except ValueError:
            raise NotAGroup(f"bad order line {tokens[0]!r}") from None
        if order < 1:
            raise NotAGroup("order must be positive")
        if order > FiniteGroup.FILE_ORDER_LIMIT:
            raise TooLarge(f"table order {order} > {FiniteGroup.FILE_ORDER_LIMIT}")
        rest = tokens[1:]
        names = [str(i) for i in range(order)]
        if rest and rest[0] == "names:":
            names = rest[1:order + 1]
            if len(names) != order:
                raise NotAGroup("names header shorter than the order")
            rest = rest[order + 1:]
        if len(rest) != order * order:
            raise NotAGroup(f"expected {order * order} entries, got {len(rest)}")
        try:
            entries = [int(t) for t in rest]
        except ValueError as exc:
            raise NotAGroup(f"non-integer entry: {exc}") from None
        if any(e < 0 or e >= order for e in entries):
            raise NotAGroup("entry out of range")
        flat = array("i", entries)
        _validate_table(flat, order)
        return FiniteGroup(order, flat, names, None)

    @staticmethod
    def from_table_file(path: str | Path) -> "FiniteGroup":
        return FiniteGroup.from_table_text(Path(path).read_text())


def _validate_table(flat: array, n: int) -> None:
    for j in range(n):
        if flat[j] != j:
            raise NotAGroup("index 0 must be a left identity")
        if flat[j * n] != j:
            raise NotAGroup("index 0 must be a right identity")
    full = set(range(n))
    for i in range(n):
        if {flat[i * n + j] for j in range(n)} != full:
            raise NotAGroup(f"row {i} is not a permutation")
        if {flat[j * n + i] for j in range(n)} != full:
            raise NotAGroup(f"column {i} is not a permutation")
    for a in range(n):
        for b in range(n):
            ab = flat[a * n + b]
            for c in range(n):
                if flat[ab * n + c] != flat[a * n + flat[b * n + c]]:
                    raise NotAGroup(f"associativity fails at ({a},{b},{c})")


def build_group(source: str) -> FiniteGroup:
    """`sn(n)` / `sn:n` for symmetric groups, `table:path` or a bare path
    for Cayley-table files."""
    src = source.strip()
    if src.startswith("sn"):
        tail = src[2:].strip("():").strip()
        try:
            return FiniteGroup.symmetric(int(tail))
        except ValueError:
            raise NotAGroup(f"bad symmetric-group spec {source!r}") from None
    if src.startswith("table:"):
        return FiniteGroup.from_table_file(src[len("table:"):])
    return FiniteGroup.from_table_file(src)


@dataclass(frozen=True)
class SubbaseSpec:
    kind: str  # tp | zpp | zp | zariski | cent
    max_word_len: int = 2

    def __post_init__(self):
        if self.kind not in ("tp", "zpp", "zp", "zariski", "cent"):
            raise ValueError(f"unknown sub-base kind {self.kind!r}")
        if self.kind == "zariski" and self.max_word_len < 1:
            raise ValueError("word length bound must be at least 1")


def _involutions(g: FiniteGroup) -> list[int]:
    return [b for b in range(g.order) if g.mul(b, b) == 0]


def generate_subbase(group: FiniteGroup, spec: SubbaseSpec) -> tuple[int, ...]:
    """The full deduplicated sub-base family as sorted bitmasks."""
    n = group.order
    masks: set[int] = set()
    if spec.kind == "tp":
        if not group.has_realization:
            raise SpecMismatch("point fibers need a permutation realization")
        degree = len(group.row(0))
        for x in range(degree):
            for y in range(degree):
                m = 0
                for i in range(n):
                    if group.row(i)[x] == y:
                        m |= 1 << i
                masks.add(m)
    elif spec.kind in ("zpp", "zp"):
        invs = _involutions(group)
        for b in invs:
            for a in range(n):
                rhs = group.conj(a, b)
                m = 0
                for x in range(n):
                    if group.conj(x, b) != rhs:
                        m |= 1 << x
                masks.add(m)
        if spec.kind == "zp":
            for b in invs:
                for c in invs:
                    m = 0
                    for x in range(n):
                        d = group.conj(x, c)
                        if group.conj(d, b) != b:
                            m |= 1 << x
                    masks.add(m)
    elif spec.kind == "cent":
        for b in range(n):
            for a in range(n):
                rhs = group.conj(a, b)
                m = 0
                for x in range(n):
                    if group.conj(x, b) == rhs:
                        m |= 1 << x
                masks.add(m)
    else:  # zariski
        if not group.has_table:
            raise TooLarge("word enumeration needs a materialized table")
        masks.update(kernels.word_inequality_masks(
            group._flat, n, spec.max_word_len))
    return tuple(sorted(masks))


@dataclass(frozen=True)
class MinNbhdMap:
    """g -> smallest generated open set containing g."""
    order: int
    masks: tuple[int, ...]

    def bits(self, g: int) -> list[int]:
        return mask_bits(self.masks[g])


def min_neighborhoods(group: FiniteGroup, family) -> MinNbhdMap:
    n = group.order
    full = (1 << n) - 1
    out = []
    for g in range(n):
        acc = full
        probe = 1 << g
        for s in family:
            if s & probe:
                acc &= s
        out.append(acc)
    return MinNbhdMap(n, tuple(out))


def set_is_open(nbhd: MinNbhdMap, mask: int) -> bool:
    """Open in the generated topology iff it absorbs minimal neighborhoods."""
    for g in mask_bits(mask):
        if nbhd.masks[g] & ~mask:
            return False
    return True


def translate_set(group: FiniteGroup, s: int, mask: int, t: int) -> int:
    """{s*x*t : x in mask} as a mask."""
    out = 0
    for x in mask_bits(mask):
        out |= 1 << group.mul(group.mul(s, x), t)
    return out


@dataclass(frozen=True)
class TopologyProps:
    discrete: bool
    t1: bool


def topology_props(nbhd: MinNbhdMap) -> TopologyProps:
    discrete = all(m == 1 << g for g, m in enumerate(nbhd.masks))
    t1 = all(not (m >> h) & 1
             for g, m in enumerate(nbhd.masks)
             for h in range(nbhd.order) if h != g)
    return TopologyProps(discrete, t1)


@dataclass(frozen=True)
class Comparison:
    """verdict: equal | first_coarser | first_finer | incomparable.

    Coarser-than holds iff every minimal neighborhood of the finer map is
    inside the coarser one's; witnesses are elements where that fails.
    """
    verdict: str
    not_coarser_witness: int | None
    not_finer_witness: int | None


def compare(first: MinNbhdMap, second: MinNbhdMap) -> Comparison:
    if first.order != second.order:
        raise CarrierMismatch(first.order, second.order)
    not_coarser = next((g for g in range(first.order)
                        if second.masks[g] & ~first.masks[g]), None)
    not_finer = next((g for g in range(first.order)
                      if first.masks[g] & ~second.masks[g]), None)
    if not_coarser is None and not_finer is None:
        verdict = "equal"
    elif not_coarser is None:
        verdict = "first_coarser"
    elif not_finer is None:
        verdict = "first_finer"
    else:
        verdict = "incomparable"
    return Comparison(verdict, not_coarser, not_finer)


@dataclass(frozen=True)
class ContinuityReport:
    sep_mult: bool
    sep_q: bool
    joint_mult: bool
    joint_q: bool
    conjugators: bool

    @property
    def labels(self) -> tuple[str, ...]:
        out = []
        if self.joint_q:
            out.append("topological")
        if self.joint_mult:
            out.append("paratopological")
        if self.sep_q and self.conjugators:
            out.append("[quasi]topological")
        if self.sep_q:
            out.append("quasitopological")
        if self.sep_mult and self.conjugators:
            out.append("[semi]topological")
        if self.sep_mult:
            out.append("semitopological")
        return tuple(out)

    def diagram_consistent(self) -> bool:
        implications = [
            (self.joint_q, self.joint_mult),
            (self.joint_q, self.sep_q),
            (self.joint_q, self.conjugators),
            (self.joint_mult, self.sep_mult),
            (self.sep_q, self.sep_mult),
        ]
        return all(not a or b for a, b in implications)


def classify_continuity(group: FiniteGroup, nbhd: MinNbhdMap) -> ContinuityReport:
    n = group.order
    mul = group.mul
    inv = group.inverse
    masks = nbhd.masks
    bits = [mask_bits(m) for m in masks]

    def unary(fn) -> bool:
        for x in range(n):
            target = masks[fn(x)]
            for u in bits[x]:
                if not (target >> fn(u)) & 1:
                    return False
        return True

    def joint(op) -> bool:
        for x in range(n):
            for y in range(n):
                target = masks[op(x, y)]
                for u in bits[x]:
                    for v in bits[y]:
                        if not (target >> op(u, v)) & 1:
                            return False
        return True

    sep_mult = all(unary(lambda x, a=a: mul(a, x)) and unary(lambda x, a=a: mul(x, a))
                   for a in range(n))
    sep_q = all(unary(lambda x, a=a: mul(x, inv[a])) and unary(lambda y, a=a: mul(a, inv[y]))
                for a in range(n))
    joint_mult = joint(mul)
    joint_q = joint(lambda u, v: mul(u, inv[v]))
    conjugators = all(unary(lambda x, a=a: mul(mul(x, a), inv[x])) for a in range(n))
    return ContinuityReport(sep_mult, sep_q, joint_mult, joint_q, conjugators)
