"""Finite involution semigroups and their subsets.

Elements are the integers ``0..n-1``.  A semigroup is stored as its Cayley
table (``table[a, b]`` is the product ``ab``) together with the involution as
an index array.  Subsets are immutable membership vectors bound to a parent
semigroup.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import reduce
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .errors import (
    EmptyList,
    FormatError,
    IndexOutOfRange,
    MixedParents,
    NotAssociative,
    StarNotAntihom,
    StarNotInvolutive,
)

JSON_KEYS = {"order", "table", "star", "name", "names"}


class InvolutionSemigroup:
    """A finite semigroup with an involution, given by Cayley table.

    Instances are immutable; build them through :func:`validate` (or
    ``InvolutionSemigroup(table, star)``, which validates as well).
    """

    __slots__ = ("order", "table", "star", "names", "name", "_cache")

    def __init__(self, table, star, names: Sequence[str] | None = None,
                 name: str | None = None, *, check: bool = True):
        table = np.ascontiguousarray(np.asarray(table, dtype=np.int64))
        star = np.ascontiguousarray(np.asarray(star, dtype=np.int64))
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise IndexOutOfRange(f"table must be a non-empty square array, got shape {table.shape}")
        n = table.shape[0]
        if star.shape != (n,):
            raise IndexOutOfRange(f"star must have length {n}, got shape {star.shape}")
        if table.min() < 0 or table.max() >= n:
            bad = tuple(int(i) for i in np.argwhere((table < 0) | (table >= n))[0])
            raise IndexOutOfRange(f"table entry at {bad} is {int(table[bad])}, outside [0, {n})")
        if star.min() < 0 or star.max() >= n:
            bad = int(np.flatnonzero((star < 0) | (star >= n))[0])
            raise IndexOutOfRange(f"star[{bad}] = {int(star[bad])} is outside [0, {n})")
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise IndexOutOfRange(f"names must have length {n}, got {len(names)}")
        self.order = n
        self.table = table.astype(np.int32)
        self.star = star.astype(np.int32)
        self.table.flags.writeable = False
        self.star.flags.writeable = False
        self.names = names
        self.name = name
        self._cache: dict = {}
        if check:
            _check_axioms(self.table, self.star)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<InvolutionSemigroup{label} of order {self.order}>"

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, InvolutionSemigroup):
            return NotImplemented
        return (self.order == other.order and np.array_equal(self.table, other.table)
                and np.array_equal(self.star, other.star))

    def __hash__(self):
        return hash((self.order, self.table.tobytes(), self.star.tobytes()))

    def mult(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.star[a])

    def product(self, *elements: int) -> int:
        return reduce(self.mult, elements)

    def label(self, a: int) -> str:
        return self.names[a] if self.names else str(a)

    def index(self, label: str) -> int:
        """Element index from its display name (or decimal index)."""
        if self.names and label in self.names:
            return self.names.index(label)
        try:
            a = int(label)
        except ValueError:
            raise KeyError(label) from None
        if not 0 <= a < self.order:
            raise IndexOutOfRange(f"element {a} outside [0, {self.order})")
        return a

    def subset(self, elements: Iterable[int | str] = ()) -> "Subset":
        return Subset(self, (self.index(e) if isinstance(e, str) else e for e in elements))

    def empty(self) -> "Subset":
        return Subset(self)

    def full(self) -> "Subset":
        return Subset.from_array(self, np.ones(self.order, dtype=np.uint8))

    def elements(self) -> range:
        return range(self.order)

    def cached(self, key, compute):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    # JSON interchange

    def to_dict(self) -> dict:
        d = {"order": self.order, "table": self.table.tolist(), "star": self.star.tolist()}
        if self.name is not None:
            d["name"] = self.name
        if self.names is not None:
            d["names"] = list(self.names)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "InvolutionSemigroup":
        if not isinstance(d, dict):
            raise FormatError("semigroup JSON must be an object")
        unknown = set(d) - JSON_KEYS
        if unknown:
            raise FormatError(f"unknown keys: {sorted(unknown)}")
        for key in ("order", "table", "star"):
            if key not in d:
                raise FormatError(f"missing key {key!r}")
        n = d["order"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 1:
            raise FormatError("'order' must be a positive integer")
        table, star = d["table"], d["star"]
        if (not isinstance(table, list) or len(table) != n
                or any(not isinstance(row, list) or len(row) != n for row in table)):
            raise FormatError(f"'table' must be {n} arrays of {n} integers")
        if not isinstance(star, list) or len(star) != n:
            raise FormatError(f"'star' must be an array of {n} integers")
        if any(not isinstance(v, int) or isinstance(v, bool) for row in table for v in row) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in star
        ):
            raise FormatError("'table' and 'star' entries must be integers")
        name = d.get("name")
        if name is not None and not isinstance(name, str):
            raise FormatError("'name' must be a string")
        names = d.get("names")
        if names is not None and (not isinstance(names, list) or not all(isinstance(x, str) for x in names)):
            raise FormatError("'names' must be an array of strings")
        return validate(table, star, names, name=name)

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    def save(self, path) -> None:
        Path(path).write_text(self.dumps() + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path) -> "InvolutionSemigroup":
        try:
            d = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc}") from None
        return cls.from_dict(d)


def _check_axioms(table: np.ndarray, star: np.ndarray) -> None:
    triple = kernels.find_nonassociative(table)
    if triple is not None:
        raise NotAssociative(*(int(v) for v in triple))
    bad = np.flatnonzero(star[star] != np.arange(len(star)))
    if len(bad):
        raise StarNotInvolutive(int(bad[0]))
    # star(ab) == star(b) star(a)
    anti = table[star[None, :], star[:, None]]
    bad = np.argwhere(star[table] != anti)
    if len(bad):
        a, b = bad[0]
        raise StarNotAntihom(int(a), int(b))


def validate(table, star, names: Sequence[str] | None = None, *, name: str | None = None) -> InvolutionSemigroup:
    """Check the involution semigroup axioms and return the structure.

    Checks run in the order: index range, associativity, involutivity of
    ``star``, antihomomorphism; the first failure raises with the
    lexicographically first offending element, pair or triple.
    """
    return InvolutionSemigroup(table, star, names, name)


class Subset:
    """An immutable set of elements of a fixed involution semigroup."""

    __slots__ = ("parent", "_bits")

    def __init__(self, parent: InvolutionSemigroup, elements: Iterable[int] = ()):
        arr = np.zeros(parent.order, dtype=np.uint8)
        for e in elements:
            e = int(e)
            if not 0 <= e < parent.order:
                raise IndexOutOfRange(f"element {e} outside [0, {parent.order})")
            arr[e] = 1
        self.parent = parent
        self._bits = arr.tobytes()

    @classmethod
    def from_array(cls, parent: InvolutionSemigroup, arr) -> "Subset":
        self = object.__new__(cls)
        self.parent = parent
        self._bits = np.asarray(arr, dtype=bool).astype(np.uint8).tobytes()
        return self

    @classmethod
    def from_mask(cls, parent: InvolutionSemigroup, mask: int) -> "Subset":
        bits = [(mask >> i) & 1 for i in range(parent.order)]
        return cls.from_array(parent, bits)

    @property
    def array(self) -> np.ndarray:
        """Read-only ``uint8`` membership vector."""
        return np.frombuffer(self._bits, dtype=np.uint8)

    @property
    def mask(self) -> int:
        return int.from_bytes(np.packbits(self.array, bitorder="little").tobytes(), "little")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.array))

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return self._bits.count(1)

    def __bool__(self) -> bool:
        return 1 in self._bits

    def __contains__(self, e) -> bool:
        return 0 <= e < self.parent.order and self._bits[e] == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        return self.parent is other.parent and self._bits == other._bits

    def __hash__(self) -> int:
        return hash(self._bits)

    def _peer(self, other: "Subset") -> np.ndarray:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.parent is not self.parent:
            raise MixedParents("subsets belong to different semigroups")
        return other.array

    def __or__(self, other):
        return Subset.from_array(self.parent, self.array | self._peer(other))

    def __and__(self, other):
        return Subset.from_array(self.parent, self.array & self._peer(other))

    def __sub__(self, other):
        return Subset.from_array(self.parent, self.array & (1 - self._peer(other)))

    def __le__(self, other) -> bool:
        return not (self.array & (1 - self._peer(other))).any()

    def __lt__(self, other) -> bool:
        return self <= other and self != other

    def __ge__(self, other) -> bool:
        return other <= self

    def __gt__(self, other) -> bool:
        return other < self

    def complement(self) -> "Subset":
        return Subset.from_array(self.parent, 1 - self.array)

    def sort_key(self):
        return (len(self), self.indices)

    def labels(self) -> list[str]:
        return [self.parent.label(a) for a in self]

    def __repr__(self):
        return "{" + ", ".join(self.labels()) + "}"


@dataclass(frozen=True)
class ElementTerm:
    """A word in generators, each possibly starred, with its value.

    ``factors`` is a sequence of ``(generator, starred)`` pairs; the word is
    evaluated left to right in the parent semigroup.
    """

    factors: tuple[tuple[int, bool], ...]
    value: int

    def evaluate(self, s: InvolutionSemigroup) -> int:
        vals = [s.inv(g) if starred else g for g, starred in self.factors]
        return s.product(*vals)

    def verify(self, s: InvolutionSemigroup) -> bool:
        return bool(self.factors) and self.evaluate(s) == self.value

    def times(self, other: "ElementTerm", s: InvolutionSemigroup) -> "ElementTerm":
        return ElementTerm(self.factors + other.factors, s.mult(self.value, other.value))

    def starred(self, s: InvolutionSemigroup) -> "ElementTerm":
        flipped = tuple((g, not st) for g, st in reversed(self.factors))
        return ElementTerm(flipped, s.inv(self.value))

    def render(self, s: InvolutionSemigroup) -> str:
        return " ".join(s.label(g) + ("*" if st else "") for g, st in self.factors)


def mult(s: InvolutionSemigroup, a: int, b: int) -> int:
    if not (0 <= a < s.order and 0 <= b < s.order):
        raise IndexOutOfRange(f"elements ({a}, {b}) outside [0, {s.order})")
    return s.mult(a, b)


def complex_product(sets: Sequence[Subset]) -> Subset:
    """The set of all products ``a1 a2 ... ak`` with ``ai`` in ``sets[i]``."""
    if not sets:
        raise EmptyList("complex_product needs at least one set")
    parent = sets[0].parent
    for t in sets[1:]:
        if t.parent is not parent:
            raise MixedParents("subsets belong to different semigroups")
    acc = sets[0].array
    for t in sets[1:]:
        acc = kernels.set_product(parent.table, acc, t.array)
    return Subset.from_array(parent, acc)


def star_set(a: Subset) -> Subset:
    s = a.parent
    out = np.zeros(s.order, dtype=np.uint8)
    out[s.star[a.array.astype(bool)]] = 1
    return Subset.from_array(s, out)


def hermitian_squares(s: InvolutionSemigroup) -> Subset:
    """``{x x* : x in S}``."""
    def compute():
        out = np.zeros(s.order, dtype=np.uint8)
        out[s.table[np.arange(s.order), s.star]] = 1
        return Subset.from_array(s, out)

    return s.cached("H", compute)


def idempotents(s: InvolutionSemigroup) -> Subset:
    return s.cached("E", lambda: Subset.from_array(
        s, s.table[np.arange(s.order), np.arange(s.order)] == np.arange(s.order)))


def square_set(s: InvolutionSemigroup) -> Subset:
    """``S^2``, the image of the multiplication map."""
    def compute():
        out = np.zeros(s.order, dtype=np.uint8)
        out[s.table.ravel()] = 1
        return Subset.from_array(s, out)

    return s.cached("S2", compute)
