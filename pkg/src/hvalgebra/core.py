"""Basis symbols, sparse elements, and the Lie brackets.

The algebra has basis {L(n), I(n) : n integer} together with three
central symbols C1, C2, C3, and bracket (for integer indices p, q)

    [L(p), L(q)] = (p - q) L(p+q) + (p^3 - p)/12 * delta(p, -q) C1
    [L(p), I(q)] = -q I(p+q) - (p^2 + p) * delta(p, -q) C2
    [I(p), I(q)] = p * delta(p, -q) C3

with C1, C2, C3 killing everything.  AlgebraKind.W00 is the quotient by
the span of C1, C2, C3: the same brackets with every C-term dropped (its
elements must not touch the central symbols at all).
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .errors import IndexOverflow
from .scalars import Scalar, coefficient_text

_INT64_MAX = 2**63 - 1
_INT64_MIN = -(2**63)

_FAMILY_RANK = {"L": 0, "I": 1, "C": 2}


class BasisKey:
    """One basis symbol: L(n), I(n), or a central C1/C2/C3."""

    __slots__ = ("family", "index", "_sort")

    def __init__(self, family: str, index: int):
        if family not in _FAMILY_RANK:
            raise ValueError(f"unknown basis family {family!r}")
        if family == "C":
            if index not in (1, 2, 3):
                raise ValueError("central symbols are C1, C2 and C3")
        elif not _INT64_MIN <= index <= _INT64_MAX:
            raise IndexOverflow(f"index {index} outside the signed 64-bit range")
        self.family = family
        self.index = index
        self._sort = (_FAMILY_RANK[family], index)

    @property
    def is_central(self) -> bool:
        return self.family == "C"

    @property
    def degree(self) -> int:
        """Grading degree: the index for L/I symbols, zero for centrals."""
        return 0 if self.family == "C" else self.index

    def __eq__(self, other):
        return isinstance(other, BasisKey) and self._sort == other._sort

    def __lt__(self, other):
        return self._sort < other._sort

    def __le__(self, other):
        return self._sort <= other._sort

    def __hash__(self):
        return hash(self._sort)

    def __str__(self):
        if self.family == "C":
            return f"C{self.index}"
        return f"{self.family}({self.index})"

    __repr__ = __str__


def L(n: int) -> BasisKey:
    return BasisKey("L", n)


def I(n: int) -> BasisKey:
    return BasisKey("I", n)


C1 = BasisKey("C", 1)
C2 = BasisKey("C", 2)
C3 = BasisKey("C", 3)
CENTRAL_KEYS = (C1, C2, C3)


class Element:
    """A finitely supported exact linear combination of basis symbols.

    Immutable by convention; zero coefficients are never stored, so equal
    elements have equal coefficient dicts and the zero element is unique.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for key, value in coeffs.items():
                scalar = Scalar.coerce(value)
                if scalar:
                    clean[key] = scalar
        self._coeffs = clean

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def basis(cls, key: BasisKey, coeff=1) -> "Element":
        return cls({key: coeff})

    # -- inspection ------------------------------------------------------

    def items(self):
        """Coefficient pairs in the canonical key order."""
        return sorted(self._coeffs.items(), key=lambda kv: kv[0]._sort)

    def support(self):
        return sorted(self._coeffs, key=lambda k: k._sort)

    def __getitem__(self, key: BasisKey) -> Scalar:
        return self._coeffs.get(key, Scalar(0))

    def __contains__(self, key: BasisKey) -> bool:
        return key in self._coeffs

    def __len__(self):
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    # -- vector space operations ------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        acc = dict(self._coeffs)
        for key, value in other._coeffs.items():
            merged = acc.get(key)
            merged = value if merged is None else merged + value
            if merged:
                acc[key] = merged
            else:
                acc.pop(key, None)
        out = Element.__new__(Element)
        out._coeffs = acc
        return out

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        out = Element.__new__(Element)
        out._coeffs = {k: -v for k, v in self._coeffs.items()}
        return out

    def scaled(self, value) -> "Element":
        scalar = Scalar.coerce(value)
        if not scalar:
            return Element.zero()
        out = Element.__new__(Element)
        out._coeffs = {k: scalar * v for k, v in self._coeffs.items()}
        return out

    def __mul__(self, value):
        try:
            return self.scaled(value)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    # -- structure helpers ---------------------------------------------

    def restrict(self, predicate) -> "Element":
        out = Element.__new__(Element)
        out._coeffs = {k: v for k, v in self._coeffs.items() if predicate(k)}
        return out

    def noncentral(self) -> "Element":
        return self.restrict(lambda k: not k.is_central)

    def central(self) -> "Element":
        return self.restrict(lambda k: k.is_central)

    def has_central_support(self) -> bool:
        return any(k.is_central for k in self._coeffs)

    # -- equality / text -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for key, coeff in self.items():
            negate, text = coefficient_text(coeff)
            term = str(key) if text is None else f"{text}*{key}"
            if not parts:
                parts.append(f"-{term}" if negate else term)
            else:
                parts.append(f"- {term}" if negate else f"+ {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"<{self}>"


class AlgebraKind(Enum):
    """The full algebra with central symbols, or its centerless quotient."""

    HV = "hv"
    W00 = "w00"

    @property
    def has_central(self) -> bool:
        return self is AlgebraKind.HV


@lru_cache(maxsize=None)
def bracket_keys(kind: AlgebraKind, a: BasisKey, b: BasisKey) -> Element:
    """Bracket of two basis symbols as an Element."""
    if a.is_central or b.is_central:
        if not kind.has_central:
            raise ValueError(f"{kind.value} has no central symbols: [{a}, {b}]")
        return Element.zero()
    p, q = a.index, b.index
    central = kind.has_central
    if a.family == "L":
        if b.family == "L":
            coeffs = {}
            if p != q:
                coeffs[L(p + q)] = p - q
            if central and p == -q:
                c = Fraction(p**3 - p, 12)
                if c:
                    coeffs[C1] = c
            return Element(coeffs)
        coeffs = {}
        if q != 0:
            coeffs[I(p + q)] = -q
        if central and p == -q:
            c = -(p * p + p)
            if c:
                coeffs[C2] = c
        return Element(coeffs)
    if b.family == "L":
        return -bracket_keys(kind, b, a)
    if central and p == -q and p != 0:
        return Element({C3: p})
    return Element.zero()


def _check_kind(kind: AlgebraKind, x: Element):
    if not kind.has_central and x.has_central_support():
        raise ValueError("quotient elements must have no central support")


def bracket(kind: AlgebraKind, x: Element, y: Element) -> Element:
    """Bilinear extension of the bracket to elements."""
    _check_kind(kind, x)
    _check_kind(kind, y)
    acc = {}
    for ka, ca in x._coeffs.items():
        for kb, cb in y._coeffs.items():
            base = bracket_keys(kind, ka, kb)
            if not base:
                continue
            c = ca * cb
            for key, value in base._coeffs.items():
                merged = acc.get(key)
                merged = c * value if merged is None else merged + c * value
                if merged:
                    acc[key] = merged
                else:
                    acc.pop(key, None)
    out = Element.__new__(Element)
    out._coeffs = acc
    return out


def project_w00(x: Element) -> Element:
    """Quotient projection: drop the central symbols."""
    return x.noncentral()


def center_basis(kind: AlgebraKind):
    """Basis of the center: [I(0), C1, C2, C3] for HV, [I(0)] for W00."""
    if kind.has_central:
        return (Element.basis(I(0)), Element.basis(C1), Element.basis(C2), Element.basis(C3))
    return (Element.basis(I(0)),)


def basis_window(n_max: int, include_central: bool):
    """Window keys in canonical order: L(-N..N), I(-N..N), then centrals."""
    keys = [L(n) for n in range(-n_max, n_max + 1)]
    keys.extend(I(n) for n in range(-n_max, n_max + 1))
    if include_central:
        keys.extend(CENTRAL_KEYS)
    return tuple(keys)


class Product:
    """A bilinear product on the algebra, given by its action on basis keys.

    Concrete products implement ``mul_keys``; ``mul`` is the bilinear
    extension and ``commutator`` the induced skew product x*y - y*x (equal
    to ``mul`` itself for Lie products).
    """

    name = "?"
    has_central = True
    is_lie = False

    def mul_keys(self, a: BasisKey, b: BasisKey) -> Element:
        raise NotImplementedError

    def mul(self, x: Element, y: Element) -> Element:
        acc = {}
        for ka, ca in x._coeffs.items():
            for kb, cb in y._coeffs.items():
                base = self.mul_keys(ka, kb)
                if not base:
                    continue
                c = ca * cb
                for key, value in base._coeffs.items():
                    merged = acc.get(key)
                    merged = c * value if merged is None else merged + c * value
                    if merged:
                        acc[key] = merged
                    else:
                        acc.pop(key, None)
        out = Element.__new__(Element)
        out._coeffs = acc
        return out

    def commutator_keys(self, a: BasisKey, b: BasisKey) -> Element:
        return self.mul_keys(a, b) - self.mul_keys(b, a)

    def commutator(self, x: Element, y: Element) -> Element:
        return self.mul(x, y) - self.mul(y, x)

    def window_keys(self, n_max: int, central: bool = True):
        return basis_window(n_max, central and self.has_central)

    def __str__(self):
        return self.name


class LieProduct(Product):
    """The bracket of one of the two algebra kinds, viewed as a product."""

    is_lie = True

    def __init__(self, kind: AlgebraKind):
        self.kind = kind
        self.has_central = kind.has_central
        self.name = "lie-hv" if kind is AlgebraKind.HV else "lie-w00"

    def mul_keys(self, a, b):
        return bracket_keys(self.kind, a, b)

    def mul(self, x, y):
        return bracket(self.kind, x, y)

    def commutator_keys(self, a, b):
        return self.mul_keys(a, b)

    def commutator(self, x, y):
        return self.mul(x, y)


LIE_HV = LieProduct(AlgebraKind.HV)
LIE_W00 = LieProduct(AlgebraKind.W00)
