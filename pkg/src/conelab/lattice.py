"""Intersection lattices of rational and ruled 4-manifolds.

A divisor class lives in H^2 of one of three surface models:

* ``rational``          -- blowup of the projective plane, basis (H, E1..Ek),
                           form diag(1, -1, ..., -1);
* ``trivial_ruled``     -- blowup of S^2 x Sigma_h, basis (U, T, E1..Ek) with
                           U^2 = 0, U.T = 1, T^2 = 0;
* ``nontrivial_ruled``  -- blowup of the twisted S^2-bundle over Sigma_h,
                           same basis but U^2 = 1.

Classes are stored as exact rational coefficient vectors in basis order, so
the class written aH - b1 E1 - ... - bk Ek is stored as (a, -b1, ..., -bk).
All arithmetic is exact (fractions.Fraction); nothing in this package touches
floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

RATIONAL = "rational"
TRIVIAL_RULED = "trivial_ruled"
NONTRIVIAL_RULED = "nontrivial_ruled"

_KINDS = (RATIONAL, TRIVIAL_RULED, NONTRIVIAL_RULED)


class LatticeError(ValueError):
    """Raised for malformed surfaces, classes, or mismatched pairings."""


@dataclass(frozen=True)
class SurfaceModel:
    """A fixed lattice: surface kind, number of blowups k, base genus h."""

    kind: str
    k: int = 0
    h: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise LatticeError(f"unknown surface kind {self.kind!r}")
        if self.k < 0:
            raise LatticeError("blowup count k must be >= 0")
        if self.kind == RATIONAL:
            if self.h != 0:
                raise LatticeError("rational surfaces carry no base genus")
        elif self.h < 1:
            raise LatticeError("ruled surfaces need base genus h >= 1")

    @property
    def rank(self) -> int:
        return (1 if self.kind == RATIONAL else 2) + self.k

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL

    @property
    def is_ruled(self) -> bool:
        return self.kind != RATIONAL

    def basis_labels(self) -> list[str]:
        head = ["H"] if self.is_rational else ["U", "T"]
        return head + [f"E{i}" for i in range(1, self.k + 1)]

    def __str__(self) -> str:
        if self.is_rational:
            return f"rational(k={self.k})"
        flavour = "trivial_ruled" if self.kind == TRIVIAL_RULED else "nontrivial_ruled"
        return f"{flavour}(h={self.h}, k={self.k})"

    def to_json(self) -> dict:
        d = {"kind": self.kind, "k": self.k}
        if self.is_ruled:
            d["h"] = self.h
        return d

    @staticmethod
    def from_json(d: dict) -> "SurfaceModel":
        return SurfaceModel(d["kind"], int(d.get("k", 0)), int(d.get("h", 0)))


def rational_surface(k: int) -> SurfaceModel:
    return SurfaceModel(RATIONAL, k)


def trivial_ruled(h: int, k: int = 0) -> SurfaceModel:
    return SurfaceModel(TRIVIAL_RULED, k, h)


def nontrivial_ruled(h: int, k: int = 0) -> SurfaceModel:
    return SurfaceModel(NONTRIVIAL_RULED, k, h)


@dataclass(frozen=True)
class DivisorClass:
    """An exact rational class over a fixed surface lattice."""

    surface: SurfaceModel
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.surface.rank:
            raise LatticeError(
                f"coefficient vector of length {len(self.coeffs)} on rank "
                f"{self.surface.rank} surface"
            )
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    # -- vector space structure ------------------------------------------

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_surface(self, other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_surface(self, other)
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.surface, tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar) -> "DivisorClass":
        s = Fraction(scalar)
        return DivisorClass(self.surface, tuple(s * a for a in self.coeffs))

    __mul__ = __rmul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # -- lattice structure -----------------------------------------------

    def square(self) -> Fraction:
        return pair(self, self)

    def e_coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients on the exceptional part E1..Ek, in stored signs."""
        head = 1 if self.surface.is_rational else 2
        return self.coeffs[head:]

    def b_vector(self) -> tuple[Fraction, ...]:
        """Subtracted coefficients (b1, ..., bk) of aH - sum bi Ei."""
        return tuple(-c for c in self.e_coeffs())

    def primitive(self) -> "DivisorClass":
        """Scale by a positive rational so entries are integers with gcd 1."""
        if self.is_zero():
            return self
        from math import gcd, lcm

        denom = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * denom) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        return DivisorClass(self.surface, tuple(Fraction(v, g) for v in ints))

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        return format_class(self)

    def sort_key(self):
        return self.coeffs

    def to_json(self) -> dict:
        return {
            "surface": self.surface.to_json(),
            "coeffs": [str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(d: dict) -> "DivisorClass":
        surface = SurfaceModel.from_json(d["surface"])
        return DivisorClass(surface, tuple(Fraction(c) for c in d["coeffs"]))


def _check_same_surface(x: DivisorClass, y: DivisorClass) -> None:
    if x.surface != y.surface:
        raise LatticeError(f"classes on different surfaces: {x.surface} vs {y.surface}")


def divisor(surface: SurfaceModel, coeffs: Iterable) -> DivisorClass:
    return DivisorClass(surface, tuple(Fraction(c) for c in coeffs))


def basis_class(surface: SurfaceModel, index: int) -> DivisorClass:
    coeffs = [Fraction(0)] * surface.rank
    coeffs[index] = Fraction(1)
    return DivisorClass(surface, tuple(coeffs))


def H(surface: SurfaceModel) -> DivisorClass:
    if not surface.is_rational:
        raise LatticeError("H lives on rational surfaces only")
    return basis_class(surface, 0)


def U(surface: SurfaceModel) -> DivisorClass:
    if surface.is_rational:
        raise LatticeError("U lives on ruled surfaces only")
    return basis_class(surface, 0)


def T(surface: SurfaceModel) -> DivisorClass:
    if surface.is_rational:
        raise LatticeError("T lives on ruled surfaces only")
    return basis_class(surface, 1)


def E(surface: SurfaceModel, i: int) -> DivisorClass:
    if not 1 <= i <= surface.k:
        raise LatticeError(f"E{i} out of range for k={surface.k}")
    head = 1 if surface.is_rational else 2
    return basis_class(surface, head + i - 1)


def pair(x: DivisorClass, y: DivisorClass) -> Fraction:
    """Intersection pairing, signature (1, rank-1)."""
    _check_same_surface(x, y)
    a, b = x.coeffs, y.coeffs
    if x.surface.is_rational:
        head = a[0] * b[0]
        start = 1
    else:
        uu = a[0] * b[0] if x.surface.kind == NONTRIVIAL_RULED else Fraction(0)
        head = uu + a[0] * b[1] + a[1] * b[0]
        start = 2
    return head - sum(ai * bi for ai, bi in zip(a[start:], b[start:]))


def gram_functional(x: DivisorClass) -> tuple[Fraction, ...]:
    """Euclidean vector q with q . v = pair(v, x) for all v (Gram matrix applied)."""
    c = x.coeffs
    if x.surface.is_rational:
        head = (c[0],)
        tail = c[1:]
    elif x.surface.kind == TRIVIAL_RULED:
        head = (c[1], c[0])
        tail = c[2:]
    else:
        head = (c[0] + c[1], c[0])
        tail = c[2:]
    return head + tuple(-v for v in tail)


def canonical_class(surface: SurfaceModel) -> DivisorClass:
    """The canonical class: -3H + sum Ei, or -2U + (2h-2)T + sum Ei, or
    -2U + (2h-1)T + sum Ei depending on the bundle."""
    ones = [Fraction(1)] * surface.k
    if surface.is_rational:
        return DivisorClass(surface, tuple([Fraction(-3)] + ones))
    t = 2 * surface.h - 2 if surface.kind == TRIVIAL_RULED else 2 * surface.h - 1
    return DivisorClass(surface, tuple([Fraction(-2), Fraction(t)] + ones))


def adjunction_genus(x: DivisorClass) -> Fraction:
    """Genus of a class by adjunction: (x.x + K.x)/2 + 1.

    Integer whenever x is integral; lower bound for the genus of any
    irreducible representative, with equality exactly for embedded ones.
    """
    k = canonical_class(x.surface)
    return (pair(x, x) + pair(k, x)) / 2 + 1


def sw_dimension(x: DivisorClass) -> Fraction:
    """Expected dimension x.x - K.x entering the wall-crossing argument."""
    k = canonical_class(x.surface)
    return pair(x, x) - pair(k, x)


def forward_reference(surface: SurfaceModel) -> DivisorClass:
    """The class fixing the forward component: H, or U + T on ruled surfaces."""
    if surface.is_rational:
        return H(surface)
    return U(surface) + T(surface)


def is_forward(x: DivisorClass) -> bool:
    """True for nonzero classes of square >= 0 in the forward component."""
    if x.is_zero() or x.square() < 0:
        return False
    return pair(x, forward_reference(x.surface)) > 0


def proportional(x: DivisorClass, y: DivisorClass) -> bool:
    """Exact cross-multiple test for proportionality of nonzero classes."""
    _check_same_surface(x, y)
    n = x.surface.rank
    for i in range(n):
        for j in range(i + 1, n):
            if x.coeffs[i] * y.coeffs[j] != x.coeffs[j] * y.coeffs[i]:
                return False
    return not x.is_zero() and not y.is_zero()


@dataclass(frozen=True)
class LightConeReport:
    both_forward: bool
    pairing_sign: int
    proportional: bool


def light_cone_facts(a: DivisorClass, b: DivisorClass) -> LightConeReport:
    """Signature-(1,n) positivity facts for a reference class a and a test b.

    a must have square >= 0 and lie in the forward component (square-zero a
    is accepted; its component is still determined by the pairing with H or
    U+T).  Two forward classes pair non-negatively, with zero pairing only
    for proportional null classes.
    """
    if a.square() < 0:
        raise LatticeError("reference class has negative square, no forward cone")
    if not is_forward(a):
        raise LatticeError("reference class is not in the forward component")
    p = pair(a, b)
    both = b.square() >= 0 and is_forward(b)
    sign = 0 if p == 0 else (1 if p > 0 else -1)
    prop = p == 0 and a.square() == 0 and b.square() == 0 and proportional(a, b)
    return LightConeReport(both_forward=both, pairing_sign=sign, proportional=prop)


# -- class literals ---------------------------------------------------------

_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?\*?(H|U|T|E(\d+))", re.IGNORECASE)


def parse_class(text: str, surface: SurfaceModel) -> DivisorClass:
    """Parse literals like ``2H-E1-E2``, ``-H+2E1`` or ``U-3T`` exactly.

    Coefficients may be integers or fractions (``1/2H``); whitespace is
    ignored.  Every named generator must exist on the surface.
    """
    compact = text.replace(" ", "")
    if compact in ("0", ""):
        return divisor(surface, [0] * surface.rank)
    coeffs = [Fraction(0)] * surface.rank
    labels = {lab: idx for idx, lab in enumerate(surface.basis_labels())}
    pos = 0
    while pos < len(compact):
        m = _TERM.match(compact, pos)
        if not m:
            raise LatticeError(f"cannot parse class literal {text!r} at {compact[pos:]!r}")
        sign, num, symbol, _ = m.groups()
        value = Fraction(num) if num else Fraction(1)
        if sign == "-":
            value = -value
        key = symbol.upper()
        if key not in labels:
            raise LatticeError(f"generator {symbol!r} does not exist on {surface}")
        coeffs[labels[key]] += value
        pos = m.end()
    return DivisorClass(surface, tuple(coeffs))


def format_class(x: DivisorClass, paper_signs: bool = False) -> str:
    """Render a class; with paper_signs, as the tuple (a; b1, ..., bk)."""
    if paper_signs:
        if x.surface.is_rational:
            head = [str(x.coeffs[0])]
        else:
            head = [str(x.coeffs[0]), str(x.coeffs[1])]
        body = ", ".join(str(b) for b in x.b_vector())
        return f"({'; '.join([', '.join(head), body]) if body else ', '.join(head)})"
    if x.is_zero():
        return "0"
    parts = []
    for label, c in zip(x.surface.basis_labels(), x.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        coef = "" if mag == 1 else str(mag)
        term = f"{coef}{label}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if c > 0 else f"-{term}")
    return "".join(parts)


def sorted_classes(classes: Iterable[DivisorClass]) -> list[DivisorClass]:
    """Deterministic ordering used for all set-valued results."""
    return sorted(classes, key=lambda c: c.coeffs)
