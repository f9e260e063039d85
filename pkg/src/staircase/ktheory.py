"""Exact Chern-character arithmetic on the plane.

Characters are triples (r, c1, ch2).  Riemann-Roch on the plane reads
``chi = r + (3/2) c1 + ch2``; the Euler pairing is ``chi(A, B) = chi(A* B)``
with the Chern ring product truncated in degree 2.  For nonzero rank the
slope mu = c1/r and discriminant Delta = mu^2/2 - ch2/r determine the
character together with r, and the pairing has the closed form
``r(A) r(B) (P(mu(B) - mu(A)) - Delta(A) - Delta(B))`` with P the Hilbert
polynomial of the plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, col_count, degree, row_count


@dataclass(frozen=True)
class ChernCharacter:
    r: int
    c1: Fraction
    ch2: Fraction

    def __iter__(self):
        return iter((self.r, self.c1, self.ch2))


@dataclass(frozen=True)
class CentralChargeValue:
    """Value r + i*t*imag_coeff of the central charge, t kept symbolic."""

    real: Fraction
    imag_coeff: Fraction


def chern(r, c1, ch2) -> ChernCharacter:
    """Build a character, normalizing the components to exact rationals."""
    if r != int(r):
        raise ValueError(f"rank must be an integer, got {r!r}")
    return ChernCharacter(int(r), Fraction(c1), Fraction(ch2))


def from_slope_discriminant(r, mu, delta) -> ChernCharacter:
    """Character of rank r with Mumford slope mu and discriminant delta."""
    if r == 0:
        raise ValueError("slope-discriminant coordinates need nonzero rank")
    mu = Fraction(mu)
    delta = Fraction(delta)
    return chern(r, r * mu, r * (mu * mu / 2 - delta))


def line_bundle(m: int) -> ChernCharacter:
    """ch O(m) = (1, m, m^2/2)."""
    return chern(1, m, Fraction(m * m, 2))


def twist(xi: ChernCharacter, m: int) -> ChernCharacter:
    """Multiply by e^{mL}: tensoring with the line bundle O(m)."""
    return chern(
        xi.r,
        xi.c1 + xi.r * m,
        xi.ch2 + xi.c1 * m + Fraction(xi.r * m * m, 2),
    )


def dual(xi: ChernCharacter) -> ChernCharacter:
    """Dual character: c1 changes sign."""
    return chern(xi.r, -xi.c1, xi.ch2)


def negate(xi: ChernCharacter) -> ChernCharacter:
    """Homological shift [1]: all components change sign."""
    return ChernCharacter(-xi.r, -xi.c1, -xi.ch2)


def ring_product(xi: ChernCharacter, zeta: ChernCharacter) -> ChernCharacter:
    """Product in the Chern ring, truncated above degree 2."""
    return ChernCharacter(
        xi.r * zeta.r,
        xi.r * zeta.c1 + zeta.r * xi.c1,
        xi.r * zeta.ch2 + xi.c1 * zeta.c1 + xi.ch2 * zeta.r,
    )


def mumford_slope(xi: ChernCharacter) -> Fraction:
    """mu = c1/r, defined for nonzero rank."""
    if xi.r == 0:
        raise ValueError("rank-0 characters have no Mumford slope")
    return Fraction(xi.c1, xi.r)


def discriminant(xi: ChernCharacter) -> Fraction:
    """Delta = mu^2/2 - ch2/r, defined for nonzero rank."""
    mu = mumford_slope(xi)
    return mu * mu / 2 - Fraction(xi.ch2, xi.r)


def chern_of_ideal(diagram: Diagram) -> ChernCharacter:
    """ch I_Z = (1, 0, -n)."""
    return chern(1, 0, -degree(diagram))


def chern_of_rank0(diagram: Diagram, k: int) -> ChernCharacter:
    """ch I_{Z in kL} = (0, k, -k^2/2 - n) for Z supported on k lines."""
    if k < 1:
        raise ValueError(f"need at least one supporting line, got {k}")
    if row_count(diagram) > k:
        raise ValueError(
            f"diagram with {row_count(diagram)} rows does not lie on {k} lines"
        )
    return chern(0, k, -Fraction(k * k, 2) - degree(diagram))


def chern_of_rank_minus1(diagram: Diagram, k: int, i: int) -> ChernCharacter:
    """ch of the complex O(-k) + O(-i) -> I_Z: (-1, k+i, -(k^2+i^2)/2 - n)."""
    if k < 1 or i < 1:
        raise ValueError(f"box dimensions must be positive, got {k} x {i}")
    if row_count(diagram) > k or col_count(diagram) > i:
        raise ValueError(
            f"diagram {diagram} does not fit in a {k} x {i} box"
        )
    return chern(-1, k + i, -Fraction(k * k + i * i, 2) - degree(diagram))


def hilbert_P(m) -> Fraction:
    """Hilbert polynomial of the plane: P(m) = (m^2 + 3m + 2)/2."""
    m = Fraction(m)
    return (m * m + 3 * m + 2) / 2


def euler_char(xi: ChernCharacter) -> Fraction:
    """Riemann-Roch: chi = r + (3/2) c1 + ch2."""
    return xi.r + Fraction(3, 2) * xi.c1 + xi.ch2


def euler_pairing(xi: ChernCharacter, zeta: ChernCharacter) -> Fraction:
    """chi(xi, zeta) = chi(xi* . zeta)."""
    return euler_char(ring_product(dual(xi), zeta))


def euler_pairing_closed(xi: ChernCharacter, zeta: ChernCharacter) -> Fraction:
    """The (r, mu, Delta) form of the pairing; both ranks must be nonzero."""
    return (
        xi.r
        * zeta.r
        * (
            hilbert_P(mumford_slope(zeta) - mumford_slope(xi))
            - discriminant(xi)
            - discriminant(zeta)
        )
    )


def central_charge(xi: ChernCharacter, s, t2) -> CentralChargeValue:
    """Central charge at (s, t), with t^2 = t2 > 0 rational.

    The value is real + i*t*imag_coeff; only t^2 enters the real part, so
    both components are exact rationals.
    """
    s = Fraction(s)
    t2 = Fraction(t2)
    if t2 <= 0:
        raise ValueError(f"t^2 must be positive, got {t2}")
    real = -xi.ch2 + s * xi.c1 - (s * s - t2) * Fraction(xi.r, 2)
    imag_coeff = xi.c1 - s * xi.r
    return CentralChargeValue(real, imag_coeff)


def rank0_hilbert_polynomial(diagram: Diagram, k: int) -> tuple[Fraction, Fraction]:
    """Hilbert polynomial of I_{Z in kL} as (leading, constant): kx - (n + (k^2-3k)/2)."""
    if row_count(diagram) > k:
        raise ValueError(
            f"diagram with {row_count(diagram)} rows does not lie on {k} lines"
        )
    n = degree(diagram)
    return Fraction(k), -(n + Fraction(k * k - 3 * k, 2))


def reduced_rank0_hilbert_polynomial(diagram: Diagram, k: int) -> tuple[Fraction, Fraction]:
    """The monic form x - mu_k, with mu_k taken on D padded to k rows."""
    leading, constant = rank0_hilbert_polynomial(diagram, k)
    return Fraction(1), constant / leading
