"""The maximal real subring Z[alpha + 1/alpha] and its two integral bases.

The s-basis is (1, s_1, ..., s_{2^(n-2)-1}) with s_j = alpha^j + alpha^(-j).
The special basis B replaces the upper half of the s-range by the elements
r_j = s_j + s_{2^(n-2)-j}, giving (1, s_1, ..., s_{2^(n-3)}, r_1, ...,
r_{2^(n-3)-1}).  Mod 2 the r-block spans a square-zero ideal image, which is
what makes unit congruences linear in these coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycInt, Level
from .errors import InternalInconsistency, NotReal

__all__ = [
    "RealElem",
    "SpecialCoordsMod2",
    "seq_s",
    "seq_d",
    "seq_r",
    "to_s_basis",
    "to_special_basis",
    "from_special_basis",
    "special_mod2",
    "special_mod2_from_parities",
    "rtilde_member",
    "canonical_s_token",
    "canonical_r_token",
    "s_table_tokens",
    "r_table_tokens",
]


# ---------------------------------------------------------------------- #
# sequence elements


def seq_s(level: Level, j: int) -> CycInt:
    """s_j = alpha^j + alpha^(-j); accepts any integer j."""
    return CycInt.monomial(level, j) + CycInt.monomial(level, -j)


def seq_d(level: Level, j: int) -> CycInt:
    """d_j = 1 + s_j; a unit for odd j."""
    return CycInt.one(level) + seq_s(level, j)


def seq_r(level: Level, j: int) -> CycInt:
    """r_j = s_j + s_{2^(n-2)-j}."""
    return seq_s(level, j) + seq_s(level, (1 << (level.n - 2)) - j)


# ---------------------------------------------------------------------- #
# s-basis


@dataclass(frozen=True, slots=True)
class RealElem:
    """Element of the real subring in s-coordinates.

    s_coords[0] is the coefficient of 1; s_coords[j] the coefficient of s_j
    for 1 <= j < 2^(n-2).
    """

    level: Level
    s_coords: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = 1 << (self.level.n - 2)
        if len(self.s_coords) != expected:
            raise ValueError(
                f"need {expected} s-coordinates at n={self.level.n}, "
                f"got {len(self.s_coords)}"
            )

    def to_cyc(self) -> CycInt:
        acc = CycInt.from_int(self.level, self.s_coords[0])
        for j, c in enumerate(self.s_coords[1:], start=1):
            if c:
                acc = acc + c * seq_s(self.level, j)
        return acc


def to_s_basis(a: CycInt) -> RealElem:
    """Exact s-coordinates of a real element.

    A real element embeds with coeffs[j] at alpha^j and -coeffs[j] at
    alpha^(m-j), so the coordinates can be read off the lower half directly
    once the symmetry is confirmed.
    """
    m = a.level.degree
    half = m // 2
    c = a.coeffs
    if c[half] != 0 or any(c[m - j] != -c[j] for j in range(1, half)):
        raise NotReal("element is not fixed by conjugation")
    return RealElem(a.level, tuple(c[:half]))


# ---------------------------------------------------------------------- #
# special basis B

# Layout of a B-coordinate vector of length 2^(n-2):
#   position 0                      <-> 1
#   positions 1 .. 2^(n-3)          <-> s_1 .. s_{2^(n-3)}
#   positions 2^(n-3)+t, 0 < t < 2^(n-3)  <-> r_t


def to_special_basis(a: RealElem) -> tuple[int, ...]:
    """Rewrite s-coordinates over B via s_{2^(n-2)-t} = r_t - s_t.

    The substitution is triangular, so no matrix inversion is needed.
    """
    quarter = 1 << (a.level.n - 3)
    b = a.s_coords
    out = list(b[: quarter + 1])
    out.extend([0] * (quarter - 1))
    for t in range(1, quarter):
        e = b[2 * quarter - t]
        out[quarter + t] = e
        out[t] -= e
    return tuple(out)


def from_special_basis(level: Level, coords: tuple[int, ...]) -> RealElem:
    """Inverse of to_special_basis."""
    quarter = 1 << (level.n - 3)
    if len(coords) != 2 * quarter:
        raise ValueError(f"need {2 * quarter} B-coordinates, got {len(coords)}")
    out = list(coords[: quarter + 1]) + [0] * (quarter - 1)
    for t in range(1, quarter):
        e = coords[quarter + t]
        out[t] += e
        out[2 * quarter - t] += e
    return RealElem(level, tuple(out))


@dataclass(frozen=True, slots=True)
class SpecialCoordsMod2:
    """B-coordinates reduced mod 2, as a 0/1 vector of length 2^(n-2)."""

    level: Level
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = 1 << (self.level.n - 2)
        if len(self.bits) != expected:
            raise ValueError(
                f"need {expected} bits at n={self.level.n}, got {len(self.bits)}"
            )

    def is_one(self) -> bool:
        """True iff the class is the class of 1."""
        return self.bits[0] == 1 and not any(self.bits[1:])

    def is_zero(self) -> bool:
        return not any(self.bits)

    def position_label(self, p: int) -> str:
        quarter = 1 << (self.level.n - 3)
        if p == 0:
            return "1"
        if p <= quarter:
            return f"s_{p}"
        return f"r_{p - quarter}"

    def terms(self) -> tuple[str, ...]:
        return tuple(
            self.position_label(p) for p, bit in enumerate(self.bits) if bit
        )

    def render(self) -> str:
        """Canonical text form, e.g. '1+r_2+r_3'; '0' for the zero class."""
        parts = self.terms()
        return "+".join(parts) if parts else "0"

    def as_int(self) -> int:
        """Bits packed into an int; bit p is the coordinate at position p."""
        value = 0
        for p, bit in enumerate(self.bits):
            if bit:
                value |= 1 << p
        return value

    def coords_hex(self) -> str:
        width = (len(self.bits) + 3) // 4
        return format(self.as_int(), f"0{width}x")

    def __add__(self, other: SpecialCoordsMod2) -> SpecialCoordsMod2:
        if self.level != other.level:
            raise ValueError("levels differ")
        return SpecialCoordsMod2(
            self.level, tuple(x ^ y for x, y in zip(self.bits, other.bits))
        )


def special_mod2(a: CycInt) -> SpecialCoordsMod2:
    """B-coordinates of a real element, reduced mod 2."""
    coords = to_special_basis(to_s_basis(a))
    return SpecialCoordsMod2(a.level, tuple(c & 1 for c in coords))


def special_mod2_from_parities(
    level: Level, parities: tuple[int, ...]
) -> SpecialCoordsMod2:
    """Like special_mod2 but starting from coefficient parities of Z[alpha].

    Products computed in the parity ring land here without lifting back to
    exact integers.  The parity vector must be conjugation-symmetric.
    """
    m = level.degree
    half = m // 2
    if len(parities) != m:
        raise ValueError(f"need {m} parities, got {len(parities)}")
    if parities[half] & 1 or any(
        (parities[m - j] ^ parities[j]) & 1 for j in range(1, half)
    ):
        raise InternalInconsistency("parity vector is not real mod 2")
    quarter = half // 2
    b = [p & 1 for p in parities[:half]]
    out = b[: quarter + 1] + [0] * (quarter - 1)
    for t in range(1, quarter):
        e = b[2 * quarter - t]
        out[quarter + t] = e
        out[t] ^= e
    return SpecialCoordsMod2(level, tuple(out))


def rtilde_member(a: CycInt) -> bool:
    """True iff a lies in R~ = (Z-span of the r_j) + 2 * (real subring).

    Mod 2 that means the B-support sits entirely in the r-block.
    """
    coords = special_mod2(a)
    quarter = 1 << (a.level.n - 3)
    return not any(coords.bits[: quarter + 1])


# ---------------------------------------------------------------------- #
# canonical mod-2 index tokens and tables


def canonical_s_token(level: Level, j: int) -> str:
    """Mod-2 canonical name of s_j: '0' or 's_k' with 0 < k < 2^(n-2).

    The class of s_j has period 2^(n-1) and folds by s_{2^(n-1)-j} = s_j,
    so every index reduces into 0..2^(n-2); s_0 and s_{2^(n-2)} are even.
    """
    half_period = 1 << (level.n - 1)
    fold = 1 << (level.n - 2)
    j1 = j % half_period
    if j1 > fold:
        j1 = half_period - j1
    if j1 in (0, fold):
        return "0"
    return f"s_{j1}"


def canonical_r_token(level: Level, j: int) -> str:
    """Mod-2 canonical name of r_j, folded into 0..2^(n-3)."""
    period = 1 << (level.n - 2)
    fold = 1 << (level.n - 3)
    j1 = j % period
    if j1 > fold:
        j1 = period - j1
    if j1 in (0, fold):
        return "0"
    return f"r_{j1}"


def s_table_tokens(level: Level) -> list[str]:
    """Canonical tokens of s_j mod 2 for j = 0 .. 2^(n-1)-1."""
    return [canonical_s_token(level, j) for j in range(1 << (level.n - 1))]


def r_table_tokens(level: Level) -> list[str]:
    """Canonical tokens of r_j mod 2 for j = 0 .. 2^(n-2)-1."""
    return [canonical_r_token(level, j) for j in range(1 << (level.n - 2))]
