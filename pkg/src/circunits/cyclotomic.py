"""Exact arithmetic in Z[alpha] where alpha is a primitive 2^n-th root of unity.

Elements are dense integer coefficient vectors of length 2^(n-1), reduced
eagerly by the minimal-polynomial rule alpha^(2^(n-1)) = -1.  All arithmetic
is over arbitrary-precision integers; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    EvenGaloisIndex,
    InternalInconsistency,
    LevelMismatch,
    NotAUnit,
)

MIN_LEVEL = 3
MAX_LEVEL = 12


@dataclass(frozen=True, slots=True)
class Level:
    """The parameter n of the ring Z[alpha], alpha^(2^n) = 1 primitively."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int):
            raise TypeError(f"level must be an int, got {type(self.n).__name__}")
        if not MIN_LEVEL <= self.n <= MAX_LEVEL:
            raise ValueError(
                f"level n must satisfy {MIN_LEVEL} <= n <= {MAX_LEVEL}, got {self.n}"
            )

    @property
    def order(self) -> int:
        """Order of alpha, 2^n."""
        return 1 << self.n

    @property
    def degree(self) -> int:
        """Degree of the field extension, 2^(n-1)."""
        return 1 << (self.n - 1)


def _check_same_level(a: CycInt, b: CycInt) -> None:
    if a.level != b.level:
        raise LevelMismatch(f"levels differ: n={a.level.n} vs n={b.level.n}")


@dataclass(frozen=True, slots=True)
class CycInt:
    """An element of Z[alpha] in reduced form.

    coeffs[j] is the coefficient of alpha^j for 0 <= j < 2^(n-1).
    """

    level: Level
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.level.degree:
            raise ValueError(
                f"need {self.level.degree} coefficients at n={self.level.n}, "
                f"got {len(self.coeffs)}"
            )

    # ------------------------------------------------------------------ #
    # constructors

    @classmethod
    def zero(cls, level: Level) -> CycInt:
        return cls(level, (0,) * level.degree)

    @classmethod
    def one(cls, level: Level) -> CycInt:
        return cls.from_int(level, 1)

    @classmethod
    def from_int(cls, level: Level, value: int) -> CycInt:
        coeffs = [0] * level.degree
        coeffs[0] = value
        return cls(level, tuple(coeffs))

    @classmethod
    def monomial(cls, level: Level, exponent: int, coeff: int = 1) -> CycInt:
        """coeff * alpha^exponent for any integer exponent (reduced)."""
        m = level.degree
        e = exponent % level.order
        coeffs = [0] * m
        if e < m:
            coeffs[e] = coeff
        else:
            coeffs[e - m] = -coeff
        return cls(level, tuple(coeffs))

    # ------------------------------------------------------------------ #
    # ring structure

    def __add__(self, other: CycInt) -> CycInt:
        _check_same_level(self, other)
        return CycInt(
            self.level, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: CycInt) -> CycInt:
        _check_same_level(self, other)
        return CycInt(
            self.level, tuple(x - y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> CycInt:
        return CycInt(self.level, tuple(-x for x in self.coeffs))

    def __mul__(self, other: CycInt) -> CycInt:
        _check_same_level(self, other)
        m = self.level.degree
        a, b = self.coeffs, other.coeffs
        # Iterate over the sparser operand; the product of a shift overflowing
        # position m wraps around with a sign flip.
        if _nonzero_count(b) < _nonzero_count(a):
            a, b = b, a
        acc = [0] * m
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                k = i + j
                if k < m:
                    acc[k] += ai * bj
                else:
                    acc[k - m] -= ai * bj
        return CycInt(self.level, tuple(acc))

    def __pow__(self, exponent: int) -> CycInt:
        if exponent < 0:
            return self.invert_unit() ** (-exponent)
        result = CycInt.one(self.level)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __rmul__(self, scalar: int) -> CycInt:
        return CycInt(self.level, tuple(scalar * x for x in self.coeffs))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coeffs)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.coeffs[1:])

    # ------------------------------------------------------------------ #
    # Galois action, trace, norm

    def galois(self, k: int) -> CycInt:
        """Apply the automorphism alpha -> alpha^k; k must be odd."""
        if k % 2 == 0:
            raise EvenGaloisIndex(f"Galois index must be odd, got {k}")
        m = self.level.degree
        order = self.level.order
        out = [0] * m
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = (j * k) % order
            if e < m:
                out[e] += c
            else:
                out[e - m] -= c
        return CycInt(self.level, tuple(out))

    def trace(self) -> int:
        """Sum of all Galois conjugates, always a rational integer.

        Each monomial alpha^j has trace zero except j = 0 (contributing
        2^(n-1)) and, before reduction, j = 2^(n-1) (contributing -2^(n-1));
        reduction folds the latter into the constant, so the trace is
        degree * coeffs[0].
        """
        return self.level.degree * self.coeffs[0]

    def _conjugate_pair_descend(self) -> CycInt:
        """Multiply by the conjugate fixing the index-2 subfield and compress.

        The automorphism alpha -> alpha^(2^(n-1)+1) = -alpha generates the
        Galois group over the subfield generated by alpha^2.  The product
        a * sigma(a) has only even-exponent coefficients, which drop one
        level.
        """
        m = self.level.degree
        twisted = CycInt(
            self.level,
            tuple(c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)),
        )
        prod = self * twisted
        for j in range(1, m, 2):
            if prod.coeffs[j] != 0:
                raise InternalInconsistency(
                    "conjugate pair product has an odd-exponent coefficient"
                )
        sub = Level(self.level.n - 1)
        return CycInt(sub, tuple(prod.coeffs[j] for j in range(0, m, 2)))

    def norm(self) -> int:
        """Product of all 2^(n-1) Galois conjugates, a rational integer."""
        if self.level.n == 3:
            prod = self * self.galois(3) * self.galois(5) * self.galois(7)
            if not prod.is_rational():
                raise InternalInconsistency("conjugate product is not rational")
            return prod.coeffs[0]
        return self._conjugate_pair_descend().norm()

    def invert_unit(self) -> CycInt:
        """Inverse of a unit, computed as conjugate product over the norm."""
        if self.level.n == 3:
            partial = self.galois(3) * self.galois(5) * self.galois(7)
            check = self * partial
            if not check.is_rational():
                raise InternalInconsistency("conjugate product is not rational")
            nrm = check.coeffs[0]
            if nrm == 1:
                return partial
            if nrm == -1:
                return -partial
            raise NotAUnit(f"norm is {nrm}, not +-1")
        m = self.level.degree
        twisted = CycInt(
            self.level,
            tuple(c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)),
        )
        sub_inverse = self._conjugate_pair_descend().invert_unit()
        lifted = [0] * m
        for j, c in enumerate(sub_inverse.coeffs):
            lifted[2 * j] = c
        return twisted * CycInt(self.level, tuple(lifted))

    # ------------------------------------------------------------------ #
    # reductions and predicates

    def mod2_coords(self) -> tuple[int, ...]:
        """Coefficient parities; the element is 1 mod 2 iff this is (1,0,...,0)."""
        return tuple(c & 1 for c in self.coeffs)

    def is_congruent_one_mod2(self) -> bool:
        bits = self.mod2_coords()
        return bits[0] == 1 and not any(bits[1:])

    def is_real(self) -> bool:
        """True iff fixed by alpha -> alpha^(-1).

        In reduced coordinates that means coeffs[m-j] == -coeffs[j] for
        0 < j < m and coeffs[m/2] == 0.
        """
        m = self.level.degree
        c = self.coeffs
        if c[m // 2] != 0:
            return False
        return all(c[m - j] == -c[j] for j in range(1, m // 2))

    # ------------------------------------------------------------------ #
    # serialization

    def to_json_dict(self) -> dict:
        return {"n": self.level.n, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_dict(cls, data: dict) -> CycInt:
        level = Level(int(data["n"]))
        return cls(level, tuple(int(c) for c in data["coeffs"]))


def _nonzero_count(coeffs: tuple[int, ...]) -> int:
    return sum(1 for c in coeffs if c != 0)
