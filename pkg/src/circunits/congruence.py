"""Mod-2 congruence calculus on unit words and the main-theorem verifier.

A word w in the d-generators has a mod-2 class in the special basis B.
The subgroup E consists of the words congruent to 1.  The verifier shows
that no nontrivial product of sqrt(F)/F coset generators lands in E, in
two independent ways: exhaustive multiplication over all exponent patterns
and a linearized GF(2) system.  Their agreement is itself a checked claim,
because the linearization leans on the square-zero shape of the r-block.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .circular_units import UnitWord, eval_word
from .cyclotomic import CycInt, Level
from .errors import (
    DisagreementError,
    IndexOutOfRange,
    InternalInconsistency,
    LevelTooSmall,
    NonRealWord,
)
from .funnel import generator_system, q_word
from .gf2 import (
    cyc_mul_f2,
    cyc_pow_f2,
    gf2_rank,
    pack_bits,
    unpack_bits,
)
from .real_basis import (
    SpecialCoordsMod2,
    seq_d,
    seq_r,
    special_mod2,
    special_mod2_from_parities,
)
from .version import TOOL_VERSION

__all__ = [
    "Mod2WordValue",
    "F2System",
    "Certificate",
    "word_mod2",
    "e_membership",
    "p_factor",
    "p_factor_indices",
    "q_power_identities",
    "galois_transport_check",
    "verify_main_theorem",
    "EXHAUSTIVE_CAP",
]

# Exhaustive enumeration runs when the number of coset generators g
# satisfies 2^g <= this cap; larger systems get the linearized route with
# random spot checks.
EXHAUSTIVE_CAP = 1 << 16

SPOT_CHECKS = 1000


@dataclass(frozen=True, slots=True)
class Mod2WordValue:
    """A word together with its mod-2 class in B-coordinates."""

    word: UnitWord
    coords: SpecialCoordsMod2


def word_mod2(w: UnitWord) -> SpecialCoordsMod2:
    """Mod-2 class of a real word in the special basis.

    Negative exponents are lifted by reducing every exponent mod 2^(n-2),
    which is valid because each d_j has order dividing 2^(n-2) mod 2.  The
    same class is recomputed through exact unit inversion; a mismatch
    would mean the order fact failed and is reported loudly.
    """
    if not w.is_real():
        raise NonRealWord(
            f"word has alpha exponent {w.alpha_exp}; no real coordinates"
        )
    period = 1 << (w.level.n - 2)
    reduced_exps = {j: e % period for j, e in w.d_exps}
    reduced = UnitWord.make(w.level, 0, reduced_exps)
    coords = special_mod2(eval_word(reduced))
    if reduced != w:
        direct = special_mod2(eval_word(w))
        if direct != coords:
            raise InternalInconsistency(
                "exponent reduction mod 2^(n-2) disagrees with exact inversion"
            )
    return coords


def e_membership(w: UnitWord) -> bool:
    """True iff the word is congruent to 1 mod 2 (the subgroup E)."""
    return word_mod2(w).is_one()


# ---------------------------------------------------------------------- #
# the product factors P(k)


def p_factor_indices(level: Level, k: int) -> tuple[int, ...]:
    """Indices 2^(k-1), ..., 2^(n-4) of the mod-2 d-product form of P(k)."""
    if not 1 <= k <= level.n - 3:
        raise IndexOutOfRange(
            f"P-factor index must lie in 1..{level.n - 3}, got {k}"
        )
    return tuple(1 << j for j in range(k - 1, level.n - 3))


def p_factor(level: Level, k: int) -> CycInt:
    """The exact product of d_1^(2^j) over j = k-1 .. n-4.

    Mod 2 it equals the ascending product of the d_{2^j}; the identity
    report checks that form.
    """
    if not 1 <= k <= level.n - 3:
        raise IndexOutOfRange(
            f"P-factor index must lie in 1..{level.n - 3}, got {k}"
        )
    exponent = sum(1 << j for j in range(k - 1, level.n - 3))
    return seq_d(level, 1) ** exponent


def _render_p_product(level: Level, k: int) -> str:
    return "*".join(f"d_{i}" for i in p_factor_indices(level, k))


# ---------------------------------------------------------------------- #
# identity reports


def _check_entry(name: str, lhs: SpecialCoordsMod2, rhs: SpecialCoordsMod2, **extra):
    entry = {
        "name": name,
        "passed": lhs == rhs,
        "lhs": lhs.render(),
        "rhs": rhs.render(),
    }
    entry.update(extra)
    return entry


def q_power_identities(level: Level) -> dict:
    """Check the chain of congruences behind the half-power expansions.

    For each funnel step k this verifies, mod 2:
      d_1^(-2^(k-1))          is  d_{2^(n-3)} * P(k),
      d_{2^(n-1-k)-1}^(2^(k-1)) is  d_{2^(k-1)} + r_{2^(k-1)},
      q(k,1)^(2^(k-1))        is  1 + d_{2^(k-1)}^(-1) r_{2^(k-1)}
                              and  1 + P(k) r_{2^(k-1)},
      P(k)                    is  the ascending product of the d_{2^j},
    plus, once, that multiplying by d_{2^(n-3)} fixes every r_l.
    """
    n = level.n
    if n < 4:
        raise LevelTooSmall(f"identities need n >= 4, got {n}")
    m = level.degree
    quarter = 1 << (n - 3)
    checks = []
    for k in range(1, n - 2):
        half = 1 << (k - 1)
        pk = p_factor(level, k)
        lhs = word_mod2(UnitWord.make(level, 0, {1: -half}))
        rhs = special_mod2(seq_d(level, quarter) * pk)
        checks.append(_check_entry("head_inverse_power", lhs, rhs, k=k))

        mirror = (1 << (n - 1 - k)) - 1
        lhs = special_mod2(seq_d(level, mirror) ** half)
        rhs = special_mod2(seq_d(level, half) + seq_r(level, half))
        checks.append(_check_entry("mirror_half_power", lhs, rhs, k=k))

        q_half = word_mod2(q_word(level, k, 1) ** half)

        d_mask = pack_bits(seq_d(level, half).mod2_coords())
        inv_mask = cyc_pow_f2(d_mask, (1 << (n - 1 - k)) - 1, m)
        if cyc_mul_f2(d_mask, inv_mask, m) != 1:
            raise InternalInconsistency("parity-ring inverse of d failed")
        r_mask = pack_bits(seq_r(level, half).mod2_coords())
        rhs_mask = 1 ^ cyc_mul_f2(inv_mask, r_mask, m)
        rhs = special_mod2_from_parities(level, unpack_bits(rhs_mask, m))
        checks.append(_check_entry("q_half_power_inverse_form", q_half, rhs, k=k))

        rhs = special_mod2(CycInt.one(level) + pk * seq_r(level, half))
        checks.append(
            _check_entry(
                "q_half_power_p_form",
                q_half,
                rhs,
                k=k,
                p_product=_render_p_product(level, k),
            )
        )

        lhs = special_mod2(pk)
        prod = CycInt.one(level)
        for i in p_factor_indices(level, k):
            prod = prod * seq_d(level, i)
        checks.append(_check_entry("p_factor_d_product", lhs, special_mod2(prod), k=k))

    fixes = all(
        special_mod2(seq_d(level, quarter) * seq_r(level, l))
        == special_mod2(seq_r(level, l))
        for l in range(1, quarter)
    )
    checks.append(
        {
            "name": "sqrt2_head_fixes_r_block",
            "passed": fixes,
            "lhs": "d_{2^(n-3)} * r_l for all l",
            "rhs": "r_l",
        }
    )
    return {
        "n": n,
        "certified_range": 4 <= n <= 7,
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }


def galois_transport_check(level: Level) -> dict:
    """Check that the automorphism alpha -> alpha^j moves q(k,1) half-powers
    onto the q(k,j) half-powers mod 2, and tabulate every coset generator.

    The k = 1 block is the transport statement proper; higher blocks hold
    because raising to 2^(k-1) multiplies sequence indices by 2^(k-1),
    which absorbs the index discrepancy into the mod-2 period.
    """
    n = level.n
    if n < 5:
        raise LevelTooSmall(f"transport needs a nontrivial A_1 block, n >= 5, got {n}")
    system = generator_system(level)
    transports = []
    for k in range(n - 3, 0, -1):
        half = 1 << (k - 1)
        base_elem = eval_word(q_word(level, k, 1) ** half)
        block = [lw for lw in system.sqrt_gens if lw.k == k]
        for lw in block:
            lhs = word_mod2(lw.word)
            rhs = special_mod2(base_elem.galois(lw.j))
            transports.append(
                {
                    "label": lw.label,
                    "passed": lhs == rhs,
                    "value": lhs.render(),
                    "transported": rhs.render(),
                }
            )
    table = [
        {"label": lw.label, "value": word_mod2(lw.word).render()}
        for lw in system.sqrt_gens
    ]
    return {
        "n": n,
        "certified_range": 5 <= n <= 7,
        "transports": transports,
        "coset_table": table,
        "all_passed": all(t["passed"] for t in transports),
    }


# ---------------------------------------------------------------------- #
# the main theorem


@dataclass(frozen=True, slots=True)
class F2System:
    """Linearized membership system: rows are non-constant B-coordinates,
    columns the coset-generator exponents."""

    level: Level
    variables: tuple[str, ...]
    row_labels: tuple[str, ...]
    rows: tuple[int, ...]
    rank: int
    nullity: int
    trivial_only: bool


@dataclass(frozen=True, slots=True)
class Certificate:
    """Replayable record of one main-theorem verification run."""

    level: Level
    generators: tuple[Mod2WordValue, ...]
    generator_labels: tuple[str, ...]
    system: F2System
    method: str
    exhaustive_assignments: int | None
    exhaustive_kernel_size: int | None
    spot_checks: int | None
    odd_r_subsystem: dict | None
    trivial_only: bool
    exploratory: bool
    elapsed_ms: float

    def to_json_dict(self, include_timing: bool = False) -> dict:
        g = len(self.generators)
        width = max(1, (g + 3) // 4)
        data: dict = {
            "n": self.level.n,
            "tool_version": TOOL_VERSION,
            "method": self.method,
            "exploratory": self.exploratory,
            "generators": [
                {
                    "label": label,
                    "coords": value.coords.render(),
                    "coords_hex": value.coords.coords_hex(),
                }
                for label, value in zip(self.generator_labels, self.generators)
            ],
            "row_labels": list(self.system.row_labels),
            "matrix_rows_hex": [
                format(row, f"0{width}x") for row in self.system.rows
            ],
            "rank": self.system.rank,
            "nullity": self.system.nullity,
            "verdict": "trivial_only" if self.trivial_only else "kernel_nontrivial",
        }
        if self.exhaustive_assignments is not None:
            data["exhaustive_assignments"] = self.exhaustive_assignments
            data["exhaustive_kernel_size"] = self.exhaustive_kernel_size
        if self.spot_checks is not None:
            data["spot_checks"] = self.spot_checks
        if self.odd_r_subsystem is not None:
            data["odd_r_subsystem"] = self.odd_r_subsystem
        data["elapsed_ms"] = round(self.elapsed_ms, 3) if include_timing else 0
        return data


def _coords_structural_check(coords: SpecialCoordsMod2) -> None:
    """Coset-generator classes must be 1 plus terms from s_{2^(n-3)} and
    the r-block; anything else would break the linearization."""
    quarter = 1 << (coords.level.n - 3)
    if coords.bits[0] != 1:
        raise InternalInconsistency("coset generator class has constant term 0")
    if any(coords.bits[1:quarter]):
        raise InternalInconsistency(
            "coset generator class touches a low s-coordinate"
        )


def _gray_exhaustive(masks: list[int], m: int) -> tuple[int, int]:
    """Count delta-assignments whose product is 1, by Gray-code walk.

    Returns (assignments tried, number of products equal to 1).  The walk
    multiplies by one generator mask per step, which is an involution, so
    toggling works in both directions.
    """
    g = len(masks)
    shifts = []
    for mask in masks:
        if cyc_mul_f2(mask, mask, m) != 1:
            raise InternalInconsistency("coset generator mask is not an involution")
        shifts.append([b for b in range(m) if (mask >> b) & 1])
    full = (1 << m) - 1
    product = 1
    hits = 1  # the empty assignment
    for i in range(1, 1 << g):
        toggle = (i & -i).bit_length() - 1
        acc = 0
        for b in shifts[toggle]:
            acc ^= product << b
        product = (acc ^ (acc >> m)) & full
        if product == 1:
            hits += 1
    return 1 << g, hits


def verify_main_theorem(level: Level, seed: int = 0) -> Certificate:
    """Decide whether only the trivial coset product is congruent to 1.

    Two routes must agree: exact multiplication over every exponent
    pattern (when 2^g fits the cap) and the linearized GF(2) system.  A
    true verdict here pins the intersection of sqrt(F) with E to F.
    """
    n = level.n
    if n < 4:
        raise LevelTooSmall(f"verification needs n >= 4, got {n}")
    started = time.perf_counter()
    m = level.degree
    system = generator_system(level)
    gens = system.sqrt_gens
    g = len(gens)

    values = []
    masks = []
    for lw in gens:
        coords = word_mod2(lw.word)
        _coords_structural_check(coords)
        mask = pack_bits(eval_word(lw.word).mod2_coords())
        if special_mod2_from_parities(level, unpack_bits(mask, m)) != coords:
            raise InternalInconsistency("parity mask disagrees with B-coordinates")
        values.append(Mod2WordValue(lw.word, coords))
        masks.append(mask)

    coord_count = 1 << (n - 2)
    rows = []
    row_labels = []
    for p in range(1, coord_count):
        row = 0
        for i, value in enumerate(values):
            if value.coords.bits[p]:
                row |= 1 << i
        rows.append(row)
        row_labels.append(values[0].coords.position_label(p))
    rank = gf2_rank([r for r in rows if r])
    nullity = g - rank
    f2 = F2System(
        level=level,
        variables=tuple(lw.label for lw in gens),
        row_labels=tuple(row_labels),
        rows=tuple(rows),
        rank=rank,
        nullity=nullity,
        trivial_only=(nullity == 0),
    )

    exhaustive_assignments = None
    kernel_size = None
    spot_checks = None
    if (1 << g) <= EXHAUSTIVE_CAP:
        method = "exhaustive+linearized"
        exhaustive_assignments, kernel_size = _gray_exhaustive(masks, m)
        if kernel_size != (1 << nullity):
            raise DisagreementError(
                f"exhaustive kernel has {kernel_size} elements, linearized "
                f"system predicts {1 << nullity}"
            )
    else:
        method = "linearized+spotcheck"
        rng = random.Random(seed)
        spot_checks = SPOT_CHECKS
        nonzero_rows = [r for r in rows if r]
        for _ in range(SPOT_CHECKS):
            delta = rng.randrange(1, 1 << g)
            predicted_one = all(
                (row & delta).bit_count() % 2 == 0 for row in nonzero_rows
            )
            product = 1
            d = delta
            while d:
                i = (d & -d).bit_length() - 1
                product = cyc_mul_f2(product, masks[i], m)
                d &= d - 1
            if (product == 1) != predicted_one:
                raise DisagreementError(
                    "random spot check contradicts the linearized system"
                )

    odd_r = None
    if n >= 5:
        quarter = 1 << (n - 3)
        block = [i for i, lw in enumerate(gens) if lw.k == 1]
        sub_rows = []
        sub_row_labels = []
        for t in range(1, quarter, 2):
            p = quarter + t
            sub = 0
            for col, i in enumerate(block):
                if values[i].coords.bits[p]:
                    sub |= 1 << col
            sub_rows.append(sub)
            sub_row_labels.append(f"r_{t}")
        sub_rank = gf2_rank([r for r in sub_rows if r])
        sub_width = max(1, (len(block) + 3) // 4)
        odd_r = {
            "column_variables": [gens[i].label for i in block],
            "column_indices": block,
            "row_labels": sub_row_labels,
            "rows_hex": [format(r, f"0{sub_width}x") for r in sub_rows],
            "rows_bits": [
                unpack_bits(r, len(block)) for r in sub_rows
            ],
            "rank": sub_rank,
            "full_rank": sub_rank == len(block) == len(sub_rows),
        }

    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return Certificate(
        level=level,
        generators=tuple(values),
        generator_labels=tuple(lw.label for lw in gens),
        system=f2,
        method=method,
        exhaustive_assignments=exhaustive_assignments,
        exhaustive_kernel_size=kernel_size,
        spot_checks=spot_checks,
        odd_r_subsystem=odd_r,
        trivial_only=f2.trivial_only,
        exploratory=n >= 8,
        elapsed_ms=elapsed_ms,
    )
