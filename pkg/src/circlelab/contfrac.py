"""Exact continued-fraction and rigid-rotation arithmetic.

Rotation numbers are carried as `fractions.Fraction` values built either
from a long decimal string (named constants) or from a coefficient prefix
by the backward recurrence.  All orbit points, convergents and
closest-return lengths are therefore exact up to the final conversion to
float, which keeps the deep levels of the rotation-side constructions
trustworthy without any arbitrary-precision dependency.

Conventions (used consistently by every module):
    q_0 = 1,  q_1 = a_1,  q_{n+1} = a_{n+1} q_n + q_{n-1}
    p_0 = 0,  p_1 = 1,    p_{n+1} = a_{n+1} p_n + p_{n-1}
    theta_n = |q_n rho - p_n|,   theta_{n+1} = theta_{n-1} - a_{n+1} theta_n
so ``theta[0] = rho`` and the level-n rotation partition has q_{n-1} short
atoms of length theta_n and q_n lengthy atoms of length theta_{n-1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .atoms import DynamicalPartition, label_sorted_orbit, sorted_index_pairs
from .errors import PrecisionError, StructureError

EPS = math.ulp(1.0)
#: Lengths below this are considered numerically meaningless (fail loudly).
PRECISION_CUTOFF = 1e3 * EPS

#: Guard for serialization-safe integers in convergent denominators.
_MAX_DENOMINATOR = 1 << 62


@dataclass(frozen=True)
class ContinuedFraction:
    """A finite prefix a_1, a_2, ..., a_N of positive partial quotients.

    ``constant_type_bound`` records the promised upper bound on the
    coefficients when the target is of constant type; it is data, not a
    hard-coded assumption.
    """

    coefficients: tuple[int, ...]
    constant_type_bound: int | None = None

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise ValueError("continued fraction needs at least one coefficient")
        for i, a in enumerate(coeffs, start=1):
            if a < 1:
                raise ValueError(f"coefficient a_{i} = {a} must be >= 1")
            if self.constant_type_bound is not None and a > self.constant_type_bound:
                raise ValueError(
                    f"coefficient a_{i} = {a} exceeds constant-type bound "
                    f"{self.constant_type_bound}"
                )

    @property
    def depth(self) -> int:
        return len(self.coefficients)

    def prefix(self, n: int) -> "ContinuedFraction":
        if n > self.depth:
            raise ValueError(f"prefix depth {n} exceeds available {self.depth}")
        return ContinuedFraction(self.coefficients[:n], self.constant_type_bound)


def golden_cf(depth: int = 40) -> ContinuedFraction:
    """[1, 1, 1, ...] — the golden rotation number (sqrt(5)-1)/2."""
    return ContinuedFraction((1,) * depth, constant_type_bound=1)


def silver_cf(depth: int = 40) -> ContinuedFraction:
    """[2, 2, 2, ...] — the silver rotation number sqrt(2)-1."""
    return ContinuedFraction((2,) * depth, constant_type_bound=2)


def rho_from_decimal(text: str) -> Fraction:
    """Parse a high-precision decimal string into an exact Fraction.

    Requires at least 30 significant digits so that closest-return lengths
    stay accurate to depth ~20 in double precision.
    """
    digits = sum(c.isdigit() for c in text.lstrip("+-").replace(".", ""))
    if digits < 30:
        raise ValueError(
            f"rotation number needs >= 30 significant digits, got {digits}"
        )
    return Fraction(Decimal(text))


def golden_rho(digits: int = 40) -> Fraction:
    """(sqrt(5) - 1) / 2 to ``digits`` decimal digits, as an exact Fraction."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        value = (Decimal(5).sqrt() - 1) / 2
        return Fraction(+value)


def silver_rho(digits: int = 40) -> Fraction:
    """sqrt(2) - 1 to ``digits`` decimal digits, as an exact Fraction."""
    with localcontext() as ctx:
        ctx.prec = digits + 10
        value = Decimal(2).sqrt() - 1
        return Fraction(+value)


def rho_from_cf(cf: ContinuedFraction, tail_ones: int = 80) -> Fraction:
    """Synthesize a rotation number whose expansion starts with ``cf``.

    The prefix is extended by a tail of 1s before running the backward
    recurrence, so the value is not the rational p_N/q_N itself and the
    closest-return lengths stay strictly positive well past depth N.
    """
    coeffs = list(cf.coefficients) + [1] * tail_ones
    value = Fraction(0)
    for a in reversed(coeffs):
        value = Fraction(1, a + value)
    return value


def cf_of_rho(rho: Fraction, depth: int) -> list[int]:
    """First ``depth`` partial quotients of rho in (0, 1), by Euclid."""
    if not 0 < rho < 1:
        raise ValueError("rho must lie strictly between 0 and 1")
    coeffs: list[int] = []
    x = rho
    for _ in range(depth):
        if x == 0:
            break
        inv = 1 / x
        a = int(inv)
        coeffs.append(a)
        x = inv - a
    return coeffs


def check_rho_matches(rho: Fraction, cf: ContinuedFraction, depth: int) -> None:
    """Raise unless the expansion of rho starts with cf's first ``depth`` terms."""
    got = cf_of_rho(rho, depth)
    want = list(cf.coefficients[:depth])
    if got[: len(want)] != want:
        raise ValueError(
            f"rotation number has expansion prefix {got[:len(want)]}, "
            f"expected {want}"
        )


@dataclass(frozen=True)
class Convergent:
    """p_n / q_n at level n."""

    n: int
    p: int
    q: int


def convergents(cf: ContinuedFraction, depth: int) -> list[Convergent]:
    """Convergents for levels 1..depth, by the integer recurrence."""
    if depth > cf.depth:
        raise ValueError(f"depth {depth} exceeds coefficient count {cf.depth}")
    p_prev, q_prev = 0, 1          # level 0
    p_cur, q_cur = 1, cf.coefficients[0]
    out = [Convergent(1, p_cur, q_cur)]
    for n in range(2, depth + 1):
        a = cf.coefficients[n - 1]
        p_cur, p_prev = a * p_cur + p_prev, p_cur
        q_cur, q_prev = a * q_cur + q_prev, q_cur
        if q_cur > _MAX_DENOMINATOR:
            raise OverflowError(
                f"convergent denominator exceeds 2^62 at level {n}"
            )
        out.append(Convergent(n, p_cur, q_cur))
    return out


def q_sequence(cf: ContinuedFraction, depth: int) -> list[int]:
    """[q_0, q_1, ..., q_depth] including the level-0 value q_0 = 1."""
    return [1] + [c.q for c in convergents(cf, depth)]


@dataclass(frozen=True)
class ReturnLengths:
    """Closest-return lengths theta_n = |q_n rho - p_n| for levels 0..N.

    ``theta[n]`` is the float value at level n; ``exact`` keeps the Fraction
    form for mass assignments that must stay exact.
    """

    theta: tuple[float, ...]
    exact: tuple[Fraction, ...]

    @property
    def depth(self) -> int:
        return len(self.theta) - 1


def return_lengths(cf: ContinuedFraction, rho, depth: int) -> ReturnLengths:
    """theta_n for n = 0..depth with the precision cutoff enforced.

    ``rho`` may be a Fraction or a decimal string (>= 30 digits); it must be
    consistent with the coefficient prefix.
    """
    rho = _as_rho(rho)
    check_rho_matches(rho, cf, min(depth, cf.depth))
    convs = convergents(cf, depth)
    exact = [rho]  # level 0: |q_0 rho - p_0| = rho
    for c in convs:
        value = abs(c.q * rho - c.p)
        if value < PRECISION_CUTOFF:
            raise PrecisionError(
                f"depth exceeds precision: theta at level {c.n} is "
                f"{float(value):.3e}"
            )
        exact.append(value)
    return ReturnLengths(tuple(float(v) for v in exact), tuple(exact))


def rotation_orbit_fraction(rho, k: int) -> Fraction:
    """{k rho} as an exact Fraction."""
    rho = _as_rho(rho)
    return (k * rho) % 1


def rotation_orbit_point(rho, k: int) -> float:
    """Fractional part of k*rho, exact to working precision.

    Computed in integer-scaled (rational) arithmetic, so the only error is
    the final rounding to float.  Fails loudly if the reduced value is too
    small to be meaningful in double precision.
    """
    frac = rotation_orbit_fraction(rho, k)
    if frac != 0 and min(frac, 1 - frac) < Fraction(PRECISION_CUTOFF):
        raise PrecisionError(
            f"orbit point {{{k} rho}} is below the precision cutoff"
        )
    return float(frac)


def rotation_partition(rho, cf: ContinuedFraction, n: int) -> DynamicalPartition:
    """Level-n dynamical partition of the rigid rotation by rho.

    Endpoints are the first q_n + q_{n-1} points of the orbit of 0,
    computed exactly; atoms come out with q_{n-1} short atoms of length
    theta_n and q_n lengthy atoms of length theta_{n-1}.
    """
    rho = _as_rho(rho)
    if n < 1:
        raise ValueError("partition level must be >= 1")
    if n > cf.depth:
        raise ValueError(f"level {n} exceeds coefficient depth {cf.depth}")
    qs = q_sequence(cf, n)
    lengths = return_lengths(cf, rho, n)
    q_short, q_lengthy = qs[n - 1], qs[n]
    count = q_short + q_lengthy

    points = [rotation_orbit_fraction(rho, k) for k in range(count)]
    order = sorted(range(count), key=points.__getitem__)
    atoms = label_sorted_orbit(
        points, order, q_short, q_lengthy,
        ambiguous_probe=rotation_orbit_fraction(rho, count),
    )
    part = DynamicalPartition(level=n, atoms=tuple(atoms))

    # Structural self-check: every atom length must be one of the two
    # closest-return lengths, exactly in rational arithmetic.
    for atom, (i, j) in zip(part.atoms, sorted_index_pairs(order)):
        want = lengths.exact[n] if atom.label == "short" else lengths.exact[n - 1]
        got = (points[j] - points[i]) % 1
        if got != want:
            raise StructureError(
                f"rotation atom at level {n} has length {float(got)}, "
                f"expected {float(want)}"
            )
    return part


def _as_rho(rho) -> Fraction:
    if isinstance(rho, Fraction):
        return rho
    if isinstance(rho, str):
        return rho_from_decimal(rho)
    raise TypeError(
        "rho must be a Fraction or a high-precision decimal string; "
        f"got {type(rho).__name__}"
    )
