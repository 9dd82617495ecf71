"""Exact evaluation of bounds on set-coloring Ramsey numbers R(n; r, s).

Every value is an exact integer. Upper bounds are rounded up and lower bounds
rounded down, so a report is always valid in its stated direction.
Real-exponent formulas are raised to an integer power first and then resolved
with an exact integer root.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import comb, factorial, log10
from typing import Any

from .codes import gv_lower_bound

DEFAULT_DIGIT_BUDGET = 10_000
DEFAULT_SCAN_LIMIT = 100_000


@dataclass(frozen=True)
class BoundReport:
    name: str
    direction: str  # "lower" or "upper"
    parameters: dict[str, Any]
    value: int | None
    provenance: str
    note: str = ""
    # set instead of ``value`` when the number is too large to materialise
    power: tuple[int, int] | None = None

    def __post_init__(self):
        if self.direction not in ("lower", "upper"):
            raise ValueError(f"direction must be lower or upper, got {self.direction!r}")
        if self.value is not None and self.value < 1:
            raise ValueError(f"bound value must be >= 1, got {self.value}")

    def to_json(self) -> dict[str, Any]:
        out = asdict(self)
        if self.power is not None:
            out["power"] = {"base": self.power[0], "exponent": self.power[1]}
        return out


def iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for integers x >= 0, k >= 1."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0 and k >= 1")
    if x < 2 or k == 1:
        return x
    y = 1 << -(-x.bit_length() // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            return y
        y = z


def _ceil(x: Fraction) -> int:
    return -(-x.numerator // x.denominator)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def simple_upper(n: int, r: int, s: int) -> BoundReport:
    _require(r > s >= 1 and n >= 3, "need r > s >= 1 and n >= 3")
    value = Fraction(r, r - s) * Fraction(r, s) ** ((n - 2) * r + 1)
    return BoundReport("simple_upper", "upper", {"n": n, "r": r, "s": s}, _ceil(value),
                       "r/(r-s) * (r/s)^((n-2)r+1)")


def upper_s_large(n: int, r: int, s: int, *, digit_budget: int = DEFAULT_DIGIT_BUDGET) -> BoundReport:
    """(r/(r-s))^(500 n (r-s)^2 / r) for s > 9r/10, exponent rounded up."""
    _require(r > s >= 1 and n >= 1, "need r > s >= 1")
    _require(10 * s > 9 * r, "this bound needs s > 9r/10")
    exponent = _ceil(Fraction(500 * n * (r - s) ** 2, r))
    params = {"n": n, "r": r, "s": s, "exponent": exponent}
    prov = "(r/(r-s))^(500 n (r-s)^2 / r), s > 9r/10"
    if exponent * log10(r / (r - s)) > digit_budget:
        if r % (r - s) == 0:
            return BoundReport("upper_s_large", "upper", params, None, prov,
                               "not materialised: digit budget", (r // (r - s), exponent))
        raise ValueError("value exceeds the digit budget")
    return BoundReport("upper_s_large", "upper", params, _ceil(Fraction(r, r - s) ** exponent), prov)


def first_moment_lower(n: int, a: int, b: int) -> BoundReport:
    """floor((a/b)^((n-1)/2) * (n!/a)^(1/n)), valid when b >= a/2 and n! >= a."""
    _require(a >= b >= 1 and n >= 2, "need a >= b >= 1 and n >= 2")
    _require(2 * b >= a, "needs b >= a/2")
    _require(factorial(n) >= a, "needs n! >= a")
    # value^(2n) = (a/b)^(n(n-1)) * (n!/a)^2
    x = Fraction(a, b) ** (n * (n - 1)) * Fraction(factorial(n), a) ** 2
    value = iroot(x.numerator // x.denominator, 2 * n)
    return BoundReport("first_moment_lower", "lower", {"n": n, "r": a, "s": b}, value,
                       "(a/b)^((n-1)/2) (n!/a)^(1/n), b >= a/2, n! >= a")


def first_moment_exponential(n: int, a: int, b: int) -> BoundReport:
    """floor(2^(n(a-b)/3b)), the weaker exponential form of the first-moment bound."""
    _require(a >= b >= 1 and n >= 3, "need a >= b >= 1 and n >= 3")
    _require(2 * b >= a and factorial(n) >= a, "needs b >= a/2 and n! >= a")
    value = iroot(2 ** (n * (a - b)), 3 * b)
    return BoundReport("first_moment_exponential", "lower", {"n": n, "r": a, "s": b}, value,
                       "2^(n(a-b)/3b), b >= a/2, n! >= a")


@dataclass(frozen=True)
class LowerBoundPlan:
    """Parameter recipe for the code-product lower bound.

    In the product regime an (a, b)-coloring without monochromatic K_n on q
    vertices is lifted along a q-ary code of length m and distance d, giving
    R(n; r, s) >= R(n; r', s') > A_q(m, d).
    """

    n: int
    r: int
    s: int
    regime: str  # "direct-first-moment" or "product-of-codes"
    a: int
    b: int
    r_prime: int | None = None
    s_prime: int | None = None
    m: int | None = None
    d: int | None = None
    exponent: Fraction | None = None  # r'/a - s'/b
    exponent_floor: Fraction = field(default=Fraction(0))  # (r-s)^2 / 64r

    def code_lower(self, q: int) -> int:
        """Certified R(n; r, s) lower bound from a base coloring on q vertices."""
        if self.regime != "product-of-codes":
            raise ValueError("the direct regime has no code step")
        return gv_lower_bound(q, self.m, self.d) + 1

    def estimate(self, q: int) -> Fraction:
        """m^-d q^(m-d), the closed-form estimate of A_q(m, d)."""
        if self.regime != "product-of-codes":
            raise ValueError("the direct regime has no code step")
        return Fraction(q ** (self.m - self.d), self.m ** self.d)

    def to_json(self) -> dict[str, Any]:
        out = asdict(self)
        for key in ("exponent", "exponent_floor"):
            if out[key] is not None:
                out[key] = str(out[key])
        return out


def lower_bound_plan(n: int, r: int, s: int) -> LowerBoundPlan:
    _require(r > s >= 1, "need r > s >= 1")
    gap = r - s
    floor_exp = Fraction(gap * gap, 64 * r)
    # s > r - 8 sqrt(r)  <=>  (r - s)^2 < 64 r
    if gap * gap < 64 * r:
        return LowerBoundPlan(n, r, s, "direct-first-moment", r, s, exponent_floor=floor_exp)
    a = 16 * r // gap
    b = a - 1
    r_prime = r // a * a
    s_prime = -(-s // b) * b
    m, d = r_prime // a, s_prime // b
    return LowerBoundPlan(n, r, s, "product-of-codes", a, b, r_prime, s_prime, m, d,
                          Fraction(r_prime, a) - Fraction(s_prime, b), floor_exp)


def turan_number(N: int, n: int) -> int:
    """Edges of the balanced complete (n-1)-partite graph on N vertices = ex(N, K_n)."""
    _require(n >= 2 and N >= 0, "need n >= 2")
    parts = n - 1
    size, extra = divmod(N, parts)
    return comb(N, 2) - extra * comb(size + 1, 2) - (parts - extra) * comb(size, 2)


def turan_upper(n: int, r: int, s: int, *, scan_limit: int = DEFAULT_SCAN_LIMIT) -> BoundReport:
    """Least N >= n with s/r > ex(N, K_n) / C(N, 2)."""
    _require(r > s >= 1 and n >= 2, "need r > s >= 1 and n >= 2")
    params = {"n": n, "r": r, "s": s}
    prov = "least N with s/r > ex(N, K_n)/C(N, 2)"
    # ex(N, K_n)/C(N, 2) >= 1 - 1/(n-1) for every N, so smaller s/r never qualifies
    if s * (n - 1) <= r * (n - 2):
        return BoundReport("turan_upper", "upper", params, None, prov, "s/r <= 1 - 1/(n-1): never satisfied")
    for N in range(n, scan_limit + 1):
        if s * comb(N, 2) > r * turan_number(N, n):
            return BoundReport("turan_upper", "upper", params, N, prov)
    return BoundReport("turan_upper", "upper", params, None, prov, f"no bound within N <= {scan_limit}")


def trivial_value(n: int, r: int, s: int) -> int | None:
    """n when (r - s) C(n, 2) < r, i.e. some color must lie on every edge of K_n."""
    return n if (r - s) * comb(n, 2) < r else None


def lefmann_product(first: BoundReport, second: BoundReport) -> BoundReport:
    """R(n; r1 + r2) - 1 >= (R(n; r1) - 1)(R(n; r2) - 1) for single-color edges."""
    for rep in (first, second):
        _require(rep.direction == "lower" and rep.value is not None, "inputs must be materialised lower bounds")
        _require(rep.parameters.get("s", 1) == 1, "the product inequality is for s = 1")
    n = first.parameters["n"]
    _require(second.parameters["n"] == n, "both bounds must be for the same n")
    r = first.parameters["r"] + second.parameters["r"]
    value = (first.value - 1) * (second.value - 1) + 1
    return BoundReport("lefmann_product", "lower", {"n": n, "r": r, "s": 1}, value,
                       "R(n; r1+r2) - 1 >= (R(n; r1) - 1)(R(n; r2) - 1)")


def known_lower(n: int, r: int, value: int, source: str = "certified") -> BoundReport:
    """Wrap an externally certified R(n; r, 1) >= value for use in products."""
    return BoundReport(source, "lower", {"n": n, "r": r, "s": 1}, value, source)


def hypergraph_upper(
    n: int, k: int, r: int, s: int, base_value: int, *, digit_budget: int = DEFAULT_DIGIT_BUDGET
) -> BoundReport:
    """C(r, s) ^ C(base_value, k - 1), given base_value >= R_{k-1}(n-1; r, s)."""
    _require(k >= 3 and n > k and r > s >= 1, "need n > k >= 3 and r > s >= 1")
    _require(base_value >= k - 1, "base value below k - 1 is impossible")
    base, exponent = comb(r, s), comb(base_value, k - 1)
    params = {"n": n, "k": k, "r": r, "s": s, "base_value": base_value}
    prov = "C(r,s)^C(R_{k-1}(n-1;r,s), k-1)"
    if exponent * log10(base) > digit_budget:
        return BoundReport("hypergraph_upper", "upper", params, None, prov,
                           "not materialised: digit budget", (base, exponent))
    return BoundReport("hypergraph_upper", "upper", params, base ** exponent, prov)


def upper_bounds(n: int, r: int, s: int) -> list[BoundReport]:
    """Every upper-bound formula whose preconditions hold at (n, r, s)."""
    out = []
    t = trivial_value(n, r, s)
    if t is not None:
        out.append(BoundReport("trivial", "upper", {"n": n, "r": r, "s": s}, t, "(r-s) C(n,2) < r"))
    rep = turan_upper(n, r, s)
    if rep.value is not None:
        out.append(rep)
    if n >= 3:
        out.append(simple_upper(n, r, s))
    if 10 * s > 9 * r:
        rep = upper_s_large(n, r, s)
        if rep.value is not None:
            out.append(rep)
    return out


def formula_lower_bounds(n: int, r: int, s: int) -> list[BoundReport]:
    """Lower-bound formulas applicable at (n, r, s); R >= n always holds."""
    out = [BoundReport("order", "lower", {"n": n, "r": r, "s": s}, n, "K_{n-1} has no K_n")]
    if 2 * s >= r and factorial(n) >= r and n >= 2:
        out.append(first_moment_lower(n, r, s))
        if n >= 3:
            out.append(first_moment_exponential(n, r, s))
    return out
