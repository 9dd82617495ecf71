"""Table-driven arithmetic in small finite fields GF(q), q a prime power <= 16.

Elements are the integers 0..q-1. For q = p^e an element encodes the
polynomial whose base-p digits are its coefficients (constant term lowest),
reduced modulo the smallest monic irreducible polynomial of degree e.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import ResourceLimitError

MAX_FIELD_ORDER = 16


def prime_power(q: int) -> tuple[int, int] | None:
    """(p, e) with q = p^e, or None if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


def _poly_mulmod(a: list[int], b: list[int], modulus: list[int], p: int) -> list[int]:
    e = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    # modulus is monic: x^e = -(lower terms)
    for top in range(len(prod) - 1, e - 1, -1):
        coef = prod[top]
        if coef:
            for i in range(e + 1):
                prod[top - e + i] = (prod[top - e + i] - coef * modulus[i]) % p
    return (prod + [0] * e)[:e]


def _is_irreducible(poly: list[int], p: int) -> bool:
    e = len(poly) - 1
    # trial division by every monic polynomial of degree 1..e//2
    for deg in range(1, e // 2 + 1):
        for low in product(range(p), repeat=deg):
            div = list(low) + [1]
            rem = list(poly)
            for top in range(e, deg - 1, -1):
                coef = rem[top]
                if coef:
                    for i in range(deg + 1):
                        rem[top - deg + i] = (rem[top - deg + i] - coef * div[i]) % p
            if not any(rem[:deg]):
                return False
    return True


def _irreducible(p: int, e: int) -> list[int]:
    for low in product(range(p), repeat=e):
        poly = list(reversed(low)) + [1]
        if poly[0] and _is_irreducible(poly, p):
            return poly
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


class GF:
    """The field with q elements, backed by full addition and multiplication tables."""

    def __init__(self, q: int):
        pe = prime_power(q)
        if pe is None or q > MAX_FIELD_ORDER:
            raise ResourceLimitError(f"unsupported field order {q}: need a prime power <= {MAX_FIELD_ORDER}")
        self.q = q
        self.p, self.e = pe
        p, e = pe
        digits = [[(x // p ** i) % p for i in range(e)] for x in range(q)]

        def encode(coeffs):
            return sum(c * p ** i for i, c in enumerate(coeffs))

        self.add_table = [[encode([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(q)]
                          for x in range(q)]
        self.neg = [encode([(-a) % p for a in digits[x]]) for x in range(q)]
        if e == 1:
            self.mul_table = [[(x * y) % p for y in range(q)] for x in range(q)]
        else:
            mod = _irreducible(p, e)
            self.modulus = mod
            self.mul_table = [[encode(_poly_mulmod(digits[x], digits[y], mod, p)) for y in range(q)]
                              for x in range(q)]

    def add(self, x: int, y: int) -> int:
        return self.add_table[x][y]

    def sub(self, x: int, y: int) -> int:
        return self.add_table[x][self.neg[y]]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x][y]


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
