"""Genericity of characters of the split torus, as exponents mod q - 1."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import gcd
from typing import Sequence

from .errors import CapabilityError, InputError

MAX_N = 12
BUDGET = 10**7
KINDS = ("A", "BCD")


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class CharacterTuple:
    q: int
    exps: tuple

    def __post_init__(self):
        if not isinstance(self.q, int) or not _is_prime_power(self.q):
            raise InputError(f"q = {self.q!r} is not a prime power")
        object.__setattr__(self, "exps", tuple(int(c) % (self.q - 1) for c in self.exps))

    def as_json(self) -> dict:
        return {"q": self.q, "exps": list(self.exps)}

    @classmethod
    def from_json(cls, d: dict) -> "CharacterTuple":
        try:
            return cls(int(d["q"]), tuple(d["exps"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed character {d!r}") from exc


def constraints(kind: str, n: int) -> list[tuple[tuple, tuple]]:
    """(I, coefficient vector) pairs; chi violates one when the pairing is 0 mod q - 1.

    Type A: b' on I, -a' on the complement. B, C, D: +1 on I, -1 on a
    disjoint J, one entry per unordered pair {I, J}.
    """
    if kind not in KINDS:
        raise InputError(f"kind must be one of {KINDS}")
    if n > MAX_N:
        raise CapabilityError(f"subset enumeration is capped at n = {MAX_N}")
    out = []
    if kind == "A":
        if n < 2:
            raise InputError("type A needs n >= 2")
        for a in range(1, n):
            b = n - a
            g = gcd(a, b)
            for I in combinations(range(n), a):
                Iset = set(I)
                out.append(((I,), tuple(b // g if i in Iset else -(a // g) for i in range(n))))
        return out
    if n < 1:
        raise InputError("n must be positive")
    seen = set()
    for signs in product((0, 1, -1), repeat=n):
        if not any(signs):
            continue
        neg = tuple(-s for s in signs)
        if neg in seen:
            continue
        seen.add(signs)
        I = tuple(i for i, s in enumerate(signs) if s == 1)
        J = tuple(i for i, s in enumerate(signs) if s == -1)
        out.append(((I, J), signs))
    return out


def _check(kind: str, n: int, chi: CharacterTuple) -> tuple[bool, list]:
    if len(chi.exps) != n:
        raise InputError(f"expected {n} exponents, got {len(chi.exps)}")
    mod = chi.q - 1
    bad = [
        [list(s) for s in sub] if kind == "BCD" else list(sub[0])
        for sub, coeffs in constraints(kind, n)
        if sum(c * e for c, e in zip(coeffs, chi.exps)) % mod == 0
    ]
    return not bad, bad


def is_generic_A(n: int, chi: CharacterTuple) -> tuple[bool, list]:
    """Violations are the offending I (0-based)."""
    return _check("A", n, chi)


def is_generic_BCD(n: int, chi: CharacterTuple) -> tuple[bool, list]:
    """Violations are the offending [I, J] (0-based)."""
    return _check("BCD", n, chi)


def count_generic(kind: str, n: int, q: int) -> int:
    if not _is_prime_power(q):
        raise InputError(f"q = {q} is not a prime power")
    mod = q - 1
    if mod ** n > BUDGET:
        raise CapabilityError(f"(q-1)^n = {mod ** n} exceeds the census budget {BUDGET}")
    rows = [c for _, c in constraints(kind, n)]
    count = 0
    for e in product(range(mod), repeat=n):
        if all(sum(c * x for c, x in zip(row, e)) % mod for row in rows):
            count += 1
    return count
