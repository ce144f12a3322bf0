"""Sparse polynomials with exact integer coefficients.

``QPoly`` is univariate in ``q``; ``MultiPoly`` has a fixed number of
variables ``x_1..x_n`` and stores terms keyed by exponent vectors.
Zero coefficients are never stored.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Mapping


class QPoly:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if v:
                c[int(e)] = int(v)
        self._c = c

    @classmethod
    def monomial(cls, e: int, coef: int = 1) -> "QPoly":
        return cls({e: coef})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "QPoly":
        c: dict[int, int] = defaultdict(int)
        for e in exponents:
            c[e] += 1
        return cls(c)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def degree(self) -> int:
        return max(self._c, default=-1)

    def is_zero(self) -> bool:
        return not self._c

    def __call__(self, q: int) -> int:
        return sum(v * q**e for e, v in self._c.items())

    def __add__(self, other: "QPoly") -> "QPoly":
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return QPoly(c)

    def __neg__(self) -> "QPoly":
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly({e: v * other for e, v in self._c.items()})
        c: dict[int, int] = defaultdict(int)
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] += v1 * v2
        return QPoly(c)

    __rmul__ = __mul__

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``."""
        return QPoly({e + k: v for e, v in self._c.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly({0: other})
        return isinstance(other, QPoly) and self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def to_json(self) -> dict:
        return {"q": {str(e): v for e, v in self.items()}}

    @classmethod
    def from_json(cls, data: Mapping) -> "QPoly":
        return cls({int(e): v for e, v in data["q"].items()})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e, v in self.items():
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"QPoly({self})"


class MultiPoly:
    __slots__ = ("nvars", "_t")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        t = {}
        for e, v in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if v:
                t[e] = int(v)
        self._t = t

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "MultiPoly":
        """The variable ``x_i`` (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def from_exponents(cls, nvars: int, exponents: Iterable[tuple[int, ...]]) -> "MultiPoly":
        t: dict[tuple[int, ...], int] = defaultdict(int)
        for e in exponents:
            t[tuple(e)] += 1
        return cls(nvars, t)

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def is_zero(self) -> bool:
        return not self._t

    def _check(self, other: "MultiPoly") -> None:
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        t = dict(self._t)
        for e, v in other._t.items():
            t[e] = t.get(e, 0) + v
        return MultiPoly(self.nvars, t)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.nvars, {e: -v for e, v in self._t.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(self.nvars, {e: v * other for e, v in self._t.items()})
        self._check(other)
        t: dict[tuple[int, ...], int] = defaultdict(int)
        for e1, v1 in self._t.items():
            for e2, v2 in other._t.items():
                t[tuple(a + b for a, b in zip(e1, e2))] += v1 * v2
        return MultiPoly(self.nvars, t)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.nvars == other.nvars
            and self._t == other._t
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._t.items())))

    def permute_variables(self, perm: tuple[int, ...]) -> "MultiPoly":
        """Substitute ``x_i -> x_{perm[i-1]}`` (1-based values)."""
        t: dict[tuple[int, ...], int] = {}
        for e, v in self._t.items():
            new = [0] * self.nvars
            for i, a in enumerate(e):
                new[perm[i] - 1] += a
            t[tuple(new)] = v
        return MultiPoly(self.nvars, t)

    def reversed_variables(self) -> "MultiPoly":
        """Swap ``x_i <-> x_{n+1-i}`` for all i."""
        return MultiPoly(self.nvars, {e[::-1]: v for e, v in self._t.items()})

    def evaluate(self, values: tuple[int, ...]) -> int:
        total = 0
        for e, v in self._t.items():
            m = v
            for x, a in zip(values, e):
                m *= x**a
            total += m
        return total

    def to_json(self) -> dict:
        return {
            "vars": self.nvars,
            "terms": [{"exp": list(e), "coef": v} for e, v in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MultiPoly":
        return cls(data["vars"], {tuple(t["exp"]): t["coef"] for t in data["terms"]})

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        # highest total degree first, then reverse-lex, which reads naturally
        for e, v in sorted(self._t.items(), key=lambda kv: (-sum(kv[0]), [-a for a in kv[0]])):
            factors = []
            for i, a in enumerate(e, start=1):
                if a == 1:
                    factors.append(f"x{i}")
                elif a > 1:
                    factors.append(f"x{i}^{a}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self})"
