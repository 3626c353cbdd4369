"""Sparse multivariate polynomials over the variables x, p, q, u, v.

Coefficients are plain Python integers, so everything stays exact at any
size.  Polynomials are value objects: construct, combine, compare, but never
mutate one in place.  Variable alignment between operands is by name, and a
canonical form (variables sorted x < p < q < u < v, unused variables
dropped, zero coefficients dropped) makes structural equality coincide with
mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

VAR_ORDER = ("x", "p", "q", "u", "v")
_VAR_RANK = {name: rank for rank, name in enumerate(VAR_ORDER)}


def _coerce(value) -> "MultiPoly":
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return MultiPoly.const(value)
    raise TypeError(f"cannot treat {type(value).__name__} as a polynomial")


class MultiPoly:
    """A polynomial stored as a map from exponent vectors to integer coefficients."""

    __slots__ = ("variables", "terms")

    def __init__(
        self,
        variables: Iterable[str] = (),
        terms: Mapping[tuple[int, ...], int] | None = None,
    ):
        names = tuple(variables)
        for name in names:
            if name not in _VAR_RANK:
                raise ValueError(
                    f"unknown variable {name!r}: choose from {', '.join(VAR_ORDER)}"
                )
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable in {names}")

        merged: dict[tuple[int, ...], int] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != len(names):
                raise ValueError(
                    f"exponent vector {key} does not match variables {names}"
                )
            if any(not isinstance(e, int) or e < 0 for e in key):
                raise ValueError(f"exponents must be nonnegative integers: {key}")
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(
                    f"coefficients must be int, got {type(coeff).__name__}"
                )
            if coeff:
                total = merged.get(key, 0) + coeff
                if total:
                    merged[key] = total
                else:
                    del merged[key]

        order = sorted(range(len(names)), key=lambda i: _VAR_RANK[names[i]])
        names = tuple(names[i] for i in order)
        merged = {tuple(key[i] for i in order): c for key, c in merged.items()}

        # drop variables that no term actually uses, so equal polynomials
        # always have identical storage
        if names:
            keep = [i for i in range(len(names)) if any(key[i] for key in merged)]
            if len(keep) != len(names):
                names = tuple(names[i] for i in keep)
                merged = {
                    tuple(key[i] for i in keep): c for key, c in merged.items()
                }

        self.variables = names
        self.terms = merged

    @classmethod
    def const(cls, value: int) -> "MultiPoly":
        """The constant polynomial `value`."""
        return cls((), {(): value} if value else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "MultiPoly":
        """The monomial name**power with coefficient 1."""
        if power == 0:
            return cls.const(1)
        return cls((name,), {(power,): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        names, ta, tb = _aligned(self, other)
        out = dict(ta)
        for key, coeff in tb.items():
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return MultiPoly(names, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        names, ta, tb = _aligned(self, other)
        out: dict[tuple[int, ...], int] = {}
        for ka, ca in ta.items():
            for kb, cb in tb.items():
                key = tuple(ea + eb for ea, eb in zip(ka, kb))
                total = out.get(key, 0) + ca * cb
                if total:
                    out[key] = total
                else:
                    del out[key]
        return MultiPoly(names, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent}")
        result = MultiPoly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- queries ------------------------------------------------------------

    def degree(self, name: str) -> int:
        """Largest exponent of `name`; 0 if absent, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if name not in self.variables:
            return 0
        i = self.variables.index(name)
        return max(key[i] for key in self.terms)

    def coefficient(self, name: str, power: int) -> "MultiPoly":
        """The coefficient of name**power, as a polynomial in the other variables."""
        if name not in self.variables:
            return self if power == 0 else MultiPoly.const(0)
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1 :]
        picked = {
            key[:i] + key[i + 1 :]: c
            for key, c in self.terms.items()
            if key[i] == power
        }
        return MultiPoly(rest, picked)

    def monomial_coefficient(self, exponents: Mapping[str, int]) -> int:
        """Integer coefficient of one monomial; unnamed variables mean exponent 0."""
        for name in exponents:
            if name not in _VAR_RANK:
                raise ValueError(f"unknown variable {name!r}")
        for name, e in exponents.items():
            if e and name not in self.variables:
                return 0
        key = tuple(exponents.get(name, 0) for name in self.variables)
        return self.terms.get(key, 0)

    def constant_term(self) -> int:
        return self.monomial_coefficient({})

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        """Exact value at the given point; every variable present must be assigned."""
        for name in self.variables:
            if name not in assignment:
                raise ValueError(f"no value given for variable {name!r}")
        total = Fraction(0)
        for key, coeff in self.terms.items():
            value = Fraction(coeff)
            for name, e in zip(self.variables, key):
                if e:
                    value *= Fraction(assignment[name]) ** e
            total += value
        return total

    def substitute(self, name: str, replacement) -> "MultiPoly":
        """Replace every occurrence of `name` by a polynomial (or integer)."""
        replacement = _coerce(replacement)
        if name not in self.variables:
            return self
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1 :]
        powers = [MultiPoly.const(1)]
        result = MultiPoly.const(0)
        for key, coeff in sorted(self.terms.items()):
            e = key[i]
            while len(powers) <= e:
                powers.append(powers[-1] * replacement)
            mono = MultiPoly(rest, {key[:i] + key[i + 1 :]: coeff})
            result = result + mono * powers[e]
        return result

    # -- canonical presentation ----------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded-lexicographic order (degree first, then x before p before q...)."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (sum(kv[0]), tuple(-e for e in kv[0])),
        )

    def __str__(self):
        if not self.terms:
            return "0"
        # x is rendered last inside a monomial so coefficients in the
        # deformation parameters read naturally, e.g. q*x + p*x^2
        render = [n for n in self.variables if n != "x"]
        if "x" in self.variables:
            render.append("x")
        index = {n: self.variables.index(n) for n in render}
        pieces = []
        for key, coeff in self.sorted_terms():
            factors = []
            for name in render:
                e = key[index[name]]
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            if not pieces:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self})"

    # -- JSON wire format -----------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        """Schema: list of {"exponents": {var: exp, ...}, "coeff": decimal string}.

        Coefficients are decimal strings because they routinely exceed 64 bits.
        """
        out = []
        for key, coeff in self.sorted_terms():
            present = {n: e for n, e in zip(self.variables, key) if e}
            exps = {name: present[name] for name in VAR_ORDER if name in present}
            out.append({"exponents": exps, "coeff": str(coeff)})
        return out

    @classmethod
    def from_json_obj(cls, data: Iterable[Mapping]) -> "MultiPoly":
        items = list(data)
        names = sorted(
            {n for item in items for n in item["exponents"]},
            key=_VAR_RANK.__getitem__,
        )
        terms: dict[tuple[int, ...], int] = {}
        for item in items:
            key = tuple(int(item["exponents"].get(n, 0)) for n in names)
            terms[key] = terms.get(key, 0) + int(item["coeff"])
        return cls(tuple(names), terms)


def _aligned(a: MultiPoly, b: MultiPoly):
    """Common variable tuple plus both term maps re-keyed onto it."""
    if a.variables == b.variables:
        return a.variables, a.terms, b.terms
    names = tuple(
        sorted(set(a.variables) | set(b.variables), key=_VAR_RANK.__getitem__)
    )
    return names, _embed(a, names), _embed(b, names)


def _embed(poly: MultiPoly, names: tuple[str, ...]) -> dict[tuple[int, ...], int]:
    pos = {n: i for i, n in enumerate(names)}
    out = {}
    for key, coeff in poly.terms.items():
        full = [0] * len(names)
        for name, e in zip(poly.variables, key):
            full[pos[name]] = e
        out[tuple(full)] = coeff
    return out
