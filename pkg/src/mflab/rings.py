"""Sparse multivariate polynomials over a cyclotomic field, with rational weights.

A ring is fixed by an ordered tuple of variable names, a rational weight
q_i per variable, and a cyclotomic order.  The weighted degree of x_i is
2*q_i, so that a potential normalised to weighted degree 2 has charges
q_i readable straight off the ring, and twisted differentials sit in
degree 1.

Monomial order everywhere is graded lexicographic over the declared
variable order; this makes Groebner bases and standard-monomial sets
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import CycloNumber


class RingMismatchError(ValueError):
    """Operands live over different rings."""


@dataclass(frozen=True)
class RingSpec:
    """Ordered variables, per-variable rational weights, cyclotomic order."""

    variables: tuple[str, ...]
    weights: tuple[Fraction, ...]
    cyclo_order: int = 1

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        if len(self.variables) != len(self.weights):
            raise ValueError("one weight per variable required")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if "z" in self.variables:
            raise ValueError("'z' is reserved for the root of unity")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def var_degree(self, i: int) -> Fraction:
        """Weighted degree of the i-th variable (2 * q_i)."""
        return 2 * self.weights[i]

    def monomial_degree(self, exps) -> Fraction:
        return sum((e * 2 * w for e, w in zip(exps, self.weights)), Fraction(0))

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.constant(1)

    def constant(self, value) -> "MultiPoly":
        c = value if isinstance(value, CycloNumber) else CycloNumber.from_rational(
            value, self.cyclo_order
        )
        c = c.to_order(self.cyclo_order)
        if c.is_zero():
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: c})

    def var(self, name: str) -> "MultiPoly":
        i = self.index(name)
        exps = tuple(1 if j == i else 0 for j in range(self.nvars))
        return MultiPoly(self, {exps: CycloNumber.one(self.cyclo_order)})

    def zeta(self, power: int = 1) -> CycloNumber:
        return CycloNumber.zeta(self.cyclo_order, power)

    def monomial(self, exps, coeff=1) -> "MultiPoly":
        c = coeff if isinstance(coeff, CycloNumber) else CycloNumber.from_rational(
            coeff, self.cyclo_order
        )
        c = c.to_order(self.cyclo_order)
        if c.is_zero():
            return MultiPoly(self, {})
        return MultiPoly(self, {tuple(exps): c})


def grlex_key(exps):
    """Sort key: ascending graded-lex (use reverse=True for leading terms)."""
    return (sum(exps), exps)


class MultiPoly:
    """Sparse polynomial; terms map exponent tuples to nonzero CycloNumbers."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    # -- basic queries --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def constant_term(self) -> CycloNumber:
        zero_exp = (0,) * self.ring.nvars
        return self.terms.get(zero_exp, CycloNumber.zero(self.ring.cyclo_order))

    def leading_monomial(self):
        """Largest exponent tuple in graded-lex order; None when zero."""
        if not self.terms:
            return None
        return max(self.terms, key=grlex_key)

    def leading_coeff(self) -> CycloNumber:
        return self.terms[self.leading_monomial()]

    def weighted_degree(self):
        """Max weighted degree over terms; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.ring.monomial_degree(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.monomial_degree(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, degree: Fraction) -> "MultiPoly":
        return MultiPoly(
            self.ring,
            {e: c for e, c in self.terms.items()
             if self.ring.monomial_degree(e) == degree},
        )

    # -- arithmetic -------------------------------------------------------

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(
                f"ring mismatch: {self.ring.variables} vs {other.ring.variables}"
            )

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.constant(other)
        self._check_ring(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = out[e] + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check_ring(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                if e in out:
                    s = out[e] + p
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                elif not p.is_zero():
                    out[e] = p
        return MultiPoly(self.ring, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "MultiPoly":
        if not isinstance(c, CycloNumber):
            c = CycloNumber.from_rational(c, self.ring.cyclo_order)
        c = c.to_order(self.ring.cyclo_order)
        if c.is_zero():
            return self.ring.zero()
        return MultiPoly(self.ring, {e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int,)) and other == 0:
                return self.is_zero()
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    # -- calculus / structure ----------------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        i = self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            nc = c * e[i]
            if ne in out:
                out[ne] = out[ne] + nc
            else:
                out[ne] = nc
        return MultiPoly(self.ring, out)

    def embed_into(self, ring: RingSpec) -> "MultiPoly":
        """Map into a larger ring matching variables by name."""
        if ring == self.ring:
            return self
        if ring.cyclo_order % self.ring.cyclo_order != 0:
            raise RingMismatchError("cyclotomic order does not embed")
        idx = []
        for k, name in enumerate(self.ring.variables):
            j = ring.variables.index(name) if name in ring.variables else -1
            if j < 0:
                raise RingMismatchError(f"variable {name} missing from target ring")
            if ring.weights[j] != self.ring.weights[k]:
                raise RingMismatchError(f"weight of {name} differs in target ring")
            idx.append(j)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * ring.nvars
            for k, ek in enumerate(e):
                ne[idx[k]] = ek
            out[tuple(ne)] = c.to_order(ring.cyclo_order)
        return MultiPoly(ring, out)

    def restrict_to(self, ring: RingSpec) -> "MultiPoly":
        """Project onto a subring; fails if any term uses a missing variable."""
        positions = []
        for name in ring.variables:
            positions.append(self.ring.index(name))
        keep = set(positions)
        out = {}
        for e, c in self.terms.items():
            for k, ek in enumerate(e):
                if ek and k not in keep:
                    raise RingMismatchError(
                        f"term uses variable {self.ring.variables[k]} outside subring"
                    )
            out[tuple(e[p] for p in positions)] = c.to_order(ring.cyclo_order)
        return MultiPoly(ring, out)

    def split_by(self, var_names) -> dict:
        """Group terms by their exponents in var_names.

        Returns {exponent-tuple-over-var_names: MultiPoly in remaining vars},
        the values living over the complementary subring.
        """
        sel = [self.ring.index(v) for v in var_names]
        rest = [i for i in range(self.ring.nvars) if i not in sel]
        sub = RingSpec(
            tuple(self.ring.variables[i] for i in rest),
            tuple(self.ring.weights[i] for i in rest),
            self.ring.cyclo_order,
        )
        groups: dict[tuple, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] for i in sel)
            groups.setdefault(key, {})[tuple(e[i] for i in rest)] = c
        return {k: MultiPoly(sub, v) for k, v in groups.items()}

    def substitute(self, assignment: dict) -> "MultiPoly":
        """Replace variables by polynomials of the same ring."""
        result = self.ring.zero()
        for e, c in self.terms.items():
            term = self.ring.constant(c)
            for i, ek in enumerate(e):
                if ek == 0:
                    continue
                name = self.ring.variables[i]
                if name in assignment:
                    term = term * (assignment[name] ** ek)
                else:
                    term = term * (self.ring.var(name) ** ek)
            result = result + term
        return result

    def evaluate_numeric(self, values: dict) -> complex:
        """Evaluate at complex values, one per variable."""
        total = 0j
        for e, c in self.terms.items():
            v = c.embed()
            for i, ek in enumerate(e):
                if ek:
                    v *= values[self.ring.variables[i]] ** ek
            total += v
        return total

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __repr__(self):
        from .grammar import format_poly

        return f"MultiPoly({format_poly(self)})"


class PolyMatrix:
    """Dense matrix of MultiPoly entries over a shared ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: RingSpec, entries):
        self.ring = ring
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for p in row:
                if p.ring != ring:
                    raise RingMismatchError("matrix entry over a different ring")

    @staticmethod
    def zero(ring: RingSpec, rows: int, cols: int) -> "PolyMatrix":
        return PolyMatrix(ring, [[ring.zero() for _ in range(cols)] for _ in range(rows)])

    @staticmethod
    def identity(ring: RingSpec, n: int) -> "PolyMatrix":
        m = PolyMatrix.zero(ring, n, n)
        for i in range(n):
            m.entries[i][i] = ring.one()
        return m

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            if self.cols != other.rows:
                raise ValueError("matrix shape mismatch")
            out = PolyMatrix.zero(self.ring, self.rows, other.cols)
            for i in range(self.rows):
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    for j in range(other.cols):
                        b = other.entries[k][j]
                        if not b.is_zero():
                            out.entries[i][j] = out.entries[i][j] + a * b
            return out
        out = PolyMatrix.zero(self.ring, self.rows, self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out.entries[i][j] = self.entries[i][j] * other
        return out

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape mismatch")
        return PolyMatrix(
            self.ring,
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __sub__(self, other):
        return self + (other * (-1))

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(
            self.ring,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def map_entries(self, fn) -> "PolyMatrix":
        return PolyMatrix(
            self.ring, [[fn(p) for p in row] for row in self.entries]
        )

    def det(self) -> MultiPoly:
        """Cofactor expansion; fine for the small matrices used here."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return self.ring.one()
        if n == 1:
            return self.entries[0][0]
        total = self.ring.zero()
        for j in range(n):
            a = self.entries[0][j]
            if a.is_zero():
                continue
            minor = PolyMatrix(
                self.ring,
                [
                    [self.entries[i][k] for k in range(n) if k != j]
                    for i in range(1, n)
                ],
            )
            term = a * minor.det()
            total = total + (term if j % 2 == 0 else -term)
        return total

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"
