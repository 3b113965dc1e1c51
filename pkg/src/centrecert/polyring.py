"""Sparse multivariate polynomials with exact integer or mod-p coefficients.

Polynomials are stored as ``{Monomial: coefficient}`` dictionaries and never
carry an ordering of their own; every leading-term query takes a
:class:`MonomialOrder` argument, because the same polynomial is routinely
inspected under several orders.

Variables belong to one of four families::

    xi_i_j   matrix coordinates (1 <= i, j <= n)
    u_k      generators of the Harish-Chandra part
    z_k      square roots of the principal minors
    x_k      variables for symmetric functions
"""

from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

__all__ = [
    "Variable", "xi", "u", "z", "x",
    "Monomial", "IntegerRing", "PrimeField", "ZZ", "GF",
    "Polynomial", "MonomialOrder", "Lex", "DegLex", "DegRevLex", "BlockProduct",
    "lex_xi", "degrevlex_u", "lex_z", "lex_x", "block_order", "reading_order",
    "DivisionResult", "PolynomialError", "DomainMismatchError",
    "NonUnitLeadingCoefficientError", "OrderUniverseError", "MissingBindingError",
    "add", "mul", "leading_term", "partial_derivative", "evaluate", "substitute",
    "divide_with_remainder", "s_polynomial", "map_coefficients", "exact_quotient",
    "format_poly", "parse_poly",
]


class PolynomialError(ValueError):
    pass


class DomainMismatchError(PolynomialError):
    pass


class NonUnitLeadingCoefficientError(PolynomialError):
    pass


class OrderUniverseError(PolynomialError):
    pass


class MissingBindingError(KeyError):
    pass


# ---------------------------------------------------------------------------
# variables and monomials
# ---------------------------------------------------------------------------

_KINDS = ("u", "x", "xi", "z")


class Variable(NamedTuple):
    """A named indeterminate; ``j`` is only used by the ``xi`` family."""

    kind: str
    i: int
    j: int = 0

    @property
    def name(self) -> str:
        if self.kind == "xi":
            return f"xi_{self.i}_{self.j}"
        return f"{self.kind}_{self.i}"

    def __repr__(self) -> str:
        return self.name


def _check_index(*idx: int) -> None:
    for k in idx:
        if not isinstance(k, int) or k < 1:
            raise PolynomialError(f"variable indices must be positive integers, got {idx}")


def xi(i: int, j: int) -> Variable:
    _check_index(i, j)
    return Variable("xi", i, j)


def u(k: int) -> Variable:
    _check_index(k)
    return Variable("u", k)


def z(k: int) -> Variable:
    _check_index(k)
    return Variable("z", k)


def x(k: int) -> Variable:
    _check_index(k)
    return Variable("x", k)


class Monomial(tuple):
    """Power product stored as a sorted tuple of ``(Variable, exponent)`` pairs.

    Zero exponents are never stored, so equal monomials have equal tuples.
    """

    __slots__ = ()

    def __new__(cls, pairs: Iterable[tuple[Variable, int]] = ()):
        merged: dict[Variable, int] = {}
        for v, e in pairs:
            if e < 0:
                raise PolynomialError("negative exponent")
            if e:
                merged[v] = merged.get(v, 0) + e
        return tuple.__new__(cls, sorted(merged.items()))

    @classmethod
    def _raw(cls, sorted_pairs) -> "Monomial":
        return tuple.__new__(cls, sorted_pairs)

    @classmethod
    def of(cls, *factors: Union[Variable, tuple[Variable, int]]) -> "Monomial":
        """``Monomial.of(xi(1,1), (u(2), 3))`` builds xi_1_1*u_2^3."""
        pairs = [(f, 1) if isinstance(f, Variable) else f for f in factors]
        return cls(pairs)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self)

    def exponent(self, v: Variable) -> int:
        for w, e in self:
            if w == v:
                return e
        return 0

    def as_dict(self) -> dict[Variable, int]:
        return dict(self)

    def variables(self) -> frozenset[Variable]:
        return frozenset(v for v, _ in self)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other:
            return self
        if not self:
            return other
        d = dict(self)
        for v, e in other:
            d[v] = d.get(v, 0) + e
        return Monomial._raw(sorted(d.items()))

    def divides(self, other: "Monomial") -> bool:
        d = dict(other)
        return all(d.get(v, 0) >= e for v, e in self)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = dict(self)
        for v, e in other:
            r = d.get(v, 0) - e
            if r < 0:
                raise PolynomialError(f"{other!r} does not divide {self!r}")
            if r:
                d[v] = r
            else:
                del d[v]
        return Monomial._raw(sorted(d.items()))

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self)
        for v, e in other:
            if e > d.get(v, 0):
                d[v] = e
        return Monomial._raw(sorted(d.items()))

    def coprime(self, other: "Monomial") -> bool:
        return not (self.variables() & other.variables())

    def __repr__(self) -> str:
        if not self:
            return "1"
        return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in self)

    # tuple comparison would otherwise leak an arbitrary order into user code
    def __lt__(self, other):
        return NotImplemented

    __le__ = __gt__ = __ge__ = __lt__


ONE = Monomial()


# ---------------------------------------------------------------------------
# coefficient domains
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntegerRing:
    def reduce(self, c: int) -> int:
        return c

    def unit_inverse(self, c: int) -> int:
        if c not in (1, -1):
            raise NonUnitLeadingCoefficientError(
                f"leading coefficient {c} is not a unit of ZZ")
        return c

    def __str__(self) -> str:
        return "ZZ"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and self.p > 2 and _is_prime(self.p)):
            raise PolynomialError(f"PrimeField needs an odd prime, got {self.p}")

    def reduce(self, c: int) -> int:
        return c % self.p

    def unit_inverse(self, c: int) -> int:
        c %= self.p
        if not c:
            raise ZeroDivisionError("zero has no inverse")
        return pow(c, -1, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"


ZZ = IntegerRing()
Domain = Union[IntegerRing, PrimeField]


def GF(p: int) -> PrimeField:
    return PrimeField(p)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable sparse polynomial over :data:`ZZ` or a :class:`PrimeField`.

    Integers are coerced on arithmetic with a polynomial, so ``2*f - 1``
    works as expected.
    """

    __slots__ = ("_terms", "domain", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, domain: Domain = ZZ):
        clean = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(m, Monomial):
                    m = Monomial(m)
                c = domain.reduce(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self.domain = domain
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict, domain: Domain) -> "Polynomial":
        # caller guarantees canonical form: reduced, nonzero coefficients
        obj = object.__new__(cls)
        obj._terms = terms
        obj.domain = domain
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int, domain: Domain = ZZ) -> "Polynomial":
        return cls({ONE: c}, domain)

    @classmethod
    def var(cls, v: Variable, domain: Domain = ZZ) -> "Polynomial":
        return cls._wrap({Monomial._raw(((v, 1),)): 1}, domain)

    @classmethod
    def monomial(cls, m: Monomial, c: int = 1, domain: Domain = ZZ) -> "Polynomial":
        return cls({m: c}, domain)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def constant_term(self) -> int:
        return self._terms.get(ONE, 0)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE in self._terms)

    def variables(self) -> frozenset[Variable]:
        out = set()
        for m in self._terms:
            out.update(v for v, _ in m)
        return frozenset(out)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(m.degree for m in self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other, self.domain)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.domain == other.domain and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.domain, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({format_poly(self)!r}, {self.domain})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.domain != self.domain:
                raise DomainMismatchError(f"{self.domain} vs {other.domain}")
            return other
        if isinstance(other, int):
            return Polynomial.constant(other, self.domain)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.domain.reduce
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = red(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._wrap(out, self.domain)

    __radd__ = __add__

    def __neg__(self):
        red = self.domain.reduce
        return Polynomial._wrap({m: red(-c) for m, c in self._terms.items()}, self.domain)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.domain.reduce
        out: dict[Monomial, int] = {}
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma * mb
                out[m] = out.get(m, 0) + ca * cb
        return Polynomial._wrap({m: c for m, c in ((m, red(c)) for m, c in out.items()) if c},
                                self.domain)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise PolynomialError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.domain)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale_monomial(self, m: Monomial, c: int) -> "Polynomial":
        """Return ``c * m * self``."""
        red = self.domain.reduce
        out = {}
        for mm, cc in self._terms.items():
            v = red(cc * c)
            if v:
                out[mm * m] = v
        return Polynomial._wrap(out, self.domain)


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------


class MonomialOrder:
    """Total multiplicative order on monomials over a fixed variable tuple.

    ``variables`` lists the universe from most to least significant; it also
    fixes the order in which variables are written inside a rendered term.
    Subclasses implement ``_key``; larger keys mean larger monomials.
    """

    name = "order"

    def __init__(self, variables: Sequence[Variable]):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise PolynomialError("repeated variable in order")
        self.universe = frozenset(self.variables)
        self._cache: dict[Monomial, tuple] = {}
        self._heap_cache: dict[Monomial, tuple] = {}

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m)
        if k is None:
            for v, _ in m:
                if v not in self.universe:
                    raise OrderUniverseError(f"{v.name} is outside the universe of {self.name}")
            k = self._key(dict(m))
            self._cache[m] = k
        return k

    def _key(self, exps: dict) -> tuple:
        raise NotImplementedError

    def heap_key(self, m: Monomial) -> tuple:
        """A key whose ascending order is the descending monomial order."""
        k = self._heap_cache.get(m)
        if k is None:
            k = _negate(self.key(m))
            self._heap_cache[m] = k
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.key(a) > self.key(b)

    def __eq__(self, other):
        return type(self) is type(other) and self.variables == other.variables

    def __hash__(self):
        return hash((type(self).__name__, self.variables))

    def __getstate__(self):
        return {"variables": self.variables, "name": self.name}

    def __setstate__(self, state):
        MonomialOrder.__init__(self, state["variables"])
        self.name = state["name"]

    def __repr__(self):
        return f"{type(self).__name__}({self.name})"


def _negate(k):
    return tuple(-e for e in k)


class Lex(MonomialOrder):
    def __init__(self, variables, name="lex"):
        super().__init__(variables)
        self.name = name

    def _key(self, exps):
        return tuple(exps.get(v, 0) for v in self.variables)


class DegLex(MonomialOrder):
    def __init__(self, variables, name="deglex"):
        super().__init__(variables)
        self.name = name

    def _key(self, exps):
        exps = [exps.get(v, 0) for v in self.variables]
        return (sum(exps),) + tuple(exps)


class DegRevLex(MonomialOrder):
    """Higher degree wins; on ties the smaller exponent at the last differing
    variable wins."""

    def __init__(self, variables, name="degrevlex"):
        super().__init__(variables)
        self.name = name

    def _key(self, exps):
        exps = [exps.get(v, 0) for v in self.variables]
        return (sum(exps),) + tuple(-e for e in reversed(exps))


class BlockProduct(MonomialOrder):
    """Lexicographic product of orders on disjoint variable blocks, outermost first."""

    def __init__(self, blocks: Sequence[MonomialOrder], name=None):
        self.blocks = tuple(blocks)
        super().__init__([v for b in self.blocks for v in b.variables])
        self.name = name or " > ".join(b.name for b in self.blocks)

    def _key(self, exps):
        # block keys have fixed length, so concatenation is the lex product
        return tuple(e for b in self.blocks for e in b._key(exps))

    def __eq__(self, other):
        return isinstance(other, BlockProduct) and self.blocks == other.blocks

    def __hash__(self):
        return hash(("BlockProduct", self.blocks))

    def __getstate__(self):
        return {"blocks": self.blocks, "name": self.name}

    def __setstate__(self, state):
        BlockProduct.__init__(self, state["blocks"], state["name"])


def lex_xi(n: int) -> Lex:
    """Lex with xi_n_n > xi_n_(n-1) > ... > xi_n_1 > xi_(n-1)_n > ... > xi_1_1."""
    return Lex([xi(i, j) for i in range(n, 0, -1) for j in range(n, 0, -1)], f"lex-xi({n})")


def degrevlex_u(n: int) -> DegRevLex:
    """Degrevlex on u_1 > ... > u_(n-1)."""
    return DegRevLex([u(k) for k in range(1, n)], f"degrevlex-u({n})")


def lex_z(n: int, t: int | None = None) -> Lex:
    t = n - 1 if t is None else t
    return Lex([z(k) for k in range(1, t + 1)], f"lex-z({t})")


def lex_x(n: int) -> Lex:
    return Lex([x(k) for k in range(1, n + 1)], f"lex-x({n})")


def block_order(n: int, t: int | None = None) -> BlockProduct:
    """z-block > u-block > xi-block, each with its own order."""
    return BlockProduct([lex_z(n, t), degrevlex_u(n), lex_xi(n)])


def reading_order(n: int) -> DegLex:
    """Graded lex with xi_1_1 > xi_1_2 > ... > xi_n_n; used for display only."""
    return DegLex([xi(i, j) for i in range(1, n + 1) for j in range(1, n + 1)],
                  f"deglex-xi-reading({n})")


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def leading_term(f: Polynomial, order: MonomialOrder) -> tuple[Monomial, int]:
    if not f:
        raise PolynomialError("the zero polynomial has no leading term")
    m = max(f._terms, key=order.key)
    return m, f._terms[m]


def sorted_terms(f: Polynomial, order: MonomialOrder) -> list[tuple[Monomial, int]]:
    """Terms of ``f`` from largest to smallest."""
    return sorted(f._terms.items(), key=lambda t: order.key(t[0]), reverse=True)


def partial_derivative(f: Polynomial, v: Variable) -> Polynomial:
    red = f.domain.reduce
    out = {}
    for m, c in f._terms.items():
        e = m.exponent(v)
        if not e:
            continue
        dc = red(c * e)
        if dc:
            nm = Monomial._raw(tuple((w, k - 1) if w == v else (w, k) for w, k in m if w != v or k > 1))
            out[nm] = red(out.get(nm, 0) + dc)
            if not out[nm]:
                del out[nm]
    return Polynomial._wrap(out, f.domain)


def evaluate(f: Polynomial, assignment: Mapping[Variable, int]) -> int:
    """Value of ``f`` at an integer point; every variable of ``f`` must be bound."""
    total = 0
    for m, c in f._terms.items():
        term = c
        for v, e in m:
            try:
                val = assignment[v]
            except KeyError:
                raise MissingBindingError(f"no value for {v.name}") from None
            if not val:
                term = 0
                break
            term *= val ** e
        total += term
    return f.domain.reduce(total)


def substitute(f: Polynomial, assignment: Mapping[Variable, Union[int, Polynomial]]) -> Polynomial:
    """Replace the bound variables by integers or polynomials; others stay symbolic."""
    domain = f.domain
    images = {}
    for v, val in assignment.items():
        if isinstance(val, int):
            val = Polynomial.constant(val, domain)
        elif val.domain != domain:
            raise DomainMismatchError(f"{v.name} bound to a {val.domain} polynomial")
        images[v] = val
    powers: dict[tuple[Variable, int], Polynomial] = {}

    def power(v, e):
        key = (v, e)
        if key not in powers:
            powers[key] = images[v] ** e
        return powers[key]

    out = Polynomial(domain=domain)
    pending: dict[Monomial, int] = {}
    for m, c in f._terms.items():
        bound = [(v, e) for v, e in m if v in images]
        if not bound:
            pending[m] = pending.get(m, 0) + c
            continue
        rest = Monomial._raw(tuple((v, e) for v, e in m if v not in images))
        piece = Polynomial.monomial(rest, c, domain)
        for v, e in bound:
            piece = piece * power(v, e)
        out = out + piece
    return out + Polynomial(pending, domain)


class _TermHeap:
    """Working dividend: a term dict plus a lazy max-heap over its monomials."""

    def __init__(self, order: MonomialOrder, terms: dict, domain: Domain):
        self.order = order
        self.terms = terms
        self.red = domain.reduce if isinstance(domain, PrimeField) else None
        self.counter = 0
        self.heap = []
        for m in terms:
            self._push(m)
        heapq.heapify(self.heap)

    def _push(self, m):
        self.counter += 1
        heapq.heappush(self.heap, (self.order.heap_key(m), self.counter, m))

    def pop_max(self) -> Monomial:
        terms, heap = self.terms, self.heap
        while True:
            _, _, m = heapq.heappop(heap)
            if m in terms:
                return m

    def subtract(self, tail, qm: Monomial, qc: int):
        """terms -= qc * qm * tail"""
        terms = self.terms
        for tm, tc in tail:
            nm = tm * qm
            old = terms.get(nm)
            v = (old or 0) - qc * tc
            if self.red is not None:
                v = self.red(v)
            if v:
                terms[nm] = v
                if old is None:
                    self._push(nm)
            elif old is not None:
                del terms[nm]


@dataclass(frozen=True)
class DivisionResult:
    quotients: tuple[Polynomial, ...]
    remainder: Polynomial


def divide_with_remainder(f: Polynomial, divisors: Sequence[Polynomial],
                          order: MonomialOrder) -> DivisionResult:
    """Multivariate division; the first divisor whose leading monomial divides
    the current leading monomial is used.

    Over ZZ every divisor must have leading coefficient +1 or -1.
    """
    domain = f.domain
    red = domain.reduce
    heads = []
    for g in divisors:
        if g.domain != domain:
            raise DomainMismatchError(f"{domain} vs {g.domain}")
        if not g:
            raise PolynomialError("division by the zero polynomial")
        lm, lc = leading_term(g, order)
        heads.append((lm, domain.unit_inverse(lc), [(m, c) for m, c in g._terms.items() if m != lm]))

    p = dict(f._terms)
    heap = _TermHeap(order, p, domain)
    quotients: list[dict] = [{} for _ in divisors]
    remainder: dict[Monomial, int] = {}
    while p:
        m = heap.pop_max()
        c = p.pop(m)
        for idx, (lm, inv, tail) in enumerate(heads):
            if lm.divides(m):
                qm = m / lm
                qc = red(c * inv)
                q = quotients[idx]
                q[qm] = red(q.get(qm, 0) + qc)
                if not q[qm]:
                    del q[qm]
                heap.subtract(tail, qm, qc)
                break
        else:
            remainder[m] = c
    return DivisionResult(tuple(Polynomial._wrap(q, domain) for q in quotients),
                          Polynomial._wrap(remainder, domain))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    if f.domain != g.domain:
        raise DomainMismatchError(f"{f.domain} vs {g.domain}")
    mf, cf = leading_term(f, order)
    mg, cg = leading_term(g, order)
    inv_f, inv_g = f.domain.unit_inverse(cf), g.domain.unit_inverse(cg)
    lcm = mf.lcm(mg)
    return f.scale_monomial(lcm / mf, inv_f) - g.scale_monomial(lcm / mg, inv_g)


def map_coefficients(f: Polynomial, target: Domain) -> Polynomial:
    """Reduce an integer polynomial into ``GF(p)`` (or the identity map)."""
    if target == f.domain:
        return f
    if isinstance(f.domain, IntegerRing) and isinstance(target, PrimeField):
        return Polynomial(f._terms, target)
    raise PolynomialError(f"cannot map coefficients from {f.domain} to {target}")


def exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial:
    """``f / g`` when ``g`` divides ``f`` exactly; raises otherwise."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.domain != g.domain:
        raise DomainMismatchError(f"{f.domain} vs {g.domain}")
    domain = f.domain
    red = domain.reduce
    order = Lex(sorted(f.variables() | g.variables()))
    lm, lc = leading_term(g, order)
    tail = [(m, c) for m, c in g._terms.items() if m != lm]
    p = dict(f._terms)
    heap = _TermHeap(order, p, domain)
    q = {}
    while p:
        m = heap.pop_max()
        c = p.pop(m)
        if not lm.divides(m):
            raise PolynomialError("inexact polynomial division")
        if isinstance(domain, IntegerRing):
            qc, r = divmod(c, lc)
            if r:
                raise PolynomialError("inexact polynomial division")
        else:
            qc = red(c * pow(lc, -1, domain.p))
        qm = m / lm
        q[qm] = qc
        heap.subtract(tail, qm, qc)
    return Polynomial._wrap(q, domain)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

MINUS = "−"


def _default_order(f: Polynomial) -> MonomialOrder:
    return DegLex(sorted(f.variables()), "canonical")


def _render_monomial(m: Monomial, position: Mapping[Variable, int]) -> str:
    big = len(position)
    pairs = sorted(m, key=lambda ve: (position.get(ve[0], big), ve[0]))
    return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in pairs)


def format_poly(f: Polynomial, order: MonomialOrder | None = None) -> str:
    """Render ``f`` with terms in decreasing ``order``.

    Inside a term, variables appear in the order's significance order.
    Negative terms after the first use the separator ' − '.
    """
    if not f:
        return "0"
    if order is None:
        order = _default_order(f)
    position = {v: k for k, v in enumerate(order.variables)}
    out = []
    for k, (m, c) in enumerate(sorted_terms(f, order)):
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = _render_monomial(m, position)
        else:
            body = f"{mag}*{_render_monomial(m, position)}"
        if k == 0:
            out.append(MINUS + body if c < 0 else body)
        else:
            out.append((f" {MINUS} " if c < 0 else " + ") + body)
    return "".join(out)


_FACTOR = re.compile(r"^(?:(xi)_(\d+)_(\d+)|([uzx])_(\d+))(?:\^(\d+))?$")


def parse_poly(text: str, domain: Domain = ZZ) -> Polynomial:
    """Inverse of :func:`format_poly`; also accepts ASCII '-'."""
    s = text.replace(MINUS, "-").strip()
    if not s:
        raise PolynomialError("empty polynomial text")
    tokens = re.split(r"\s*([+-])\s*", s)
    if tokens[0] == "":
        tokens = tokens[1:]
    else:
        tokens = ["+"] + tokens
    terms: dict[Monomial, int] = {}
    for sign, body in zip(tokens[0::2], tokens[1::2]):
        if sign not in "+-" or not body:
            raise PolynomialError(f"malformed polynomial text: {text!r}")
        coeff = 1
        pairs = []
        for factor in body.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            mt = _FACTOR.match(factor)
            if not mt:
                raise PolynomialError(f"bad factor {factor!r}")
            if mt.group(1):
                v = xi(int(mt.group(2)), int(mt.group(3)))
            else:
                v = Variable(mt.group(4), int(mt.group(5)))
            pairs.append((v, int(mt.group(6) or 1)))
        m = Monomial(pairs)
        terms[m] = terms.get(m, 0) + (coeff if sign == "+" else -coeff)
    return Polynomial(terms, domain)
