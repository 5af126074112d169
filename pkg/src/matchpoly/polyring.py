"""Sparse multivariate polynomials with exact rational coefficients.

A MultiPoly stores a sorted tuple of symbol names and a dict mapping exponent
tuples to nonzero int/Fraction coefficients.  Construction normalizes:
coefficients that are integral Fractions collapse to int, zero coefficients
are dropped, and symbols that appear in no term are dropped, so two
mathematically equal polynomials compare equal regardless of how they were
built.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DuplicateNode, NonDivisibleRing, UnassignedSymbol

Scalar = (int, Fraction)


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class MultiPoly:
    __slots__ = ("symbols", "terms")

    def __init__(self, symbols=(), terms=None):
        symbols = tuple(symbols)
        assert list(symbols) == sorted(symbols), "symbols must be pre-sorted"
        terms = dict(terms or {})
        # drop zeros, normalize coefficients
        terms = {e: _norm_coeff(c) for e, c in terms.items() if c != 0}
        # drop unused symbols for a canonical minimal form
        used = [i for i in range(len(symbols)) if any(e[i] for e in terms)]
        if len(used) != len(symbols):
            symbols = tuple(symbols[i] for i in used)
            terms = {tuple(e[i] for i in used): c for e, c in terms.items()}
        self.symbols = symbols
        self.terms = terms

    # -- constructors ---------------------------------------------------

    @staticmethod
    def constant(c):
        c = _norm_coeff(Fraction(c) if not isinstance(c, Scalar) else c)
        return MultiPoly((), {(): c} if c != 0 else {})

    @staticmethod
    def variable(name):
        return MultiPoly((name,), {(1,): 1})

    @staticmethod
    def zero():
        return MultiPoly((), {})

    @staticmethod
    def one():
        return MultiPoly((), {(): 1})

    # -- structure ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.symbols

    def constant_value(self):
        if self.symbols:
            raise ValueError("not a constant polynomial")
        return self.terms.get((), 0)

    def total_degree(self):
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        if name not in self.symbols:
            return 0
        i = self.symbols.index(name)
        return max((e[i] for e in self.terms), default=0)

    def has_integer_coefficients(self):
        return all(isinstance(c, int) for c in self.terms.values())

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.symbols == other.symbols and self.terms == other.terms

    def __hash__(self):
        return hash((self.symbols, frozenset(self.terms.items())))

    # -- alignment ------------------------------------------------------

    def _aligned(self, other):
        """Re-express both operands over the union symbol tuple."""
        if self.symbols == other.symbols:
            return self.symbols, self.terms, other.terms
        merged = tuple(sorted(set(self.symbols) | set(other.symbols)))

        def remap(poly):
            pos = [merged.index(s) for s in poly.symbols]
            out = {}
            for e, c in poly.terms.items():
                full = [0] * len(merged)
                for p, exp in zip(pos, e):
                    full[p] = exp
                out[tuple(full)] = c
            return out

        return merged, remap(self), remap(other)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Scalar):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        symbols, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(symbols, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.symbols, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Scalar):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if other == 0:
                return MultiPoly.zero()
            return MultiPoly(self.symbols, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        symbols, a, b = self._aligned(other)
        out = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(symbols, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- queries ----------------------------------------------------------

    def coefficient(self, mono):
        """Coefficient of an exact monomial in the given symbols.

        mono maps symbol name -> exponent.  Terms matching those exponents
        exactly (including implicit zeros for listed symbols absent from a
        term) are kept, projected onto the remaining symbols.
        """
        for name in mono:
            if name not in self.symbols and mono[name] != 0:
                return MultiPoly.zero()
        idx = {s: i for i, s in enumerate(self.symbols)}
        keep = [i for i, s in enumerate(self.symbols) if s not in mono]
        out_syms = tuple(self.symbols[i] for i in keep)
        out = {}
        for e, c in self.terms.items():
            if all(e[idx[s]] == x for s, x in mono.items() if s in idx):
                key = tuple(e[i] for i in keep)
                out[key] = out.get(key, 0) + c
        return MultiPoly(out_syms, out)

    def evaluate(self, assignment):
        """Evaluate with symbol values from any commutative ring.

        Values may be ints, Fractions, MultiPolys, balls, or anything closed
        under + and *.  Raises UnassignedSymbol when a symbol is missing.
        """
        missing = [s for s in self.symbols if s not in assignment]
        if missing:
            raise UnassignedSymbol("no value for symbol(s): " + ", ".join(missing))
        pow_cache = {}

        def power(i, n):
            key = (i, n)
            if key not in pow_cache:
                v = assignment[self.symbols[i]]
                acc = v
                for _ in range(n - 1):
                    acc = acc * v
                pow_cache[key] = acc
            return pow_cache[key]

        total = None
        for e, c in sorted(self.terms.items()):
            part = None
            for i, exp in enumerate(e):
                if exp:
                    p = power(i, exp)
                    part = p if part is None else part * p
            if part is None:
                term = c
            else:
                term = part if c == 1 else part * c
            total = term if total is None else total + term
        return 0 if total is None else total

    # -- rendering --------------------------------------------------------

    def _term_key(self, e):
        return (-sum(e), tuple(-x for x in e))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, key=self._term_key):
            c = self.terms[e]
            vars_part = "*".join(
                s if x == 1 else f"{s}^{x}"
                for s, x in zip(self.symbols, e)
                if x
            )
            if not vars_part:
                body = str(abs(c))
            elif abs(c) == 1:
                body = vars_part
            else:
                body = f"{abs(c)}*{vars_part}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self})"


def poly_from_fraction(value):
    return MultiPoly.constant(Fraction(value))


def vandermonde_solve(points):
    """Solve for polynomial coefficients from values at distinct integer nodes.

    points is a sequence of (node, value) pairs with distinct int nodes; the
    underlying polynomial has degree < len(points).  Values must admit exact
    division by integers: int, Fraction, and MultiPoly do; balls do not.
    Returns coefficients [a_0, ..., a_{m}] in the value ring (scalars come
    back as int when integral, Fraction otherwise).
    """
    nodes = [p[0] for p in points]
    values = [p[1] for p in points]
    if len(set(nodes)) != len(nodes):
        dup = sorted({x for x in nodes if nodes.count(x) > 1})
        raise DuplicateNode(f"repeated interpolation node(s): {dup}")
    for v in values:
        if not isinstance(v, (int, Fraction, MultiPoly)):
            raise NonDivisibleRing(
                f"values of type {type(v).__name__} do not support exact division"
            )
    m = len(nodes)
    # master polynomial P(y) = prod (y - x_i), coefficients low-to-high
    master = [1]
    for x in nodes:
        nxt = [0] * (len(master) + 1)
        for j, c in enumerate(master):
            nxt[j] += -x * c
            nxt[j + 1] += c
        master = nxt
    coeffs = [0] * m
    for i, x in enumerate(nodes):
        # Q_i = P / (y - x_i) by synthetic division, degree m-1
        q = [0] * m
        carry = master[m]
        for j in range(m - 1, -1, -1):
            q[j] = carry
            carry = master[j] + carry * x
        denom = 1
        for j, other in enumerate(nodes):
            if j != i:
                denom *= x - other
        for j in range(m):
            scale = Fraction(q[j], denom)
            if scale == 0:
                continue
            term = values[i] * scale
            coeffs[j] = coeffs[j] + term if not _is_int_zero(coeffs[j]) else term
    out = []
    for c in coeffs:
        if isinstance(c, Fraction):
            c = _norm_coeff(c)
        out.append(c)
    return out


def _is_int_zero(v):
    return isinstance(v, int) and v == 0
