"""Complex ball arithmetic with exact, auditable radius accounting.

A BallComplex is a rectangle-free ball: midpoint (two libmp floats at the
object's working precision) plus a radius kept as an exact nonnegative
Fraction.  The invariant maintained by every operation: the true value lies
within `rad` of the midpoint.

Soundness strategy, chosen so no step trusts library rounding internals:

* add/sub/mul/div midpoints are computed exactly in Fraction arithmetic over
  the dyadic midpoints, then rounded once to the working precision; the
  rounding error is measured exactly and added to the radius.
* roots take the library's candidate midpoint and certify it after the fact:
  with e = |candidate^d - input| measured exactly and the input ball confined
  to the open right half-plane, the distance from the candidate to the true
  principal root is at most a constant times (e + rad) divided by a root
  separation bound, all evaluated in integer arithmetic.

Radii are rounded up to dyadics with short numerators after every step so
they stay cheap.  Division by a ball containing zero and roots of balls
touching the branch cut are rejected rather than approximated.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath.libmp import (
    from_rational,
    fzero,
    mpc_nthroot,
    mpc_sqrt,
    round_nearest,
    to_str,
)

from .errors import BallContainsZero, DivisorContainsZero, InsufficientPrecision, NotAnInteger

DEFAULT_PREC = 128
_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


def _mpf_to_fraction(x):
    sign, man, exp, bc = x
    man = int(man)
    if man == 0:
        if x == fzero:
            return _ZERO
        raise ValueError(f"nonfinite mpf {x!r}")
    v = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
    return -v if sign else v


def _round_fraction(fr, prec):
    """Round an exact Fraction to an mpf; return (mpf, exact error)."""
    if fr == 0:
        return fzero, _ZERO
    m = from_rational(fr.numerator, fr.denominator, prec, round_nearest)
    return m, abs(fr - _mpf_to_fraction(m))


def _up(fr):
    """Round a nonnegative Fraction up to a dyadic with a short numerator."""
    if fr == 0:
        return _ZERO
    num, den = fr.numerator, fr.denominator
    e = num.bit_length() - den.bit_length() - 18
    if e >= 0:
        scaled = -(-num // (den << e))
        return Fraction(scaled << e)
    scaled = -(-(num << -e) // den)
    return Fraction(scaled, 1 << -e)


def _hypot_bounds(re, im, bits=64):
    """Rational bounds for sqrt(re^2 + im^2), tight to 2^-bits granularity."""
    q = re * re + im * im
    if q == 0:
        return _ZERO, _ZERO
    n, d = q.numerator, q.denominator
    shift = 1 << bits
    root = math.isqrt(n * d * shift * shift)
    den = d * shift
    return Fraction(root, den), Fraction(root + 1, den)


def _iroot_floor(n, d):
    """floor(n ** (1/d)) for nonnegative int n."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    if d == 1:
        return n
    if d == 2:
        return math.isqrt(n)
    x = 1 << -(-n.bit_length() // d)
    while True:
        y = ((d - 1) * x + n // x ** (d - 1)) // d
        if y >= x:
            while x ** d > n:
                x -= 1
            return x
        x = y


def _root_lower(fr, d):
    """Exact lower bound for fr ** (1/d), fr a positive Fraction."""
    n, den = fr.numerator, fr.denominator
    return Fraction(_iroot_floor(n * den ** (d - 1), d), den)


def _clog2(fr):
    """Smallest e with fr <= 2^e, for a positive Fraction."""
    e = fr.numerator.bit_length() - fr.denominator.bit_length() + 1
    while _pow2(e - 1) >= fr:
        e -= 1
    while _pow2(e) < fr:
        e += 1
    return e


def _pow2(e):
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


class BallComplex:
    __slots__ = ("re", "im", "rad", "prec")

    def __init__(self, re, im, rad, prec):
        self.re = re
        self.im = im
        self.rad = rad
        self.prec = prec

    # -- constructors -----------------------------------------------------

    @staticmethod
    def from_int(n, prec=DEFAULT_PREC):
        return BallComplex.from_fraction(Fraction(n), _ZERO, prec)

    @staticmethod
    def from_fraction(re, im=_ZERO, prec=DEFAULT_PREC):
        re, im = Fraction(re), Fraction(im)
        mre, ere = _round_fraction(re, prec)
        mim, eim = _round_fraction(im, prec)
        return BallComplex(mre, mim, _up(ere + eim), prec)

    @staticmethod
    def zero(prec=DEFAULT_PREC):
        return BallComplex(fzero, fzero, _ZERO, prec)

    @staticmethod
    def one(prec=DEFAULT_PREC):
        return BallComplex.from_int(1, prec)

    @staticmethod
    def i(prec=DEFAULT_PREC):
        return BallComplex.from_fraction(_ZERO, Fraction(1), prec)

    # -- views ------------------------------------------------------------

    @property
    def mid_re(self):
        return _mpf_to_fraction(self.re)

    @property
    def mid_im(self):
        return _mpf_to_fraction(self.im)

    @property
    def is_exact(self):
        return self.rad == 0

    def abs_bounds(self):
        low, up = _hypot_bounds(self.mid_re, self.mid_im)
        return max(_ZERO, low - self.rad), up + self.rad

    def contains_zero(self):
        return self.mid_re ** 2 + self.mid_im ** 2 <= self.rad ** 2

    def contains_point(self, p_re, p_im=_ZERO):
        dr = self.mid_re - Fraction(p_re)
        di = self.mid_im - Fraction(p_im)
        return dr * dr + di * di <= self.rad ** 2

    def midpoint_distance_le(self, p_re, p_im, bound):
        dr = self.mid_re - Fraction(p_re)
        di = self.mid_im - Fraction(p_im)
        return dr * dr + di * di <= Fraction(bound) ** 2

    def overlaps(self, other):
        dr = self.mid_re - other.mid_re
        di = self.mid_im - other.mid_im
        s = self.rad + other.rad
        return dr * dr + di * di <= s * s

    def radius_exponent(self):
        if self.rad == 0:
            return None
        return _clog2(self.rad)

    def midpoint_str(self, digits=20):
        re_s = to_str(self.re, digits)
        im_s = to_str(self.im, digits)
        sign = "-" if im_s.startswith("-") else "+"
        return f"{re_s} {sign} {im_s.lstrip('-')}i"

    def __repr__(self):
        e = self.radius_exponent()
        tail = "exact" if e is None else f"rad<=2^{e}"
        return f"BallComplex({self.midpoint_str(12)}; {tail})"

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BallComplex):
            return other
        if isinstance(other, int):
            return BallComplex.from_int(other, self.prec)
        if isinstance(other, Fraction):
            return BallComplex.from_fraction(other, _ZERO, self.prec)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = max(self.prec, o.prec)
        re = self.mid_re + o.mid_re
        im = self.mid_im + o.mid_im
        mre, ere = _round_fraction(re, prec)
        mim, eim = _round_fraction(im, prec)
        return BallComplex(mre, mim, _up(self.rad + o.rad + ere + eim), prec)

    __radd__ = __add__

    def __neg__(self):
        z = BallComplex.zero(self.prec)
        return z - self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = max(self.prec, o.prec)
        re = self.mid_re - o.mid_re
        im = self.mid_im - o.mid_im
        mre, ere = _round_fraction(re, prec)
        mim, eim = _round_fraction(im, prec)
        return BallComplex(mre, mim, _up(self.rad + o.rad + ere + eim), prec)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = max(self.prec, o.prec)
        a, b = self.mid_re, self.mid_im
        c, d = o.mid_re, o.mid_im
        re = a * c - b * d
        im = a * d + b * c
        mre, ere = _round_fraction(re, prec)
        mim, eim = _round_fraction(im, prec)
        _, x_up = _hypot_bounds(a, b)
        _, y_up = _hypot_bounds(c, d)
        rad = x_up * o.rad + y_up * self.rad + self.rad * o.rad + ere + eim
        return BallComplex(mre, mim, _up(rad), prec)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prec = max(self.prec, o.prec)
        c, d = o.mid_re, o.mid_im
        if o.contains_zero():
            raise DivisorContainsZero("divisor ball encloses zero")
        y_low, _ = _hypot_bounds(c, d)
        y_low = y_low - o.rad
        if y_low <= 0:
            raise InsufficientPrecision("cannot exclude zero from the divisor ball")
        a, b = self.mid_re, self.mid_im
        den = c * c + d * d
        re = (a * c + b * d) / den
        im = (b * c - a * d) / den
        mre, ere = _round_fraction(re, prec)
        mim, eim = _round_fraction(im, prec)
        _, q_up = _hypot_bounds(re, im)
        rad = (self.rad + q_up * o.rad) / y_low + ere + eim
        return BallComplex(mre, mim, _up(rad), prec)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = BallComplex.one(self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- roots ----------------------------------------------------------------

    def root(self, degree):
        """Principal degree-th root, degree in {2, 3}.

        Supported inputs: the exact zero ball, exact nonpositive reals, and
        balls confined to the open right half-plane.  Balls that touch the
        imaginary axis (so the branch cut cannot be excluded) raise
        InsufficientPrecision; balls enclosing zero raise BallContainsZero.
        """
        if degree not in (2, 3):
            raise ValueError("only square and cube roots are supported")
        prec = self.prec
        re, im = self.mid_re, self.mid_im
        if self.rad == 0 and re == 0 and im == 0:
            return BallComplex.zero(prec)
        if self.contains_zero():
            raise BallContainsZero("root of a ball enclosing zero")
        low0, _ = _hypot_bounds(re, im)
        if low0 - self.rad <= 0:
            raise InsufficientPrecision("cannot exclude zero from the root input")
        if self.rad == 0 and im == 0 and re < 0:
            pos = BallComplex.from_fraction(-re, _ZERO, prec).root(degree)
            if degree == 2:
                return BallComplex.i(prec) * pos
            # principal cube root of a negative real sits at angle pi/3
            rot = (BallComplex.one(prec) + BallComplex.i(prec) * BallComplex.from_int(3, prec).root(2)) / 2
            return pos * rot
        if re - self.rad <= 0:
            raise InsufficientPrecision(
                "root input ball not separated from the branch cut"
            )
        mid = (self.re, self.im)
        if degree == 2:
            zr, zi = mpc_sqrt(mid, prec, round_nearest)
        else:
            zr, zi = mpc_nthroot(mid, 3, prec, round_nearest)
        cr, ci = _mpf_to_fraction(zr), _mpf_to_fraction(zi)
        # exact sector check on the candidate: |arg| <= pi/degree
        if degree == 2:
            in_sector = cr >= 0
        else:
            in_sector = cr >= 0 and ci * ci <= 3 * cr * cr
        if not in_sector:
            raise InsufficientPrecision("root candidate fell outside the principal sector")
        # e = |candidate^degree - midpoint|, measured exactly
        pr, pi = cr, ci
        for _ in range(degree - 1):
            pr, pi = pr * cr - pi * ci, pr * ci + pi * cr
        _, e_up = _hypot_bounds(pr - re, pi - im)
        m_low, _ = _hypot_bounds(re, im)
        m_low = m_low - self.rad
        w_low = _root_lower(m_low, degree)
        if w_low <= 0:
            raise InsufficientPrecision("cannot bound the root magnitude from below")
        # separation of the principal root from the others, given the input
        # ball in the open right half-plane: |candidate - wrong root| is at
        # least w*sin(pi/4) >= 70w/99 for squares, w*sin(pi/6) = w/2 for cubes
        if degree == 2:
            rad = (e_up + self.rad) / (Fraction(70, 99) * w_low)
        else:
            rad = (e_up + self.rad) / ((w_low / 2) ** 2)
        return BallComplex(zr, zi, _up(rad), prec)

    def sqrt(self):
        return self.root(2)

    def cbrt(self):
        return self.root(3)

    # -- certification ----------------------------------------------------------

    def certify_integer(self):
        """The unique integer this ball certifies, or a typed failure.

        NotAnInteger when the ball provably excludes every Gaussian integer
        on the real axis; InsufficientPrecision when it is too wide to single
        one out.
        """
        r = self.rad
        im = self.mid_im
        if abs(im) > r:
            raise NotAnInteger(
                f"imaginary part {float(im):.3g} exceeds radius {float(r):.3g}"
            )
        if r >= _HALF:
            raise InsufficientPrecision(f"radius {float(r):.3g} >= 1/2")
        re = self.mid_re
        n = round(re)
        if abs(re - n) > r:
            raise NotAnInteger(
                f"real part is provably non-integral (nearest integer {n})"
            )
        if abs(re - n) + r < _HALF:
            return n
        raise InsufficientPrecision("ball spans more than one integer candidate")
