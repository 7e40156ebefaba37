"""Extension theory of skew-symmetric linear relations.

Numeric objects (subspaces, relations, boundary systems and triplets) take and
return complex numpy arrays. The exact half-line model in ``skewext.halfline``
works with lists of ``(k, rate, coefficient)`` terms standing for
``coefficient * t**k * exp(-rate * t)``, where rate is a positive Fraction and
coefficient is a Fraction or a pair of Fractions ``(re, im)``.
"""

from fractions import Fraction

from . import _skewext
from ._skewext import *  # noqa: F401,F403
from ._skewext import Error

Error.code = property(lambda self: self.args[0])


class _HalfLine:
    """Fraction-friendly wrapper around the exact half-line model."""

    @staticmethod
    def _encode(terms):
        out = []
        for k, rate, coef in terms:
            re, im = coef if isinstance(coef, tuple) else (coef, 0)
            out.append((int(k), str(Fraction(rate)), str(Fraction(re)), str(Fraction(im))))
        return out

    @staticmethod
    def _decode(terms):
        return [(k, Fraction(rate), (Fraction(re), Fraction(im))) for k, rate, re, im in terms]

    @staticmethod
    def _complex(pair):
        return (Fraction(pair[0]), Fraction(pair[1]))

    def inner(self, f, g):
        return self._complex(_skewext.halfline.inner(self._encode(f), self._encode(g)))

    def green_identity(self, f, g):
        lhs, rhs = _skewext.halfline.green_identity(self._encode(f), self._encode(g))
        return self._complex(lhs), self._complex(rhs)

    def derivative(self, f):
        return self._decode(_skewext.halfline.derivative(self._encode(f)))

    def resolvent_solve(self, f):
        return self._decode(_skewext.halfline.resolvent_solve(self._encode(f)))

    def canonical_extension_apply(self, f):
        return self._decode(_skewext.halfline.canonical_extension_apply(self._encode(f)))

    def deficiency(self):
        g1, g2 = _skewext.halfline.deficiency()
        return [self._decode(b) for b in g1], [self._decode(b) for b in g2]

    def triplet_attempt(self):
        _skewext.halfline.triplet_attempt()

    def existence_report(self):
        return _skewext.halfline.existence_report()


halfline = _HalfLine()

__version__ = "0.1.0"
