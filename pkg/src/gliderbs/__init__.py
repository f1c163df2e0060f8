"""gliderbs: exact computational algebra for filtered fields and central
simple algebras at desk scale.

The library represents separated, exhaustive, unbounded filtrations on the
supported fields and on matrix / quaternion algebras over them, descending
glider chains with finite presentations, and the classification machinery
built on top: triviality of subgliders, irreducibility with certificates,
windowed enumeration of the irreducible chains, the maximal-order strongness
criterion, the groupoid of normal glider ideals, quadratic scalar extension,
and lexicographic rank-2 valuations on Q(x,y).

All arithmetic is exact; every value is immutable and safe to share.
"""

__version__ = "0.1.0"
