"""Deterministic random draws for test data and the verification harness.

One PRNG algorithm artifact-wide: MT19937 (`random.Random`), keyed by a
seed string "seed:label:...". String seeding hashes with SHA-512, so
streams are reproducible across platforms and Python builds without any
platform entropy. Sub-streams are derived by appending counter labels.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .scalars import GaussianRational


class DetRng:
    def __init__(self, seed, *path):
        key = ":".join([str(seed), *map(str, path)])
        self._key = key
        self._r = random.Random(key)

    def child(self, *path) -> DetRng:
        return DetRng(self._key, *path)

    def int(self, lo, hi) -> int:
        return self._r.randint(lo, hi)

    def fraction(self, lo=-9, hi=9, max_den=4) -> Fraction:
        return Fraction(self._r.randint(lo, hi), self._r.randint(1, max_den))

    def scalar(self, lo=-9, hi=9, max_den=4) -> GaussianRational:
        return GaussianRational(self.fraction(lo, hi, max_den), self.fraction(lo, hi, max_den))

    def nonzero_scalar(self) -> GaussianRational:
        while True:
            x = self.scalar()
            if x:
                return x

    def vector(self, n) -> tuple:
        return tuple(self.scalar() for _ in range(n))

    def nonzero_vector(self, n) -> tuple:
        while True:
            v = self.vector(n)
            if any(v):
                return v
