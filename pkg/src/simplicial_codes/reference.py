"""Published reference instances with their printed parameters and enumerators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .construction import DefiningSetSpec


@dataclass(frozen=True)
class Reference:
    name: str
    case: int
    m: int
    L: tuple[int, ...]
    M: tuple[int, ...]
    N: tuple[int, ...]
    params: tuple[int, int, int]
    enumerator: str
    # set when the printed enumerator is known not to be a codeword-level one
    known_divergence: Optional[str] = None

    @property
    def spec(self) -> DefiningSetSpec:
        return DefiningSetSpec.for_case(self.case, self.m, self.L, self.M, self.N)


REFERENCES = (
    Reference("ref1", 1, 5, (1, 2), (2, 3), (3, 4), (192, 7, 64),
              "X^192 + 9X^128Y^64 + 118X^96Y^96"),
    Reference("ref2", 2, 5, (1, 2, 3), (2, 3), (3, 4), (1152, 10, 384),
              "X^1152 + 9X^768Y^384 + 984X^576Y^576 + 27X^512Y^640 + 3X^384Y^768"),
    Reference("ref3", 3, 5, (1, 2, 3), (2, 3), (2, 3, 4), (5376, 13, 1792),
              "X^5376 + 24X^3584Y^1792 + 13X^3328Y^2048 + 7936X^2688Y^2688"
              " + 200X^2560Y^2816 + 18X^2304Y^3072"),
    Reference("ref4", 4, 4, (1, 2, 3), (1, 2), (2, 3), (1152, 9, 384),
              "X^1152 + 14X^768Y^384 + X^640Y^512 + 492X^576Y^576 + 4X^512Y^640"),
    Reference("ref5", 5, 5, (1,), (2, 3), (2, 3, 4), (20160, 15, 6720),
              "X^20160 + 24X^13440Y^6720 + 13X^12480Y^7680 + 270X^10176Y^9984"
              " + 3000X^10112Y^10048 + 28672X^10080Y^10080 + 195X^9920Y^10240"
              " + 360X^9856Y^10304 + 200X^9600Y^10560 + 15X^9408Y^10752 + 18X^8640Y^11520"),
    Reference("ref6", 5, 5, (1, 2), (3,), (2, 3, 4), (20160, 15, 6720),
              "X^20160 + 16X^13440Y^6720 + 21X^12992Y^7168 + 294X^10176Y^9984"
              " + 3024X^10112Y^10048 + 28672X^10080Y^10080 + 147X^9664Y^10496"
              " + 112X^9600Y^10560 + 432X^9856Y^10304 + 42X^9408Y^10752 + 7X^8640Y^11520"),
    Reference("ref7", 6, 4, (1,), (2, 3), (1, 3), (2016, 10, 672),
              "X^2016 + 56X^1344Y^672 + 112X^1024Y^992 + 3456X^1008Y^1008 + 28X^992Y^1024"
              " + 392X^960Y^1056 + 4X^1120Y^896 + 16X^896Y^1120 + 28X^864Y^1152",
              known_divergence="printed coefficients sum to 4093, not |C_D| = 1024"),
)

BY_NAME = {r.name: r for r in REFERENCES}
