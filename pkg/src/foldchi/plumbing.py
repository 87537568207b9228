"""Attaching matrices of solid tori and the star-shaped plumbing graph.

Bases are ordered (base direction, fiber direction): column j of a matrix
is the image of the j-th basis vector of H_1 of the solid torus boundary,
written in the basis of the corresponding boundary torus of S^1 x F^-1(L).

Every attaching matrix A with det A = -1 factors as

    A = J H(e_l) J ... J H(e_1) J,    J = [[0, 1], [1, 0]],  H(e) = [[-1, 0], [-e, 1]].

Arithmetic is exact but bounded: any intermediate outside the signed 64-bit
range raises :class:`Overflow` so results stay portable to fixed-width
consumers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import BadDeterminant, Overflow, TooManyTori

INT_MIN = -(2**63)
INT_MAX = 2**63 - 1


def _chk(x: int) -> int:
    if not INT_MIN <= x <= INT_MAX:
        raise Overflow(f"integer {x} outside the signed 64-bit range")
    return x


@dataclass(frozen=True)
class Mat2Z:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for x in (self.a, self.b, self.c, self.d):
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"matrix entries must be int, got {x!r}")
            _chk(x)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Mat2Z":
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError(f"expected a 2x2 array, got {rows!r}")
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def det(self) -> int:
        return _chk(_chk(self.a * self.d) - _chk(self.b * self.c))

    def __matmul__(self, o: "Mat2Z") -> "Mat2Z":
        return Mat2Z(
            _chk(_chk(self.a * o.a) + _chk(self.b * o.c)),
            _chk(_chk(self.a * o.b) + _chk(self.b * o.d)),
            _chk(_chk(self.c * o.a) + _chk(self.d * o.c)),
            _chk(_chk(self.c * o.b) + _chk(self.d * o.d)),
        )

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


J = Mat2Z(0, 1, 1, 0)
IDENTITY = Mat2Z(1, 0, 0, 1)


def H(e: int) -> Mat2Z:
    return Mat2Z(-1, 0, _chk(-e), 1)


@dataclass(frozen=True)
class AttachingMatrix:
    m: Mat2Z

    def __post_init__(self):
        if self.m.det() != -1:
            raise BadDeterminant(f"attaching matrix {self.m} has determinant {self.m.det()}, expected -1")

    @classmethod
    def from_rows(cls, rows) -> "AttachingMatrix":
        return cls(Mat2Z.from_rows(rows))


def compose_factors(es: Sequence[int]) -> Mat2Z:
    """J H(e_l) J ... J H(e_1) J for ``es = [e_1, ..., e_l]``."""
    m = J
    for e in es:
        m = J @ (H(e) @ m)
    return m


def factor_attaching(A: AttachingMatrix | Mat2Z) -> list[int]:
    """Integers ``[e_1, ..., e_l]`` with ``compose_factors(result) == A``.

    Works on B = J A, which lies in SL(2, Z) and equals Y(e_l) ... Y(e_1)
    with Y(e) = J H(e) J = [[0, -1], [1, -e]]. Factors are peeled off the
    left by Euclidean division on the first column, so |B[0][0]| strictly
    decreases. The result is deterministic but not necessarily shortest.
    """
    m = A.m if isinstance(A, AttachingMatrix) else A
    if m.det() != -1:
        raise BadDeterminant(f"matrix {m} has determinant {m.det()}, expected -1")
    B = J @ m
    peeled: list[int] = []  # outermost factor first
    while B != IDENTITY:
        p, q, r, s = B.a, B.b, B.c, B.d
        if p == 0:
            # det B = -q r = 1
            if r == 1:
                peeled.append(_chk(-s))
            else:
                # B = -Y(s) and -I = Y(0) Y(0)
                peeled.extend([0, 0, s])
            break
        e = r // p
        # Y(e)^-1 = [[-e, 1], [-1, 0]]
        B = Mat2Z(_chk(r - _chk(e * p)), _chk(s - _chk(e * q)), -p, -q)
        peeled.append(e)
    peeled.reverse()
    return peeled


NEGATE = "negate"
RAW = "raw"
SIGN_CONVENTIONS = (NEGATE, RAW)


@dataclass(frozen=True)
class PlumbingGraph:
    """Star-shaped plumbing graph for identity monodromy.

    ``chains[i]`` lists the vertex weights of the chain for the i-th solid
    torus, ordered from the central vertex outward; ``raw_chains`` holds the
    untransformed factor integers.
    """

    genus: int
    central_weight: int
    chains: tuple[tuple[int, ...], ...]
    raw_chains: tuple[tuple[int, ...], ...]
    boundary_arrows: int
    sign_convention: str = NEGATE
    attachings: tuple[Mat2Z, ...] = field(default=(), compare=False)

    @property
    def tori(self) -> int:
        return len(self.chains)


def build_plumbing_graph(
    g: int, b: int, attachings: Sequence[AttachingMatrix | Mat2Z], sign_convention: str = NEGATE
) -> PlumbingGraph:
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    if b < 1:
        raise ValueError(f"boundary count must be >= 1, got {b}")
    if sign_convention not in SIGN_CONVENTIONS:
        raise ValueError(f"unknown sign convention {sign_convention!r}")
    mats = [a if isinstance(a, AttachingMatrix) else AttachingMatrix(a) for a in attachings]
    if len(mats) > b:
        raise TooManyTori(f"{len(mats)} solid tori but only {b} boundary tori")
    raw = tuple(tuple(factor_attaching(a)) for a in mats)
    if sign_convention == NEGATE:
        chains = tuple(tuple(-e for e in chain) for chain in raw)
    else:
        chains = raw
    return PlumbingGraph(
        genus=g,
        central_weight=0,
        chains=chains,
        raw_chains=raw,
        boundary_arrows=b - len(mats),
        sign_convention=sign_convention,
        attachings=tuple(a.m for a in mats),
    )
