"""Finite abstract simplicial complexes and their basic constructors.

A complex stores its full simplex set explicitly (not facets only): the
deleted constructions and the chain complexes downstream need every face
enumerated.  Vertex labels are strings; the canonical order everywhere is
lexicographic on labels, so identical inputs always produce byte-identical
output.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .config import guard_cells

Simplex = tuple[str, ...]


def as_simplex(labels: Iterable[str]) -> Simplex:
    """Normalize to a sorted tuple of distinct labels."""
    out = tuple(sorted(labels))
    if not out:
        raise ValueError("a simplex must be nonempty")
    for a, b in zip(out, out[1:]):
        if a == b:
            raise ValueError(f"repeated vertex {a!r} in simplex")
    return out


class SimplicialComplex:
    """Immutable face-closed set of simplices over string vertex labels.

    The empty complex (dim -1) is legal; it is the identity for ``join``.
    """

    __slots__ = ("name", "vertices", "dim", "_simplices", "_by_dim")

    def __init__(self, name: str, simplices: Iterable[Iterable[str]],
                 check: bool = True):
        simps = frozenset(as_simplex(s) for s in simplices)
        by_dim: list[list[Simplex]] = []
        for s in simps:
            d = len(s) - 1
            while len(by_dim) <= d:
                by_dim.append([])
            by_dim[d].append(s)
        self.name = name
        self._simplices = simps
        self._by_dim = tuple(tuple(sorted(level)) for level in by_dim)
        self.dim = len(self._by_dim) - 1
        self.vertices = tuple(v for (v,) in self._by_dim[0]) if self._by_dim else ()
        if check:
            self._check_closed()

    def _check_closed(self) -> None:
        # Closure under codim-1 faces implies full face-closure by induction.
        for level in self._by_dim[1:]:
            for s in level:
                for i in range(len(s)):
                    if s[:i] + s[i + 1:] not in self._simplices:
                        raise ValueError(
                            f"complex {self.name!r} is not face-closed: "
                            f"{s} present but {s[:i] + s[i + 1:]} missing")

    @classmethod
    def from_facets(cls, name: str, facets: Iterable[Iterable[str]],
                    cap: int | None = None) -> "SimplicialComplex":
        """Build the closure of the given generating simplices."""
        simps: set[Simplex] = set()
        for facet in facets:
            top = as_simplex(facet)
            for k in range(1, len(top) + 1):
                simps.update(combinations(top, k))
            guard_cells(len(simps), cap, f"from_facets({name!r})")
        return cls(name, simps, check=False)

    # -- queries ---------------------------------------------------------

    @property
    def simplices(self) -> frozenset[Simplex]:
        return self._simplices

    def simplices_by_dim(self) -> tuple[tuple[Simplex, ...], ...]:
        """Per-dimension simplex lists, each sorted lexicographically."""
        return self._by_dim

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self._by_dim)

    def n_simplices(self) -> int:
        return len(self._simplices)

    def __contains__(self, simplex: Iterable[str]) -> bool:
        return tuple(sorted(simplex)) in self._simplices

    def __len__(self) -> int:
        return len(self._simplices)

    def __iter__(self) -> Iterator[Simplex]:
        for level in self._by_dim:
            yield from level

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._simplices == other._simplices

    def __hash__(self) -> int:
        return hash(self._simplices)

    def __repr__(self) -> str:
        return (f"SimplicialComplex({self.name!r}, dim={self.dim}, "
                f"f={self.f_vector()})")

    def facets(self) -> tuple[Simplex, ...]:
        """Maximal simplices, sorted (the file-format payload)."""
        # A simplex is maximal iff it is not a codim-1 face of anything.
        cofaces: set[Simplex] = set()
        for level in self._by_dim[1:]:
            for s in level:
                for i in range(len(s)):
                    cofaces.add(s[:i] + s[i + 1:])
        return tuple(sorted(s for s in self._simplices if s not in cofaces))

    def with_name(self, name: str) -> "SimplicialComplex":
        clone = SimplicialComplex.__new__(SimplicialComplex)
        clone.name = name
        clone.vertices = self.vertices
        clone.dim = self.dim
        clone._simplices = self._simplices
        clone._by_dim = self._by_dim
        return clone

    def relabel(self, mapping: Mapping[str, str], name: str | None = None
                ) -> "SimplicialComplex":
        """Apply an injective label map to every simplex."""
        if len(set(mapping[v] for v in self.vertices)) != len(self.vertices):
            raise ValueError("relabeling is not injective")
        return SimplicialComplex(
            name if name is not None else self.name,
            (tuple(mapping[v] for v in s) for s in self._simplices),
            check=False)

    def to_chain_complex(self):
        from .gf2 import ChainComplexGF2
        return ChainComplexGF2.from_simplicial(self)


EMPTY = SimplicialComplex("empty", ())


# -- constructors ---------------------------------------------------------

def simplex_skeleton(n: int, k: int, cap: int | None = None) -> SimplicialComplex:
    """The k-skeleton of the n-simplex: all faces with at most k+1 vertices."""
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    labels = [f"v{i}" for i in range(n + 1)]
    count = sum(comb(n + 1, i) for i in range(1, k + 2))
    guard_cells(count, cap, f"skeleton({n},{k})")
    simps = [c for i in range(1, k + 2) for c in combinations(sorted(labels), i)]
    return SimplicialComplex(f"skeleton({n},{k})", simps, check=False)


def discrete_points(m: int) -> SimplicialComplex:
    """m isolated vertices (dim 0)."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return SimplicialComplex(f"points({m})", ([f"p{i}"] for i in range(m)),
                             check=False)


def cycle_complex(m: int) -> SimplicialComplex:
    """The m-cycle graph as a 1-complex (m >= 3)."""
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    facets = [(f"v{i}", f"v{(i + 1) % m}") for i in range(m)]
    return SimplicialComplex.from_facets(f"cycle({m})", facets)


JOIN_LEFT = "K/"
JOIN_RIGHT = "L/"


def join(K: SimplicialComplex, L: SimplicialComplex,
         cap: int | None = None) -> SimplicialComplex:
    """Join of two complexes: unions of one (possibly empty) simplex per side.

    Vertices are relabeled ``K/x`` and ``L/y`` so the two sides can never
    collide; dim(K*L) = dim K + dim L + 1.
    """
    guard_cells((len(K) + 1) * (len(L) + 1) - 1, cap,
                f"join({K.name},{L.name})")
    left = [tuple(JOIN_LEFT + v for v in s) for s in K]
    right = [tuple(JOIN_RIGHT + v for v in s) for s in L]
    simps = list(left) + list(right)
    simps.extend(a + b for a in left for b in right)
    return SimplicialComplex(f"join({K.name},{L.name})", simps, check=False)


def cone_with_apex(K: SimplicialComplex) -> tuple[SimplicialComplex, str]:
    """Cone over K together with its apex label.

    K's simplices are kept verbatim and an apex is added; the apex is ``c``
    when that label is free (``c'``, ``c''``, ... on the rare collision,
    e.g. iterated cones), so ``link(cone(K), apex)`` returns K with its
    original labels.
    """
    apex = "c"
    while apex in K.vertices:
        apex += "'"
    simps: list[Simplex] = [(apex,)]
    for s in K:
        simps.append(s)
        simps.append(tuple(sorted(s + (apex,))))
    return SimplicialComplex(f"cone({K.name})", simps, check=False), apex


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Cone over K (join with one point, apex labeled ``c``)."""
    return cone_with_apex(K)[0]


def link(P: SimplicialComplex, v: str) -> SimplicialComplex:
    """Link of a vertex: simplices s with s + {v} in P and v not in s."""
    if v not in P.vertices:
        raise ValueError(f"unknown vertex {v!r} in {P.name!r}")
    simps = [tuple(u for u in s if u != v)
             for s in P if v in s and len(s) > 1]
    return SimplicialComplex(f"link({P.name},{v})", simps, check=False)


@dataclass(frozen=True)
class LinksIntersection:
    """Triple link intersection plus the K*[3] containment verification."""

    complex: SimplicialComplex
    vertices: tuple[str, str, str]
    contains_join: bool


def links_intersection(P: SimplicialComplex,
                       vs: Sequence[str]) -> LinksIntersection:
    """Intersection of the links of three distinct vertices of P.

    Also verifies, simplex by simplex, that the join of the result with the
    three chosen vertices lands inside P (it does, by how links compose; the
    check is an explicit membership test, not an assumption).
    """
    if len(vs) != 3 or len(set(vs)) != 3:
        raise ValueError(f"need 3 distinct vertices, got {list(vs)}")
    links = [link(P, v) for v in vs]
    common = links[0].simplices & links[1].simplices & links[2].simplices
    K = SimplicialComplex(f"links_intersection({P.name})", common, check=False)
    contains = all((v,) in P.simplices for v in vs)
    for s in K:
        if s not in P.simplices:
            contains = False
        for v in vs:
            if tuple(sorted(s + (v,))) not in P.simplices:
                contains = False
    return LinksIntersection(K, tuple(vs), contains)
