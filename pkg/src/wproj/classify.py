"""Canonical forms, equivalence decisions, and the exhaustive census.

Two weight vectors present homeomorphic spaces exactly when their sorted
normalized forms agree, and homotopy-equivalent spaces exactly when their
divisor-chain forms agree.  Both forms are permutation- and scale-invariant,
so the census enumerates weight multisets only (non-decreasing tuples).

Genus rigidity means membership in the same localization genus coincides
with homotopy equivalence, so no separate predicate is exposed for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from multiprocessing import get_context
from typing import Iterable

from itertools import combinations_with_replacement

from . import _backend
from .errors import InvalidInputError, ResourceLimitError
from .weights import Weights, as_weights

__all__ = [
    "homeo_canonical_form",
    "homotopy_canonical_form",
    "homeomorphic",
    "homotopy_equivalent",
    "ClassRecord",
    "CensusReport",
    "DEFAULT_CENSUS_LIMIT",
    "census",
]

DEFAULT_CENSUS_LIMIT = 10_000_000


def homeo_canonical_form(weights: Iterable[int]) -> Weights:
    """Sorted normalized weights: complete invariant of the homeomorphism type.

    >>> homeo_canonical_form((2, 4, 6))
    (1, 2, 3)
    """
    return _backend.canonical_pair(as_weights(weights))[0]


def homotopy_canonical_form(weights: Iterable[int]) -> Weights:
    """Divisor-chain form of the normalization: complete homotopy invariant.

    The entries' p-parts recover every sorted p-content column, so equality
    of these forms is equality of all sorted p-contents at once.

    >>> homotopy_canonical_form((1, 2, 3))
    (1, 1, 6)
    """
    return _backend.canonical_pair(as_weights(weights))[1]


def homeomorphic(a: Iterable[int], b: Iterable[int]) -> bool:
    """Whether the two weight vectors present homeomorphic spaces."""
    return homeo_canonical_form(a) == homeo_canonical_form(b)


def homotopy_equivalent(a: Iterable[int], b: Iterable[int]) -> bool:
    """Whether the two weight vectors present homotopy-equivalent spaces."""
    return homotopy_canonical_form(a) == homotopy_canonical_form(b)


@dataclass(frozen=True)
class ClassRecord:
    """One homeomorphism class of a census: canonical forms and members."""

    representative: Weights
    homeo_class: Weights
    homotopy_class: Weights
    members: tuple[Weights, ...]


@dataclass(frozen=True)
class CensusReport:
    """Result of a census run over all weight multisets in a box."""

    dimension: int
    max_weight: int
    total: int
    records: tuple[ClassRecord, ...]
    homeo_classes: int
    homotopy_classes: int


def _classify_slice(args: tuple[int, int, int]) -> dict:
    """Canonical forms for all non-decreasing vectors with a fixed first entry."""
    first, dim, max_weight = args
    groups: dict[Weights, tuple[Weights, list[Weights]]] = {}
    for tail in combinations_with_replacement(range(first, max_weight + 1), dim):
        v = (first,) + tail
        homeo, homotopy = _backend.canonical_pair(v)
        entry = groups.get(homeo)
        if entry is None:
            groups[homeo] = (homotopy, [v])
        else:
            if entry[0] != homotopy:
                raise AssertionError(f"homeomorphism class {homeo} split across homotopy classes")
            entry[1].append(v)
    return groups


def census(dimension: int, max_weight: int, limit: int | None = None, workers: int = 1) -> CensusReport:
    """Classify every weight multiset of length dimension+1 with entries <= max_weight.

    Vectors are grouped by homeomorphism class; each class carries its
    homotopy-class form, and the refinement of the homotopy partition by the
    homeomorphism partition is verified during the merge.  Enumerations
    larger than ``limit`` (default 10**7 multisets) are refused up front with
    a :class:`ResourceLimitError`.  ``workers`` > 1 splits the enumeration by
    first entry across processes; the merged report is identical either way.
    """
    if dimension < 0:
        raise InvalidInputError(f"dimension must be nonnegative, got {dimension}")
    if max_weight < 1:
        raise InvalidInputError(f"max_weight must be positive, got {max_weight}")
    if limit is None:
        limit = DEFAULT_CENSUS_LIMIT
    total = math.comb(max_weight + dimension, dimension + 1)
    if total > limit:
        raise ResourceLimitError(
            f"census of dimension {dimension}, max weight {max_weight} needs "
            f"{total} vectors but the limit is {limit}",
            required=total,
            limit=limit,
        )

    slices = [(first, dimension, max_weight) for first in range(1, max_weight + 1)]
    if workers > 1:
        with get_context().Pool(workers) as pool:
            partials = pool.map(_classify_slice, slices)
    else:
        partials = map(_classify_slice, slices)

    merged: dict[Weights, tuple[Weights, list[Weights]]] = {}
    for part in partials:
        for homeo, (homotopy, members) in part.items():
            entry = merged.get(homeo)
            if entry is None:
                merged[homeo] = (homotopy, members)
            else:
                # refinement check: one homeomorphism class, one homotopy form
                if entry[0] != homotopy:
                    raise AssertionError(f"homeomorphism class {homeo} split across homotopy classes")
                entry[1].extend(members)

    records = []
    for homeo in sorted(merged):
        homotopy, members = merged[homeo]
        members.sort()
        records.append(
            ClassRecord(
                representative=members[0],
                homeo_class=homeo,
                homotopy_class=homotopy,
                members=tuple(members),
            )
        )
    count = sum(len(r.members) for r in records)
    assert count == total, f"census enumerated {count} of {total} vectors"
    return CensusReport(
        dimension=dimension,
        max_weight=max_weight,
        total=total,
        records=tuple(records),
        homeo_classes=len(records),
        homotopy_classes=len({r.homotopy_class for r in records}),
    )
