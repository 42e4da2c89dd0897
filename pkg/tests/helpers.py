"""Shared test helpers: box enumeration and independent oracles.

The oracles here deliberately avoid the library code paths they are used to
check: factoring is re-done by trial division and normalization is re-done
by randomized rewriting.
"""

from itertools import combinations_with_replacement


def sorted_vectors(length, max_entry):
    """All non-decreasing weight vectors of one length with bounded entries."""
    return combinations_with_replacement(range(1, max_entry + 1), length)


def box(max_dim, max_entry):
    """All sorted weight vectors of dimension <= max_dim (length <= max_dim+1)."""
    for length in range(1, max_dim + 2):
        yield from sorted_vectors(length, max_entry)


def trial_factor(m):
    """Prime factorization by bare trial division (oracle)."""
    out = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def primes_dividing(values):
    ps = set()
    for x in values:
        ps.update(trial_factor(x))
    return sorted(ps)


def applicable_moves(w):
    """All currently legal rewriting moves on a weight vector.

    ("scale", p): the prime p divides every entry; ("reduce", p, i): exactly
    one entry (index i) is coprime to p.
    """
    moves = []
    for p in primes_dividing(w):
        coprime = [i for i, x in enumerate(w) if x % p]
        if not coprime:
            moves.append(("scale", p))
        elif len(coprime) == 1:
            moves.append(("reduce", p, coprime[0]))
    return moves


def apply_move(w, move):
    if move[0] == "scale":
        p = move[1]
        return [x // p for x in w]
    p, keep = move[1], move[2]
    return [x if i == keep else x // p for i, x in enumerate(w)]


def randomized_normalize(w, rng):
    """Normalize by applying legal moves in random order; returns sorted tuple."""
    w = list(w)
    while True:
        moves = applicable_moves(w)
        if not moves:
            return tuple(sorted(w))
        w = apply_move(w, moves[rng.randrange(len(moves))])
