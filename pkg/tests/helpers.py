import random
from fractions import Fraction

from castelnuovo.geometry import Chord, LinearSubspace, chord_subspace, meets

FOUR_COORDINATE_LINES = [(0, 1), (2, 3), (0, 2), (1, 3)]


def unit(i, n=4):
    return tuple(int(i == j) for j in range(n))


def coordinate_lines(field=None):
    return [LinearSubspace.span([unit(i), unit(j)], 4, field) for i, j in FOUR_COORDINATE_LINES]


def cubic_chords(params, field=None):
    return [chord_subspace(Chord(3, params[2 * i], params[2 * i + 1]), field) for i in range(4)]


def random_vector(rng, n, bound=9):
    return tuple(Fraction(rng.randint(-bound, bound)) for _ in range(n))


def random_center(rng, d, r, through=None):
    """A random (d - r)-dimensional subspace of Q^(d+1), optionally containing ``through``."""
    dim = d - r
    while True:
        vectors = [through] if through is not None else []
        vectors += [random_vector(rng, d + 1) for _ in range(dim - len(vectors))]
        plane = LinearSubspace.span(vectors, d + 1)
        if plane.dim == dim:
            return plane


def chord_point(chord, rng):
    """A point of the chord other than its two endpoints."""
    lam = Fraction(rng.choice([i for i in range(-7, 8) if i]), rng.randint(1, 5))
    u, v = chord.p.vector(), chord.q.vector()
    return tuple(a + lam * b for a, b in zip(u, v))


def random_parameters(rng, bound=20):
    t1, t2 = rng.sample(range(-bound, bound + 1), 2)
    return Fraction(t1, rng.randint(1, 3)), Fraction(t2, rng.randint(1, 3))


def has_base_point(plane, chord):
    """True when the plane contains an endpoint of the chord (the series then has a base point)."""
    return any(meets(plane, LinearSubspace.span([pt.vector()], plane.ambient_dim)) for pt in (chord.p, chord.q))


def incidence_case(rng, d, r, forced):
    """One (plane, chord) pair for the chord-incidence equivalence, redrawn until base-point free."""
    while True:
        t1, t2 = random_parameters(rng)
        if t1 == t2:
            continue
        chord = Chord(d, t1, t2)
        plane = random_center(rng, d, r, chord_point(chord, rng) if forced else None)
        if not has_base_point(plane, chord):
            return plane, chord


def seeded(seed):
    return random.Random(seed)
