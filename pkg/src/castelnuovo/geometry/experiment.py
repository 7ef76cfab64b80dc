"""Degenerating a genus-4 curve to a twisted cubic with four chords.

Each trial draws eight distinct integer parameters, pairs them
consecutively into four chords of the twisted cubic, and counts the lines
meeting all four chords. A general curve of genus 4 carries exactly two
g^1_3's, and the count must stay 2 on every generic trial.

Parameters come from SplitMix64, which is fully specified below, so runs are
reproducible from the seed alone:

    state += 0x9E3779B97F4A7C15                       (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9          (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB          (mod 2**64)
    output z ^ (z >> 31)

An output z becomes the parameter (z mod 101) - 50; a value already drawn in
the current trial is skipped.
"""
from __future__ import annotations

from typing import Iterator, Mapping, Sequence

from ..errors import CastelnuovoError
from .curves import Chord, chord_subspace
from .fourlines import PencilSolutionReport, degenerate_report, try_solve_four_lines

MASK64 = (1 << 64) - 1
PARAMETER_BOUND = 50
CURVE_DEGREE = 3
CHORDS_PER_TRIAL = 4


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def __iter__(self) -> Iterator[int]:
        while True:
            yield self.next()


def draw_parameters(rng: SplitMix64, count: int = 2 * CHORDS_PER_TRIAL, bound: int = PARAMETER_BOUND) -> list[int]:
    seen: list[int] = []
    for z in rng:
        value = z % (2 * bound + 1) - bound
        if value not in seen:
            seen.append(value)
            if len(seen) == count:
                return seen
    raise AssertionError("unreachable")


def run_trial(parameters: Sequence) -> PencilSolutionReport:
    """Solve one trial from eight chord endpoint parameters, paired consecutively.

    Coincident endpoints or a non-generic configuration are reported, not raised.
    """
    if len(parameters) != 2 * CHORDS_PER_TRIAL:
        raise CastelnuovoError(f"a trial needs {2 * CHORDS_PER_TRIAL} parameters, got {len(parameters)}")
    params = tuple(parameters)
    try:
        chords = [Chord(CURVE_DEGREE, params[2 * i], params[2 * i + 1]) for i in range(CHORDS_PER_TRIAL)]
    except CastelnuovoError as exc:
        return degenerate_report(str(exc), parameters=params)
    return try_solve_four_lines([chord_subspace(c) for c in chords], parameters=params)


def conservation_experiment(seed: int, trials: int,
                            overrides: Mapping[int, Sequence] | None = None) -> list[PencilSolutionReport]:
    """Run ``trials`` seeded trials; ``overrides`` replaces the drawn parameters of chosen trials."""
    if trials < 1:
        raise CastelnuovoError(f"trials must be positive, got {trials}")
    rng = SplitMix64(seed)
    overrides = overrides or {}
    reports = []
    for i in range(trials):
        drawn = draw_parameters(rng)
        reports.append(run_trial(overrides.get(i, drawn)))
    return reports
