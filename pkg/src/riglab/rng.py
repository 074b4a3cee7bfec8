"""Portable counter-based random numbers (SplitMix64).

A stream is a 64-bit integer ``s``. Its ``k``-th output (``k = 0, 1, ...``)
is ``mix64(s + (k + 1) * GAMMA) mod 2**64``, which is exactly the output
sequence of SplitMix64 seeded with ``s``. Uniform doubles take the top 53
bits: ``(out >> 11) * 2**-53``, so they lie in ``[0, 1)``.

Because every output is a pure function of ``(stream, k)``, a batch of
trials can be drawn as one ``(trials, count)`` array and gives the same
numbers as drawing each trial on its own.

Per-trial streams are derived from a master seed by

    stream = mix64(mix64(master + GAMMA) ^ mix64((trial + 1) * GAMMA))

which is a bijection in ``trial`` for a fixed master.
"""
from __future__ import annotations

import numpy as np

GAMMA = 0x9E3779B97F4A7C15
MUL1 = 0xBF58476D1CE4E5B9
MUL2 = 0x94D049BB133111EB
MASK64 = (1 << 64) - 1

_G = np.uint64(GAMMA)
_M1 = np.uint64(MUL1)
_M2 = np.uint64(MUL2)
_S30, _S27, _S31, _S11 = (np.uint64(s) for s in (30, 27, 31, 11))


def mix64(z: int) -> int:
    """SplitMix64 finaliser on a Python int."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * MUL1) & MASK64
    z = ((z ^ (z >> 27)) * MUL2) & MASK64
    return z ^ (z >> 31)


def mix64_array(z: np.ndarray) -> np.ndarray:
    z = np.asarray(z, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = (z ^ (z >> _S30)) * _M1
        z = (z ^ (z >> _S27)) * _M2
    return z ^ (z >> _S31)


def derive_stream(master: int, trial: int) -> int:
    if not (0 <= master <= MASK64 and 0 <= trial <= MASK64):
        raise ValueError("master seed and trial index must be unsigned 64-bit integers")
    return mix64(mix64(master + GAMMA) ^ mix64((trial + 1) * GAMMA))


def derive_streams(master: int, trials: np.ndarray | int, start: int = 0) -> np.ndarray:
    """Vectorised :func:`derive_stream` for trial indices ``start..start+trials-1``
    (or an explicit index array)."""
    if not 0 <= master <= MASK64:
        raise ValueError("master seed must be an unsigned 64-bit integer")
    if np.isscalar(trials):
        idx = np.arange(start, start + int(trials), dtype=np.uint64)
    else:
        idx = np.asarray(trials, dtype=np.uint64)
    head = np.uint64(mix64(master + GAMMA))
    with np.errstate(over="ignore"):
        t = (idx + np.uint64(1)) * _G
    return mix64_array(head ^ mix64_array(t))


def raw64(streams: np.ndarray, count: int, offset: int = 0) -> np.ndarray:
    streams = np.atleast_1d(np.asarray(streams, dtype=np.uint64))
    k = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = streams[:, None] + k[None, :] * _G
    return mix64_array(z)


def uniforms(streams: np.ndarray, count: int, offset: int = 0) -> np.ndarray:
    """Outputs ``offset .. offset+count-1`` of each stream as doubles in [0, 1).

    Returns shape ``(len(streams), count)``.
    """
    return (raw64(streams, count, offset) >> _S11).astype(np.float64) * (2.0 ** -53)
