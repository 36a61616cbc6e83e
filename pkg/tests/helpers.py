"""Shared builders for randomized tests."""

import numpy as np

from algq import AlgebraElement, HermitianObservable


def random_element(rng, dim) -> AlgebraElement:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return AlgebraElement(m)


def random_hermitian(rng, dim) -> HermitianObservable:
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return HermitianObservable(0.5 * (m + m.conj().T))


def random_unit_vector(rng, dim) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)


def random_direction(rng) -> np.ndarray:
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)
