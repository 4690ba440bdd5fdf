"""Shared test utilities."""

import numpy as np


def random_state(n: int, seed: int = 0) -> np.ndarray:
    """Normalized random complex amplitudes for 2^n basis states."""
    rng = np.random.default_rng(seed)
    amplitudes = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return amplitudes / np.linalg.norm(amplitudes)


def random_density(n: int, seed: int = 0) -> np.ndarray:
    """Mixed state built from a random complex Gram matrix."""
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(2**n, 2**n)) + 1j * rng.normal(size=(2**n, 2**n))
    rho = a @ a.conj().T
    return rho / np.trace(rho)
