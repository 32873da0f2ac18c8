"""Fock/Gaussian entanglement engines and relativistic quantum information sweeps."""

from _rqilab import (  # noqa: F401
    __version__,
    cavity,
    cosmology,
    detector,
    fock,
    gaussian,
    rindler,
    wigner,
)
