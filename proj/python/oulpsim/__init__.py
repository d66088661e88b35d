"""Python bindings for the FBMC/OULP link-level simulator."""

import json

from ._core import (
    DesignError,
    PrototypeFilter,
    Signal,
    Transceiver,
    check_config,
    design_iota,
    gain_vector,
    noise_power,
    noise_probe,
    qam16_constellation,
    qam16_demap,
    qam16_map,
    xi_coefficient,
    xi_row,
)
from . import _core


def _text(config):
    return config if isinstance(config, str) else json.dumps(config)


def ber_sweep(config):
    """Run an Eb/N0 sweep. `config` is a dict or a JSON string."""
    return _core.ber_sweep(_text(config))


def coherence_sweep(config):
    """Run a coherence-time sweep at a single Eb/N0."""
    return _core.coherence_sweep(_text(config))


__all__ = [
    "DesignError",
    "PrototypeFilter",
    "Signal",
    "Transceiver",
    "ber_sweep",
    "check_config",
    "coherence_sweep",
    "design_iota",
    "gain_vector",
    "noise_power",
    "noise_probe",
    "qam16_constellation",
    "qam16_demap",
    "qam16_map",
    "xi_coefficient",
    "xi_row",
]
