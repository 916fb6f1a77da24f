"""Synchrosqueezed wavelet transforms with ridge extraction, component
recovery, an EMD baseline and numerical checks of the accuracy guarantees."""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    ImtAnalytic,
    VariationalConfig,
    certify_class,
    check_epsilon_conditions,
    compute_gammas,
    run_verification,
    variational_energy,
    verify_theorem,
)
from .cwt import CwtResult, ScaleGrid, cwt, default_scale_grid, interior_mask
from .emd import ImfSet, SiftConfig, emd_decompose, envelope_mean
from .estimators import RidgeDecomposer, SynchrosqueezedCWT, analyze
from .exceptions import (
    ConstantMismatchError,
    GridError,
    InvalidSpecError,
    QuadratureError,
    SignalFormatError,
    SstxError,
    TooFewExtremaError,
)
from .reconstruct import (
    Component,
    reconstruct_band,
    reconstruct_double_integral,
    reconstruct_full,
    remove_below_cutoff,
    remove_drift,
)
from .ridge import Band, Ridge, RidgeWarning, band_around, extract_ridges
from .signals import ImtSpec, NoiseConfig, Signal, add_noise, fixture, load_csv, save_csv, snr_db
from .squeeze import FreqGrid, PhaseTransform, SqueezedTransform, phase_transform, synchrosqueeze
from .wavelets import WaveletConstants, WaveletSpec, constants

__all__ = [name for name in dir() if not name.startswith("_")]
