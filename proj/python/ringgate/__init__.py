"""Spin transmission of two-terminal Rashba quantum rings and the gates they realize."""

from ._ringgate import (
    BranchAmplitudes,
    ConservationError,
    Curve,
    CurvePoint,
    DegeneratePointError,
    GateKind,
    GateSequence,
    RingConfig,
    ScanGrid,
    SingularSystemError,
    ScatteringSolution,
    SpectralSet,
    TransmissionDecomposition,
    alpha_for_theta,
    branch_amplitudes,
    classify_gate,
    compose,
    delta_zero_curves,
    eigenspinor,
    energy_for_ka,
    fidelity_up_to_phase,
    lossless_points,
    lossless_points_diametric,
    parse_angle,
    scan_grid,
    solve_scattering,
    spectral_params,
    target_library,
    to_dimensionless,
    transmission,
    transmission_diametric,
)

__all__ = [name for name in dir() if not name.startswith("_")]
