"""Pseudo-random Cartesian k-space sampling patterns for dynamic MRI."""

from ._core import (
    CavaParams,
    GridSpec,
    GroParams,
    OpraParams,
    Pr4dParams,
    SamplingPattern,
    StretchMap,
    VistaParams,
    generate_cava,
    generate_gro,
    generate_opra,
    generate_pr4d,
    generate_vista,
    golden_fraction,
    golden_ratio,
    make_stretch_map,
    mask_kykz,
    mask_kyt,
    pattern_stats,
    read_samples_csv,
    rebin_2d,
    rebin_3d,
    write_mask_pbm,
    write_samples_csv,
    write_stats,
)

__version__ = "1.0.0"

__all__ = [
    "CavaParams",
    "GridSpec",
    "GroParams",
    "OpraParams",
    "Pr4dParams",
    "SamplingPattern",
    "StretchMap",
    "VistaParams",
    "generate_cava",
    "generate_gro",
    "generate_opra",
    "generate_pr4d",
    "generate_vista",
    "golden_fraction",
    "golden_ratio",
    "make_stretch_map",
    "mask_kykz",
    "mask_kyt",
    "pattern_stats",
    "read_samples_csv",
    "rebin_2d",
    "rebin_3d",
    "write_mask_pbm",
    "write_samples_csv",
    "write_stats",
]
