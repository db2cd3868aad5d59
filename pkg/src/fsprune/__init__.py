"""Transposition-vector interleavers: conversion, streaming, pruning, spread, QPP lifting."""
from .fsp_engine import DUMMY, DummyMask, FspConfig, FspSession, FspTrace, delay, stream, stream_with_dummies
from .perm_core import (
    DomainError,
    InvalidPermutationError,
    InvalidTapsError,
    Permutation,
    TranspositionVector,
    apply,
    invert,
    perm_to_trans,
    perm_to_trans_counted,
    trans_to_perm,
)
from .prune_grow import (
    GrowthStep,
    grow,
    head_of_inverse,
    inverse_taps,
    predict_grown,
    predict_pruned,
    predict_pruned_by,
    prune,
)
from .qpp import (
    LiftedPrunedPermutation,
    QppCase,
    QppSpec,
    QppValidity,
    compact,
    identify_lifted,
    prune_qpp_lifted,
    pruned_qpp,
    qpp_generate,
    qpp_validate,
)
from .spread import SpreadReport, fold_distance, fold_profile, spread, spread_brute, spread_value

__version__ = "0.1.0"
