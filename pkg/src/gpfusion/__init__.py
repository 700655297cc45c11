"""Exact computations with Garsia-Procesi rings, Kostka polynomials and fusion products."""

from .fusion import fusion_character, generate_filtration, schur_weyl_check
from .gp_ring import amu_graded_dims, cmu_generators, rmu_decompose, rmu_hilbert
from .kostka import charge, charge_kostka, kostka_hook, ssyt_count, tilde_transform
from .partitions import Partition, conjugate, nstat, partitions_of
from .qpoly import QPoly, QSeries
from .symgroup import ClassFunction, irr_char
from .wedge import limit_stabilization, reduced_wedge_decompose, wedge_char, winf_char

__version__ = "0.1.0"
