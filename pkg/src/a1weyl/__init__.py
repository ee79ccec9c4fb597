"""Exact arithmetic for the Weyl group of extended affine root systems of type A1.

Elements are canonical pairs ``(parity, t)``; see :mod:`a1weyl.core`. The
length with respect to the fundamental root basis is closed form
(:func:`length_pi0`), with brute-force Cayley-graph checks in
:mod:`a1weyl.oracle`. Hot loops run in a compiled extension when it is built;
``a1weyl._backend.active_backend()`` reports which kernels are in use.
"""

from .core import (
    RootVector, WeylElement, NullityMismatchError, IsotropicRootError,
    root, EPS, pairing, reflection, identity_element, multiply, inverse,
    conjugate, act, evaluate_word, word_epsilon_T, canonical_word,
    is_alternating, power,
)
from .roots import (
    m_plus_minus, height_radical, height, pi0_coordinates, is_positive,
    is_negative, is_strictly_positive_isotropic, is_in_toroidal, is_in_baby,
    enumerate_roots,
)
from .length import (
    fundamental_root, generator, pi0_generators, evaluate_pi0_word, length_pi0,
    lengths_pi0, reflection_length, reduced_word_pi0, word_position_counts,
    length_wrt_conjugated_basis,
)
from .bases import (
    NotARootBasisError, is_root_basis, fundamental_basis, apply_to_basis,
    invariant_matrix, find_conjugator, pi_n_family,
)
from .oracle import (
    LengthReport, bfs_lengths, level_sizes, inversion_count_nu1,
    classical_affine_length, affine_translation_action, verify_theorem_lft,
)

__version__ = "0.1.0"
