"""packhopf: exact-arithmetic bialgebra computations on packed integer
matrices, with morphisms to compositions (free-generator and monomial
bases), polynomial realizations, counting tables, and a verification
harness."""

from .config import GuardExceeded
from .counts import count_pack, count_qn, enumerate_pack, generator_counts, primitive_dims
from .hopfpack import (antipode, antipode_mat, coproduct_black,
                       coproduct_black_res, counit, deconcat,
                       is_indecomposable, is_permutation_matrix, in_truncation,
                       quasi_shuffle, quasi_shuffle_mat, searrow, searrow_mat,
                       second_coproduct, shuffle, shuffle_mat)
from .lincomb import LinComb, TensorKey, pairing, tensor
from .matrices import (Composition, Matrix, PackedMatrix, ParseError, comp,
                       diag_of, map_matrix, mat_mul, pack, parse_composition,
                       parse_matrix)
from .morphisms import (from_nsym, merge_iso, reading_fiber, shell_sum_mat,
                        to_nsym, to_polynomial, to_qsym, transpose_lin)
from .nsymqsym import (Polynomial1, compositions, eulerian_idempotent,
                       hilbert_eval, hilbert_poly, internal_product,
                       nsym_concat, nsym_coproduct, nsym_product, perm_shuffle,
                       phi_qsym, qsym_deconcat, qsym_delta,
                       qsym_quasi_shuffle, star_product)
from .realization import Grid, Monomial2, classify, evaluate, evaluate_lincomb, phi_formal
from .surjections import (check_hoffman_identity, enumerate_adm, enumerate_inc,
                          enumerate_qsh, enumerate_sh, surj_factorial)
from .verify import run_suite

__version__ = "0.1.0"
