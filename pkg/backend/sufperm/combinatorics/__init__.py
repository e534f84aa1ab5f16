"""
combinatorics 모듈
순열, 연결 순열, 단어, 특성화, 열거, oracle
"""

from .perm import (
    DescentSet,
    Permutation,
    canonical_rep,
    compose,
    descents,
    equivalent,
    identity,
    inverse,
    is_one_orbit,
    orbit_count,
    parse_permutation,
    shift,
)
from .linking import LinkingPermutation, as_linking, phi, power_of_one, unphi
from .strings import (
    ParikhVector,
    SentinelWord,
    Word,
    append_sentinel_perm,
    bw_array,
    is_primitive,
    parikh,
    parse_parikh,
    parse_word,
    strip_sentinel_perm,
    suffix_array,
    suffix_array_sentinel,
)
from .characterize import (
    is_bw_array,
    is_suffix_array,
    is_suffix_array_parikh,
    linking_of_sa,
    min_alphabet,
    recover_word_bw,
    recover_word_sa,
    sa_from_linking,
)
from .mid_sentinel import (
    is_ascending_to_max,
    is_mid_sentinel_sa,
    is_non_nesting,
    mid_sentinel_sa,
    recover_binary_word,
)
from .enumeration import (
    BigCount,
    aug,
    count_suffix_arrays,
    count_words,
    count_words_full_alphabet,
    eulerian,
    gen_one_orbit,
    gen_parikh,
    gen_suffix_arrays,
    p_count,
    t_transform,
)

__all__ = [
    'DescentSet',
    'Permutation',
    'canonical_rep',
    'compose',
    'descents',
    'equivalent',
    'identity',
    'inverse',
    'is_one_orbit',
    'orbit_count',
    'parse_permutation',
    'shift',
    'LinkingPermutation',
    'as_linking',
    'phi',
    'power_of_one',
    'unphi',
    'ParikhVector',
    'SentinelWord',
    'Word',
    'append_sentinel_perm',
    'bw_array',
    'is_primitive',
    'parikh',
    'parse_parikh',
    'parse_word',
    'strip_sentinel_perm',
    'suffix_array',
    'suffix_array_sentinel',
    'is_bw_array',
    'is_suffix_array',
    'is_suffix_array_parikh',
    'linking_of_sa',
    'min_alphabet',
    'recover_word_bw',
    'recover_word_sa',
    'sa_from_linking',
    'is_ascending_to_max',
    'is_mid_sentinel_sa',
    'is_non_nesting',
    'mid_sentinel_sa',
    'recover_binary_word',
    'BigCount',
    'aug',
    'count_suffix_arrays',
    'count_words',
    'count_words_full_alphabet',
    'eulerian',
    'gen_one_orbit',
    'gen_parikh',
    'gen_suffix_arrays',
    'p_count',
    't_transform',
]
