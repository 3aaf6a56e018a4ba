"""Combinatorial algorithms of Pingala's Chandahshastra and Kedar Bhatt's
Vrttaratnakara, with modern reference implementations to check them."""

from .binomial import (
    LagakriyaTable,
    MeruPyramid,
    bhaskara_ncr,
    lagakriya,
    lagakriya_table,
    meru,
)
from .core import G, L, GlSequence, Notation, Syllable, parse_sequence, to_modern_value, to_row_index
from .counting import (
    SankhyaTrace,
    Token,
    adhvayoga,
    sankhya_kedara_lagakriya,
    sankhya_kedara_uddishta,
    sankhya_pingala,
    sankhya_tokens,
)
from .errors import (
    ChandasError,
    DigitOutOfRange,
    EmptyInput,
    GuardExceeded,
    IndexOutOfRange,
    InvalidArgs,
    InvalidBase,
    InvalidCharacter,
    Overflow,
)
from .indexing import BaseBNumeral, nashtam, rank_base_b, uddishtam_kedara, uddishtam_pingala
from .pataka import PatakaMatrix, pataka, pataka_column
from .prastara import (
    DEFAULT_GUARD,
    Prastara,
    kedara_prastara,
    kedara_successor,
    pingala_prastara,
    prastara_stream,
)

__version__ = "0.1.0"
