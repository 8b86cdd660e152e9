"""Machine checks for the non-context-freeness of binary non-abelian-squares."""
from .witness import (
    RParse,
    WitnessSpec,
    block,
    build_witness,
    in_R,
    in_T,
    lemma3_report,
    parse_R,
)
from .words import (
    EvenForm,
    ParikhVector,
    RunForm,
    Word,
    alt,
    alt_max,
    even_form,
    is_abelian_square,
    is_uneven_word,
    parikh,
    power,
    run_form,
)

__version__ = "0.1.0"
