"""theorylab: an executable workbench for recursion theory and the
metamathematics of recursively enumerable theories.

Subpackages:
    machine     counter machines, Goedel numbering, s-m-n, Kleene T
    resets      RE-set machinery: creative sets, effective inseparability
    fol         first-order syntax, bounded truth, sentence coding
    arith       the theories Q and R, witness comparison, certificates
    theories    decidable base theories and derived stage oracles
    reductions  truth-table conditions and reductions
    atlas       the twelve properties and their implication matrix
"""

from .budget import Budget

__all__ = ["Budget"]
__version__ = "0.1.0"
