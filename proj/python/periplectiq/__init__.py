"""Exact computations in the quantized periplectic superalgebra.

Thin wrappers over the native module: the report commands return parsed JSON
dictionaries, scalars stay as canonical strings in the variable q.
"""

import json

try:
    from . import _periplectiq as _native  # wheel layout
except ImportError:  # in-tree build: the extension sits on sys.path directly
    import _periplectiq as _native

quantum_integer = _native.quantum_integer
quantum_factorial = _native.quantum_factorial
rat_add = _native.rat_add
rat_sub = _native.rat_sub
rat_mul = _native.rat_mul
rat_div = _native.rat_div
rat_neg = _native.rat_neg
rat_inv = _native.rat_inv
rat_subst_q_inverse = _native.rat_subst_q_inverse
eval_at_one = _native.eval_at_one


def relations(n, k, mutate=False):
    return json.loads(_native.relations_json(n, k, mutate))


def maximal(n, k, convention="rl", tableau="", pattern=""):
    return json.loads(_native.maximal_json(n, k, convention, tableau, pattern))


def decompose(n, k, convention="rl"):
    return json.loads(_native.decompose_json(n, k, convention))


def character(n, k):
    return json.loads(_native.character_json(n, k))


__all__ = [
    "quantum_integer",
    "quantum_factorial",
    "rat_add",
    "rat_sub",
    "rat_mul",
    "rat_div",
    "rat_neg",
    "rat_inv",
    "rat_subst_q_inverse",
    "eval_at_one",
    "relations",
    "maximal",
    "decompose",
    "character",
]
