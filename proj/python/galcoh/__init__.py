"""Exact Picard groups of reductive groups via Galois-lattice hypercohomology.

Thin dict-level wrappers over the C++ core. All integers cross the
boundary as decimal strings so nothing is ever rounded; matrices are
lists of rows of such strings.
"""

import json as _json

from . import _core
from ._core import BudgetError, ConsistencyError, InputError, SpecError

__all__ = [
    "picard",
    "dual",
    "pi1",
    "cohomology",
    "hypercohomology",
    "verify_les",
    "cross_check",
    "SpecError",
    "BudgetError",
    "ConsistencyError",
    "InputError",
]


def _call(fn, doc, *args, **kwargs):
    return _json.loads(fn(_json.dumps(doc), *args, **kwargs))


def picard(spec, **caps):
    """Pic(G) of a group spec: {"pic", "dual", "pi1", "witness"}."""
    return _call(_core.picard, spec, **caps)


def dual(spec, **caps):
    """Pontryagin dual of Pic(G) with the audit pairing matrix."""
    return _call(_core.dual, spec, **caps)


def pi1(spec, **caps):
    """Algebraic fundamental group of a group spec."""
    return _call(_core.pi1, spec, **caps)


def cohomology(job, degree=1, **caps):
    """H^degree(Gamma, M) for a {"group", "lattice"} document."""
    return _call(_core.cohomology, job, degree, **caps)


def hypercohomology(complex_doc, degree=1, **caps):
    """Hypercohomology of a two-term complex document at one degree."""
    return _call(_core.hypercohomology, complex_doc, degree, **caps)


def verify_les(complex_doc, max_degree=1, **caps):
    """Long-exact-sequence exactness report through max_degree."""
    return _call(_core.verify_les, complex_doc, max_degree, **caps)


def cross_check(document, **caps):
    """Compare the spec pipeline against a flasque-resolution pipeline."""
    return _call(_core.cross_check, document, **caps)
