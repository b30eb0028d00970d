"""trigsum: evaluate finite trigonometric sums two ways and check they agree.

The package pairs direct high-precision summation with exact (or
arbitrary-precision) closed forms for a catalog of cotangent, cosecant and
root-of-unity identities, plus the quadratic-field and Farey-fraction
statistics built on top of them.
"""

__version__ = "0.1.0"

from .errors import ConsistencyError, DomainError, SingularTerm

__all__ = ["ConsistencyError", "DomainError", "SingularTerm", "__version__"]
