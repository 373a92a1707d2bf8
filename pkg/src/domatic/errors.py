"""Exception types shared across the package."""


class DomaticError(Exception):
    """Base class for all library errors."""


class InvalidSpec(DomaticError):
    """A family/recipe parameter is out of its allowed range."""


class GraphTooLarge(DomaticError):
    """Vertex count exceeds the configured construction limit."""


class IsolatedVertexError(DomaticError):
    """Graph has an isolated vertex and the operation forbids them."""


class SizeMismatch(DomaticError):
    """Coloring length does not match the graph order."""


class InvalidCertificate(DomaticError):
    """A coloring offered as a certificate fails verification."""


class NotBipartiteError(DomaticError):
    """Operation requires a bipartite graph."""


class ColorCountMismatch(DomaticError):
    """Colorings disagree on the number of colors after truncation."""


class NotPowerOfTwo(DomaticError):
    """A count that must be a power of two is not."""


class PreconditionViolated(DomaticError):
    """A stated hypothesis of the requested construction fails."""


class BadCover(DomaticError):
    """Supplied multipartite cover is not a valid part grouping."""


class NotPrime(DomaticError):
    """Field modulus is not prime."""


class ZeroInverse(DomaticError):
    """Multiplicative inverse of zero requested."""


class DimensionMismatch(DomaticError):
    """Vector length does not match the matrix."""


class CapExceeded(DomaticError):
    """Instance exceeds a hard cap (e.g. brute-force oracle size)."""


class NotRegular(DomaticError):
    """Operation requires an r-regular graph."""


class BadWitness(DomaticError):
    """A claimed witness (e.g. a Hamiltonian cycle) does not check out."""
