"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Raised when graph-file text violates the edge-list format."""


class ParameterError(ValueError):
    """Raised when a generator or config parameter is out of range."""


class ResampleCapError(RuntimeError):
    """Raised when ER resampling cannot find an isolated-vertex-free graph."""


class ProfileError(ValueError):
    """Raised when a profile does not fit the graph (length or values)."""


class ConfigError(ValueError):
    """Raised when the weight constants violate the required inequalities."""


class SizeCapError(ValueError):
    """Raised when an exhaustive routine is asked to exceed its vertex cap."""


class IsolatedVertexError(ValueError):
    """Raised when a graph with an isolated vertex reaches the game layer."""


class CapExceededError(RuntimeError):
    """Raised when a dynamic fails to converge within its round cap.

    The convergence bounds make this impossible for a correct
    implementation, so seeing it means a bug, not bad input.
    """


class ContractInvariantError(RuntimeError):
    """Raised when an applied contract has non-positive aggregate gain."""


class SegmentBoundaryError(ValueError):
    """Raised when a transition audit is applied to an ineligible segment."""


class NotATreeError(ValueError):
    """Raised when a tree-only routine receives a non-tree graph."""


class MetricError(ValueError):
    """Raised on invalid metric inputs (zero optimum, negative gap, ...)."""
