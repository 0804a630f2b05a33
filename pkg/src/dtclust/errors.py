"""Exception and warning types shared across the toolkit."""


class DegenerateInput(ValueError):
    """The point set cannot be tessellated: fewer than 3 distinct points,
    all distinct points collinear, or non-finite coordinates."""


class NonPositiveSize(ValueError):
    """A local-size value was zero or negative."""


class KTooLarge(ValueError):
    """Requested cluster count exceeds the number of points."""


class InvalidCutNode(ValueError):
    """A cut was requested at a root, a duplicate entry, or an out-of-range node."""

    def __init__(self, node, reason="invalid cut node"):
        super().__init__(f"{reason}: {node}")
        self.node = node


class InsufficientLabels(ValueError):
    """Semi-supervised cutting needs at least two distinct label kinds."""


class ImpureResidueWarning(UserWarning):
    """A component with two or more label kinds survived the divisive pass."""


class ParseError(ValueError):
    """A data file row could not be parsed."""

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class DimensionError(ParseError):
    """A data file row had the wrong number of fields."""


class DuplicateIndex(ValueError):
    """A label file assigned two labels to the same node index."""


class ClusterTooSmall(ValueError):
    """A ground-truth cluster has fewer members than the requested sample size."""


class LengthMismatch(ValueError):
    """Assignment and ground truth cover different numbers of points."""


class SchemaError(ValueError):
    """A structured-text document violates its schema."""
