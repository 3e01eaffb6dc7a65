class SizeCapError(ValueError):
    """Requested size exceeds the hard cap of an operation."""
