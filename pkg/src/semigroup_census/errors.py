class ResourceLimitError(RuntimeError):
    """A request exceeds the configured enumeration ceiling."""
