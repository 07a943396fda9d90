class InputError(ValueError):
    """Malformed or inconsistent input: bad scalars, shape mismatches,
    violated preconditions. Maps to exit code 2 on the command line."""


class ResourceError(RuntimeError):
    """A guardrail refused a computation whose projected size exceeds the
    configured limits. Maps to exit code 2 on the command line."""
