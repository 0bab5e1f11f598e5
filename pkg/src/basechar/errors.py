"""Exception hierarchy shared by all basechar modules.

Three failure classes, matching the CLI exit codes: bad input (2),
a configured capacity bound exceeded (3), and internal consistency
failures (4).  The last one is special: it fires when an identity that
must hold by exact arithmetic (a class sum divisible by n!, a signed
orbit count coming out negative) does not, which always indicates a bug
rather than user error, so it is never caught internally.
"""


class InputError(ValueError):
    """A precondition on user-supplied input does not hold."""


class CapacityError(RuntimeError):
    """A computation exceeds a configured size or search bound."""


class ConsistencyError(RuntimeError):
    """An exact-arithmetic invariant failed; indicates an implementation bug."""
