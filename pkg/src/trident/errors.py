"""Structured errors shared across the library and the CLI.

Every domain error carries a stable machine-readable ``code``, a human message,
and a ``context`` dict with the offending values, so callers (and the CLI error
path) can assert on the reason rather than parse prose.
"""

from __future__ import annotations


class TridentError(Exception):
    """Domain error with a stable code and structured context."""

    def __init__(self, code: str, message: str, **context):
        self.code = code
        self.message = message
        self.context = context
        super().__init__(message)

    def to_json_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "context": self.context}


def incompatible_conductors(src: int, dst: int) -> TridentError:
    return TridentError(
        "incompatible_conductors",
        f"incompatible conductors: {src} does not divide {dst}",
        source_conductor=src,
        target_conductor=dst,
    )


def ramified_prime(p: int, conductor: int) -> TridentError:
    return TridentError(
        "ramified",
        f"ramified prime: {p} divides the conductor {conductor}",
        p=p,
        conductor=conductor,
    )


def division_by_zero() -> TridentError:
    return TridentError("division_by_zero", "inverse of zero element")


def infinite_order(op: str) -> TridentError:
    return TridentError(
        "infinite_order",
        f"infinite order entry not supported by {op}: see open question",
        operation=op,
    )


def non_hyperbolic(triple, cls: str) -> TridentError:
    return TridentError(
        "non_hyperbolic",
        f"triple {triple} is {cls}, not hyperbolic",
        triple=list(str(s) for s in triple),
        triple_class=cls,
    )


def inconsistent_ramification(triple, order: int) -> TridentError:
    return TridentError(
        "inconsistent_ramification",
        f"inconsistent ramification: group order {order} gives no integer genus "
        f"for {triple}",
        triple=list(str(s) for s in triple),
        group_order=order,
    )


def guard_exceeded(what: str, value, limit) -> TridentError:
    return TridentError(
        "guard_exceeded",
        f"{what} {value} exceeds the enumeration guard {limit} "
        f"(set TRIDENT_MAX_Q to override where applicable)",
        what=what,
        value=value,
        limit=limit,
    )
