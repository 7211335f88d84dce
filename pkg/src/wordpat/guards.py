"""Size guards for desk-scale enumeration and verification entry points."""


class GuardExceeded(ValueError):
    """Requested instance is larger than the configured guard allows."""


def check_guard(size: int, guard: int, what: str) -> None:
    if size > guard:
        raise GuardExceeded(
            f"{what} has size {size}, above the guard {guard}; "
            "pass a larger guard or set REPEATS_GUARD to override"
        )
