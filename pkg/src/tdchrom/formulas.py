"""Closed-form values claimed in the literature for TDC numbers of paths and
cycles and for the stability / bondage of named families.

These oracles reproduce the published claims exactly as stated; they are the
expectations that the verification suite compares against exact computation.
Out-of-domain arguments raise :class:`FormulaDomainError` rather than
extrapolating.  Where exact computation contradicts a claim, the suite emits
a flagged discrepancy row; the formulas here are intentionally left as
published.
"""

from __future__ import annotations

import math


class FormulaDomainError(ValueError):
    """Argument outside the stated domain of a published formula."""


FAMILIES = ("path", "cycle", "friendship", "book", "balanced_complete_bipartite")


def path_tdc_formula(n: int) -> int:
    """Claimed TDC number of the path P_n, n >= 2."""
    if n < 2:
        raise FormulaDomainError(f"path formula requires n >= 2, got {n}")
    if n % 3 == 1:
        return 2 * math.ceil(n / 3) - 1
    return 2 * math.ceil(n / 3)


def cycle_tdc_formula(n: int) -> int:
    """Claimed TDC number of the cycle C_n, n >= 4."""
    if n < 4:
        raise FormulaDomainError(f"cycle formula requires n >= 4, got {n}")
    if n == 4:
        return 2
    q, r = divmod(n, 6)
    if r in (3, 5):
        return 4 * q + r - 1
    return 4 * q + r


def cycle_tdc_value(n: int) -> int:
    """Cycle claim extended to n = 3, where C_3 = K_3 has TDC number 3."""
    if n < 3:
        raise FormulaDomainError(f"cycles require n >= 3, got {n}")
    if n == 3:
        return 3
    return cycle_tdc_formula(n)


def stability_formula(family: str, n: int) -> int:
    """Claimed stability value for a named family.

    Domains follow the published statements: path n >= 4, cycle n >= 3,
    friendship n >= 2, book n >= 3, balanced complete bipartite n >= 1.
    """
    if family == "path":
        if n < 4:
            raise FormulaDomainError(f"path stability requires n >= 4, got {n}")
        return 1
    if family == "cycle":
        if n < 3:
            raise FormulaDomainError(f"cycle stability requires n >= 3, got {n}")
        if n == 3:
            return 1
        return 2 if n % 6 in (0, 3) else 1
    if family == "friendship":
        if n < 2:
            raise FormulaDomainError(f"friendship stability requires n >= 2, got {n}")
        return 1
    if family == "book":
        if n < 3:
            raise FormulaDomainError(f"book stability requires n >= 3, got {n}")
        return 1
    if family == "balanced_complete_bipartite":
        if n < 1:
            raise FormulaDomainError(
                f"balanced complete bipartite stability requires n >= 1, got {n}"
            )
        return n
    raise FormulaDomainError(f"no stability claim for family {family!r}")


def bondage_formula(family: str, n: int) -> int:
    """Claimed bondage value for a named family.

    Domains: path n >= 3, cycle n >= 5, friendship n >= 2.
    """
    if family == "path":
        if n < 3:
            raise FormulaDomainError(f"path bondage requires n >= 3, got {n}")
        return 1
    if family == "cycle":
        if n < 5:
            raise FormulaDomainError(f"cycle bondage requires n >= 5, got {n}")
        return 1 if n % 6 == 4 else 2
    if family == "friendship":
        if n < 2:
            raise FormulaDomainError(f"friendship bondage requires n >= 2, got {n}")
        return 1
    raise FormulaDomainError(f"no bondage claim for family {family!r}")
