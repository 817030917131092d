"""

    LevyFock: Lévy processes, cocycles and Fock space

    Diagnostic class definition

    Copyright (C) 2026 LevyFock developers.

    This software is licensed under the MIT License, see LICENSE.txt.


    This module defines the Diagnostic class, containing the outcome of a
    single named check (an integrability condition, a positivity test, an
    identity residual), and the Diagnostics collection whose overall
    verdict is the conjunction of its members.

"""

from typing import Any, Dict, Iterator, List, Optional

import math


class Diagnostic:

    """The pass/fail outcome of one check, with the computed quantity"""

    def __init__(
        self,
        *,
        code: str,
        text: str,
        passed: bool,
        value: Optional[float] = None,
        bound: Optional[float] = None,
        detail: Optional[str] = None,
    ) -> None:
        self._code = code
        # text is a short, human-readable statement of what was checked
        self._text = text
        self._passed = bool(passed)
        # value is the computed quantity (a moment, an eigenvalue, a residual);
        # math.inf stands for a divergent integral
        self._value = value
        # bound is the threshold the value was compared against, if any
        self._bound = bound
        self._detail = detail

    def __str__(self) -> str:
        """Return a string representation of this diagnostic"""
        verdict = "pass" if self._passed else "FAIL"
        value = "" if self._value is None else " = {0:.6g}".format(self._value)
        bound = "" if self._bound is None else " (bound {0:.3g})".format(self._bound)
        detail = " | {0}".format(self._detail) if self._detail else ""
        return "{0:6} {1:4} {2}{3}{4}{5}".format(
            self._code, verdict, self._text, value, bound, detail
        )

    @property
    def code(self) -> str:
        """A code identifying the check"""
        return self._code

    @property
    def text(self) -> str:
        return self._text

    @property
    def passed(self) -> bool:
        return self._passed

    @property
    def value(self) -> Optional[float]:
        """The computed quantity, math.inf if it diverges"""
        return self._value

    @property
    def bound(self) -> Optional[float]:
        return self._bound

    @property
    def detail(self) -> Optional[str]:
        return self._detail

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"code": self._code, "text": self._text, "pass": self._passed}
        if self._value is not None:
            # JSON has no infinity: a divergent quantity is reported as null
            d["value"] = self._value if math.isfinite(self._value) else None
        if self._bound is not None:
            d["bound"] = self._bound
        if self._detail:
            d["detail"] = self._detail
        return d


class Diagnostics:

    """An ordered collection of Diagnostic records"""

    def __init__(self, items: Optional[List[Diagnostic]] = None) -> None:
        self._items: List[Diagnostic] = list(items or [])

    def add(self, item: Diagnostic) -> None:
        self._items.append(item)

    def __iter__(self) -> Iterator[Diagnostic]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __getitem__(self, code: str) -> Diagnostic:
        """Return the diagnostic with the given code"""
        for item in self._items:
            if item.code == code:
                return item
        raise KeyError(code)

    @property
    def passed(self) -> bool:
        """The overall verdict: True if every check passed"""
        return all(item.passed for item in self._items)

    def failures(self) -> List[Diagnostic]:
        return [item for item in self._items if not item.passed]

    def __str__(self) -> str:
        return "\n".join(str(item) for item in self._items)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pass": self.passed,
            "checks": [item.to_dict() for item in self._items],
        }
