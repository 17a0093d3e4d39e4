"""Exception types raised by sclab."""

from __future__ import annotations


class SclabError(Exception):
    """Base class for every error raised by this package."""


class GroupValidationError(SclabError):
    """A Cayley table failed one of the group axioms.

    ``kind`` is one of ``NotClosed``, ``NotLatin``, ``NoIdentity``,
    ``NoInverse`` or ``NotAssociative``; ``witness`` is the offending index
    tuple.
    """

    def __init__(self, kind: str, witness: tuple, message: str = "", row: int | None = None):
        self.kind = kind
        self.witness = tuple(witness)
        self.row = row if row is not None else (self.witness[0] if self.witness else None)
        super().__init__(message or f"{kind}: witness {self.witness}")


class OrderCapExceeded(SclabError):
    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds cap {cap}")


class InvalidParameter(SclabError):
    pass


class NotASubgroup(SclabError):
    def __init__(self, elems, reason: str = ""):
        self.elems = tuple(elems)
        super().__init__(f"not a subgroup: {self.elems} {reason}".rstrip())


class NotNormal(SclabError):
    """``witness`` is (g, n, g^-1 n g) with the last entry outside the subgroup."""

    def __init__(self, witness: tuple):
        self.witness = tuple(witness)
        super().__init__(f"subgroup is not normal: conjugation witness {self.witness}")


class SelfClassOverNonabelianH(SclabError):
    def __init__(self, witness: tuple = ()):
        self.witness = tuple(witness)
        super().__init__(
            f"self-classes need an abelian subgroup; non-commuting pair {self.witness}"
        )


class EmptyBlock(SclabError):
    pass


class BudgetExceeded(SclabError):
    pass


class ParseError(SclabError):
    """Malformed group expression or input file.

    For expressions ``offset`` is a UTF-8 byte offset and ``expected`` the set
    of tokens that would have been accepted there.  For files ``line`` is the
    1-based line number.
    """

    def __init__(self, message: str, *, offset: int | None = None,
                 expected: frozenset[str] = frozenset(), line: int | None = None):
        self.offset = offset
        self.expected = frozenset(expected)
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        text = message
        if where:
            text = f"{', '.join(where)}: {message}"
        if self.expected:
            text += f" (expected one of: {', '.join(sorted(self.expected))})"
        super().__init__(text)
