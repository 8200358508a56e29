"""Exception hierarchy shared across the pipeline stages."""


class AspSmtError(Exception):
    """Base class for all errors raised by this package."""


# --- ground program input ---------------------------------------------------

class MalformedInput(AspSmtError):
    """The smodels-format document is truncated, inconsistent, or non-numeric."""


class UnsupportedRuleType(MalformedInput):
    """Rule-type code other than 1 (basic) or 3 (choice)."""


class ContradictoryCompute(MalformedInput):
    """An atom occurs in both the B+ and B- compute sections."""


# --- theory side file -------------------------------------------------------

class TheoryError(AspSmtError):
    pass


class UnknownAtom(TheoryError):
    """A constraint names an atom that does not exist in the program."""


class DuplicateDefinition(TheoryError):
    """Two constraint definitions for the same atom, or a name used twice."""


class UndeclaredVariable(TheoryError):
    """A constraint uses a numeric variable without a var declaration."""


class SortClash(TheoryError):
    """A numeric variable is declared with two different sorts."""


class TheoryAtomInHead(TheoryError):
    """A constraint atom occurs in a rule head, which is not allowed."""


# --- emission / solving -----------------------------------------------------

class UndeclaredSymbol(AspSmtError):
    """Internal invariant breach: an assertion uses an undeclared symbol."""


class SolverNotFound(AspSmtError):
    """The solver command could not be launched."""


class SolverCrashed(AspSmtError):
    """The solver exited abnormally without producing a status token."""


class UnparseableResponse(AspSmtError):
    """The solver produced a status token but a malformed model response."""


# --- oracle -----------------------------------------------------------------

class TooLarge(AspSmtError):
    """The program exceeds the brute-force enumeration cap."""
