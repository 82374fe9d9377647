"""Exception hierarchy shared by all modules.

Every contract violation raises a subclass of MkError so callers (and the
CLI) can distinguish usage errors from genuine check failures.
"""


class MkError(Exception):
    """Base class for all errors raised by this package."""


# -- set engine -------------------------------------------------------------

class NotAPair(MkError):
    """Value does not decode as an encoded ordered pair."""


class EmptyIntersection(MkError):
    """Intersection over the empty collection is not representable."""


class NotARelation(MkError):
    """Some member of the value is not an encoded ordered pair."""


class NotAFunction(MkError):
    """A first coordinate occurs with two distinct second coordinates."""


class OutsideDomain(MkError):
    """Function applied to an argument outside its domain."""


class EmptyInput(MkError):
    """Operation requires a nonempty input."""


class RankTooLarge(MkError):
    """Requested cumulative-hierarchy rank exceeds the configured cap."""


# -- expression language ----------------------------------------------------

class ParseError(MkError):
    """Syntax error with source position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class UnboundVariable(MkError):
    """Free variable has no binding in the evaluation environment."""


# -- order theory -----------------------------------------------------------

class EmptyFamily(MkError):
    """Maximal/minimal member is undefined for the empty family."""


class EmptyCarrier(MkError):
    """Maximal/minimal element is undefined over an empty carrier."""


class PreconditionFailed(MkError):
    """Stated hypothesis of the operation does not hold for the input."""


class NotAPartialOrder(MkError):
    """Relation is not a partial order on the given carrier."""


class NotAWellOrder(MkError):
    """Relation is not a well order on the given carrier."""


# -- constructions ----------------------------------------------------------

class NotAChoiceFunction(MkError):
    """Value fails the choice-function contract for the given base set."""


class NotAMember(MkError):
    """Argument is required to be a member of the given collection."""


class NotANest(MkError):
    """Family members are not pairwise comparable under inclusion."""


class NotASubfamily(MkError):
    """Family is required to be contained in another family."""


class NotFiniteCharacter(MkError):
    """Family is not closed the way a finite-character family must be."""


class EmptyMemberPresent(MkError):
    """Disjoint family may not contain the empty set."""


class NotDisjoint(MkError):
    """Family members are required to be pairwise disjoint."""


class HypothesisFails(MkError):
    """Theorem hypothesis fails; carries the violating witness."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class SizeGuardExceeded(MkError):
    """Input is larger than the guard for a super-exponential construction."""


class UnknownLemma(MkError):
    """No lemma is registered under the given identifier."""


class MalformedInstance(MkError):
    """Instance does not match the lemma's hypothesis shape."""


# -- serialization ----------------------------------------------------------

class NonCanonical(MkError):
    """Strict parsing rejects input that is not in canonical form."""
