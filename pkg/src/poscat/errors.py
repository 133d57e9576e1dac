"""Exception hierarchy for poscat."""


class PoscatError(Exception):
    """Base class; ``witness`` carries machine-replayable evidence when available."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MalformedInput(PoscatError):
    """Input could not be parsed into category tables (bad JSON, unknown ids or keys)."""


class ValidationError(PoscatError):
    law = "category"


class MissingComposite(ValidationError):
    law = "composition is total on composable pairs"


class ComposeTypeError(ValidationError):
    law = "composites have the right domain and codomain"


class IdentityLaw(ValidationError):
    law = "identity laws"


class NonAssociative(ValidationError):
    law = "associativity"


class OrderNotPartial(ValidationError):
    law = "hom-order is a partial order between parallel morphisms"


class CompositionNotMonotone(ValidationError):
    law = "composition is monotone in both variables"


class UnknownObject(PoscatError):
    pass


class BoundsTooLarge(PoscatError):
    pass


class SpecInvalid(PoscatError):
    pass


class NotParallel(PoscatError):
    pass


class NotARelation(PoscatError):
    pass


class DefinitionMismatch(PoscatError):
    """The two congruence characterizations disagreed. Always a library bug."""


class NotWeaklyLex(PoscatError):
    pass


class SizeGuardExceeded(PoscatError):
    pass


class NotAFunctor(PoscatError):
    def __init__(self, law, witness=None):
        super().__init__(f"not a functor: {law}", witness)
        self.law = law


class PreconditionFailed(PoscatError):
    pass


class CoinserterMissing(PoscatError):
    pass


class DiagramShapeInvalid(PoscatError):
    pass


class NotACover(PoscatError):
    pass


class ConstructionMismatch(PoscatError):
    """An explicit construction disagreed with brute-force search. Always a library bug."""
