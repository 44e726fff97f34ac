"""Exception hierarchy."""


class SemigroupError(Exception):
    """Base class for all errors raised by hsstab."""


class ValidationError(SemigroupError):
    """An input table/involution pair is not an involution semigroup."""


class IndexOutOfRange(ValidationError):
    pass


class NotAssociative(ValidationError):
    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"not associative: (a*b)*c != a*(b*c) for (a, b, c) = {self.triple}")


class StarNotInvolutive(ValidationError):
    def __init__(self, a: int):
        self.element = a
        super().__init__(f"star is not an involution: star(star({a})) != {a}")


class StarNotAntihom(ValidationError):
    def __init__(self, a: int, b: int):
        self.pair = (a, b)
        super().__init__(f"star is not an antihomomorphism: star({a}*{b}) != star({b})*star({a})")


class MixedParents(SemigroupError):
    pass


class EmptyList(SemigroupError):
    pass


class EmptyInput(SemigroupError):
    pass


class TooLarge(SemigroupError):
    def __init__(self, n: int, cap: int, what: str = "enumeration"):
        self.n = n
        self.cap = cap
        super().__init__(f"{what} too large for order {n} (cap {cap})")


class NotSubsemigroup(SemigroupError):
    pass


class NotInvSubsemigroup(SemigroupError):
    pass


class NotAGroup(SemigroupError):
    pass


class NotRegularStar(SemigroupError):
    pass


class NotInverse(SemigroupError):
    pass


class NotCommutative(SemigroupError):
    pass


class NotSemilattice(SemigroupError):
    pass


class InvalidReesSpec(SemigroupError):
    pass


class FormatError(SemigroupError):
    """Malformed semigroup JSON."""
