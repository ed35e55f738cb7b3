"""Exception hierarchy.

``exit_code`` is read by the CLI: 2 for invalid input, 3 for missing catalog data.
"""


class OrbitQuantError(Exception):
    exit_code = 2


class InvalidInput(OrbitQuantError, ValueError):
    exit_code = 2


class NotDecreasing(InvalidInput):
    pass


class ParityViolation(InvalidInput):
    def __init__(self, part, kind):
        self.part = part
        self.kind = kind
        super().__init__(f"part {part} has a multiplicity not allowed in type {kind}")


class WrongTotalParity(InvalidInput):
    pass


class TotalParityMismatch(InvalidInput):
    pass


class RankMismatch(InvalidInput):
    pass


class NotDominant(InvalidInput):
    pass


class WrongFamily(InvalidInput):
    pass


class HalfIntegralSupport(InvalidInput):
    pass


class NonIntegralMultiplicity(OrbitQuantError, ArithmeticError):
    exit_code = 1


class MissingCatalogData(OrbitQuantError, LookupError):
    exit_code = 3


class NotInCatalog(MissingCatalogData):
    def __init__(self, parts):
        self.parts = tuple(parts)
        super().__init__(
            f"partition {self.parts} is not in the cell catalog; "
            "supply the sigma_e source subgroup manually (e.g. --spec D3xC2) "
            "or add an entry with --catalog"
        )


class MissingSpec(MissingCatalogData):
    def __init__(self, parts, element):
        self.parts = tuple(parts)
        self.element = element
        super().__init__(
            f"catalog entry for {self.parts} has no subgroup for element {element}"
        )
