"""Exception hierarchy; each family maps to one CLI exit status."""


class QtoricError(Exception):
    exit_code = 1


class SpecSyntaxError(QtoricError):
    exit_code = 3

    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


class GeometryError(QtoricError):
    exit_code = 4


class EmptyPolytopeError(GeometryError):
    pass


class UnboundedPolytopeError(GeometryError):
    pass


class DegenerateSpecError(GeometryError):
    pass


class NotSimpleError(GeometryError):
    def __init__(self, report):
        self.report = report
        super().__init__("; ".join(report.problems) or "polytope not simple")


class NonGenericDirectionError(QtoricError):
    exit_code = 5


class InvariantError(QtoricError):
    """An internal cross-check failed; indicates a bug, not bad input."""

    exit_code = 5
