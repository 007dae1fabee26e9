from fractions import Fraction

from gvmred import ExactScalar, symbol

TAU = symbol("tau")
SIGMA = symbol("sigma")


def sc(value) -> ExactScalar:
    """Shorthand: build a rational ExactScalar from int, Fraction or 'a/b'."""
    if isinstance(value, ExactScalar):
        return value
    if isinstance(value, str):
        return ExactScalar(Fraction(value))
    return ExactScalar(value)


def seq(*values) -> tuple[ExactScalar, ...]:
    return tuple(sc(v) for v in values)
