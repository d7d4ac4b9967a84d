"""
정확한 정수/유리수 연산 기본 요소

모든 닫힌 형식 확률은 Fraction 으로 계산하고 출력 직전에만 10진 문자열로 바꿉니다.
"""
import math
from decimal import Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction

from birthday_coincidence.errors import InvalidParamsError
from birthday_coincidence.schema.prob import ExactProb

DEFAULT_DIGITS = 6

# 이 지수 미만이면 과학적 표기 (예: 3.072e-7)
_FIXED_MIN_EXPONENT = -5


def falling_factorial(d: int, k: int) -> int:
    """
    P_{d,k} = d (d-1) ... (d-k+1)

    Args:
        d: 값의 개수
        k: 뽑는 개수

    Returns:
        k=0 이면 1, k>d 이면 0
    """
    if d < 0 or k < 0:
        raise InvalidParamsError(f"falling_factorial needs non-negative arguments, got ({d}, {k})")
    return math.perm(d, k)


def binomial(n: int, k: int) -> int:
    """C(n,k), k>n 이면 0"""
    if n < 0 or k < 0:
        raise InvalidParamsError(f"binomial needs non-negative arguments, got ({n}, {k})")
    return math.comb(n, k)


def power_ratio(a: int, b: int, e: int) -> Fraction:
    """정확한 (a/b)^e"""
    if b == 0:
        raise InvalidParamsError("power_ratio denominator is zero")
    return Fraction(a ** e, b ** e)


def as_probability(x: Fraction) -> ExactProb:
    """0 <= x <= 1 인지 확인하고 그대로 반환"""
    if not 0 <= x <= 1:
        raise InvalidParamsError(f"{x} is not a probability")
    return x


def to_decimal(x: Fraction, sig_digits: int = DEFAULT_DIGITS) -> str:
    """
    정확한 유리수를 유효숫자 sig_digits 자리의 10진 문자열로 변환합니다 (round-half-even).

    |x| 의 10진 지수가 -5 이상이고 sig_digits 미만이면 고정 소수점,
    그 외에는 "3.072e-7" 형태의 과학적 표기를 씁니다. x 자체는 변하지 않습니다.

    Args:
        x: 변환할 값 (Fraction 또는 int)
        sig_digits: 유효숫자 자릿수 (>= 1)

    Returns:
        10진 문자열
    """
    if sig_digits < 1:
        raise InvalidParamsError(f"sig_digits must be >= 1, got {sig_digits}")
    x = Fraction(x)

    with localcontext() as ctx:
        ctx.prec = sig_digits
        ctx.rounding = ROUND_HALF_EVEN
        # Decimal 나눗셈은 현재 정밀도로 정확히 반올림됨
        rounded = Decimal(x.numerator) / Decimal(x.denominator)

    with localcontext() as ctx:
        ctx.prec = sig_digits + 10
        if rounded == 0:
            exponent = 0
        else:
            exponent = rounded.adjusted()

        if _FIXED_MIN_EXPONENT <= exponent < sig_digits:
            quantum = Decimal(1).scaleb(exponent - sig_digits + 1)
            return format(rounded.quantize(quantum), "f")

        mantissa = rounded.scaleb(-exponent).quantize(Decimal(1).scaleb(1 - sig_digits))
        return f"{format(mantissa, 'f')}e{exponent}"
