"""Sparse multivariate Laurent polynomials and binomial-denominator rationals.

Everything downstream (chart weights, localization sums, the two-strand
homology oracle, the Hecke trace) runs on two exact types:

* :class:`LaurentPoly` — a sparse Laurent polynomial over a fixed, ordered
  variable tuple, with arbitrary-precision integer coefficients.  Exponents
  may be negative.
* :class:`BinomialRational` — a fraction ``numerator / prod (1 - m)^d`` whose
  denominator is a *multiset of binomial factors*, each ``m`` a monomial.
  Denominators are never expanded; cancellation happens only by exact
  division of the numerator by a single binomial factor.

Canonical string grammar (used by ``str()`` and :func:`parse_poly`)::

    poly    :=  term (('+' | '-') term)*
    term    :=  integer
             |  [integer '*'] varpow ('*' varpow)*
    varpow  :=  name ['^' integer]

Terms are printed in descending graded-lexicographic order of exponent
vectors (total degree first, then lexicographic), e.g. ``-a*Q^2*T + 1``.
A coefficient of ``±1`` on a non-constant term is printed as a bare sign.

Denominator factors are kept canonical: a factor ``(1 - m)`` with ``m``
graded-lex *smaller* than 1 is flipped to ``(1 - 1/m)`` using the identity
``1/(1 - m) = -m^-1 / (1 - m^-1)``; after construction ``1/(1 - Q^-1)`` is
stored as ``-Q / (1 - Q)``, so equivalent orientations compare equal.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from .errors import ExpansionError, NotDivisibleError

Exponent = Tuple[int, ...]

_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<pow>\^)|(?P<mul>\*))"
)


def _glex_key(exponent: Exponent) -> tuple:
    """Graded-lex sort key: total degree first, ties broken lexicographically."""
    return (sum(exponent), exponent)


class LaurentPoly:
    """A sparse Laurent polynomial with integer coefficients.

    Instances are immutable by convention: no public method mutates ``terms``
    and all arithmetic returns fresh objects, so values are safe to share
    across threads and to use as cache keys.

    Example:
        >>> Q, T = LaurentPoly.variables_of(("Q", "T"))
        >>> str((1 - Q * T) * (1 + Q * T))
        '-Q^2*T^2 + 1'
        >>> str(Q ** -2)
        'Q^-2'
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, int]):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables!r}")
        cleaned: Dict[Exponent, int] = {}
        for exponent, coefficient in terms.items():
            exponent = tuple(exponent)
            if len(exponent) != len(variables):
                raise ValueError(
                    f"exponent {exponent} does not match variables {variables}"
                )
            if coefficient:
                cleaned[exponent] = cleaned.get(exponent, 0) + int(coefficient)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(
            self, "terms", {e: c for e, c in cleaned.items() if c}
        )

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls(variables, {})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def constant(cls, variables: Sequence[str], value: int) -> "LaurentPoly":
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def monomial(
        cls, variables: Sequence[str], exponent: Exponent, coefficient: int = 1
    ) -> "LaurentPoly":
        return cls(variables, {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "LaurentPoly":
        variables = tuple(variables)
        exponent = [0] * len(variables)
        exponent[variables.index(name)] = 1
        return cls(variables, {tuple(exponent): 1})

    @classmethod
    def variables_of(cls, variables: Sequence[str]) -> tuple:
        """Return the generator polynomials for each name, in order."""
        return tuple(cls.variable(variables, name) for name in variables)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.variables): 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> int:
        """Value of a constant polynomial (zero or a single degree-0 term)."""
        if self.is_zero():
            return 0
        ((exponent, coefficient),) = self.terms.items()
        if any(exponent):
            raise ValueError(f"{self} is not constant")
        return coefficient

    def items(self) -> Iterator[tuple[Exponent, int]]:
        """Iterate (exponent, coefficient) in descending graded-lex order."""
        return iter(
            sorted(self.terms.items(), key=lambda t: _glex_key(t[0]), reverse=True)
        )

    def coefficient_mass(self) -> int:
        """Sum of absolute values of all coefficients."""
        return sum(abs(c) for c in self.terms.values())

    def exponents_of(self, name: str) -> set[int]:
        """The set of exponents the named variable takes across all terms."""
        index = self.variables.index(name)
        return {exponent[index] for exponent in self.terms}

    def weighted_degrees(self, weights: Mapping[str, int]) -> tuple[int, int]:
        """(min, max) of ``sum(weights[v] * exp[v])`` over terms; requires nonzero."""
        if self.is_zero():
            raise ValueError("the zero polynomial has no degree")
        weight_vector = tuple(weights[name] for name in self.variables)
        values = [
            sum(w * e for w, e in zip(weight_vector, exponent))
            for exponent in self.terms
        ]
        return min(values), max(values)

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "LaurentPoly") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    def __add__(self, other):  # noqa: ANN001
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return LaurentPoly(self.variables, terms)

    def __radd__(self, other):  # noqa: ANN001
        return self.__add__(other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(
            self.variables, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):  # noqa: ANN001
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other):  # noqa: ANN001
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other):  # noqa: ANN001
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_compatible(other)
        terms: Dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                terms[exponent] = terms.get(exponent, 0) + c1 * c2
        return LaurentPoly(self.variables, terms)

    def __rmul__(self, other):  # noqa: ANN001
        return self.__mul__(other)

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            return self.monomial_inverse() ** (-power)
        result = LaurentPoly.one(self.variables)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def monomial_inverse(self) -> "LaurentPoly":
        """Inverse of a single-term polynomial with coefficient ±1."""
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not a monomial")
        ((exponent, coefficient),) = self.terms.items()
        if coefficient not in (1, -1):
            raise ValueError(f"{self} is not invertible over the integers")
        return LaurentPoly(
            self.variables, {tuple(-e for e in exponent): coefficient}
        )

    def _coerce(self, other):  # noqa: ANN001
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.variables, other)
        return NotImplemented

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, assignment: Mapping[str, "LaurentPoly"]) -> "LaurentPoly":
        """Ring substitution: replace every variable by its assigned image.

        Args:
            assignment: maps each variable name of ``self`` to a LaurentPoly;
                all images must share one variable tuple (the target).  A
                variable occurring with a negative exponent must map to an
                invertible monomial (single term, coefficient ±1).

        Returns:
            The expanded image polynomial over the target variables.
        """
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise ValueError(f"no assignment for variables {missing}")
        images = [assignment[name] for name in self.variables]
        target = images[0].variables
        for image in images:
            if image.variables != target:
                raise ValueError("assignment images use mixed variable tuples")
        result = LaurentPoly.zero(target)
        for exponent, coefficient in self.terms.items():
            term = LaurentPoly.constant(target, coefficient)
            for image, power in zip(images, exponent):
                if power:
                    term = term * image**power
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        """Evaluate exactly at rational values for every variable."""
        point = [Fraction(values[name]) for name in self.variables]
        total = Fraction(0)
        for exponent, coefficient in self.terms.items():
            product = Fraction(coefficient)
            for base, power in zip(point, exponent):
                product *= base**power
            total += product
        return total

    def truncate(self, weights: Mapping[str, int], bound: int) -> "LaurentPoly":
        """Drop every term whose weighted total degree exceeds ``bound``."""
        weight_vector = tuple(weights[name] for name in self.variables)
        kept = {
            exponent: coefficient
            for exponent, coefficient in self.terms.items()
            if sum(w * e for w, e in zip(weight_vector, exponent)) <= bound
        }
        return LaurentPoly(self.variables, kept)

    # -- comparisons and display -------------------------------------------

    def __eq__(self, other):  # noqa: ANN001
        if isinstance(other, int):
            return self.terms == LaurentPoly.constant(self.variables, other).terms
        return (
            isinstance(other, LaurentPoly)
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _term_str(self, exponent: Exponent, coefficient: int) -> str:
        factors = []
        for name, power in zip(self.variables, exponent):
            if power == 0:
                continue
            factors.append(name if power == 1 else f"{name}^{power}")
        magnitude = abs(coefficient)
        if not factors:
            return str(magnitude)
        body = "*".join(factors)
        return body if magnitude == 1 else f"{magnitude}*{body}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for index, (exponent, coefficient) in enumerate(self.items()):
            body = self._term_str(exponent, coefficient)
            if index == 0:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def parse_poly(text: str, variables: Sequence[str]) -> LaurentPoly:
    """Parse the canonical string grammar back into a :class:`LaurentPoly`.

    Accepts exactly the strings ``str()`` produces (and harmless variants:
    arbitrary whitespace, ``+`` signs on coefficients and exponents, any
    variable order inside a term).

    Example:
        >>> str(parse_poly("-a*Q^2*T + 1", ("a", "Q", "T")))
        '-a*Q^2*T + 1'
    """
    variables = tuple(variables)
    index_of = {name: i for i, name in enumerate(variables)}
    terms: Dict[Exponent, int] = {}

    position = 0
    text_length = len(text)

    def next_token():
        nonlocal position
        if position >= text_length:
            return None, None
        match = _TOKEN.match(text, position)
        if match is None or match.lastgroup is None:
            raise ValueError(f"bad character at position {position}: {text[position:]!r}")
        position = match.end()
        return match.lastgroup, match.group(match.lastgroup)

    def restore(save: int) -> None:
        nonlocal position
        position = save

    while True:
        kind, value = next_token()
        if kind is None:
            break
        sign = 1
        while kind == "sign":
            if value == "-":
                sign = -sign
            kind, value = next_token()
        coefficient = sign
        exponent = [0] * len(variables)
        saw_body = False
        while True:
            if kind == "int":
                coefficient *= int(value)
                saw_body = True
            elif kind == "name":
                if value not in index_of:
                    raise ValueError(f"unknown variable {value!r}")
                power = 1
                save = position
                nk, _ = next_token()
                if nk == "pow":
                    pk, pv = next_token()
                    power_sign = 1
                    while pk == "sign":
                        if pv == "-":
                            power_sign = -power_sign
                        pk, pv = next_token()
                    if pk != "int":
                        raise ValueError("expected integer exponent after '^'")
                    power = power_sign * int(pv)
                else:
                    restore(save)
                exponent[index_of[value]] += power
                saw_body = True
            else:
                raise ValueError(f"unexpected token {value!r}")
            save = position
            kind, value = next_token()
            if kind == "mul":
                kind, value = next_token()
                continue
            restore(save)
            break
        if not saw_body:
            raise ValueError("empty term")
        key = tuple(exponent)
        terms[key] = terms.get(key, 0) + coefficient
        save = position
        kind, value = next_token()
        if kind is None:
            break
        if kind != "sign":
            raise ValueError(f"expected '+' or '-' between terms, got {value!r}")
        restore(save)
    return LaurentPoly(variables, terms)


def _binomial(variables: Sequence[str], monomial_exponent: Exponent) -> LaurentPoly:
    """The polynomial ``1 - x^exponent``."""
    variables = tuple(variables)
    zero_exp = (0,) * len(variables)
    return LaurentPoly(variables, {zero_exp: 1, tuple(monomial_exponent): -1})


class BinomialRational:
    """An exact fraction ``numerator / prod (1 - m_i)^{d_i}``.

    The denominator is stored as a multiset ``{monomial exponent: multiplicity}``
    and never expanded.  On construction every factor is brought to canonical
    orientation (monomial graded-lex greater than 1), which makes structural
    comparison meaningful; factors equal to ``(1 - 1)`` are rejected.

    ``add``/``mul`` do *not* cancel; call :meth:`normalize` once at the end of
    an accumulation to divide out every denominator factor that exactly
    divides the numerator.
    """

    __slots__ = ("variables", "num", "den")

    def __init__(
        self,
        num: LaurentPoly,
        den: Mapping[Exponent, int] | None = None,
    ):
        den = dict(den or {})
        variables = num.variables
        zero_exp = (0,) * len(variables)
        canonical_num = num
        canonical_den: Dict[Exponent, int] = {}
        for exponent, multiplicity in den.items():
            exponent = tuple(exponent)
            if multiplicity < 0:
                raise ValueError("negative denominator multiplicity")
            if multiplicity == 0:
                continue
            if exponent == zero_exp:
                raise ValueError("denominator factor (1 - 1) is a zero divisor")
            if _glex_key(exponent) < _glex_key(zero_exp):
                # 1/(1-m)^d == (-1)^d m^-d / (1-m^-1)^d
                flipped = tuple(-e for e in exponent)
                shift = LaurentPoly.monomial(
                    variables,
                    tuple(-multiplicity * e for e in exponent),
                    (-1) ** multiplicity,
                )
                canonical_num = canonical_num * shift
                exponent = flipped
            canonical_den[exponent] = canonical_den.get(exponent, 0) + multiplicity
        if canonical_num.is_zero():
            canonical_den = {}
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "num", canonical_num)
        object.__setattr__(self, "den", canonical_den)

    def __setattr__(self, name, value):  # noqa: ANN001
        raise AttributeError("BinomialRational is immutable")

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "BinomialRational":
        return cls(poly, {})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "BinomialRational":
        return cls(LaurentPoly.one(variables), {})

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "BinomialRational":
        return cls(LaurentPoly.zero(variables), {})

    # -- structure ---------------------------------------------------------

    def denominator_poly(self) -> LaurentPoly:
        """The denominator expanded to a single polynomial (for comparisons)."""
        product = LaurentPoly.one(self.variables)
        for exponent, multiplicity in self.den.items():
            product = product * _binomial(self.variables, exponent) ** multiplicity
        return product

    def is_polynomial(self) -> bool:
        return not self.den

    def _check_compatible(self, other: "BinomialRational") -> None:
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}"
            )

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):  # noqa: ANN001
        if isinstance(other, BinomialRational):
            return other
        if isinstance(other, LaurentPoly):
            return BinomialRational.from_poly(other)
        if isinstance(other, int):
            return BinomialRational.from_poly(
                LaurentPoly.constant(self.variables, other)
            )
        return NotImplemented

    def __add__(self, other):  # noqa: ANN001
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_compatible(other)
        lcd: Dict[Exponent, int] = dict(self.den)
        for exponent, multiplicity in other.den.items():
            lcd[exponent] = max(lcd.get(exponent, 0), multiplicity)
        left = self.num
        right = other.num
        for exponent, multiplicity in lcd.items():
            missing_left = multiplicity - self.den.get(exponent, 0)
            missing_right = multiplicity - other.den.get(exponent, 0)
            if missing_left:
                left = left * _binomial(self.variables, exponent) ** missing_left
            if missing_right:
                right = right * _binomial(self.variables, exponent) ** missing_right
        return BinomialRational(left + right, lcd)

    def __radd__(self, other):  # noqa: ANN001
        return self.__add__(other)

    def __neg__(self) -> "BinomialRational":
        return BinomialRational(-self.num, self.den)

    def __sub__(self, other):  # noqa: ANN001
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(other.__neg__())

    def __mul__(self, other):  # noqa: ANN001
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_compatible(other)
        den = dict(self.den)
        for exponent, multiplicity in other.den.items():
            den[exponent] = den.get(exponent, 0) + multiplicity
        return BinomialRational(self.num * other.num, den)

    def __rmul__(self, other):  # noqa: ANN001
        return self.__mul__(other)

    def __pow__(self, power: int) -> "BinomialRational":
        if power < 0:
            raise ValueError("negative powers of rationals are not supported")
        result = BinomialRational.one(self.variables)
        for _ in range(power):
            result = result * self
        return result

    # -- normalization -----------------------------------------------------

    def normalize(self) -> "BinomialRational":
        """Divide out every denominator factor that exactly divides the numerator.

        Idempotent; returns a new value.  Uses only exact single-binomial
        division, never multivariate gcd.
        """
        num = self.num
        den = dict(self.den)
        if num.is_zero():
            return BinomialRational.zero(self.variables)
        progress = True
        while progress:
            progress = False
            for exponent in sorted(den, key=_glex_key):
                while den.get(exponent, 0) > 0:
                    try:
                        num = divide_by_binomial(num, exponent)
                    except NotDivisibleError:
                        break
                    den[exponent] -= 1
                    if den[exponent] == 0:
                        del den[exponent]
                    progress = True
        return BinomialRational(num, den)

    def substitute(
        self, assignment: Mapping[str, LaurentPoly]
    ) -> "BinomialRational":
        """Apply a monomial substitution to numerator and denominator factors.

        Every denominator monomial must map to a monomial with coefficient +1
        (true for any variable-to-monomial assignment such as Q -> q^2 t^-2).
        """
        num = self.num.substitute(assignment)
        target = num.variables if not num.is_zero() else None
        if target is None:
            # Zero numerator: still need the target variable tuple.
            probe = LaurentPoly.one(self.variables).substitute(assignment)
            target = probe.variables
        den: Dict[Exponent, int] = {}
        for exponent, multiplicity in self.den.items():
            image = LaurentPoly.monomial(self.variables, exponent).substitute(
                assignment
            )
            if len(image.terms) != 1:
                raise ValueError("denominator monomial image is not a monomial")
            ((image_exponent, image_coefficient),) = image.terms.items()
            if image_coefficient != 1:
                raise ValueError("denominator monomial image has coefficient != 1")
            den[image_exponent] = den.get(image_exponent, 0) + multiplicity
        return BinomialRational(num, den)

    # -- series ------------------------------------------------------------

    def truncate_series(
        self, weights: Mapping[str, int], bound: int
    ) -> LaurentPoly:
        """Exact series expansion truncated to weighted degree ``<= bound``.

        Every denominator monomial must have strictly positive weighted
        degree, otherwise the geometric expansion is not locally finite and
        an :class:`ExpansionError` is raised.
        """
        weight_vector = tuple(weights[name] for name in self.variables)
        if self.num.is_zero():
            return self.num
        result = self.num.truncate(weights, bound)
        for exponent, multiplicity in sorted(self.den.items(), key=lambda t: _glex_key(t[0])):
            step = sum(w * e for w, e in zip(weight_vector, exponent))
            if step <= 0:
                raise ExpansionError(
                    f"denominator monomial with exponent {exponent} has "
                    f"non-positive grading value {step}"
                )
            monomial = LaurentPoly.monomial(self.variables, exponent)
            for _ in range(multiplicity):
                acc = result
                shifted = (result * monomial).truncate(weights, bound)
                while not shifted.is_zero():
                    acc = acc + shifted
                    shifted = (shifted * monomial).truncate(weights, bound)
                result = acc
        return result.truncate(weights, bound)

    # -- comparison and display --------------------------------------------

    def __eq__(self, other):  # noqa: ANN001
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.variables != other.variables:
            return False
        return self.num * other.denominator_poly() == other.num * self.denominator_poly()

    def __hash__(self):
        raise TypeError("BinomialRational is not hashable (equality is semantic)")

    def __str__(self) -> str:
        numerator = f"({self.num})"
        if not self.den:
            return str(self.num)
        factors = []
        for exponent, multiplicity in sorted(
            self.den.items(), key=lambda t: _glex_key(t[0])
        ):
            mono = str(LaurentPoly.monomial(self.variables, exponent))
            factor = f"(1 - {mono})"
            if multiplicity != 1:
                factor += f"^{multiplicity}"
            factors.append(factor)
        denominator = " * ".join(factors)
        if len(factors) > 1:
            denominator = f"({denominator})"
        return f"{numerator} / {denominator}"

    def __repr__(self) -> str:
        return f"BinomialRational({self})"

    def to_record(self) -> dict:
        """JSON-ready structural form (numerator string + factor list)."""
        return {
            "numerator": str(self.num),
            "denominator_factors": [
                [str(LaurentPoly.monomial(self.variables, exponent)), multiplicity]
                for exponent, multiplicity in sorted(
                    self.den.items(), key=lambda t: _glex_key(t[0])
                )
            ],
            "variables": list(self.variables),
        }


def divide_by_binomial(poly: LaurentPoly, monomial_exponent: Exponent) -> LaurentPoly:
    """Exact division of ``poly`` by ``(1 - x^monomial_exponent)``.

    The factor must be in canonical orientation (monomial graded-lex greater
    than 1).  Works from the graded-lex-minimal term upward: if
    ``q * (1 - m) == poly`` then the minimal term of ``poly`` is the minimal
    term of ``q``, so it can be peeled off and the remainder shrinks.  The
    quotient's terms all lie glex-between the minimal and maximal terms of
    ``poly``, which bounds the loop; crossing the maximal term proves the
    division is not exact.

    Raises:
        NotDivisibleError: if the factor does not exactly divide ``poly``.
    """
    variables = poly.variables
    monomial_exponent = tuple(monomial_exponent)
    zero_exp = (0,) * len(variables)
    if _glex_key(monomial_exponent) <= _glex_key(zero_exp):
        raise ValueError("binomial factor must be in canonical orientation")
    if poly.is_zero():
        return poly
    bound = max(_glex_key(e) for e in poly.terms)
    remainder = dict(poly.terms)
    quotient: Dict[Exponent, int] = {}
    while remainder:
        exponent = min(remainder, key=_glex_key)
        if _glex_key(exponent) > bound:
            raise NotDivisibleError(
                f"(1 - {LaurentPoly.monomial(variables, monomial_exponent)}) "
                f"does not divide {poly}"
            )
        coefficient = remainder.pop(exponent)
        quotient[exponent] = quotient.get(exponent, 0) + coefficient
        shifted = tuple(a + b for a, b in zip(exponent, monomial_exponent))
        updated = remainder.get(shifted, 0) + coefficient
        if updated:
            remainder[shifted] = updated
        else:
            remainder.pop(shifted, None)
    return LaurentPoly(variables, quotient)


def truncate_series(
    rational: BinomialRational, weights: Mapping[str, int], bound: int
) -> LaurentPoly:
    """Module-level alias for :meth:`BinomialRational.truncate_series`."""
    return rational.truncate_series(weights, bound)
