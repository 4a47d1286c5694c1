# Sparse multivariate polynomials graded by the weights of a WeightSignature.
#
# A polynomial lives in a GradedRing: the coordinates x^i_j of the signature
# (weight m_i each) followed by optional formal parameters of weight 0.
# Parameters are never substituted; they let a computation carry symbolic
# coefficients such as the `a` in (x, y + a*x^2).

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType

from wpgl.util.wpgl_types import FieldMismatchError, MissingAssignmentError, SignatureMismatchError

from .field import Field, FieldElement
from .signature import Variable, WeightSignature, variable_name

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class GradedRing:
    signature: WeightSignature
    field: Field
    parameters: tuple[str, ...] = ()

    @property
    def nvars(self) -> int:
        return self.signature.nvars

    @property
    def width(self) -> int:
        return self.signature.nvars + len(self.parameters)

    def zero(self) -> GradedPolynomial:
        return GradedPolynomial(self, {})

    def one(self) -> GradedPolynomial:
        return self.constant(1)

    def constant(self, value) -> GradedPolynomial:
        return self.monomial((0,) * self.width, value)

    def monomial(self, exponents: Exponents, coeff=1) -> GradedPolynomial:
        return GradedPolynomial(self, {tuple(exponents): self.field(coeff)})

    def var(self, group: int, slot: int) -> GradedPolynomial:
        exps = [0] * self.width
        exps[self.signature.variable_index[(group, slot)]] = 1
        return self.monomial(tuple(exps))

    def param(self, name: str) -> GradedPolynomial:
        exps = [0] * self.width
        exps[self.nvars + self.parameters.index(name)] = 1
        return self.monomial(tuple(exps))

    def lift(self, poly: GradedPolynomial) -> GradedPolynomial:
        """Embed a polynomial from the parameter-free ring of the same signature and field."""
        if poly.ring == self:
            return poly
        if poly.ring.parameters or poly.ring.signature != self.signature or poly.ring.field != self.field:
            raise SignatureMismatchError(f"cannot lift a polynomial over {poly.ring} into {self}")
        pad = (0,) * len(self.parameters)
        return GradedPolynomial(self, {exps + pad: c for exps, c in poly.terms.items()})

    def coordinate_exponents(self, exps: Exponents) -> Exponents:
        return exps[: self.nvars]

    def __str__(self):
        params = f"[{','.join(self.parameters)}]" if self.parameters else ""
        return f"{self.field}{params}{self.signature}"


def weighted_degree(signature: WeightSignature, exponents: Exponents) -> int:
    """Sum of m_i * e_ij over the coordinate part of an exponent vector."""
    return sum(w * e for w, e in zip(signature.variable_weights, exponents))


class GradedPolynomial:
    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: GradedRing, terms: dict):
        self.ring = ring
        # zero coefficients are never stored
        self._terms = {tuple(exps): c for exps, c in terms.items() if c}
        self._hash = None

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    @property
    def signature(self) -> WeightSignature:
        return self.ring.signature

    @property
    def field(self) -> Field:
        return self.ring.field

    def items(self):
        """Terms in canonical order: exponent vectors in descending lexicographic order."""
        return sorted(self._terms.items(), key=lambda item: item[0], reverse=True)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def _check(self, other: GradedPolynomial):
        if self.ring.field != other.ring.field:
            raise FieldMismatchError(self.ring.field, other.ring.field)
        if self.ring != other.ring:
            raise SignatureMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _coerce(self, other) -> GradedPolynomial:
        if isinstance(other, GradedPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)) or hasattr(other, "numerator"):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            terms[exps] = terms[exps] + c if exps in terms else c
        return GradedPolynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial(self.ring, {exps: -c for exps, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> GradedPolynomial:
        c = self.ring.field(c)
        return GradedPolynomial(self.ring, {exps: c * v for exps, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms[exps] + c1 * c2 if exps in terms else c1 * c2
        return GradedPolynomial(self.ring, terms)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> GradedPolynomial:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, GradedPolynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            constant = (0,) * self.ring.width
            return set(self._terms) <= {constant} and self.coefficient(constant) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            constant = (0,) * self.ring.width
            if set(self._terms) <= {constant}:
                # constants hash like the int they equal
                self._hash = hash(self.coefficient(constant))
            else:
                self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def coefficient(self, exponents: Exponents) -> FieldElement:
        return self._terms.get(tuple(exponents), self.ring.field.zero)

    def variables(self) -> set[Variable]:
        """Coordinates occurring with positive exponent."""
        used = set()
        for exps in self._terms:
            for k, e in enumerate(exps[: self.ring.nvars]):
                if e:
                    used.add(self.ring.signature.variables[k])
        return used

    def weighted_degrees(self) -> set[int]:
        return {weighted_degree(self.signature, exps) for exps in self._terms}

    def is_weighted_homogeneous(self, weight: int) -> bool:
        """True iff every term has weighted degree `weight`; the zero polynomial is homogeneous of every weight."""
        return all(weighted_degree(self.signature, exps) == weight for exps in self._terms)

    def substitute(self, assignment: dict) -> GradedPolynomial:
        """Replace each coordinate by its image; parameters stay fixed.

        The images must live in this polynomial's ring.
        """
        ring = self.ring
        variables = ring.signature.variables
        powers: dict[tuple[int, int], GradedPolynomial] = {}

        def power(k: int, e: int) -> GradedPolynomial:
            if (k, e) not in powers:
                image = assignment.get(variables[k])
                if image is None:
                    raise MissingAssignmentError(variables[k])
                if not isinstance(image, GradedPolynomial):
                    image = ring.constant(image)
                self._check(image)
                powers[(k, e)] = image if e == 1 else power(k, e - 1) * image
            return powers[(k, e)]

        result = ring.zero()
        for exps, c in self._terms.items():
            params = (0,) * ring.nvars + exps[ring.nvars :]
            term = GradedPolynomial(ring, {params: c})
            for k, e in enumerate(exps[: ring.nvars]):
                if e:
                    term = term * power(k, e)
            result = result + term
        return result

    def evaluate_parameters(self, values: dict) -> GradedPolynomial:
        """Specialize some formal parameters to field values."""
        ring = self.ring
        result = ring.zero()
        for exps, c in self._terms.items():
            coeff = c
            kept = list(exps)
            for name, value in values.items():
                k = ring.nvars + ring.parameters.index(name)
                coeff = coeff * ring.field(value) ** exps[k]
                kept[k] = 0
            result = result + GradedPolynomial(ring, {tuple(kept): coeff})
        return result

    def to_json(self):
        names = [variable_name(v) for v in self.ring.signature.variables] + list(self.ring.parameters)
        return [{"exps": {names[k]: e for k, e in enumerate(exps) if e}, "coeff": c.to_json()} for exps, c in self.items()]

    def __str__(self):
        if not self._terms:
            return "0"
        names = [variable_name(v) for v in self.ring.signature.variables] + list(self.ring.parameters)
        pieces = []
        for exps, c in self.items():
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e]
            coeff = c.to_json()
            if not factors:
                pieces.append(str(coeff))
            elif c == 1:
                pieces.append("*".join(factors))
            elif -c == 1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{coeff}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"GradedPolynomial({self})"


def poly_add(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    return p + q


def poly_mul(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    return p * q


def poly_scale(c, p: GradedPolynomial) -> GradedPolynomial:
    return p.scale(c)


def substitute(p: GradedPolynomial, assignment: dict) -> GradedPolynomial:
    return p.substitute(assignment)


def is_weighted_homogeneous(p: GradedPolynomial, weight: int) -> bool:
    return p.is_weighted_homogeneous(weight)
