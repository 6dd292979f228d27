"""Sparse multivariate polynomials with arbitrary-precision integer
coefficients.

Terms are stored as a map from exponent tuples (aligned with the sorted
variable list) to nonzero integer coefficients; zero coefficients are never
stored, so equality is syntactic.  Serialization uses the graded
lexicographic term order for determinism.
"""
from __future__ import annotations

import itertools


class NonDivisibleError(ArithmeticError):
    """An exact integer division of coefficients failed.

    Ghost-recursion and delta divisions are exact by theory, so this firing
    always indicates a bug or corrupted data.
    """

    def __init__(self, coefficient: int, divisor: int):
        super().__init__(f"coefficient {coefficient} not divisible by {divisor}")
        self.coefficient = coefficient
        self.divisor = divisor


class MissingVariable(KeyError):
    pass


def _grlex_key(exps):
    return (sum(exps), exps)


class IntPolynomial:
    __slots__ = ("variables", "terms")

    def __init__(self, variables=(), terms=None):
        """Build from an ordered variable tuple and an {exponents: coeff} map.

        The constructor normalizes: variables are sorted, zero coefficients
        dropped, and unused trailing structure kept as-is (variables that
        appear nowhere are allowed and ignored by equality via alignment).
        """
        variables = tuple(variables)
        order = sorted(range(len(variables)), key=lambda i: variables[i])
        self.variables = tuple(variables[i] for i in order)
        clean: dict[tuple, int] = {}
        if terms:
            for exps, coeff in terms.items():
                if coeff == 0:
                    continue
                if len(exps) != len(variables):
                    raise ValueError("exponent arity does not match variable list")
                key = tuple(exps[i] for i in order)
                clean[key] = clean.get(key, 0) + coeff
                if clean[key] == 0:
                    del clean[key]
        self.terms = clean

    # ---- constructors ----

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls((), {})

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((), {(): c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "IntPolynomial":
        return cls((name,), {(1,): 1})

    # ---- normal form helpers ----

    def _pruned(self) -> "IntPolynomial":
        """Drop variables that appear in no term (canonical support)."""
        used = [False] * len(self.variables)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        if all(used):
            return self
        keep = [i for i, u in enumerate(used) if u]
        variables = tuple(self.variables[i] for i in keep)
        terms = {}
        for exps, coeff in self.terms.items():
            key = tuple(exps[i] for i in keep)
            terms[key] = terms.get(key, 0) + coeff
        return IntPolynomial(variables, terms)

    def _aligned_terms(self, variables: tuple[str, ...]) -> dict[tuple, int]:
        idx = {v: i for i, v in enumerate(variables)}
        pos = [idx[v] for v in self.variables]
        out: dict[tuple, int] = {}
        nvars = len(variables)
        for exps, coeff in self.terms.items():
            key = [0] * nvars
            for p, e in zip(pos, exps):
                key[p] = e
            out[tuple(key)] = coeff
        return out

    @staticmethod
    def _union_vars(f: "IntPolynomial", g: "IntPolynomial") -> tuple[str, ...]:
        return tuple(sorted(set(f.variables) | set(g.variables)))

    # ---- arithmetic ----

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        variables = self._union_vars(self, other)
        terms = self._aligned_terms(variables)
        for exps, coeff in other._aligned_terms(variables).items():
            terms[exps] = terms.get(exps, 0) + coeff
        return IntPolynomial(variables, terms)._pruned()

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntPolynomial.zero()
            return IntPolynomial(
                self.variables, {e: other * c for e, c in self.terms.items()}
            )
        variables = self._union_vars(self, other)
        a = self._aligned_terms(variables)
        b = other._aligned_terms(variables)
        terms: dict[tuple, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                terms[key] = terms.get(key, 0) + c1 * c2
        return IntPolynomial(variables, terms)._pruned()

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial exponent")
        result = IntPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self._pruned(), other._pruned()
        return a.variables == b.variables and a.terms == b.terms

    def __hash__(self):
        p = self._pruned()
        return hash((p.variables, frozenset(p.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # ---- substitution and evaluation ----

    def substitute(self, assignment: dict) -> "IntPolynomial":
        """Compose: replace each variable by the assigned polynomial.

        Integer values in the assignment are promoted to constants.  The
        assignment must cover every variable that actually occurs.
        """
        support = self._pruned()
        mapping = {}
        for v in support.variables:
            if v not in assignment:
                raise MissingVariable(v)
            img = assignment[v]
            mapping[v] = IntPolynomial.constant(img) if isinstance(img, int) else img
        result = IntPolynomial.zero()
        powcache: dict[tuple[str, int], IntPolynomial] = {}
        for exps, coeff in support.terms.items():
            term = IntPolynomial.constant(coeff)
            for v, e in zip(support.variables, exps):
                if e == 0:
                    continue
                key = (v, e)
                if key not in powcache:
                    powcache[key] = mapping[v] ** e
                term = term * powcache[key]
            result = result + term
        return result

    def rename(self, mapping: dict[str, str]) -> "IntPolynomial":
        variables = tuple(mapping.get(v, v) for v in self.variables)
        if len(set(variables)) != len(variables):
            raise ValueError("variable rename collides")
        return IntPolynomial(variables, dict(self.terms))

    def exact_div_int(self, k: int) -> "IntPolynomial":
        if k == 0:
            raise ZeroDivisionError("division of polynomial by zero")
        terms = {}
        for exps, coeff in self.terms.items():
            if coeff % k != 0:
                raise NonDivisibleError(coeff, k)
            terms[exps] = coeff // k
        return IntPolynomial(self.variables, terms)

    def reduce_mod(self, m: int) -> "IntPolynomial":
        """Coefficientwise reduction modulo m (representatives 0..m-1)."""
        return IntPolynomial(
            self.variables, {e: c % m for e, c in self.terms.items()}
        )._pruned()

    def evaluate_in_ring(self, ring, assignment: dict):
        """Image under the unique ring map Z[vars] -> R sending each variable
        to its assigned element."""
        support = self._pruned()
        payloads = {}
        for v in support.variables:
            if v not in assignment:
                raise MissingVariable(v)
            x = assignment[v]
            if x.ring is not ring:
                from .rings import MismatchedParents

                raise MismatchedParents(f"assignment for {v} lives in a foreign ring")
            payloads[v] = x.payload
        acc = ring._zero
        powcache = {}
        for exps, coeff in support.terms.items():
            t = ring._int(coeff)
            for v, e in zip(support.variables, exps):
                if e == 0:
                    continue
                key = (v, e)
                pw = powcache.get(key)
                if pw is None:
                    pw = ring._pow(payloads[v], e)
                    powcache[key] = pw
                t = ring._mul(t, pw)
            acc = ring._add(acc, t)
        return ring.element(acc)

    # ---- serialization ----

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def to_obj(self) -> dict:
        p = self._pruned()
        return {
            "variables": list(p.variables),
            "terms": [
                {"exponents": list(exps), "coeff": str(coeff)}
                for exps, coeff in p.sorted_terms()
            ],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "IntPolynomial":
        variables = tuple(obj["variables"])
        terms = {
            tuple(t["exponents"]): int(t["coeff"]) for t in obj["terms"]
        }
        return cls(variables, terms)

    def __repr__(self):
        p = self._pruned()
        if not p.terms:
            return "0"
        parts = []
        for exps, coeff in p.sorted_terms():
            factors = []
            for v, e in zip(p.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(body)
            elif coeff == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}")
        out = parts[0]
        for part in parts[1:]:
            out += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return out
