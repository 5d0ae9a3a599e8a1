"""
Text descriptions of groups.

Grammar (whitespace-insensitive, case-sensitive)::

    spec := term ('x' term)*
    term := 'C' int | 'D' int | 'Q8' | 'S' int
          | 'E(' int ',' int ')' | 'A(' int ';' int (',' int)* ')'
          | 'W(' spec ',' spec ')' | '(' spec ')'

``C2 x C2`` is a direct product, ``W(C4,C2)`` the wreath product C4 wr C2,
and ``A(2;1,2,2)`` the abelian group C2 x C4 x C4.
"""

from dataclasses import dataclass

from . import groups
from .errors import PreconditionError, SpecParseError
from .numtheory import is_prime, prime_power


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __str__(self):
        return f"C{self.n}"


@dataclass(frozen=True)
class Dihedral:
    n: int

    def __str__(self):
        return f"D{self.n}"


@dataclass(frozen=True)
class Quaternion:
    def __str__(self):
        return "Q8"


@dataclass(frozen=True)
class Symmetric:
    n: int

    def __str__(self):
        return f"S{self.n}"


@dataclass(frozen=True)
class Elementary:
    p: int
    k: int

    def __str__(self):
        return f"E({self.p},{self.k})"


@dataclass(frozen=True)
class Abelian:
    p: int
    exponents: tuple

    def __str__(self):
        return f"A({self.p};{','.join(map(str, self.exponents))})"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __str__(self):
        return " x ".join(f"({f})" if isinstance(f, Product) else str(f) for f in self.factors)


@dataclass(frozen=True)
class Wreath:
    a: object
    b: object

    def __str__(self):
        return f"W({self.a},{self.b})"


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, msg, pos=None):
        return SpecParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def spec(self):
        factors = [self.term()]
        while self.peek() == "x":
            self.pos += 1
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def term(self):
        ch = self.peek()
        start = self.pos
        if ch == "(":
            self.pos += 1
            node = self.spec()
            self.expect(")")
            return node
        if ch in ("C", "D", "S"):
            self.pos += 1
            return {"C": Cyclic, "D": Dihedral, "S": Symmetric}[ch](self.integer())
        if ch == "Q":
            self.pos += 1
            if self.integer() != 8:
                raise self.error("only Q8 is supported", start)
            return Quaternion()
        if ch == "E":
            self.pos += 1
            self.expect("(")
            p = self.integer()
            self.expect(",")
            k = self.integer()
            self.expect(")")
            return Elementary(p, k)
        if ch == "A":
            self.pos += 1
            self.expect("(")
            p = self.integer()
            self.expect(";")
            exps = [self.integer()]
            while self.peek() == ",":
                self.pos += 1
                exps.append(self.integer())
            self.expect(")")
            return Abelian(p, tuple(exps))
        if ch == "W":
            self.pos += 1
            self.expect("(")
            a = self.spec()
            self.expect(",")
            b = self.spec()
            self.expect(")")
            return Wreath(a, b)
        raise self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")


def parse_spec(text):
    """Parse a group description into its syntax tree."""
    parser = _Parser(text)
    node = parser.spec()
    parser.skip()
    if parser.pos != len(text):
        raise parser.error(f"unexpected {text[parser.pos]!r}")
    return node


def check_spec(node):
    """Semantic checks the grammar cannot express (e.g. D2, S7, E(4,2))."""
    if isinstance(node, Cyclic) and node.n < 2:
        raise PreconditionError(f"{node}: cyclic group needs n >= 2")
    if isinstance(node, Dihedral) and node.n < 3:
        raise PreconditionError(f"{node}: dihedral group needs n >= 3")
    if isinstance(node, Symmetric) and not 2 <= node.n <= 6:
        raise PreconditionError(f"{node}: symmetric group needs 2 <= n <= 6")
    if isinstance(node, (Elementary, Abelian)) and not is_prime(node.p):
        raise PreconditionError(f"{node}: {node.p} is not prime")
    if isinstance(node, Elementary) and node.k < 1:
        raise PreconditionError(f"{node}: needs k >= 1")
    if isinstance(node, Abelian) and any(e < 1 for e in node.exponents):
        raise PreconditionError(f"{node}: exponents must be positive")
    if isinstance(node, Product):
        for f in node.factors:
            check_spec(f)
    if isinstance(node, Wreath):
        check_spec(node.a)
        check_spec(node.b)
    return node


def build_group(node, wreath_cap=groups.WREATH_TABLE_CAP):
    """Materialize the Cayley table described by ``node``."""
    check_spec(node)
    if isinstance(node, Cyclic):
        return groups.cyclic(node.n)
    if isinstance(node, Dihedral):
        return groups.dihedral(node.n)
    if isinstance(node, Quaternion):
        return groups.quaternion8()
    if isinstance(node, Symmetric):
        return groups.symmetric(node.n)
    if isinstance(node, Elementary):
        return groups.elementary_abelian(node.p, node.k)
    if isinstance(node, Abelian):
        return groups.abelian(node.p, node.exponents)
    if isinstance(node, Product):
        G = build_group(node.factors[0], wreath_cap)
        for f in node.factors[1:]:
            G = groups.direct_product(G, build_group(f, wreath_cap))
        G.name = str(node)
        return G
    if isinstance(node, Wreath):
        return groups.wreath_product(
            build_group(node.a, wreath_cap), build_group(node.b, wreath_cap), cap=wreath_cap
        )
    raise TypeError(f"not a group spec node: {node!r}")


def abelian_exponents(node):
    """``(p, exponents)`` when ``node`` describes an abelian p-group by cyclic factors."""
    check_spec(node)
    if isinstance(node, Cyclic):
        pk = prime_power(node.n)
        if pk is None:
            raise PreconditionError(f"{node} is not a p-group")
        return pk[0], [pk[1]]
    if isinstance(node, Elementary):
        return node.p, [1] * node.k
    if isinstance(node, Abelian):
        return node.p, list(node.exponents)
    if isinstance(node, Product):
        parts = [abelian_exponents(f) for f in node.factors]
        primes = {p for p, _ in parts}
        if len(primes) != 1:
            raise PreconditionError(f"{node} mixes primes {sorted(primes)}")
        return parts[0][0], [e for _, es in parts for e in es]
    raise PreconditionError(f"{node} is not given as a product of cyclic p-groups")
