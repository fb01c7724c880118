"""Problem-file and polynomial-expression parser.

The input language mirrors compact computer-algebra scripts::

    // comments run to end of line
    ring r = ZZ, (z, y, x), dp;
    ideal I = 3z-y, 3y-x, 3x;
    stream = 2x, 3x;
    oracle = 2x, 3x;            // or: oracle = "path/to/other.mg";

Coefficient domains are ZZ, QQ or ZZ/m; orders are lp (lex), dp
(degrevlex) or block((front vars): ord, (back vars): ord) where the two
groups concatenate to the declared variable list.  Polynomials use integer
literals, '^' exponents (Singular-style juxtaposed digits like 3y2 also
work), optional '*', parentheses, and p/q rational constants in QQ rings.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .polyring import (
    QQ,
    ZZ,
    Block,
    DegRevLex,
    Lex,
    ModularDomain,
    Polynomial,
    RationalDomain,
    RingDescriptor,
)


@dataclass(frozen=True)
class Token:
    kind: str   # IDENT, INT, STRING, PUNCT, END
    text: str
    line: int
    column: int


@dataclass(frozen=True)
class ProblemFile:
    ring: RingDescriptor
    ideals: dict            # name -> tuple of Polynomial, insertion ordered
    stream: tuple | None
    oracle_polys: tuple | None
    oracle_path: str | None

    def ideal(self, name=None):
        """Pick an ideal section: by name, else 'I' if present, else the first."""
        if name is not None:
            if name not in self.ideals:
                raise KeyError(f"no ideal section named {name!r}")
            return self.ideals[name]
        if "I" in self.ideals:
            return self.ideals["I"]
        if not self.ideals:
            raise KeyError("the problem file declares no ideal sections")
        return next(iter(self.ideals.values()))


_PUNCT = set("=,;()^+-*/:")


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] != '"':
                if text[j] == "\n":
                    raise ParseError("unterminated string", line, start_col)
                j += 1
            if j >= n:
                raise ParseError("unterminated string", line, start_col)
            tokens.append(Token("STRING", text[i + 1:j], line, start_col))
            col += j - i + 1
            i = j + 1
            continue
        if ch in _PUNCT:
            tokens.append(Token("PUNCT", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(Token("END", "", line, col))
    return tokens


class _Cursor:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        if tok.kind != "END":
            self.pos += 1
        return tok

    def expect(self, kind, text=None):
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text if text is not None else kind
            raise ParseError(f"expected {want!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.column)
        return self.advance()

    def match(self, kind, text=None):
        tok = self.peek()
        if tok.kind == kind and (text is None or tok.text == text):
            return self.advance()
        return None


# ---------------------------------------------------------------------------
# polynomial expressions

def _split_variable_factors(token, variables):
    """Split an IDENT like 'y2x' into [(var_index, exponent), ...].

    Longest declared variable name wins at each position; a trailing digit
    run is the exponent of the variable just matched.
    """
    by_length = sorted(variables, key=len, reverse=True)
    text = token.text
    pos = 0
    factors = []
    while pos < len(text):
        for name in by_length:
            if text.startswith(name, pos):
                pos += len(name)
                digits = ""
                while pos < len(text) and text[pos].isdigit():
                    digits += text[pos]
                    pos += 1
                factors.append((variables.index(name), int(digits) if digits else 1))
                break
        else:
            raise ParseError(f"unknown identifier {text[pos:]!r}",
                             token.line, token.column + pos)
    return factors


class _PolyParser:
    """Recursive-descent expression parser over the shared token cursor."""

    def __init__(self, cursor, ring):
        self.cur = cursor
        self.ring = ring

    def parse(self):
        poly = self.expression()
        return poly

    def expression(self):
        tok = self.cur.peek()
        negate = False
        if tok.kind == "PUNCT" and tok.text in "+-":
            self.cur.advance()
            negate = tok.text == "-"
        result = self.term()
        if negate:
            result = -result
        while True:
            tok = self.cur.peek()
            if tok.kind == "PUNCT" and tok.text in "+-":
                self.cur.advance()
                nxt = self.term()
                result = result - nxt if tok.text == "-" else result + nxt
            else:
                return result

    def term(self):
        result = self.factor()
        while True:
            tok = self.cur.peek()
            if tok.kind == "PUNCT" and tok.text == "*":
                self.cur.advance()
                result = result * self.factor()
            elif tok.kind == "PUNCT" and tok.text == "/":
                self.cur.advance()
                result = self._divide(result, tok)
            elif tok.kind in ("INT", "IDENT") or (tok.kind == "PUNCT" and tok.text == "("):
                result = result * self.factor()
            else:
                return result

    def _divide(self, numerator, slash_tok):
        tok = self.cur.expect("INT")
        value = int(tok.text)
        if value == 0:
            raise ParseError("division by zero", tok.line, tok.column)
        if not isinstance(self.ring.domain, RationalDomain):
            raise ParseError("rational constants only make sense over QQ",
                             slash_tok.line, slash_tok.column)
        return numerator * Fraction(1, value)

    def factor(self):
        tok = self.cur.peek()
        if tok.kind == "INT":
            self.cur.advance()
            base = Polynomial.constant(self.ring, int(tok.text))
            return self._power(base)
        if tok.kind == "IDENT":
            self.cur.advance()
            factors = _split_variable_factors(tok, self.ring.variables)
            # an explicit ^ binds to the last variable of the group, so
            # that yx^2 reads as y*(x^2)
            if self.cur.match("PUNCT", "^"):
                exp_tok = self.cur.expect("INT")
                idx, exp = factors[-1]
                factors[-1] = (idx, exp * int(exp_tok.text))
            mono = [0] * self.ring.arity
            for idx, exp in factors:
                mono[idx] += exp
            return Polynomial.from_terms(self.ring, [(1, tuple(mono))])
        if tok.kind == "PUNCT" and tok.text == "(":
            self.cur.advance()
            inner = self.expression()
            self.cur.expect("PUNCT", ")")
            return self._power(inner)
        raise ParseError(f"expected a polynomial factor, found {tok.text or 'end of input'!r}",
                         tok.line, tok.column)

    def _power(self, base):
        if self.cur.match("PUNCT", "^"):
            tok = self.cur.expect("INT")
            exp = int(tok.text)
            result = Polynomial.constant(self.ring, 1)
            for _ in range(exp):
                result = result * base
            return result
        return base


def _parse_poly_list(cursor, ring):
    polys = [_PolyParser(cursor, ring).parse()]
    while cursor.match("PUNCT", ","):
        polys.append(_PolyParser(cursor, ring).parse())
    return tuple(polys)


# ---------------------------------------------------------------------------
# ring declarations

def _parse_domain(cursor):
    tok = cursor.expect("IDENT")
    if tok.text == "ZZ":
        if cursor.match("PUNCT", "/"):
            m_tok = cursor.expect("INT")
            m = int(m_tok.text)
            if m < 2:
                raise ParseError("modulus must be >= 2", m_tok.line, m_tok.column)
            return ModularDomain(m)
        return ZZ
    if tok.text == "QQ":
        return QQ
    raise ParseError(f"unknown coefficient domain {tok.text!r} (ZZ, QQ or ZZ/m)",
                     tok.line, tok.column)


def _parse_variable_group(cursor):
    cursor.expect("PUNCT", "(")
    names = [cursor.expect("IDENT").text]
    while cursor.match("PUNCT", ","):
        names.append(cursor.expect("IDENT").text)
    cursor.expect("PUNCT", ")")
    return tuple(names)


def _parse_inner_order(cursor):
    tok = cursor.expect("IDENT")
    if tok.text == "lp":
        return Lex()
    if tok.text == "dp":
        return DegRevLex()
    raise ParseError(f"unknown order {tok.text!r} inside block (lp or dp)",
                     tok.line, tok.column)


def _parse_order(cursor, variables):
    tok = cursor.expect("IDENT")
    if tok.text == "lp":
        return Lex()
    if tok.text == "dp":
        return DegRevLex()
    if tok.text == "block":
        cursor.expect("PUNCT", "(")
        front_vars = _parse_variable_group(cursor)
        cursor.expect("PUNCT", ":")
        front_order = _parse_inner_order(cursor)
        cursor.expect("PUNCT", ",")
        back_vars = _parse_variable_group(cursor)
        cursor.expect("PUNCT", ":")
        back_order = _parse_inner_order(cursor)
        cursor.expect("PUNCT", ")")
        if front_vars + back_vars != variables:
            raise ParseError(
                "block groups must concatenate to the declared variable list",
                tok.line, tok.column)
        return Block(tuple(range(len(front_vars))), front_order, back_order)
    raise ParseError(f"unknown term order {tok.text!r} (lp, dp or block(...))",
                     tok.line, tok.column)


def _parse_ring(cursor):
    cursor.expect("IDENT")  # ring name, kept only for readability
    cursor.expect("PUNCT", "=")
    domain = _parse_domain(cursor)
    cursor.expect("PUNCT", ",")
    variables = _parse_variable_group(cursor)
    cursor.expect("PUNCT", ",")
    order = _parse_order(cursor, variables)
    return RingDescriptor(variables, order, domain)


# ---------------------------------------------------------------------------
# whole files

def parse_problem(text):
    """Parse a problem file into its ring, ideal sections, stream and oracle."""
    tokens = _tokenize(text)
    cursor = _Cursor(tokens)
    if cursor.peek().kind == "END":
        raise ParseError("empty problem file", 1, 1)
    ring_ = None
    ideals = {}
    stream = None
    oracle_polys = None
    oracle_path = None
    while cursor.peek().kind != "END":
        tok = cursor.expect("IDENT")
        if tok.text == "ring":
            if ring_ is not None:
                raise ParseError("duplicate ring declaration", tok.line, tok.column)
            ring_ = _parse_ring(cursor)
        elif tok.text == "ideal":
            if ring_ is None:
                raise ParseError("ideal section before the ring declaration",
                                 tok.line, tok.column)
            name_tok = cursor.expect("IDENT")
            if name_tok.text in ideals:
                raise ParseError(f"duplicate ideal section {name_tok.text!r}",
                                 name_tok.line, name_tok.column)
            cursor.expect("PUNCT", "=")
            ideals[name_tok.text] = _parse_poly_list(cursor, ring_)
        elif tok.text == "stream":
            if ring_ is None:
                raise ParseError("stream section before the ring declaration",
                                 tok.line, tok.column)
            if stream is not None:
                raise ParseError("duplicate stream section", tok.line, tok.column)
            cursor.expect("PUNCT", "=")
            stream = _parse_poly_list(cursor, ring_)
        elif tok.text == "oracle":
            if ring_ is None:
                raise ParseError("oracle section before the ring declaration",
                                 tok.line, tok.column)
            if oracle_polys is not None or oracle_path is not None:
                raise ParseError("duplicate oracle section", tok.line, tok.column)
            cursor.expect("PUNCT", "=")
            if cursor.peek().kind == "STRING":
                oracle_path = cursor.advance().text
            else:
                oracle_polys = _parse_poly_list(cursor, ring_)
        else:
            raise ParseError(f"unknown section keyword {tok.text!r}",
                             tok.line, tok.column)
        cursor.expect("PUNCT", ";")
    if ring_ is None:
        raise ParseError("the file declares no ring", 1, 1)
    return ProblemFile(ring=ring_, ideals=ideals, stream=stream,
                       oracle_polys=oracle_polys, oracle_path=oracle_path)


def parse_polynomial(text, ring_):
    """Parse a single polynomial expression in the given ring."""
    tokens = _tokenize(text)
    cursor = _Cursor(tokens)
    if cursor.peek().kind == "END":
        raise ParseError("empty polynomial expression", 1, 1)
    poly = _PolyParser(cursor, ring_).parse()
    tail = cursor.peek()
    if tail.kind != "END":
        raise ParseError(f"unexpected trailing input {tail.text!r}", tail.line, tail.column)
    return poly
