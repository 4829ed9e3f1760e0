"""Elements of the weight lattice P = L + Q of an affine Kac-Moody algebra.

A weight is a pair of integer coordinate vectors (l, m) representing
sum_i l[i]*Lambda_i + sum_i m[i]*alpha_i.  The fundamental weights Lambda_i
and the simple roots alpha_i are jointly independent in P, so the coordinates
are unique and equality is coordinate-wise.

Text form: "2*L0 - L1 + a1 - 3*a2" (the '*' is optional on input), "0" for the
zero weight.  JSON form: {"l": [...], "m": [...]}.
"""

import re

from .errors import ParseError, UnknownNode


class Weight:
    """Immutable lattice vector; supports +, -, unary -, and integer scaling."""

    __slots__ = ("l", "m", "_hash")

    def __init__(self, l, m):
        self.l = tuple(l)
        self.m = tuple(m)
        self._hash = hash((self.l, self.m))

    def __eq__(self, other):
        return self.l == other.l and self.m == other.m

    def __hash__(self):
        return self._hash

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.l, other.l)),
                      tuple(a + b for a, b in zip(self.m, other.m)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.l, other.l)),
                      tuple(a - b for a, b in zip(self.m, other.m)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.l), tuple(-a for a in self.m))

    def __rmul__(self, k):
        return Weight(tuple(k * a for a in self.l), tuple(k * a for a in self.m))

    __mul__ = __rmul__

    def is_zero(self):
        return not any(self.l) and not any(self.m)

    def __repr__(self):
        return "Weight(%r, %r)" % (self.l, self.m)

    def __str__(self):
        return format_weight(self)

    @staticmethod
    def zero(rank):
        return Weight((0,) * rank, (0,) * rank)


def format_weight(w):
    """Canonical text form: Lambda terms first, then alpha terms, by index."""
    parts = []
    for sym, coords in (("L", w.l), ("a", w.m)):
        for i, c in enumerate(coords):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = "%s%d" % (sym, i) if mag == 1 else "%d*%s%d" % (mag, sym, i)
            parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


_WTOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<sym>[La])(?P<idx>\d+)|(?P<op>[+\-*]))")


def parse_weight(text, rank):
    """Parse the text form.  rank = number of nodes; indices must be < rank."""
    pos = 0
    tokens = []  # (kind, value, position)
    while pos < len(text):
        mo = _WTOKEN.match(text, pos)
        if mo is None:
            if text[pos:].strip() == "":
                break
            raise ParseError("bad weight token", text, pos)
        if mo.group("num") is not None:
            tokens.append(("num", int(mo.group("num")), pos))
        elif mo.group("sym") is not None:
            tokens.append(("sym", (mo.group("sym"), int(mo.group("idx"))), pos))
        else:
            tokens.append(("op", mo.group("op"), pos))
        pos = mo.end()

    def fail(msg, at):
        raise ParseError(msg, text, at)

    l = [0] * rank
    m = [0] * rank
    i = 0
    saw_term = False
    while i < len(tokens):
        kind, val, at = tokens[i]
        sign = 1
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif saw_term:
            fail("expected '+' or '-' between terms", at)
        if i >= len(tokens):
            fail("dangling sign", at)
        kind, val, at = tokens[i]
        coeff = None
        if kind == "num":
            coeff = val
            i += 1
            if i < len(tokens) and tokens[i][:2] == ("op", "*"):
                i += 1
                if i >= len(tokens) or tokens[i][0] != "sym":
                    fail("expected L<i> or a<i> after '*'", at)
        if i < len(tokens) and tokens[i][0] == "sym":
            (sym, idx), at = tokens[i][1], tokens[i][2]
            if idx >= rank:
                raise UnknownNode("node index %d out of range (rank %d)" % (idx, rank))
            (l if sym == "L" else m)[idx] += sign * (1 if coeff is None else coeff)
            i += 1
        elif coeff is not None:
            if coeff != 0:
                fail("bare integer in weight", at)
        else:
            fail("expected term", at)
        saw_term = True
    if not saw_term:
        fail("empty weight", 0)
    return Weight(l, m)


def weight_to_json(w):
    return {"l": list(w.l), "m": list(w.m)}


def weight_from_json(obj, rank=None):
    l, m = obj["l"], obj["m"]
    if len(l) != len(m) or (rank is not None and len(l) != rank):
        raise ParseError("weight JSON has wrong rank")
    return Weight(l, m)
