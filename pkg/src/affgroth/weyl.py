"""The affine Weyl group: canonical reduced words, actions, inversion sets,
Bruhat order and length-bounded enumeration.

Elements are identified by their image of rho (regular dominant), which is a
faithful encoding; the stored word is the canonical reduced word obtained by
repeatedly extracting the smallest-label left descent.
"""

from .errors import BadWord
from .weights import Weight


class WeylElement:
    __slots__ = ("cd", "word", "rho_image", "_hash")

    def __init__(self, cd, word, rho_image):
        self.cd = cd
        self.word = word
        self.rho_image = rho_image
        self._hash = hash(rho_image)

    @property
    def length(self):
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        return self.rho_image == other.rho_image

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "W[%s]" % ("e" if not self.word else "".join(map(str, self.word)))

    def __mul__(self, other):
        return canonicalize(self.cd, self.word + other.word)


def identity(cd):
    return WeylElement(cd, (), cd.rho())


def canonicalize(cd, word):
    """Build the element of an arbitrary word; stores the canonical reduced word."""
    v = cd.rho()
    for i in reversed(word):
        cd.check_node(i)
        v = cd.reflect(i, v)
    return _from_rho_image(cd, v)


def _from_rho_image(cd, v):
    out = []
    u = v
    while True:
        i = next((i for i in cd.labels if cd.pairing(i, u) < 0), None)
        if i is None:
            break
        out.append(i)
        u = cd.reflect(i, u)
        if len(out) > 10 ** 6:
            raise BadWord("word does not reduce (non-dominant rho image?)")
    if u != cd.rho():
        raise BadWord("invalid rho image")
    return WeylElement(cd, tuple(out), v)


def act(w, x):
    """w(x) for a Weight x; the rightmost letter acts first."""
    cd = w.cd
    for i in reversed(w.word):
        x = cd.reflect(i, x)
    return x


def mul_gen(w, i):
    """w * s_i."""
    return canonicalize(w.cd, w.word + (i,))


def inverse(w):
    return canonicalize(w.cd, tuple(reversed(w.word)))


def right_descents(w):
    """{i : length(w s_i) < length(w)}, i.e. w(alpha_i) is a negative root."""
    cd = w.cd
    out = []
    for i in cd.labels:
        img = act(w, cd.alpha(i))
        if all(c <= 0 for c in img.m):
            out.append(i)
    return out


def left_descents(w):
    cd = w.cd
    return [i for i in cd.labels if cd.pairing(i, w.rho_image) < 0]


def inversion_set(w):
    """[beta_1..beta_k] with beta_t = s_{i_1}...s_{i_{t-1}}(alpha_{i_t}) for the
    canonical word; these are the positive roots sent negative by w^{-1}."""
    cd = w.cd
    out = []
    for t, i in enumerate(w.word):
        beta = cd.alpha(i)
        for j in reversed(w.word[:t]):
            beta = cd.reflect(j, beta)
        out.append(beta)
    return out


def bruhat_leq(x, w):
    """x <= w in Bruhat order (descent recursion)."""
    if len(w.word) == 0:
        return len(x.word) == 0
    if len(x.word) > len(w.word):
        return False
    i = w.word[-1]  # a right descent of w
    wsi = mul_gen(w, i)
    xsi = mul_gen(x, i)
    if len(xsi.word) < len(x.word):
        return bruhat_leq(xsi, wsi)
    return bruhat_leq(x, wsi)


def enumerate_up_to(cd, max_length):
    """Layers [L_0, L_1, ..] of all elements with length <= max_length, each
    layer sorted by canonical word."""
    layers = [[identity(cd)]]
    for _ in range(max_length):
        seen = set()
        new = []
        for w in layers[-1]:
            for i in cd.labels:
                if i in right_descents(w):
                    continue
                x = mul_gen(w, i)
                if x.rho_image not in seen:
                    seen.add(x.rho_image)
                    new.append(x)
        new.sort(key=lambda w: w.word)
        layers.append(new)
    return layers


def reduced_words(w):
    """All reduced words of w (recursion over right descents)."""
    if len(w.word) == 0:
        return [()]
    out = []
    for i in right_descents(w):
        for prefix in reduced_words(mul_gen(w, i)):
            out.append(prefix + (i,))
    return out
