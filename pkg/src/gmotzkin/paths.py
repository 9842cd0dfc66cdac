"""G-Motzkin path words: parsing, weights, patterns and decompositions.

A G-Motzkin path runs from (0, 0) to (n, 0) without dipping below the
x-axis, using four step kinds:

    u = (1, 1)    up
    d = (1, -1)   down
    h = (1, 0)    horizontal
    v = (0, -1)   vertical drop

Paths are handled as their canonical step words: plain strings over
"udhv" with no separators.  The length of a path is its x-extent, so v
steps do not count toward length.  ``parse_word`` validates and
canonicalizes arbitrary input text; every other function in this module
assumes its argument is already a valid word.

Weights: an (a, b, c)-weighting assigns u -> 1, h -> a, v -> b, d -> c,
and the weight of a path is the product over its steps, i.e. the monomial
a^#h b^#v c^#d.

A nonempty path is *primitive* if it starts with u and returns to height
zero only at its very end.  The single step "h" is not primitive.  The
decompositions below factor a path at its first return to the axis and
then peel maximal layers of matching u...v (or u...d) pairs; they drive
the pattern-swapping bijection in ``gmotzkin.bijection``.
"""

from __future__ import annotations

from dataclasses import dataclass

# Vertical displacement of each step kind.
RISE = {"u": 1, "d": -1, "h": 0, "v": -1}

# Horizontal displacement; only v stands still.
RUN = {"u": 1, "d": 1, "h": 1, "v": 0}

# Canonical step order used for generation and sorted listings: u < d < h < v.
STEP_ORDER = {"u": 0, "d": 1, "h": 2, "v": 3}


class PathError(ValueError):
    """Input text is not a valid G-Motzkin path or pattern word."""


def parse_word(text: str) -> str:
    """Validate ``text`` as a path and return its canonical word.

    Whitespace is ignored.  Raises PathError naming the offending position
    for an illegal character, a negative height, or a nonzero final height.
    """
    word = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        if ch not in RISE:
            raise PathError(f"illegal character {ch!r} at position {pos}")
        word.append(ch)
    height = 0
    for i, ch in enumerate(word):
        height += RISE[ch]
        if height < 0:
            raise PathError(f"height -1 after step {i + 1}")
    if height != 0:
        raise PathError(f"final height {height} is not 0 after step {len(word)}")
    return "".join(word)


def parse_pattern(text: str) -> str:
    """Validate a nonempty pattern word over the step alphabet."""
    word = "".join(ch for ch in text if not ch.isspace())
    for pos, ch in enumerate(word):
        if ch not in RISE:
            raise PathError(f"illegal character {ch!r} at position {pos}")
    if not word:
        raise PathError("empty pattern")
    return word


def x_length(word: str) -> int:
    """The x-extent: number of u, d and h steps."""
    return len(word) - word.count("v")


def heights(word: str) -> list[int]:
    """Running heights, one entry per prefix (len(word) + 1 values)."""
    out = [0]
    h = 0
    for ch in word:
        h += RISE[ch]
        out.append(h)
    return out


def weight_exponents(word: str) -> tuple[int, int, int]:
    """Exponent triple (#h, #v, #d) of the path's weight monomial."""
    return word.count("h"), word.count("v"), word.count("d")


def contains_pattern(word: str, pattern: str) -> bool:
    """True iff ``pattern`` occurs as a contiguous block of steps."""
    return pattern in word


def has_h_on_axis(word: str) -> bool:
    """True iff some h step starts at height 0."""
    h = 0
    for ch in word:
        if ch == "h" and h == 0:
            return True
        h += RISE[ch]
    return False


def is_primitive(word: str) -> bool:
    """Nonempty, starts with u, and touches height 0 only at the end."""
    if not word or word[0] != "u":
        return False
    h = 0
    last = len(word) - 1
    for i, ch in enumerate(word):
        h += RISE[ch]
        if h == 0:
            return i == last
    return False  # unreachable for valid words


def first_return_split(word: str) -> tuple[str, str]:
    """Split off the shortest nonempty leading block that ends at height 0.

    The prefix is a single "h", or a block starting with u that ends at its
    first return to the axis (any v run finishing the descent included).
    """
    if not word:
        raise PathError("cannot split an empty path")
    if word[0] == "h":
        return "h", word[1:]
    h = 0
    for i, ch in enumerate(word):
        h += RISE[ch]
        if h == 0:
            return word[: i + 1], word[i + 1 :]
    raise PathError("path never returns to height 0")  # unreachable for valid words


def _run_length(word: str, ch: str, from_end: bool) -> int:
    n = 0
    it = reversed(word) if from_end else word
    for c in it:
        if c != ch:
            break
        n += 1
    return n


def _max_strip(word: str, close: str, allow_empty_core: bool) -> tuple[int, str]:
    """Largest i with word == "u"*i + core + close*i, core valid at elevation i.

    The core must start and end at elevation i and never dip below it.
    Validity is downward-closed in i, so the scan from the run-length bound
    downward stops at the true maximum.
    """
    hs = heights(word)
    bound = min(_run_length(word, "u", False), _run_length(word, close, True))
    if not allow_empty_core:
        bound = min(bound, (len(word) - 1) // 2)
    for i in range(bound, -1, -1):
        lo, hi = i, len(word) - i
        if hs[lo] != i or hs[hi] != i:
            continue
        if all(hs[p] >= i for p in range(lo, hi + 1)):
            return i, word[lo:hi]
    raise PathError("no valid strip; path is malformed")  # unreachable for primitive input


def max_elevation_strip(word: str) -> tuple[int, str]:
    """Peel the maximal matching u...v layers off a primitive path.

    Returns (i, core) with word == "u"*i + core + "v"*i, where core is a
    nonempty valid path at elevation i.
    """
    if not is_primitive(word):
        raise PathError("elevation strip requires a primitive path")
    return _max_strip(word, "v", allow_empty_core=False)


def max_ud_strip(word: str) -> tuple[int, str]:
    """Peel the maximal matching u...d layers off a primitive path.

    Returns (j, core) with word == "u"*j + core + "d"*j, where core is a
    possibly empty valid path at elevation j.
    """
    if not is_primitive(word):
        raise PathError("u/d strip requires a primitive path")
    return _max_strip(word, "d", allow_empty_core=True)


# Case tags for the forward decomposition of uvv-avoiding paths.
BASE = "Base"
CASE1 = "Case1"
CASE2 = "Case2"
CASE3 = "Case3"
CASE4 = "Case4"
CASE5 = "Case5"
CASE6 = "Case6"

# Case tags for the inverse decomposition of uvu-avoiding paths.
BASE_INV = "BaseInv"
CASE_I = "CaseI"
CASE_II = "CaseII"
CASE_III = "CaseIII"
CASE_IV = "CaseIV"
CASE_V = "CaseV"

_BASE_WORDS = ("", "h", "uv")


@dataclass(frozen=True)
class Decomposition:
    """One canonical case record; ``reassemble`` restores the original word.

    ``elevation`` is the number of peeled u...v layers (Case4-Case6) or
    u...d layers (CaseIV, CaseV); it is 0 for the other cases.  ``parts``
    holds the constituent subwords in template order.
    """

    case: str
    elevation: int
    parts: tuple[str, ...]

    def reassemble(self) -> str:
        c, i, p = self.case, self.elevation, self.parts
        if c in (BASE, BASE_INV):
            return p[0]
        if c in (CASE1, CASE_I):
            return "h" + p[0]
        if c in (CASE2, CASE_II):
            return "uvh" + p[0]
        if c == CASE3:
            return "uv" + p[0] + p[1]
        if c == CASE4:
            return "u" * i + "ud" + "v" * i + p[0]
        if c == CASE5:
            return "u" * i + "u" + p[0] + "d" + "v" * i + p[1]
        if c == CASE6:
            return "u" * i + p[0] + "v" * i + p[1]
        if c == CASE_III:
            return "u" + p[0] + "v" + p[1]
        if c == CASE_IV:
            return "u" * i + p[0] + "d" * i + p[1]
        if c == CASE_V:
            return "u" * i + "u" + p[0] + "v" + "d" * i + p[1]
        raise ValueError(f"unknown case {c!r}")


def decompose_forward(word: str) -> Decomposition:
    """The unique case record of a uvv-avoiding path.

    Dispatch: the empty path, "h" and "uv" are Base.  A path starting with
    h is Case1.  After a leading uv the rest starts with h (Case2) or with
    u (Case3, whose first part is the first primitive component of the
    rest).  Otherwise the first-return prefix is peeled by the maximal
    elevation strip; its core is "ud" (Case4), a primitive u...d block with
    nonempty interior (Case5), or a non-primitive path (Case6).  A
    primitive core ending in v cannot survive a maximal strip of a
    uvv-avoiding path, so the three shapes are exhaustive and disjoint.
    """
    if "uvv" in word:
        raise PathError("path contains the pattern uvv")
    if word in _BASE_WORDS:
        return Decomposition(BASE, 0, (word,))
    if word[0] == "h":
        return Decomposition(CASE1, 0, (word[1:],))
    if word.startswith("uv"):
        rest = word[2:]
        if rest[0] == "h":
            return Decomposition(CASE2, 0, (rest[1:],))
        if rest[0] == "u":
            mid, after = first_return_split(rest)
            return Decomposition(CASE3, 0, (mid, after))
        raise PathError("invalid path: descent below the axis after uv")
    prefix, rest = first_return_split(word)
    i, core = max_elevation_strip(prefix)
    if core == "ud":
        return Decomposition(CASE4, i, (rest,))
    if is_primitive(core):
        if not core.endswith("d"):
            raise PathError("maximal strip left a primitive core ending in v")
        return Decomposition(CASE5, i, (core[1:-1], rest))
    return Decomposition(CASE6, i, (core, rest))


def decompose_inverse(word: str) -> Decomposition:
    """The unique case record of a uvu-avoiding path.

    Dispatch: Base words as in the forward direction; a leading h is CaseI;
    a leading uv must be followed by h (CaseII), because a following u
    would form the pattern uvu.  Otherwise the first-return prefix either
    ends in v (CaseIII, parts are its interior and the remainder) or ends
    in d, in which case the maximal u...d strip is peeled.  A stripped core
    that is primitive and ends in v without carrying a uuvv or uv suffix is
    CaseV (stored by its interior); every other core, including the empty
    one and those ending in uuvv or uv, is CaseIV.
    """
    if "uvu" in word:
        raise PathError("path contains the pattern uvu")
    if word in _BASE_WORDS:
        return Decomposition(BASE_INV, 0, (word,))
    if word[0] == "h":
        return Decomposition(CASE_I, 0, (word[1:],))
    if word.startswith("uv"):
        rest = word[2:]
        if rest[0] == "h":
            return Decomposition(CASE_II, 0, (rest[1:],))
        raise PathError("invalid path after uv prefix")
    prefix, rest = first_return_split(word)
    if prefix.endswith("v"):
        return Decomposition(CASE_III, 0, (prefix[1:-1], rest))
    j, core = max_ud_strip(prefix)
    if j < 1:
        raise PathError("u/d strip of a d-ending primitive prefix must peel a layer")
    if (
        core
        and not core.endswith("uuvv")
        and not core.endswith("uv")
        and is_primitive(core)
    ):
        return Decomposition(CASE_V, j, (core[1:-1], rest))
    return Decomposition(CASE_IV, j, (core, rest))
