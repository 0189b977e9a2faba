"""Weyl group words and integer-matrix canonical forms.

Elements act on fundamental-weight coordinates, so equality in the group
is equality of integer matrices.  Canonical reduced words come from
greedy descent peeling with the smallest index first, which keeps every
serialized word deterministic.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import InvalidInput, NotFiniteType
from .linalg import identity_matrix, inverse, mat_mul, mat_vec
from .root_data import GeneralizedCartanMatrix, is_finite_type, positive_roots

Word = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def _check_letter(gcm: GeneralizedCartanMatrix, i: int) -> None:
    if not 0 <= i < gcm.n:
        raise InvalidInput(f"letter {i} out of range for rank {gcm.n}")


@lru_cache(maxsize=None)
def reflection_matrix(gcm: GeneralizedCartanMatrix, i: int) -> Matrix:
    """Matrix of s_i on weight coordinates: identity with column i replaced by e_i - alpha_i."""
    _check_letter(gcm, i)
    alpha = gcm.simple_root(i)
    n = gcm.n
    return tuple(
        tuple((1 if k == l else 0) - (alpha[k] if l == i else 0) for l in range(n))
        for k in range(n)
    )


def element_of(gcm: GeneralizedCartanMatrix, word: Word) -> Matrix:
    """Product of simple-reflection matrices; a homomorphism from words to matrices."""
    m = identity_matrix(gcm.n)
    for i in word:
        m = mat_mul(m, reflection_matrix(gcm, i))
    return m


@lru_cache(maxsize=None)
def _cartan_inverse(gcm: GeneralizedCartanMatrix):
    inv = inverse(gcm.entries)
    if inv is None:
        raise NotFiniteType("Cartan matrix is singular")
    return inv


def _sends_simple_root_negative(gcm: GeneralizedCartanMatrix, m: Matrix, i: int) -> bool:
    # root coordinates of w(alpha_i) are A^-1 (M . column_i(A)); roots have a uniform sign
    weight_coords = mat_vec(m, gcm.simple_root(i))
    coords = mat_vec(_cartan_inverse(gcm), weight_coords)
    negative = any(c < 0 for c in coords)
    assert negative != any(c > 0 for c in coords), "image of a simple root had mixed signs"
    return negative


def reduced_word(gcm: GeneralizedCartanMatrix, element: Matrix) -> Word:
    """Canonical reduced word of a Weyl element given as a matrix (finite type only).

    Peels the smallest descent: while some simple root is sent negative,
    multiply by that reflection on the right.
    """
    if not is_finite_type(gcm):
        raise NotFiniteType("reduced words need a finite-type Cartan matrix")
    bound = len(positive_roots(gcm))
    ident = identity_matrix(gcm.n)
    letters = []
    m = element
    while m != ident:
        for i in range(gcm.n):
            if _sends_simple_root_negative(gcm, m, i):
                letters.append(i)
                m = mat_mul(m, reflection_matrix(gcm, i))
                break
        else:
            raise InvalidInput("matrix is not a Weyl group element (no descent)")
        if len(letters) > bound:
            raise InvalidInput("matrix is not a Weyl group element (length bound exceeded)")
    return tuple(reversed(letters))


def length(gcm: GeneralizedCartanMatrix, word: Word) -> int:
    return len(reduced_word(gcm, element_of(gcm, word)))


def longest_element(gcm: GeneralizedCartanMatrix) -> Word:
    """Reduced word of the longest element, grown by smallest-index ascents.

    >>> from twinchar.root_data import cartan_matrix
    >>> longest_element(cartan_matrix("A2"))
    (0, 1, 0)
    """
    if not is_finite_type(gcm):
        raise NotFiniteType("longest element needs a finite-type Cartan matrix")
    m = identity_matrix(gcm.n)
    letters = []
    while True:
        for i in range(gcm.n):
            if not _sends_simple_root_negative(gcm, m, i):
                letters.append(i)
                m = mat_mul(m, reflection_matrix(gcm, i))
                break
        else:
            return tuple(letters)


def permutation_matrix(perm: tuple[int, ...]) -> Matrix:
    """Matrix of the induced weight permutation: coordinate i is read from position perm[i]."""
    n = len(perm)
    return tuple(tuple(1 if j == perm[i] else 0 for j in range(n)) for i in range(n))


def is_in_w_tilde(gcm: GeneralizedCartanMatrix, word: Word, perm: tuple[int, ...]) -> bool:
    """True iff the element commutes with the automorphism action on weights."""
    if len(perm) != gcm.n:
        raise InvalidInput(f"automorphism size {len(perm)} does not match rank {gcm.n}")
    m = element_of(gcm, word)
    p = permutation_matrix(perm)
    return mat_mul(m, p) == mat_mul(p, m)


def enumerate_weyl(gcm: GeneralizedCartanMatrix,
                   max_length: int | None = None) -> list[tuple[Word, Matrix]]:
    """All Weyl elements up to max_length with canonical shortest words, BFS order.

    With ``max_length=None`` the group must be finite; the result is sorted
    by (length, word).
    """
    if max_length is None and not is_finite_type(gcm):
        raise NotFiniteType("cannot enumerate an infinite Weyl group without a length cap")
    ident = identity_matrix(gcm.n)
    found: dict[Matrix, Word] = {ident: ()}
    frontier: list[tuple[Word, Matrix]] = [((), ident)]
    depth = 0
    while frontier and (max_length is None or depth < max_length):
        depth += 1
        fresh = []
        for word, m in frontier:
            for i in range(gcm.n):
                m2 = mat_mul(m, reflection_matrix(gcm, i))
                if m2 not in found:
                    found[m2] = word + (i,)
                    fresh.append((word + (i,), m2))
        frontier = fresh
    return sorted(((w, m) for m, w in found.items()), key=lambda t: (len(t[0]), t[0]))


def parse_word(text: str) -> Word:
    """Parse the serialized comma-separated form, e.g. "1,2,1"; "" is the identity."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InvalidInput(f"cannot parse word {text!r}") from exc


def format_word(word: Word) -> str:
    return ",".join(str(i) for i in word)
