"""Cyclic words over small alphabets and the exact parity expectation.

A necklace is an oriented cyclic word; equality and hashing identify
rotations (the canonical form is the lexicographically least rotation)
but not reflections, since reversal flips the parity sign.

All parity values are exact: `fractions.Fraction` throughout, no floats.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import EmptyWord, NotSurjective

Letters = Iterable[int] | str


class Necklace:
    """Cyclic word over the alphabet {0, ..., alphabet_size - 1}.

    The stored rotation is kept as given (index arithmetic is mod n);
    `canonical()` returns the lexicographically least rotation, which is
    what `__eq__` and `__hash__` compare.
    """

    __slots__ = ("letters", "alphabet_size")

    def __init__(self, letters: Letters, alphabet_size: int | None = None):
        if isinstance(letters, str):
            word = tuple(int(ch) for ch in letters)
        else:
            word = tuple(int(x) for x in letters)
        if not word:
            raise EmptyWord("a necklace needs at least one letter")
        if min(word) < 0:
            raise ValueError(f"letters must be non-negative, got {word}")
        if alphabet_size is None:
            alphabet_size = max(word) + 1
        if alphabet_size < max(word) + 1:
            raise ValueError(f"letter {max(word)} outside alphabet of size {alphabet_size}")
        if not 1 <= alphabet_size <= 3:
            raise ValueError(f"alphabet size {alphabet_size} unsupported (use 1-3)")
        self.letters: tuple[int, ...] = word
        self.alphabet_size: int = alphabet_size

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def counts(self) -> tuple[int, ...]:
        """Multiplicity of each alphabet letter, in letter order."""
        out = [0] * self.alphabet_size
        for a in self.letters:
            out[a] += 1
        return tuple(out)

    def is_surjective(self) -> bool:
        return all(c > 0 for c in self.counts)

    def rotate(self, j: int) -> "Necklace":
        j %= self.n
        return Necklace(self.letters[j:] + self.letters[:j], self.alphabet_size)

    def reverse(self) -> "Necklace":
        return Necklace(self.letters[::-1], self.alphabet_size)

    def rotations(self) -> Iterator[tuple[int, ...]]:
        w = self.letters
        for j in range(len(w)):
            yield w[j:] + w[:j]

    def canonical(self) -> "Necklace":
        return Necklace(min(self.rotations()), self.alphabet_size)

    def word(self) -> str:
        return "".join(str(a) for a in self.letters)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Necklace):
            return NotImplemented
        return (
            self.alphabet_size == other.alphabet_size
            and min(self.rotations()) == min(other.rotations())
        )

    def __hash__(self) -> int:
        return hash((self.alphabet_size, min(self.rotations())))

    def __repr__(self) -> str:
        return f"Necklace({self.word()!r})"


def _require_surjective_ternary(w: Necklace) -> tuple[int, int, int]:
    if w.alphabet_size != 3:
        raise NotSurjective(f"parity needs the 3-letter alphabet, got size {w.alphabet_size}")
    n0, n1, n2 = w.counts
    if not (n0 and n1 and n2):
        raise NotSurjective(f"word {w.word()!r} does not use all of 0, 1, 2")
    return n0, n1, n2


def parity_bruteforce(w: Necklace) -> Fraction:
    """Parity expectation by direct enumeration of all position triples.

    This is the independent oracle for :func:`parity`: it walks every
    triple of positions carrying three distinct letters, reads the triple
    in position order and scores its permutation parity by inversion
    count.  Cubic, but trusted.
    """
    n0, n1, n2 = _require_surjective_ternary(w)
    word = w.letters
    even = odd = 0
    for i, j, k in combinations(range(len(word)), 3):
        a, b, c = word[i], word[j], word[k]
        if a == b or b == c or a == c:
            continue
        inversions = (a > b) + (a > c) + (b > c)
        if inversions % 2 == 0:
            even += 1
        else:
            odd += 1
    return Fraction(even - odd, n0 * n1 * n2)


def parity(w: Necklace) -> Fraction:
    """Exact parity expectation of a surjective 3-letter cyclic word.

    Of the six letter orderings of a proper subword, the even ones are
    exactly the cyclic shifts of (0, 1, 2); so a subword with middle
    letter b is even iff its first letter is b - 1 and its last is b + 1
    (mod 3).  Scanning the middle position with prefix counts makes the
    count linear.  Rotation invariance of the result is a theorem, so the
    stored rotation may be read linearly.
    """
    n0, n1, n2 = _require_surjective_ternary(w)
    left = [0, 0, 0]
    right = list(w.counts)
    total = 0
    for b in w.letters:
        right[b] -= 1
        prv = (b - 1) % 3
        nxt = (b + 1) % 3
        total += left[prv] * right[nxt] - left[nxt] * right[prv]
        left[b] += 1
    return Fraction(total, n0 * n1 * n2)


def chern_local(w: Necklace) -> Fraction:
    """Local curvature value of a stalk necklace: minus half its parity."""
    return -parity(w) / 2


def delete_letter(w: Necklace, letter: int) -> Necklace:
    """Drop all occurrences of one letter and renumber the remaining
    alphabet order-preservingly; models restriction to a base face."""
    if not 0 <= letter < w.alphabet_size:
        raise ValueError(f"letter {letter} outside alphabet of size {w.alphabet_size}")
    remaining = tuple(a for a in w.letters if a != letter)
    if not remaining:
        raise EmptyWord(f"deleting {letter} from {w.word()!r} empties the word")
    renumbered = tuple(a - 1 if a > letter else a for a in remaining)
    return Necklace(renumbered, w.alphabet_size - 1)


def is_block_word(w: Necklace) -> bool:
    """True iff some rotation concatenates one solid run per letter."""
    word = w.letters
    n = len(word)
    boundaries = sum(1 for i in range(n) if word[i] != word[(i + 1) % n])
    runs = boundaries if boundaries else 1
    return runs == len(set(word))


def relabel(w: Necklace, rho: Sequence[int]) -> Necklace:
    """Apply a permutation of the alphabet letterwise."""
    if sorted(rho) != list(range(w.alphabet_size)):
        raise ValueError(f"{rho!r} is not a permutation of the alphabet")
    return Necklace(tuple(rho[a] for a in w.letters), w.alphabet_size)


def permutation_sign(rho: Sequence[int]) -> int:
    """Sign of a permutation given in one-line notation."""
    sign = 1
    for i, j in combinations(range(len(rho)), 2):
        if rho[i] > rho[j]:
            sign = -sign
    return sign


def enumerate_necklaces(
    n: int, alphabet_size: int, surjective_only: bool = False
) -> Iterator[Necklace]:
    """One canonical representative per rotation class, in lex order.

    Fredricksen-Kessler-Maiorana generation: yields exactly the words that
    are lexicographically least among their rotations.
    """
    if n < 1:
        raise ValueError("necklace length must be positive")
    if not 1 <= alphabet_size <= 3:
        raise ValueError(f"alphabet size {alphabet_size} unsupported (use 1-3)")
    a = [0] * (n + 1)

    def gen(t: int, p: int) -> Iterator[tuple[int, ...]]:
        if t > n:
            if n % p == 0:
                yield tuple(a[1 : n + 1])
            return
        a[t] = a[t - p]
        yield from gen(t + 1, p)
        for j in range(a[t - p] + 1, alphabet_size):
            a[t] = j
            yield from gen(t + 1, t)

    for word in gen(1, 1):
        if surjective_only and len(set(word)) != alphabet_size:
            continue
        yield Necklace(word, alphabet_size)
