"""Sign-sequence alignment under the adjacency rule.

A big-group sequence uses plain signs + and -, a subgroup sequence uses
circled signs (written P for circled plus, M for circled minus).  An
alignment is an order-preserving interleaving of the two in which every
adjacent pair of symbols belongs to the allowed set; enumeration is
depth-first with the big sequence's symbol tried first at each step, so the
output order is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

PLUS = "+"
MINUS = "-"
CIRCLED_PLUS = "P"
CIRCLED_MINUS = "M"

PLAIN = frozenset({PLUS, MINUS})
CIRCLED = frozenset({CIRCLED_PLUS, CIRCLED_MINUS})
ALPHABET = PLAIN | CIRCLED

ALLOWED_PAIRS = frozenset(
    {
        (CIRCLED_PLUS, PLUS),
        (PLUS, CIRCLED_PLUS),
        (MINUS, CIRCLED_MINUS),
        (CIRCLED_MINUS, MINUS),
        (PLUS, MINUS),
        (MINUS, PLUS),
        (CIRCLED_PLUS, CIRCLED_MINUS),
        (CIRCLED_MINUS, CIRCLED_PLUS),
    }
)


def allowed_adjacent(s1: str, s2: str) -> bool:
    """Membership in the eight-pair allowed-adjacency set."""
    return (s1, s2) in ALLOWED_PAIRS


@dataclass(frozen=True)
class SignSeq:
    """An ordered sequence over the four-symbol alphabet."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        bad = [s for s in self.symbols if s not in ALPHABET]
        if bad:
            raise ValueError(f"unknown symbols {bad}; alphabet is +, -, P, M")

    @classmethod
    def from_string(cls, text: str) -> "SignSeq":
        return cls(tuple(text.strip()))

    def to_string(self) -> str:
        return "".join(self.symbols)

    @property
    def is_plain(self) -> bool:
        return all(s in PLAIN for s in self.symbols)

    @property
    def is_circled(self) -> bool:
        return all(s in CIRCLED for s in self.symbols)

    def erase(self, keep: frozenset[str]) -> "SignSeq":
        return SignSeq(tuple(s for s in self.symbols if s in keep))

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.to_string()


def enumerate_alignments(big: SignSeq, small: SignSeq) -> list[SignSeq]:
    """All order-preserving interleavings of big and small in which every
    adjacent pair is allowed."""
    if not big.is_plain:
        raise ValueError("big sequence must use plain signs + and - only")
    if not small.is_circled:
        raise ValueError("small sequence must use circled signs P and M only")
    b, s = big.symbols, small.symbols
    out: list[SignSeq] = []
    acc: list[str] = []

    def fits(sym: str) -> bool:
        return not acc or allowed_adjacent(acc[-1], sym)

    def rec(i: int, j: int) -> None:
        if i == len(b) and j == len(s):
            out.append(SignSeq(tuple(acc)))
            return
        if i < len(b) and fits(b[i]):
            acc.append(b[i])
            rec(i + 1, j)
            acc.pop()
        if j < len(s) and fits(s[j]):
            acc.append(s[j])
            rec(i, j + 1)
            acc.pop()

    rec(0, 0)
    return out


# ---------------------------------------------------------------------------
# The U(2,n) configuration
# ---------------------------------------------------------------------------


def u2n_plus_sequence(n: int) -> SignSeq:
    """The big sequence (+, -, ..., -, +) of 2+n signs."""
    return SignSeq((PLUS,) + (MINUS,) * n + (PLUS,))


def u1n_end_candidates(n: int) -> tuple[SignSeq, SignSeq]:
    """The two subgroup candidates with the circled plus at an end: one
    circled plus followed by n circled minuses, and the reverse order.
    Candidates with an interior circled plus are excluded a priori (they
    correspond to neither the holomorphic nor the antiholomorphic family)."""
    first = SignSeq((CIRCLED_PLUS,) + (CIRCLED_MINUS,) * n)
    second = SignSeq((CIRCLED_MINUS,) * n + (CIRCLED_PLUS,))
    return first, second


@dataclass(frozen=True)
class U2nReport:
    n: int
    big: SignSeq
    candidates: tuple[SignSeq, SignSeq]
    alignments: tuple[tuple[SignSeq, ...], tuple[SignSeq, ...]]
    character_screen_applied: bool
    note: str

    @property
    def total_alignments(self) -> int:
        return sum(len(group) for group in self.alignments)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "big": self.big.to_string(),
            "candidates": [c.to_string() for c in self.candidates],
            "alignments": [[a.to_string() for a in group] for group in self.alignments],
            "total_alignments": self.total_alignments,
            "character_screen_applied": self.character_screen_applied,
            "note": self.note,
        }


def u2n_case_report(n: int) -> U2nReport:
    """Enumerate alignments of the U(2,n) big sequence against the two
    end-circled-plus subgroup candidates.

    The report is alignment-level only: the subsequent screen on the
    infinitesimal-character interlacing (which rejects both candidates) has
    no precise stated criterion and is left as a documented manual step.
    """
    if n < 4:
        raise ValueError("the configuration is set up for n >= 4")
    big = u2n_plus_sequence(n)
    candidates = u1n_end_candidates(n)
    alignments = tuple(tuple(enumerate_alignments(big, c)) for c in candidates)
    return U2nReport(
        n=n,
        big=big,
        candidates=candidates,
        alignments=alignments,
        character_screen_applied=False,
        note=(
            "alignment-level result only; the infinitesimal-character "
            "interlacing screen is a separate manual step and is not applied"
        ),
    )
