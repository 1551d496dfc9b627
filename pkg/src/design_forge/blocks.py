"""Block-family enumeration over GF(2^m), and the maps between families.

A block is a strictly increasing tuple of field elements (ints). Families
are enumerated exhaustively by depth-first search over ascending bitmasks,
carrying the running XOR of the chosen prefix; the final slot is filled by
direct lookup, since the last element is forced by the target sum. Every
enumerator charges search nodes against an explicit budget and raises
BudgetExceededError rather than truncating silently.

The search space splits cleanly by first element, so shards could run
concurrently and be sort-merged; everything here is pure and immutable.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .errors import (
    ArgumentError,
    BudgetExceededError,
    FamilyError,
    MapViolationError,
    NoRepresentativeError,
    RangeError,
)
from .field import (
    MAX_AMBIENT_EXPONENT,
    MIN_EXPONENT,
    CosetOrdering,
    check_exponent,
    check_shift,
    cosets_of,
    nonzero_elements,
)

Block = tuple[int, ...]

DEFAULT_NODE_BUDGET = 100_000_000

FAMILY_KINDS = ("W", "Wpair", "I", "J", "L", "U")


def _xor(items) -> int:
    acc = 0
    for x in items:
        acc ^= x
    return acc


def as_block(elements) -> Block:
    """Canonical block form: strictly increasing tuple. Rejects duplicates."""
    b = tuple(sorted(elements))
    for a, c in zip(b, b[1:]):
        if a == c:
            raise FamilyError(f"duplicate element {a} in block")
    return b


def family_predicate(
    kind: str,
    m: int,
    k: int,
    alpha: int | None = None,
    pair: tuple[int, int] | None = None,
) -> Callable[[Block], bool]:
    """The defining membership test of a family, as a standalone callable.

    Kinds (m is the exponent of the field the blocks live in):
      W      k-subsets of the nonzero elements with XOR-sum 0
      Wpair  members of W that contain both elements of `pair`
      I      k-subsets avoiding {0, alpha} with XOR-sum alpha
      J      k-subsets avoiding {0, alpha} with XOR-sum 0
      L      k-subsets of the nonzero elements fixed setwise by XOR alpha
      U      k = 2: pairs {i, j} avoiding {0, alpha} with i ^ j = alpha;
             k >= 3: k-subsets avoiding {0, alpha} with XOR-sum alpha that
             meet each coset {x, x + alpha} at most once
    """
    size = 1 << m
    if kind in ("I", "J", "L", "U"):
        if alpha is None:
            raise ArgumentError(f"family {kind!r} needs a shift alpha")
        check_shift(alpha, m)
    if kind == "Wpair":
        if pair is None:
            raise ArgumentError("family 'Wpair' needs its required pair")

    if kind == "W":

        def pred(b: Block) -> bool:
            return (
                len(b) == k
                and all(0 < x < size for x in b)
                and _xor(b) == 0
            )

    elif kind == "Wpair":
        i, j = pair

        def pred(b: Block) -> bool:
            return (
                len(b) == k
                and i in b
                and j in b
                and all(0 < x < size for x in b)
                and _xor(b) == 0
            )

    elif kind in ("I", "J"):
        target = alpha if kind == "I" else 0

        def pred(b: Block) -> bool:
            return (
                len(b) == k
                and all(0 < x < size and x != alpha for x in b)
                and _xor(b) == target
            )

    elif kind == "L":

        def pred(b: Block) -> bool:
            bs = set(b)
            return (
                len(b) == k
                and all(0 < x < size for x in b)
                and bs == {x ^ alpha for x in bs}
            )

    elif kind == "U":
        if k == 2:

            def pred(b: Block) -> bool:
                return (
                    len(b) == 2
                    and all(0 < x < size and x != alpha for x in b)
                    and b[0] ^ b[1] == alpha
                )

        else:

            def pred(b: Block) -> bool:
                if len(b) != k or _xor(b) != alpha:
                    return False
                if any(not 0 < x < size or x == alpha for x in b):
                    return False
                bs = set(b)
                return not any((x ^ alpha) in bs for x in b)

    else:
        raise ArgumentError(f"unknown family kind {kind!r}")

    return pred


@dataclass(frozen=True)
class BlockFamily:
    """An enumerated family together with its defining parameters.

    Construction re-checks every member against the family predicate, so a
    BlockFamily in hand is always internally consistent. Blocks are kept
    sorted lexicographically; membership tests are binary searches.
    """

    kind: str
    m: int
    k: int
    blocks: tuple[Block, ...]
    alpha: int | None = None
    pair: tuple[int, int] | None = None

    def __post_init__(self):
        pred = family_predicate(self.kind, self.m, self.k, self.alpha, self.pair)
        for b in self.blocks:
            if any(x >= y for x, y in zip(b, b[1:])):
                raise FamilyError(f"block {b} is not strictly increasing")
            if not pred(b):
                raise FamilyError(f"block {b} violates the {self.kind} predicate")

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[Block]:
        return iter(self.blocks)

    def __contains__(self, block) -> bool:
        b = tuple(block)
        pos = bisect_left(self.blocks, b)
        return pos < len(self.blocks) and self.blocks[pos] == b


class _Budget:
    """Node counter shared across the enumerations of one call."""

    __slots__ = ("remaining", "limit", "what")

    def __init__(self, limit: int, what: str):
        if not isinstance(limit, int) or limit <= 0:
            raise ArgumentError(f"budget must be a positive int, got {limit!r}")
        self.remaining = limit
        self.limit = limit
        self.what = what

    def spend(self, n: int = 1) -> None:
        self.remaining -= n
        if self.remaining < 0:
            raise BudgetExceededError(self.what, self.limit)


def _xor_subsets(
    ground: tuple[int, ...],
    k: int,
    target: int,
    budget: _Budget,
    coset_shift: int | None = None,
) -> list[Block]:
    """All strictly increasing k-tuples over `ground` whose XOR equals `target`.

    `ground` must be sorted ascending with no duplicates. When `coset_shift`
    is set, at most one element may be taken from each pair
    {x, x ^ coset_shift}. Output is in lexicographic order.

    Depth-first search with the prefix XOR as state; a prefix dies when too
    few candidates remain. The final slot is a lookup, not a scan: the
    missing element is forced to be target ^ prefix-XOR. One budget node is
    charged per placed element, the forced slot included.
    """
    if k <= 0:
        raise ArgumentError(f"subset size must be positive, got {k}")
    gset = set(ground)
    n = len(ground)
    out: list[Block] = []
    chosen: list[int] = []
    chosen_set: set[int] = set()
    spend = budget.spend

    def walk(lo: int, acc: int) -> None:
        slots = k - len(chosen)
        if slots == 1:
            spend()
            need = acc ^ target
            if (
                need in gset
                and (not chosen or need > chosen[-1])
                and (coset_shift is None or (need ^ coset_shift) not in chosen_set)
            ):
                out.append((*chosen, need))
            return
        for idx in range(lo, n - slots + 1):
            x = ground[idx]
            if coset_shift is not None and (x ^ coset_shift) in chosen_set:
                continue
            spend()
            chosen.append(x)
            chosen_set.add(x)
            walk(idx + 1, acc ^ x)
            chosen.pop()
            chosen_set.remove(x)

    walk(0, 0)
    return out


def _check_k(k: int, lo: int, hi: int, what: str) -> None:
    if not isinstance(k, int) or not lo <= k <= hi:
        raise RangeError(f"{what}: block size must be in {lo}..{hi}, got {k!r}")


def zero_sum_blocks(m: int, k: int, budget: int = DEFAULT_NODE_BUDGET) -> BlockFamily:
    """Every k-subset of the nonzero elements of GF(2^m) with XOR-sum zero."""
    check_exponent(m)
    _check_k(k, 3, (1 << m) - 4, f"zero-sum family in GF(2^{m})")
    bud = _Budget(budget, f"zero-sum blocks (m={m}, k={k})")
    blocks = _xor_subsets(tuple(nonzero_elements(m)), k, 0, bud)
    return BlockFamily("W", m, k, tuple(blocks))


def zero_sum_blocks_containing(
    m: int, k: int, i: int, j: int, budget: int = DEFAULT_NODE_BUDGET
) -> BlockFamily:
    """The zero-sum k-subsets that contain both i and j.

    Enumerated directly: (k-2)-subsets of the remaining nonzero elements
    with XOR-sum i ^ j, spliced back together with {i, j}.
    """
    check_exponent(m)
    _check_k(k, 3, (1 << m) - 4, f"zero-sum family in GF(2^{m})")
    size = 1 << m
    if not (0 < i < size and 0 < j < size) or i == j:
        raise ArgumentError(f"need two distinct nonzero elements, got {i} and {j}")
    bud = _Budget(budget, f"zero-sum blocks through a pair (m={m}, k={k})")
    ground = tuple(x for x in nonzero_elements(m) if x != i and x != j)
    rest = _xor_subsets(ground, k - 2, i ^ j, bud)
    blocks = sorted(tuple(sorted((*r, i, j))) for r in rest)
    return BlockFamily("Wpair", m, k, tuple(blocks), pair=(i, j))


def sum_to_shift_blocks(
    m: int, k: int, alpha: int, budget: int = DEFAULT_NODE_BUDGET
) -> BlockFamily:
    """k-subsets of GF(2^m) avoiding {0, alpha} whose XOR-sum is alpha."""
    check_exponent(m)
    check_shift(alpha, m)
    _check_k(k, 2, (1 << m) - 2, f"shifted-sum family in GF(2^{m})")
    bud = _Budget(budget, f"sum-to-shift blocks (m={m}, k={k}, alpha={alpha})")
    ground = tuple(x for x in nonzero_elements(m) if x != alpha)
    return BlockFamily("I", m, k, tuple(_xor_subsets(ground, k, alpha, bud)), alpha=alpha)


def sum_to_zero_blocks(
    m: int, k: int, alpha: int, budget: int = DEFAULT_NODE_BUDGET
) -> BlockFamily:
    """k-subsets of GF(2^m) avoiding {0, alpha} whose XOR-sum is zero."""
    check_exponent(m)
    check_shift(alpha, m)
    _check_k(k, 2, (1 << m) - 2, f"shifted-sum family in GF(2^{m})")
    bud = _Budget(budget, f"sum-to-zero blocks (m={m}, k={k}, alpha={alpha})")
    ground = tuple(x for x in nonzero_elements(m) if x != alpha)
    return BlockFamily("J", m, k, tuple(_xor_subsets(ground, k, 0, bud)), alpha=alpha)


def shift_invariant_blocks(
    m: int, k: int, alpha: int, budget: int = DEFAULT_NODE_BUDGET
) -> BlockFamily:
    """k-subsets of the nonzero elements fixed setwise by XOR with alpha.

    Such a block is a union of k/2 whole cosets {x, x + alpha}, none of
    which may be the one containing 0; for odd k the family is empty by
    parity, not an error.
    """
    check_exponent(m)
    check_shift(alpha, m)
    _check_k(k, 2, (1 << m) - 2, f"shift-invariant family in GF(2^{m})")
    blocks: list[Block] = []
    if k % 2 == 0:
        bud = _Budget(budget, f"shift-invariant blocks (m={m}, k={k}, alpha={alpha})")
        free = [c.members for c in cosets_of(alpha, m) if c.low != 0]
        for combo in combinations(free, k // 2):
            bud.spend()
            blocks.append(tuple(sorted(x for pair in combo for x in pair)))
        blocks.sort()
    return BlockFamily("L", m, k, tuple(blocks), alpha=alpha)


def shifted_sum_families(
    m: int, k: int, alpha: int, budget: int = DEFAULT_NODE_BUDGET
) -> tuple[BlockFamily, BlockFamily, BlockFamily]:
    """The three families tied to one shift: sum-to-alpha, sum-to-zero,
    and shift-invariant. Their sizes satisfy the three-way counting
    identity that drives the per-point recurrence."""
    return (
        sum_to_shift_blocks(m, k, alpha, budget),
        sum_to_zero_blocks(m, k, alpha, budget),
        shift_invariant_blocks(m, k, alpha, budget),
    )


def gdd_blocks(
    ambient_exp: int, k: int, alpha: int, budget: int = DEFAULT_NODE_BUDGET
) -> BlockFamily:
    """Blocks of the lifted design in GF(2^ambient_exp).

    k-subsets of the field minus {0, alpha} that XOR to alpha and touch
    each coset {x, x + alpha} at most once (equivalently, the block and
    its shift by alpha are disjoint).
    """
    check_exponent(ambient_exp, lo=MIN_EXPONENT + 1, hi=MAX_AMBIENT_EXPONENT)
    check_shift(alpha, ambient_exp)
    _check_k(k, 3, (1 << (ambient_exp - 1)) - 4, f"lifted family in GF(2^{ambient_exp})")
    bud = _Budget(budget, f"lifted blocks (exp={ambient_exp}, k={k}, alpha={alpha})")
    ground = tuple(x for x in range(1, 1 << ambient_exp) if x != alpha)
    blocks = _xor_subsets(ground, k, alpha, bud, coset_shift=alpha)
    return BlockFamily("U", ambient_exp, k, tuple(blocks), alpha=alpha)


def gdd_groups(ambient_exp: int, alpha: int) -> BlockFamily:
    """The groups of the lifted design: all pairs {x, x + alpha} with x
    outside {0, alpha}. Exactly 2^(ambient_exp - 1) - 1 disjoint pairs
    covering the point set."""
    check_exponent(ambient_exp, lo=MIN_EXPONENT + 1, hi=MAX_AMBIENT_EXPONENT)
    check_shift(alpha, ambient_exp)
    pairs = [c.members for c in cosets_of(alpha, ambient_exp) if c.low != 0]
    return BlockFamily("U", ambient_exp, 2, tuple(pairs), alpha=alpha)


def representative(block: Block, alpha: int, ordering: CosetOrdering) -> int:
    """The element of block \\ (block + alpha) whose coset ranks highest.

    Unique whenever it exists, because survivors occupy distinct cosets.
    A block that equals its own shift has no survivors and raises
    NoRepresentativeError.
    """
    if ordering.alpha != alpha:
        raise ArgumentError(
            f"ordering is for shift {ordering.alpha}, not {alpha}"
        )
    bs = set(block)
    survivors = [x for x in block if (x ^ alpha) not in bs]
    if not survivors:
        raise NoRepresentativeError(
            f"block {block} equals its own shift by {alpha}"
        )
    return max(survivors, key=ordering.rank)


def _check_map_triple(i: int, j: int, ell: int, ordering: CosetOrdering) -> None:
    size = 1 << ordering.m
    if len({i, j, ell}) != 3 or not all(0 < x < size for x in (i, j, ell)):
        raise ArgumentError(
            f"need three distinct nonzero elements below {size}, got {i}, {j}, {ell}"
        )
    if ordering.alpha != j ^ ell:
        raise ArgumentError(
            f"ordering must be for shift {j ^ ell}, not {ordering.alpha}"
        )


def replace_point_map(
    block: Block, i: int, j: int, ell: int, ordering: CosetOrdering
) -> Block:
    """Map a zero-sum block containing i and j to one containing i and ell.

    With alpha = j ^ ell: if ell is already in the block, the block is its
    own image. Otherwise j and the representative beta of
    block \\ {i, j, alpha} are removed, and ell and beta + alpha inserted,
    which preserves the zero XOR-sum. The image is re-checked against the
    target family: when beta + alpha collides with an element already
    present (it can land exactly on i), the image degenerates and a
    MapViolationError carrying the offending block is raised instead of
    returning a wrong answer. The size identity between the two families
    holds regardless and can always be confirmed by direct enumeration.
    """
    _check_map_triple(i, j, ell, ordering)
    alpha = j ^ ell
    k = len(block)
    if not family_predicate("Wpair", ordering.m, k, pair=(i, j))(block):
        raise FamilyError(
            f"block {block} is not a zero-sum block containing {i} and {j}"
        )
    bs = set(block)
    if ell in bs:
        return as_block(bs)
    core = as_block(bs - {i, j, alpha})
    beta = representative(core, alpha, ordering)
    image = tuple(sorted((bs - {j, beta}) | {ell, beta ^ alpha}))
    if not family_predicate("Wpair", ordering.m, k, pair=(i, ell))(image):
        raise MapViolationError(
            block, image, f"image left the zero-sum family through {i} and {ell}"
        )
    return image


def replace_point_inverse(
    block: Block, i: int, j: int, ell: int, ordering: CosetOrdering
) -> Block:
    """Inverse of replace_point_map: send a zero-sum block containing i and
    ell back to one containing i and j. Same construction with the roles of
    j and ell exchanged; the representative comes out shifted by alpha,
    which is what makes the round trip the identity."""
    _check_map_triple(i, j, ell, ordering)
    alpha = j ^ ell
    k = len(block)
    if not family_predicate("Wpair", ordering.m, k, pair=(i, ell))(block):
        raise FamilyError(
            f"block {block} is not a zero-sum block containing {i} and {ell}"
        )
    bs = set(block)
    if j in bs:
        return as_block(bs)
    core = as_block(bs - {i, ell, alpha})
    beta = representative(core, alpha, ordering)
    image = tuple(sorted((bs - {ell, beta}) | {j, beta ^ alpha}))
    if not family_predicate("Wpair", ordering.m, k, pair=(i, j))(image):
        raise MapViolationError(
            block, image, f"image left the zero-sum family through {i} and {j}"
        )
    return image


def shift_representative(
    block: Block, alpha: int, k: int, ordering: CosetOrdering
) -> Block:
    """Move the representative across its coset: drop beta, insert beta + alpha.

    Sends a k-subset avoiding {0, alpha} with XOR-sum alpha to one with
    XOR-sum zero over the same ground set. Blocks fixed by the shift have
    no representative and raise NoRepresentativeError; everything else maps
    injectively, which is what the counting identities rest on.
    """
    if len(block) != k:
        raise ArgumentError(f"expected a block of size {k}, got {len(block)}")
    if ordering.alpha != alpha:
        raise ArgumentError(
            f"ordering is for shift {ordering.alpha}, not {alpha}"
        )
    if not family_predicate("I", ordering.m, k, alpha=alpha)(block):
        raise FamilyError(
            f"block {block} does not avoid {{0, {alpha}}} and XOR to {alpha}"
        )
    beta = representative(block, alpha, ordering)
    image = tuple(sorted((set(block) - {beta}) | {beta ^ alpha}))
    if not family_predicate("J", ordering.m, k, alpha=alpha)(image):
        raise MapViolationError(
            block, image, "image left the sum-to-zero companion family"
        )
    return image
