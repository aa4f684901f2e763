"""Brute-force enumeration of bouquet-graph words and necklace colourings.

Words are generated block by block: a cyclic edge sequence, a composition of
each edge multiplicity over its blocks, and a sign per block. Rotation classes
are identified by canonical forms and counted with hash sets.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from queue import SimpleQueue
from threading import Thread
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from sympy.utilities.iterables import multiset_permutations

from wittpaths.counters.path_counts import cyclic_tuples
from wittpaths.kernels.numth import (
    MultiDegree,
    MultiDegreeLike,
    as_multidegree,
    compositions,
)
from wittpaths.utilities import EnumerationBoundError

log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())

DEFAULT_MAX_N = 12

Block = Tuple[int, int]
Blocks = Tuple[Block, ...]


@dataclass(frozen=True)
class Word:
    """Closed path D_{j_1}^{e_1} ... D_{j_l}^{e_l} on a bouquet graph.

    Attrs:
        blocks: cyclic list of (edge, signed exponent) pairs.
        start: offset inside the first block at which the closed walk begins.
    """

    blocks: Blocks
    start: int = 0

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("A word needs at least one block.")
        for edge, exponent in self.blocks:
            if edge < 1 or exponent == 0:
                raise ValueError(f"Invalid block ({edge}, {exponent}).")
        if len(self.blocks) > 1:
            edges = [edge for edge, _ in self.blocks]
            for current, following in zip(edges, edges[1:] + edges[:1]):
                if current == following:
                    raise ValueError(f"Adjacent blocks share an edge: {self.blocks}.")
        if not 0 <= self.start < abs(self.blocks[0][1]):
            raise ValueError(f"Start offset {self.start} outside the first block.")

    @property
    def length(self) -> int:
        """Number of blocks l."""
        return len(self.blocks)

    @property
    def negatives(self) -> int:
        """Number s of blocks with a negative exponent."""
        return sum(1 for _, exponent in self.blocks if exponent < 0)

    @property
    def total(self) -> int:
        """Path length N."""
        return sum(abs(exponent) for _, exponent in self.blocks)

    def multidegree(self, r: int) -> MultiDegree:
        """Traversal counts of edges 1..r; every edge must occur."""
        counts = [0] * r
        for edge, exponent in self.blocks:
            if edge > r:
                raise ValueError(f"Edge {edge} outside a bouquet of {r} edges.")
            counts[edge - 1] += abs(exponent)
        return MultiDegree(counts)

    def letters(self) -> Tuple[int, ...]:
        """Signed edge traversed at each step, beginning at `start`."""
        steps: List[int] = []
        for edge, exponent in self.blocks:
            steps.extend([edge if exponent > 0 else -edge] * abs(exponent))
        return tuple(steps[self.start :] + steps[: self.start])

    def __str__(self) -> str:
        return " ".join(f"D{edge}^{exponent:+d}" for edge, exponent in self.blocks)


@dataclass(frozen=True)
class NecklaceColouring:
    """Cyclic list of bead colours.

    Unsigned colours are indices 1..r; signed colours are +i for c_i and -i for
    the barred colour. Signed colourings may not place c_i next to its bar.
    """

    beads: Tuple[int, ...]
    signed: bool = False

    def __post_init__(self) -> None:
        if not self.beads:
            raise ValueError("A necklace needs at least one bead.")
        if not self.signed and min(self.beads) < 1:
            raise ValueError(f"Unsigned colours must be positive, got {self.beads}.")
        if self.signed and len(self.beads) > 1:
            beads = self.beads
            for current, following in zip(beads, beads[1:] + beads[:1]):
                if current == -following:
                    raise ValueError(f"Opposite colours adjacent in {self.beads}.")

    @property
    def period(self) -> int:
        return _rotation_period(self.beads)

    def canonical(self) -> Tuple[int, ...]:
        return _least_rotation(self.beads)


def _block_key(block: Block) -> Tuple[int, int, int]:
    edge, exponent = block
    return edge, 0 if exponent > 0 else 1, abs(exponent)


def canonical_form(word: Word) -> Blocks:
    """Least rotation of the block list under (edge, positive first, |exponent|)."""
    blocks = word.blocks
    rotations = (blocks[i:] + blocks[:i] for i in range(len(blocks)))
    return min(rotations, key=lambda rotation: [_block_key(b) for b in rotation])


def _block_period(blocks: Blocks) -> int:
    length = len(blocks)
    if length == 1:
        return abs(blocks[0][1])
    for size in range(1, length):
        if length % size == 0 and blocks == blocks[size:] + blocks[:size]:
            return length // size
    return 1


def word_period(word: Word) -> int:
    """Largest g such that the word is a g-fold repetition of a shorter word.

    A single block D^e has period |e|.
    """
    return _block_period(word.blocks)


def _check_bound(m: MultiDegree, max_n: int) -> None:
    if m.total > max_n:
        raise EnumerationBoundError(
            f"Multidegree {tuple(m)} has N = {m.total} above the enumeration bound "
            f"{max_n}."
        )


def _block_words(m: MultiDegree, lengths: Sequence[int]) -> Iterator[Blocks]:
    """Block lists with multidegree m and block count in `lengths`."""
    r = m.rank
    if r == 1:
        if 1 in lengths:
            yield ((1, m[0]),)
            yield ((1, -m[0]),)
        return
    for l in lengths:
        for edges in cyclic_tuples(r, l):
            occurrences = [edges.count(i) for i in range(1, r + 1)]
            if any(t == 0 or t > m_i for t, m_i in zip(occurrences, m)):
                continue
            splits = [compositions(m_i, t) for m_i, t in zip(m, occurrences)]
            for parts in itertools.product(*(list(s) for s in splits)):
                cursors = [iter(p) for p in parts]
                magnitudes = [next(cursors[edge - 1]) for edge in edges]
                for signs in itertools.product((1, -1), repeat=l):
                    yield tuple(
                        (edge, sign * size)
                        for edge, sign, size in zip(edges, signs, magnitudes)
                    )


def _lengths(m: MultiDegree) -> List[int]:
    if m.rank == 1:
        return [1]
    return list(range(m.rank, m.total + 1))


def enumerate_words(m: MultiDegreeLike) -> Iterator[Word]:
    """Every anchored word with multidegree m.

    Each block list is emitted once per starting offset inside its first block,
    so for r >= 2 the count equals N * F(m), the number of closed
    non-backtracking walks of length N with the given multidegree.
    """
    m = as_multidegree(m)
    for blocks in _block_words(m, _lengths(m)):
        first = 1 if m.rank == 1 else abs(blocks[0][1])
        for start in range(first):
            yield Word(blocks, start)


def word_classes(m: MultiDegreeLike, max_n: int = DEFAULT_MAX_N) -> Dict[Blocks, int]:
    """Map every rotation class of words with multidegree m to its period."""
    m = as_multidegree(m)
    _check_bound(m, max_n)
    classes: Dict[Blocks, int] = {}
    for blocks in _block_words(m, _lengths(m)):
        key = canonical_form(Word(blocks))
        if key not in classes:
            classes[key] = _block_period(blocks)
    return classes


def _nonperiodic_classes(m: MultiDegree, lengths: Sequence[int]) -> Set[Blocks]:
    found: Set[Blocks] = set()
    for blocks in _block_words(m, lengths):
        if _block_period(blocks) == 1:
            found.add(canonical_form(Word(blocks)))
    return found


def _collect_classes(
    m: MultiDegree, lengths: Sequence[int], queue: SimpleQueue
) -> None:
    """Worker body: put the class set, or the raised exception, on the queue."""
    try:
        queue.put(_nonperiodic_classes(m, lengths))
    except Exception as exc:
        log.exception("Worker for %s with lengths %s failed.", tuple(m), lengths)
        queue.put(exc)


def nonperiodic_representatives(
    m: MultiDegreeLike, max_n: int = DEFAULT_MAX_N, workers: int = 1
) -> List[Blocks]:
    """Canonical representatives of the nonperiodic word classes, sorted.

    Args:
        m: multidegree.
        max_n: enumeration bound on N.
        workers: number of threads; block counts are split between them.

    Raises:
        EnumerationBoundError: if N exceeds `max_n`.
        Exception: the first exception raised inside a worker thread.
    """
    m = as_multidegree(m)
    _check_bound(m, max_n)
    if workers < 1:
        raise ValueError(f"Number of workers must be positive, got {workers}.")
    lengths = _lengths(m)
    shares = [lengths[i::workers] for i in range(workers) if lengths[i::workers]]
    queue: SimpleQueue = SimpleQueue()
    threads = [
        Thread(target=_collect_classes, args=(m, share, queue)) for share in shares
    ]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    found: Set[Blocks] = set()
    failures: List[Exception] = []
    for _ in threads:
        result = queue.get()
        if isinstance(result, Exception):
            failures.append(result)
        else:
            found |= result
    if failures:
        raise failures[0]
    log.debug("Found %d nonperiodic classes for %s.", len(found), tuple(m))
    return _sorted_blocks(found)


def _sorted_blocks(found: Iterable[Blocks]) -> List[Blocks]:
    return sorted(found, key=lambda blocks: [_block_key(b) for b in blocks])


def nonperiodic_from_classes(classes: Dict[Blocks, int]) -> List[Blocks]:
    """Sorted nonperiodic representatives taken from a :func:`word_classes` map."""
    return _sorted_blocks(key for key, period in classes.items() if period == 1)


def theta_oracle(
    m: MultiDegreeLike, max_n: int = DEFAULT_MAX_N, workers: int = 1
) -> int:
    """Brute-force count of rotation classes of nonperiodic words.

    Inverse words are distinct classes.

    Raises:
        EnumerationBoundError: if N exceeds `max_n`.
    """
    return len(nonperiodic_representatives(m, max_n=max_n, workers=workers))


def _rotation_period(beads: Tuple[int, ...]) -> int:
    """Number of distinct rotations of a bead string."""
    n = len(beads)
    for size in range(1, n + 1):
        if n % size == 0 and beads == beads[size:] + beads[:size]:
            return size
    return n


def _least_rotation(beads: Tuple[int, ...]) -> Tuple[int, ...]:
    return min(beads[i:] + beads[:i] for i in range(len(beads)))


def _colour_strings(m: MultiDegree) -> Iterator[Tuple[int, ...]]:
    pool = [i for i, m_i in enumerate(m, start=1) for _ in range(m_i)]
    for permutation in multiset_permutations(pool):
        yield tuple(permutation)


def necklace_M_oracle(m: MultiDegreeLike, max_n: int = DEFAULT_MAX_N) -> int:
    """Brute-force count of nonperiodic necklaces with m_i beads of colour i.

    Raises:
        EnumerationBoundError: if N exceeds `max_n`.
    """
    m = as_multidegree(m)
    _check_bound(m, max_n)
    found: Set[Tuple[int, ...]] = set()
    for beads in _colour_strings(m):
        if _rotation_period(beads) == len(beads):
            found.add(_least_rotation(beads))
    return len(found)


def _cyclic_runs(beads: Tuple[int, ...]) -> List[List[int]]:
    """Positions grouped into maximal cyclic runs of equal colour."""
    n = len(beads)
    if len(set(beads)) == 1:
        return [list(range(n))]
    offset = next(i for i in range(n) if beads[i] != beads[i - 1])
    runs: List[List[int]] = []
    for step in range(n):
        position = (offset + step) % n
        if step == 0 or beads[position] != beads[position - 1]:
            runs.append([])
        runs[-1].append(position)
    return runs


def signed_necklaces(m: MultiDegreeLike) -> Iterator[NecklaceColouring]:
    """Every signed bead string with m_i beads of index i and no opposite neighbours.

    A colour may only change its bar where the index changes, so signs are
    chosen per cyclic run of equal indices.
    """
    m = as_multidegree(m)
    for beads in _colour_strings(m):
        runs = _cyclic_runs(beads)
        for signs in itertools.product((1, -1), repeat=len(runs)):
            signed = list(beads)
            for sign, run in zip(signs, runs):
                for position in run:
                    signed[position] = sign * beads[position]
            yield NecklaceColouring(tuple(signed), signed=True)


def signed_necklace_oracle(m: MultiDegreeLike, max_n: int = DEFAULT_MAX_N) -> int:
    """Brute-force count of nonperiodic signed necklaces, equal to theta(m).

    Raises:
        EnumerationBoundError: if N exceeds `max_n`.
    """
    m = as_multidegree(m)
    _check_bound(m, max_n)
    found: Set[Tuple[int, ...]] = set()
    for necklace in signed_necklaces(m):
        if necklace.period == len(necklace.beads):
            found.add(necklace.canonical())
    return len(found)


def describe_blocks(blocks: Optional[Blocks]) -> str:
    """Readable rendering such as ``D1^+1 D2^-2``."""
    if not blocks:
        return ""
    return str(Word(blocks))
