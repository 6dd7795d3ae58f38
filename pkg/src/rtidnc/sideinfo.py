"""Side-information model for broadcast loss recovery.

A base station broadcast m packets to n users; each user missed some of
them.  The state is a binary n x m matrix where entry (i, j) is 1 when
user i still wants packet j and 0 when it already holds it.  A recovery
transmission is an XOR of distinct packets; a user can decode it on the
spot exactly when it already holds all but one of the XORed packets.

Users and packets are 1-based throughout the public API.  Rows are stored
as packed bit masks (bit j-1 of row i is entry (i, j)) so the solvers can
scan them with word-level operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import ParseError


@dataclass(frozen=True)
class SideInfoMatrix:
    """Binary want/has matrix for n users and m packets."""

    n: int
    m: int
    rows: tuple[int, ...]  # bit j-1 of rows[i-1] set  <=>  user i wants packet j

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"need positive dimensions, got {self.n}x{self.m}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.m) - 1
        for r in self.rows:
            if r < 0 or r & ~full:
                raise ValueError("row mask has bits outside the packet range")

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence[int]]) -> "SideInfoMatrix":
        """Build from a list of 0/1 row lists."""
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        m = len(entries[0])
        rows = []
        for row in entries:
            if len(row) != m:
                raise ValueError("ragged rows")
            mask = 0
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entries must be 0 or 1, got {v!r}")
                mask |= v << j
            rows.append(mask)
        return cls(len(entries), m, tuple(rows))

    def wants(self, user: int, packet: int) -> bool:
        self._check_user(user)
        self._check_packet(packet)
        return bool(self.rows[user - 1] >> (packet - 1) & 1)

    def want_set(self, user: int) -> frozenset[int]:
        self._check_user(user)
        r = self.rows[user - 1]
        return frozenset(j + 1 for j in range(self.m) if r >> j & 1)

    def has_set(self, user: int) -> frozenset[int]:
        self._check_user(user)
        r = self.rows[user - 1]
        return frozenset(j + 1 for j in range(self.m) if not r >> j & 1)

    def column_count(self, packet: int) -> int:
        """Number of users that still want `packet`."""
        self._check_packet(packet)
        bit = 1 << (packet - 1)
        return sum(1 for r in self.rows if r & bit)

    def ones(self) -> Iterator[tuple[int, int]]:
        """All (user, packet) pairs with a 1, row-major order."""
        for i in range(1, self.n + 1):
            r = self.rows[i - 1]
            for j in range(1, self.m + 1):
                if r >> (j - 1) & 1:
                    yield (i, j)

    def count_ones(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def _check_user(self, user: int):
        if not 1 <= user <= self.n:
            raise ValueError(f"user index {user} outside [1..{self.n}]")

    def _check_packet(self, packet: int):
        if not 1 <= packet <= self.m:
            raise ValueError(f"packet index {packet} outside [1..{self.m}]")


@dataclass(frozen=True)
class CodedPacket:
    """XOR of a nonempty set of distinct packets, identified by their indices."""

    packets: frozenset[int]

    def __post_init__(self):
        if not self.packets:
            raise ValueError("coded packet must combine at least one packet")
        for j in self.packets:
            if not isinstance(j, int) or j < 1:
                raise ValueError(f"bad packet index {j!r}")

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "CodedPacket":
        """Build from explicit indices; repeated indices are rejected, not merged."""
        seq = list(indices)
        dedup = frozenset(seq)
        if len(dedup) != len(seq):
            raise ValueError(f"duplicate packet indices in {sorted(seq)}")
        return cls(dedup)

    def sorted(self) -> list[int]:
        return sorted(self.packets)

    def __len__(self) -> int:
        return len(self.packets)


@dataclass(frozen=True)
class BeneficiarySet:
    """Users that decode a coded packet immediately, with what each recovers.

    `all_components_wanted` is False when some component of the packet is
    wanted by none of the beneficiaries; such a packet wastes part of its
    payload and schemes that require full usefulness should reject it.
    """

    users: frozenset[int]
    recovered: dict[int, int] = field(compare=False)
    all_components_wanted: bool = True

    def __len__(self) -> int:
        return len(self.users)


def _validate_packet(matrix: SideInfoMatrix, coded: CodedPacket):
    for j in coded.packets:
        if j > matrix.m:
            raise ValueError(f"packet index {j} outside [1..{matrix.m}]")


def decodable_for_user(matrix: SideInfoMatrix, coded: CodedPacket, user: int) -> int | None:
    """Packet `user` recovers from `coded`, or None if it cannot decode usefully.

    Decoding works exactly when the user already holds all but one of the
    XORed components; recovering nothing (user holds them all) does not
    count as a benefit.
    """
    matrix._check_user(user)
    _validate_packet(matrix, coded)
    row = matrix.rows[user - 1]
    mask = 0
    for j in coded.packets:
        mask |= 1 << (j - 1)
    wanted = row & mask
    if wanted and wanted.bit_count() == 1:
        return wanted.bit_length()  # bit k-1 set -> packet k
    return None


def is_instantly_decodable(matrix: SideInfoMatrix, coded: CodedPacket, users: Iterable[int]) -> bool:
    """True when every listed user decodes and every component serves someone listed."""
    users = set(users)
    if not users:
        raise ValueError("user set must be nonempty")
    recovered = set()
    for i in users:
        got = decodable_for_user(matrix, coded, i)
        if got is None:
            return False
        recovered.add(got)
    return recovered == set(coded.packets)


def beneficiaries(matrix: SideInfoMatrix, coded: CodedPacket) -> BeneficiarySet:
    """The maximal set of users that benefit from `coded`.

    A user with two or more wanted components can never decode, so the
    benefiting users are exactly those with a single wanted component;
    no larger valid user set exists.
    """
    _validate_packet(matrix, coded)
    mask = 0
    for j in coded.packets:
        mask |= 1 << (j - 1)
    recovered: dict[int, int] = {}
    for i in range(1, matrix.n + 1):
        wanted = matrix.rows[i - 1] & mask
        if wanted and wanted.bit_count() == 1:
            recovered[i] = wanted.bit_length()
    covered = set(recovered.values()) == set(coded.packets)
    return BeneficiarySet(frozenset(recovered), recovered, covered)


def matrix_to_text(matrix: SideInfoMatrix) -> str:
    """Render in the fixture format: "n m" then n rows of 0/1 characters."""
    lines = [f"{matrix.n} {matrix.m}"]
    for r in matrix.rows:
        lines.append("".join("1" if r >> j & 1 else "0" for j in range(matrix.m)))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> SideInfoMatrix:
    """Parse the fixture format, reporting the offending line on errors."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1)
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'n m', got {lines[0]!r}", 1)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError(f"expected integers, got {lines[0]!r}", 1) from None
    if n < 1 or m < 1:
        raise ParseError(f"dimensions must be positive, got {n} {m}", 1)
    if len(lines) < n + 1:
        raise ParseError(f"expected {n} rows, file has {len(lines) - 1}", len(lines) + 1)
    rows = []
    for i in range(n):
        line = lines[i + 1].strip()
        if len(line) != m:
            raise ParseError(f"expected {m} characters, got {len(line)}", i + 2)
        mask = 0
        for j, ch in enumerate(line):
            if ch == "1":
                mask |= 1 << j
            elif ch != "0":
                raise ParseError(f"bad character {ch!r}", i + 2)
        rows.append(mask)
    return SideInfoMatrix(n, m, tuple(rows))
