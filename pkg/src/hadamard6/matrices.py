"""Dense matrices over an exact ring (Q(w) or the split quaternions).

Matrices are immutable, row-major, and hashable through their canonical
entry forms; equality is entrywise exact.  Indices are 0-based in code and
1-based only in text/JSON surfaces.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .eisenstein import OMEGA_POWERS, EisensteinRational, SplitQuaternion

_RINGS = (EisensteinRational, SplitQuaternion)


class NonUnimodularEntryError(ValueError):
    """An entry fails entry * conj(entry) = 1."""


class ExactMatrix:
    __slots__ = ("rows", "cols", "entries", "ring", "_hash")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        if not entries:
            raise ValueError("empty matrix")
        ring = type(entries[0])
        if ring not in _RINGS:
            raise ValueError(f"unsupported entry type {ring.__name__}")
        if any(type(e) is not ring for e in entries):
            raise ValueError("mixed entry rings")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self.ring = ring
        self._hash = None

    @classmethod
    def _raw(cls, rows, cols, entries, ring) -> "ExactMatrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", entries)
        object.__setattr__(m, "ring", ring)
        object.__setattr__(m, "_hash", None)
        return m

    @classmethod
    def from_rows(cls, rows) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0])
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [e for row in rows for e in row])

    @classmethod
    def identity(cls, n: int, ring=EisensteinRational) -> "ExactMatrix":
        one, zero = ring.one(), ring.zero()
        return cls._raw(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)), ring)

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        if self.ring is not other.ring:
            raise ValueError("ring mismatch")
        n, m, k = self.rows, other.cols, self.cols
        a, b = self.entries, other.entries
        zero = self.ring.zero()
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc = zero
                for t in range(k):
                    x = arow[t]
                    y = b[t * m + j]
                    if x.is_zero() or y.is_zero():
                        continue
                    acc = acc + x * y
                out.append(acc)
        return ExactMatrix._raw(n, m, tuple(out), self.ring)

    def dagger(self) -> "ExactMatrix":
        """Conjugate transpose; defined over Q(w) only."""
        if self.ring is not EisensteinRational:
            raise ValueError("dagger is not defined for split-quaternion matrices")
        e = self.entries
        out = tuple(e[i * self.cols + j].conj() for j in range(self.cols) for i in range(self.rows))
        return ExactMatrix._raw(self.cols, self.rows, out, self.ring)

    def is_hadamard(self) -> bool:
        """Exactly A * dagger(A) == n * I, for a square matrix over Q(w).

        Nonzero entries must be unimodular (reported distinctly otherwise);
        zero entries simply make the product check fail.
        """
        if self.rows != self.cols:
            raise ValueError("non-square matrix")
        if self.ring is not EisensteinRational:
            raise ValueError("ring must be Q(w)")
        one = EisensteinRational.one()
        for e in self.entries:
            if e and e * e.conj() != one:
                raise NonUnimodularEntryError(f"entry {e} is not unimodular")
        n = self.rows
        target = ExactMatrix.identity(n).scaled(n)
        return self @ self.dagger() == target

    def scaled(self, c) -> "ExactMatrix":
        """Scale by a central constant (int or Fraction)."""
        if not isinstance(c, (int, Fraction)):
            raise TypeError("scale factor must be int or Fraction")
        if self.ring is EisensteinRational:
            s = EisensteinRational(c)
            out = tuple(e * s for e in self.entries)
        else:
            s = EisensteinRational(c)
            out = tuple(SplitQuaternion(e.z * s, e.v * s) for e in self.entries)
        return ExactMatrix._raw(self.rows, self.cols, out, self.ring)

    def to_split_quaternion(self) -> "ExactMatrix":
        if self.ring is SplitQuaternion:
            raise ValueError("matrix already has split-quaternion entries")
        out = tuple(SplitQuaternion.from_complex(e) for e in self.entries)
        return ExactMatrix._raw(self.rows, self.cols, out, SplitQuaternion)

    def with_entry(self, i: int, j: int, value) -> "ExactMatrix":
        if type(value) is not self.ring:
            raise ValueError("ring mismatch")
        e = list(self.entries)
        e[i * self.cols + j] = value
        return ExactMatrix._raw(self.rows, self.cols, tuple(e), self.ring)

    def canonical_bytes(self) -> bytes:
        head = f"{self.rows}x{self.cols}:{self.ring.__name__}:"
        return (head + ";".join(str(e) for e in self.entries)).encode()

    def to_json_rows(self) -> list[list[str]]:
        return [[str(self.entry(i, j)) for j in range(self.cols)] for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.ring is other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        return f"ExactMatrix({self.rows}, {self.cols}, <{self.ring.__name__} entries>)"

    def __str__(self):
        return "\n".join(" ".join(str(self.entry(i, j)) for j in range(self.cols)) for i in range(self.rows))


# The distinguished 6x6 matrix: symmetric, first row and column all ones,
# trailing 5x5 block circulant with first row (1, w, w2, w2, w).
H6_PHASES = (
    (0, 0, 0, 0, 0, 0),
    (0, 0, 1, 2, 2, 1),
    (0, 1, 0, 1, 2, 2),
    (0, 2, 1, 0, 1, 2),
    (0, 2, 2, 1, 0, 1),
    (0, 1, 2, 2, 1, 0),
)


@cache
def h6() -> ExactMatrix:
    entries = tuple(OMEGA_POWERS[k] for row in H6_PHASES for k in row)
    return ExactMatrix._raw(6, 6, entries, EisensteinRational)
