"""Permutations on n points with cycle-notation I/O.

Right action throughout: i^(g*h) = (i^g)^h, so g*h means "apply g, then h".
Points are 0-based internally; cycle notation is 1-based at the text boundary.
Printing uses disjoint cycles ordered by smallest moved point, fixed points
omitted, identity printed as "id"; parse(str(g)) == g.
"""

from __future__ import annotations

import re

_CYCLE_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(n)):
            raise ValueError("images do not form a bijection of 0..n-1")
        self.images = images

    @classmethod
    def _raw(cls, images) -> "Permutation":
        # trusted internal path: skips the bijection check
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse "id" or a product of cycles like "(1,2)(3,6)(4,5)"."""
        text = text.strip()
        if text == "id":
            return cls.identity(degree)
        pos = 0
        img = list(range(degree))
        seen = set()
        matched_any = False
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _CYCLE_RE.match(text, pos)
            if m is None:
                raise ValueError(f"malformed cycle notation: {text!r}")
            matched_any = True
            points = [int(t) for t in m.group(1).split(",")]
            for p in points:
                if not 1 <= p <= degree:
                    raise ValueError(f"point {p} out of range 1..{degree}")
                if p in seen:
                    raise ValueError(f"point {p} repeated in {text!r}")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                img[a - 1] = b - 1
            pos = m.end()
        if not matched_any:
            raise ValueError(f"malformed cycle notation: {text!r}")
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, i: int) -> int:
        """Image of the 0-based point i."""
        return self.images[i]

    def __mul__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        o = other.images
        return Permutation._raw(tuple(o[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(len(self.images))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles as 1-based tuples, fixed points omitted."""
        n = len(self.images)
        seen = [False] * n
        out = []
        for i in range(n):
            if seen[i] or self.images[i] == i:
                seen[i] = True
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            out.append(tuple(p + 1 for p in cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths, fixed points included as 1s, sorted descending."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self.images) - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def sign(self) -> int:
        s = 1
        for c in self.cycles():
            if len(c) % 2 == 0:
                s = -s
        return s

    def min_moved(self):
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "id"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation.parse({str(self)!r}, {len(self.images)})"
