"""Permutations in one-line notation, block and cross constructions.

Conventions used throughout the package:

* a Permutation of size n stores the images (p(1), ..., p(n));
* (p * q)(i) = p(q(i)), i.e. q acts first;
* the place action on an n-tuple t puts t[p^{-1}(i)] in position i, so the
  3-cycle cycle(3, (1,2,3)) sends (a, b, c) to (c, a, b).
"""

from __future__ import annotations

import itertools


class Permutation:
    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def cycle(cls, n: int, *cycles) -> "Permutation":
        """Permutation of size n from disjoint cycles, e.g. cycle(3, (1,2))."""
        images = list(range(1, n + 1))
        for cyc in cycles:
            for pos, e in enumerate(cyc):
                images[e - 1] = cyc[(pos + 1) % len(cyc)]
        return cls(images)

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        return cls.cycle(n, (i, j)) if i != j else cls.identity(n)

    @classmethod
    def all_of_size(cls, n: int):
        return [cls(p) for p in itertools.permutations(range(1, n + 1))]

    # -- group structure -----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def sign(self) -> int:
        seen = [False] * self.size
        sign = 1
        for i in range(1, self.size + 1):
            if seen[i - 1]:
                continue
            length = 0
            j = i
            while not seen[j - 1]:
                seen[j - 1] = True
                j = self(j)
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    # -- actions and combinations ---------------------------------------------

    def act(self, items: tuple) -> tuple:
        """Place action: position i of the result holds items[p^{-1}(i)]."""
        if len(items) != self.size:
            raise ValueError("size mismatch")
        inv = self.inverse()
        return tuple(items[inv(i) - 1] for i in range(1, self.size + 1))

    def cross(self, other: "Permutation") -> "Permutation":
        """u x v: first block by u, last block by v."""
        n = self.size
        return Permutation(
            list(self.images) + [img + n for img in other.images]
        )

    def block(self, sizes) -> "Permutation":
        """Block permutation: split sum(sizes) nodes into len(sizes) blocks
        and move whole blocks according to self."""
        sizes = tuple(sizes)
        if len(sizes) != self.size:
            raise ValueError("one block size per permuted point is required")
        inv = self.inverse()
        offsets = [0] * (self.size + 1)
        for i in range(1, self.size + 1):
            offsets[i] = offsets[i - 1] + sizes[inv(i) - 1]
        images = []
        for i, k in enumerate(sizes, start=1):
            dest = offsets[self(i) - 1]
            images.extend(range(dest + 1, dest + k + 1))
        return Permutation(images)

    # -- comparisons and rendering ----------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"perm{list(self.images)}"

    def render(self) -> str:
        return "perm[" + ",".join(str(i) for i in self.images) + "]"


def parse_perm(text: str) -> Permutation:
    """Inverse of Permutation.render: accepts 'perm[2,1]' or bare '2,1'."""
    body = text.strip()
    if body.startswith("perm[") and body.endswith("]"):
        body = body[5:-1]
    if not body:
        return Permutation.identity(0)
    return Permutation(int(tok) for tok in body.split(","))
