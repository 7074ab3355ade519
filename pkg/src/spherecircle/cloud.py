"""Ordered point storage with constant-time move-to-front.

The solvers rely on relocating a just-identified boundary point to the head
of the processing order without disturbing the rest of the sequence, so the
points are kept in a doubly linked list. The list is index-linked over
packed coordinate arrays rather than built from node objects: coordinates
sit unboxed and contiguous, which keeps million-point scans inside the
cache hierarchy. A point's handle is its insertion index and stays valid
for the lifetime of the cloud.
"""

from __future__ import annotations

import random
import secrets
from array import array
from itertools import chain
from typing import Iterable, Iterator

import numpy as np


class PointCloud:
    """Doubly linked list of points (tuples of floats) in processing order.

    ``head``, ``tail`` and the entries of ``next_link``/``prev_link`` are
    integer handles; -1 marks the ends of the list.
    """

    __slots__ = ("coords", "dim", "next_link", "prev_link", "head", "tail", "_size")

    def __init__(self, points: Iterable = ()):
        pts = list(points)
        n = len(pts)
        self.dim = len(pts[0]) if pts else 0
        self.coords = array("d", chain.from_iterable(pts))
        if n and len(self.coords) != n * self.dim:
            raise ValueError("points must all have the same dimension")
        self.next_link = array("i", range(1, n + 1))
        self.prev_link = array("i", range(-1, n - 1))
        if n:
            self.next_link[n - 1] = -1
            self.head = 0
            self.tail = n - 1
        else:
            self.head = -1
            self.tail = -1
        self._size = n

    def __len__(self) -> int:
        return self._size

    def __iter__(self) -> Iterator[tuple]:
        coords = self.coords
        dim = self.dim
        handle = self.head
        while handle >= 0:
            base = dim * handle
            yield tuple(coords[base : base + dim])
            handle = self.next_link[handle]

    def point_at(self, handle: int) -> tuple:
        base = self.dim * handle
        return tuple(self.coords[base : base + self.dim])

    def append(self, point) -> int:
        """Add a point at the end of the list and return its handle."""
        if self._size == 0:
            self.dim = len(point)
        elif len(point) != self.dim:
            raise ValueError("points must all have the same dimension")
        handle = self._size
        self.coords.extend(point)
        self.next_link.append(-1)
        self.prev_link.append(self.tail)
        if self.tail >= 0:
            self.next_link[self.tail] = handle
        else:
            self.head = handle
        self.tail = handle
        self._size += 1
        return handle

    def move_to_front(self, handle: int) -> None:
        """Relocate the point behind ``handle`` to the head of the list in O(1)."""
        if handle == self.head:
            return
        nxt = self.next_link
        prv = self.prev_link
        before = prv[handle]
        after = nxt[handle]
        nxt[before] = after
        if after >= 0:
            prv[after] = before
        else:
            self.tail = before
        prv[handle] = -1
        nxt[handle] = self.head
        prv[self.head] = handle
        self.head = handle

    def shuffle_in_place(self, rng: random.Random) -> None:
        """Relink the list in a uniformly random order; handles stay valid.

        The permutation is drawn from a generator seeded off ``rng``, so a
        seeded caller gets a reproducible order. Relinking is vectorized
        over views of the link arrays to keep million-point reshuffles cheap.
        """
        n = self._size
        if n == 0:
            return
        order = np.random.default_rng(rng.getrandbits(64)).permutation(n).astype(np.int32)
        nxt = np.frombuffer(self.next_link, dtype=np.int32)
        prv = np.frombuffer(self.prev_link, dtype=np.int32)
        nxt[order[:-1]] = order[1:]
        prv[order[1:]] = order[:-1]
        nxt[order[-1]] = -1
        prv[order[0]] = -1
        self.head = int(order[0])
        self.tail = int(order[-1])

    def to_list(self) -> list:
        return list(self)


def shuffle(cloud: PointCloud | Iterable, seed: int | None = None) -> PointCloud:
    """New PointCloud with the same points in uniformly random order.

    Deterministic for a given seed; an unseeded call uses fresh entropy.
    The new cloud packs its coordinates in the shuffled order, so a
    subsequent solver pass walks memory sequentially.
    """
    points = list(cloud)
    random.Random(seed).shuffle(points)
    return PointCloud(points)


def resolve_seed(seed: int | None) -> int:
    """Pass explicit seeds through; draw a loggable 64-bit seed otherwise."""
    return seed if seed is not None else secrets.randbits(64)
