"""Reference set-valued maps and the approximation values claimed for them.

``claimed`` values are stored as given in the source material, already
translated to lower = ``{x : F(x) ⊆ A}`` and upper = ``{x : F(x) ∩ A ≠ ∅}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .finite_sets import SetValuedMap, Universe

NUMERIC = Universe(["1", "2", "3", "4", "5", "6"])
LETTERS = Universe(["a", "b", "c", "d", "e", "f"])


def _map(universe, images):
    return SetValuedMap.from_mapping(universe, universe, images)


EX21_F = _map(NUMERIC, {1: [1], 2: [1, 3], 3: [3, 4], 4: [4], 5: [1, 6], 6: [1, 5, 6]})
EX22_F1 = _map(LETTERS, {"a": "a", "b": "ac", "c": "cd", "d": "ad", "e": "af", "f": "aef"})
EX22_F2 = _map(LETTERS, {"a": "a", "b": "ab", "c": "c", "d": "d", "e": "aef", "f": "aef"})
EX31_F = _map(LETTERS, {"a": "a", "b": "ac", "c": "cd", "d": "d", "e": "af", "f": "aef"})


@dataclass(frozen=True)
class ClaimedApprox:
    id: str
    map_name: str
    map: SetValuedMap
    set_name: str
    set_labels: tuple[str, ...]
    lower: tuple[str, ...]
    upper: tuple[str, ...]

    def subset(self):
        return self.map.target.subset(self.set_labels)


CLAIMS = [
    ClaimedApprox("EX21-A", "F", EX21_F, "A", ("1", "3", "5"), ("1", "2"), ("1", "2", "3", "5", "6")),
    ClaimedApprox("EX21-B", "F", EX21_F, "B", ("2", "4", "6"), ("4",), ("3", "4", "5", "6")),
    ClaimedApprox("EX22-F1", "F1", EX22_F1, "A", tuple("ace"), tuple("ab"), tuple("abcef")),
    ClaimedApprox("EX22-F2", "F2", EX22_F2, "A", tuple("ace"), tuple("ac"), tuple("abcdef")),
    ClaimedApprox("EX31-B1", "F", EX31_F, "B1", tuple("ade"), tuple("ad"), tuple("abcdef")),
    ClaimedApprox("EX31-B2", "F", EX31_F, "B2", tuple("bef"), tuple("d"), tuple("cdef")),
    ClaimedApprox("EX32", "F", EX21_F, "A", ("1", "3", "5"), ("1", "2", "3"), ("1", "2", "3", "4", "5", "6")),
]

EX21_IMAGE = ("1", "3", "4", "5", "6")
