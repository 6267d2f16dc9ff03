import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .exceptions import UniverseError

Atom = str | int
Row = tuple[Atom, ...]


@dataclass(frozen=True)
class Universe:
    """Non-empty ordered finite set of atoms.

    A universe is homogeneous: either every atom is a symbolic name or the atoms are a
    contiguous integer range. Only integer universes get the built-in arithmetic functions.

    Attributes:
        atoms:
            Atoms in universe order, which is also the order models are printed in.
    """

    atoms: tuple[Atom, ...]
    _index: dict[Atom, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.atoms:
            raise UniverseError('Universe must not be empty.')

        is_integer = [isinstance(atom, int) and not isinstance(atom, bool) for atom in self.atoms]

        if any(is_integer) and not all(is_integer):
            raise UniverseError(f'Universe mixes integer and symbolic atoms: {list(self.atoms)}')

        if not all(is_integer) and not all(isinstance(atom, str) for atom in self.atoms):
            raise UniverseError(f'Universe atoms must be names or integers: {list(self.atoms)}')

        index = {atom: position for position, atom in enumerate(self.atoms)}

        if len(index) != len(self.atoms):
            duplicates = sorted({str(atom) for atom in self.atoms if self.atoms.count(atom) > 1})
            raise UniverseError(f'Universe has duplicate atoms: {duplicates}')

        if all(is_integer):
            expected = tuple(range(self.atoms[0], self.atoms[0] + len(self.atoms)))

            if self.atoms != expected:
                raise UniverseError(f'Integer universe must be a contiguous ascending range, got {list(self.atoms)}')

        object.__setattr__(self, '_index', index)

    @classmethod
    def symbolic(cls, names: Iterable[str]) -> 'Universe':
        return cls(tuple(names))

    @classmethod
    def integer_range(cls, low: int, high: int) -> 'Universe':
        """Universe `low..high`, both ends included."""
        if high < low:
            raise UniverseError(f'Empty integer range {low}..{high}.')

        return cls(tuple(range(low, high + 1)))

    @property
    def is_integer(self) -> bool:
        return isinstance(self.atoms[0], int)

    def __contains__(self, atom: object) -> bool:
        return atom in self._index

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def index(self, atom: Atom) -> int:
        return self._index[atom]

    def lookup(self, text: str) -> Atom | None:
        """Return the atom written as `text`, or `None` when no atom is written that way."""
        if self.is_integer:
            try:
                value = int(text)
            except ValueError:
                return None

            return value if value in self._index else None

        return text if text in self._index else None

    def row_key(self, row: Row) -> tuple[int, ...]:
        """Sort key ordering rows lexicographically in universe order."""
        return tuple(self._index[atom] for atom in row)

    def rows(self, arity: int) -> Iterator[Row]:
        """Every row of length `arity`, in universe order."""
        return itertools.product(self.atoms, repeat=arity)
