"""Line-oriented on-disk cache of full character tables.

Format (UTF-8 text)::

    cayleysn-character-cache v1
    <n>\t<partition>\t<cycle type>\t<value>
    ...
    complete\t<n>

Only nonzero values are written; a ``complete`` line marks a table whose
missing entries are zeros.  Records are sorted canonically so identical
tables give identical files.
"""

from __future__ import annotations

import os
from pathlib import Path

from .characters import CharacterTable, character_table, partition_mask, _mask_index
from .errors import CacheVersionError
from .partitions import (
    enumerate_cycle_types,
    format_cycle_type,
    parse_cycle_type,
    parse_partition,
)

FORMAT_VERSION = 1
HEADER = f"cayleysn-character-cache v{FORMAT_VERSION}"
ENV_VAR = "CAYLEYSN_CACHE"


class CharacterCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._tables: dict[int, CharacterTable] = {}
        self._dirty = False
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open(encoding="utf-8") as fh:
            header = fh.readline().rstrip("\n")
            if header != HEADER:
                raise CacheVersionError(
                    f"{self.path}: expected header {HEADER!r}, found {header!r}"
                )
            pending: dict[int, dict] = {}
            for lineno, line in enumerate(fh, 2):
                fields = line.rstrip("\n").split("\t")
                if fields[0] == "complete":
                    n = int(fields[1])
                    columns = pending.pop(n, {})
                    table = CharacterTable(n, {})
                    for mu in enumerate_cycle_types(n):
                        table.columns[mu] = columns.get(mu, {})
                    self._tables[n] = table
                    continue
                if len(fields) != 4:
                    raise ValueError(f"{self.path}:{lineno}: malformed record")
                n = int(fields[0])
                shape = parse_partition(fields[1])
                mu = parse_cycle_type(fields[2])
                idx = _mask_index(n)[partition_mask(shape, n)]
                pending.setdefault(n, {}).setdefault(mu, {})[idx] = int(fields[3])

    def has(self, n: int) -> bool:
        return n in self._tables

    def get(self, n: int) -> CharacterTable | None:
        return self._tables.get(n)

    def put(self, table: CharacterTable) -> None:
        self._tables[table.n] = table
        self._dirty = True

    def table(self, n: int, workers: int = 1) -> CharacterTable:
        if n not in self._tables:
            self.put(character_table(n, workers=workers))
        return self._tables[n]

    def save(self) -> None:
        if not self._dirty and self.path.exists():
            return
        tmp = self.path.with_suffix(self.path.suffix + ".tmp")
        with tmp.open("w", encoding="utf-8") as fh:
            fh.write(HEADER + "\n")
            for n in sorted(self._tables):
                table = self._tables[n]
                for mu in table.classes():
                    ct = format_cycle_type(mu)
                    column = table.columns[mu]
                    for idx in sorted(column):
                        fh.write(f"{n}\t{table.partitions[idx]}\t{ct}\t{column[idx]}\n")
                fh.write(f"complete\t{n}\n")
        tmp.replace(self.path)
        self._dirty = False


def default_cache_path() -> str | None:
    return os.environ.get(ENV_VAR) or None
