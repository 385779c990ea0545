import pytest

from cayleysn.characters import character_table
from cayleysn.charcache import HEADER, CharacterCache
from cayleysn.errors import CacheVersionError


def test_round_trip(tmp_path):
    path = tmp_path / "chars.tsv"
    cache = CharacterCache(path)
    fresh = cache.table(9)
    cache.table(6)
    cache.save()
    text = path.read_text()
    assert text.startswith(HEADER + "\n")
    assert "complete\t9" in text

    reloaded = CharacterCache(path)
    assert reloaded.has(9) and reloaded.has(6) and not reloaded.has(7)
    table = reloaded.get(9)
    assert table.classes() == fresh.classes()
    for mu in table.classes():
        assert table.columns[mu] == fresh.columns[mu]


def test_file_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for path, order in ((a, (7, 5)), (b, (5, 7))):
        cache = CharacterCache(path)
        for n in order:
            cache.table(n)
        cache.save()
    assert a.read_bytes() == b.read_bytes()


def test_records_are_nonzero_values(tmp_path):
    path = tmp_path / "c"
    cache = CharacterCache(path)
    cache.put(character_table(5))
    cache.save()
    rows = [line.split("\t") for line in path.read_text().splitlines()[1:]]
    values = [int(r[3]) for r in rows if r[0] != "complete"]
    assert values and 0 not in values


def test_stale_version_is_an_error(tmp_path):
    path = tmp_path / "old"
    path.write_text("cayleysn-character-cache v0\n")
    with pytest.raises(CacheVersionError):
        CharacterCache(path)
