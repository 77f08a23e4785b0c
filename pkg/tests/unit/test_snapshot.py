"""Unit tests for snapshot persistence."""

import json
import os
import stat

import pytest

from bucketed_balances.cli.snapshot import dump_snapshot, load_snapshot, parse_snapshot, save_snapshot
from bucketed_balances.exceptions import CorruptSnapshotError, UnsupportedSnapshotVersionError
from bucketed_balances.ledger import Ledger

EMPTY_SNAPSHOT = '{\n  "formatVersion": 1,\n  "clock": 0,\n  "resources": [],\n  "books": []\n}\n'


def _snapshot_with(records, width=250):
    return json.dumps(
        {
            "formatVersion": 1,
            "clock": 0,
            "resources": [{"resourceId": "credits", "ttl": 1000, "bucketCount": 4, "bucketWidth": width}],
            "books": [{"accountId": "alice", "resourceId": "credits", "records": records}],
        }
    )


class TestSaveSnapshot:
    """Tests for canonical serialization."""

    def test_empty_ledger(self, tmp_path):
        """Test an empty ledger has empty lists and reloads."""
        path = tmp_path / "state.json"
        save_snapshot(Ledger(), path)
        assert path.read_text(encoding="utf-8") == EMPTY_SNAPSHOT
        assert load_snapshot(path).clock == 0

    def test_byte_identical(self, ledger, tmp_path):
        """Test saving twice without mutation gives the same bytes."""
        ledger.mint("alice", "credits", 10)
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        save_snapshot(ledger, first)
        save_snapshot(ledger, second)
        assert first.read_bytes() == second.read_bytes()

    def test_one_book(self, ledger):
        """Test one book gives exactly one books entry."""
        ledger.mint("alice", "credits", 10)
        data = json.loads(dump_snapshot(ledger))
        assert data["books"] == [
            {"accountId": "alice", "resourceId": "credits", "records": [{"amount": 10, "expiresAt": 1000}]}
        ]
        assert data["resources"][0]["bucketWidth"] == 250

    def test_canonical_order(self):
        """Test resources and books are sorted regardless of creation order."""
        ledger = Ledger()
        ledger.define_resource("zeta", 1000, 4)
        ledger.define_resource("alpha", 1000, 4)
        ledger.mint("bob", "alpha", 1)
        ledger.mint("alice", "zeta", 1)
        data = json.loads(dump_snapshot(ledger))
        assert [r["resourceId"] for r in data["resources"]] == ["alpha", "zeta"]
        assert [(b["accountId"], b["resourceId"]) for b in data["books"]] == [("alice", "zeta"), ("bob", "alpha")]

    def test_large_amounts_as_strings(self, ledger):
        """Test amounts above 2**53 - 1 are written as decimal strings."""
        ledger.mint("alice", "credits", 2**60)
        ledger.mint("bob", "credits", 2**53 - 1)
        data = json.loads(dump_snapshot(ledger))
        assert data["books"][0]["records"][0]["amount"] == str(2**60)
        assert data["books"][1]["records"][0]["amount"] == 2**53 - 1


class TestLoadSnapshot:
    """Tests for loading and validation."""

    def test_round_trip(self, ledger, tmp_path):
        """Test load(save(L)) keeps clock, configs and records."""
        ledger.mint("alice", "credits", 2**100)
        ledger.advance_clock(300)
        ledger.mint("alice", "credits", 3)
        ledger.transfer("alice", "bob", "credits", 5)
        path = tmp_path / "state.json"
        save_snapshot(ledger, path)

        loaded = load_snapshot(path)
        assert loaded.clock == 300
        assert dict(loaded.configs) == dict(ledger.configs)
        for account in ("alice", "bob"):
            assert loaded.records_of(account, "credits") == ledger.records_of(account, "credits")
        assert dump_snapshot(loaded) == dump_snapshot(ledger)

    def test_missing_file(self, tmp_path):
        """Test a missing file is a corrupt-snapshot error."""
        with pytest.raises(CorruptSnapshotError):
            load_snapshot(tmp_path / "absent.json")

    def test_invalid_json(self):
        """Test unparsable text is rejected."""
        with pytest.raises(CorruptSnapshotError):
            parse_snapshot("{not json")

    def test_unsupported_version(self):
        """Test unknown format versions get their own error."""
        with pytest.raises(UnsupportedSnapshotVersionError) as exc_info:
            parse_snapshot('{"formatVersion": 999, "clock": 0, "resources": [], "books": []}')
        assert exc_info.value.version == 999

    @pytest.mark.parametrize(
        "records",
        [
            [{"amount": 1, "expiresAt": 251}],
            [{"amount": 1, "expiresAt": 250}, {"amount": 1, "expiresAt": 250}],
            [{"amount": 0, "expiresAt": 250}],
            [{"amount": "12a", "expiresAt": 250}],
            [{"amount": 1.5, "expiresAt": 250}],
            [],
        ],
    )
    def test_invariant_violations(self, records):
        """Test misaligned, duplicate, zero, malformed and empty books are rejected."""
        with pytest.raises(CorruptSnapshotError):
            parse_snapshot(_snapshot_with(records))

    def test_width_mismatch(self):
        """Test a declared width must match the derived one."""
        with pytest.raises(CorruptSnapshotError):
            parse_snapshot(_snapshot_with([{"amount": 1, "expiresAt": 300}], width=300))

    def test_string_amount_accepted(self):
        """Test decimal-string amounts load as integers."""
        ledger = parse_snapshot(_snapshot_with([{"amount": "1180591620717411303424", "expiresAt": 250}]))
        assert ledger.records_of("alice", "credits") == [(2**70, 250)]

    def test_unknown_field(self):
        """Test unexpected keys are rejected."""
        with pytest.raises(CorruptSnapshotError):
            parse_snapshot('{"formatVersion": 1, "clock": 0, "resources": [], "books": [], "extra": 1}')

    @pytest.mark.parametrize("missing", ["formatVersion", "clock", "resources", "books"])
    def test_missing_top_level_field(self, missing):
        """Test every top-level field is required."""
        data = {"formatVersion": 1, "clock": 0, "resources": [], "books": []}
        del data[missing]
        with pytest.raises(CorruptSnapshotError) as exc_info:
            parse_snapshot(json.dumps(data))
        assert missing in str(exc_info.value)


@pytest.mark.skipif(os.name != "posix", reason="POSIX permission bits")
class TestSnapshotPermissions:
    """Tests for file modes across atomic rewrites."""

    def test_rewrite_keeps_mode(self, ledger, tmp_path):
        """Test saving over an existing snapshot keeps its permission bits."""
        path = tmp_path / "state.json"
        save_snapshot(ledger, path)
        path.chmod(0o640)
        ledger.mint("alice", "credits", 1)
        save_snapshot(ledger, path)
        assert stat.S_IMODE(path.stat().st_mode) == 0o640

    def test_new_file_follows_umask(self, ledger, tmp_path):
        """Test a fresh snapshot gets the umask default, not the temp-file mode."""
        previous = os.umask(0o022)
        try:
            path = tmp_path / "state.json"
            save_snapshot(ledger, path)
        finally:
            os.umask(previous)
        assert stat.S_IMODE(path.stat().st_mode) == 0o644
