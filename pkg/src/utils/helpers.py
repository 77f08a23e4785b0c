"""Helper functions and utilities."""

import json
import os
import stat
import tempfile
from pathlib import Path
from typing import Any


def serialize_json(data: Any) -> str:
    """Serialize data to canonical JSON text.

    Keys keep their insertion order, two-space indentation, trailing newline.
    """
    return json.dumps(data, ensure_ascii=False, indent=2) + "\n"


def deserialize_json(json_str: str) -> Any:
    return json.loads(json_str)


def _default_file_mode() -> int:
    # os.umask can only be read by setting it.
    umask = os.umask(0)
    os.umask(umask)
    return 0o666 & ~umask


def atomic_write_text(path: Path | str, text: str) -> None:
    """Write ``text`` to ``path`` through a temp file and rename.

    A crash before the rename leaves any previous file intact. The result keeps
    the permission bits of the file it replaces, or gets the umask default
    when the file is new.
    """
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    try:
        mode = stat.S_IMODE(target.stat().st_mode)
    except FileNotFoundError:
        mode = _default_file_mode()
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.chmod(tmp_name, mode)
        os.replace(tmp_name, target)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except FileNotFoundError:
            pass
        raise
