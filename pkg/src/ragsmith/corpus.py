"""Knowledge-base discovery: source documents and software requirements.

A corpus is a directory tree of C headers, C sources, and legacy test
files. Each file becomes a Document whose role is decided by the first
glob rule that matches it (precedence: legacy_test, c_header, c_source).
Requirements live in a separate JSON file.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import DuplicateRequirementId, EmptyCorpus, MalformedRecord, RootMissing

logger = logging.getLogger(__name__)


class Role(str, Enum):
    C_HEADER = "c_header"
    C_SOURCE = "c_source"
    LEGACY_TEST = "legacy_test"


CODE_ROLES = (Role.C_HEADER, Role.C_SOURCE)

# First matching role wins when a file matches globs of several roles.
ROLE_PRECEDENCE = (Role.LEGACY_TEST, Role.C_HEADER, Role.C_SOURCE)

DEFAULT_INCLUDE_GLOBS: dict[Role, tuple[str, ...]] = {
    Role.LEGACY_TEST: ("**/test_*.py", "**/*_test.py"),
    Role.C_HEADER: ("**/*.h",),
    Role.C_SOURCE: ("**/*.c",),
}


def canonicalize_newlines(text: str) -> str:
    """Normalize CRLF and lone CR to LF so offsets are platform-stable."""
    return text.replace("\r\n", "\n").replace("\r", "\n")


@dataclass(frozen=True)
class Document:
    """One loaded source file. `id` is the root-relative POSIX path."""

    id: str
    role: Role
    text: str

    @property
    def length(self) -> int:
        return len(self.text)


@dataclass(frozen=True)
class Requirement:
    id: str
    title: str
    body: str


@dataclass
class CorpusConfig:
    """Where to find the knowledge base and which files play which role."""

    root: Path
    include_globs: dict[Role, tuple[str, ...]] = field(
        default_factory=lambda: dict(DEFAULT_INCLUDE_GLOBS)
    )
    exclude_globs: dict[Role, tuple[str, ...]] = field(default_factory=dict)
    requirement_file: Path | None = None

    def __post_init__(self) -> None:
        self.root = Path(self.root)
        if self.requirement_file is not None:
            self.requirement_file = Path(self.requirement_file)
        for role, globs in self.include_globs.items():
            if not globs:
                raise ValueError(f"role {role.value} enabled with no include globs")


def scan_corpus(cfg: CorpusConfig) -> list[Document]:
    """Walk the corpus root and load every file matching the role globs.

    Files are claimed by the first role (in ROLE_PRECEDENCE order) whose
    include globs match and exclude globs do not. Files that cannot be
    read or are not valid UTF-8 are reported via the module logger and
    skipped; the scan continues. Output is sorted by document id so a
    rescan of an unchanged tree is byte-identical.
    """
    root = Path(cfg.root)
    if not root.is_dir():
        raise RootMissing(f"corpus root does not exist: {root}")

    claimed: set[Path] = set()
    documents: list[Document] = []
    for role in ROLE_PRECEDENCE:
        include = cfg.include_globs.get(role, ())
        if not include:
            continue
        excluded: set[Path] = set()
        for pattern in cfg.exclude_globs.get(role, ()):
            excluded.update(root.glob(pattern))
        matched: set[Path] = set()
        for pattern in include:
            matched.update(root.glob(pattern))
        for path in sorted(matched):
            if not path.is_file() or path in excluded or path in claimed:
                continue
            claimed.add(path)
            doc_id = path.relative_to(root).as_posix()
            try:
                raw = path.read_bytes()
            except OSError as exc:
                logger.warning("skipping unreadable file %s: %s", doc_id, exc)
                continue
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                logger.warning("skipping non-UTF-8 file %s: %s", doc_id, exc)
                continue
            documents.append(Document(id=doc_id, role=role, text=canonicalize_newlines(text)))

    if not documents:
        raise EmptyCorpus(f"no documents matched under {root}")
    documents.sort(key=lambda d: d.id)
    return documents


def load_requirements(path: Path | str) -> list[Requirement]:
    """Load requirements from a JSON array of {id, title, body} objects.

    File order is preserved. Raises DuplicateRequirementId on repeated
    ids and MalformedRecord (with the record number) on shape problems.
    """
    raw = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"requirements file is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise MalformedRecord("requirements file must be a JSON array")

    requirements: list[Requirement] = []
    seen: set[str] = set()
    for number, record in enumerate(data, start=1):
        if not isinstance(record, dict):
            raise MalformedRecord(f"record {number}: expected an object")
        try:
            req_id = record["id"]
            title = record["title"]
            body = record["body"]
        except KeyError as exc:
            raise MalformedRecord(f"record {number}: missing field {exc}") from exc
        if not all(isinstance(v, str) for v in (req_id, title, body)):
            raise MalformedRecord(f"record {number}: id, title and body must be strings")
        if not body:
            raise MalformedRecord(f"record {number}: body must be non-empty")
        if req_id in seen:
            raise DuplicateRequirementId(f"record {number}: duplicate id {req_id!r}")
        seen.add(req_id)
        requirements.append(Requirement(id=req_id, title=title, body=body))
    return requirements
