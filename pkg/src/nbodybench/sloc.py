"""Source line counting with per-language comment profiles.

Each physical line is classified as exactly one of blank, comment, or code:

  blank    only whitespace
  comment  non-blank, and every non-whitespace character sits inside
           comment syntax (line or block)
  code     anything else, including code followed by a trailing comment

Block comments may span lines; an unterminated block comment runs to the
end of the file.  The scanner has no string-literal awareness, so comment
markers inside string constants are treated as comment starts.  Sentinel
comments carrying `SLOC-REGION:<name>` or `SLOC-END` delimit named regions
that are tallied separately.  Markers are only honored on comment lines;
the marker lines themselves count toward the file but not the region.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

REGION_START = "SLOC-REGION:"
REGION_END = "SLOC-END"


@dataclass(frozen=True)
class CommentProfile:
    """Comment syntax for one language family."""

    name: str
    line_prefixes: tuple[str, ...]
    block_delims: tuple[tuple[str, str], ...]
    suffixes: tuple[str, ...]


PROFILES = {
    "python": CommentProfile(
        name="python",
        line_prefixes=("#",),
        block_delims=(),
        suffixes=(".py", ".pyx", ".pxd", ".pxi"),
    ),
    "c": CommentProfile(
        name="c",
        line_prefixes=("//",),
        block_delims=(("/*", "*/"),),
        suffixes=(".c", ".h", ".cc", ".cpp", ".hpp", ".cxx"),
    ),
    "rust": CommentProfile(
        name="rust",
        line_prefixes=("//",),
        block_delims=(("/*", "*/"),),
        suffixes=(".rs",),
    ),
}


@dataclass
class LineCounts:
    """Tally of code, comment, and blank lines."""

    code: int = 0
    comment: int = 0
    blank: int = 0

    @property
    def total(self) -> int:
        return self.code + self.comment + self.blank

    def __add__(self, other: "LineCounts") -> "LineCounts":
        return LineCounts(
            code=self.code + other.code,
            comment=self.comment + other.comment,
            blank=self.blank + other.blank,
        )

    def add(self, kind: str) -> None:
        setattr(self, kind, getattr(self, kind) + 1)

    def as_dict(self) -> dict:
        return {"code": self.code, "comment": self.comment, "blank": self.blank}


@dataclass
class FileSloc:
    """Per-file counts; error is set (and counts zeroed) for unreadable files."""

    path: str
    counts: LineCounts = field(default_factory=LineCounts)
    regions: dict = field(default_factory=dict)
    error: str | None = None

    def as_dict(self) -> dict:
        out = {"path": self.path, **self.counts.as_dict()}
        if self.regions:
            out["regions"] = {k: v.as_dict() for k, v in sorted(self.regions.items())}
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class SlocReport:
    """Aggregate of per-file counts plus merged region totals."""

    files: list = field(default_factory=list)
    totals: LineCounts = field(default_factory=LineCounts)
    regions: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "files": [f.as_dict() for f in self.files],
            "totals": self.totals.as_dict(),
            "regions": {k: v.as_dict() for k, v in sorted(self.regions.items())},
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent)


def classify_line(line: str, profile: CommentProfile, in_block: int | None):
    """Classify one line; returns (kind, in_block).

    in_block is None outside block comments, otherwise the index into
    profile.block_delims of the open block.  kind is 'blank', 'comment',
    or 'code'.
    """
    if not line.strip():
        return "blank", in_block
    has_code = False
    i = 0
    length = len(line)
    while i < length:
        if in_block is not None:
            close = profile.block_delims[in_block][1]
            idx = line.find(close, i)
            if idx < 0:
                i = length
            else:
                i = idx + len(close)
                in_block = None
            continue
        ch = line[i]
        if ch.isspace():
            i += 1
            continue
        if any(line.startswith(p, i) for p in profile.line_prefixes):
            i = length
            continue
        opened = False
        for k, (open_tok, _close_tok) in enumerate(profile.block_delims):
            if line.startswith(open_tok, i):
                in_block = k
                i += len(open_tok)
                opened = True
                break
        if opened:
            continue
        has_code = True
        i += 1
    return ("code" if has_code else "comment"), in_block


def count_text(text: str, profile: CommentProfile) -> tuple[LineCounts, dict]:
    """Count a source text; returns (counts, region counts)."""
    counts = LineCounts()
    regions: dict[str, LineCounts] = {}
    active: str | None = None
    in_block: int | None = None
    for line in text.splitlines():
        kind, in_block = classify_line(line, profile, in_block)
        counts.add(kind)
        if kind == "comment" and REGION_START in line:
            tag = line.split(REGION_START, 1)[1].split()
            active = tag[0] if tag else ""
            regions.setdefault(active, LineCounts())
        elif kind == "comment" and REGION_END in line:
            active = None
        elif active is not None:
            regions[active].add(kind)
    return counts, regions


def _iter_source_files(paths, profile: CommentProfile):
    """Expand paths: files are taken as-is, directories walked for suffixes."""
    for path in paths:
        if os.path.isdir(path):
            for root, _dirs, names in os.walk(path):
                for fname in sorted(names):
                    if fname.endswith(profile.suffixes):
                        yield os.path.join(root, fname)
        else:
            yield os.fspath(path)


def count_sloc(paths, profile: CommentProfile | str) -> SlocReport:
    """Count SLOC for files and directory trees under one comment profile.

    Unreadable files produce a FileSloc carrying an error string; the run
    continues and the file contributes nothing to the totals.
    """
    if isinstance(profile, str):
        try:
            profile = PROFILES[profile]
        except KeyError:
            raise ValueError(
                f"unknown profile {profile!r}; expected one of {sorted(PROFILES)}"
            ) from None
    report = SlocReport()
    for path in _iter_source_files(paths, profile):
        entry = FileSloc(path=str(path))
        try:
            with open(path, "rb") as fh:
                text = fh.read().decode("utf-8", errors="replace")
        except OSError as exc:
            entry.error = str(exc)
            report.files.append(entry)
            continue
        entry.counts, entry.regions = count_text(text, profile)
        report.files.append(entry)
        report.totals = report.totals + entry.counts
        for name, sub in entry.regions.items():
            report.regions[name] = report.regions.get(name, LineCounts()) + sub
    return report
