"""The family-file grammar shared by the CLI.

A file holds one or two families separated by a line containing only
"---".  Inside a family, blank lines separate generator blocks (one code
each); rows use '1' and '0', with '.' accepted as 0.  A family may open
with a header line "n=<int> s=<int>" which is validated against the
parsed shape; a header alone (s=0 rows) is only meaningful for the
`distance` command's zero-code input.
"""

from __future__ import annotations

import re

from .codes import LinearCode, from_text, zero_code
from .errors import ParseError
from .families import CodeFamily

__all__ = ["parse_families", "parse_generator_block"]

_HEADER_RE = re.compile(r"^\s*n\s*=\s*(\d+)(?:\s+s\s*=\s*(\d+))?\s*$")


def _split_sections(text: str) -> list[list[tuple[int, str]]]:
    sections: list[list[tuple[int, str]]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.strip() == "---":
            sections.append([])
        else:
            sections[-1].append((lineno, raw))
    return sections


def _parse_blocks(lines):
    """Group numbered lines into generator blocks; returns (header, blocks)."""
    header = None
    blocks: list[list[tuple[int, str]]] = []
    current: list[tuple[int, str]] = []
    for lineno, raw in lines:
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            if current:
                blocks.append(current)
                current = []
            continue
        m = _HEADER_RE.match(stripped)
        if m and header is None and not blocks and not current:
            header = (int(m.group(1)), int(m.group(2)) if m.group(2) else None, lineno)
            continue
        current.append((lineno, stripped))
    if current:
        blocks.append(current)
    return header, blocks


def _code_from_block(block) -> LinearCode:
    lengths = {len(text) for _, text in block}
    if len(lengths) > 1:
        raise ParseError("ragged generator rows", line=block[0][0])
    for lineno, text in block:
        if not set(text) <= set("01."):
            bad = next(ch for ch in text if ch not in "01.")
            raise ParseError(f"illegal character {bad!r}", line=lineno)
    return from_text([text for _, text in block])


def parse_families(text: str) -> list[CodeFamily]:
    """Parse one or two families from a family file's content."""
    sections = _split_sections(text)
    if len(sections) > 2:
        raise ParseError("more than two families in one file")
    families = []
    for lines in sections:
        header, blocks = _parse_blocks(lines)
        if not blocks:
            raise ParseError("family section contains no generator blocks")
        codes = [_code_from_block(b) for b in blocks]
        if header is not None:
            n, s, lineno = header
            if any(c.n != n for c in codes):
                raise ParseError(
                    f"header declares n={n} but a block has a different length",
                    line=lineno,
                )
            if s is not None and s != len(codes):
                raise ParseError(
                    f"header declares s={s} but found {len(codes)} blocks",
                    line=lineno,
                )
        try:
            families.append(CodeFamily(codes))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
    return families


def parse_generator_block(text: str) -> LinearCode:
    """Parse a single generator block (for the distance command).

    A header "n=<int>" with no rows denotes the zero code of that length.
    """
    sections = _split_sections(text)
    if len(sections) > 1:
        raise ParseError("expected a single generator block, found '---'")
    header, blocks = _parse_blocks(sections[0])
    if len(blocks) > 1:
        raise ParseError("expected a single generator block, found several")
    if not blocks:
        if header is None:
            raise ParseError("no generator rows and no n= header")
        return zero_code(header[0])
    code = _code_from_block(blocks[0])
    if header is not None and code.n != header[0]:
        raise ParseError(
            f"header declares n={header[0]} but rows have length {code.n}",
            line=header[2],
        )
    return code
