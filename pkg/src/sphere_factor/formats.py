"""Text formats for certificates and designs.

Certificate::

    FACTORIZATION family=simplex n=7 l=2 blocks=14
    BLOCK design 0 1 2 3
    0,1,2
    ...

Design::

    DESIGN v=8 k=4 t=3
    BLOCK 0 1 2 3
    ...

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

import re

from .designs import DesignInstance
from .errors import ParseError
from .factorize import Block, FactorizationCertificate
from .polytope import Face, Family, SkeletonSpec


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _header_fields(line: str, keyword: str, keys: list[str], lineno: int) -> dict[str, str]:
    parts = line.split()
    if not parts or parts[0] != keyword:
        raise ParseError(f"expected a {keyword} header", lineno)
    fields = {}
    for p in parts[1:]:
        m = re.fullmatch(r"(\w+)=(\S+)", p)
        if not m:
            raise ParseError(f"bad header field {p!r}", lineno)
        fields[m.group(1)] = m.group(2)
    if sorted(fields) != sorted(keys):
        raise ParseError(f"{keyword} header needs exactly the fields {', '.join(keys)}", lineno)
    return fields


def _int_field(fields, key, lineno) -> int:
    val = fields[key]
    if not val.isdigit():
        raise ParseError(f"{key} must be a non-negative integer, got {val!r}", lineno)
    return int(val)


def serialize_certificate(cert: FactorizationCertificate) -> str:
    spec = cert.spec
    lines = [f"FACTORIZATION family={spec.family.value} n={spec.n} l={spec.ell} blocks={len(cert.blocks)}"]
    for block in cert.blocks:
        lines.append(f"BLOCK {block.label}" if block.label else "BLOCK")
        lines.extend(f.encode() for f in sorted(block.faces))
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> FactorizationCertificate:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty certificate file")
    lineno, head = lines[0]
    fields = _header_fields(head, "FACTORIZATION", ["family", "n", "l", "blocks"], lineno)
    try:
        family = Family.parse(fields["family"])
        spec = SkeletonSpec(family, _int_field(fields, "n", lineno), _int_field(fields, "l", lineno))
    except ValueError as exc:
        raise ParseError(str(exc), lineno) from None
    declared = _int_field(fields, "blocks", lineno)

    blocks: list[Block] = []
    label: str | None = None
    faces: list[Face] | None = None
    for lineno, line in lines[1:]:
        if line == "BLOCK" or line.startswith("BLOCK "):
            if faces is not None:
                blocks.append(Block(tuple(faces), label))
            label = line[len("BLOCK"):].strip() or None
            faces = []
            continue
        if faces is None:
            raise ParseError("face line before the first BLOCK", lineno)
        try:
            faces.append(Face.parse(family, line))
        except ParseError as exc:
            raise ParseError(str(exc), lineno) from None
    if faces is not None:
        blocks.append(Block(tuple(faces), label))
    if len(blocks) != declared:
        raise ParseError(f"header declares {declared} blocks, file has {len(blocks)}", lines[0][0])
    return FactorizationCertificate(spec, tuple(blocks))


def serialize_design(d: DesignInstance) -> str:
    lines = [f"DESIGN v={d.v} k={d.k} t={d.t}"]
    lines.extend("BLOCK " + " ".join(str(p) for p in sorted(b)) for b in d.blocks)
    return "\n".join(lines) + "\n"


def parse_design(text: str) -> DesignInstance:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty design file")
    lineno, head = lines[0]
    fields = _header_fields(head, "DESIGN", ["v", "k", "t"], lineno)
    v, k, t = (_int_field(fields, key, lineno) for key in ("v", "k", "t"))
    blocks = []
    for lineno, line in lines[1:]:
        parts = line.split()
        if parts[0] != "BLOCK":
            raise ParseError(f"expected a BLOCK line, got {line!r}", lineno)
        if not all(p.isdigit() for p in parts[1:]):
            raise ParseError("block points must be non-negative integers", lineno)
        blocks.append(tuple(sorted(int(p) for p in parts[1:])))
    return DesignInstance(v, k, t, blocks)


def sniff(text: str) -> str | None:
    """``"certificate"``, ``"design"`` or ``None`` by the first content line."""
    for _, line in _content_lines(text):
        word = line.split()[0]
        return {"FACTORIZATION": "certificate", "DESIGN": "design"}.get(word)
    return None
