"""OEIS b-file parsing and comparison against generated sequences."""

from __future__ import annotations

import urllib.request
from dataclasses import dataclass
from importlib import resources

from kpell.sequences import Family, sequence_range

BFILE_URL = "https://oeis.org/{id}/b{num}.txt"


@dataclass(frozen=True)
class OeisMapping:
    """Identification of an OEIS entry with one of the two families.

    ``offset`` is the OEIS index holding the family's ``n = 0`` term, so OEIS
    index ``i`` corresponds to ``n = i - offset``.
    """

    oeis_id: str
    family: Family
    k: int
    offset: int = 0


# Offsets are recorded as 0 for every entry; they have not yet been checked
# against downloaded b-files (see `kpell oeis --fetch --save`).
MAPPINGS: dict[str, OeisMapping] = {
    m.oeis_id: m
    for m in (
        OeisMapping("A002605", Family.KPELL, 2),
        OeisMapping("A015518", Family.KPELL, 3),
        OeisMapping("A085449", Family.KPELL, 4),
        OeisMapping("A002532", Family.KPELL, 5),
        OeisMapping("A080040", Family.KPELL_LUCAS, 2),
        OeisMapping("A102345", Family.KPELL_LUCAS, 3),
        OeisMapping("A087131", Family.KPELL_LUCAS, 4),
        OeisMapping("A127226", Family.KPELL_LUCAS, 6),
    )
}


class BFileError(ValueError):
    """A b-file could not be parsed."""


def normalize_id(oeis_id: str) -> str:
    s = oeis_id.strip().upper()
    if s.startswith("A"):
        s = s[1:]
    if not s.isdigit():
        raise ValueError(f"not an OEIS A-number: {oeis_id!r}")
    return f"A{int(s):06d}"


def parse_bfile(text: str) -> dict[int, int]:
    """Parse ``index value`` lines; blank lines and ``#`` comments are ignored."""
    terms: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) < 2:
            raise BFileError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            idx, val = int(fields[0]), int(fields[1])
        except ValueError:
            raise BFileError(f"line {lineno}: non-integer field in {raw!r}") from None
        if idx in terms:
            raise BFileError(f"line {lineno}: duplicate index {idx}")
        terms[idx] = val
    return terms


def bundled_bfile(oeis_id: str) -> str | None:
    """Text of the b-file shipped with the package, or None if absent."""
    num = normalize_id(oeis_id)[1:]
    res = resources.files("kpell").joinpath("data", "oeis", f"b{num}.txt")
    if not res.is_file():
        return None
    return res.read_text(encoding="ascii")


def fetch_bfile(oeis_id: str, timeout: float = 30.0) -> str:
    oid = normalize_id(oeis_id)
    url = BFILE_URL.format(id=oid, num=oid[1:])
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read().decode("ascii")


@dataclass(frozen=True)
class OeisComparison:
    mapping: OeisMapping
    requested: int
    checked: int
    first_mismatch: int | None = None
    expected: int | None = None
    found: int | None = None
    note: str = ""

    @property
    def matched(self) -> bool:
        return self.first_mismatch is None and self.checked == self.requested > 0


def _aligned(terms: dict[int, int], family: Family, k: int, offset: int, n_check: int):
    idxs = [i for i in sorted(terms) if i - offset >= 0][:n_check]
    if not idxs:
        return []
    ns = [i - offset for i in idxs]
    seq = sequence_range(family, k, 0, max(ns))
    return [(i, seq[n], terms[i]) for i, n in zip(idxs, ns)]


def compare(mapping: OeisMapping, terms: dict[int, int], n_check: int) -> OeisComparison:
    """Compare the first ``n_check`` aligned b-file terms with the family.

    A mismatch is never corrected automatically; if the data would match
    under a nearby offset, that is mentioned in ``note``.
    """
    rows = _aligned(terms, mapping.family, mapping.k, mapping.offset, n_check)
    if len(rows) < n_check:
        note = f"b-file provides only {len(rows)} of {n_check} requested terms"
    else:
        note = ""
    for i, expected, found in rows:
        if expected != found:
            for shift in (-2, -1, 1, 2):
                alt = _aligned(terms, mapping.family, mapping.k, mapping.offset + shift, n_check)
                if alt and all(e == f for _, e, f in alt):
                    note = f"possible offset shift: data matches with offset={mapping.offset + shift}"
                    break
            return OeisComparison(mapping, n_check, len(rows), i, expected, found, note)
    return OeisComparison(mapping, n_check, len(rows), note=note)
