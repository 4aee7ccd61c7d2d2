"""Enumerate low-genus PSL2/PGL2-Galois Belyi curves with finite order triple.

The Hurwitz bound #Aut(X) <= 84(g-1) caps the group order, hence the field
size q; for each surviving (kind, q) the element orders of the group leave
finitely many hyperbolic order triples with integral genus in range, and a
brute-force class-triple search decides which are realized by a generating
triple.  Rows carry the Borel-quotient genus and the field columns of the
reference tabulation.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement

from sympy import factorint

from ._tabledata import arithmetic_flag
from .congruence import _group_search_data, genus_of_quotient, group_generator_triple
from .errors import TridentError, guard_exceeded
from .fields import D_pprime, E_field, F_field
from .projective import group_label, group_order, pgl2_order, psl2_order
from .triangle import genus_from_order, is_hyperbolic

_GMAX_CAP = 101

TSV_COLUMNS = ("g", "triple", "group", "arithmetic", "g0", "F", "E", "D")


@dataclass(frozen=True)
class CensusRow:
    g: int
    triple: tuple[int, int, int]
    group_kind: str
    group_label: str
    q: int
    arithmetic: str
    genus0: int
    field_F: str
    field_E: str
    field_D: str

    def sort_key(self):
        return (self.g, self.triple, self.group_label)

    def tsv_cells(self) -> tuple[str, ...]:
        return (
            str(self.g),
            "(%d,%d,%d)" % self.triple,
            self.group_label,
            self.arithmetic,
            str(self.genus0),
            self.field_F,
            self.field_E,
            self.field_D,
        )

    def to_json_dict(self) -> dict:
        return {
            "g": self.g,
            "triple": list(self.triple),
            "group": {
                "kind": self.group_kind,
                "label": self.group_label,
                "q": self.q,
                "order": group_order(self.group_kind, self.q),
            },
            "arithmetic": self.arithmetic,
            "g0": self.genus0,
            "fields": {"F": self.field_F, "E": self.field_E, "D": self.field_D},
        }


def hurwitz_group_bound(g_max: int) -> int:
    """Largest deck group order a curve of genus g_max admits."""
    return 84 * (g_max - 1)


def _char(q: int) -> int:
    ((p, _),) = factorint(q).items()
    return p


def _candidate_groups(bound: int) -> list[tuple[str, int]]:
    """(kind, q) pairs with group order within the bound.  Even q appears
    once: the two projective kinds coincide there."""
    out = []
    q = 2
    # q(q^2-1)/2 underestimates both group orders and grows monotonically,
    # so it is the safe loop bound (psl2_order itself dips at even q)
    while q * (q * q - 1) // 2 <= bound:
        if len(factorint(q)) == 1 and psl2_order(q) <= bound:
            out.append(("PSL2", q))
            if q % 2 == 1 and pgl2_order(q) <= bound:
                out.append(("PGL2", q))
        q += 1
    return out


def _rows_for_group(kind: str, q: int, g_max: int) -> list[CensusRow]:
    _, _, _, _, _, _, by_order = _group_search_data(kind, q)
    orders = sorted(o for o in by_order if o >= 2)
    n = group_order(kind, q)
    p = _char(q)
    label = group_label(kind, q)
    rows = []
    for t in combinations_with_replacement(orders, 3):
        if not is_hyperbolic(t):
            continue
        try:
            g = genus_from_order(t, n)
        except TridentError:
            continue  # ramification data not integral for this group order
        if not 2 <= g <= g_max:
            continue
        gen = group_generator_triple(kind, q, t)
        if gen is None:
            continue
        rows.append(
            CensusRow(
                g=g,
                triple=t,
                group_kind=kind,
                group_label=label,
                q=q,
                arithmetic=arithmetic_flag(t, label),
                genus0=genus_of_quotient(gen, "Borel"),
                field_F=F_field(t).pretty(),
                field_E=E_field(t).pretty(),
                field_D=D_pprime(t, p).fixed_field_of_frobenius(p).pretty(),
            )
        )
    return rows


def _thread_count() -> int:
    raw = os.environ.get("TRIDENT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def census(g_max: int) -> list[CensusRow]:
    """All census rows with 2 <= g <= g_max, sorted by (g, triple, tag)."""
    if not isinstance(g_max, int) or isinstance(g_max, bool) or g_max < 2:
        raise TridentError(
            "guard_exceeded",
            f"census genus bound must be an integer >= 2, got {g_max!r}",
            g_max=g_max,
        )
    if g_max > _GMAX_CAP:
        raise guard_exceeded("census genus bound", g_max, _GMAX_CAP)
    groups = _candidate_groups(hurwitz_group_bound(g_max))
    threads = _thread_count()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda kq: _rows_for_group(kq[0], kq[1], g_max), groups))
    else:
        chunks = [_rows_for_group(kind, q, g_max) for kind, q in groups]
    rows = [row for chunk in chunks for row in chunk]
    rows.sort(key=CensusRow.sort_key)
    assert len({r.sort_key() for r in rows}) == len(rows), "rows are unique"
    return rows


def census_tsv(rows: list[CensusRow], header: bool = True) -> str:
    lines = ["\t".join(TSV_COLUMNS)] if header else []
    lines.extend("\t".join(row.tsv_cells()) for row in rows)
    return "\n".join(lines) + "\n"
