"""Regenerate ``_presentation_table.py`` from the mirror elimination.

Run ``python -m sympcoh.derive_presentation`` after changing the mirror
code; the test suite fails if the frozen table and the live elimination
disagree.
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from .geometry import grid
from .mirror import eliminate_critical_locus
from .novikov import format_rational

log = logging.getLogger(__name__)

MAX_M = 12

HEADER = '''"""Frozen QH^*(O(-k) -> CP^m) presentations ``x^(m+1) = u * T * x^k``.

Generated by ``python -m sympcoh.derive_presentation``; do not edit.
Each unit ``u`` comes from eliminating the critical locus of the mirror
superpotential, where ``z_(m+1)^(m+1-k) = u * T``.
"""

from fractions import Fraction

MAX_M = {max_m}

UNITS = {{
'''


def derive(max_m: int = MAX_M) -> dict[tuple[int, int], str]:
    table = {}
    for g in grid(max_m):
        rel = eliminate_critical_locus(g)
        table[(g.m, g.k)] = format_rational(rel.unit)
        log.info("m=%d k=%d: %s  (degree %d)", g.m, g.k, rel, rel.degree)
    return table


def render(table: dict[tuple[int, int], str], max_m: int = MAX_M) -> str:
    lines = [HEADER.format(max_m=max_m)]
    for (m, k), u in sorted(table.items()):
        lines.append(f'    ({m}, {k}): Fraction("{u}"),\n')
    lines.append("}\n")
    return "".join(lines)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=MAX_M)
    parser.add_argument("--out", type=Path, default=Path(__file__).with_name("_presentation_table.py"))
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    args.out.write_text(render(derive(args.max_m), args.max_m))
    log.info("wrote %s", args.out)


if __name__ == "__main__":
    main()
