"""Rewriting a presentation on another generating set.

The uppercase presentation is carried to the lowercase generators through
``dictionary.map``; each rewritten relation is then compared under the
homology action.  Passing is necessary, not sufficient, for the rewriting to
be correct.
"""

from twisthom import catalog, h1
from twisthom.words import format_word

gens = catalog.load("n32").presentation.generators
report = catalog.verify_szep_consistency()
for check in report[:8]:
    print(f"{'ok' if check.ok else 'FAIL':4s} ({check.label}) "
          f"{format_word(check.lhs, gens)} = {format_word(check.rhs, gens)}")
print(f"... {sum(c.ok for c in report)}/{len(report)} relations consistent")

szep = catalog.load("n32-szep")
print("H1 on the uppercase generators:", h1(szep.presentation, szep.representation).group)
