"""The genus-3 non-orientable mapping class groups in the built-in catalog.

Loads each entry, checks that the action on homology respects every
relation, and computes the twisted first homology together with the images
of the named cycles.
"""

from twisthom import catalog, class_of, h0, h1
from twisthom.homology import format_combination

for name in ("n32", "n3p2"):
    entry = catalog.load(name)
    pres, rep = entry.presentation, entry.representation
    print(f"== {name}: {len(pres.generators)} generators, {len(pres.relations)} relations")
    print("   ", entry.notes[0])
    res = h1(pres, rep)
    print(f"    cycle lattice rank {res.kernel_rank}, "
          f"{len(res.relation_vectors)} relation vectors")
    print(f"    H0 = {h0(pres, rep)}   H1 = {res.group}")
    for label in entry.h1_generators:
        cls = class_of(res, label)
        print(f"      {label:16s} -> {cls}  order {cls.order()}")

entry = catalog.load("n32")
res = h1(entry.presentation, entry.representation)
print("\nsome vanishing classes in n32:")
for text in ("u[1] + u[2]", "b3[1]", "d1[4]", "b1[1] - a1[4] - u[4] - d1[1]"):
    print(f"   {text:30s} {class_of(res, text)}")

print("\nfirst three cycle-lattice basis vectors:")
for k in range(3):
    print("  ", format_combination(res.kernel_basis.col(k), res.basis))
