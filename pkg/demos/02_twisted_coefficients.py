"""H0 and H1 of small groups with trivial and twisted coefficients."""

from twisthom import Representation, abelianization, h0, h1, parse_presentation
from twisthom.intlat import IntMatrix
from twisthom.representation import trivial_representation

# Trivial rank-1 coefficients: H1 is the abelianization.
for text in ("generators: x\nrel: x^4 = 1\n",
             "generators: x y\nrel: x y x = y x y\n",
             "generators: a b\nrel: a^2 = 1\nrel: b^3 = 1\nrel: (a b)^5 = 1\n"):
    pres = parse_presentation(text)
    G = h1(pres, trivial_representation(pres)).group
    print(f"{'; '.join(pres.format_relation(r) for r in pres.relations):48s} H1 = {G}"
          f"   (abelianization {abelianization(pres)})")

# The infinite cyclic group acting on Z by -1.
pres = parse_presentation("generators: t\n")
sign = Representation(("t",), (IntMatrix.from_rows([[-1]]),))
print("\nZ acting by -1:  H0 =", h0(pres, sign), "  H1 =", h1(pres, sign).group)

# The Klein bottle group a b a^-1 = b^-1, with a acting on Z^2 by a swap.
pres = parse_presentation("generators: a b\nrel: a b a^-1 = b^-1\n")
swap = Representation(("a", "b"), (IntMatrix.from_rows([[0, 1], [1, 0]]), IntMatrix.identity(2)))
res = h1(pres, swap)
print("Klein bottle, swap action: H0 =", h0(pres, swap), "  H1 =", res.group,
      f"  (cycle lattice rank {res.kernel_rank})")
