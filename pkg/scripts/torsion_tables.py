"""Print torsion values at t = 1 for every spin^c structure of a few small examples."""
from seifert_invariants.abelian_group import build_group, word_label
from seifert_invariants.seifert import SeifertData, brieskorn, normalize
from seifert_invariants.torsion import torsion_table

EXAMPLES = {
    "Sigma(2,3,7)": normalize(brieskorn(2, 3, 7)),
    "D4 quotient": SeifertData(-2, ((2, 1), (2, 1), (2, 1))),
    "Z/8": SeifertData(-2, ((2, 1), (2, 1), (3, 1))),
    "order 27": SeifertData(-2, ((3, 1), (3, 1), (3, 1))),
}

for name, s in EXAMPLES.items():
    G = build_group(s)
    rows = torsion_table(s, G)
    print(f"{name}: b={s.b} pairs={list(s.pairs)} |H|={s.h_order}")
    for g, value in rows:
        print(f"  {word_label(g.word):>14}  {value}")
    print(f"  {'sum':>14}  {sum(v for _, v in rows)}")
