"""Walk one permutation through every tableau family and back.

    python demos/bijections_tour.py [perm]
"""

import sys

from ewtableaux import bijections as bij
from ewtableaux import permstat as ps
from ewtableaux.cli import render
from ewtableaux.core import Family


def show(title, t):
    print(f"{title} ({t.family}, shape {t.shape})")
    print(render(t))
    print()


def main(text="14367582"):
    p = ps.parse_perm(text)
    print(f"permutation {ps.format_perm(p)}")
    print(f"  descent bottoms   {sorted(ps.descent_bottoms(p))}")
    print(f"  excedance bottoms {sorted(ps.excedance_bottoms(p))}")
    print(f"  desexc            {ps.format_perm(ps.desexc(p))}")
    print()

    # EW: rows are the descent bottoms, and reading the filling gives p back
    ew = bij.psi_inverse(p, Family.EW)
    show("EW tableau read as p", ew)

    # Le tableau of the same shape, built straight from the EW filling
    le = bij.ew_to_le(ew)
    show("Le tableau paired with it", le)
    print(f"its pipe permutation is {ps.format_perm(bij.phi_le(le))}")
    back, pi = bij.le_to_ew(le)
    assert back == ew and pi == p
    print("walking paths back from the Le tableau recovers the EW tableau")
    print()

    # NEW tableaux: same shape as their Le partner
    new = bij.psi_inverse(p, Family.NEW)
    show("NEW tableau read as p", new)
    le_new = bij.new_to_le(new)
    assert le_new.shape == new.shape and bij.le_to_new(le_new)[0] == new
    show("its Le partner", le_new)

    # tree-like tableaux: two routes to EW that agree on the first letter
    tree = bij.le_to_tree(le)
    show("tree-like tableau of the Le tableau", tree)
    walk = bij.psi(bij.tree_to_ew_M(tree))
    via = bij.psi(bij.tree_to_ew_via_le(tree))
    print(f"dot walk gives {ps.format_perm(walk)}, path rule gives {ps.format_perm(via)}")
    print(f"they share a prefix of length {bij.common_prefix(tree)}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
