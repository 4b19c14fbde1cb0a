"""EW tableaux as acyclic orientations and minimal recurrent sandpiles.

    python demos/sandpile_tour.py [shape]     e.g. 3,3,1
"""

import sys

from ewtableaux import sandpile as sp
from ewtableaux.bijections import psi
from ewtableaux.core import Family, FerrersShape, ferrers_graph, serialize_line
from ewtableaux.tableaux import all_fillings, enumerate_tableaux


def main(text="3,3,1"):
    shape = FerrersShape.of(text)
    g = ferrers_graph(shape)
    print(f"shape {shape}: {len(g.vertices)} vertices, {len(g.edges)} edges, sink 0")
    print(f"degrees of 1..n: {sp.degrees(g)}")
    print()

    # every filling is an orientation; EW fillings are the acyclic ones with sink 0
    fills = [t for t in all_fillings(shape, Family.EW) if all(t.cells[0])]
    good = [t for t in fills if sp.is_unique_sink_acyclic(sp.orientation_of(t))]
    ews = list(enumerate_tableaux(shape, Family.EW))
    print(f"{len(fills)} fillings with an all-1 top row, {len(good)} acyclic with unique sink 0")
    print(f"{len(ews)} EW tableaux")
    bad = next((t for t in fills if sp.has_cycle(sp.orientation_of(t))), None)
    if bad is not None:
        print(f"a cyclic one: {serialize_line(bad)}, cycle {sp.find_directed_cycle(sp.orientation_of(bad))}")
    print()

    # grains counted off the filling are exactly the minimal recurrent configurations
    configs = {sp.config_of(e): e for e in ews}
    mrc = sp.enumerate_minimal_recurrent(g)
    print(f"minimal recurrent configurations found by brute force: {len(mrc)}")
    print(f"all of them come from EW tableaux: {set(configs) == mrc}")
    for c, e in sorted(configs.items(), key=lambda kv: kv[0].grains)[:5]:
        order = "".join(map(str, psi(e)))
        print(f"  {serialize_line(e):<24} config {sp.serialize_config(c):<28} topple order {order}")
    print()

    e = ews[0]
    c = sp.config_of(e)
    out, odo = sp.stabilize(g, sp.tilde(g, c))
    print(f"adding a grain to each column of {sp.serialize_config(c)} and stabilizing")
    print(f"  returns {sp.serialize_config(out)} with odometer {odo}")


if __name__ == "__main__":
    main(*sys.argv[1:2])
