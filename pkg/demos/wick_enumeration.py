#!/usr/bin/env python3
"""Ground truth by exhaustion: enumerate every Wick contraction at small order.

The order-m operator string has 2m+1 slots per side; every bijection from
annihilation to creation slots is visited, classified by connectivity of
the induced multigraph, and grouped into orbits of the (2m)!! symmetry
(vertex relabelings times primed/unprimed point swaps).  The counts land
exactly on what the formulas predict, with no formula consulted here.

Run: python3 demos/wick_enumeration.py
"""

from feyncount import (
    arques_walsh,
    bubble_diagrams,
    connected_recurrence,
    enumerate_matchings,
    enumerate_vacuum_matchings,
    export_diagram,
    orbit_census,
    total_diagrams,
)


def main():
    print("Exhaustive enumeration versus the formulas:\n")
    for m in range(1, 4):
        census = enumerate_matchings(m)
        vacuum = enumerate_vacuum_matchings(m)
        print(f"order {m}:")
        print(f"  pairings visited   {census.total:>6}   formula (2m+1)! = {total_diagrams(m)}")
        print(f"  connected          {census.connected:>6}   recurrence      = {connected_recurrence(m)}")
        print(f"  vacuum pairings    {vacuum:>6}   formula (2m)!   = {bubble_diagrams(m)}")
        orbits = orbit_census(m)
        print(f"  symmetry orbits    {orbits.orbit_count:>6}   arques-walsh    = {arques_walsh(m)}")
        print(f"  orbit size histogram: {orbits.orbit_sizes}")
        print()

    print("The two distinct order-1 diagrams, as DOT multigraphs:\n")
    for diagram in orbit_census(1).representatives:
        print(export_diagram(diagram))


if __name__ == "__main__":
    main()
