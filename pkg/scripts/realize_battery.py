"""Realize every group in a battery and report poset sizes and timings."""

import time

from finmod.mcg import homeo_group
from finmod.perms import group_iso
from finmod.realize import builtin_group, realize_group, regular_representation
from finmod.space import order_topology

BATTERY = ["trivial", "C2", "C3", "C4", "klein4", "C5", "C6", "S3", "C7", "C8", "D4",
           "C9", "C10", "D5", "C12", "D6", "S4"]


def main():
    for name in BATTERY:
        g = builtin_group(name)
        t = time.perf_counter()
        poset = realize_group(g, verify=False)
        homeo = homeo_group(order_topology(poset), max_points=None)
        ok = group_iso(homeo, regular_representation(g))
        print(f"{name:>8}  |G|={g.order:<3} poset size {poset.n:<5} |Homeo|={homeo.order:<3} "
              f"iso={ok}  {time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
