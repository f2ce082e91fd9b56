"""Searching for flows on small spaces.

Any flow on a finite space is a homomorphism from the real line into a finite
group of maps.  The real line is divisible and a finite group has no nontrivial
divisible subgroup, so the only flow is the trivial one.  The search below
confirms this over a pool of rational breakpoints.
"""
import time

from alexandroff import Variant, build_hyperspace, discrete_space, is_T0, is_trivial, search_flows
from alexandroff.enumeration import enumerate_topologies

pool = ["-1", "-1/2", "0", "1/2", "1"]

start = time.perf_counter()
for n in (1, 2, 3):
    spaces = [s for s in enumerate_topologies(n) if is_T0(s)]
    found = [search_flows(s, pool, 2, homeo_only=True) for s in spaces]
    ok = all(len(f) == 1 and is_trivial(f[0]) for f in found)
    print(f"{len(spaces)} T0 spaces on {n} points: only trivial flows = {ok}")

h = build_hyperspace(discrete_space((1, 2, 3)), Variant.LOWER)
found = search_flows(h.space, pool, 2, homeo_only=True)
print(f"lower hyperspace on 3 points ({h.space.n} points): {len(found)} flow(s), trivial = {is_trivial(found[0])}")

# non-T0 spaces admit nothing more either
pair = next(s for s in enumerate_topologies(2) if not is_T0(s))
found = search_flows(pair, pool, 1)
print("indiscrete pair, all self-maps:", len(found), "flow(s)")
print(f"{time.perf_counter() - start:.2f}s")
