"""Checking a candidate flow, axiom by axiom.

A candidate is a step schedule: one self-map per piece of the time line.  The
swap schedule (exchange two points away from t = 0) looks plausible on the
indiscrete pair, passes identity and continuity, and then breaks the group law.
"""
from alexandroff import (
    check_continuity,
    check_group_law,
    check_identity_at_zero,
    is_flow,
    swap_candidate,
    trivial_candidate,
    validate_space,
)

pair = validate_space(["x", "y"], [[], ["x", "y"]])
swap = swap_candidate(pair, "x", "y")

print("identity at 0:", check_identity_at_zero(swap).passed)
print("continuity:", check_continuity(swap).passed)
g = check_group_law(swap)
print("group law:", g.passed, "witness s =", g.witness["s"], "t =", g.witness["t"])
one = swap.map_at(1)
print("  phi_2 =", swap.map_at(2), " phi_1 o phi_1 =", tuple(one[v] for v in one))

# on the discrete pair the same schedule fails earlier, at continuity
discrete = validate_space(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])
verdict = is_flow(swap_candidate(discrete, "x", "y"))
print("discrete pair: first failure is", verdict.failed_axiom.value, verdict.witness)

print("trivial flow passes:", is_flow(trivial_candidate(pair)).passed)
