"""Tour of the extremal families and their exact minima.

Generates each named construction, solves it exactly, and shows how the
minimum sits against the (2*delta - 1)/(2*delta) fraction of the order.
"""

from iocodes import (
    check_bound,
    gen_reduced_subdivided_star,
    gen_subcubic_gp,
    gen_subdivided_star,
    gen_tight_tree_pair,
    is_io_code,
    solve,
    solve_with_budget,
)


def show(name, g, delta, expected):
    result = solve(g)
    status = check_bound(g.n, result.gamma, delta, is_exceptional_star=(expected == "star"))
    print(f"{name:24s} n={g.n:3d}  gamma={result.gamma:3d}  "
          f"2*{delta}*gamma={2 * delta * result.gamma:4d} vs (2*{delta}-1)*n={(2 * delta - 1) * g.n:4d}  "
          f"[{status.value}]")


def main():
    print("Subdivided stars: the one exceptional shape, needing 2d of 2d+1 vertices")
    for d in (3, 4, 5):
        g, _ = gen_subdivided_star(d)
        show(f"subdivided star d={d}", g, d, "star")

    print("\nReduced subdivided stars meet the bound with equality")
    for d in (3, 4, 5):
        g, _ = gen_reduced_subdivided_star(d)
        show(f"reduced star d={d}", g, d, None)

    print("\nBridged star pairs: equality again, at every degree bound")
    for d in (3, 4, 5):
        g, _ = gen_tight_tree_pair(d)
        show(f"bridged pair d={d}", g, d, None)

    print("\nSubcubic gadget cycles: arbitrarily large graphs needing 5/6 of n")
    for p in (3, 5, 6):
        g, spec = gen_subcubic_gp(p)
        ref = spec.reference_code
        print(f"gadget cycle p={p}: n={g.n}, all-but-pendants code of size {len(ref)} "
              f"verifies: {is_io_code(g, ref).ok}")
    g5, _ = gen_subcubic_gp(5)
    print(f"and nothing smaller exists at p=5: size-24 search returns "
          f"{solve_with_budget(g5, 24)}")


if __name__ == "__main__":
    main()
