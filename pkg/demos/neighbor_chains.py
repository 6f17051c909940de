"""Walking between lattices one prime index at a time.

Z + Z*x and Z + Z*y (same field) are p-neighbors when one contains the
other with prime index p. Any two lattices are joined by a finite chain
of such steps, and scaling both ends by n reuses the very same primes.
"""

from quadcf import (
    chain_between,
    conductor_bounds_check,
    conductor_of_surd,
    field_data,
    make_surd,
    mobius,
    scale,
    scale_chain,
    unit_index_check,
)


def show(chain) -> None:
    for i, (p, direction) in enumerate(chain.steps):
        arrow = "down" if direction == "down" else "up  "
        print(f"  step {i + 1}: index {p} {arrow}  ->  {chain.nodes[i + 1]}")


def main() -> None:
    f = field_data(2)
    x = f.xD
    y = mobius(scale(x, 18), 1, 5, 7)  # (18*sqrt(2) + 5)/7
    print(f"from {x} to {y}:")
    chain = chain_between(x, y)
    show(chain)
    print("  primes used:", chain.primes())

    print()
    print("scaling both endpoints by 10 keeps every step prime:")
    scaled = scale_chain(chain, 10)
    show(scaled)

    print()
    print("conductors across single steps (each divides p times the other):")
    for p in (2, 3, 5):
        z = scale(x, p)
        lx, lz, ok = conductor_bounds_check(f, x, z, p)
        print(f"  p={p}: conductor {lx} -> {lz}, bound holds: {ok}")

    f5 = field_data(5)
    a = f5.xD
    b = scale(a, 5)
    l = unit_index_check(f5, a, b, 5)
    print()
    print(
        f"unit of the stabilizer of Z+Z*{a} first enters the stabilizer of "
        f"Z+Z*{b} at power {l} (bound p+1 = 6)"
    )
    print("conductors:", conductor_of_surd(f5, a), "->", conductor_of_surd(f5, b))


if __name__ == "__main__":
    main()
