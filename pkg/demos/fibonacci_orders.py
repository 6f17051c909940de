"""Pisano periods are matrix orders, and they are usually near-maximal.

The Fibonacci recurrence matrix [[0,1],[1,1]] represents multiplication
by the golden ratio, so the period of Fibonacci numbers mod N equals the
order of that matrix mod N. For odd unramified primes the order is capped
by a split-type bound; this script measures how often the cap is hit.
"""

from quadcf import ScanConfig, artin_scan, artin_stats, field_data, mat_order_mod, phi


def main() -> None:
    f = field_data(5)
    M = phi(f, f.epsD)
    print("Pisano periods as matrix orders:")
    for n in (10, 100, 1000, 2**10):
        print(f"  pi({n}) = {mat_order_mod(M, n)}")

    print()
    recs = artin_scan(ScanConfig(d=5, sequence="primes", bound=500))
    print(f"{'p':>4} {'ord':>5} {'type':>9} {'maximal':>8}")
    for r in recs[:12]:
        mx = "-" if r.is_max is None else str(r.is_max).lower()
        print(f"{r.N:>4} {r.ord:>5} {r.split_type:>9} {mx:>8}")

    stats = artin_stats(recs)
    print()
    print(f"primes up to 500 hitting the maximal order: {stats['prime_max_density']:.3f}")
    for theta, dens in stats["densities"].items():
        print(f"density of p with ord >= p^{theta}: {dens:.3f}")
    print("small-order exceptions (ord < p^0.8):", stats["exceptions"] or "none")


if __name__ == "__main__":
    main()
