"""Reducing Atkin-like polynomials mod p recovers the supersingular polynomial.

Run: python demos/supersingular_reduction.py [p ...]
"""

import sys

from atkinlike.congruence import congruence_classes, reduce_poly_mod_p, supersingular_j, supersingular_poly


def show(p):
    ss = supersingular_poly(p)
    roots = ", ".join(f"{x}" if not y else f"{x}+{y}s" for x, y in supersingular_j(p))
    print(f"p = {p}: supersingular j = {roots}")
    print(f"  ss_p(X) = {ss.to_text()}")
    for name, f in congruence_classes(p).items():
        red = reduce_poly_mod_p(f, p)
        print(f"  {name:>5} mod p = {red.to_text():<30} {'ok' if red == ss else 'MISMATCH'}")


def main():
    primes = [int(a) for a in sys.argv[1:]] or [13, 37, 97]
    for p in primes:
        show(p)
    print("\n(s denotes a square root of the smallest non-residue mod p)")


if __name__ == "__main__":
    main()
