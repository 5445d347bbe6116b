"""Faber polynomials of weight 14 expanded in the matching Atkin-like family.

Run: python demos/faber_expansions.py
"""

from atkinlike.faber import FABER_ROUTES, c2_formula, expansion_coeffs, faber_poly, faber_top_coeffs


def main():
    print("F_{14,n} by each route:")
    for n in range(4):
        polys = {r: faber_poly(14, n, r).poly.to_text() for r in FABER_ROUTES}
        same = len(set(polys.values())) == 1
        print(f"  n={n}: {polys['genfunc']:<40} routes agree: {same}")

    print("\nomega_{14,n}(l), rows n, columns l = -1..3:")
    for n in range(5):
        E = expansion_coeffs("omega", 14, n)
        print("  " + "  ".join(f"{str(E[l]):>12}" for l in range(-1, 4)))

    print("\nsecond coefficient of F_{0,l} against the quadratic closed form:")
    for ell in range(2, 6):
        _, c2 = faber_top_coeffs(0, ell)
        print(f"  l={ell}: {str(c2):>10}  formula with 276768: {str(c2_formula(0, ell)):>10}"
              f"  with 26768: {str(c2_formula(0, ell, 26768)):>10}")


if __name__ == "__main__":
    main()
