"""From the moments L(j^n) to the Atkin-like polynomials and their continued fraction.

Run: python demos/moments_to_polynomials.py
"""

from atkinlike.atkin import atkin_poly
from atkinlike.functional import inner_product, moments, orthogonal_poly
from atkinlike.rogers import atkin_cf
from atkinlike.series import Poly


def main():
    ms = moments(6).moments
    print("moments L(j^n):", ", ".join(map(str, ms)))

    print("\nmonic orthogonal polynomials built from the moments alone:")
    for n in range(1, 4):
        P = orthogonal_poly(Poly([1]), n)
        print(f"  degree {n}: {P.to_text()}   (recursion gives the same: {P == atkin_poly(2, n)})")

    A1 = atkin_poly(2, 1)
    print(f"\nnorm (A_1, A_1) = {inner_product(A1, A1)}")
    print(f"(A_1, A_2) = {inner_product(A1, atkin_poly(2, 2))}")

    cf = atkin_cf(4)
    print("\nS-fraction e_n:", ", ".join(str(x) for x in cf.e))
    print("J-fraction alpha_n:", ", ".join(str(x) for x in cf.alpha))
    print("J-fraction beta_n:", ", ".join(str(x) for x in cf.beta))
    print("alpha_n = e_{2n-2} + e_{2n-1} and beta_n = e_{2n-1} e_{2n}:", cf.consistent())


if __name__ == "__main__":
    main()
