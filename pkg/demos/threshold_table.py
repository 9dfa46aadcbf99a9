"""Tabulate clique-count and spectral thresholds for 1-factors.

Shows which branch of max{phi(n,r,delta+1), phi(n,r,n/2-1)} wins, and the
spectral threshold with both radicand constants (23 as usually quoted, 46
from substituting the edge threshold into the minimum-degree bound).

Run: python3 demos/threshold_table.py
"""

from __future__ import annotations

from spanfactor.extremal import clique_threshold_1f_terms, phi, spectral_threshold_1f, threshold_winner
from spanfactor.spectral import min_degree_bound


def main() -> None:
    print(" n  r  delta  phi(delta+1)  phi(n/2-1)  winner")
    for n in (12, 16, 24):
        for r in (2, 3):
            for delta in (1, 2, 3):
                terms = clique_threshold_1f_terms(n, r, delta)
                side = ("delta+1", "n/2-1")[threshold_winner(terms)]
                print(f"{n:>2} {r:>2} {delta:>6} {terms[0]:>13} {terms[1]:>11}  {side}")

    print("\n n  delta  c=23          c=46          bound at e=phi(n,2,delta+1)")
    for delta in (1, 2, 3):
        for n in (6 * delta + 10, 6 * delta + 20, 100):
            n += n % 2
            direct = min_degree_bound(n, phi(n, 2, delta + 1), delta)
            print(f"{n:>3} {delta:>5}  {spectral_threshold_1f(n, delta):<13.9f} "
                  f"{spectral_threshold_1f(n, delta, corrected=True):<13.9f} {direct:.9f}")


if __name__ == "__main__":
    main()
