"""2-adic audits of the divisibility corollaries.

Each index identity writes the left side as a sum of h_r with explicit powers
of two; assuming the h_r are even integers, the smallest term valuation bounds
the guaranteed modulus.  One published claim (mod 32 in the 4k+2 family)
exceeds what that arithmetic yields, and the audit flags the gap instead of
papering over it.
"""

from anomcancel import divisibility_check


def main():
    print(f"{'corollary':>10} {'m':>2} {'k':>2} {'l':>2} {'implied':>10} {'claimed':>8} outcome")
    for cor in ("3.6", "3.8", "4.4", "4.5", "4.9", "4.10"):
        for m in (0, 1):
            a = divisibility_check(cor, m)
            implied = "empty sum" if a.implied_exponent is None else str(2 ** a.implied_exponent)
            print(f"{cor:>10} {m:>2} {a.k:>2} {a.l:>2} {implied:>10} {2 ** a.claimed_exponent:>8} {a.outcome}")
    print("\n(the mod-32 claim would need one extra factor of two beyond the even-h_r")
    print(" assumption; raising the assumed valuation closes it:)")
    a = divisibility_check("4.9", 0, assumed_v2_h=2)
    print(f"  4.9 with v2(h) >= 2: implied {2 ** a.implied_exponent} -> {a.outcome}")


if __name__ == "__main__":
    main()
