"""Spin^c verifications in both dimension families.

The line bundle contributes the weight-1 generator u; intermediate data lives
over the Gaussian rationals, and rendering in the standard basis (Pontryagin
classes and the first Chern class c = 2i*u) must produce purely real
coefficients.  That reality is asserted, not assumed.
"""

from anomcancel import build_P, make_setting, verify_theorem


def run(kind, tids, k, l):
    setting = make_setting(kind, k, l)
    print(f"\n== {kind}: dim {setting.dim}, auxiliary rank {2 * l} ==")
    p1 = build_P(setting, "P1")
    print("P1 constant coefficient, normalized:", p1.coefficient(0).to_text())
    print("                      standard basis:", p1.coefficient(0).to_standard_basis().to_text())
    for units in p1.exponents():
        std = p1.coefficient(units).to_standard_basis()
        assert std.is_real(), "standard-basis coefficients must be real"
    print("all P1 coefficients real in the standard basis: True")
    for tid in tids:
        report = verify_theorem(tid, k=k, l=l)
        print(f"identity {tid}: {report.status}")
        for r, h in enumerate(report.h):
            print(f"  h_{r} (standard) = {h.to_standard_basis().to_text()}")


if __name__ == "__main__":
    run("spinc4k", ("4.1", "4.2"), k=1, l=2)
    run("spinc4k2", ("4.6", "4.8"), k=1, l=1)
    run("spinc4k2", ("4.6", "4.8"), k=2, l=2)
