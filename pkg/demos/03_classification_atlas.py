"""Classify the named families and print a flag atlas.

Shows the fifteen structural flags for each named tournament in the
generator table: regularity and its refinements, the local transitivity
and local regularity hierarchy, and the positivity of the off-diagonal
common-dominator matrix.
"""

from __future__ import annotations

from tourney import classification_report, gen_named, gen_qr, gen_rlt

FAMILIES = [
    ("delta", gen_named("delta")),
    ("st4", gen_named("st4")),
    ("delta_tt2", gen_named("delta_tt2")),
    ("rlt7", gen_rlt(7)),
    ("qr7", gen_qr(7)),
    ("kz7", gen_named("kz7")),
    ("rlt9", gen_rlt(9)),
    ("delta_delta", gen_named("delta_delta")),
    ("prop2_a", gen_named("prop2_a")),
    ("prop2_b", gen_named("prop2_b")),
    ("qr11", gen_qr(11)),
]

SHORT = {
    "strong": "str", "transitive": "tt", "regular": "reg",
    "near_regular": "nreg", "doubly_regular": "dr",
    "nearly_doubly_regular": "ndr",
    "locally_transitive_plus": "lt+", "locally_transitive_minus": "lt-",
    "locally_transitive": "lt", "locally_regular_plus": "lr+",
    "locally_regular_minus": "lr-", "locally_regular": "lr",
    "rldr": "rldr", "rlndr": "rlndr", "aat_positive": "aat",
}


def main() -> None:
    header = f"{'name':12s} {'n':>2s}  " + " ".join(
        f"{s:>5s}" for s in SHORT.values())
    print(header)
    print("-" * len(header))
    for name, t in FAMILIES:
        rep = classification_report(t)
        cells = " ".join(f"{'x' if rep.flags[k] else '.':>5s}"
                         for k in SHORT)
        print(f"{name:12s} {rep.n:2d}  {cells}")
    print()
    print("x = flag holds, . = flag fails; columns follow the fixed")
    print("report order (see classification_report).")


if __name__ == "__main__":
    main()
