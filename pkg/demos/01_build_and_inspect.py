"""Build tournaments, serialize them, and inspect their structure.

Walks through the construction toolkit: transitive and rotational
tournaments, quadratic-residue tournaments, vertex replacement, the
.tour text format, strong-component decomposition, and exact
isomorphism via canonical forms.
"""

from __future__ import annotations

from tourney import (
    canonical_form,
    compose,
    converse,
    format_tour,
    gen_named,
    gen_qr,
    gen_rlt,
    gen_transitive,
    is_isomorphic,
    is_strong,
    parse_tour,
    strong_decomposition,
    vertices_of,
)


def main() -> None:
    print("== constructions ==")
    tt4 = gen_transitive(4)
    rlt7 = gen_rlt(7)
    qr7 = gen_qr(7)
    print("transitive order 4 rows:", tt4.out_rows)
    print("rotational order 7 out-degrees:",
          [rlt7.out_degree(v) for v in rlt7.vertices()])
    print("quadratic-residue order 7 equals named dr7:",
          qr7 == gen_named("dr7"))

    print()
    print("== text format ==")
    text = format_tour(gen_named("delta"))
    print(text, end="")
    print("round-trips:", parse_tour(text) == gen_named("delta"))

    print()
    print("== vertex replacement ==")
    delta = gen_named("delta")
    doubled = compose(delta, [gen_transitive(2)] * 3)
    print("3-cycle of dominated pairs has order", doubled.n,
          "and is strong:", is_strong(doubled))

    print()
    print("== strong components ==")
    # a transitive head followed by a strong tail
    mixed = compose(gen_transitive(3), [gen_transitive(1),
                                        gen_transitive(1), delta])
    decomp = strong_decomposition(mixed)
    print("component vertex sets:",
          [vertices_of(m) for m in decomp.components])
    print("(components are listed in domination order)")

    print()
    print("== canonical forms ==")
    print("rlt7 canonical key:", canonical_form(rlt7).hex())
    print("rlt7 isomorphic to its converse:",
          is_isomorphic(rlt7, converse(rlt7)))
    print("rlt7 isomorphic to qr7:", is_isomorphic(rlt7, qr7))


if __name__ == "__main__":
    main()
