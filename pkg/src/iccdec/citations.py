"""The fixed enumeration of citable statements used in reason chains.

Every verdict's reason chain draws its labels from this table; nothing else
is citable.  The one-line statements are this artifact's own summaries of
the decision rules it implements.
"""

from __future__ import annotations

CITATIONS: dict[str, str] = {
    "Murray-von Neumann": (
        "the group von Neumann algebra is a factor of type II1 exactly when "
        "the group has infinite conjugacy classes"
    ),
    "ICC definition": (
        "an ICC group is infinite and every conjugacy class other than {1} is "
        "infinite; in particular a finite group is never ICC"
    ),
    "Finite class witness": (
        "an explicit nontrivial element with a finite conjugacy class defeats ICC"
    ),
    "Abelian infinite": (
        "an infinite abelian group has singleton conjugacy classes, hence is not ICC"
    ),
    "Infinite dihedral": (
        "the free product of two order-2 groups is infinite dihedral; its "
        "translation elements have conjugacy classes of size 2"
    ),
    "Surface classification": (
        "the fundamental group of a compact surface is infinite and non-ICC "
        "exactly for the annulus, Moebius band, torus and Klein bottle; it is "
        "finite for the disk, sphere and projective plane"
    ),
    "Kneser-Milnor": (
        "a compact 3-manifold decomposes into indecomposable pieces and its "
        "fundamental group is the free product of the piece groups"
    ),
    "Lemma 1": (
        "a Seifert fibration induces a short exact sequence in which the "
        "regular fiber class generates a cyclic normal subgroup"
    ),
    "Prop 2": (
        "the fundamental group of a non-simply-connected Seifert manifold has "
        "a finite conjugacy class other than {1}"
    ),
    "Prop 3(i)": (
        "a free product with factor orders at least 3 and at least 2 is ICC"
    ),
    "Prop 3(ii)": (
        "an amalgam over edge indices at least 3 and at least 2 with at least "
        "one ICC factor is ICC"
    ),
    "Prop 3(iii)": (
        "an amalgam over edge indices at least 3 and at least 2 is ICC when "
        "every nontrivial finitely generated edge subgroup normal in both "
        "factors is ICC (vacuous if no such subgroup exists)"
    ),
    "Prop 3(iv)": "an HNN extension of an ICC base group is ICC",
    "Prop 3(v)": (
        "an HNN extension is ICC when every nontrivial finitely generated "
        "subgroup of the associated subgroup normal in the whole group is ICC "
        "(vacuous if no such subgroup exists)"
    ),
    "Lemma 4": "in an ICC group, every subgroup of finite index is ICC",
    "Lemma 5": (
        "a torsion-free group possessing an ICC subgroup of finite index is ICC"
    ),
    "Lemma 6": (
        "if a group has an ICC subgroup of index 2, it is either ICC or the "
        "direct product of that subgroup with a central group of order 2"
    ),
    "Lemma 10": (
        "an orientable torus bundle group Z^2 x| Z is ICC iff the monodromy is "
        "hyperbolic; elliptic and parabolic bundles carry Seifert fibrations"
    ),
    "Theorem 12": (
        "an orientable irreducible 3-manifold with infinite fundamental group "
        "fails ICC exactly when it is a Seifert manifold"
    ),
    "Theorem 13": (
        "for an orientable 3-manifold with infinite, non-infinite-dihedral "
        "fundamental group: not ICC iff the Poincare variety is Seifert iff "
        "the group has an infinite cyclic normal subgroup"
    ),
    "Theorem 15": (
        "a non-orientable irreducible manifold containing no nonstandard "
        "P2 x I has a nontrivial cyclic normal subgroup in its fundamental "
        "group iff it is Seifert modulo P or homeomorphic to P2 x I"
    ),
    "Lemma 16": (
        "a non-orientable manifold with infinite fundamental group fails ICC "
        "iff the orientation cover's Poincare variety is Seifert, the capped "
        "manifold is homotopy equivalent to P2 x S1, or the cover group is "
        "infinite dihedral"
    ),
    "Prop 17": (
        "a non-orientable P2-irreducible manifold fails ICC exactly when it "
        "is a Seifert manifold"
    ),
    "Prop 18": (
        "a non-orientable irreducible manifold without nonstandard P2 x I and "
        "with infinite fundamental group fails ICC exactly when it is a "
        "Seifert manifold modulo P"
    ),
    "Theorem 19": (
        "for a non-orientable manifold without nonstandard P2 x I whose "
        "fundamental group is infinite and not infinite dihedral: not ICC iff "
        "the Poincare variety is Seifert modulo P"
    ),
    "Cor 20": "a knot group is ICC iff the knot is not a torus knot",
    "Burde-Murasugi": (
        "for a link: nontrivial center, failure of ICC, and being a finite "
        "union of fibers of a Seifert fibration of the 3-sphere are equivalent"
    ),
    "Prop 21": (
        "the fundamental group of an orientable hyperbolic manifold of finite "
        "volume is always ICC"
    ),
    "Prop 24": (
        "a group is ICC iff it is strongly ICC: every finite set of "
        "nontrivial elements admits a sequence of conjugators making all "
        "conjugates pairwise distinct"
    ),
    "Seifert fibration conjecture": (
        "an orientable irreducible 3-manifold whose group contains an "
        "infinite cyclic normal subgroup is a Seifert manifold"
    ),
    "Knot group infinite": (
        "a knot group abelianizes to an infinite cyclic group, hence is infinite"
    ),
    "Finite direct factor": (
        "elements of a nontrivial finite direct factor have finite conjugacy "
        "classes, so the product is not ICC"
    ),
    "Hypotheses not met": (
        "the input does not satisfy the hypotheses of the applicable rule; no "
        "conclusion is drawn"
    ),
    "Outside scope": (
        "the input falls outside the implemented sufficient conditions; no "
        "conclusion is drawn"
    ),
}
