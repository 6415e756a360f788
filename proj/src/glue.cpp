#include "qrec/glue.hpp"

#include <array>
#include <sstream>

namespace qrec {

namespace {

void require_valid(const ModuleCategory& cat, const TorsionPair& tp,
                   const std::string& label) {
    const PairVerdict v = is_torsion_pair(cat, tp.torsion, tp.torsion_free);
    if (!v.ok)
        throw InputError(label + " is not a torsion pair: " + v.witness);
}

Subcategory union_of_supports(const ModuleCategory& cat,
                              const std::vector<Decomposition>& table,
                              const Subcategory& selected) {
    Subcategory out = Subcategory::none(cat.atom_count());
    for (int i = 0; i < selected.universe; ++i)
        if (selected.contains(i))
            for (int j = 0; j < cat.atom_count(); ++j)
                if (table[i][j] > 0) out.insert(j);
    return out;
}

bool supported_in(const Decomposition& d, const Subcategory& s) {
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] > 0 && !s.contains(static_cast<int>(j))) return false;
    return true;
}

} // namespace

TorsionPair glue(const RecollementInstance& inst, const TorsionPair& outer_a,
                 const TorsionPair& outer_c) {
    const ModuleCategory& base = inst.base();
    const ModuleCategory& tri = inst.tri();
    require_valid(base, outer_a, "first outer pair");
    require_valid(base, outer_c, "second outer pair");

    TorsionPair glued{Subcategory::none(tri.atom_count()),
                      Subcategory::none(tri.atom_count())};
    for (int i = 0; i < tri.atom_count(); ++i) {
        if (supported_in(inst.i_upper_decomp(i), outer_a.torsion) &&
            supported_in(inst.j_upper_decomp(i), outer_c.torsion))
            glued.torsion.insert(i);
        if (supported_in(inst.i_shriek_decomp(i), outer_a.torsion_free) &&
            supported_in(inst.j_upper_decomp(i), outer_c.torsion_free))
            glued.torsion_free.insert(i);
    }

    const PairVerdict v = is_torsion_pair(tri, glued.torsion, glued.torsion_free);
    if (!v.ok)
        throw InvariantError("glued pair failed validation: " + v.witness);
    if (!(perp_right(tri, glued.torsion) == glued.torsion_free))
        throw InvariantError("glued torsion-free class is not the right "
                             "perpendicular of the torsion class");
    return glued;
}

TorsionPair restrict_to_A(const RecollementInstance& inst, const TorsionPair& middle) {
    const ModuleCategory& base = inst.base();
    require_valid(inst.tri(), middle, "middle pair");

    std::vector<Decomposition> iu, is_;
    for (int i = 0; i < inst.tri().atom_count(); ++i) {
        iu.push_back(inst.i_upper_decomp(i));
        is_.push_back(inst.i_shriek_decomp(i));
    }
    TorsionPair out{union_of_supports(base, iu, middle.torsion),
                    union_of_supports(base, is_, middle.torsion_free)};

    const PairVerdict v = is_torsion_pair(base, out.torsion, out.torsion_free);
    if (!v.ok)
        throw InvariantError("restriction to the embedded side failed "
                             "validation: " + v.witness);
    return out;
}

RestrictionToC restrict_to_C(const RecollementInstance& inst,
                             const TorsionPair& middle) {
    const ModuleCategory& base = inst.base();
    const ModuleCategory& tri = inst.tri();
    require_valid(tri, middle, "middle pair");

    std::vector<Decomposition> ju;
    for (int i = 0; i < tri.atom_count(); ++i) ju.push_back(inst.j_upper_decomp(i));

    RestrictionToC out;
    out.candidate = {union_of_supports(base, ju, middle.torsion),
                     union_of_supports(base, ju, middle.torsion_free)};

    out.condition = true;
    for (int i = 0; i < tri.atom_count() && out.condition; ++i) {
        if (!middle.torsion_free.contains(i)) continue;
        const Representation yc = inst.j_upper(inst.tri_atom(i));
        const Decomposition d = inst.middle_decomp(inst.j_rstar(yc));
        if (!supported_in(d, middle.torsion_free)) {
            out.condition = false;
            std::ostringstream os;
            os << "j_* j^*(" << tri.atom(i).name << ") = j_*("
               << base.decomposition_name(base.decompose(yc)) << ") = "
               << tri.decomposition_name(d) << ", not inside the torsion-free class";
            out.condition_witness = os.str();
        }
    }

    out.candidate_verdict =
        is_torsion_pair(base, out.candidate.torsion, out.candidate.torsion_free);
    if (out.condition != out.candidate_verdict.ok)
        throw InvariantError("containment condition and candidate validation "
                             "disagree on the second restriction");
    return out;
}

ContainmentReport containment_equivalences(const RecollementInstance& inst,
                                           const TorsionPair& middle) {
    const ModuleCategory& tri = inst.tri();
    require_valid(tri, middle, "middle pair");

    ContainmentReport rep;
    rep.jstar_jupper_in_y = true;
    rep.jlower_jupper_in_x = true;
    rep.istar_ishriek_in_y = true;
    rep.istar_iupper_in_x = true;

    for (int i = 0; i < tri.atom_count(); ++i) {
        const TriModule t = inst.tri_atom(i);
        if (middle.torsion_free.contains(i)) {
            if (rep.jstar_jupper_in_y) {
                const Decomposition d = inst.middle_decomp(inst.j_rstar(inst.j_upper(t)));
                if (!supported_in(d, middle.torsion_free)) {
                    rep.jstar_jupper_in_y = false;
                    rep.witness_j = "j_*j^*(" + tri.atom(i).name + ") = " +
                                    tri.decomposition_name(d) + " leaves Y";
                }
            }
            if (rep.istar_ishriek_in_y) {
                const Decomposition d =
                    inst.middle_decomp(inst.i_star(inst.i_shriek(t)));
                if (!supported_in(d, middle.torsion_free)) {
                    rep.istar_ishriek_in_y = false;
                    rep.witness_i = "i_*i^!(" + tri.atom(i).name + ") = " +
                                    tri.decomposition_name(d) + " leaves Y";
                }
            }
        }
        if (middle.torsion.contains(i)) {
            if (rep.jlower_jupper_in_x) {
                const Decomposition d = inst.middle_decomp(inst.j_lower(inst.j_upper(t)));
                if (!supported_in(d, middle.torsion)) {
                    rep.jlower_jupper_in_x = false;
                    if (rep.witness_j.empty())
                        rep.witness_j = "j_!j^*(" + tri.atom(i).name + ") = " +
                                        tri.decomposition_name(d) + " leaves X";
                }
            }
            if (rep.istar_iupper_in_x) {
                const Decomposition d = inst.middle_decomp(inst.i_star(inst.i_upper(t)));
                if (!supported_in(d, middle.torsion)) {
                    rep.istar_iupper_in_x = false;
                    if (rep.witness_i.empty())
                        rep.witness_i = "i_*i^*(" + tri.atom(i).name + ") = " +
                                        tri.decomposition_name(d) + " leaves X";
                }
            }
        }
    }

    if (rep.jstar_jupper_in_y != rep.jlower_jupper_in_x)
        throw InvariantError("containment equivalence (j side) violated");
    if (rep.istar_ishriek_in_y != rep.istar_iupper_in_x)
        throw InvariantError("containment equivalence (i side) violated");
    return rep;
}

TorsionPair reconstruct_from_restrictions(const RecollementInstance& inst,
                                          const TorsionPair& middle) {
    const ModuleCategory& base = inst.base();
    const ModuleCategory& tri = inst.tri();

    std::vector<Decomposition> iu, is_, ju;
    for (int i = 0; i < tri.atom_count(); ++i) {
        iu.push_back(inst.i_upper_decomp(i));
        is_.push_back(inst.i_shriek_decomp(i));
        ju.push_back(inst.j_upper_decomp(i));
    }
    const Subcategory ia_x = union_of_supports(base, iu, middle.torsion);
    const Subcategory ju_x = union_of_supports(base, ju, middle.torsion);
    const Subcategory ishriek_y = union_of_supports(base, is_, middle.torsion_free);
    const Subcategory ju_y = union_of_supports(base, ju, middle.torsion_free);

    TorsionPair out{Subcategory::none(tri.atom_count()),
                    Subcategory::none(tri.atom_count())};
    for (int i = 0; i < tri.atom_count(); ++i) {
        if (supported_in(inst.i_upper_decomp(i), ia_x) &&
            supported_in(inst.j_upper_decomp(i), ju_x))
            out.torsion.insert(i);
        if (supported_in(inst.i_shriek_decomp(i), ishriek_y) &&
            supported_in(inst.j_upper_decomp(i), ju_y))
            out.torsion_free.insert(i);
    }
    return out;
}

Report roundtrip_check(const RecollementInstance& inst, const TorsionPair& outer_a,
                       const TorsionPair& outer_c) {
    Report r;
    r.title = "glue/restrict roundtrip on " + inst.name();

    const TorsionPair glued = glue(inst, outer_a, outer_c);
    const TorsionPair back_a = restrict_to_A(inst, glued);
    r.add("restriction to the embedded side recovers the input pair",
          back_a == outer_a,
          back_a == outer_a ? "" : subcategory_names(inst.base(), back_a.torsion));

    const RestrictionToC back_c = restrict_to_C(inst, glued);
    r.add("restriction condition holds on the glued pair", back_c.condition,
          back_c.condition_witness);
    const bool c_match = back_c.candidate == outer_c;
    r.add("restriction to the quotient side recovers the input pair", c_match,
          c_match ? "" : subcategory_names(inst.base(), back_c.candidate.torsion));

    const TorsionPair rebuilt = reconstruct_from_restrictions(inst, glued);
    r.add("membership formulas rebuild the glued pair", rebuilt == glued);
    return r;
}

Report closure_transfer_report(const RecollementInstance& inst,
                               const TorsionPair& outer_a, const TorsionPair& outer_c,
                               std::uint64_t subobject_budget, bool force) {
    const ModuleCategory& base = inst.base();
    const ModuleCategory& tri = inst.tri();
    require_valid(base, outer_a, "first outer pair");
    require_valid(base, outer_c, "second outer pair");

    Report r;
    r.title = "closure-property transfer on " + inst.name();

    struct Clause {
        const char* name;
        std::vector<FunctorId> hypotheses;
    };
    const std::array<Clause, 4> clauses = {
        Clause{"cohereditary", {FunctorId::i_shriek}},
        Clause{"hereditary", {FunctorId::i_upper}},
        Clause{"tilting", {FunctorId::i_shriek, FunctorId::j_lower}},
        Clause{"cotilting", {FunctorId::i_upper, FunctorId::j_rstar}},
    };

    for (const Clause& clause : clauses) {
        std::string failing;
        for (FunctorId f : clause.hypotheses)
            if (!inst.is_exact(f))
                failing += (failing.empty() ? "" : ", ") + functor_name(f);
        if (!failing.empty() && !force) {
            r.add_skipped(clause.name, "hypothesis not satisfied: " + failing +
                                           " not exact on this instance");
            continue;
        }
        const std::string tag =
            failing.empty() ? "" : " [unverified hypothesis: " + failing + "]";

        auto eval = [&](const ModuleCategory& cat,
                        const TorsionPair& tp) -> PredicateVerdict {
            const std::string n = clause.name;
            if (n == "cohereditary") return is_cohereditary(cat, tp, subobject_budget);
            if (n == "hereditary") return is_hereditary(cat, tp, subobject_budget);
            if (n == "tilting") {
                const PairVerdict v = is_tilting(cat, tp);
                return {v.ok ? Verdict3::yes : Verdict3::no, v.witness};
            }
            const PairVerdict v = is_cotilting(cat, tp);
            return {v.ok ? Verdict3::yes : Verdict3::no, v.witness};
        };

        const PredicateVerdict in_a = eval(base, outer_a);
        const PredicateVerdict in_c = eval(base, outer_c);
        if (in_a.verdict == Verdict3::undetermined ||
            in_c.verdict == Verdict3::undetermined) {
            r.add_skipped(clause.name, "input predicate undetermined (budget)");
            continue;
        }
        if (in_a.verdict == Verdict3::no || in_c.verdict == Verdict3::no) {
            r.add_skipped(clause.name,
                          "inputs do not both satisfy the property" + tag);
            continue;
        }

        const TorsionPair glued = glue(inst, outer_a, outer_c);
        const PredicateVerdict out = eval(tri, glued);
        if (out.verdict == Verdict3::undetermined) {
            r.add(std::string(clause.name) + " transfers to the glued pair", false,
                  "undetermined on the glued pair: " + out.witness + tag);
        } else {
            r.add(std::string(clause.name) + " transfers to the glued pair",
                  out.verdict == Verdict3::yes, out.witness + tag);
        }
    }
    return r;
}

TtfTriple glue_ttf(const RecollementInstance& inst, const TtfTriple& outer_a,
                   const TtfTriple& outer_c) {
    for (FunctorId f : {FunctorId::i_upper, FunctorId::i_shriek})
        if (!inst.is_exact(f))
            throw InputError("TTF gluing requires " + functor_name(f) +
                             " exact, which fails on instance " + inst.name());

    const ModuleCategory& base = inst.base();
    {
        const PairVerdict v1 = is_ttf(base, outer_a.x, outer_a.y, outer_a.z);
        if (!v1.ok) throw InputError("first outer triple invalid: " + v1.witness);
        const PairVerdict v2 = is_ttf(base, outer_c.x, outer_c.y, outer_c.z);
        if (!v2.ok) throw InputError("second outer triple invalid: " + v2.witness);
    }

    const TorsionPair xy = glue(inst, {outer_a.x, outer_a.y}, {outer_c.x, outer_c.y});
    const TorsionPair yz = glue(inst, {outer_a.y, outer_a.z}, {outer_c.y, outer_c.z});
    if (!(xy.torsion_free == yz.torsion))
        throw InvariantError("glued middle classes disagree between the two pairs");

    const TtfTriple out{xy.torsion, xy.torsion_free, yz.torsion_free};
    const PairVerdict v = is_ttf(inst.tri(), out.x, out.y, out.z);
    if (!v.ok) throw InvariantError("glued triple failed validation: " + v.witness);
    return out;
}

ConstructiveDecomposition glued_decomposition_constructive(
    const RecollementInstance& inst, const TriModule& b, const TorsionPair& outer_a,
    const TorsionPair& outer_c) {
    const ModuleCategory& base = inst.base();
    const ModuleCategory& tri = inst.tri();
    const TorsionPair glued = glue(inst, outer_a, outer_c);

    auto require_exact_row = [](const std::vector<RepMorphism>& chain,
                                const char* stage) {
        const SequenceCheck chk = check_exact(chain);
        if (!chk.exact)
            throw InvariantError(std::string("constructive decomposition, ") + stage +
                                 ": row not exact (" + chk.detail + ")");
    };

    // Stage 1: factor the unit B -> j_*j^*(B) through its image.
    const RepMorphism eta = inst.to_rep(inst.unit_eta(b));
    const ImageFactorization im_eta = image(eta);
    if (!(compose(im_eta.inclusion, im_eta.projection) == eta))
        throw InvariantError("constructive decomposition, unit-image: "
                             "factorization mismatch");

    // Stage 2: move the quotient-side torsion subobject of j^*(B) through
    // j_* and intersect with the unit image.
    const Representation yc = inst.j_upper(b);
    const SubobjectPair t_c = trace(base, outer_c.torsion, yc);
    const RepMorphism jx = inst.to_rep(inst.j_rstar(t_c.inclusion));
    const Pullback pb1 = pullback(im_eta.inclusion, jx);
    require_exact_row({pb1.to_left, cokernel(pb1.to_left).projection},
                      "intersect-with-unit-image");

    // Stage 3: pull the intersection back through B.
    const Pullback pb2 = pullback(im_eta.projection, pb1.to_left);
    require_exact_row({pb2.to_left, cokernel(pb2.to_left).projection},
                      "preimage-in-ambient");
    const RepMorphism m_to_b = pb2.to_left;

    // Stage 4: embedded-side torsion of i^*(M), pulled back through the
    // counit cokernel M -> i_*i^*(M).
    const TriModule m_tri = inst.to_tri(m_to_b.source());
    const RepMorphism eps_m = inst.to_rep(inst.counit_eps(m_tri));
    const QuotientPair cok_eps = cokernel(eps_m);

    const Representation xa = inst.i_upper(m_tri);
    if (!(inst.to_rep(inst.i_star(xa)) == cok_eps.object))
        throw InvariantError("constructive decomposition, counit-cokernel: "
                             "presentation mismatch");
    const SubobjectPair t_a = trace(base, outer_a.torsion, xa);
    const RepMorphism ia = inst.to_rep(inst.i_star(t_a.inclusion));
    const Pullback pb3 = pullback(cok_eps.projection, ia);
    require_exact_row({pb3.to_left, cokernel(pb3.to_left).projection},
                      "preimage-of-embedded-torsion");

    // Final pushout: quotient of B by the torsion subobject.
    const RepMorphism incl = compose(m_to_b, pb3.to_left);
    const QuotientPair q_a = cokernel(t_a.inclusion);
    const RepMorphism m_to_iy = compose(inst.to_rep(inst.i_star(q_a.projection)),
                                        cok_eps.projection);
    const Pushout po = pushout(m_to_b, m_to_iy);
    require_exact_row({incl, po.from_left}, "torsion-free-pushout");

    ConstructiveDecomposition out{incl, po.from_left, tri.decompose(pb3.object),
                                  tri.decompose(po.object)};
    if (!supported_in(out.torsion_decomp, glued.torsion))
        throw InvariantError("constructive decomposition: torsion part "
                             "leaves the glued torsion class");
    if (!supported_in(out.torsion_free_decomp, glued.torsion_free))
        throw InvariantError("constructive decomposition: torsion-free part "
                             "leaves the glued torsion-free class");

    // Cross-check against the trace-based decomposition.
    const Representation b_rep = inst.to_rep(b);
    const SubobjectPair t_b = trace(tri, glued.torsion, b_rep);
    const Decomposition t_dec = tri.decompose(t_b.object);
    const Decomposition q_dec = tri.decompose(cokernel(t_b.inclusion).object);
    if (t_dec != out.torsion_decomp || q_dec != out.torsion_free_decomp)
        throw InvariantError("constructive decomposition disagrees with the "
                             "trace-based decomposition");
    return out;
}

} // namespace qrec
