#include "qrec/torsion.hpp"

#include <sstream>

namespace qrec {

Subcategory perp_right(const ModuleCategory& cat, const Subcategory& s) {
    Subcategory out = Subcategory::none(cat.atom_count());
    for (int j = 0; j < cat.atom_count(); ++j) {
        bool orthogonal = true;
        for (int i = 0; i < cat.atom_count() && orthogonal; ++i)
            if (s.contains(i) && cat.hom_dim(i, j) != 0) orthogonal = false;
        if (orthogonal) out.insert(j);
    }
    return out;
}

Subcategory perp_left(const ModuleCategory& cat, const Subcategory& s) {
    Subcategory out = Subcategory::none(cat.atom_count());
    for (int i = 0; i < cat.atom_count(); ++i) {
        bool orthogonal = true;
        for (int j = 0; j < cat.atom_count() && orthogonal; ++j)
            if (s.contains(j) && cat.hom_dim(i, j) != 0) orthogonal = false;
        if (orthogonal) out.insert(i);
    }
    return out;
}

PairVerdict is_torsion_pair(const ModuleCategory& cat, const Subcategory& x,
                            const Subcategory& y) {
    if (x.universe != cat.atom_count() || y.universe != cat.atom_count())
        throw InputError("subcategory universe does not match the atom list");

    for (int i = 0; i < cat.atom_count(); ++i)
        for (int j = 0; j < cat.atom_count(); ++j)
            if (x.contains(i) && y.contains(j) && cat.hom_dim(i, j) != 0) {
                std::ostringstream os;
                os << "Hom(" << cat.atom(i).name << ", " << cat.atom(j).name
                   << ") has dimension " << cat.hom_dim(i, j)
                   << " (first basis morphism is nonzero)";
                return {false, os.str()};
            }

    for (int m = 0; m < cat.atom_count(); ++m) {
        const Representation& obj = cat.atom(m).rep;
        const SubobjectPair t = trace(cat, x, obj);
        if (!cat.lies_in(t.object, x)) {
            std::ostringstream os;
            os << "trace of the torsion class in " << cat.atom(m).name
               << " decomposes as " << cat.decomposition_name(cat.decompose(t.object))
               << ", not inside the torsion class";
            return {false, os.str()};
        }
        const QuotientPair q = cokernel(t.inclusion);
        if (!cat.lies_in(q.object, y)) {
            std::ostringstream os;
            os << cat.atom(m).name << " / trace decomposes as "
               << cat.decomposition_name(cat.decompose(q.object))
               << ", not inside the torsion-free class";
            return {false, os.str()};
        }
    }
    return {true, ""};
}

std::vector<TorsionPair> enumerate_torsion_pairs(const ModuleCategory& cat,
                                                 int max_atoms) {
    const int n = cat.atom_count();
    if (n > max_atoms) {
        std::ostringstream os;
        os << "enumeration over " << n << " atoms exceeds the bound " << max_atoms;
        throw BudgetError(os.str());
    }

    std::vector<TorsionPair> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const Subcategory x{mask, n};
        const Subcategory y = perp_right(cat, x);
        if (!(perp_left(cat, y) == x)) continue;
        if (is_torsion_pair(cat, x, y).ok) out.push_back({x, y});
    }
    return out;
}

PredicateVerdict is_hereditary(const ModuleCategory& cat, const TorsionPair& tp,
                               std::uint64_t subobject_budget) {
    for (int i = 0; i < cat.atom_count(); ++i) {
        if (!tp.torsion.contains(i)) continue;
        std::vector<SubobjectPair> subs;
        try {
            subs = subobject_embeddings(cat.atom(i).rep, subobject_budget);
        } catch (const BudgetError& e) {
            return {Verdict3::undetermined, e.what()};
        }
        for (const SubobjectPair& s : subs)
            if (!cat.lies_in(s.object, tp.torsion)) {
                std::ostringstream os;
                os << "subobject " << cat.decomposition_name(cat.decompose(s.object))
                   << " of " << cat.atom(i).name << " leaves the torsion class";
                return {Verdict3::no, os.str()};
            }
    }
    return {Verdict3::yes, ""};
}

PredicateVerdict is_cohereditary(const ModuleCategory& cat, const TorsionPair& tp,
                                 std::uint64_t subobject_budget) {
    for (int j = 0; j < cat.atom_count(); ++j) {
        if (!tp.torsion_free.contains(j)) continue;
        std::vector<SubobjectPair> subs;
        try {
            subs = subobject_embeddings(cat.atom(j).rep, subobject_budget);
        } catch (const BudgetError& e) {
            return {Verdict3::undetermined, e.what()};
        }
        for (const SubobjectPair& s : subs) {
            const QuotientPair q = cokernel(s.inclusion);
            if (!cat.lies_in(q.object, tp.torsion_free)) {
                std::ostringstream os;
                os << "quotient " << cat.decomposition_name(cat.decompose(q.object))
                   << " of " << cat.atom(j).name << " leaves the torsion-free class";
                return {Verdict3::no, os.str()};
            }
        }
    }
    return {Verdict3::yes, ""};
}

PairVerdict is_tilting(const ModuleCategory& cat, const TorsionPair& tp) {
    for (int m = 0; m < cat.atom_count(); ++m) {
        const SubobjectPair r = reject(cat, tp.torsion, cat.atom(m).rep);
        if (!r.object.is_zero()) {
            std::ostringstream os;
            os << cat.atom(m).name << " does not embed into the torsion class "
               << "(reject has dimension " << r.object.total_dim() << ")";
            return {false, os.str()};
        }
    }
    return {true, ""};
}

PairVerdict is_cotilting(const ModuleCategory& cat, const TorsionPair& tp) {
    for (int m = 0; m < cat.atom_count(); ++m) {
        const Representation& obj = cat.atom(m).rep;
        const SubobjectPair t = trace(cat, tp.torsion_free, obj);
        if (!(t.object.dims() == obj.dims())) {
            std::ostringstream os;
            os << cat.atom(m).name << " is not a quotient of the torsion-free class "
               << "(trace has codimension "
               << obj.total_dim() - t.object.total_dim() << ")";
            return {false, os.str()};
        }
    }
    return {true, ""};
}

PairVerdict is_ttf(const ModuleCategory& cat, const Subcategory& x,
                   const Subcategory& y, const Subcategory& z) {
    PairVerdict first = is_torsion_pair(cat, x, y);
    if (!first.ok) {
        first.witness = "(X, Y): " + first.witness;
        return first;
    }
    PairVerdict second = is_torsion_pair(cat, y, z);
    if (!second.ok) {
        second.witness = "(Y, Z): " + second.witness;
        return second;
    }
    return {true, ""};
}

std::vector<TtfTriple> enumerate_ttf_triples(const ModuleCategory& cat,
                                             int max_atoms) {
    const std::vector<TorsionPair> pairs = enumerate_torsion_pairs(cat, max_atoms);
    std::vector<TtfTriple> out;
    for (const TorsionPair& a : pairs)
        for (const TorsionPair& b : pairs)
            if (a.torsion_free == b.torsion)
                out.push_back({a.torsion, a.torsion_free, b.torsion_free});
    return out;
}

std::string subcategory_names(const ModuleCategory& cat, const Subcategory& s) {
    std::ostringstream os;
    os << "add[";
    bool first = true;
    for (int i = 0; i < cat.atom_count(); ++i) {
        if (!s.contains(i)) continue;
        if (!first) os << ", ";
        os << cat.atom(i).name;
        first = false;
    }
    os << "]";
    return os.str();
}

Subcategory subcategory_from_names(const ModuleCategory& cat,
                                   const std::vector<std::string>& names) {
    Subcategory s = Subcategory::none(cat.atom_count());
    for (const auto& n : names) s.insert(cat.atom_index(n));
    return s;
}

} // namespace qrec
