#pragma once

// A module category presented by declared data: a bound quiver algebra
// together with a complete list of pairwise non-isomorphic indecomposables
// ("atoms"). Isomorphism classification works through Hom fingerprints: the
// atom-by-atom Hom dimension matrix is invertible exactly when the list is
// independent, and decomposing an arbitrary object against it is an exact
// integer solve, cross-checked by dimension vectors.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qrec/representation.hpp"

namespace qrec {

struct Atom {
    std::string name;
    Representation rep;
};

/// Multiset of atoms, as counts aligned with the atom list.
using Decomposition = std::vector<int>;

/// Atom subset (the additive closure "add" of the selected atoms).
/// Limited to 64 atoms, which is far above every enumeration budget here.
struct Subcategory {
    std::uint64_t mask = 0;
    int universe = 0;

    static Subcategory none(int universe) { return {0, universe}; }
    static Subcategory all(int universe);
    bool contains(int i) const { return (mask >> i) & 1u; }
    Subcategory& insert(int i) {
        mask |= (std::uint64_t{1} << i);
        return *this;
    }
    int count() const;
    bool operator==(const Subcategory&) const = default;
    bool subset_of(const Subcategory& other) const {
        return (mask & ~other.mask) == 0;
    }
};

class ModuleCategory {
public:
    ModuleCategory(std::string name, AlgebraPtr algebra, std::vector<Atom> atoms);

    const std::string& name() const { return name_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    int atom_count() const { return static_cast<int>(atoms_.size()); }
    const Atom& atom(int i) const { return atoms_[i]; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    int atom_index(const std::string& name) const; // throws InputError

    /// dim Hom(atom_i, atom_j).
    long long hom_dim(int i, int j) const { return hom_table_[i][j]; }
    /// Cached basis of Hom(atom_i, atom_j).
    const std::vector<RepMorphism>& atom_hom(int i, int j) const {
        return hom_bases_[i][j];
    }

    /// Whether the atom fingerprint matrix is invertible over the rationals
    /// (the completeness certificate for decomposition).
    bool fingerprint_invertible() const { return fingerprint_invertible_; }
    const std::vector<std::vector<long long>>& fingerprint_matrix() const {
        return hom_table_;
    }

    /// Hom dimensions from every atom into m.
    std::vector<long long> fingerprint(const Representation& m) const;

    /// Unique expression of m as a direct sum of atoms. Throws AtomListError
    /// if the fingerprint matrix is singular, the solution is not a
    /// nonnegative integer vector, or the dimension vectors do not add up.
    Decomposition decompose(const Representation& m) const;

    /// True iff m decomposes using only atoms of s.
    bool lies_in(const Representation& m, const Subcategory& s) const;

    std::string decomposition_name(const Decomposition& d) const;
    Subcategory support(const Decomposition& d) const;

private:
    std::string name_;
    AlgebraPtr algebra_;
    std::vector<Atom> atoms_;
    std::vector<std::vector<long long>> hom_table_;
    std::vector<std::vector<std::vector<RepMorphism>>> hom_bases_;
    bool fingerprint_invertible_ = false;
};

using CategoryPtr = std::shared_ptr<const ModuleCategory>;

/// Largest subobject of m generated by morphisms from atoms of s.
SubobjectPair trace(const ModuleCategory& cat, const Subcategory& s,
                    const Representation& m);

/// Intersection of the kernels of all morphisms from m into atoms of s;
/// vanishes exactly when m embeds into a finite direct sum over s.
SubobjectPair reject(const ModuleCategory& cat, const Subcategory& s,
                     const Representation& m);

/// Direct sum of atoms with multiplicities (zero representation for the
/// empty multiset).
Representation atom_sum(const ModuleCategory& cat, const Decomposition& counts);

} // namespace qrec
