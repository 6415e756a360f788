#pragma once

// Torsion pairs over a declared atom list: validation with certificates,
// exhaustive enumeration, perpendicular classes and the four qualitative
// predicates. Everything is decided at atom level; trace and torsion-free
// quotient commute with finite direct sums, so atom-level checks determine
// the additive closures (this reduction is itself covered by tests).

#include <cstdint>
#include <string>
#include <vector>

#include "qrec/category.hpp"

namespace qrec {

struct TorsionPair {
    Subcategory torsion;      // X
    Subcategory torsion_free; // Y
    bool operator==(const TorsionPair&) const = default;
};

struct TtfTriple {
    Subcategory x, y, z;
};

/// Result of a yes/no check carrying a human-readable witness on failure.
struct PairVerdict {
    bool ok = true;
    std::string witness;
};

/// Three-valued result for budget-limited predicates.
enum class Verdict3 { yes, no, undetermined };

struct PredicateVerdict {
    Verdict3 verdict = Verdict3::yes;
    std::string witness;
};

/// Atoms with no nonzero morphism out of s / into s.
Subcategory perp_right(const ModuleCategory& cat, const Subcategory& s);
Subcategory perp_left(const ModuleCategory& cat, const Subcategory& s);

/// Checks (add x, add y) for Hom-orthogonality and the per-atom torsion
/// decomposition 0 -> t(M) -> M -> M/t(M) -> 0 with t(M) in add x and the
/// quotient in add y.
PairVerdict is_torsion_pair(const ModuleCategory& cat, const Subcategory& x,
                            const Subcategory& y);

/// All torsion pairs over the atom list, by sweeping atom subsets and
/// keeping the perpendicular-closed validated ones. Deterministic order.
/// Throws BudgetError when the atom count exceeds max_atoms.
std::vector<TorsionPair> enumerate_torsion_pairs(const ModuleCategory& cat,
                                                 int max_atoms = 20);

/// X closed under subobjects. Budget bounds the per-atom subobject
/// enumeration; exceeding it yields `undetermined`, never a guess.
PredicateVerdict is_hereditary(const ModuleCategory& cat, const TorsionPair& tp,
                               std::uint64_t subobject_budget = 1000000);

/// Y closed under quotient objects.
PredicateVerdict is_cohereditary(const ModuleCategory& cat, const TorsionPair& tp,
                                 std::uint64_t subobject_budget = 1000000);

/// Every object embeds into add X (reject(X, -) vanishes on every atom).
PairVerdict is_tilting(const ModuleCategory& cat, const TorsionPair& tp);

/// Every object is a quotient of add Y (trace(Y, -) is everything).
PairVerdict is_cotilting(const ModuleCategory& cat, const TorsionPair& tp);

PairVerdict is_ttf(const ModuleCategory& cat, const Subcategory& x,
                   const Subcategory& y, const Subcategory& z);

/// All TTF triples assembled from an enumeration: consecutive pairs sharing
/// the middle class.
std::vector<TtfTriple> enumerate_ttf_triples(const ModuleCategory& cat,
                                             int max_atoms = 20);

std::string subcategory_names(const ModuleCategory& cat, const Subcategory& s);
Subcategory subcategory_from_names(const ModuleCategory& cat,
                                   const std::vector<std::string>& names);

} // namespace qrec
