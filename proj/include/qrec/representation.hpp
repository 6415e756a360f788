#pragma once

// Finite-dimensional representations of a bound quiver and their morphisms,
// with the full abelian toolkit: Hom bases, kernels, cokernels, images,
// direct sums, pullbacks, pushouts, subobject enumeration and exactness
// checks. Kernels and cokernels are computed vertex-wise; every basis is in
// reduced column echelon form so results are reproducible.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qrec/matrix.hpp"
#include "qrec/quiver.hpp"

namespace qrec {

class Representation {
public:
    Representation() = default;
    /// maps[a] must have shape dim(target(a)) x dim(source(a)).
    Representation(AlgebraPtr algebra, std::vector<int> dims, std::vector<Matrix> maps);

    static Representation zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return algebra_; }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int vertex) const { return dims_[vertex]; }
    int total_dim() const;
    const Matrix& arrow_map(int arrow) const { return maps_[arrow]; }
    const std::vector<Matrix>& arrow_maps() const { return maps_; }
    bool is_zero() const { return total_dim() == 0; }

    bool operator==(const Representation& other) const;

private:
    AlgebraPtr algebra_;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

/// Evaluates a composable arrow path on a representation (identity on the
/// source vertex for the empty path is not supported; paths are non-empty).
Matrix evaluate_path(const Representation& r, const std::vector<int>& path);

/// Throws InputError naming the offending relation if some relation does
/// not evaluate to zero on r.
void validate_representation(const Representation& r);

class RepMorphism {
public:
    RepMorphism() = default;
    /// maps[v]: dim(target at v) x dim(source at v); commuting squares with
    /// every arrow are verified at construction.
    RepMorphism(Representation source, Representation target, std::vector<Matrix> maps);

    static RepMorphism zero(Representation source, Representation target);
    static RepMorphism identity(const Representation& r);

    const Representation& source() const { return source_; }
    const Representation& target() const { return target_; }
    const Matrix& vertex_map(int v) const { return maps_[v]; }
    const std::vector<Matrix>& vertex_maps() const { return maps_; }

    bool is_zero() const;
    bool operator==(const RepMorphism& other) const;

    RepMorphism operator+(const RepMorphism& other) const;
    RepMorphism scaled(long long s) const;

private:
    Representation source_, target_;
    std::vector<Matrix> maps_;
};

/// g after f (requires f.target == g.source).
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

bool is_mono(const RepMorphism& f);
bool is_epi(const RepMorphism& f);
bool is_iso(const RepMorphism& f);
std::optional<RepMorphism> invert(const RepMorphism& f);

/// Basis of Hom(m, n), solved as one joint linear system over all vertices;
/// deterministic order.
std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n);

struct SubobjectPair {
    Representation object;
    RepMorphism inclusion; // object -> ambient, mono
};

struct QuotientPair {
    Representation object;
    RepMorphism projection; // ambient -> object, epi
};

SubobjectPair kernel(const RepMorphism& f);
QuotientPair cokernel(const RepMorphism& f);

struct ImageFactorization {
    Representation object;
    RepMorphism inclusion;  // object -> target(f), mono
    RepMorphism projection; // source(f) -> object, epi; f = inclusion ∘ projection
};

ImageFactorization image(const RepMorphism& f);

struct DirectSum {
    Representation object;
    std::vector<RepMorphism> injections;  // summand -> object
    std::vector<RepMorphism> projections; // object -> summand
};

DirectSum direct_sum(std::span<const Representation> summands);

std::vector<int> dim_vector(const Representation& r);

/// Fibered product of f: A -> C, g: B -> C (shared codomain), computed as
/// ker(f - g) inside A ⊕ B. The square f∘to_left = g∘to_right commutes.
struct Pullback {
    Representation object;
    RepMorphism to_left;  // object -> A
    RepMorphism to_right; // object -> B
};
Pullback pullback(const RepMorphism& f, const RepMorphism& g);

/// Dual: f: C -> A, g: C -> B (shared domain).
struct Pushout {
    Representation object;
    RepMorphism from_left;  // A -> object
    RepMorphism from_right; // B -> object
};
Pushout pushout(const RepMorphism& f, const RepMorphism& g);

/// The subobject generated by a family of column spans at each vertex: the
/// smallest arrow-stable subspace tuple containing them.
SubobjectPair span_subobject(const Representation& ambient,
                             const std::vector<Matrix>& generators);

/// All subrepresentation inclusions of m (including 0 and m). The number of
/// candidate subspace tuples is capped by `budget`; exceeding it throws
/// BudgetError.
std::vector<SubobjectPair> subobject_embeddings(const Representation& m,
                                                std::uint64_t budget);

/// Number of subspaces of F_p^dim (sum of Gaussian binomials), saturating
/// at 2^63-1.
std::uint64_t subspace_count(int dim, unsigned p);

/// Enumerates every subspace of F_p^dim as a canonical basis matrix.
std::vector<Matrix> all_subspaces(int dim, unsigned p);

// --- exact sequences ------------------------------------------------------

/// A chain of composable morphisms A0 -> A1 -> ... -> An, read with zero
/// objects glued on both ends: is_exact checks mono at the left end, epi at
/// the right end and im = ker at interior objects. Exactness reduces to a
/// vertex-wise rank condition.
struct SequenceCheck {
    bool exact = true;
    int failure_position = -1; // index of the object where exactness fails
    std::string detail;
};

SequenceCheck check_exact(std::span<const RepMorphism> chain);

/// Convenience: 0 -> A -> B -> C -> 0 with inner = A -> B, outer = B -> C.
struct ShortExactSequence {
    RepMorphism inner;
    RepMorphism outer;
};

SequenceCheck check_exact(const ShortExactSequence& s);

} // namespace qrec
