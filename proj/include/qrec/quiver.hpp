#pragma once

// Bound quivers: a finite quiver together with admissible relations over
// F_p. An Algebra value is the fixed ambient data every representation and
// morphism refers to; representations hold a shared_ptr to it so values can
// be passed around freely.

#include <memory>
#include <string>
#include <vector>

#include "qrec/errors.hpp"
#include "qrec/matrix.hpp"

namespace qrec {

struct Arrow {
    std::string name;
    int source = 0; // vertex index
    int target = 0;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<std::string>& vertices() const { return vertices_; }

    int vertex_index(const std::string& name) const; // throws InputError
    int arrow_index(const std::string& name) const;  // throws InputError

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

/// One summand of a relation: a scalar times a composable arrow path.
/// The path lists arrows in application order: {a, b} means "a first,
/// then b", i.e. the composite map is map_b * map_a.
struct RelationTerm {
    unsigned coefficient = 1;
    std::vector<int> path; // arrow indices
};

struct Relation {
    std::vector<RelationTerm> terms;
    std::string label;
};

class Algebra {
public:
    Algebra(std::string name, Quiver quiver, std::vector<Relation> relations,
            unsigned prime);

    const std::string& name() const { return name_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    unsigned prime() const { return p_; }

    /// Source and target vertex of a composable path (throws if the path is
    /// not composable).
    std::pair<int, int> path_endpoints(const std::vector<int>& path) const;

private:
    std::string name_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    unsigned p_;

    void validate() const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

} // namespace qrec
