#include "qrec/quiver.hpp"

#include <set>
#include <sstream>

namespace qrec {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second) throw InputError("duplicate vertex name: " + v);
    seen.clear();
    for (const auto& a : arrows_) {
        if (!seen.insert(a.name).second)
            throw InputError("duplicate arrow name: " + a.name);
        if (a.source < 0 || a.source >= vertex_count() || a.target < 0 ||
            a.target >= vertex_count())
            throw InputError("arrow " + a.name + " references a missing vertex");
    }
}

int Quiver::vertex_index(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[v] == name) return v;
    throw InputError("unknown vertex: " + name);
}

int Quiver::arrow_index(const std::string& name) const {
    for (int a = 0; a < arrow_count(); ++a)
        if (arrows_[a].name == name) return a;
    throw InputError("unknown arrow: " + name);
}

Algebra::Algebra(std::string name, Quiver quiver, std::vector<Relation> relations,
                 unsigned prime)
    : name_(std::move(name)), quiver_(std::move(quiver)),
      relations_(std::move(relations)), p_(prime) {
    if (!is_prime(p_)) {
        std::ostringstream os;
        os << "algebra " << name_ << ": " << p_ << " is not prime";
        throw InputError(os.str());
    }
    validate();
}

std::pair<int, int> Algebra::path_endpoints(const std::vector<int>& path) const {
    if (path.empty()) throw InputError("empty relation path");
    int src = quiver_.arrow(path.front()).source;
    int cur = quiver_.arrow(path.front()).target;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const Arrow& a = quiver_.arrow(path[i]);
        if (a.source != cur)
            throw InputError("relation path is not composable at arrow " + a.name);
        cur = a.target;
    }
    return {src, cur};
}

void Algebra::validate() const {
    for (const auto& rel : relations_) {
        if (rel.terms.empty()) throw InputError("relation with no terms");
        auto ends = path_endpoints(rel.terms.front().path);
        for (const auto& term : rel.terms) {
            if (term.coefficient >= p_)
                throw InputError("relation coefficient out of range");
            if (path_endpoints(term.path) != ends)
                throw InputError("relation terms have mismatched endpoints");
        }
    }
}

} // namespace qrec
