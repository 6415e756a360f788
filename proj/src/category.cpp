#include "qrec/category.hpp"

#include <numeric>
#include <sstream>

namespace qrec {

namespace {

// Exact rational elimination on an integer system, small enough here that
// int64 numerators/denominators never get close to overflow.
struct Rat {
    long long num = 0;
    long long den = 1;

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
};

Rat make_rat(long long n, long long d = 1) {
    Rat r{n, d};
    r.normalize();
    return r;
}

Rat operator*(const Rat& a, const Rat& b) { return make_rat(a.num * b.num, a.den * b.den); }
Rat operator-(const Rat& a, const Rat& b) {
    return make_rat(a.num * b.den - b.num * a.den, a.den * b.den);
}
Rat operator/(const Rat& a, const Rat& b) { return make_rat(a.num * b.den, a.den * b.num); }

/// Solves the square integer system a*x = b over Q. Returns false when a is
/// singular.
bool solve_rational(std::vector<std::vector<long long>> a, std::vector<long long> b,
                    std::vector<Rat>& x) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m[r][c] = make_rat(a[r][c]);
        m[r][n] = make_rat(b[r]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m[sel][col].num == 0) ++sel;
        if (sel == n) return false;
        std::swap(m[sel], m[col]);
        const Rat piv = m[col][col];
        for (std::size_t c = col; c <= n; ++c) m[col][c] = m[col][c] / piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].num == 0) continue;
            const Rat f = m[r][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    x.resize(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = m[r][n];
    return true;
}

} // namespace

Subcategory Subcategory::all(int universe) {
    Subcategory s{0, universe};
    if (universe > 0)
        s.mask = (universe >= 64) ? ~std::uint64_t{0}
                                  : ((std::uint64_t{1} << universe) - 1);
    return s;
}

int Subcategory::count() const {
    int c = 0;
    for (int i = 0; i < universe; ++i)
        if (contains(i)) ++c;
    return c;
}

ModuleCategory::ModuleCategory(std::string name, AlgebraPtr algebra,
                               std::vector<Atom> atoms)
    : name_(std::move(name)), algebra_(std::move(algebra)), atoms_(std::move(atoms)) {
    if (atoms_.size() > 64) throw InputError("atom lists are limited to 64 entries");
    for (const auto& a : atoms_) {
        if (a.rep.algebra() != algebra_)
            throw InputError("atom " + a.name + " lives over a different algebra");
        validate_representation(a.rep);
        if (a.rep.is_zero()) throw InputError("atom " + a.name + " is the zero module");
    }
    for (std::size_t i = 0; i < atoms_.size(); ++i)
        for (std::size_t j = i + 1; j < atoms_.size(); ++j)
            if (atoms_[i].name == atoms_[j].name)
                throw InputError("duplicate atom name: " + atoms_[i].name);

    const int n = atom_count();
    hom_bases_.assign(n, {});
    hom_table_.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        hom_bases_[i].resize(n);
        for (int j = 0; j < n; ++j) {
            hom_bases_[i][j] = hom_basis(atoms_[i].rep, atoms_[j].rep);
            hom_table_[i][j] = static_cast<long long>(hom_bases_[i][j].size());
        }
    }

    // Invertibility of the fingerprint matrix certifies that the declared
    // atoms are independent; recorded here, enforced on use in decompose.
    std::vector<Rat> probe;
    fingerprint_invertible_ =
        n == 0 || solve_rational(hom_table_, std::vector<long long>(n, 0), probe);
}

int ModuleCategory::atom_index(const std::string& name) const {
    for (int i = 0; i < atom_count(); ++i)
        if (atoms_[i].name == name) return i;
    throw InputError("unknown atom '" + name + "' in category " + name_);
}

std::vector<long long> ModuleCategory::fingerprint(const Representation& m) const {
    std::vector<long long> fp(atom_count());
    for (int i = 0; i < atom_count(); ++i)
        fp[i] = static_cast<long long>(hom_basis(atoms_[i].rep, m).size());
    return fp;
}

Decomposition ModuleCategory::decompose(const Representation& m) const {
    if (m.algebra() != algebra_)
        throw InputError("decompose: representation over a different algebra");
    if (!fingerprint_invertible_)
        throw AtomListError("fingerprint matrix is singular: atom list for " + name_ +
                            " is not independent");

    const int n = atom_count();
    const std::vector<long long> fp = fingerprint(m);
    std::vector<Rat> x;
    if (!solve_rational(hom_table_, fp, x))
        throw AtomListError("fingerprint matrix is singular: atom list for " + name_ +
                            " is not independent");

    Decomposition counts(n, 0);
    for (int i = 0; i < n; ++i) {
        if (x[i].den != 1 || x[i].num < 0)
            throw AtomListError("atom list " + name_ + " incomplete for this object");
        counts[i] = static_cast<int>(x[i].num);
    }

    std::vector<int> dims(m.dims().size(), 0);
    for (int i = 0; i < n; ++i)
        for (std::size_t v = 0; v < dims.size(); ++v)
            dims[v] += counts[i] * atoms_[i].rep.dim(static_cast<int>(v));
    if (dims != m.dims())
        throw AtomListError("atom list " + name_ +
                            " incomplete for this object (dimension mismatch)");
    return counts;
}

bool ModuleCategory::lies_in(const Representation& m, const Subcategory& s) const {
    const Decomposition d = decompose(m);
    for (int i = 0; i < atom_count(); ++i)
        if (d[i] > 0 && !s.contains(i)) return false;
    return true;
}

std::string ModuleCategory::decomposition_name(const Decomposition& d) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < atom_count(); ++i)
        for (int k = 0; k < d[i]; ++k) {
            if (!first) os << " + ";
            os << atoms_[i].name;
            first = false;
        }
    if (first) os << "0";
    return os.str();
}

Subcategory ModuleCategory::support(const Decomposition& d) const {
    Subcategory s = Subcategory::none(atom_count());
    for (int i = 0; i < atom_count(); ++i)
        if (d[i] > 0) s.insert(i);
    return s;
}

SubobjectPair trace(const ModuleCategory& cat, const Subcategory& s,
                    const Representation& m) {
    const Quiver& q = cat.algebra()->quiver();
    const unsigned p = cat.algebra()->prime();
    std::vector<Matrix> generators;
    generators.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        generators.emplace_back(static_cast<std::size_t>(m.dim(v)), 0, p);

    for (int i = 0; i < cat.atom_count(); ++i) {
        if (!s.contains(i)) continue;
        for (const RepMorphism& phi : hom_basis(cat.atom(i).rep, m))
            for (int v = 0; v < q.vertex_count(); ++v)
                generators[v] = hstack(generators[v], phi.vertex_map(v));
    }
    return span_subobject(m, generators);
}

SubobjectPair reject(const ModuleCategory& cat, const Subcategory& s,
                     const Representation& m) {
    const Quiver& q = cat.algebra()->quiver();
    const unsigned p = cat.algebra()->prime();
    std::vector<Matrix> stacked;
    stacked.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        stacked.emplace_back(0, static_cast<std::size_t>(m.dim(v)), p);

    for (int i = 0; i < cat.atom_count(); ++i) {
        if (!s.contains(i)) continue;
        for (const RepMorphism& phi : hom_basis(m, cat.atom(i).rep))
            for (int v = 0; v < q.vertex_count(); ++v)
                stacked[v] = vstack(stacked[v], phi.vertex_map(v));
    }

    // The vertex-wise kernel intersection is already arrow-stable.
    std::vector<Matrix> bases;
    bases.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        bases.push_back(nullspace_basis(stacked[v]));
    return span_subobject(m, bases);
}

Representation atom_sum(const ModuleCategory& cat, const Decomposition& counts) {
    std::vector<Representation> parts;
    for (int i = 0; i < cat.atom_count(); ++i)
        for (int k = 0; k < counts[i]; ++k) parts.push_back(cat.atom(i).rep);
    if (parts.empty()) return Representation::zero(cat.algebra());
    return direct_sum(parts).object;
}

} // namespace qrec
