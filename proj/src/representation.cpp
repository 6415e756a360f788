#include "qrec/representation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace qrec {

namespace {

void require_same_algebra(const Representation& a, const Representation& b) {
    if (a.algebra() != b.algebra())
        throw InputError("representations live over different algebras");
}

Matrix minus(const Matrix& m) { return m.scaled(-1); }

} // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<int> dims,
                               std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
    const Quiver& q = algebra_->quiver();
    if (static_cast<int>(dims_.size()) != q.vertex_count())
        throw InputError("dimension vector length does not match vertex count");
    for (int d : dims_)
        if (d < 0) throw InputError("negative dimension");
    if (static_cast<int>(maps_.size()) != q.arrow_count())
        throw InputError("arrow map count does not match arrow count");
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix& m = maps_[a];
        if (m.rows() != static_cast<std::size_t>(dims_[ar.target]) ||
            m.cols() != static_cast<std::size_t>(dims_[ar.source]) ||
            m.modulus() != algebra_->prime()) {
            std::ostringstream os;
            os << "arrow " << ar.name << ": map shape " << m.rows() << "x" << m.cols()
               << " does not match dims " << dims_[ar.target] << "x" << dims_[ar.source];
            throw InputError(os.str());
        }
    }
}

Representation Representation::zero(AlgebraPtr algebra) {
    const Quiver& q = algebra->quiver();
    std::vector<int> dims(q.vertex_count(), 0);
    std::vector<Matrix> maps;
    maps.reserve(q.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a)
        maps.emplace_back(0, 0, algebra->prime());
    return Representation(std::move(algebra), std::move(dims), std::move(maps));
}

int Representation::total_dim() const {
    return std::accumulate(dims_.begin(), dims_.end(), 0);
}

bool Representation::operator==(const Representation& other) const {
    return algebra_ == other.algebra_ && dims_ == other.dims_ && maps_ == other.maps_;
}

Matrix evaluate_path(const Representation& r, const std::vector<int>& path) {
    Matrix acc = r.arrow_map(path.front());
    for (std::size_t i = 1; i < path.size(); ++i) acc = r.arrow_map(path[i]) * acc;
    return acc;
}

void validate_representation(const Representation& r) {
    const auto& rels = r.algebra()->relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const auto ends = r.algebra()->path_endpoints(rels[i].terms.front().path);
        Matrix acc(static_cast<std::size_t>(r.dim(ends.second)),
                   static_cast<std::size_t>(r.dim(ends.first)), r.algebra()->prime());
        for (const auto& term : rels[i].terms)
            acc = acc + evaluate_path(r, term.path).scaled(term.coefficient);
        if (!acc.is_zero()) {
            std::ostringstream os;
            os << "relation " << (rels[i].label.empty() ? std::to_string(i) : rels[i].label)
               << " does not vanish on the representation";
            throw InputError(os.str());
        }
    }
}

RepMorphism::RepMorphism(Representation source, Representation target,
                         std::vector<Matrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {
    require_same_algebra(source_, target_);
    const Quiver& q = source_.algebra()->quiver();
    if (static_cast<int>(maps_.size()) != q.vertex_count())
        throw InputError("morphism vertex map count mismatch");
    for (int v = 0; v < q.vertex_count(); ++v) {
        if (maps_[v].rows() != static_cast<std::size_t>(target_.dim(v)) ||
            maps_[v].cols() != static_cast<std::size_t>(source_.dim(v)))
            throw InputError("morphism vertex map shape mismatch");
    }
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix lhs = maps_[ar.target] * source_.arrow_map(a);
        const Matrix rhs = target_.arrow_map(a) * maps_[ar.source];
        if (!(lhs == rhs))
            throw InvariantError("morphism does not commute with arrow " + ar.name);
    }
}

RepMorphism RepMorphism::zero(Representation source, Representation target) {
    const Quiver& q = source.algebra()->quiver();
    std::vector<Matrix> maps;
    maps.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        maps.emplace_back(static_cast<std::size_t>(target.dim(v)),
                          static_cast<std::size_t>(source.dim(v)),
                          source.algebra()->prime());
    return RepMorphism(std::move(source), std::move(target), std::move(maps));
}

RepMorphism RepMorphism::identity(const Representation& r) {
    std::vector<Matrix> maps;
    const int n = r.algebra()->quiver().vertex_count();
    maps.reserve(n);
    for (int v = 0; v < n; ++v)
        maps.push_back(Matrix::identity(static_cast<std::size_t>(r.dim(v)),
                                        r.algebra()->prime()));
    return RepMorphism(r, r, std::move(maps));
}

bool RepMorphism::is_zero() const {
    return std::all_of(maps_.begin(), maps_.end(),
                       [](const Matrix& m) { return m.is_zero(); });
}

bool RepMorphism::operator==(const RepMorphism& other) const {
    return source_ == other.source_ && target_ == other.target_ && maps_ == other.maps_;
}

RepMorphism RepMorphism::operator+(const RepMorphism& other) const {
    if (!(source_ == other.source_) || !(target_ == other.target_))
        throw InputError("morphism sum endpoint mismatch");
    std::vector<Matrix> maps;
    maps.reserve(maps_.size());
    for (std::size_t v = 0; v < maps_.size(); ++v) maps.push_back(maps_[v] + other.maps_[v]);
    return RepMorphism(source_, target_, std::move(maps));
}

RepMorphism RepMorphism::scaled(long long s) const {
    std::vector<Matrix> maps;
    maps.reserve(maps_.size());
    for (const auto& m : maps_) maps.push_back(m.scaled(s));
    return RepMorphism(source_, target_, std::move(maps));
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    if (!(f.target() == g.source()))
        throw InputError("compose: inner target differs from outer source");
    std::vector<Matrix> maps;
    const int n = f.source().algebra()->quiver().vertex_count();
    maps.reserve(n);
    for (int v = 0; v < n; ++v) maps.push_back(g.vertex_map(v) * f.vertex_map(v));
    return RepMorphism(f.source(), g.target(), std::move(maps));
}

bool is_mono(const RepMorphism& f) {
    const int n = f.source().algebra()->quiver().vertex_count();
    for (int v = 0; v < n; ++v)
        if (rank(f.vertex_map(v)) != static_cast<std::size_t>(f.source().dim(v)))
            return false;
    return true;
}

bool is_epi(const RepMorphism& f) {
    const int n = f.source().algebra()->quiver().vertex_count();
    for (int v = 0; v < n; ++v)
        if (rank(f.vertex_map(v)) != static_cast<std::size_t>(f.target().dim(v)))
            return false;
    return true;
}

bool is_iso(const RepMorphism& f) { return is_mono(f) && is_epi(f); }

std::optional<RepMorphism> invert(const RepMorphism& f) {
    if (!is_iso(f)) return std::nullopt;
    std::vector<Matrix> maps;
    const int n = f.source().algebra()->quiver().vertex_count();
    maps.reserve(n);
    for (int v = 0; v < n; ++v) {
        auto inv = inverse(f.vertex_map(v));
        if (!inv) return std::nullopt;
        maps.push_back(std::move(*inv));
    }
    return RepMorphism(f.target(), f.source(), std::move(maps));
}

std::vector<RepMorphism> hom_basis(const Representation& m, const Representation& n) {
    require_same_algebra(m, n);
    const Quiver& q = m.algebra()->quiver();
    const unsigned p = m.algebra()->prime();

    // Unknowns: entries of phi_v (n.dim(v) x m.dim(v)), row-major, vertex by
    // vertex. Constraints: phi_w * Ma = Na * phi_v for every arrow a: v -> w.
    std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
    for (int v = 0; v < q.vertex_count(); ++v)
        offset[v + 1] = offset[v] + static_cast<std::size_t>(n.dim(v)) *
                                        static_cast<std::size_t>(m.dim(v));
    const std::size_t unknowns = offset[q.vertex_count()];

    std::size_t eq_count = 0;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        eq_count += static_cast<std::size_t>(n.dim(ar.target)) *
                    static_cast<std::size_t>(m.dim(ar.source));
    }

    Matrix system(eq_count, unknowns, p);
    std::size_t eq = 0;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix& Ma = m.arrow_map(a);
        const Matrix& Na = n.arrow_map(a);
        const int rows_w = n.dim(ar.target);
        const int cols_v = m.dim(ar.source);
        for (int r = 0; r < rows_w; ++r)
            for (int c = 0; c < cols_v; ++c) {
                // sum_k phi_w[r,k] * Ma[k,c] - sum_k Na[r,k] * phi_v[k,c] = 0
                for (int k = 0; k < m.dim(ar.target); ++k) {
                    const std::size_t col =
                        offset[ar.target] +
                        static_cast<std::size_t>(r) * m.dim(ar.target) + k;
                    system.set(eq, col,
                               static_cast<long long>(system.at(eq, col)) +
                                   Ma.at(static_cast<std::size_t>(k), c));
                }
                for (int k = 0; k < n.dim(ar.source); ++k) {
                    const std::size_t col =
                        offset[ar.source] +
                        static_cast<std::size_t>(k) * m.dim(ar.source) + c;
                    system.set(eq, col,
                               static_cast<long long>(system.at(eq, col)) -
                                   static_cast<long long>(Na.at(r, static_cast<std::size_t>(k))));
                }
                ++eq;
            }
    }

    const Matrix null = nullspace_basis(system);
    std::vector<RepMorphism> basis;
    basis.reserve(null.cols());
    for (std::size_t j = 0; j < null.cols(); ++j) {
        std::vector<Matrix> maps;
        maps.reserve(q.vertex_count());
        for (int v = 0; v < q.vertex_count(); ++v) {
            Matrix phi(static_cast<std::size_t>(n.dim(v)),
                       static_cast<std::size_t>(m.dim(v)), p);
            for (int r = 0; r < n.dim(v); ++r)
                for (int c = 0; c < m.dim(v); ++c)
                    phi.set(r, c,
                            null.at(offset[v] + static_cast<std::size_t>(r) * m.dim(v) + c,
                                    j));
            maps.push_back(std::move(phi));
        }
        basis.emplace_back(m, n, std::move(maps));
    }
    return basis;
}

namespace {

/// Builds the subrepresentation carried by arrow-stable subspace bases
/// (one canonical basis matrix per vertex) together with its inclusion.
SubobjectPair subrep_from_bases(const Representation& ambient,
                                const std::vector<Matrix>& bases) {
    const Quiver& q = ambient.algebra()->quiver();
    std::vector<int> dims(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        dims[v] = static_cast<int>(bases[v].cols());

    std::vector<Matrix> maps;
    maps.reserve(q.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const auto induced = solve(bases[ar.target], ambient.arrow_map(a) * bases[ar.source]);
        if (!induced)
            throw InvariantError("subspace tuple is not arrow-stable");
        maps.push_back(*induced);
    }
    Representation sub(ambient.algebra(), std::move(dims), std::move(maps));
    return {sub, RepMorphism(sub, ambient, bases)};
}

} // namespace

SubobjectPair kernel(const RepMorphism& f) {
    const Quiver& q = f.source().algebra()->quiver();
    std::vector<Matrix> bases;
    bases.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        bases.push_back(nullspace_basis(f.vertex_map(v)));
    return subrep_from_bases(f.source(), bases);
}

QuotientPair cokernel(const RepMorphism& f) {
    const Representation& n = f.target();
    const Quiver& q = n.algebra()->quiver();
    const unsigned p = n.algebra()->prime();

    std::vector<Matrix> proj;
    proj.reserve(q.vertex_count());
    std::vector<Matrix> rinv; // right inverses of the projections
    rinv.reserve(q.vertex_count());
    std::vector<int> dims(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v) {
        const Matrix im = column_space_basis(f.vertex_map(v));
        Matrix qv = quotient_map(im, static_cast<std::size_t>(n.dim(v)));
        dims[v] = static_cast<int>(qv.rows());
        const auto r = solve(qv, Matrix::identity(qv.rows(), p));
        if (!r) throw InvariantError("cokernel: projection has no right inverse");
        proj.push_back(std::move(qv));
        rinv.push_back(*r);
    }

    std::vector<Matrix> maps;
    maps.reserve(q.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const Matrix induced = proj[ar.target] * n.arrow_map(a) * rinv[ar.source];
        if (!(induced * proj[ar.source] == proj[ar.target] * n.arrow_map(a)))
            throw InvariantError("cokernel: induced arrow map ill-defined");
        maps.push_back(induced);
    }
    Representation quo(n.algebra(), std::move(dims), std::move(maps));
    return {quo, RepMorphism(n, quo, proj)};
}

ImageFactorization image(const RepMorphism& f) {
    const Quiver& q = f.source().algebra()->quiver();
    std::vector<Matrix> bases;
    bases.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        bases.push_back(column_space_basis(f.vertex_map(v)));
    SubobjectPair sub = subrep_from_bases(f.target(), bases);

    std::vector<Matrix> epi_maps;
    epi_maps.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v) {
        const auto e = solve(sub.inclusion.vertex_map(v), f.vertex_map(v));
        if (!e) throw InvariantError("image: epi factor does not exist");
        epi_maps.push_back(*e);
    }
    RepMorphism onto(f.source(), sub.object, std::move(epi_maps));
    return {sub.object, sub.inclusion, onto};
}

DirectSum direct_sum(std::span<const Representation> summands) {
    if (summands.empty()) throw InputError("direct_sum of no summands");
    const AlgebraPtr alg = summands.front().algebra();
    const Quiver& q = alg->quiver();
    const unsigned p = alg->prime();
    for (const auto& s : summands) require_same_algebra(summands.front(), s);

    std::vector<int> dims(q.vertex_count(), 0);
    for (const auto& s : summands)
        for (int v = 0; v < q.vertex_count(); ++v) dims[v] += s.dim(v);

    std::vector<Matrix> maps;
    maps.reserve(q.arrow_count());
    for (int a = 0; a < q.arrow_count(); ++a) {
        std::vector<Matrix> blocks;
        blocks.reserve(summands.size());
        for (const auto& s : summands) blocks.push_back(s.arrow_map(a));
        maps.push_back(block_diag(blocks, p));
    }
    Representation total(alg, dims, std::move(maps));

    DirectSum out{total, {}, {}};
    std::vector<int> base(q.vertex_count(), 0);
    for (const auto& s : summands) {
        std::vector<Matrix> inj, prj;
        inj.reserve(q.vertex_count());
        prj.reserve(q.vertex_count());
        for (int v = 0; v < q.vertex_count(); ++v) {
            Matrix in(static_cast<std::size_t>(total.dim(v)),
                      static_cast<std::size_t>(s.dim(v)), p);
            Matrix pr(static_cast<std::size_t>(s.dim(v)),
                      static_cast<std::size_t>(total.dim(v)), p);
            for (int i = 0; i < s.dim(v); ++i) {
                in.set(static_cast<std::size_t>(base[v] + i), static_cast<std::size_t>(i), 1);
                pr.set(static_cast<std::size_t>(i), static_cast<std::size_t>(base[v] + i), 1);
            }
            inj.push_back(std::move(in));
            prj.push_back(std::move(pr));
        }
        out.injections.emplace_back(s, total, std::move(inj));
        out.projections.emplace_back(total, s, std::move(prj));
        for (int v = 0; v < q.vertex_count(); ++v) base[v] += s.dim(v);
    }
    return out;
}

std::vector<int> dim_vector(const Representation& r) { return r.dims(); }

Pullback pullback(const RepMorphism& f, const RepMorphism& g) {
    if (!(f.target() == g.target()))
        throw InputError("pullback requires a shared codomain");
    const Representation summands[] = {f.source(), g.source()};
    DirectSum s = direct_sum(summands);

    const int n = f.source().algebra()->quiver().vertex_count();
    std::vector<Matrix> h;
    h.reserve(n);
    for (int v = 0; v < n; ++v)
        h.push_back(hstack(f.vertex_map(v), minus(g.vertex_map(v))));
    RepMorphism diff(s.object, f.target(), std::move(h));

    SubobjectPair k = kernel(diff);
    return {k.object, compose(s.projections[0], k.inclusion),
            compose(s.projections[1], k.inclusion)};
}

Pushout pushout(const RepMorphism& f, const RepMorphism& g) {
    if (!(f.source() == g.source()))
        throw InputError("pushout requires a shared domain");
    const Representation summands[] = {f.target(), g.target()};
    DirectSum s = direct_sum(summands);

    const int n = f.source().algebra()->quiver().vertex_count();
    std::vector<Matrix> h;
    h.reserve(n);
    for (int v = 0; v < n; ++v)
        h.push_back(vstack(f.vertex_map(v), minus(g.vertex_map(v))));
    RepMorphism diff(f.source(), s.object, std::move(h));

    QuotientPair c = cokernel(diff);
    return {c.object, compose(c.projection, s.injections[0]),
            compose(c.projection, s.injections[1])};
}

SubobjectPair span_subobject(const Representation& ambient,
                             const std::vector<Matrix>& generators) {
    const Quiver& q = ambient.algebra()->quiver();
    std::vector<Matrix> bases;
    bases.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        bases.push_back(column_space_basis(generators[v]));

    // Close under arrow actions until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < q.arrow_count(); ++a) {
            const Arrow& ar = q.arrow(a);
            const Matrix pushed = ambient.arrow_map(a) * bases[ar.source];
            if (!solve(bases[ar.target], pushed)) {
                bases[ar.target] = column_space_basis(hstack(bases[ar.target], pushed));
                changed = true;
            }
        }
    }
    return subrep_from_bases(ambient, bases);
}

std::uint64_t subspace_count(int dim, unsigned p) {
    // Gaussian binomial recursion G(n,k) = G(n-1,k-1) + p^k G(n-1,k).
    constexpr std::uint64_t cap = std::numeric_limits<std::int64_t>::max();
    std::vector<std::vector<std::uint64_t>> g(dim + 1,
                                              std::vector<std::uint64_t>(dim + 1, 0));
    for (int n_ = 0; n_ <= dim; ++n_) {
        g[n_][0] = 1;
        for (int k = 1; k <= n_; ++k) {
            if (n_ == k) {
                g[n_][k] = 1;
                continue;
            }
            std::uint64_t pk = 1;
            for (int i = 0; i < k; ++i) {
                if (pk > cap / p) {
                    pk = cap;
                    break;
                }
                pk *= p;
            }
            const std::uint64_t a = g[n_ - 1][k - 1];
            const std::uint64_t b = g[n_ - 1][k];
            std::uint64_t prod = (b != 0 && pk > cap / b) ? cap : pk * b;
            g[n_][k] = (a > cap - prod) ? cap : a + prod;
        }
    }
    std::uint64_t total = 0;
    for (int k = 0; k <= dim; ++k)
        total = (g[dim][k] > cap - total) ? cap : total + g[dim][k];
    return total;
}

std::vector<Matrix> all_subspaces(int dim, unsigned p) {
    std::vector<Matrix> out;
    // Enumerate r x dim reduced row echelon matrices and transpose: for each
    // pivot column combination, fill the free entries in all p^e ways.
    for (int r = 0; r <= dim; ++r) {
        std::vector<int> pivots(r);
        for (int i = 0; i < r; ++i) pivots[i] = i;
        bool more = r <= dim;
        while (more) {
            std::vector<bool> is_pivot(dim, false);
            for (int c : pivots) is_pivot[c] = true;
            std::vector<std::pair<int, int>> free_cells;
            for (int i = 0; i < r; ++i)
                for (int c = pivots[i] + 1; c < dim; ++c)
                    if (!is_pivot[c]) free_cells.emplace_back(i, c);

            std::vector<unsigned> fill(free_cells.size(), 0);
            bool fill_more = true;
            while (fill_more) {
                Matrix rref(static_cast<std::size_t>(r), static_cast<std::size_t>(dim), p);
                for (int i = 0; i < r; ++i) rref.set(i, pivots[i], 1);
                for (std::size_t i = 0; i < free_cells.size(); ++i)
                    rref.set(free_cells[i].first, free_cells[i].second, fill[i]);
                out.push_back(rref.transposed());

                fill_more = false;
                for (std::size_t i = 0; i < fill.size(); ++i) {
                    if (++fill[i] < p) {
                        fill_more = true;
                        break;
                    }
                    fill[i] = 0;
                }
            }

            // next pivot combination
            more = false;
            for (int i = r - 1; i >= 0; --i) {
                if (pivots[i] < dim - (r - i)) {
                    ++pivots[i];
                    for (int j = i + 1; j < r; ++j) pivots[j] = pivots[j - 1] + 1;
                    more = true;
                    break;
                }
            }
            if (r == 0) break; // single empty combination
        }
    }
    return out;
}

std::vector<SubobjectPair> subobject_embeddings(const Representation& m,
                                                std::uint64_t budget) {
    const Quiver& q = m.algebra()->quiver();
    const unsigned p = m.algebra()->prime();

    std::uint64_t total = 1;
    for (int v = 0; v < q.vertex_count(); ++v) {
        const std::uint64_t n = subspace_count(m.dim(v), p);
        if (n != 0 && total > budget / n) {
            std::ostringstream os;
            os << "subobject enumeration needs more than " << budget
               << " subspace tuples";
            throw BudgetError(os.str());
        }
        total *= n;
    }

    std::vector<std::vector<Matrix>> per_vertex;
    per_vertex.reserve(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v)
        per_vertex.push_back(all_subspaces(m.dim(v), p));

    std::vector<SubobjectPair> out;
    std::vector<std::size_t> idx(q.vertex_count(), 0);
    bool more = true;
    while (more) {
        std::vector<Matrix> bases;
        bases.reserve(q.vertex_count());
        for (int v = 0; v < q.vertex_count(); ++v) bases.push_back(per_vertex[v][idx[v]]);

        bool stable = true;
        for (int a = 0; a < q.arrow_count() && stable; ++a) {
            const Arrow& ar = q.arrow(a);
            if (!solve(bases[ar.target], m.arrow_map(a) * bases[ar.source]))
                stable = false;
        }
        if (stable) out.push_back(subrep_from_bases(m, bases));

        more = false;
        for (int v = 0; v < q.vertex_count(); ++v) {
            if (++idx[v] < per_vertex[v].size()) {
                more = true;
                break;
            }
            idx[v] = 0;
        }
    }
    return out;
}

SequenceCheck check_exact(std::span<const RepMorphism> chain) {
    SequenceCheck res;
    if (chain.empty()) return res;
    const int n = chain.front().source().algebra()->quiver().vertex_count();

    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!(chain[i].target() == chain[i + 1].source()))
            throw InputError("check_exact: chain is not composable");

    // Left end: 0 -> A0 -> A1 exact iff the first map is mono.
    if (!is_mono(chain.front())) {
        res.exact = false;
        res.failure_position = 0;
        res.detail = "first map is not a monomorphism";
        return res;
    }
    // Interior objects.
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (!compose(chain[i + 1], chain[i]).is_zero()) {
            res.exact = false;
            res.failure_position = static_cast<int>(i) + 1;
            res.detail = "consecutive maps do not compose to zero";
            return res;
        }
        for (int v = 0; v < n; ++v) {
            const std::size_t mid = static_cast<std::size_t>(chain[i].target().dim(v));
            if (rank(chain[i].vertex_map(v)) + rank(chain[i + 1].vertex_map(v)) != mid) {
                res.exact = false;
                res.failure_position = static_cast<int>(i) + 1;
                res.detail = "im != ker at vertex " +
                             chain[i].source().algebra()->quiver().vertex_name(v);
                return res;
            }
        }
    }
    // Right end: epi.
    if (!is_epi(chain.back())) {
        res.exact = false;
        res.failure_position = static_cast<int>(chain.size());
        res.detail = "last map is not an epimorphism";
        return res;
    }
    return res;
}

SequenceCheck check_exact(const ShortExactSequence& s) {
    const RepMorphism chain[] = {s.inner, s.outer};
    return check_exact(chain);
}

} // namespace qrec
