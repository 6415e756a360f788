#include "qrec/recollement.hpp"

#include <random>
#include <sstream>

namespace qrec {

namespace {

std::string mode_tag(BimoduleMode m) {
    return m == BimoduleMode::regular ? "T2" : "prod";
}

} // namespace

std::string functor_name(FunctorId f) {
    switch (f) {
        case FunctorId::i_upper: return "i^*";
        case FunctorId::i_star: return "i_*";
        case FunctorId::i_shriek: return "i^!";
        case FunctorId::j_lower: return "j_!";
        case FunctorId::j_upper: return "j^*";
        case FunctorId::j_rstar: return "j_*";
    }
    return "?";
}

AlgebraPtr doubled_algebra(const Algebra& base, BimoduleMode mode) {
    const Quiver& q = base.quiver();
    const int nv = q.vertex_count();
    const int na = q.arrow_count();

    std::vector<std::string> vertices;
    vertices.reserve(2 * nv);
    for (int v = 0; v < nv; ++v) vertices.push_back("x:" + q.vertex_name(v));
    for (int v = 0; v < nv; ++v) vertices.push_back("y:" + q.vertex_name(v));

    std::vector<Arrow> arrows;
    for (int a = 0; a < na; ++a) {
        const Arrow& ar = q.arrow(a);
        arrows.push_back({"x:" + ar.name, ar.source, ar.target});
    }
    for (int a = 0; a < na; ++a) {
        const Arrow& ar = q.arrow(a);
        arrows.push_back({"y:" + ar.name, nv + ar.source, nv + ar.target});
    }
    if (mode == BimoduleMode::regular)
        for (int v = 0; v < nv; ++v)
            arrows.push_back({"f:" + q.vertex_name(v), nv + v, v});

    std::vector<Relation> relations;
    for (const auto& rel : base.relations()) {
        Relation rx, ry;
        rx.label = "x:" + rel.label;
        ry.label = "y:" + rel.label;
        for (const auto& t : rel.terms) {
            RelationTerm tx{t.coefficient, {}}, ty{t.coefficient, {}};
            for (int a : t.path) {
                tx.path.push_back(a);
                ty.path.push_back(na + a);
            }
            rx.terms.push_back(std::move(tx));
            ry.terms.push_back(std::move(ty));
        }
        relations.push_back(std::move(rx));
        relations.push_back(std::move(ry));
    }
    if (mode == BimoduleMode::regular) {
        // Commutation of the connecting maps with every base arrow:
        // f_w ∘ (y-copy of a) - (x-copy of a) ∘ f_v = 0 for a: v -> w.
        const int conn0 = 2 * na;
        for (int a = 0; a < na; ++a) {
            const Arrow& ar = q.arrow(a);
            Relation rel;
            rel.label = "square:" + ar.name;
            rel.terms.push_back({1, {na + a, conn0 + ar.target}});
            rel.terms.push_back({base.prime() - 1, {conn0 + ar.source, a}});
            relations.push_back(std::move(rel));
        }
    }

    return std::make_shared<Algebra>(mode_tag(mode) + "(" + base.name() + ")",
                                     Quiver(std::move(vertices), std::move(arrows)),
                                     std::move(relations), base.prime());
}

RecollementInstance::RecollementInstance(std::string name, CategoryPtr base,
                                         BimoduleMode mode,
                                         const std::vector<TriAtomSpec>& tri_atoms)
    : name_(std::move(name)), mode_(mode), base_(std::move(base)) {
    const Algebra& balg = *base_->algebra();
    doubled_ = doubled_algebra(balg, mode_);

    const int nv = balg.quiver().vertex_count();
    const int na = balg.quiver().arrow_count();
    for (int v = 0; v < nv; ++v) x_vertex_.push_back(v);
    for (int v = 0; v < nv; ++v) y_vertex_.push_back(nv + v);
    for (int a = 0; a < na; ++a) x_arrow_.push_back(a);
    for (int a = 0; a < na; ++a) y_arrow_.push_back(na + a);
    if (mode_ == BimoduleMode::regular)
        for (int v = 0; v < nv; ++v) conn_arrow_.push_back(2 * na + v);

    std::vector<Atom> atoms;
    atoms.reserve(tri_atoms.size());
    for (const auto& spec : tri_atoms) {
        const Representation x = spec.x == "0"
                                     ? Representation::zero(base_->algebra())
                                     : base_->atom(base_->atom_index(spec.x)).rep;
        const Representation y = spec.y == "0"
                                     ? Representation::zero(base_->algebra())
                                     : base_->atom(base_->atom_index(spec.y)).rep;
        try {
            RepMorphism f(y, x, spec.f_maps);
            if (mode_ == BimoduleMode::zero && !f.is_zero())
                throw InputError("atom " + spec.name +
                                 ": connecting map must vanish in product mode");
            atoms.push_back({spec.name, to_rep(make_tri(x, y, f))});
        } catch (const InvariantError& e) {
            throw InputError("atom " + spec.name + ": " + e.what());
        }
    }
    tri_ = std::make_shared<ModuleCategory>(name_, doubled_, std::move(atoms));

    dec_i_upper_.reserve(tri_->atom_count());
    dec_i_shriek_.reserve(tri_->atom_count());
    dec_j_upper_.reserve(tri_->atom_count());
    for (int i = 0; i < tri_->atom_count(); ++i) {
        const TriModule t = tri_atom(i);
        dec_i_upper_.push_back(base_->decompose(i_upper(t)));
        dec_i_shriek_.push_back(base_->decompose(i_shriek(t)));
        dec_j_upper_.push_back(base_->decompose(j_upper(t)));
    }
}

TriModule RecollementInstance::make_tri(Representation x, Representation y,
                                        RepMorphism f) const {
    if (!(f.source() == y) || !(f.target() == x))
        throw InputError("triple: connecting map must run from the second "
                         "component to the first");
    if (mode_ == BimoduleMode::zero && !f.is_zero())
        throw InputError("triple: connecting map must vanish in product mode");
    return TriModule{std::move(x), std::move(y), std::move(f)};
}

Representation RecollementInstance::to_rep(const TriModule& t) const {
    const Quiver& bq = base_->algebra()->quiver();
    const int nv = bq.vertex_count();
    const int na = bq.arrow_count();
    std::vector<int> dims(2 * nv, 0);
    for (int v = 0; v < nv; ++v) {
        dims[x_vertex_[v]] = t.x.dim(v);
        dims[y_vertex_[v]] = t.y.dim(v);
    }
    std::vector<Matrix> maps(doubled_->quiver().arrow_count());
    for (int a = 0; a < na; ++a) {
        maps[x_arrow_[a]] = t.x.arrow_map(a);
        maps[y_arrow_[a]] = t.y.arrow_map(a);
    }
    if (mode_ == BimoduleMode::regular)
        for (int v = 0; v < nv; ++v) maps[conn_arrow_[v]] = t.f.vertex_map(v);
    return Representation(doubled_, std::move(dims), std::move(maps));
}

TriModule RecollementInstance::to_tri(const Representation& r) const {
    if (r.algebra() != doubled_)
        throw InputError("representation is not over the doubled algebra");
    const Quiver& bq = base_->algebra()->quiver();
    const int nv = bq.vertex_count();
    const int na = bq.arrow_count();

    std::vector<int> xd(nv), yd(nv);
    std::vector<Matrix> xm(na), ym(na);
    for (int v = 0; v < nv; ++v) {
        xd[v] = r.dim(x_vertex_[v]);
        yd[v] = r.dim(y_vertex_[v]);
    }
    for (int a = 0; a < na; ++a) {
        xm[a] = r.arrow_map(x_arrow_[a]);
        ym[a] = r.arrow_map(y_arrow_[a]);
    }
    Representation x(base_->algebra(), std::move(xd), std::move(xm));
    Representation y(base_->algebra(), std::move(yd), std::move(ym));

    std::vector<Matrix> fm;
    fm.reserve(nv);
    for (int v = 0; v < nv; ++v)
        fm.push_back(mode_ == BimoduleMode::regular
                         ? r.arrow_map(conn_arrow_[v])
                         : Matrix(static_cast<std::size_t>(x.dim(v)),
                                  static_cast<std::size_t>(y.dim(v)),
                                  base_->algebra()->prime()));
    RepMorphism f(y, x, std::move(fm));
    return TriModule{std::move(x), std::move(y), std::move(f)};
}

RepMorphism RecollementInstance::to_rep(const TriMorphism& m) const {
    const int nv = base_->algebra()->quiver().vertex_count();
    std::vector<Matrix> maps(2 * nv);
    for (int v = 0; v < nv; ++v) {
        maps[x_vertex_[v]] = m.a.vertex_map(v);
        maps[y_vertex_[v]] = m.b.vertex_map(v);
    }
    return RepMorphism(to_rep(m.source), to_rep(m.target), std::move(maps));
}

TriMorphism RecollementInstance::to_tri(const RepMorphism& m) const {
    const int nv = base_->algebra()->quiver().vertex_count();
    TriModule src = to_tri(m.source());
    TriModule tgt = to_tri(m.target());
    std::vector<Matrix> am(nv), bm(nv);
    for (int v = 0; v < nv; ++v) {
        am[v] = m.vertex_map(x_vertex_[v]);
        bm[v] = m.vertex_map(y_vertex_[v]);
    }
    RepMorphism a(src.x, tgt.x, std::move(am));
    RepMorphism b(src.y, tgt.y, std::move(bm));
    return TriMorphism{std::move(src), std::move(tgt), std::move(a), std::move(b)};
}

// --- functors on objects ----------------------------------------------------

TriModule RecollementInstance::i_star(const Representation& x) const {
    Representation z = Representation::zero(base_->algebra());
    RepMorphism f = RepMorphism::zero(z, x);
    return TriModule{x, std::move(z), std::move(f)};
}

Representation RecollementInstance::i_upper(const TriModule& b) const {
    return cokernel(b.f).object;
}

Representation RecollementInstance::i_shriek(const TriModule& b) const { return b.x; }

TriModule RecollementInstance::j_lower(const Representation& c) const {
    if (mode_ == BimoduleMode::regular)
        return TriModule{c, c, RepMorphism::identity(c)};
    return j_rstar(c);
}

Representation RecollementInstance::j_upper(const TriModule& b) const { return b.y; }

TriModule RecollementInstance::j_rstar(const Representation& c) const {
    Representation z = Representation::zero(base_->algebra());
    RepMorphism f = RepMorphism::zero(c, z);
    return TriModule{std::move(z), c, std::move(f)};
}

// --- functors on morphisms ---------------------------------------------------

TriMorphism RecollementInstance::i_star(const RepMorphism& a) const {
    TriModule s = i_star(a.source());
    TriModule t = i_star(a.target());
    RepMorphism b = RepMorphism::zero(s.y, t.y);
    return TriMorphism{std::move(s), std::move(t), a, std::move(b)};
}

RepMorphism RecollementInstance::i_upper(const TriMorphism& m) const {
    const QuotientPair cs = cokernel(m.source.f);
    const QuotientPair ct = cokernel(m.target.f);
    const Quiver& bq = base_->algebra()->quiver();
    const unsigned p = base_->algebra()->prime();

    std::vector<Matrix> maps;
    maps.reserve(bq.vertex_count());
    for (int v = 0; v < bq.vertex_count(); ++v) {
        const Matrix& ps = cs.projection.vertex_map(v);
        const auto rinv = solve(ps, Matrix::identity(ps.rows(), p));
        if (!rinv) throw InvariantError("i^* on morphisms: projection not split");
        const Matrix induced = ct.projection.vertex_map(v) * m.a.vertex_map(v) * *rinv;
        if (!(induced * ps == ct.projection.vertex_map(v) * m.a.vertex_map(v)))
            throw InvariantError("i^* on morphisms: induced map ill-defined");
        maps.push_back(induced);
    }
    return RepMorphism(cs.object, ct.object, std::move(maps));
}

RepMorphism RecollementInstance::i_shriek(const TriMorphism& m) const { return m.a; }

TriMorphism RecollementInstance::j_lower(const RepMorphism& b) const {
    TriModule s = j_lower(b.source());
    TriModule t = j_lower(b.target());
    if (mode_ == BimoduleMode::regular)
        return TriMorphism{std::move(s), std::move(t), b, b};
    RepMorphism a = RepMorphism::zero(s.x, t.x);
    return TriMorphism{std::move(s), std::move(t), std::move(a), b};
}

RepMorphism RecollementInstance::j_upper(const TriMorphism& m) const { return m.b; }

TriMorphism RecollementInstance::j_rstar(const RepMorphism& b) const {
    TriModule s = j_rstar(b.source());
    TriModule t = j_rstar(b.target());
    RepMorphism a = RepMorphism::zero(s.x, t.x);
    return TriMorphism{std::move(s), std::move(t), std::move(a), b};
}

bool RecollementInstance::domain_is_middle(FunctorId f) {
    return f == FunctorId::i_upper || f == FunctorId::i_shriek ||
           f == FunctorId::j_upper;
}

RepMorphism RecollementInstance::apply(FunctorId f, const RepMorphism& m) const {
    if (domain_is_middle(f)) {
        const TriMorphism t = to_tri(m);
        switch (f) {
            case FunctorId::i_upper: return i_upper(t);
            case FunctorId::i_shriek: return i_shriek(t);
            case FunctorId::j_upper: return j_upper(t);
            default: break;
        }
    } else {
        switch (f) {
            case FunctorId::i_star: return to_rep(i_star(m));
            case FunctorId::j_lower: return to_rep(j_lower(m));
            case FunctorId::j_rstar: return to_rep(j_rstar(m));
            default: break;
        }
    }
    throw InputError("apply: functor/domain mismatch");
}

bool RecollementInstance::is_exact(FunctorId f) const {
    // Everything except i^* acts componentwise on triples; i^* is a
    // cokernel and only right exact when the connecting maps carry content.
    if (mode_ == BimoduleMode::zero) return true;
    return f != FunctorId::i_upper;
}

TriMorphism RecollementInstance::counit_eps(const TriModule& b) const {
    TriModule s = j_lower(b.y);
    RepMorphism a = (mode_ == BimoduleMode::regular)
                        ? b.f
                        : RepMorphism::zero(s.x, b.x);
    return TriMorphism{std::move(s), b, std::move(a), RepMorphism::identity(b.y)};
}

TriMorphism RecollementInstance::unit_eta(const TriModule& b) const {
    TriModule t = j_rstar(b.y);
    RepMorphism a = RepMorphism::zero(b.x, t.x);
    return TriMorphism{b, std::move(t), std::move(a), RepMorphism::identity(b.y)};
}

RecollementInstance::CanonicalSequences
RecollementInstance::canonical_sequences(const TriModule& b) const {
    CanonicalSequences out;

    const RepMorphism eps = to_rep(counit_eps(b));
    const SubobjectPair k1 = kernel(eps);
    const QuotientPair c1 = cokernel(eps);
    out.through_counit = {k1.inclusion, eps, c1.projection};
    const TriModule kt = to_tri(k1.object);
    if (!kt.y.is_zero())
        throw InvariantError("canonical sequence: counit kernel leaves the "
                             "embedded subcategory");
    out.end_term_counit = kt.x;
    out.end_term_counit_decomp = base_->decompose(kt.x);

    const RepMorphism eta = to_rep(unit_eta(b));
    const SubobjectPair k2 = kernel(eta);
    const QuotientPair c2 = cokernel(eta);
    out.through_unit = {k2.inclusion, eta, c2.projection};
    const TriModule ct = to_tri(c2.object);
    if (!ct.y.is_zero())
        throw InvariantError("canonical sequence: unit cokernel leaves the "
                             "embedded subcategory");
    out.end_term_unit = ct.x;
    out.end_term_unit_decomp = base_->decompose(ct.x);

    for (const auto* chain : {&out.through_counit, &out.through_unit}) {
        const SequenceCheck chk = check_exact(*chain);
        if (!chk.exact)
            throw InvariantError("canonical sequence not exact at position " +
                                 std::to_string(chk.failure_position) + ": " +
                                 chk.detail);
    }
    return out;
}

std::vector<RepMorphism>
RecollementInstance::comparison_sequence(const Representation& c) const {
    const TriModule t2 = j_lower(c);
    const TriModule t3 = j_rstar(c);
    const TriModule t1 = i_star(i_shriek(t2));
    const TriModule t4 = i_star(i_upper(t3));

    // t1 -> t2 is the identity on the first component; t2 -> t3 the
    // identity on the second; t3 -> t4 lands in zero.
    TriMorphism m1{t1, t2, RepMorphism::identity(t2.x), RepMorphism::zero(t1.y, t2.y)};
    TriMorphism m2{t2, t3, RepMorphism::zero(t2.x, t3.x), RepMorphism::identity(c)};
    TriMorphism m3{t3, t4, RepMorphism::zero(t3.x, t4.x), RepMorphism::zero(t3.y, t4.y)};

    std::vector<RepMorphism> chain = {to_rep(m1), to_rep(m2), to_rep(m3)};
    const SequenceCheck chk = check_exact(chain);
    if (!chk.exact)
        throw InvariantError("comparison sequence not exact at position " +
                             std::to_string(chk.failure_position) + ": " + chk.detail);
    return chain;
}

RecollementInstance::GatedSequence
RecollementInstance::half_sequence(const TriModule& b, int variant, bool force) const {
    GatedSequence out;
    if (variant == 1) {
        out.hypothesis_verified = is_exact(FunctorId::i_upper);
        if (!out.hypothesis_verified && !force)
            throw InputError("hypothesis fails: " + functor_name(FunctorId::i_upper) +
                             " is not exact on instance " + name_);
        const RepMorphism eps = to_rep(counit_eps(b));
        out.chain = {eps, cokernel(eps).projection};
    } else if (variant == 2) {
        out.hypothesis_verified = is_exact(FunctorId::i_shriek);
        if (!out.hypothesis_verified && !force)
            throw InputError("hypothesis fails: " + functor_name(FunctorId::i_shriek) +
                             " is not exact on instance " + name_);
        const RepMorphism eta = to_rep(unit_eta(b));
        out.chain = {kernel(eta).inclusion, eta};
    } else {
        throw InputError("half_sequence: variant must be 1 or 2");
    }
    out.check = check_exact(out.chain);
    if (!out.check.exact && out.hypothesis_verified)
        throw InvariantError("short sequence not exact despite verified hypothesis");
    return out;
}

RecollementInstance::ProbeSes
RecollementInstance::random_ses(const ModuleCategory& cat, std::uint64_t seed) const {
    if (cat.atom_count() == 0)
        throw InputError("random_ses: category has no atoms");
    std::mt19937_64 rng(seed);
    const unsigned p = cat.algebra()->prime();

    const int nsum = 1 + static_cast<int>(rng() % 3);
    std::vector<Representation> parts;
    Decomposition mdec(cat.atom_count(), 0);
    for (int i = 0; i < nsum; ++i) {
        const int a = static_cast<int>(rng() % cat.atom_count());
        parts.push_back(cat.atom(a).rep);
        ++mdec[a];
    }
    const Representation m = direct_sum(parts).object;

    const int gsum = 1 + static_cast<int>(rng() % 2);
    std::vector<Representation> gparts;
    for (int i = 0; i < gsum; ++i)
        gparts.push_back(cat.atom(static_cast<int>(rng() % cat.atom_count())).rep);
    const Representation n = direct_sum(gparts).object;

    RepMorphism g = RepMorphism::zero(n, m);
    for (const RepMorphism& phi : hom_basis(n, m)) {
        const unsigned c = static_cast<unsigned>(rng() % p);
        if (c != 0) g = g + phi.scaled(c);
    }

    const ImageFactorization im = image(g);
    const QuotientPair q = cokernel(im.inclusion);

    std::ostringstream desc;
    desc << "0 -> " << cat.decomposition_name(cat.decompose(im.object)) << " -> "
         << cat.decomposition_name(mdec) << " -> "
         << cat.decomposition_name(cat.decompose(q.object)) << " -> 0";
    return {im.inclusion, q.projection, desc.str()};
}

std::optional<std::string>
RecollementInstance::check_functor_on_ses(FunctorId f, const ProbeSes& ses) const {
    const RepMorphism fi = apply(f, ses.inner);
    const RepMorphism fo = apply(f, ses.outer);
    const RepMorphism chain[] = {fi, fo};
    const SequenceCheck chk = check_exact(chain);
    if (chk.exact) return std::nullopt;
    static const char* where[] = {"left", "middle", "right"};
    std::ostringstream os;
    os << functor_name(f) << " breaks exactness (" << where[chk.failure_position]
       << ") on " << ses.description << ": " << chk.detail;
    return os.str();
}

std::optional<RecollementInstance::Counterexample>
RecollementInstance::probe_exactness(FunctorId f, int trials, std::uint64_t seed) const {
    const ModuleCategory& cat = domain_is_middle(f) ? *tri_ : *base_;

    std::vector<ProbeSes> battery;
    if (domain_is_middle(f)) {
        // The kernel-of-unit sequences through every atom.
        for (int i = 0; i < cat.atom_count(); ++i) {
            const TriModule b = tri_atom(i);
            const RepMorphism eta = to_rep(unit_eta(b));
            battery.push_back({kernel(eta).inclusion, eta,
                               "0 -> i_*i^!(" + cat.atom(i).name + ") -> " +
                                   cat.atom(i).name + " -> j_*j^*(" +
                                   cat.atom(i).name + ") -> 0"});
        }
    }
    // Kernel/image/cokernel factorizations of every basis morphism between
    // atoms.
    for (int i = 0; i < cat.atom_count(); ++i)
        for (int j = 0; j < cat.atom_count(); ++j)
            for (const RepMorphism& phi : cat.atom_hom(i, j)) {
                const ImageFactorization im = image(phi);
                battery.push_back({kernel(phi).inclusion, im.projection,
                                   "0 -> ker -> " + cat.atom(i).name +
                                       " -> im -> 0"});
                battery.push_back({im.inclusion, cokernel(im.inclusion).projection,
                                   "0 -> im -> " + cat.atom(j).name +
                                       " -> coker -> 0"});
            }

    for (const ProbeSes& ses : battery)
        if (auto failure = check_functor_on_ses(f, ses))
            return Counterexample{ses, *failure};

    for (int t = 0; t < trials; ++t) {
        const ProbeSes ses = random_ses(cat, seed + static_cast<std::uint64_t>(t));
        if (auto failure = check_functor_on_ses(f, ses))
            return Counterexample{ses, *failure};
    }
    return std::nullopt;
}

Report RecollementInstance::verify_axioms() const {
    Report r;
    r.title = "recollement axioms on " + name_;

    r.add("fingerprint matrix invertible (base)", base_->fingerprint_invertible());
    r.add("fingerprint matrix invertible (middle)", tri_->fingerprint_invertible());

    const int nb = base_->atom_count();
    const int nt = tri_->atom_count();

    // Adjunction Hom-dimension tables over the full atom grids.
    {
        int bad = 0;
        std::string witness;
        for (int i = 0; i < nb && bad == 0; ++i)
            for (int j = 0; j < nt && bad == 0; ++j) {
                const Representation& a = base_->atom(i).rep;
                const TriModule b = tri_atom(j);
                const Representation brep = tri_->atom(j).rep;

                const auto lhs1 = hom_basis(i_upper(b), a).size();
                const auto rhs1 = hom_basis(brep, to_rep(i_star(a))).size();
                const auto lhs2 = hom_basis(to_rep(i_star(a)), brep).size();
                const auto rhs2 = hom_basis(a, i_shriek(b)).size();
                const auto lhs3 = hom_basis(to_rep(j_lower(a)), brep).size();
                const auto rhs3 = hom_basis(a, j_upper(b)).size();
                const auto lhs4 = hom_basis(j_upper(b), a).size();
                const auto rhs4 = hom_basis(brep, to_rep(j_rstar(a))).size();
                if (lhs1 != rhs1 || lhs2 != rhs2 || lhs3 != rhs3 || lhs4 != rhs4) {
                    ++bad;
                    witness = "at (" + base_->atom(i).name + ", " +
                              tri_->atom(j).name + ")";
                }
            }
        r.add("adjunction Hom dimensions (4 pairs, full atom grid)", bad == 0, witness);
    }

    // Full faithfulness of the three embeddings.
    {
        int bad = 0;
        std::string witness;
        for (int i = 0; i < nb && bad == 0; ++i)
            for (int j = 0; j < nb && bad == 0; ++j) {
                const Representation& a1 = base_->atom(i).rep;
                const Representation& a2 = base_->atom(j).rep;
                const auto d = hom_basis(a1, a2).size();
                if (hom_basis(to_rep(i_star(a1)), to_rep(i_star(a2))).size() != d ||
                    hom_basis(to_rep(j_lower(a1)), to_rep(j_lower(a2))).size() != d ||
                    hom_basis(to_rep(j_rstar(a1)), to_rep(j_rstar(a2))).size() != d) {
                    ++bad;
                    witness = "at (" + base_->atom(i).name + ", " +
                              base_->atom(j).name + ")";
                }
            }
        r.add("i_*, j_!, j_* fully faithful", bad == 0, witness);
    }

    // Im i_* = Ker j^*.
    try {
        Subcategory i_image = Subcategory::none(nt);
        bool ok = true;
        std::string witness;
        for (int i = 0; i < nb && ok; ++i) {
            const Decomposition d = tri_->decompose(to_rep(i_star(base_->atom(i).rep)));
            int total = 0, where = -1;
            for (int j = 0; j < nt; ++j) {
                total += d[j];
                if (d[j] > 0) where = j;
            }
            if (total != 1) {
                ok = false;
                witness = "i_*(" + base_->atom(i).name + ") is not an atom";
            } else {
                i_image.insert(where);
            }
        }
        for (int j = 0; j < nt && ok; ++j) {
            const bool in_kernel = j_upper(tri_atom(j)).is_zero();
            const bool in_image = i_image.contains(j);
            if (in_kernel != in_image) {
                ok = false;
                witness = "at " + tri_->atom(j).name + ": j^*-kernel " +
                          (in_kernel ? "yes" : "no") + " vs i_*-image " +
                          (in_image ? "yes" : "no");
            }
        }
        r.add("Im i_* = Ker j^*", ok, witness);
    } catch (const Error& e) {
        r.add("Im i_* = Ker j^*", false, e.what());
    }

    // Unit/counit natural isomorphisms on every base atom.
    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i < nb && ok; ++i) {
            const Representation& a = base_->atom(i).rep;
            // i^* i_* -> 1: the cokernel presentation of i^*i_*(a) maps
            // isomorphically back to a.
            const QuotientPair c = cokernel(i_star(a).f);
            if (!is_iso(c.projection)) {
                ok = false;
                witness = "i^*i_* not iso at " + base_->atom(i).name;
            }
            if (ok && !(i_shriek(i_star(a)) == a)) {
                ok = false;
                witness = "i^!i_* not identity at " + base_->atom(i).name;
            }
            if (ok && !(j_upper(j_lower(a)) == a)) {
                ok = false;
                witness = "j^*j_! not identity at " + base_->atom(i).name;
            }
            if (ok && !(j_upper(j_rstar(a)) == a)) {
                ok = false;
                witness = "j^*j_* not identity at " + base_->atom(i).name;
            }
        }
        r.add("unit/counit comparison maps are isomorphisms", ok, witness);
    }

    // Vanishing composites.
    {
        bool ok = true;
        std::string witness;
        for (int i = 0; i < nb && ok; ++i) {
            const Representation& a = base_->atom(i).rep;
            if (!i_upper(j_lower(a)).is_zero()) {
                ok = false;
                witness = "i^*j_! nonzero at " + base_->atom(i).name;
            }
            if (ok && !i_shriek(j_rstar(a)).is_zero()) {
                ok = false;
                witness = "i^!j_* nonzero at " + base_->atom(i).name;
            }
        }
        r.add("i^* j_! = 0 and i^! j_* = 0", ok, witness);
    }

    if (mode_ == BimoduleMode::zero) {
        bool ok = true;
        std::string witness;
        for (int j = 0; j < nt && ok; ++j) {
            const TriModule b = tri_atom(j);
            const QuotientPair c = cokernel(b.f);
            if (!is_iso(c.projection)) {
                ok = false;
                witness = "at " + tri_->atom(j).name;
            }
        }
        r.add("i^* = i^! on every atom (product mode)", ok, witness);
    }

    return r;
}

Decomposition RecollementInstance::middle_decomp(const TriModule& t) const {
    return tri_->decompose(to_rep(t));
}

} // namespace qrec
