#include "qrec/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#ifndef QREC_DEFAULT_DATA_DIR
#define QREC_DEFAULT_DATA_DIR "data"
#endif

namespace qrec {

namespace {

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw InputError("failed to parse " + path.string() + ": " + e.what());
    }
    return doc;
}

Matrix parse_matrix(const json& doc, std::size_t rows, std::size_t cols, unsigned p,
                    const std::string& what) {
    if (!doc.is_array()) throw InputError(what + ": matrix must be an array of rows");
    if (doc.empty()) {
        if (rows != 0 && cols != 0)
            throw InputError(what + ": empty matrix but expected " +
                             std::to_string(rows) + "x" + std::to_string(cols));
        return Matrix(rows, cols, p);
    }
    if (doc.size() != rows)
        throw InputError(what + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, p);
    for (std::size_t r = 0; r < rows; ++r) {
        const json& row = doc[r];
        if (!row.is_array() || row.size() != cols)
            throw InputError(what + ": expected " + std::to_string(cols) +
                             " columns in row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, row[c].get<long long>());
    }
    return m;
}

} // namespace

CategoryPtr parse_algebra(const json& doc, unsigned prime_override) {
    const std::string name = doc.at("name").get<std::string>();
    const unsigned p =
        prime_override != 0 ? prime_override : doc.at("prime").get<unsigned>();

    std::vector<std::string> vertices = doc.at("vertices").get<std::vector<std::string>>();
    Quiver proto(vertices, {});
    std::vector<Arrow> arrows;
    for (const json& a : doc.at("arrows")) {
        if (!a.is_array() || a.size() != 3)
            throw InputError("arrow entries must be [name, source, target]");
        arrows.push_back({a[0].get<std::string>(),
                          proto.vertex_index(a[1].get<std::string>()),
                          proto.vertex_index(a[2].get<std::string>())});
    }
    Quiver quiver(vertices, arrows);

    std::vector<Relation> relations;
    if (doc.contains("relations"))
        for (const json& r : doc.at("relations")) {
            Relation rel;
            rel.label = r.value("label", "");
            for (const json& t : r.at("terms")) {
                RelationTerm term;
                long long coef = t.at("coef").get<long long>();
                coef %= static_cast<long long>(p);
                if (coef < 0) coef += p;
                term.coefficient = static_cast<unsigned>(coef);
                for (const json& arrow_name : t.at("path"))
                    term.path.push_back(quiver.arrow_index(arrow_name.get<std::string>()));
                rel.terms.push_back(std::move(term));
            }
            relations.push_back(std::move(rel));
        }

    auto algebra = std::make_shared<Algebra>(name, std::move(quiver),
                                             std::move(relations), p);

    std::vector<Atom> atoms;
    if (doc.contains("atoms"))
        for (const json& a : doc.at("atoms"))
            atoms.push_back({a.at("name").get<std::string>(),
                             parse_representation(algebra, a)});
    return std::make_shared<ModuleCategory>(name, algebra, std::move(atoms));
}

Representation parse_representation(const AlgebraPtr& algebra, const json& doc) {
    const Quiver& q = algebra->quiver();
    const std::vector<int> dims = doc.at("dims").get<std::vector<int>>();
    if (static_cast<int>(dims.size()) != q.vertex_count())
        throw InputError("dims length does not match the vertex count");

    std::vector<Matrix> maps;
    maps.reserve(q.arrow_count());
    const json empty = json::object();
    const json& m = doc.contains("maps") ? doc.at("maps") : empty;
    for (int a = 0; a < q.arrow_count(); ++a) {
        const Arrow& ar = q.arrow(a);
        const std::size_t rows = static_cast<std::size_t>(dims[ar.target]);
        const std::size_t cols = static_cast<std::size_t>(dims[ar.source]);
        if (m.contains(ar.name))
            maps.push_back(parse_matrix(m.at(ar.name), rows, cols, algebra->prime(),
                                        "map for arrow " + ar.name));
        else
            maps.emplace_back(rows, cols, algebra->prime());
    }
    Representation rep(algebra, dims, std::move(maps));
    validate_representation(rep);
    return rep;
}

CategoryPtr load_algebra_file(const std::filesystem::path& path,
                              unsigned prime_override) {
    return parse_algebra(read_json(path), prime_override);
}

std::shared_ptr<RecollementInstance>
load_instance_file(const std::filesystem::path& path, unsigned prime_override) {
    const json doc = read_json(path);
    const std::string name = doc.at("name").get<std::string>();
    const std::string mode_str = doc.at("mode").get<std::string>();
    BimoduleMode mode;
    if (mode_str == "regular")
        mode = BimoduleMode::regular;
    else if (mode_str == "zero")
        mode = BimoduleMode::zero;
    else
        throw InputError("mode must be \"regular\" or \"zero\", got " + mode_str);

    const std::filesystem::path base_path =
        path.parent_path() / doc.at("base_algebra").get<std::string>();
    CategoryPtr base = load_algebra_file(base_path, prime_override);

    const Quiver& q = base->algebra()->quiver();
    const unsigned p = base->algebra()->prime();
    std::vector<TriAtomSpec> specs;
    for (const json& a : doc.at("atoms")) {
        TriAtomSpec spec;
        spec.name = a.at("name").get<std::string>();
        spec.x = a.at("x").get<std::string>();
        spec.y = a.at("y").get<std::string>();

        auto dim_of = [&](const std::string& atom_name, int v) -> std::size_t {
            if (atom_name == "0") return 0;
            return static_cast<std::size_t>(
                base->atom(base->atom_index(atom_name)).rep.dim(v));
        };
        const json empty = json::object();
        const json& fm = a.contains("f") ? a.at("f") : empty;
        for (int v = 0; v < q.vertex_count(); ++v) {
            const std::size_t rows = dim_of(spec.x, v);
            const std::size_t cols = dim_of(spec.y, v);
            if (fm.contains(q.vertex_name(v)))
                spec.f_maps.push_back(parse_matrix(fm.at(q.vertex_name(v)), rows, cols,
                                                   p, spec.name + " connecting map"));
            else
                spec.f_maps.emplace_back(rows, cols, p);
        }
        specs.push_back(std::move(spec));
    }
    return std::make_shared<RecollementInstance>(name, base, mode, specs);
}

TorsionPair parse_pair(const ModuleCategory& cat, const json& doc) {
    return {subcategory_from_names(cat, doc.at("x").get<std::vector<std::string>>()),
            subcategory_from_names(cat, doc.at("y").get<std::vector<std::string>>())};
}

TtfTriple parse_triple(const ModuleCategory& cat, const json& doc) {
    return {subcategory_from_names(cat, doc.at("x").get<std::vector<std::string>>()),
            subcategory_from_names(cat, doc.at("y").get<std::vector<std::string>>()),
            subcategory_from_names(cat, doc.at("z").get<std::vector<std::string>>())};
}

namespace {

json names_json(const ModuleCategory& cat, const Subcategory& s) {
    json arr = json::array();
    for (int i = 0; i < cat.atom_count(); ++i)
        if (s.contains(i)) arr.push_back(cat.atom(i).name);
    return arr;
}

} // namespace

json pair_to_json(const ModuleCategory& cat, const TorsionPair& tp) {
    return json{{"x", names_json(cat, tp.torsion)},
                {"y", names_json(cat, tp.torsion_free)}};
}

json triple_to_json(const ModuleCategory& cat, const TtfTriple& t) {
    return json{{"x", names_json(cat, t.x)},
                {"y", names_json(cat, t.y)},
                {"z", names_json(cat, t.z)}};
}

json report_to_json(const Report& r) {
    json checks = json::array();
    for (const Check& c : r.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"skipped", c.skipped},
                              {"detail", c.detail}});
    return json{{"title", r.title}, {"all_pass", r.all_pass()}, {"checks", checks}};
}

std::string format_report(const Report& r) {
    std::ostringstream os;
    os << r.title << "\n";
    for (const Check& c : r.checks) {
        const char* tag = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
        os << "  [" << tag << "] " << c.name;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << "\n";
    }
    os << (r.all_pass() ? "all checks pass" : "CHECKS FAILED") << "\n";
    return os.str();
}

std::string format_pair(const ModuleCategory& cat, const TorsionPair& tp) {
    return "X = " + subcategory_names(cat, tp.torsion) +
           "\nY = " + subcategory_names(cat, tp.torsion_free);
}

std::filesystem::path resolve_input(const std::string& name,
                                    const std::filesystem::path& data_dir) {
    const std::filesystem::path direct(name);
    if (std::filesystem::exists(direct)) return direct;
    for (const auto& candidate :
         {data_dir / name, data_dir / (name + ".json")})
        if (std::filesystem::exists(candidate)) return candidate;
    throw InputError("cannot resolve input '" + name + "' (searched " +
                     data_dir.string() + ")");
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("QREC_DATA_DIR"); env && *env)
        return env;
    return QREC_DEFAULT_DATA_DIR;
}

} // namespace qrec
