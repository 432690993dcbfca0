#include "aqg/algebra_file.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "json.hpp"

#include "aqg/linalg.hpp"

namespace aqg {

namespace {

using nlohmann::json;

using SparseRow = std::vector<std::pair<std::int64_t, Scalar>>;
using CoproductRow = std::vector<std::tuple<std::int64_t, std::int64_t, Scalar>>;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw error(origin + ": " + what);
}

std::int64_t checked_id(const json& v, std::int64_t dim, const std::string& origin,
                        const std::string& where) {
    if (!v.is_number_integer()) fail(origin, where + ": basis id must be an integer");
    const auto id = v.get<std::int64_t>();
    if (id < 0 || id >= dim)
        fail(origin, where + ": basis id " + std::to_string(id) + " outside [0, " +
                         std::to_string(dim) + ")");
    return id;
}

Scalar checked_coeff(const json& v, const ScalarField& f, const std::string& origin,
                     const std::string& where) {
    if (!v.is_string()) fail(origin, where + ": coefficient must be a string");
    try {
        return Scalar::parse(v.get<std::string>(), f);
    } catch (const error& e) {
        fail(origin, where + ": " + e.what());
    }
}

// [[i, "c"], ...] with duplicate ids rejected
SparseRow parse_sparse(const json& v, std::int64_t dim, const ScalarField& f,
                       const std::string& origin, const std::string& where) {
    if (!v.is_array()) fail(origin, where + ": expected an array of [id, coeff] pairs");
    SparseRow row;
    std::set<std::int64_t> seen;
    for (const json& term : v) {
        if (!term.is_array() || term.size() != 2)
            fail(origin, where + ": each entry must be an [id, coeff] pair");
        const std::int64_t id = checked_id(term[0], dim, origin, where);
        if (!seen.insert(id).second)
            fail(origin, where + ": duplicate entry for basis id " + std::to_string(id));
        row.emplace_back(id, checked_coeff(term[1], f, origin, where));
    }
    return row;
}

Element row_to_element(const AlgebraPtr& alg, const SparseRow& row) {
    Element e(alg);
    for (const auto& [id, c] : row) e.add_term(id, c);
    return e;
}

json sparse_json(const Element& e) {
    json a = json::array();
    for (const auto& [id, c] : e.terms()) a.push_back(json::array({id, c.str()}));
    return a;
}

} // namespace

AlgebraFileData parse_algebra_json(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(origin, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(origin, "top level must be an object");

    static const std::set<std::string> known = {"version", "name",    "field",  "basis",
                                               "unital",  "unit",    "product", "coproduct",
                                               "counit",  "antipode", "integral"};
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (!known.count(key)) fail(origin, "unknown key \"" + key + "\"");
    }

    if (!doc.contains("version") || !doc["version"].is_string() ||
        doc["version"].get<std::string>() != "v1")
        fail(origin, "missing or unsupported version (expected \"v1\")");

    ScalarField f;
    if (doc.contains("field")) {
        const json& fd = doc["field"];
        if (!fd.is_object()) fail(origin, "field: must be an object");
        const std::string backend = fd.value("backend", std::string("exact"));
        if (backend == "exact") {
            f.exact = true;
            if (fd.contains("cyclotomic_order")) {
                if (!fd["cyclotomic_order"].is_number_integer())
                    fail(origin, "field.cyclotomic_order: must be an integer");
                const auto n = fd["cyclotomic_order"].get<std::int64_t>();
                if (n < 1 || n > 1000) fail(origin, "field.cyclotomic_order: outside [1, 1000]");
                f.cyclo_order = static_cast<int>(n);
            }
        } else if (backend == "approx") {
            f.exact = false;
            if (fd.contains("eps")) {
                if (!fd["eps"].is_number()) fail(origin, "field.eps: must be a number");
                f.eps = fd["eps"].get<double>();
                if (!(f.eps > 0.0)) fail(origin, "field.eps: must be positive");
            }
        } else {
            fail(origin, "field.backend: expected \"exact\" or \"approx\"");
        }
    }

    if (!doc.contains("basis") || !doc["basis"].is_array() || doc["basis"].empty())
        fail(origin, "basis: required non-empty array of labels");
    std::vector<std::string> labels;
    std::set<std::string> label_set;
    for (const json& v : doc["basis"]) {
        if (!v.is_string()) fail(origin, "basis: labels must be strings");
        std::string s = v.get<std::string>();
        if (s.empty()) fail(origin, "basis: labels must be non-empty");
        if (!label_set.insert(s).second) fail(origin, "basis: duplicate label \"" + s + "\"");
        labels.push_back(std::move(s));
    }
    const auto dim = static_cast<std::int64_t>(labels.size());

    std::string name = doc.value("name", std::string());
    if (name.empty()) {
        name = std::filesystem::path(origin).stem().string();
        if (name.empty()) name = "file-algebra";
    }

    if (doc.contains("unital") && !doc["unital"].is_boolean())
        fail(origin, "unital: must be a boolean");
    const bool unital = doc.value("unital", false);
    if (unital && !doc.contains("unit")) fail(origin, "unit: required when unital is true");
    if (!unital && doc.contains("unit")) fail(origin, "unit: present but unital is false");

    // product table, stored densely as coefficient rows so the closures below
    // can stay free of strong references back to the algebra
    if (!doc.contains("product") || !doc["product"].is_array())
        fail(origin, "product: required array of [i, j, [[k, coeff], ...]] rows");
    auto prod = std::make_shared<std::vector<SparseRow>>(static_cast<size_t>(dim * dim));
    {
        std::vector<bool> seen(static_cast<size_t>(dim * dim), false);
        for (const json& row : doc["product"]) {
            if (!row.is_array() || row.size() != 3)
                fail(origin, "product: each row must be [i, j, [[k, coeff], ...]]");
            const std::int64_t i = checked_id(row[0], dim, origin, "product");
            const std::int64_t j = checked_id(row[1], dim, origin, "product");
            const auto slot = static_cast<size_t>(i * dim + j);
            if (seen[slot])
                fail(origin, "product: duplicate row for (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ")");
            seen[slot] = true;
            (*prod)[slot] = parse_sparse(row[2], dim, f, origin, "product");
        }
    }

    if (!doc.contains("coproduct") || !doc["coproduct"].is_array())
        fail(origin, "coproduct: required array of [i, [[j, k, coeff], ...]] rows");
    auto cop = std::make_shared<std::vector<CoproductRow>>(static_cast<size_t>(dim));
    {
        std::vector<bool> seen(static_cast<size_t>(dim), false);
        for (const json& row : doc["coproduct"]) {
            if (!row.is_array() || row.size() != 2 || !row[1].is_array())
                fail(origin, "coproduct: each row must be [i, [[j, k, coeff], ...]]");
            const std::int64_t i = checked_id(row[0], dim, origin, "coproduct");
            if (seen[static_cast<size_t>(i)])
                fail(origin, "coproduct: duplicate row for basis id " + std::to_string(i));
            seen[static_cast<size_t>(i)] = true;
            for (const json& term : row[1]) {
                if (!term.is_array() || term.size() != 3)
                    fail(origin, "coproduct: each term must be [j, k, coeff]");
                const std::int64_t j = checked_id(term[0], dim, origin, "coproduct");
                const std::int64_t k = checked_id(term[1], dim, origin, "coproduct");
                (*cop)[static_cast<size_t>(i)].emplace_back(
                    j, k, checked_coeff(term[2], f, origin, "coproduct"));
            }
        }
        for (std::int64_t i = 0; i < dim; ++i)
            if (!seen[static_cast<size_t>(i)])
                fail(origin, "coproduct: missing row for basis id " + std::to_string(i));
    }

    auto counit = std::make_shared<std::vector<Scalar>>(static_cast<size_t>(dim), Scalar::zero(f));
    if (doc.contains("counit"))
        for (const auto& [id, c] : parse_sparse(doc["counit"], dim, f, origin, "counit"))
            (*counit)[static_cast<size_t>(id)] = c;

    if (!doc.contains("antipode") || !doc["antipode"].is_array())
        fail(origin, "antipode: required array of [i, [[j, coeff], ...]] rows");
    auto ant = std::make_shared<std::vector<SparseRow>>(static_cast<size_t>(dim));
    {
        std::vector<bool> seen(static_cast<size_t>(dim), false);
        for (const json& row : doc["antipode"]) {
            if (!row.is_array() || row.size() != 2)
                fail(origin, "antipode: each row must be [i, [[j, coeff], ...]]");
            const std::int64_t i = checked_id(row[0], dim, origin, "antipode");
            if (seen[static_cast<size_t>(i)])
                fail(origin, "antipode: duplicate row for basis id " + std::to_string(i));
            seen[static_cast<size_t>(i)] = true;
            (*ant)[static_cast<size_t>(i)] = parse_sparse(row[1], dim, f, origin, "antipode");
        }
        for (std::int64_t i = 0; i < dim; ++i)
            if (!seen[static_cast<size_t>(i)])
                fail(origin, "antipode: missing row for basis id " + std::to_string(i));
    }

    std::optional<SparseRow> integral_row;
    if (doc.contains("integral"))
        integral_row = parse_sparse(doc["integral"], dim, f, origin, "integral");

    auto alg = std::make_shared<Algebra>();
    alg->name = name;
    alg->field = f;
    alg->finite_dim = true;
    alg->dim = dim;
    alg->unital = unital;
    alg->label = [labels](std::int64_t id) { return labels[static_cast<size_t>(id)]; };
    std::weak_ptr<const Algebra> w = alg;
    alg->mult_basis = [w, prod, dim](std::int64_t i, std::int64_t j) {
        return row_to_element(w.lock(), (*prod)[static_cast<size_t>(i * dim + j)]);
    };
    if (unital) alg->unit = row_to_element(alg, parse_sparse(doc["unit"], dim, f, origin, "unit"));

    // invert the antipode matrix up front; a singular table means the data
    // cannot describe a regular structure, whatever else is in the file
    Mat smat(static_cast<size_t>(dim), Vec(static_cast<size_t>(dim), Scalar::zero(f)));
    for (std::int64_t i = 0; i < dim; ++i)
        for (const auto& [k, c] : (*ant)[static_cast<size_t>(i)])
            smat[static_cast<size_t>(k)][static_cast<size_t>(i)] = c;
    const auto sinv_opt = mat_inverse(smat, f);
    if (!sinv_opt)
        throw precondition_error(origin + ": antipode table is singular, no inverse antipode");
    auto sinv = std::make_shared<Mat>(*sinv_opt);

    auto h = std::make_shared<HopfAlgebra>();
    h->alg = alg;
    h->counit_basis = [counit](std::int64_t i) { return (*counit)[static_cast<size_t>(i)]; };
    h->antipode_basis = [w, ant](std::int64_t i) {
        return row_to_element(w.lock(), (*ant)[static_cast<size_t>(i)]);
    };
    h->antipode_inv_basis = [w, sinv, dim](std::int64_t i) {
        Element e(w.lock());
        for (std::int64_t k = 0; k < dim; ++k)
            e.add_term(k, (*sinv)[static_cast<size_t>(k)][static_cast<size_t>(i)]);
        return e;
    };
    install_closed_coproduct(*h, [w, cop](std::int64_t i) {
        const AlgebraPtr a = w.lock();
        TensorElement t({a, a});
        for (const auto& [j, k, c] : (*cop)[static_cast<size_t>(i)]) t.add_term({j, k}, c);
        return t;
    });

    AlgebraFileData out;
    out.hopf = h;
    if (integral_row) {
        Vec coords(static_cast<size_t>(dim), Scalar::zero(f));
        for (const auto& [id, c] : *integral_row) coords[static_cast<size_t>(id)] = c;
        out.integral = functional_from_coords(alg, coords);
    }
    return out;
}

AlgebraFileData load_algebra_file(const std::string& path) {
    std::ifstream ifs(path, std::ios::binary);
    if (!ifs) throw error(path + ": cannot open file");
    std::ostringstream ss;
    ss << ifs.rdbuf();
    if (ifs.bad()) throw error(path + ": read failed");
    return parse_algebra_json(ss.str(), path);
}

std::string algebra_to_json(const HopfPtr& h, const std::optional<Functional>& integral) {
    const AlgebraPtr& alg = h->alg;
    if (!alg->finite_dim) throw error("algebra_to_json: finite-dimensional structures only");
    if (!h->has_closed_coproduct()) throw error("algebra_to_json: needs a closed coproduct");
    if (!alg->field.exact)
        throw error("algebra_to_json: approximate coefficients have no faithful text form");
    const std::int64_t dim = alg->dim;

    json doc;
    doc["version"] = "v1";
    doc["name"] = alg->name;
    doc["field"] = json{{"backend", "exact"}, {"cyclotomic_order", alg->field.cyclo_order}};
    json basis = json::array();
    for (std::int64_t i = 0; i < dim; ++i) basis.push_back(alg->label_of(i));
    doc["basis"] = basis;
    doc["unital"] = alg->unital;
    if (alg->unital) doc["unit"] = sparse_json(*alg->unit);

    json prod = json::array();
    for (std::int64_t i = 0; i < dim; ++i)
        for (std::int64_t j = 0; j < dim; ++j) {
            const Element p = alg->mult_basis(i, j);
            if (!p.is_zero()) prod.push_back(json::array({i, j, sparse_json(p)}));
        }
    doc["product"] = prod;

    json cop = json::array();
    for (std::int64_t i = 0; i < dim; ++i) {
        json terms = json::array();
        const TensorElement d = h->coproduct_basis(i);
        for (const auto& [key, c] : d.terms())
            terms.push_back(json::array({key[0], key[1], c.str()}));
        cop.push_back(json::array({i, terms}));
    }
    doc["coproduct"] = cop;

    json cnt = json::array();
    for (std::int64_t i = 0; i < dim; ++i) {
        const Scalar c = h->counit_basis(i);
        if (!c.is_zero()) cnt.push_back(json::array({i, c.str()}));
    }
    doc["counit"] = cnt;

    json ant = json::array();
    for (std::int64_t i = 0; i < dim; ++i)
        ant.push_back(json::array({i, sparse_json(h->antipode_basis(i))}));
    doc["antipode"] = ant;

    if (integral) {
        json iv = json::array();
        for (std::int64_t i = 0; i < dim; ++i) {
            const Scalar c = integral->eval_basis(i);
            if (!c.is_zero()) iv.push_back(json::array({i, c.str()}));
        }
        doc["integral"] = iv;
    }
    return doc.dump(2) + "\n";
}

} // namespace aqg
