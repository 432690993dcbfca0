#include "aqg/examples.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace aqg {

size_t CayleyTable::identity() const {
    size_t n = table.size();
    for (size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (size_t j = 0; j < n && ok; ++j)
            if (table[e][j] != j || table[j][e] != j) ok = false;
        if (ok) return e;
    }
    throw error("multiplication table has no identity");
}

size_t CayleyTable::inverse(size_t i) const {
    size_t e = identity();
    for (size_t j = 0; j < table.size(); ++j)
        if (table[i][j] == e && table[j][i] == e) return j;
    throw error("multiplication table has no inverse for element " + std::to_string(i));
}

CayleyTable cyclic_group(size_t n) {
    if (n == 0) throw error("cyclic group needs n >= 1");
    CayleyTable g;
    g.name = "z" + std::to_string(n);
    for (size_t i = 0; i < n; ++i) {
        if (i == 0)
            g.labels.push_back("e");
        else if (i == 1)
            g.labels.push_back("g");
        else
            g.labels.push_back("g^" + std::to_string(i));
        std::vector<size_t> row(n);
        for (size_t j = 0; j < n; ++j) row[j] = (i + j) % n;
        g.table.push_back(std::move(row));
    }
    return g;
}

namespace {

std::string cycle_label(const std::vector<size_t>& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (size_t s = 0; s < p.size(); ++s) {
        if (seen[s] || p[s] == s) {
            seen[s] = true;
            continue;
        }
        out += "(";
        size_t c = s;
        while (!seen[c]) {
            seen[c] = true;
            out += std::to_string(c + 1);
            c = p[c];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

} // namespace

CayleyTable symmetric_group_3() {
    std::vector<std::vector<size_t>> perms;
    std::vector<size_t> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    size_t n = perms.size();
    auto index_of = [&](const std::vector<size_t>& q) {
        for (size_t i = 0; i < n; ++i)
            if (perms[i] == q) return i;
        throw error("permutation missing from table");
    };
    CayleyTable g;
    g.name = "s3";
    for (size_t i = 0; i < n; ++i) {
        g.labels.push_back(cycle_label(perms[i]));
        std::vector<size_t> row(n);
        for (size_t j = 0; j < n; ++j) {
            std::vector<size_t> comp(3);
            for (size_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
            row[j] = index_of(comp);
        }
        g.table.push_back(std::move(row));
    }
    return g;
}

HopfPtr make_group_algebra(const CayleyTable& g, const ScalarField& F) {
    size_t n = g.table.size();
    auto alg = std::make_shared<Algebra>();
    alg->name = "group:" + g.name;
    alg->field = F;
    alg->finite_dim = true;
    alg->dim = static_cast<std::int64_t>(n);
    alg->unital = true;
    std::weak_ptr<const Algebra> w = alg;
    auto table = g.table;
    alg->mult_basis = [w, table](std::int64_t i, std::int64_t j) {
        auto a = w.lock();
        a->check_basis_id(i);
        a->check_basis_id(j);
        Element e = a->zero();
        e.add_term(static_cast<std::int64_t>(table[static_cast<size_t>(i)][static_cast<size_t>(j)]),
                   Scalar::one(a->field));
        return e;
    };
    auto labels = g.labels;
    alg->label = [labels](std::int64_t i) { return labels.at(static_cast<size_t>(i)); };
    alg->unit = alg->basis_element(static_cast<std::int64_t>(g.identity()));

    std::vector<std::int64_t> inv(n);
    for (size_t i = 0; i < n; ++i) inv[i] = static_cast<std::int64_t>(g.inverse(i));

    auto h = std::make_shared<HopfAlgebra>();
    h->alg = alg;
    ScalarField f = F;
    h->counit_basis = [f](std::int64_t) { return Scalar::one(f); };
    h->antipode_basis = [w, inv](std::int64_t i) {
        return w.lock()->basis_element(inv.at(static_cast<size_t>(i)));
    };
    h->antipode_inv_basis = h->antipode_basis;
    install_closed_coproduct(*h, [w](std::int64_t i) {
        auto a = w.lock();
        return tensor(a->basis_element(i), a->basis_element(i));
    });
    return h;
}

HopfPtr make_function_algebra(const CayleyTable& g, const ScalarField& F) {
    size_t n = g.table.size();
    auto alg = std::make_shared<Algebra>();
    alg->name = "fn:" + g.name;
    alg->field = F;
    alg->finite_dim = true;
    alg->dim = static_cast<std::int64_t>(n);
    alg->unital = true;
    std::weak_ptr<const Algebra> w = alg;
    alg->mult_basis = [w](std::int64_t i, std::int64_t j) {
        auto a = w.lock();
        a->check_basis_id(i);
        a->check_basis_id(j);
        return i == j ? a->basis_element(i) : a->zero();
    };
    auto labels = g.labels;
    alg->label = [labels](std::int64_t i) { return "d_" + labels.at(static_cast<size_t>(i)); };
    {
        Element u = alg->zero();
        for (size_t i = 0; i < n; ++i)
            u.add_term(static_cast<std::int64_t>(i), Scalar::one(F));
        alg->unit = u;
    }

    std::int64_t idy = static_cast<std::int64_t>(g.identity());
    std::vector<std::int64_t> inv(n);
    for (size_t i = 0; i < n; ++i) inv[i] = static_cast<std::int64_t>(g.inverse(i));
    auto table = g.table;

    auto h = std::make_shared<HopfAlgebra>();
    h->alg = alg;
    ScalarField f = F;
    h->counit_basis = [f, idy](std::int64_t k) {
        return k == idy ? Scalar::one(f) : Scalar::zero(f);
    };
    h->antipode_basis = [w, inv](std::int64_t k) {
        return w.lock()->basis_element(inv.at(static_cast<size_t>(k)));
    };
    h->antipode_inv_basis = h->antipode_basis;
    install_closed_coproduct(*h, [w, table, n](std::int64_t k) {
        auto a = w.lock();
        TensorElement t({a, a});
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (table[i][j] == static_cast<size_t>(k))
                    t.add_term({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)},
                               Scalar::one(a->field));
        return t;
    });
    return h;
}

namespace {

// g^n = 1, x^n = 0, x g = zeta g x; basis g^i x^j at id i*n + j
std::shared_ptr<HopfAlgebra> taft_build(size_t n, const ScalarField& F, const Scalar& zeta,
                                        const std::string& name) {
    auto alg = std::make_shared<Algebra>();
    alg->name = name;
    alg->field = F;
    alg->finite_dim = true;
    alg->dim = static_cast<std::int64_t>(n * n);
    alg->unital = true;
    std::weak_ptr<const Algebra> w = alg;
    alg->label = [n](std::int64_t id) {
        size_t i = static_cast<size_t>(id) / n, j = static_cast<size_t>(id) % n;
        std::string s;
        if (i == 1) s += "g";
        if (i > 1) s += "g^" + std::to_string(i);
        if (j == 1) s += "x";
        if (j > 1) s += "x^" + std::to_string(j);
        return s.empty() ? std::string("1") : s;
    };
    alg->mult_basis = [w, n, zeta](std::int64_t a, std::int64_t b) {
        auto al = w.lock();
        al->check_basis_id(a);
        al->check_basis_id(b);
        size_t i = static_cast<size_t>(a) / n, j = static_cast<size_t>(a) % n;
        size_t k = static_cast<size_t>(b) / n, l = static_cast<size_t>(b) % n;
        if (j + l >= n) return al->zero();
        Element e = al->zero();
        e.add_term(static_cast<std::int64_t>(((i + k) % n) * n + (j + l)),
                   zeta.pow(static_cast<long>(j * k)));
        return e;
    };
    alg->unit = alg->basis_element(0);

    auto h = std::make_shared<HopfAlgebra>();
    h->alg = alg;
    ScalarField f = F;
    h->counit_basis = [f, n](std::int64_t id) {
        return (static_cast<size_t>(id) % n == 0) ? Scalar::one(f) : Scalar::zero(f);
    };

    Element g1 = alg->basis_element(static_cast<std::int64_t>(n)); // g
    Element x1 = alg->basis_element(1);                            // x
    TensorElement dg = tensor(g1, g1);
    TensorElement dx = tensor(x1, *alg->unit) + tensor(g1, x1);
    auto cop = std::make_shared<std::vector<TensorElement>>();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            TensorElement t = tensor(*alg->unit, *alg->unit);
            for (size_t r = 0; r < i; ++r) t = t * dg;
            for (size_t r = 0; r < j; ++r) t = t * dx;
            cop->push_back(t);
        }
    install_closed_coproduct(*h, [cop](std::int64_t id) {
        return cop->at(static_cast<size_t>(id));
    });

    Element sg = alg->basis_element(static_cast<std::int64_t>((n - 1) * n)); // g^{n-1}
    Element sx = alg->basis_element(static_cast<std::int64_t>((n - 1) * n + 1))
                     .scaled(Scalar::integer(-1, F)); // -g^{n-1} x
    auto stab = std::make_shared<std::vector<Element>>();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Element e = *alg->unit;
            for (size_t r = 0; r < j; ++r) e = e * sx;
            for (size_t r = 0; r < i; ++r) e = e * sg;
            stab->push_back(e);
        }
    h->antipode_basis = [stab](std::int64_t id) { return stab->at(static_cast<size_t>(id)); };

    Mat ms = basis_map_matrix(alg, [stab](std::int64_t id) {
        return stab->at(static_cast<size_t>(id));
    });
    auto msinv = mat_inverse(ms, F);
    if (!msinv) throw error("antipode table is singular");
    auto sinv = std::make_shared<std::vector<Element>>();
    for (size_t j = 0; j < n * n; ++j) {
        Vec col(n * n, Scalar::zero(F));
        for (size_t i = 0; i < n * n; ++i) col[i] = (*msinv)[i][j];
        sinv->push_back(alg->from_coords(col));
    }
    h->antipode_inv_basis = [sinv](std::int64_t id) { return sinv->at(static_cast<size_t>(id)); };
    return h;
}

} // namespace

HopfPtr make_sweedler() {
    return taft_build(2, ScalarField{}, Scalar::integer(-1), "h4");
}

HopfPtr make_taft(size_t n) {
    if (n < 2) throw error("taft algebra needs n >= 2");
    if (n == 2) return taft_build(2, ScalarField{}, Scalar::integer(-1), "taft:2");
    ScalarField F;
    F.cyclo_order = static_cast<int>(n);
    return taft_build(n, F, Scalar::root_of_unity(F, 1), "taft:" + std::to_string(n));
}

InfinitePair make_integer_pair(const ScalarField& F) {
    InfinitePair P;

    auto fa = std::make_shared<Algebra>();
    fa->name = "kz";
    fa->field = F;
    fa->finite_dim = false;
    fa->dim = 0;
    fa->unital = false;
    std::weak_ptr<const Algebra> wf = fa;
    fa->mult_basis = [wf](std::int64_t i, std::int64_t j) {
        auto a = wf.lock();
        return i == j ? a->basis_element(i) : a->zero();
    };
    fa->label = [](std::int64_t k) { return "d[" + std::to_string(k) + "]"; };
    fa->local_unit_fn = [wf](const std::vector<Element>& elems) {
        auto a = wf.lock();
        std::set<std::int64_t> support;
        for (const auto& x : elems)
            for (const auto& [id, c] : x.terms()) support.insert(id);
        Element e = a->zero();
        for (auto id : support) e.add_term(id, Scalar::one(a->field));
        return e;
    };

    auto hf = std::make_shared<HopfAlgebra>();
    hf->alg = fa;
    hf->dr_basis = [wf](std::int64_t k, std::int64_t m) {
        auto a = wf.lock();
        return tensor(a->basis_element(k - m), a->basis_element(m));
    };
    hf->dl_basis = [wf](std::int64_t k, std::int64_t m) {
        auto a = wf.lock();
        return tensor(a->basis_element(m), a->basis_element(k - m));
    };
    hf->dr1_basis = hf->dl_basis;
    hf->dl2_basis = hf->dr_basis;
    ScalarField f = F;
    hf->counit_basis = [f](std::int64_t k) {
        return k == 0 ? Scalar::one(f) : Scalar::zero(f);
    };
    hf->antipode_basis = [wf](std::int64_t k) { return wf.lock()->basis_element(-k); };
    hf->antipode_inv_basis = hf->antipode_basis;
    hf->delta2_basis = [wf](std::int64_t k, std::int64_t m, std::int64_t l) {
        auto a = wf.lock();
        return tensor(tensor(a->basis_element(k - m - l), a->basis_element(m)),
                      a->basis_element(l));
    };
    P.fun = hf;
    P.phi_fun = Functional{fa, [f](std::int64_t) { return Scalar::one(f); }};
    P.psi_fun = P.phi_fun;

    auto ga = std::make_shared<Algebra>();
    ga->name = "laurent";
    ga->field = F;
    ga->finite_dim = false;
    ga->dim = 0;
    ga->unital = true;
    std::weak_ptr<const Algebra> wg = ga;
    ga->mult_basis = [wg](std::int64_t i, std::int64_t j) {
        return wg.lock()->basis_element(i + j);
    };
    ga->label = [](std::int64_t k) { return "u^" + std::to_string(k); };
    ga->unit = ga->basis_element(0);
    ga->local_unit_fn = [wg](const std::vector<Element>&) {
        return wg.lock()->basis_element(0);
    };

    auto hg = std::make_shared<HopfAlgebra>();
    hg->alg = ga;
    hg->counit_basis = [f](std::int64_t) { return Scalar::one(f); };
    hg->antipode_basis = [wg](std::int64_t k) { return wg.lock()->basis_element(-k); };
    hg->antipode_inv_basis = hg->antipode_basis;
    install_closed_coproduct(*hg, [wg](std::int64_t k) {
        auto a = wg.lock();
        return tensor(a->basis_element(k), a->basis_element(k));
    });
    P.grp = hg;
    P.phi_grp = Functional{ga, [f](std::int64_t k) {
                               return k == 0 ? Scalar::one(f) : Scalar::zero(f);
                           }};
    P.psi_grp = P.phi_grp;
    return P;
}

AlgebraPtr matrix_algebra(size_t n, const ScalarField& F) {
    auto alg = std::make_shared<Algebra>();
    alg->name = "mat" + std::to_string(n);
    alg->field = F;
    alg->finite_dim = true;
    alg->dim = static_cast<std::int64_t>(n * n);
    alg->unital = true;
    std::weak_ptr<const Algebra> w = alg;
    alg->mult_basis = [w, n](std::int64_t a, std::int64_t b) {
        auto al = w.lock();
        al->check_basis_id(a);
        al->check_basis_id(b);
        size_t r = static_cast<size_t>(a) / n, c = static_cast<size_t>(a) % n;
        size_t r2 = static_cast<size_t>(b) / n, c2 = static_cast<size_t>(b) % n;
        if (c != r2) return al->zero();
        return al->basis_element(static_cast<std::int64_t>(r * n + c2));
    };
    alg->label = [n](std::int64_t id) {
        return "E(" + std::to_string(static_cast<size_t>(id) / n) + "," +
               std::to_string(static_cast<size_t>(id) % n) + ")";
    };
    Element u = alg->zero();
    for (size_t k = 0; k < n; ++k)
        u.add_term(static_cast<std::int64_t>(k * n + k), Scalar::one(F));
    alg->unit = u;
    return alg;
}

HopfPtr builtin_hopf(const std::string& name) {
    try {
        if (name == "h4" || name == "sweedler") return make_sweedler();
        if (name == "kz") return make_integer_pair().fun;
        if (name.rfind("taft:", 0) == 0)
            return make_taft(static_cast<size_t>(std::stoul(name.substr(5))));
        if (name.rfind("group:", 0) == 0 || name.rfind("fn:", 0) == 0) {
            bool fn = name.rfind("fn:", 0) == 0;
            std::string g = name.substr(fn ? 3 : 6);
            CayleyTable t;
            if (g == "s3")
                t = symmetric_group_3();
            else if (g.size() > 1 && g[0] == 'z')
                t = cyclic_group(static_cast<size_t>(std::stoul(g.substr(1))));
            else
                throw error("unknown group name: " + g);
            return fn ? make_function_algebra(t) : make_group_algebra(t);
        }
    } catch (const std::logic_error&) {
        throw error("bad parameter in builtin name: " + name);
    }
    throw error("unknown builtin algebra: " + name);
}

std::vector<std::string> builtin_names() {
    return {"group:z2", "group:z3", "group:s3", "fn:z2", "fn:z3",
            "fn:s3",    "h4",       "taft:3",   "kz"};
}

HopfPtr broken_sweedler_identity_antipode() {
    auto h = taft_build(2, ScalarField{}, Scalar::integer(-1), "h4:broken-antipode");
    std::weak_ptr<const Algebra> w = h->alg;
    h->antipode_basis = [w](std::int64_t id) { return w.lock()->basis_element(id); };
    h->antipode_inv_basis = h->antipode_basis;
    return h;
}

HopfPtr broken_function_algebra_degenerate() {
    auto alg = std::make_shared<Algebra>();
    alg->name = "broken:degenerate";
    alg->finite_dim = true;
    alg->dim = 2;
    alg->unital = false;
    std::weak_ptr<const Algebra> w = alg;
    alg->mult_basis = [w](std::int64_t i, std::int64_t j) {
        auto a = w.lock();
        a->check_basis_id(i);
        a->check_basis_id(j);
        return (i == 0 && j == 0) ? a->basis_element(0) : a->zero();
    };
    alg->label = [](std::int64_t i) { return "a" + std::to_string(i); };

    auto h = std::make_shared<HopfAlgebra>();
    h->alg = alg;
    ScalarField f = alg->field;
    h->counit_basis = [f](std::int64_t i) {
        return i == 0 ? Scalar::one(f) : Scalar::zero(f);
    };
    h->antipode_basis = [w](std::int64_t i) { return w.lock()->basis_element(i); };
    h->antipode_inv_basis = h->antipode_basis;
    install_closed_coproduct(*h, [w](std::int64_t i) {
        auto a = w.lock();
        return tensor(a->basis_element(i), a->basis_element(i));
    });
    return h;
}

} // namespace aqg
