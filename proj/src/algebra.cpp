#include "aqg/algebra.hpp"

#include <sstream>

#include "aqg/linalg.hpp"

namespace aqg {

void Element::add_term(std::int64_t id, const Scalar& c) {
    if (!alg_) throw error("element has no algebra");
    if (alg_->finite_dim) alg_->check_basis_id(id);
    auto it = terms_.find(id);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(id, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar Element::coeff(std::int64_t id) const {
    auto it = terms_.find(id);
    if (it == terms_.end()) return Scalar::zero(alg_ ? alg_->field : ScalarField{});
    return it->second;
}

Element Element::operator+(const Element& o) const {
    if (alg_ != o.alg_) {
        if (!alg_) return o;
        if (!o.alg_) return *this;
        throw error("element algebra mismatch");
    }
    Element r = *this;
    for (const auto& [id, c] : o.terms_) r.add_term(id, c);
    return r;
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [id, c] : r.terms_) c = -c;
    return r;
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::scaled(const Scalar& c) const {
    Element r(alg_);
    if (c.is_zero()) return r;
    for (const auto& [id, v] : terms_) r.add_term(id, v * c);
    return r;
}

Element Element::operator*(const Element& o) const {
    if (alg_ != o.alg_) throw error("element algebra mismatch in product");
    Element r(alg_);
    for (const auto& [i, ci] : terms_)
        for (const auto& [j, cj] : o.terms_) {
            Element p = alg_->mult_basis(i, j);
            Scalar c = ci * cj;
            for (const auto& [k, ck] : p.terms()) r.add_term(k, ck * c);
        }
    return r;
}

bool Element::operator==(const Element& o) const {
    if (alg_ != o.alg_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (!(it->second == jt->second)) return false;
    }
    return true;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [id, c] : terms_) {
        std::string cs = c.str();
        if (!first) out << " + ";
        first = false;
        std::string lbl = alg_ ? alg_->label_of(id) : std::to_string(id);
        if (c.is_one())
            out << lbl;
        else if (cs.find_first_of("+-", 1) != std::string::npos || cs.find('(') != std::string::npos)
            out << "(" << cs << ")*" << lbl;
        else
            out << cs << "*" << lbl;
    }
    return out.str();
}

Element Algebra::basis_element(std::int64_t id) const {
    check_basis_id(id);
    Element e(shared_from_this());
    e.add_term(id, Scalar::one(field));
    return e;
}

Element Algebra::element(std::initializer_list<std::pair<std::int64_t, Scalar>> parts) const {
    Element e(shared_from_this());
    for (const auto& [id, c] : parts) e.add_term(id, c);
    return e;
}

Element Algebra::from_coords(const std::vector<Scalar>& coords) const {
    if (!finite_dim) throw error("from_coords needs a finite-dimensional algebra");
    if (static_cast<std::int64_t>(coords.size()) != dim) throw error("coordinate size mismatch");
    Element e(shared_from_this());
    for (size_t i = 0; i < coords.size(); ++i) e.add_term(static_cast<std::int64_t>(i), coords[i]);
    return e;
}

std::vector<Scalar> Algebra::coords(const Element& e) const {
    if (!finite_dim) throw error("coords needs a finite-dimensional algebra");
    std::vector<Scalar> v(dim, Scalar::zero(field));
    for (const auto& [id, c] : e.terms()) v[static_cast<size_t>(id)] = c;
    return v;
}

std::string Algebra::label_of(std::int64_t id) const {
    if (label) return label(id);
    return "e" + std::to_string(id);
}

void Algebra::check_basis_id(std::int64_t id) const {
    if (!finite_dim) return;
    if (id < 0 || id >= dim)
        throw error("basis id " + std::to_string(id) + " out of range for " + name);
}

Element local_unit(const AlgebraPtr& alg, const std::vector<Element>& elems) {
    if (alg->local_unit_fn) return alg->local_unit_fn(elems);
    if (!alg->finite_dim)
        throw error("no local-unit rule for infinite-dimensional algebra " + alg->name);
    size_t n = static_cast<size_t>(alg->dim);
    // unknowns: coordinates of e; equations: e*a = a and a*e = a per element
    Mat m;
    Vec rhs;
    for (const auto& a : elems) {
        for (size_t comp = 0; comp < n; ++comp) {
            Vec lrow(n, Scalar::zero(alg->field)), rrow(n, Scalar::zero(alg->field));
            for (size_t j = 0; j < n; ++j) {
                Element ja = alg->basis_element(static_cast<std::int64_t>(j)) * a;
                Element aj = a * alg->basis_element(static_cast<std::int64_t>(j));
                lrow[j] = ja.coeff(static_cast<std::int64_t>(comp));
                rrow[j] = aj.coeff(static_cast<std::int64_t>(comp));
            }
            Scalar target = a.coeff(static_cast<std::int64_t>(comp));
            m.push_back(std::move(lrow));
            rhs.push_back(target);
            m.push_back(std::move(rrow));
            rhs.push_back(target);
        }
    }
    if (m.empty()) {
        if (alg->unit) return *alg->unit;
        return alg->zero();
    }
    auto sol = solve_linear(m, rhs, alg->field);
    if (!sol) throw error("no local unit exists for the given elements in " + alg->name);
    return alg->from_coords(*sol);
}

NondegeneracyReport check_nondegenerate(const AlgebraPtr& alg) {
    if (!alg->finite_dim) throw error("check_nondegenerate needs a finite-dimensional algebra");
    size_t n = static_cast<size_t>(alg->dim);
    NondegeneracyReport rep;
    // rows: for each basis b_j and component k, the map a -> coeff_k(a * b_j)
    auto kernel_of = [&](bool left_factor) {
        Mat m;
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                Vec row(n, Scalar::zero(alg->field));
                for (size_t i = 0; i < n; ++i) {
                    Element p = left_factor
                                    ? alg->mult_basis(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j))
                                    : alg->mult_basis(static_cast<std::int64_t>(j), static_cast<std::int64_t>(i));
                    row[i] = p.coeff(static_cast<std::int64_t>(k));
                }
                m.push_back(std::move(row));
            }
        }
        return kernel_basis(m, alg->field);
    };
    auto left_kernel = kernel_of(true);   // a with a*A = 0
    auto right_kernel = kernel_of(false); // a with A*a = 0
    rep.nondegenerate = left_kernel.empty() && right_kernel.empty();
    if (!left_kernel.empty()) rep.left_witness = alg->from_coords(left_kernel.front());
    if (!right_kernel.empty()) rep.right_witness = alg->from_coords(right_kernel.front());
    return rep;
}

bool check_associative(const AlgebraPtr& alg, std::string* witness) {
    if (!alg->finite_dim) throw error("check_associative needs a finite-dimensional algebra");
    for (std::int64_t i = 0; i < alg->dim; ++i)
        for (std::int64_t j = 0; j < alg->dim; ++j)
            for (std::int64_t k = 0; k < alg->dim; ++k) {
                Element a = alg->basis_element(i), b = alg->basis_element(j), c = alg->basis_element(k);
                if ((a * b) * c != a * (b * c)) {
                    if (witness)
                        *witness = "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
                    return false;
                }
            }
    return true;
}

} // namespace aqg
