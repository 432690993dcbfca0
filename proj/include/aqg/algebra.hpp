#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aqg/scalar.hpp"

namespace aqg {

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Sparse vector over a fixed algebra's basis.  Kept canonical: no explicit
// zero coefficients, keys ordered by basis id.
class Element {
  public:
    Element() = default;
    explicit Element(AlgebraPtr alg) : alg_(std::move(alg)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    const std::map<std::int64_t, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    void add_term(std::int64_t id, const Scalar& c);
    Scalar coeff(std::int64_t id) const;

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    Element operator*(const Element& o) const; // algebra product

    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str() const;

  private:
    AlgebraPtr alg_;
    std::map<std::int64_t, Scalar> terms_;
};

// Associative algebra with a distinguished basis.  The product is given on
// basis elements and extended bilinearly; infinite-dimensional algebras use
// arbitrary int64 basis ids with closures for product and labels.
struct Algebra : std::enable_shared_from_this<Algebra> {
    std::string name;
    ScalarField field;
    bool finite_dim = true;
    std::int64_t dim = 0;
    bool unital = false;

    std::function<Element(std::int64_t, std::int64_t)> mult_basis;
    std::function<std::string(std::int64_t)> label;
    std::optional<Element> unit;
    // closed-form local units for infinite-dimensional algebras
    std::function<Element(const std::vector<Element>&)> local_unit_fn;

    Element zero() const { return Element(shared_from_this()); }
    Element basis_element(std::int64_t id) const;
    Element element(std::initializer_list<std::pair<std::int64_t, Scalar>> parts) const;
    Element from_coords(const std::vector<Scalar>& coords) const;
    std::vector<Scalar> coords(const Element& e) const;
    std::string label_of(std::int64_t id) const;

    void check_basis_id(std::int64_t id) const;
};

// e with e*a = a*e = a for every a in the list; finite-dimensional algebras
// solve the linear system, infinite ones use the builder's closed form.
Element local_unit(const AlgebraPtr& alg, const std::vector<Element>& elems);

struct NondegeneracyReport {
    bool nondegenerate = false;
    std::optional<Element> left_witness;  // nonzero a with a*A = 0
    std::optional<Element> right_witness; // nonzero a with A*a = 0
};

// finite-dimensional only: checks that the product is non-degenerate
NondegeneracyReport check_nondegenerate(const AlgebraPtr& alg);

bool check_associative(const AlgebraPtr& alg, std::string* witness = nullptr);

} // namespace aqg
