#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace aqg {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raised when an input is well-formed but lacks the required structure
// (e.g. no nonzero invariant functional exists)
struct precondition_error : error {
    using error::error;
};

// Coefficient field descriptor.  Exact mode works in the cyclotomic field
// Q(zeta_n) represented on the power basis 1, z, ..., z^(d-1) with d the
// degree of the n-th cyclotomic polynomial; n = 1 is plain Q.  Approximate
// mode uses complex<double> with a comparison tolerance.
struct ScalarField {
    bool exact = true;
    int cyclo_order = 1;
    double eps = 1e-9;

    bool operator==(const ScalarField&) const = default;
};

// Monic cyclotomic polynomial Phi_n as ascending rational coefficients.
const std::vector<mpq_class>& cyclotomic_poly(int n);
int cyclotomic_degree(int n);

class Scalar {
  public:
    // exact rational zero
    Scalar() : exact_(true), order_(1), coeff_(1, mpq_class(0)) {}

    static Scalar zero(const ScalarField& f);
    static Scalar one(const ScalarField& f);
    static Scalar integer(long v, const ScalarField& f = ScalarField{});
    static Scalar rational(const mpq_class& q, const ScalarField& f = ScalarField{});
    // zeta_n^power in the exact field of order n (throws for approximate fields)
    static Scalar root_of_unity(const ScalarField& f, long power = 1);
    static Scalar approx(std::complex<double> z, double eps = 1e-9);

    bool exact() const { return exact_; }
    int order() const { return order_; }
    double eps() const { return eps_; }

    bool is_zero() const;
    bool is_one() const;
    // true when the value lies in Q (all non-constant coordinates vanish)
    bool is_rational() const;
    mpq_class rational_value() const;
    const std::vector<mpq_class>& coords() const { return coeff_; }

    std::complex<double> to_complex() const;
    // re-express an exact scalar in another exact field (throws if the value
    // does not embed, i.e. it is non-rational and the orders differ)
    Scalar in_field(const ScalarField& f) const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inv() const;
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text form: "2", "-1/3", "1/2-z^2", "(0.5,-1)" (approximate).
    std::string str() const;
    // Parses the exact grammar: sums of rational terms and rational*z^k.
    static Scalar parse(const std::string& text, const ScalarField& f);

    ScalarField field() const;

  private:
    static std::pair<Scalar, Scalar> promoted(const Scalar& a, const Scalar& b);
    void reduce();

    bool exact_;
    int order_ = 1;
    std::vector<mpq_class> coeff_;   // exact payload, size = cyclotomic_degree(order_)
    std::complex<double> z_{};       // approximate payload
    double eps_ = 1e-9;
};

} // namespace aqg
