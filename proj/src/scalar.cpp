#include "aqg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace aqg {

namespace {

using Poly = std::vector<mpq_class>; // ascending coefficients

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// division with remainder by a monic divisor; exact over Q
Poly div_monic(Poly num, const Poly& den, Poly* remainder = nullptr) {
    int dd = degree(den);
    if (dd < 0 || den[dd] != 1) throw error("div_monic: divisor must be monic");
    Poly quot(std::max<size_t>(num.size(), 1), mpq_class(0));
    for (int dn = degree(num); dn >= dd; dn = degree(num)) {
        mpq_class c = num[dn];
        int shift = dn - dd;
        quot[shift] += c;
        for (int i = 0; i <= dd; ++i) num[i + shift] -= c * den[i];
    }
    trim(num);
    if (remainder)
        *remainder = num;
    else if (degree(num) >= 0)
        throw error("div_monic: nonzero remainder");
    trim(quot);
    return quot;
}

Poly mul_poly(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::map<int, Poly>& cyclo_cache() {
    static std::map<int, Poly> cache;
    return cache;
}
std::mutex cyclo_mutex;

const Poly& cyclotomic_impl(int n) {
    auto& cache = cyclo_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // X^n - 1 divided by the cyclotomic polynomials of all proper divisors
    Poly p(n + 1, mpq_class(0));
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = div_monic(std::move(p), cyclotomic_impl(d));
    }
    return cache.emplace(n, std::move(p)).first->second;
}

// extended Euclid in Q[X]: returns (g, u, v) with u*a + v*b = g, g monic gcd
std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b) {
    Poly u0{mpq_class(1)}, v0, u1, v1{mpq_class(1)};
    while (degree(b) >= 0) {
        // make b monic for div_monic, fold the factor back afterwards
        mpq_class lead = b[degree(b)];
        Poly bm = b;
        for (auto& c : bm) c /= lead;
        Poly rem;
        Poly q = div_monic(a, bm, &rem);
        for (auto& c : q) c /= lead; // a = q*b + rem with original b
        a = std::move(b);
        b = std::move(rem);
        Poly u2 = u0, v2 = v0;
        // (u0,v0) - q*(u1,v1)
        Poly qu = mul_poly(q, u1), qv = mul_poly(q, v1);
        u2.resize(std::max(u2.size(), qu.size()), mpq_class(0));
        v2.resize(std::max(v2.size(), qv.size()), mpq_class(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        for (size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
        trim(u2);
        trim(v2);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(u2);
        v1 = std::move(v2);
    }
    int dg = degree(a);
    if (dg < 0) throw error("xgcd of zero polynomials");
    mpq_class lead = a[dg];
    for (auto& c : a) c /= lead;
    for (auto& c : u0) c /= lead;
    for (auto& c : v0) c /= lead;
    return {a, u0, v0};
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

} // namespace

const std::vector<mpq_class>& cyclotomic_poly(int n) {
    if (n < 1) throw error("cyclotomic order must be >= 1");
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    return cyclotomic_impl(n);
}

int cyclotomic_degree(int n) { return degree(cyclotomic_poly(n)); }

void Scalar::reduce() {
    if (!exact_) return;
    const Poly& phi = cyclotomic_poly(order_);
    int d = degree(phi);
    if (static_cast<int>(coeff_.size()) <= d) {
        coeff_.resize(d, mpq_class(0));
        return;
    }
    Poly rem;
    div_monic(coeff_, phi, &rem);
    rem.resize(d, mpq_class(0));
    coeff_ = std::move(rem);
}

Scalar Scalar::zero(const ScalarField& f) {
    if (!f.exact) return approx({0.0, 0.0}, f.eps);
    Scalar s;
    s.order_ = f.cyclo_order;
    s.coeff_.assign(cyclotomic_degree(f.cyclo_order), mpq_class(0));
    return s;
}

Scalar Scalar::one(const ScalarField& f) { return integer(1, f); }

Scalar Scalar::integer(long v, const ScalarField& f) { return rational(mpq_class(v), f); }

Scalar Scalar::rational(const mpq_class& q, const ScalarField& f) {
    if (!f.exact) return approx({q.get_d(), 0.0}, f.eps);
    Scalar s = zero(f);
    s.coeff_[0] = q;
    return s;
}

Scalar Scalar::root_of_unity(const ScalarField& f, long power) {
    if (!f.exact) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(power) / f.cyclo_order;
        return approx({std::cos(t), std::sin(t)}, f.eps);
    }
    long n = f.cyclo_order;
    long p = ((power % n) + n) % n;
    Scalar s;
    s.order_ = static_cast<int>(n);
    s.coeff_.assign(p + 1, mpq_class(0));
    s.coeff_[p] = 1;
    s.reduce();
    return s;
}

Scalar Scalar::approx(std::complex<double> z, double eps) {
    Scalar s;
    s.exact_ = false;
    s.coeff_.clear();
    s.z_ = z;
    s.eps_ = eps;
    return s;
}

bool Scalar::is_zero() const {
    if (!exact_) return std::abs(z_) <= eps_;
    return std::all_of(coeff_.begin(), coeff_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Scalar::is_one() const {
    if (!exact_) return std::abs(z_ - 1.0) <= eps_;
    if (coeff_[0] != 1) return false;
    return std::all_of(coeff_.begin() + 1, coeff_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Scalar::is_rational() const {
    if (!exact_) return false;
    return std::all_of(coeff_.begin() + 1, coeff_.end(), [](const mpq_class& c) { return c == 0; });
}

mpq_class Scalar::rational_value() const {
    if (!is_rational()) throw error("scalar is not rational");
    return coeff_[0];
}

std::complex<double> Scalar::to_complex() const {
    if (!exact_) return z_;
    std::complex<double> acc{0.0, 0.0};
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        double t = 2.0 * std::numbers::pi * static_cast<double>(i) / order_;
        acc += coeff_[i].get_d() * std::complex<double>{std::cos(t), std::sin(t)};
    }
    return acc;
}

Scalar Scalar::in_field(const ScalarField& f) const {
    if (!f.exact) return approx(to_complex(), f.eps);
    if (!exact_) throw error("cannot convert approximate scalar to exact field");
    if (order_ == f.cyclo_order) return *this;
    if (is_rational()) return rational(coeff_[0], f);
    // allow embedding when the old order divides the new: zeta_m = zeta_n^(n/m)
    if (f.cyclo_order % order_ == 0) {
        long k = f.cyclo_order / order_;
        Scalar acc = zero(f);
        for (size_t i = 0; i < coeff_.size(); ++i) {
            if (coeff_[i] == 0) continue;
            acc += rational(coeff_[i], f) * root_of_unity(f, k * static_cast<long>(i));
        }
        return acc;
    }
    throw error("scalar does not embed into the requested field");
}

std::pair<Scalar, Scalar> Scalar::promoted(const Scalar& a, const Scalar& b) {
    if (a.exact_ != b.exact_) throw error("mixed exact/approximate scalar arithmetic");
    if (!a.exact_ || a.order_ == b.order_) return {a, b};
    if (a.is_rational()) return {a.in_field(b.field()), b};
    if (b.is_rational()) return {a, b.in_field(a.field())};
    if (b.order_ % a.order_ == 0) return {a.in_field(b.field()), b};
    if (a.order_ % b.order_ == 0) return {a, b.in_field(a.field())};
    throw error("scalars live in incompatible cyclotomic fields");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (!exact_) {
        r.z_ = -r.z_;
        return r;
    }
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    auto [a, b] = promoted(*this, o);
    if (!a.exact_) {
        Scalar r = approx(a.z_ + b.z_, std::max(a.eps_, b.eps_));
        return r;
    }
    Scalar r = a;
    for (size_t i = 0; i < r.coeff_.size(); ++i) r.coeff_[i] += b.coeff_[i];
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    auto [a, b] = promoted(*this, o);
    if (!a.exact_) return approx(a.z_ * b.z_, std::max(a.eps_, b.eps_));
    Scalar r = a;
    Poly prod = mul_poly(a.coeff_, b.coeff_);
    r.coeff_ = std::move(prod);
    if (r.coeff_.empty()) r.coeff_.assign(1, mpq_class(0));
    r.reduce();
    return r;
}

Scalar Scalar::inv() const {
    if (!exact_) {
        if (std::abs(z_) <= eps_) throw error("division by (approximately) zero");
        return approx(1.0 / z_, eps_);
    }
    if (is_zero()) throw error("division by zero");
    if (is_rational()) {
        Scalar r = *this;
        r.coeff_[0] = 1 / coeff_[0];
        for (size_t i = 1; i < r.coeff_.size(); ++i) r.coeff_[i] = 0;
        return r;
    }
    Poly c = coeff_;
    trim(c);
    auto [g, u, v] = xgcd(c, cyclotomic_poly(order_));
    (void)v;
    if (degree(g) != 0) throw error("scalar not invertible in its cyclotomic field");
    Scalar r = *this;
    // u/g[0] is the inverse of coeff_ modulo Phi_n
    for (auto& ci : u) ci /= g[0];
    r.coeff_ = std::move(u);
    if (r.coeff_.empty()) r.coeff_.assign(1, mpq_class(0));
    r.reduce();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long e) const {
    Scalar base = *this;
    if (e < 0) {
        base = base.inv();
        e = -e;
    }
    Scalar acc = exact_ ? one(field()) : approx({1.0, 0.0}, eps_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (exact_ != o.exact_) return false;
    if (!exact_) return std::abs(z_ - o.z_) <= std::max(eps_, o.eps_);
    if (order_ == o.order_) return coeff_ == o.coeff_;
    auto [a, b] = promoted(*this, o);
    return a.coeff_ == b.coeff_;
}

ScalarField Scalar::field() const {
    ScalarField f;
    f.exact = exact_;
    f.cyclo_order = order_;
    f.eps = eps_;
    return f;
}

std::string Scalar::str() const {
    if (!exact_) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "(%.17g,%.17g)", z_.real(), z_.imag());
        return buf;
    }
    if (is_rational()) return rat_str(coeff_[0]);
    std::string out;
    for (size_t i = 0; i < coeff_.size(); ++i) {
        const mpq_class& c = coeff_[i];
        if (c == 0) continue;
        std::string mag;
        mpq_class a = c < 0 ? mpq_class(-c) : c;
        if (i == 0) {
            mag = rat_str(a);
        } else {
            std::string zp = (i == 1) ? "z" : "z^" + std::to_string(i);
            mag = (a == 1) ? zp : rat_str(a) + "*" + zp;
        }
        if (out.empty())
            out = (c < 0 ? "-" : "") + mag;
        else
            out += (c < 0 ? "-" : "+") + mag;
    }
    return out.empty() ? "0" : out;
}

namespace {

struct ScalarParser {
    const std::string& s;
    size_t pos = 0;
    const ScalarField& field;

    explicit ScalarParser(const std::string& text, const ScalarField& f) : s(text), field(f) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw error("scalar parse: expected digits in '" + s + "'");
        return s.substr(start, pos - start);
    }

    mpq_class rational() {
        std::string num = digits();
        if (eat('/')) {
            std::string den = digits();
            mpq_class q(num + "/" + den);
            q.canonicalize();
            if (q.get_den() == 0) throw error("scalar parse: zero denominator");
            return q;
        }
        return mpq_class(num);
    }

    long zeta_power() {
        if (eat('^')) return std::stol(digits());
        return 1;
    }

    // term := rational ['*' 'z' ['^' k]] | 'z' ['^' k]
    Scalar term() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'z') {
            ++pos;
            return Scalar::root_of_unity(field, zeta_power());
        }
        mpq_class q = rational();
        if (eat('*')) {
            skip_ws();
            if (pos >= s.size() || s[pos] != 'z') throw error("scalar parse: expected z after *");
            ++pos;
            return Scalar::rational(q, field) * Scalar::root_of_unity(field, zeta_power());
        }
        return Scalar::rational(q, field);
    }

    Scalar parse() {
        Scalar acc = Scalar::zero(field);
        bool neg = eat('-');
        if (!neg) eat('+');
        while (true) {
            Scalar t = term();
            acc = neg ? acc - t : acc + t;
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('-'))
                neg = true;
            else if (eat('+'))
                neg = false;
            else
                throw error("scalar parse: unexpected character in '" + s + "'");
        }
        return acc;
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text, const ScalarField& f) {
    ScalarField exact_f = f;
    exact_f.exact = true;
    ScalarParser p(text, exact_f);
    Scalar v = p.parse();
    if (!f.exact) return v.in_field(f);
    return v;
}

} // namespace aqg
