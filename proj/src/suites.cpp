#include "aqg/suites.hpp"

#include <algorithm>
#include <sstream>

#include "aqg/algebra_file.hpp"
#include "aqg/dual.hpp"
#include "aqg/duality_v.hpp"
#include "aqg/fourier.hpp"
#include "aqg/heisenberg.hpp"
#include "aqg/pairing.hpp"

namespace aqg {

Subject subject_from_builtin(const std::string& name, bool use_float, double eps) {
    Subject s;
    if (name == "kz") {
        ScalarField f;
        if (use_float) {
            f.exact = false;
            f.eps = eps;
        }
        s.pair = make_integer_pair(f);
        s.hopf = s.pair->fun;
        return s;
    }
    s.hopf = builtin_hopf(name);
    if (use_float) s.hopf = approximate_hopf(s.hopf, eps);
    return s;
}

Subject subject_from_file(const std::string& path, bool use_float, double eps) {
    const AlgebraFileData data = load_algebra_file(path);
    Subject s;
    s.hopf = data.hopf;
    s.integral = data.integral;
    if (use_float) {
        s.hopf = approximate_hopf(s.hopf, eps);
        if (s.integral) {
            Vec coords;
            for (std::int64_t i = 0; i < s.hopf->alg->dim; ++i)
                coords.push_back(Scalar::approx(data.integral->eval_basis(i).to_complex(), eps));
            s.integral = functional_from_coords(s.hopf->alg, coords);
        }
    }
    return s;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"axioms",     "integrals", "identities1",
                                                   "dual",       "heisenberg", "duality-v",
                                                   "pentagon",   "fourier"};
    return names;
}

namespace {

std::vector<std::int64_t> window_ids(std::int64_t k) {
    std::vector<std::int64_t> ids;
    for (std::int64_t i = -k; i <= k; ++i) ids.push_back(i);
    return ids;
}

// existence/uniqueness/faithfulness plus the two-way equivalence between
// invariance and the antipode-exchange identity, as one suite
Report integrals_combined(const HopfPtr& h) {
    Report r = integral_suite(h);
    r.merge(invariance_equivalence(h));
    r.suite = "integrals";
    r.sort_items();
    return r;
}

Report run_one_finite(const HopfPtr& h, const std::string& suite) {
    if (suite == "axioms") return check_hopf_axioms(h);
    if (suite == "integrals") return integrals_combined(h);
    if (suite == "identities1") return identity_suite_one(h);
    if (suite == "dual") return dual_suite(h);
    if (suite == "heisenberg") return heisenberg_suite(h);
    if (suite == "duality-v") return duality_v_suite(h);
    if (suite == "pentagon") return pentagon_t_suite(h);
    return fourier_suite(h);
}

Report run_one_windowed(const Subject& s, const std::string& suite, std::int64_t k) {
    const std::vector<std::int64_t> ids = window_ids(k);
    if (suite == "axioms") {
        AxiomOptions opts;
        opts.window = ids;
        return check_hopf_axioms(s.hopf, opts);
    }
    if (suite == "heisenberg") return heisenberg_suite_windowed(integer_pairing(*s.pair), ids, ids);
    if (suite == "pentagon") return pentagon_t_suite(s.hopf, ids);
    if (suite == "fourier") return fourier_suite_windowed(*s.pair, ids);
    throw precondition_error("suite " + suite + " needs a finite-dimensional structure");
}

} // namespace

std::vector<Report> run_suites(const Subject& s, const std::string& suite, std::int64_t window) {
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw error("unknown suite: " + suite);
    const bool finite = s.hopf->alg->finite_dim;
    if (!finite) {
        if (!s.pair)
            throw precondition_error("infinite-dimensional checks need the built-in dual pair");
        if (window < 1) throw error("window must be at least 1");
    }

    std::vector<std::string> todo;
    if (suite == "all") {
        if (finite)
            todo = names;
        else
            todo = {"axioms", "heisenberg", "pentagon", "fourier"};
    } else {
        todo = {suite};
    }

    std::vector<Report> out;
    out.reserve(todo.size());
    for (const auto& name : todo) {
        Report r = finite ? run_one_finite(s.hopf, name) : run_one_windowed(s, name, window);
        r.suite = name; // report under the name the caller asked for
        out.push_back(std::move(r));
    }
    return out;
}

std::string reports_text(const std::vector<Report>& reports) {
    std::ostringstream out;
    size_t checks = 0, fails = 0;
    for (const auto& r : reports) {
        out << r.text();
        checks += r.items.size();
        fails += r.fail_count();
    }
    out << "summary: " << reports.size() << " suite(s), " << checks << " check(s), " << fails
        << " failure(s)\n";
    return out.str();
}

} // namespace aqg
