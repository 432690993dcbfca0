// Acceptance gate: one verdict line per criterion, exit nonzero when any
// fails.  Each criterion recomputes its evidence here rather than trusting
// another binary's summary; the CLI criterion shells out to the real tool.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aqg/algebra_file.hpp"
#include "aqg/dual.hpp"
#include "aqg/duality_v.hpp"
#include "aqg/fourier.hpp"
#include "aqg/heisenberg.hpp"
#include "aqg/pairing.hpp"
#include "aqg/suites.hpp"

using namespace aqg;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void verdict(int n, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", n, detail.c_str());
    if (!pass) ++failures;
}

using Clock = std::chrono::steady_clock;

std::string seconds_since(Clock::time_point t0) {
    const double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", dt);
    return buf;
}

bool under_limit(Clock::time_point t0, double limit) {
    return std::chrono::duration<double>(Clock::now() - t0).count() < limit;
}

std::vector<std::int64_t> window_ids(std::int64_t k) {
    std::vector<std::int64_t> ids;
    for (std::int64_t i = -k; i <= k; ++i) ids.push_back(i);
    return ids;
}

const std::vector<std::string>& finite_builtins() {
    static const std::vector<std::string> names = {"group:z2", "group:z3", "group:s3", "fn:z2",
                                                   "fn:z3",    "fn:s3",    "h4",       "taft:3"};
    return names;
}

bool item_passes(const Report& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return it.pass;
    return false;
}

bool item_fails_with_witness(const Report& r, const std::string& name) {
    for (const auto& it : r.items)
        if (it.name == name) return !it.pass && !it.witness.empty();
    return false;
}

// ---- criteria ----

void criterion_axioms() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string why;
    for (const std::string name : {"group:z2", "group:s3", "fn:z2", "fn:s3", "h4", "taft:3"}) {
        const Report r = check_hopf_axioms(builtin_hopf(name));
        if (!r.all_pass()) {
            ok = false;
            why = " first failure: " + name;
            break;
        }
    }
    if (ok) {
        const InfinitePair P = make_integer_pair();
        AxiomOptions opts;
        opts.window = window_ids(5);
        if (!check_hopf_axioms(P.fun, opts).all_pass() ||
            !check_hopf_axioms(P.grp, opts).all_pass()) {
            ok = false;
            why = " first failure: integer pair";
        }
    }
    const bool timed = under_limit(t0, 5.0);
    verdict(1, ok && timed,
            "axiom suite exact on six finite builtins and windowed on the integer pair (" +
                seconds_since(t0) + "s, limit 5s)" + why);
}

void criterion_integrals() {
    bool ok = true;
    std::string why;
    for (const auto& name : finite_builtins()) {
        const HopfPtr h = builtin_hopf(name);
        const IntegralSolution sol = solve_left_integral(h);
        const auto dim = static_cast<size_t>(h->alg->dim);
        const FaithfulReport left = check_faithful(h->alg, sol.phi);
        const FaithfulReport right = check_faithful(h->alg, right_from_left(h, sol.phi));
        if (sol.solution_dim != 1 || !left.faithful || left.rank != dim || !right.faithful) {
            ok = false;
            why = " first failure: " + name;
            break;
        }
    }
    if (ok)
        for (const std::string name : {"group:s3", "h4"}) {
            const Report r = invariance_equivalence(builtin_hopf(name));
            if (!item_passes(r, "invariant_functionals_satisfy_exchange") ||
                !item_passes(r, "exchange_solutions_are_invariant") ||
                !item_passes(r, "solution_spaces_same_dimension")) {
                ok = false;
                why = " equivalence failure: " + name;
                break;
            }
        }
    verdict(2, ok,
            "one-dimensional invariant space with full-rank faithfulness on every finite "
            "builtin; invariance/exchange equivalence both directions" +
                why);
}

void criterion_identities() {
    bool ok = true;
    std::string why;
    for (const auto& name : finite_builtins()) {
        const Report r = identity_suite_one(builtin_hopf(name));
        if (!r.all_pass()) {
            ok = false;
            why = " first failure: " + name;
            break;
        }
    }
    if (ok) {
        const HopfPtr h = builtin_hopf("h4");
        const ModularData md = derive_modular_data(h);
        ModularData wrong_sigma = md;
        wrong_sigma.sigma = mat_identity(4, h->alg->field);
        wrong_sigma.sigma_inv = wrong_sigma.sigma;
        ModularData wrong_delta = md;
        wrong_delta.delta = *h->alg->unit;
        const bool caught =
            item_fails_with_witness(identity_suite_one(h, wrong_sigma), "sigma_defining") &&
            item_fails_with_witness(identity_suite_one(h, wrong_delta),
                                    "modular_element_defining");
        if (!caught) {
            ok = false;
            why = " negative controls not caught";
        }
    }
    verdict(3, ok,
            "integral identity suite exact on all basis pairs of every finite builtin; "
            "perturbed automorphism and modular element fail with witnesses" +
                why);
}

void criterion_dual() {
    bool ok = true;
    std::string why;
    for (const auto& name : finite_builtins()) {
        const Report r = dual_suite(builtin_hopf(name));
        if (!r.all_pass()) {
            ok = false;
            why = " first failure: " + name;
            break;
        }
    }
    verdict(4, ok,
            "dual suite (invariances, antipode relation, cross relations, two-path product "
            "formula, fourth antipode power, biduality) on every finite builtin" +
                why);
}

void criterion_duality_element() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string why;
    for (const auto& name : finite_builtins()) {
        const Report r = duality_v_suite(builtin_hopf(name));
        if (!r.all_pass()) {
            ok = false;
            why = " first failure: " + name;
            break;
        }
    }
    if (ok)
        for (const std::string name : {"group:z2", "group:s3", "h4"}) {
            const Report r = duality_v_suite(builtin_hopf(name));
            if (!item_passes(r, "pentagon_element")) {
                ok = false;
                why = " element pentagon failure: " + name;
                break;
            }
        }
    if (ok) {
        const InfinitePair P = make_integer_pair();
        if (!pentagon_t_suite(P.fun, window_ids(3)).all_pass()) {
            ok = false;
            why = " windowed canonical-map pentagon failure";
        }
    }
    const bool timed = under_limit(t0, 10.0);
    verdict(5, ok && timed,
            "duality element suite with slices, inverses, intertwiners, canonical-map action "
            "and both pentagons; windowed pentagon on the integer pair (" +
                seconds_since(t0) + "s, limit 10s)" + why);
}

void criterion_heisenberg() {
    bool ok = true;
    std::string why;
    for (const auto& name : finite_builtins()) {
        const HopfPtr h = builtin_hopf(name);
        const Report r = heisenberg_suite(h);
        const auto dim = static_cast<size_t>(h->alg->dim);
        const auto want = std::to_string(dim * dim);
        const auto it = r.derived.find("operator_algebra_dimension");
        if (!r.all_pass() || !item_passes(r, "action_faithful") ||
            !item_passes(r, "operator_span_dimension") || !item_passes(r, "r_round_trip") ||
            it == r.derived.end() || it->second != want) {
            ok = false;
            why = " first failure: " + name;
            break;
        }
    }
    verdict(6, ok,
            "faithful twisted action, sampled and exhaustive associativity, twist round trip, "
            "and squared-dimension operator span for every finite pair" +
                why);
}

void criterion_fourier() {
    bool ok = true;
    std::string why;
    for (const auto& name : finite_builtins()) {
        const Report r = fourier_suite(builtin_hopf(name));
        if (!r.all_pass()) {
            ok = false;
            why = " first failure: " + name;
            break;
        }
    }
    if (ok && !fourier_suite_windowed(make_integer_pair(), window_ids(4)).all_pass()) {
        ok = false;
        why = " windowed transform failure";
    }
    verdict(7, ok,
            "transform round trips, convolution exchange, two-path canonical-map comparison "
            "and inverse-w round trip on every builtin" +
                why);
}

void criterion_tau() {
    bool ok = true;
    std::string detail;
    for (const auto& name : finite_builtins()) {
        const HopfPtr h = builtin_hopf(name);
        const ModularData md = derive_modular_data(h);
        bool global = true;
        for (std::int64_t i = 0; i < h->alg->dim && global; ++i) {
            const Element e = h->alg->basis_element(i);
            if (md.phi(h->antipode(h->antipode(e))) != md.tau * md.phi(e)) global = false;
        }
        if (!global) {
            ok = false;
            detail = " scaling inconsistency: " + name;
            break;
        }
        if (!detail.empty()) detail += ", ";
        detail += name + " tau=" + md.tau.str();
    }
    verdict(8, ok, "one scaling constant per algebra, verified on the full basis (" +
                       (ok ? detail : detail.substr(1)) + ")");
}

// ---- CLI criterion ----

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args, const fs::path& out, const fs::path& err) {
    const std::string cmd =
        std::string(AQG_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    if (status < 0 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
}

void criterion_cli() {
    bool ok = true;
    std::string why;
    const fs::path dir = fs::temp_directory_path() / "aqg_acceptance";
    fs::create_directories(dir);

    const fs::path r1 = dir / "report1.txt", r2 = dir / "report2.txt";
    const fs::path o1 = dir / "stdout1.txt", o2 = dir / "stdout2.txt";
    const fs::path devnull = dir / "stderr.txt";
    const int rc1 = run_cli("check --builtin h4 --suite all --report " + r1.string(), o1, devnull);
    const int rc2 = run_cli("check --builtin h4 --suite all --report " + r2.string(), o2, devnull);
    if (rc1 != 0 || rc2 != 0) {
        ok = false;
        why = " full-suite run did not exit 0";
    } else if (slurp(r1).empty() || slurp(r1) != slurp(r2) || slurp(o1) != slurp(o2)) {
        ok = false;
        why = " reports differ between runs";
    }

    if (ok) {
        const fs::path bad = dir / "malformed.json";
        std::ofstream(bad) << "{\"version\": \"v1\", ";
        if (run_cli("check --file " + bad.string(), o1, devnull) != 2) {
            ok = false;
            why = " malformed document did not exit 2";
        }
    }

    if (ok) {
        // u is a unit, a*b = u but b*a = 0, so the product is not associative
        const fs::path skew = dir / "skew.json";
        std::ofstream(skew) << R"({
  "version": "v1", "name": "skew", "basis": ["u", "a", "b"],
  "unital": true, "unit": [[0, "1"]],
  "product": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [0, 2, [[2, "1"]]],
              [1, 0, [[1, "1"]]], [2, 0, [[2, "1"]]], [1, 2, [[0, "1"]]]],
  "coproduct": [[0, [[0, 0, "1"]]], [1, [[1, 1, "1"]]], [2, [[2, 2, "1"]]]],
  "counit": [[0, "1"], [1, "1"], [2, "1"]],
  "antipode": [[0, [[0, "1"]]], [1, [[1, "1"]]], [2, [[2, "1"]]]]
})";
        const fs::path rep = dir / "skew_report.txt";
        const int rc =
            run_cli("check --file " + skew.string() + " --suite axioms --report " + rep.string(),
                    o1, devnull);
        const std::string report = slurp(rep);
        if (rc != 1) {
            ok = false;
            why = " broken-associativity document did not exit 1";
        } else if (report.find("FAIL  product_associative") == std::string::npos ||
                   report.find("[(") == std::string::npos) {
            ok = false;
            why = " failure witness missing from the report";
        }
    }
    verdict(9, ok,
            "byte-identical full-suite reports across two runs; malformed document exits 2; "
            "broken associativity exits 1 with a witness triple" +
                why);
}

} // namespace

int main() {
    criterion_axioms();
    criterion_integrals();
    criterion_identities();
    criterion_dual();
    criterion_duality_element();
    criterion_heisenberg();
    criterion_fourier();
    criterion_tau();
    criterion_cli();
    if (failures) std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    else std::printf("ACCEPTANCE: all 9 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
