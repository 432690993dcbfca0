// Command-line front door: loads a builtin or a v1 document, runs named
// check suites, derives the integral data, or demos the transform on one
// element.  Exit codes: 0 pass, 1 check failure, 2 parse/usage error,
// 3 precondition failure.  All output is deterministic: reports carry no
// timing or environment data, and exact scalars print exactly.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "aqg/dual.hpp"
#include "aqg/fourier.hpp"
#include "aqg/linalg.hpp"
#include "aqg/suites.hpp"

namespace {

using namespace aqg;

struct CommonArgs {
    std::string builtin;
    std::string file;
    std::string report_path;
    std::int64_t window = 3;
    bool use_float = false;
    double eps = 1e-9;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
    auto* b = cmd->add_option("--builtin", a.builtin, "built-in structure name");
    auto* f = cmd->add_option("--file", a.file, "path to a v1 document");
    b->excludes(f);
    f->excludes(b);
    cmd->add_option("--report", a.report_path, "also write the report to this path");
    cmd->add_option("--window", a.window,
                    "basis window half-width for the infinite pair (ids -K..K)");
    cmd->add_flag("--float", a.use_float, "re-express the structure over complex doubles");
    cmd->add_option("--eps", a.eps, "comparison tolerance used with --float");
}

Subject make_subject(const CommonArgs& a) {
    if (a.builtin.empty() == a.file.empty())
        throw error("exactly one of --builtin or --file is required");
    if (a.eps <= 0.0) throw error("--eps must be positive");
    return a.builtin.empty() ? subject_from_file(a.file, a.use_float, a.eps)
                             : subject_from_builtin(a.builtin, a.use_float, a.eps);
}

std::string mode_line(const Subject& s) {
    const ScalarField& f = s.hopf->alg->field;
    std::ostringstream out;
    if (f.exact) {
        out << "mode: exact";
        if (f.cyclo_order > 1) out << " cyclotomic_order=" << f.cyclo_order;
    } else {
        out << "mode: approx eps=" << f.eps;
    }
    return out.str();
}

std::string document_header(const std::string& command, const Subject& s) {
    std::ostringstream out;
    out << "aqg report\n"
        << "command: " << command << "\n"
        << "subject: " << s.hopf->alg->name << "\n"
        << mode_line(s) << "\n";
    return out.str();
}

void emit(const std::string& doc, const std::string& report_path) {
    std::cout << doc;
    if (!report_path.empty()) {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw error(report_path + ": cannot open report file for writing");
        out << doc;
    }
}

// basis-action rendering of an automorphism matrix, e.g. "x -> -x, g -> g"
std::string automorphism_str(const AlgebraPtr& alg, const Mat& m) {
    std::ostringstream out;
    for (std::int64_t i = 0; i < alg->dim; ++i) {
        if (i) out << ", ";
        out << alg->label_of(i) << " -> " << apply_matrix(m, alg->basis_element(i)).str();
    }
    return out.str();
}

int run_check(const CommonArgs& a, const std::string& suite) {
    const Subject s = make_subject(a);
    const std::vector<Report> reports = run_suites(s, suite, a.window);
    std::string doc = document_header("check", s);
    doc += reports_text(reports);
    emit(doc, a.report_path);
    for (const auto& r : reports)
        if (!r.all_pass()) return 1;
    return 0;
}

int run_derive(const CommonArgs& a) {
    const Subject s = make_subject(a);
    if (!s.hopf->alg->finite_dim)
        throw precondition_error("derive needs a finite-dimensional structure");
    const AlgebraPtr& alg = s.hopf->alg;

    const ModularData md =
        s.integral ? derive_modular_data(s.hopf, *s.integral) : derive_modular_data(s.hopf);
    const DualResult d = build_dual(s.hopf, md);
    const ModularData dual_md = derive_modular_data(d.dual);

    std::ostringstream out;
    out << document_header("derive", s);
    out << "dim: " << alg->dim << "\n";
    out << "invariant_solution_dim: " << md.solution_dim << "\n";
    out << "phi: " << functional_str(alg, md.phi) << "\n";
    out << "psi: " << functional_str(alg, md.psi) << "\n";
    out << "sigma: " << automorphism_str(alg, md.sigma) << "\n";
    out << "sigma_prime: " << automorphism_str(alg, md.sigma_prime) << "\n";
    out << "delta: " << md.delta.str() << "\n";
    out << "delta_inv: " << md.delta_inv.str() << "\n";
    out << "tau: " << md.tau.str() << "\n";
    const AlgebraPtr& dalg = d.dual->alg;
    out << "dual: " << dalg->name << "\n";
    out << "phi_hat: " << functional_str(dalg, d.phi_hat) << "\n";
    out << "psi_hat: " << functional_str(dalg, d.psi_hat) << "\n";
    out << "delta_hat: " << dual_md.delta.str() << "\n";
    out << "tau_hat: " << dual_md.tau.str() << "\n";
    emit(out.str(), a.report_path);
    return 0;
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

// '+'-separated terms, each "label" or "coeff*label" with the coefficient in
// the scalar grammar; the label is whatever follows the last '*'
Element parse_element(const AlgebraPtr& alg, const std::string& text) {
    Element out(alg);
    size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        size_t next = text.find('+', pos);
        const std::string term =
            trimmed(text.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? text.size() + 1 : next + 1;
        if (term.empty()) throw error("element: empty term in \"" + text + "\"");
        any = true;
        const size_t star = term.rfind('*');
        Scalar c = Scalar::one(alg->field);
        std::string label = term;
        if (star != std::string::npos) {
            c = Scalar::parse(trimmed(term.substr(0, star)), alg->field);
            label = trimmed(term.substr(star + 1));
        }
        bool found = false;
        for (std::int64_t i = 0; i < alg->dim && !found; ++i)
            if (alg->label_of(i) == label) {
                out.add_term(i, c);
                found = true;
            }
        if (!found) throw error("element: unknown basis label \"" + label + "\"");
    }
    if (!any) throw error("element: empty element string");
    return out;
}

int run_fourier(const CommonArgs& a, const std::string& element_text) {
    const Subject s = make_subject(a);
    if (!s.hopf->alg->finite_dim)
        throw precondition_error("the transform demo needs a finite-dimensional structure");
    const Element x = parse_element(s.hopf->alg, element_text);

    const DualResult d =
        s.integral ? build_dual(s.hopf, derive_modular_data(s.hopf, *s.integral))
                   : build_dual(s.hopf);
    const FourierPack fp = build_fourier(d);

    const Element y = fp.fwd(x);
    const Element back = fp.inv(y);
    const Element y_alt = fp.fwd_alt(x);
    const Element back_alt = fp.inv_alt(y_alt);
    const bool rt = back == x;
    const bool rt_alt = back_alt == x;

    // the transformed canonical map on x (x) x, against the dual-side route
    const TensorElement xs = tensor(x, x);
    const TensorElement via_primal = transformed_canonical(fp, xs);
    const TensorElement via_dual = w_inv(d.dual, tensor(fp.fwd(x), fp.fwd(x)));
    const bool canonical_ok = via_primal == via_dual;

    std::ostringstream out;
    out << document_header("fourier", s);
    out << "element: " << x.str() << "\n";
    out << "transform: " << y.str() << "\n";
    out << "inverse_transform: " << back.str() << "\n";
    out << "round_trip: " << (rt ? "pass" : "FAIL") << "\n";
    out << "transform_alt: " << y_alt.str() << "\n";
    out << "round_trip_alt: " << (rt_alt ? "pass" : "FAIL") << "\n";
    out << "canonical_map_primal_route: " << via_primal.str() << "\n";
    out << "canonical_map_dual_route: " << via_dual.str() << "\n";
    out << "canonical_map_agree: " << (canonical_ok ? "pass" : "FAIL") << "\n";
    out << (rt && rt_alt && canonical_ok ? "RESULT: all checks passed"
                                         : "RESULT: check failed")
        << "\n";
    emit(out.str(), a.report_path);
    return rt && rt_alt && canonical_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for multiplier structures with integrals"};
    app.require_subcommand(1);

    CommonArgs check_args, derive_args, fourier_args;
    std::string suite = "all";
    std::string element_text;

    CLI::App* check = app.add_subcommand("check", "run a named check suite");
    add_common(check, check_args);
    check->add_option("--suite", suite, "axioms, integrals, identities1, dual, heisenberg, "
                                        "duality-v, pentagon, fourier or all");

    CLI::App* derive = app.add_subcommand("derive", "derive the integral and modular data");
    add_common(derive, derive_args);

    CLI::App* fourier =
        app.add_subcommand("fourier", "transform one element and show the round trip");
    add_common(fourier, fourier_args);
    fourier->add_option("--element", element_text, "element to transform, e.g. \"g + 2*gx\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check(check_args, suite);
        if (derive->parsed()) return run_derive(derive_args);
        return run_fourier(fourier_args, element_text);
    } catch (const precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
