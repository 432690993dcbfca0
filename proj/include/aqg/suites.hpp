#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aqg/examples.hpp"
#include "aqg/integrals.hpp"

namespace aqg {

// What a check or derivation runs against: the structure itself, the left
// integral a file may have supplied, and (for the built-in infinite pair)
// the dual pair that the windowed suites need.
struct Subject {
    HopfPtr hopf;
    std::optional<Functional> integral;
    std::optional<InfinitePair> pair;
};

// Builds the named builtin ("group:z2", ..., "h4", "taft:3", "kz"),
// optionally re-expressed over complex doubles with tolerance eps.
Subject subject_from_builtin(const std::string& name, bool use_float = false,
                             double eps = 1e-9);

// Loads a v1 document from disk; see algebra_file.hpp for the error contract.
Subject subject_from_file(const std::string& path, bool use_float = false,
                          double eps = 1e-9);

// The individual suite names, in the order "all" runs them.
const std::vector<std::string>& suite_names();

// Runs one named suite, or "all".  Finite-dimensional structures always
// check their full basis and ignore the window.  The infinite pair checks
// basis ids -window..window and has windowed forms only for axioms,
// heisenberg, pentagon and fourier: "all" narrows to those four, while
// naming one of the others directly raises precondition_error.
std::vector<Report> run_suites(const Subject& s, const std::string& suite,
                               std::int64_t window = 3);

// Stable text rendering of a run: each report in order, then one summary
// line.  Contains no timing or environment data, so identical runs
// serialize identically.
std::string reports_text(const std::vector<Report>& reports);

} // namespace aqg
