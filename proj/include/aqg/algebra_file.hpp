#pragma once

#include <optional>
#include <string>

#include "aqg/hopf.hpp"
#include "aqg/integrals.hpp"

namespace aqg {

// A finite-dimensional structure loaded from a JSON document, together with
// the optional precomputed left integral the document may carry.
struct AlgebraFileData {
    HopfPtr hopf;
    std::optional<Functional> integral;
};

// Parses the "v1" document format (see README.md for the schema).  `origin`
// names the source in error messages, typically a file path.  Structural
// problems -- invalid JSON, missing or unsupported version, unknown keys,
// out-of-range basis ids, unparsable coefficients, duplicate or missing
// table rows -- raise aqg::error.  A well-formed document whose antipode
// table is singular raises precondition_error instead: the data is readable
// but does not describe a regular structure.
AlgebraFileData parse_algebra_json(const std::string& text, const std::string& origin);

// Reads and parses a file; an unreadable path raises aqg::error.
AlgebraFileData load_algebra_file(const std::string& path);

// Serializes a finite-dimensional structure with a closed coproduct to the
// v1 format; output round-trips through parse_algebra_json.  Only exact
// coefficient fields serialize (approximate values have no faithful text
// form), so convert before calling when needed.
std::string algebra_to_json(const HopfPtr& h,
                            const std::optional<Functional>& integral = {});

} // namespace aqg
