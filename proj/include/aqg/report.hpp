#pragma once

#include <map>
#include <string>
#include <vector>

namespace aqg {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness; // failing input / mismatch description, empty on pass
};

// Outcome of a named check suite, plus any derived objects worth reporting
// (integrals, automorphism matrices, constants), serialized as text.
struct Report {
    std::string suite;
    std::string algebra;
    std::vector<CheckItem> items;
    std::map<std::string, std::string> derived;

    void add(const std::string& name, bool pass, const std::string& witness = "");
    void merge(const Report& other, const std::string& prefix = "");
    bool all_pass() const;
    size_t fail_count() const;
    // items sorted by name; duplicate names get a numeric suffix at add time
    void sort_items();
    std::string text() const;
};

} // namespace aqg
