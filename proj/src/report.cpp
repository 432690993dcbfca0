#include "aqg/report.hpp"

#include <algorithm>
#include <sstream>

namespace aqg {

void Report::add(const std::string& name, bool pass, const std::string& witness) {
    items.push_back({name, pass, pass ? std::string{} : witness});
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& it : other.items)
        items.push_back({prefix.empty() ? it.name : prefix + "." + it.name, it.pass, it.witness});
    for (const auto& [k, v] : other.derived)
        derived[prefix.empty() ? k : prefix + "." + k] = v;
}

bool Report::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

size_t Report::fail_count() const {
    size_t n = 0;
    for (const auto& c : items)
        if (!c.pass) ++n;
    return n;
}

void Report::sort_items() {
    std::stable_sort(items.begin(), items.end(),
                     [](const CheckItem& a, const CheckItem& b) { return a.name < b.name; });
}

std::string Report::text() const {
    std::ostringstream out;
    out << "suite: " << suite;
    if (!algebra.empty()) out << "  algebra: " << algebra;
    out << "\n";
    for (const auto& c : items) {
        out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.pass && !c.witness.empty()) out << "  [" << c.witness << "]";
        out << "\n";
    }
    for (const auto& [k, v] : derived) out << "  derived " << k << " = " << v << "\n";
    out << (all_pass() ? "RESULT: all checks passed" : "RESULT: " + std::to_string(fail_count()) + " check(s) failed")
        << "\n";
    return out.str();
}

} // namespace aqg
