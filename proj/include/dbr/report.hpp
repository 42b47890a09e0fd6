#pragma once

#include <string>
#include <vector>

namespace dbr {

// Structured result of a validity or identity check. Checks never abort on
// a mathematical failure; they collect every violation with a witness so
// the CLI can print full diagnostics.
struct Report {
    std::string title;
    std::vector<std::string> notes;    // context lines (orders, arities)
    std::vector<std::string> failures; // one line per violation

    bool passed() const { return failures.empty(); }
    void fail(const std::string& line) { failures.push_back(line); }
    void note(const std::string& line) { notes.push_back(line); }
    void absorb(const Report& sub);
    std::string to_string() const;
};

} // namespace dbr
