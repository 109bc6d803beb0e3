#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hodgecalc {

/// Outcome of a verification. A failed report always carries a witness that
/// can be checked by hand (a vector, a minor index, a violated identity).
struct Report {
    std::string name;
    bool passed = true;
    std::string witness;
    std::vector<std::string> notes;
    std::vector<Report> parts;

    Report() = default;
    explicit Report(std::string n) : name(std::move(n)) {}

    void fail(std::string why)
    {
        if (passed) {
            passed = false;
            witness = std::move(why);
        }
    }

    void note(std::string line) { notes.push_back(std::move(line)); }

    /// Attaches a sub-report; the first failing part determines the witness.
    void add(Report part)
    {
        if (!part.passed && passed) {
            passed = false;
            witness = part.name + ": " + part.witness;
        }
        parts.push_back(std::move(part));
    }

    explicit operator bool() const { return passed; }

    void print(std::ostream& os, int indent = 0) const;
};

inline void Report::print(std::ostream& os, int indent) const
{
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    os << pad << (passed ? "[pass] " : "[FAIL] ") << name;
    if (!passed && !witness.empty())
        os << " -- " << witness;
    os << '\n';
    for (const auto& n : notes)
        os << pad << "  . " << n << '\n';
    for (const auto& p : parts)
        p.print(os, indent + 1);
}

} // namespace hodgecalc
