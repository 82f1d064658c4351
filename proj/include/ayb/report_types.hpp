#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ayb {

// Outcome of a mathematical check. Failure is data, not an exception: the
// report carries every witness so misprint hunting stays mechanical.
struct CheckFailure {
    std::string law;
    std::string witness;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string check;
    std::string subject;
    size_t checked = 0;
    std::vector<CheckFailure> failures;

    bool pass() const { return failures.empty(); }

    void fail(std::string law, std::string witness, std::string lhs, std::string rhs) {
        failures.push_back({std::move(law), std::move(witness), std::move(lhs), std::move(rhs)});
    }

    std::string summary() const {
        std::string s = check;
        if (!subject.empty()) s += "[" + subject + "]";
        s += pass() ? ": pass" : ": FAIL";
        s += " (" + std::to_string(checked) + " checked";
        if (!pass()) s += ", " + std::to_string(failures.size()) + " failures";
        s += ")";
        if (!pass()) {
            const auto& f = failures.front();
            s += " first: " + f.law + " at " + f.witness + ": " + f.lhs + " vs " + f.rhs;
        }
        return s;
    }
};

} // namespace ayb
