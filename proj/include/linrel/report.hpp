#pragma once

#include <string>
#include <vector>

namespace linrel {

// One inclusion / dimension / equality comparison inside a decision.
struct Evidence {
    std::string label;
    bool holds = false;
    std::string details;  // dims or values involved, already rendered
};

// A yes/no answer together with the checks that justify it, in the order
// the named criterion lists them. The verdict is the conjunction of the
// evidence rows, so a report can always be re-audited from its own data.
struct DecisionReport {
    std::string criterion;  // e.g. "t5", "t21", "c20"
    bool verdict = false;
    std::vector<Evidence> evidence;

    // Label of the first failed check; empty when the verdict is true.
    std::string first_failure() const {
        for (const Evidence& e : evidence)
            if (!e.holds) return e.label;
        return {};
    }

    std::string to_string() const {
        std::string out = "criterion " + criterion + ": " + (verdict ? "yes" : "no") + "\n";
        for (const Evidence& e : evidence) {
            out += "  [" + std::string(e.holds ? "ok" : "fail") + "] " + e.label;
            if (!e.details.empty()) out += " (" + e.details + ")";
            out += "\n";
        }
        if (!verdict) out += "  first failed check: " + first_failure() + "\n";
        return out;
    }
};

inline DecisionReport make_report(std::string criterion, std::vector<Evidence> evidence) {
    DecisionReport r;
    r.criterion = std::move(criterion);
    r.evidence = std::move(evidence);
    r.verdict = true;
    for (const Evidence& e : r.evidence) r.verdict = r.verdict && e.holds;
    return r;
}

} // namespace linrel
