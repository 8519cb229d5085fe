#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mis {

enum class Verdict { pass, fail, inconclusive };

std::string_view to_string(Verdict v);

/// Outcome of a named check. The verdict is derived from the itemised lines:
/// fail iff at least one counterexample, else inconclusive iff at least one
/// unresolved item, else pass.
struct Report {
    std::string check;
    std::vector<std::string> evidence;
    std::vector<std::string> counterexamples;
    std::vector<std::string> inconclusive;
    /// Skipped instances and analytic remarks; never affect the verdict.
    std::vector<std::string> notes;

    Verdict verdict() const
    {
        if (!counterexamples.empty()) return Verdict::fail;
        if (!inconclusive.empty()) return Verdict::inconclusive;
        return Verdict::pass;
    }
};

/// Process exit code for a verdict: 0 pass, 1 fail, 2 inconclusive.
int exit_code(Verdict v);

} // namespace mis
