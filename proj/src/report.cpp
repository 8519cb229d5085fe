#include "mis/report.hpp"

namespace mis {

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

int exit_code(Verdict v)
{
    switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 2;
    }
    return 1;
}

} // namespace mis
