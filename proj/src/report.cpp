#include "gasket/report.hpp"

#include <algorithm>
#include <sstream>

namespace gasket {

bool VerificationReport::passed() const {
    if (!counterexamples.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string label, bool ok, std::string detail) {
    checks.push_back({std::move(label), ok, std::move(detail)});
}

std::string VerificationReport::str() const {
    std::ostringstream os;
    os << "verify " << name << ": " << statement << "\n";
    os << "beta: " << beta << "\n";
    for (const auto& c : checks) {
        os << (c.passed ? "  ok   " : "  FAIL ") << c.label;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    for (const auto& c : counterexamples) os << "  counterexample: " << c << "\n";
    os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace gasket
