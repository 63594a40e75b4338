#pragma once

#include <string>
#include <vector>

namespace gasket {

struct Check {
    std::string label;
    bool passed = true;
    std::string detail;
};

struct VerificationReport {
    std::string name;
    std::string statement;
    std::string beta;
    std::vector<Check> checks;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;

    bool passed() const;
    void add(std::string label, bool ok, std::string detail = "");
    std::string str() const;
};

}  // namespace gasket
