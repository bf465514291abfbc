#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supercoset/superpoly.hpp"

namespace supercoset {

/// One verified identity: named residuals, all of which must vanish.
struct CheckResult {
    std::string name;
    bool pass = false;
    /// Nonzero residual witnesses, keyed by coordinate/axiom component.
    std::vector<std::pair<std::string, SuperPolynomial>> witnesses;
    std::string note;

    static CheckResult fromResiduals(std::string name,
                                     const std::map<std::string, SuperPolynomial>& residuals,
                                     std::string note = {});
    static CheckResult passed(std::string name, std::string note = {});
    static CheckResult failed(std::string name, std::string note = {});
};

bool allPass(const std::vector<CheckResult>& checks);

}  // namespace supercoset
