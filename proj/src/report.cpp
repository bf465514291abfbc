#include "supercoset/report.hpp"

namespace supercoset {

CheckResult CheckResult::fromResiduals(std::string name,
                                       const std::map<std::string, SuperPolynomial>& residuals,
                                       std::string note) {
    CheckResult r;
    r.name = std::move(name);
    r.note = std::move(note);
    for (const auto& [key, poly] : residuals)
        if (!poly.isZero()) r.witnesses.emplace_back(key, poly);
    r.pass = r.witnesses.empty();
    return r;
}

CheckResult CheckResult::passed(std::string name, std::string note) {
    CheckResult r;
    r.name = std::move(name);
    r.note = std::move(note);
    r.pass = true;
    return r;
}

CheckResult CheckResult::failed(std::string name, std::string note) {
    CheckResult r;
    r.name = std::move(name);
    r.note = std::move(note);
    r.pass = false;
    return r;
}

bool allPass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace supercoset
