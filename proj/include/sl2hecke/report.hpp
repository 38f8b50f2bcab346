#pragma once

#include <string>
#include <vector>

namespace sl2hecke {

// One verified identity: a stable machine id, the law being checked in plain
// algebra notation, and a witness string on failure.
struct CheckResult {
    std::string id;
    std::string law;
    bool pass = false;
    std::string witness;
};

inline CheckResult check_pass(std::string id, std::string law) {
    return {std::move(id), std::move(law), true, ""};
}

inline CheckResult check_fail(std::string id, std::string law, std::string witness) {
    return {std::move(id), std::move(law), false, std::move(witness)};
}

inline CheckResult check_of(std::string id, std::string law, bool ok, std::string witness_on_fail) {
    if (ok) return check_pass(std::move(id), std::move(law));
    return check_fail(std::move(id), std::move(law), std::move(witness_on_fail));
}

struct Report {
    std::string suite;
    long p = 0;
    long generator = 0;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
    void append(std::vector<CheckResult> more) {
        for (auto& c : more) checks.push_back(std::move(c));
    }
};

}  // namespace sl2hecke
