#pragma once

#include <string>
#include <vector>

namespace specbasis {

/// One named verification check with its worst-case residual.
struct Check {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

/// A measured-but-not-asserted quantity (regression data, not a verdict).
struct Observation {
    std::string name;
    double value = 0.0;
    std::string note;
};

struct VerificationReport {
    std::vector<Check> checks;
    std::vector<Observation> observations;

    void add(std::string name, bool pass, double residual) {
        checks.push_back({std::move(name), pass, residual});
    }
    void observe(std::string name, double value, std::string note = {}) {
        observations.push_back({std::move(name), value, std::move(note)});
    }

    /// Conjunction of all check outcomes.
    bool summary() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    const Observation* find_observation(const std::string& name) const {
        for (const auto& o : observations)
            if (o.name == name) return &o;
        return nullptr;
    }
};

}  // namespace specbasis
