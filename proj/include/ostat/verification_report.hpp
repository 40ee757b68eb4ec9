#pragma once

#include "ostat/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ostat {

// One failed comparison, with the exact values that were compared.
struct Failure {
    std::string parameters;
    Rational lhs;
    Rational rhs;
};

// Pass/fail ledger for a claim checked over some parameter range.
struct VerificationReport {
    std::string claim_id;
    std::string parameter_range;
    long long checks_run = 0;
    std::vector<Failure> failures;
    // Ordered extra facts, e.g. the peak index or the minimum value seen.
    std::vector<std::pair<std::string, std::string>> details;

    bool passed() const { return failures.empty(); }

    // Records one comparison; `holds` says whether lhs/rhs satisfied the claim.
    void check(bool holds, std::string parameters, const Rational& lhs, const Rational& rhs) {
        ++checks_run;
        if (!holds) failures.push_back({std::move(parameters), lhs, rhs});
    }

    void note(std::string key, std::string value) {
        details.emplace_back(std::move(key), std::move(value));
    }

    // Folds another report's counts and failures into this one.
    void absorb(const VerificationReport& other) {
        checks_run += other.checks_run;
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

}  // namespace ostat
