#pragma once

#include <string>
#include <vector>

#include "qstirling/multiset.hpp"

namespace qstirling {

struct CheckFailure {
    std::string id;
    std::string multiset;
    std::string witness;
};

struct VerifyReport {
    std::string suite;
    std::string range;
    long long checks = 0;
    std::vector<CheckFailure> failures;
    std::vector<std::string> notes;  // informational findings, not failures
    long long millis = 0;
    bool pass() const { return failures.empty(); }
};

// Suites. Multisets are visited smallest-first, so the first recorded failure
// is the minimal witness.
VerifyReport run_stats_suite(const std::vector<Multiset>& ms);
VerifyReport run_bijection_suite(const std::vector<Multiset>& ms);
VerifyReport run_observation_suite(const std::vector<Multiset>& ms);
VerifyReport run_fs_suite(const std::vector<Multiset>& ms);
VerifyReport run_gamma_suite(const std::vector<Multiset>& ms);
VerifyReport run_mprime_suite(const std::vector<Multiset>& ms);
VerifyReport run_equidist_suite(int max_n);

// suite: stats | bijection | fs | observation | gamma | mprime | equidist | all.
// range: "K<=B" (all multisets with K <= B), an explicit multiset literal, or
// "n<=B" (equidist only). Empty range picks the suite default (fs K<=7,
// equidist n<=4, others K<=8). Ranges whose K exceeds max_k are refused with
// std::invalid_argument.
std::vector<VerifyReport> run_verify(const std::string& suite, const std::string& range,
                                     int max_k);

// Ceiling for run_verify: QSTIRLING_MAX_K when set, else 9.
int default_max_k();

std::string report_to_text(const VerifyReport& r);       // no timing: byte-stable
std::string report_to_json_text(const VerifyReport& r);  // includes millis

}  // namespace qstirling
