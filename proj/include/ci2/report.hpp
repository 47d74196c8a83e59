#ifndef CI2_REPORT_HPP
#define CI2_REPORT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ci2/errors.hpp"

namespace ci2 {

// Run-wide configuration; the seed is mandatory so every report can be
// replayed bit for bit.
struct RunConfig {
    std::string field = "q";  // q | fp:P | qt | fpt:P
    int d1 = 2;
    int d2 = 3;
    std::uint64_t seed = 0;
    long trials = 100;
    int ext_bound = 8;
    std::string out;

    void validate() const {
        if (d1 < 1 || d2 <= d1) throw DomainError("config needs 1 <= d1 < d2");
        if (trials < 1) throw DomainError("config needs trials >= 1");
    }
};

enum class FieldKind { q, fp, qt, fpt };

struct FieldSpec {
    FieldKind kind;
    long p = 0;
};

FieldSpec parse_field_spec(const std::string& s);

// One verdict of a randomized or fixed check.  Failing records carry a
// replayable witness serialized in the polynomial grammar.
struct CheckRecord {
    std::string name;
    std::string anchor;  // the claim the check pins down
    bool pass = true;
    std::string witness;
};

struct Report {
    std::string command;
    nlohmann::ordered_json config;
    std::vector<CheckRecord> checks;
    double timing_ms = 0.0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& name, const std::string& anchor, bool pass,
             const std::string& witness = "") {
        checks.push_back({name, anchor, pass, witness});
    }
    nlohmann::ordered_json to_json() const;
};

nlohmann::ordered_json config_json(const RunConfig& cfg);

// Bounded thread pool for independent trials; the cap comes from
// CI2_THREADS and results are ordered by trial index regardless of
// scheduling.
void parallel_trials(long trials, const std::function<void(long)>& body);

} // namespace ci2

#endif
