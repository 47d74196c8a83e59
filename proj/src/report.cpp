#include "ci2/report.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ci2 {

FieldSpec parse_field_spec(const std::string& s) {
    auto is_prime = [](long p) {
        if (p < 2) return false;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    };
    if (s == "q") return {FieldKind::q, 0};
    if (s == "qt") return {FieldKind::qt, 0};
    if (s.rfind("fp:", 0) == 0 || s.rfind("fpt:", 0) == 0) {
        bool with_t = s[2] == 't';
        long p = std::stol(s.substr(with_t ? 4 : 3));
        if (!is_prime(p)) throw DomainError("field modulus must be prime: " + s);
        return {with_t ? FieldKind::fpt : FieldKind::fp, p};
    }
    throw DomainError("unknown field spec: " + s + " (expected q | fp:P | qt | fpt:P)");
}

nlohmann::ordered_json config_json(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["field"] = cfg.field;
    j["d1"] = cfg.d1;
    j["d2"] = cfg.d2;
    j["seed"] = cfg.seed;
    j["trials"] = cfg.trials;
    j["ext_bound"] = cfg.ext_bound;
    return j;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["config"] = config;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json r;
        r["name"] = c.name;
        r["paper_anchor"] = c.anchor;
        r["status"] = c.pass ? "pass" : "fail";
        if (!c.witness.empty()) r["witness"] = c.witness;
        j["checks"].push_back(r);
    }
    j["timing_ms"] = timing_ms;
    return j;
}

void parallel_trials(long trials, const std::function<void(long)>& body) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("CI2_THREADS")) {
        long cap = std::atol(env);
        if (cap >= 1 && cap < static_cast<long>(hw)) hw = static_cast<unsigned>(cap);
    }
    if (hw == 1 || trials < 4) {
        for (long t = 0; t < trials; ++t) body(t);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mu;
    std::atomic<long> next{0};
    for (unsigned w = 0; w < hw; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                long t = next.fetch_add(1);
                if (t >= trials) return;
                try {
                    body(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mu);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace ci2
