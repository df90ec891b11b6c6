#include "hypcheck/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <thread>

#include "hypcheck/sampling.hpp"
#include "hypcheck/version.hpp"

namespace hypcheck {

namespace {

IdentityStats run_one(const SuiteConfig& config, const std::string& id) {
    const IdentityEntry& entry = find_entry(id);
    IdentityStats st;
    st.id = id;
    for (int pos = 0; pos < config.samples; ++pos) {
        Sample s = sample_params(config, entry, static_cast<std::uint64_t>(pos));
        Verdict v = check_identity<Rational>(entry, s.n, s.params);
        if (v.holds()) {
            ++st.holds;
        } else if (v.fails()) {
            ++st.fails;
            if (!st.first_fail) {
                Counterexample ce;
                ce.position = static_cast<std::uint64_t>(pos);
                ce.sample = s;
                ce.lhs = v.lhs_value->str();
                ce.rhs = v.rhs_value->str();
                st.first_fail = std::move(ce);
            }
        } else {
            ++st.skipped;
        }
    }
    return st;
}

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Splits "TI3" into ("TI", 3); throws if there is no digit suffix.
std::pair<std::string, long> split_numeric_suffix(const std::string& s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    if (i == s.size())
        throw ParseError("id range endpoint has no numeric suffix: " + s);
    return {s.substr(0, i), std::stol(s.substr(i))};
}

std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", s);
    return buf;
}

} // namespace

int SuiteReport::total_holds() const {
    int s = 0;
    for (const auto& st : per_identity) s += st.holds;
    return s;
}

int SuiteReport::total_fails() const {
    int s = 0;
    for (const auto& st : per_identity) s += st.fails;
    return s;
}

int SuiteReport::total_skipped() const {
    int s = 0;
    for (const auto& st : per_identity) s += st.skipped;
    return s;
}

Sample sample_params(const SuiteConfig& config, const IdentityEntry& entry,
                     std::uint64_t position) {
    SplitMix64 rng(derive_stream_seed(config.seed, entry.id, position));
    for (int attempt = 0; attempt < config.retry_cap; ++attempt) {
        Sample s;
        s.n = draw_n(rng, config.n_max);
        s.params.reserve(static_cast<std::size_t>(entry.arity()));
        for (int i = 0; i < entry.arity(); ++i)
            s.params.push_back(
                draw_rational(rng, config.numerator_bound, config.denominators));
        if (!entry_guard_violation<Rational>(entry, s.n, s.params)) return s;
    }
    throw GuardExhaustionError(entry.id);
}

std::vector<std::string> resolve_ids(const std::string& selector) {
    std::vector<std::string> out;
    auto push_checked = [&](const std::string& id) {
        find_entry(id);
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
    };

    std::size_t start = 0;
    while (start <= selector.size()) {
        std::size_t comma = selector.find(',', start);
        if (comma == std::string::npos) comma = selector.size();
        std::string token = trimmed(selector.substr(start, comma - start));
        start = comma + 1;
        if (token.empty()) continue;
        if (token == "all") {
            for (const auto& e : catalog()) push_checked(e.id);
            continue;
        }
        std::size_t dots = token.find("..");
        if (dots == std::string::npos) {
            push_checked(token);
            continue;
        }
        auto [lo_prefix, lo] = split_numeric_suffix(trimmed(token.substr(0, dots)));
        auto [hi_prefix, hi] = split_numeric_suffix(trimmed(token.substr(dots + 2)));
        if (lo_prefix != hi_prefix || hi < lo)
            throw ParseError("bad id range: " + token);
        for (long k = lo; k <= hi; ++k) push_checked(lo_prefix + std::to_string(k));
    }
    return out;
}

SuiteReport run_suite(const SuiteConfig& config, int jobs) {
    const auto t0 = std::chrono::steady_clock::now();

    SuiteReport report;
    report.config = config;
    report.per_identity.resize(config.ids.size());

    const auto n_ids = config.ids.size();
    const int n_threads =
        std::max(1, std::min(jobs, static_cast<int>(n_ids)));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < n_ids; ++i)
            report.per_identity[i] = run_one(config, config.ids[i]);
    } else {
        // Warm the lazily built shared tables before spawning workers.
        catalog();
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_threads));
        std::vector<std::thread> pool;
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= n_ids) break;
                        report.per_identity[i] = run_one(config, config.ids[i]);
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

nlohmann::ordered_json report_to_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["version"] = version_string;

    nlohmann::ordered_json cfg;
    cfg["ids"] = report.config.ids;
    cfg["samples"] = report.config.samples;
    cfg["n_max"] = report.config.n_max;
    cfg["seed"] = report.config.seed;
    cfg["numerator_bound"] = report.config.numerator_bound;
    cfg["denominators"] = report.config.denominators;
    cfg["retry_cap"] = report.config.retry_cap;
    j["config"] = std::move(cfg);

    auto items = nlohmann::ordered_json::array();
    for (const auto& st : report.per_identity) {
        nlohmann::ordered_json it;
        it["id"] = st.id;
        it["anchor"] = find_entry(st.id).anchor;
        it["holds"] = st.holds;
        it["fails"] = st.fails;
        it["skipped"] = st.skipped;
        if (st.first_fail) {
            nlohmann::ordered_json ce;
            ce["position"] = st.first_fail->position;
            ce["n"] = st.first_fail->sample.n;
            auto ps = nlohmann::ordered_json::array();
            for (const auto& p : st.first_fail->sample.params) ps.push_back(p.str());
            ce["params"] = std::move(ps);
            ce["lhs"] = st.first_fail->lhs;
            ce["rhs"] = st.first_fail->rhs;
            it["counterexample"] = std::move(ce);
        } else {
            it["counterexample"] = nullptr;
        }
        items.push_back(std::move(it));
    }
    j["identities"] = std::move(items);

    nlohmann::ordered_json totals;
    totals["identities"] = report.per_identity.size();
    totals["holds"] = report.total_holds();
    totals["fails"] = report.total_fails();
    totals["skipped"] = report.total_skipped();
    j["totals"] = std::move(totals);
    return j;
}

std::string report_to_text(const SuiteReport& report) {
    std::size_t w = 2;
    for (const auto& st : report.per_identity) w = std::max(w, st.id.size());

    std::string out;
    for (const auto& st : report.per_identity) {
        out += st.id + std::string(w - st.id.size(), ' ');
        out += "  holds " + std::to_string(st.holds);
        out += "  fails " + std::to_string(st.fails);
        out += "  skipped " + std::to_string(st.skipped) + "\n";
        if (st.first_fail) {
            const auto& ce = *st.first_fail;
            const auto& names = find_entry(st.id).param_names;
            out += "  first failure at position " + std::to_string(ce.position);
            out += ": n = " + std::to_string(ce.sample.n);
            for (std::size_t i = 0; i < ce.sample.params.size(); ++i)
                out += ", " + names[i] + " = " + ce.sample.params[i].str();
            out += "\n    lhs = " + ce.lhs + "\n    rhs = " + ce.rhs + "\n";
        }
    }
    out += "total: " + std::to_string(report.per_identity.size()) + " identities";
    out += ", holds " + std::to_string(report.total_holds());
    out += ", fails " + std::to_string(report.total_fails());
    out += ", skipped " + std::to_string(report.total_skipped());
    out += "  (" + format_seconds(report.wall_seconds) + "s)\n";
    return out;
}

} // namespace hypcheck
