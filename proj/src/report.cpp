#include "zeckorbit/report.hpp"

#include <algorithm>

namespace zeckorbit {

using nlohmann::json;

nlohmann::json theta_to_json(const ThetaMap& theta) {
    json entries = json::object();
    for (const auto& [in, out] : theta.entries) entries[in] = out;
    json conflicts = json::array();
    for (const auto& c : theta.conflicts)
        conflicts.push_back({{"n1", c.n1.str()},
                             {"n2", c.n2.str()},
                             {"in", c.in.symbols},
                             {"out1", c.out1.symbols},
                             {"out2", c.out2.symbols}});
    return json{{"q", theta.q},
                {"M", theta.window_len},
                {"n_cap", theta.n_cap.str()},
                {"entries", entries},
                {"conflicts", conflicts}};
}

ThetaMap theta_from_json(const nlohmann::json& j) {
    ThetaMap theta;
    theta.q = j.at("q").get<std::uint64_t>();
    theta.window_len = j.at("M").get<std::size_t>();
    theta.n_cap = Natural(j.at("n_cap").get<std::string>());
    for (const auto& [in, out] : j.at("entries").items())
        theta.entries.emplace(in, out.get<std::string>());
    for (const auto& c : j.at("conflicts")) {
        ConflictWitness w;
        w.n1 = Natural(c.at("n1").get<std::string>());
        w.n2 = Natural(c.at("n2").get<std::string>());
        w.in = Window{c.at("in").get<std::string>()};
        w.out1 = Window{c.at("out1").get<std::string>()};
        w.out2 = Window{c.at("out2").get<std::string>()};
        theta.conflicts.push_back(std::move(w));
    }
    return theta;
}

nlohmann::json orbit_to_json(const OrbitSummary& summary) {
    json j{{"u", summary.cfg.u.str()},
           {"q", summary.cfg.q},
           {"M", summary.cfg.m},
           {"family", summary.cfg.family.to_string()},
           {"n_max", summary.cfg.n_max},
           {"mode", to_string(summary.mode)},
           {"exponent_set", summary.exponent_set},
           {"verified_horizon", summary.verified_horizon},
           {"finiteness_verdict", to_string(summary.verdict)}};
    if (summary.period) {
        j["n0"] = summary.period->first;
        j["p"] = summary.period->second;
    } else {
        j["n0"] = nullptr;
        j["p"] = nullptr;
    }
    return j;
}

bool Report::all_match() const {
    return std::all_of(claims.begin(), claims.end(), [](const PaperClaim& c) { return c.match; });
}

nlohmann::json Report::to_json() const {
    json claim_list = json::array();
    for (const auto& c : claims)
        claim_list.push_back({{"id", c.id},
                              {"expected", c.expected},
                              {"observed", c.observed},
                              {"verdict", c.match ? "match" : "mismatch"}});
    return json{{"inputs", inputs}, {"results", results}, {"paper_claims", claim_list}};
}

Report verify_example3() {
    // u = 1, q = 2, forbidden factor 101, window M = 5
    OrbitConfig cfg;
    cfg.u = 1;
    cfg.q = 2;
    cfg.m = 5;
    cfg.family = ForbiddenFamily::parse("101");
    cfg.n_max = 200;

    Report report;
    report.inputs = {{"u", "1"}, {"q", 2}, {"M", 5}, {"family", "101"}, {"n_max", cfg.n_max}};

    const OrbitSummary summary = exponent_set(cfg);
    const AvoidanceDFA dfa(cfg.family);

    // Stated window-evolution table rows (window, member)
    struct Row {
        std::size_t n;
        const char* window;
        bool member;
    };
    static constexpr Row rows[] = {
        {0, "1####", true}, {1, "01###", true}, {2, "101##", false},
        {3, "00001", true}, {4, "10100", true}, {5, "00101", false},
    };
    for (const Row& row : rows) {
        PaperClaim claim;
        claim.id = "table1_row_" + std::to_string(row.n);
        claim.expected = {{"window", row.window}, {"member", row.member}};
        const Window& observed = summary.windows[row.n];
        const bool observed_member = dfa.accepts(observed.symbols);
        claim.observed = {{"window", observed.symbols}, {"member", observed_member}};
        claim.match = observed.symbols == row.window && observed_member == row.member;
        report.claims.push_back(std::move(claim));
    }

    // Stated exponent set, diffed element by element on [0, 200]
    const std::vector<std::size_t> stated = {0, 1, 3, 4, 6, 8, 10, 28};
    PaperClaim set_claim;
    set_claim.id = "s1_window5_set";
    set_claim.expected = stated;
    set_claim.observed = summary.exponent_set;
    set_claim.match = summary.exponent_set == stated;
    std::vector<std::size_t> missing, extra;
    std::set_difference(stated.begin(), stated.end(), summary.exponent_set.begin(),
                        summary.exponent_set.end(), std::back_inserter(missing));
    std::set_difference(summary.exponent_set.begin(), summary.exponent_set.end(), stated.begin(),
                        stated.end(), std::back_inserter(extra));
    report.results["set_diff"] = {{"missing_from_observed", missing}, {"extra_in_observed", extra}};
    report.claims.push_back(std::move(set_claim));

    // Stated orbit shape: preperiod 29, cycle length 4. Candidate from the
    // oracle windows at horizon 1000, re-confirmed at horizon 2000.
    PaperClaim orbit_claim;
    orbit_claim.id = "orbit_preperiod_period";
    orbit_claim.expected = {{"n0", 29}, {"p", 4}};
    OrbitConfig long_cfg = cfg;
    long_cfg.n_max = 1000;
    auto cand = candidate_period(window_sequence(long_cfg));
    long_cfg.n_max = 2000;
    auto confirm = candidate_period(window_sequence(long_cfg));
    const bool consistent = cand.has_value() == confirm.has_value() && (!cand || *cand == *confirm);
    if (cand)
        orbit_claim.observed = {{"n0", cand->first}, {"p", cand->second},
                                {"reconfirmed_at_2000", consistent}};
    else
        orbit_claim.observed = {{"n0", nullptr}, {"p", nullptr},
                                {"note", "no repetition found up to horizon 2000"}};
    orbit_claim.match = consistent && cand && cand->first == 29 && cand->second == 4;
    report.claims.push_back(std::move(orbit_claim));

    report.results["windows_head"] = json::array();
    for (std::size_t n = 0; n <= 5; ++n)
        report.results["windows_head"].push_back(summary.windows[n].symbols);
    report.results["exponent_set"] = summary.exponent_set;
    return report;
}

}  // namespace zeckorbit
