#include "capcurl/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <set>
#include <thread>

namespace capcurl {

nlohmann::json VerifyRecord::to_json() const {
    return {{"p", p},
            {"m", m},
            {"lambda", lambda.to_string()},
            {"ok", discrepancies.empty()},
            {"discrepancies", discrepancies},
            {"l_values", l_values},
            {"l_value_flag", l_value_flag}};
}

nlohmann::json VerifyReport::summary_json() const {
    return {{"summary", true},
            {"checked", checked},
            {"failed", failed},
            {"flagged", flagged},
            {"wall_ms", wall_ms}};
}

namespace {

std::string repro(long long p, long long m, long long s, const Partition& lambda) {
    return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " s=" + std::to_string(s) +
           " lambda=" + lambda.to_string();
}

void check_one(VerifyRecord& rec, RowStore& store) {
    const long long p = rec.p, m = rec.m;
    const Partition& lambda = rec.lambda;
    GroupContext group(p, m);
    auto fail = [&](const std::string& what) { rec.discrepancies.push_back(what); };

    // Reduced-sum l-value diagnostic (logged, never asserted).
    std::vector<JsfTerm> terms = reduced_jsf(lambda, group);
    std::set<long long> ls;
    for (const JsfTerm& t : terms) ls.insert(t.l);
    rec.l_values.assign(ls.begin(), ls.end());
    rec.l_value_flag = ls.size() > 2 || (p > lambda.size() && ls.size() > 1);

    // (c) full == reduced, through the cancellation lemmas.
    if (full_jsf(lambda, group) != collect_terms(terms))
        fail("full JSF != reduced JSF at " + repro(p, m, 0, lambda));
    try {
        cancellation_pairs(lambda, group);
    } catch (const InternalError& e) {
        fail(std::string("cancellation map: ") + e.what());
    }

    long long s_lo = std::max<long long>(1, lambda.length());
    long long s_hi = std::min(std::min(m, p), p - lambda.first_part());
    DiagramContext ctx0 = build_context(p, m, s_lo);

    // (b) move/term bijection at every valid s.
    for (long long s = s_lo; s <= s_hi; ++s) {
        try {
            jsf_arrow_pairs(lambda, build_context(p, m, s));
        } catch (const InternalError& e) {
            fail(std::string("arrow-pair bijection: ") + e.what());
        }
    }

    std::vector<Partition> lower = lower_set(lambda, ctx0);

    // (a) theorem support == oracle support; diagonal entries; WPD linkage.
    std::set<Partition> theorem_support;
    for (const Partition& mu : lower)
        if (mu != lambda && decomposition_number(lambda, mu, ctx0) == 1)
            theorem_support.insert(mu);
    const DecompositionRow& oracle = oracle_decomposition_row(lambda, group, store);
    if (theorem_support != oracle) {
        std::string got = "{", want = "{";
        for (const Partition& w : theorem_support) got += w.to_string() + ";";
        for (const Partition& w : oracle) want += w.to_string() + ";";
        fail("decomposition support mismatch (diagram " + got + "} vs oracle " + want +
             "}) at " + repro(p, m, s_lo, lambda));
    }
    if (decomposition_number(lambda, lambda, ctx0) != 1 ||
        tilting_mult(lambda, lambda, ctx0) != 1)
        fail("diagonal entry is not 1 at " + repro(p, m, s_lo, lambda));
    for (const Partition& mu : theorem_support)
        if (!conjugate(lambda, mu, ctx0, ConjugacyGroup::WpD))
            fail("composition factor not WpD-conjugate at " + repro(p, m, s_lo, lambda) +
                 " mu=" + mu.to_string());
    if (is_weyl_irreducible(lambda, ctx0) != terms.empty())
        fail("irreducibility criterion disagrees with the reduced sum at " +
             repro(p, m, s_lo, lambda));

    // (d) dagger duality over the lower set.
    for (const Partition& mu : lower)
        if (!dagger_duality_check(lambda, mu, ctx0))
            fail("dagger duality fails at " + repro(p, m, s_lo, lambda) + " mu=" +
                 mu.to_string());

    // (e) invariance under s, the node-1 arrow choice, the wall drawing.
    for (long long s = s_lo + 1; s <= s_hi; ++s) {
        DiagramContext ctx = build_context(p, m, s);
        if (lower_set(lambda, ctx) != lower)
            fail("lower set depends on s at " + repro(p, m, s, lambda));
        for (const Partition& mu : lower) {
            if (decomposition_number(lambda, mu, ctx) !=
                decomposition_number(lambda, mu, ctx0))
                fail("decomposition number depends on s at " + repro(p, m, s, lambda) +
                     " mu=" + mu.to_string());
            if (tilting_mult(lambda, mu, ctx) != tilting_mult(lambda, mu, ctx0))
                fail("tilting multiplicity depends on s at " + repro(p, m, s, lambda) +
                     " mu=" + mu.to_string());
        }
    }
    CapCurlDiagram c_up =
        cap_curl(arrow_diagram(lambda, ctx0, NodeState::Up), CapCurlMode::C);
    for (const Partition& mu : lower) {
        int canonical = tilting_mult(lambda, mu, ctx0);
        if ((overlay(c_up, mu).oriented ? 1 : 0) != canonical)
            fail("tilting multiplicity depends on the node-1 arrow at " +
                 repro(p, m, s_lo, lambda) + " mu=" + mu.to_string());
        CapCurlDiagram co_up =
            cap_curl(arrow_diagram(mu, ctx0, NodeState::Up), CapCurlMode::Co);
        if ((overlay(co_up, lambda).oriented ? 1 : 0) !=
            decomposition_number(lambda, mu, ctx0))
            fail("decomposition number depends on the node-1 arrow at " +
                 repro(p, m, s_lo, lambda) + " mu=" + mu.to_string());
    }
    for (long long s = s_lo; s <= s_hi; ++s) {
        DiagramContext forced = build_context(p, m, s);
        if (forced.wall_side != WallSide::RightEnd) continue;
        if (build_context(p, m, s, WallSide::Above) != forced ||
            build_context(p, m, s, WallSide::Below) != forced)
            fail("wall drawing changes the context at " + repro(p, m, s, lambda));
    }
}

}  // namespace

VerifyReport verify_sweep(const std::vector<long long>& ps, long long max_m,
                          long long max_size, int jobs) {
    auto start = std::chrono::steady_clock::now();
    if (jobs < 1) jobs = 1;

    VerifyReport report;
    std::vector<RowStore*> stores;
    std::map<std::pair<long long, long long>, std::unique_ptr<RowStore>> store_map;
    for (long long p : ps) {
        GroupContext probe(p, 1);  // validates p before spawning work
        for (long long m = 1; m <= max_m; ++m) {
            auto& store = store_map[{p, m}];
            store = std::make_unique<RowStore>(GroupContext(p, m));
            for (const Partition& lambda :
                 enumerate_partitions(std::min(max_size, (p - 1) * std::min(m, p)), m, p - 1)) {
                if (!in_lambda_m(lambda, m, GroupContext(p, m))) continue;
                VerifyRecord rec;
                rec.p = p;
                rec.m = m;
                rec.lambda = lambda;
                report.records.push_back(std::move(rec));
                stores.push_back(store.get());
            }
        }
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < report.records.size();
             i = next.fetch_add(1)) {
            try {
                check_one(report.records[i], *stores[i]);
            } catch (const std::exception& e) {
                report.records[i].discrepancies.push_back(std::string("exception: ") +
                                                          e.what());
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    report.checked = static_cast<long long>(report.records.size());
    for (const VerifyRecord& rec : report.records) {
        if (!rec.discrepancies.empty()) ++report.failed;
        if (rec.l_value_flag) ++report.flagged;
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

}  // namespace capcurl
