#include "capcurl/jantzen.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace capcurl {

int p_adic_valuation_of_lp(long long l, long long p) {
    int v = 1;
    while (l % p == 0) {
        l /= p;
        ++v;
    }
    return v;
}

namespace {

std::vector<RootRef> all_positive_roots(long long m) {
    std::vector<RootRef> roots;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            roots.push_back(RootRef::e_minus(i, j));
            roots.push_back(RootRef::e_plus(i, j));
        }
    for (int i = 1; i <= m; ++i) roots.push_back(RootRef::two_e(i));
    return roots;
}

std::optional<JsfTerm> make_term(const Partition& lambda, const Weight& lpr,
                                 const RootRef& alpha, long long l,
                                 const GroupContext& ctx) {
    long long a = pairing(lpr, alpha) - l * ctx.p;
    ChiNorm norm = chi_normalize(reflect_dot(lambda, alpha, l, ctx), ctx);
    if (norm.zero()) return std::nullopt;
    return JsfTerm{alpha, l, a, p_adic_valuation_of_lp(l, ctx.p), norm.sign, norm.partition};
}

}  // namespace

FormalCharacter full_jsf(const Partition& lambda, const GroupContext& ctx) {
    Weight lpr = lambda_plus_rho(lambda, ctx);
    FormalCharacter out(Basis::Chi);
    for (const RootRef& alpha : all_positive_roots(ctx.m)) {
        long long pair = pairing(lpr, alpha);
        for (long long l = 1; pair - l * ctx.p > 0; ++l)
            if (auto t = make_term(lambda, lpr, alpha, l, ctx))
                out.add(t->target, static_cast<long long>(t->valuation) * t->sign);
    }
    return out;
}

std::vector<JsfTerm> reduced_jsf(const Partition& lambda, const GroupContext& ctx) {
    if (!is_p_core(lambda, ctx))
        throw DomainError("p-core", "reduced sum requires a p-core, got " + lambda.to_string());
    Weight lpr = lambda_plus_rho(lambda, ctx);
    std::vector<JsfTerm> terms;
    auto len = static_cast<int>(lambda.length());
    for (int i = 1; i <= len; ++i)
        for (int j = i + 1; j <= len; ++j) {
            RootRef alpha = RootRef::e_plus(i, j);
            long long pair = pairing(lpr, alpha);
            for (long long l = 1; pair - l * ctx.p >= 1; ++l) {
                long long a = pair - l * ctx.p;
                if (lpr[j] - a <= 0) continue;
                if (auto t = make_term(lambda, lpr, alpha, l, ctx)) terms.push_back(*t);
            }
        }

    // Lemma-level sanity: the reflected entries are distinct and strictly
    // positive, targets sit strictly inside lambda and are pairwise distinct.
    std::set<Partition> seen;
    for (const JsfTerm& t : terms) {
        Weight w = reflect_dot(lambda, t.root, t.l, ctx);
        std::set<long long> entries;
        for (long long i = 1; i <= ctx.m; ++i) {
            long long e = w[i] + (ctx.m - i + 1);
            if (e <= 0 || !entries.insert(e).second)
                throw InternalError("reduced JSF entries not distinct positive for " +
                                    lambda.to_string());
        }
        if (!(lambda.contains(t.target) && t.target != lambda))
            throw InternalError("reduced JSF target not strictly contained in " +
                                lambda.to_string());
        if (!seen.insert(t.target).second)
            throw InternalError("reduced JSF targets collide for " + lambda.to_string());
    }
    return terms;
}

FormalCharacter collect_terms(const std::vector<JsfTerm>& terms) {
    FormalCharacter out(Basis::Chi);
    for (const JsfTerm& t : terms)
        out.add(t.target, static_cast<long long>(t.valuation) * t.sign);
    return out;
}

std::vector<CancellationPair> cancellation_pairs(const Partition& lambda,
                                                 const GroupContext& ctx) {
    if (!is_p_core(lambda, ctx))
        throw DomainError("p-core", "cancellation map requires a p-core");
    Weight lpr = lambda_plus_rho(lambda, ctx);

    // Lemma "e_i - e_j": every short-difference contribution vanishes.
    for (int i = 1; i <= ctx.m; ++i)
        for (int j = i + 1; j <= ctx.m; ++j) {
            RootRef alpha = RootRef::e_minus(i, j);
            long long pair = pairing(lpr, alpha);
            for (long long l = 1; pair - l * ctx.p > 0; ++l)
                if (!chi_normalize(reflect_dot(lambda, alpha, l, ctx), ctx).zero())
                    throw InternalError("nonzero e_i-e_j contribution for p-core " +
                                        lambda.to_string());
        }

    // S1: cancelling e_i+e_j pairs; S2: surviving 2e_i pairs.
    std::vector<std::pair<JsfTerm, RootRef>> s1;
    for (int i = 1; i <= ctx.m; ++i)
        for (int j = i + 1; j <= ctx.m; ++j) {
            RootRef alpha = RootRef::e_plus(i, j);
            long long pair = pairing(lpr, alpha);
            for (long long l = 1; pair - l * ctx.p >= 1; ++l) {
                long long a = pair - l * ctx.p;
                if (lpr[j] - a >= 0) continue;
                if (auto t = make_term(lambda, lpr, alpha, l, ctx))
                    s1.emplace_back(*t, RootRef::two_e(i));
            }
        }
    std::vector<JsfTerm> s2;
    for (int i = 1; i <= ctx.m; ++i) {
        RootRef beta = RootRef::two_e(i);
        long long pair = pairing(lpr, beta);
        for (long long l = 1; pair - l * ctx.p >= 1; ++l)
            if (auto t = make_term(lambda, lpr, beta, l, ctx)) s2.push_back(*t);
    }

    if (s1.size() != s2.size())
        throw InternalError("cancellation map is not a bijection for " + lambda.to_string());
    std::set<std::pair<std::pair<int, long long>, long long>> s2_keys, imaged;
    for (const JsfTerm& t : s2) s2_keys.insert({{t.root.i, 0}, t.l});
    std::vector<CancellationPair> out;
    for (const auto& [t, phi] : s1) {
        if (!imaged.insert({{phi.i, 0}, t.l}).second || !s2_keys.count({{phi.i, 0}, t.l}))
            throw InternalError("cancellation map is not a bijection for " + lambda.to_string());
        ChiNorm partner = chi_normalize(reflect_dot(lambda, phi, t.l, ctx), ctx);
        if (partner.zero() || partner.partition != t.target || partner.sign != -t.sign)
            throw InternalError("cancelling terms are not exact negatives for " +
                                lambda.to_string());
        out.push_back(CancellationPair{t.root, t.l, phi});
    }
    return out;
}

const DecompositionRow* RowStore::find(const Partition& lambda) const {
    std::shared_lock lock(mutex_);
    auto it = rows_.find(lambda);
    return it == rows_.end() ? nullptr : &it->second;
}

const DecompositionRow& RowStore::insert(const Partition& lambda, DecompositionRow row) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = rows_.try_emplace(lambda, std::move(row));
    if (!inserted && it->second != row)
        throw InternalError("recomputed oracle row differs for " + lambda.to_string());
    return it->second;
}

RowProvider RowStore::provider() const {
    return [this](const Partition& w) { return find(w); };
}

const DecompositionRow& oracle_decomposition_row(const Partition& lambda,
                                                 const GroupContext& ctx, RowStore& store) {
    if (store.context() != ctx) throw InternalError("row store bound to another context");
    if (!in_lambda_m(lambda, ctx.m, ctx))
        throw DomainError("region", "oracle requires lambda_1 + l(lambda) <= p, got " +
                                        lambda.to_string());
    if (const DecompositionRow* row = store.find(lambda)) return *row;

    std::vector<JsfTerm> terms = reduced_jsf(lambda, ctx);
    for (const JsfTerm& t : terms) oracle_decomposition_row(t.target, ctx, store);

    FormalCharacter in_L = to_L_basis(collect_terms(terms), store.provider());
    DecompositionRow row;
    for (const auto& [mu, coeff] : in_L.terms()) {
        if (coeff < 0)
            throw InternalError("negative L-coefficient " + std::to_string(coeff) + " at " +
                                mu.to_string() + " in JSF(" + lambda.to_string() + ")");
        if (coeff > 0) row.insert(mu);
    }
    return store.insert(lambda, std::move(row));
}

}  // namespace capcurl
