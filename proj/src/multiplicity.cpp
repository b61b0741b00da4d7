#include "capcurl/multiplicity.hpp"

#include <algorithm>

namespace capcurl {

namespace {
std::string quote_csv(const std::string& s) { return '"' + s + '"'; }
}  // namespace

nlohmann::json DecompositionMatrix::to_json() const {
    nlohmann::json names = nlohmann::json::array();
    for (const Partition& w : labels) names.push_back(w.to_string());
    return {{"kind", kind == MatrixKind::Decomp ? "decomp" : "tilt"},
            {"labels", names},
            {"entries", entries}};
}

std::string DecompositionMatrix::to_csv() const {
    std::string out = "label";
    for (const Partition& w : labels) out += "," + quote_csv(w.to_string());
    out += '\n';
    for (std::size_t r = 0; r < labels.size(); ++r) {
        out += quote_csv(labels[r].to_string());
        for (int e : entries[r]) out += "," + std::to_string(e);
        out += '\n';
    }
    return out;
}

int tilting_mult(const Partition& lambda, const Partition& mu, const DiagramContext& ctx) {
    if (!preceq(mu, lambda, ctx)) return 0;
    CapCurlDiagram c = cap_curl(arrow_diagram(lambda, ctx), CapCurlMode::C);
    return overlay(c, mu).oriented ? 1 : 0;
}

int decomposition_number(const Partition& lambda, const Partition& mu,
                         const DiagramContext& ctx) {
    if (!preceq(mu, lambda, ctx)) return 0;
    CapCurlDiagram co = cap_curl(arrow_diagram(mu, ctx), CapCurlMode::Co);
    return overlay(co, lambda).oriented ? 1 : 0;
}

DecompositionMatrix decomposition_matrix(const Partition& lambda, const DiagramContext& ctx,
                                         MatrixKind kind) {
    DecompositionMatrix out;
    out.kind = kind;
    out.labels = lower_set(lambda, ctx);
    auto n = out.labels.size();
    out.entries.assign(n, std::vector<int>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out.entries[r][c] = kind == MatrixKind::Tilt
                                    ? tilting_mult(out.labels[r], out.labels[c], ctx)
                                    : decomposition_number(out.labels[r], out.labels[c], ctx);
    return out;
}

bool dagger_duality_check(const Partition& lambda, const Partition& mu,
                          const DiagramContext& ctx) {
    GroupContext group = ctx.group();
    if (!in_lambda_region(lambda, ctx.s, group) || !in_lambda_region(mu, ctx.s, group))
        throw DomainError("region", "duality check needs both weights in Lambda(s)");
    return decomposition_number(lambda, mu, ctx) ==
           tilting_mult(dagger(mu, ctx), dagger(lambda, ctx), ctx);
}

nlohmann::json BrauerResult::to_json() const {
    return {{"value", value},
            {"p", p},
            {"delta", delta},
            {"r", r},
            {"m", m},
            {"s", s},
            {"lambda_sp", lambda_sp.to_string()},
            {"mu_sp", mu_sp.to_string()},
            {"lambda_brauer", lambda_brauer.to_string()},
            {"mu_brauer", mu_brauer.to_string()},
            {"mu_hook_bound_ok", mu_hook_bound_ok}};
}

BrauerResult brauer_decomposition_number(long long p, long long delta, long long r,
                                         const Partition& lambda, const Partition& mu) {
    GroupContext probe(p, 1);  // validates p
    delta = ((delta % p) + p) % p;
    if (r < 1) throw DomainError("r-range", "r must be >= 1");
    if (r - lambda.size() < 0 || (r - lambda.size()) % 2 != 0)
        throw DomainError("parity", "r - |lambda| must be even and >= 0");
    if (r - mu.size() < 0 || (r - mu.size()) % 2 != 0)
        throw DomainError("parity", "r - |mu| must be even and >= 0");
    if (lambda.first_part() + static_cast<long long>(lambda.length()) > p)
        throw DomainError("hook-bound", "lambda_1 + l(lambda) must be <= p");
    if (lambda.empty() && r % 2 == 0 && delta == 0)
        throw DomainError("delta-zero-empty",
                          "lambda must be nonempty when r is even and delta = 0");

    long long m = r;
    while (((-2 * m - delta) % p + p) % p != 0) ++m;
    long long s = std::max<long long>(1, lambda.length());

    auto value_at = [&](long long mm, long long ss) {
        return tilting_mult(lambda, mu, build_context(p, mm, ss));
    };
    BrauerResult res;
    res.value = value_at(m, s);
    res.p = p;
    res.delta = delta;
    res.r = r;
    res.m = m;
    res.s = s;
    res.lambda_sp = lambda;
    res.mu_sp = mu;
    res.lambda_brauer = lambda.transposed();
    res.mu_brauer = mu.transposed();
    res.mu_hook_bound_ok = mu.first_part() + static_cast<long long>(mu.length()) <= p;

    // The answer may not depend on which valid (m, s) is used.
    if (value_at(m + p, s) != res.value)
        throw InternalError("Brauer value depends on the choice of m");
    if (s + 1 <= std::min(m, p) && s + 1 <= p - lambda.first_part() &&
        value_at(m, s + 1) != res.value)
        throw InternalError("Brauer value depends on the choice of s");
    return res;
}

}  // namespace capcurl
