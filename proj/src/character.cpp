#include "capcurl/character.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace capcurl {

std::string RootRef::to_string() const {
    switch (kind) {
        case RootKind::EMinus: return "e" + std::to_string(i) + "-e" + std::to_string(j);
        case RootKind::EPlus: return "e" + std::to_string(i) + "+e" + std::to_string(j);
        case RootKind::TwoE: return "2e" + std::to_string(i);
    }
    return {};
}

namespace {
void check_indices(const Weight& v, const RootRef& alpha) {
    auto m = static_cast<int>(v.rank());
    bool ok = alpha.i >= 1 && alpha.i <= m;
    if (alpha.kind == RootKind::TwoE)
        ok = ok && alpha.j == 0;
    else
        ok = ok && alpha.j > alpha.i && alpha.j <= m;
    if (!ok) throw DomainError("root", "root indices out of range: " + alpha.to_string());
}
}  // namespace

long long pairing(const Weight& v, const RootRef& alpha) {
    check_indices(v, alpha);
    switch (alpha.kind) {
        case RootKind::EMinus: return checked_sub(v[alpha.i], v[alpha.j]);
        case RootKind::EPlus: return checked_add(v[alpha.i], v[alpha.j]);
        case RootKind::TwoE: return v[alpha.i];
    }
    return 0;
}

Weight reflect_dot(const Weight& nu, const RootRef& alpha, long long l,
                   const GroupContext& ctx) {
    if (static_cast<long long>(nu.rank()) != ctx.m)
        throw DomainError("rank", "weight rank differs from m");
    Weight x = nu;
    for (long long i = 1; i <= ctx.m; ++i) x.at(i) = checked_add(x[i], ctx.m - i + 1);
    long long a = checked_sub(pairing(x, alpha), checked_mul(l, ctx.p));
    switch (alpha.kind) {
        case RootKind::EMinus:
            x.at(alpha.i) = checked_sub(x[alpha.i], a);
            x.at(alpha.j) = checked_add(x[alpha.j], a);
            break;
        case RootKind::EPlus:
            x.at(alpha.i) = checked_sub(x[alpha.i], a);
            x.at(alpha.j) = checked_sub(x[alpha.j], a);
            break;
        case RootKind::TwoE:
            x.at(alpha.i) = checked_sub(x[alpha.i], checked_mul(2, a));
            break;
    }
    for (long long i = 1; i <= ctx.m; ++i) x.at(i) -= ctx.m - i + 1;
    return x;
}

Weight reflect_dot(const Partition& nu, const RootRef& alpha, long long l,
                   const GroupContext& ctx) {
    return reflect_dot(to_weight(nu, ctx), alpha, l, ctx);
}

ChiNorm chi_normalize(const Weight& nu, const GroupContext& ctx) {
    if (static_cast<long long>(nu.rank()) != ctx.m)
        throw DomainError("rank", "weight rank differs from m");
    std::vector<long long> v = nu.entries();
    for (long long i = 0; i < ctx.m; ++i) v[i] = checked_add(v[i], ctx.m - i);
    for (long long& x : v)
        if (x == std::numeric_limits<long long>::min())
            throw DomainError("overflow", "integer overflow in negation");

    int sign = 1;
    for (long long& x : v) {
        if (x == 0) return ChiNorm{};
        if (x < 0) {
            x = -x;
            sign = -sign;
        }
    }
    // Insertion-sort descending, tracking the permutation parity. Ties mean
    // chi = 0.
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t k = i; k > 0 && v[k] >= v[k - 1]; --k) {
            if (v[k] == v[k - 1]) return ChiNorm{};
            std::swap(v[k], v[k - 1]);
            sign = -sign;
        }
    }
    for (long long i = 0; i < ctx.m; ++i) v[i] -= ctx.m - i;
    return ChiNorm{sign, Partition(std::move(v))};
}

void FormalCharacter::add(const Partition& w, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, 0);
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& other) {
    if (basis_ != other.basis_)
        throw InternalError("cannot add formal characters in different bases");
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

FormalCharacter& FormalCharacter::operator*=(long long scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c = checked_mul(c, scalar);
    return *this;
}

nlohmann::json FormalCharacter::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : terms_)
        terms.push_back({{"weight", w.to_string()}, {"coeff", c}});
    return {{"basis", basis_ == Basis::Chi ? "chi" : "L"}, {"terms", terms}};
}

FormalCharacter FormalCharacter::from_json(const nlohmann::json& j) {
    std::string b = j.at("basis").get<std::string>();
    if (b != "chi" && b != "L") throw DomainError("basis", "unknown basis '" + b + "'");
    FormalCharacter c(b == "chi" ? Basis::Chi : Basis::L);
    for (const auto& t : j.at("terms"))
        c.add(Partition::parse(t.at("weight").get<std::string>()),
              t.at("coeff").get<long long>());
    return c;
}

namespace {
const DecompositionRow& require_row(const RowProvider& rows, const Partition& w) {
    const DecompositionRow* row = rows(w);
    if (!row) throw DomainError("unresolved-label", "no decomposition row for " + w.to_string());
    return *row;
}
}  // namespace

FormalCharacter to_L_basis(const FormalCharacter& c, const RowProvider& rows) {
    if (c.basis() != Basis::Chi)
        throw InternalError("to_L_basis expects a chi-basis character");
    FormalCharacter out(Basis::L);
    for (const auto& [w, a] : c.terms()) {
        out.add(w, a);
        for (const Partition& mu : require_row(rows, w)) out.add(mu, a);
    }
    return out;
}

FormalCharacter to_chi_basis(const FormalCharacter& c, const RowProvider& rows) {
    if (c.basis() != Basis::L)
        throw InternalError("to_chi_basis expects an L-basis character");
    FormalCharacter out(Basis::Chi);
    // ch L(w) = chi(w) - sum_{mu in row(w)} ch L(mu); peel from the largest
    // term down, sizes strictly decrease along rows.
    std::map<Partition, long long> work(c.terms());
    while (!work.empty()) {
        auto it = std::prev(work.end());
        auto [w, a] = *it;
        work.erase(it);
        if (a == 0) continue;
        out.add(w, a);
        for (const Partition& mu : require_row(rows, w)) work[mu] -= a;
    }
    return out;
}

}  // namespace capcurl
