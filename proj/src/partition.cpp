#include "capcurl/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace capcurl {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw DomainError("partition", "parts must be weakly decreasing and nonnegative");
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<long long> parts;
    std::string trimmed;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "0") return Partition{};
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("partition-syntax", "malformed partition '" + text + "'");
        parts.push_back(std::stoll(tok));
    }
    if (trimmed.back() == ',')
        throw DomainError("partition-syntax", "malformed partition '" + text + "'");
    try {
        return Partition(std::move(parts));
    } catch (const DomainError&) {
        throw DomainError("partition-syntax",
                          "partition '" + text + "' is not weakly decreasing");
    }
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long long Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (std::size_t i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::transposed() const {
    std::vector<long long> t;
    for (long long row = 1; row <= first_part(); ++row) {
        long long count = 0;
        for (long long x : parts_)
            if (x >= row) ++count;
        t.push_back(count);
    }
    return Partition(std::move(t));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (auto c = size() <=> other.size(); c != 0) return c;
    return parts_ <=> other.parts_;
}

GroupContext::GroupContext(long long p_, long long m_) : p(p_), m(m_) {
    if (m < 1) throw DomainError("context", "m must be >= 1");
    if (p < 3) throw DomainError("context", "p must be an odd prime > 2");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError("context", "p must be prime");
}

Weight rho(const GroupContext& ctx) {
    std::vector<long long> v(ctx.m);
    for (long long i = 0; i < ctx.m; ++i) v[i] = ctx.m - i;
    return Weight(std::move(v));
}

Weight to_weight(const Partition& lambda, const GroupContext& ctx) {
    if (static_cast<long long>(lambda.length()) > ctx.m)
        throw DomainError("length", "partition longer than m=" + std::to_string(ctx.m));
    std::vector<long long> v(ctx.m, 0);
    for (std::size_t i = 0; i < lambda.length(); ++i) v[i] = lambda.parts()[i];
    return Weight(std::move(v));
}

Weight lambda_plus_rho(const Partition& lambda, const GroupContext& ctx) {
    Weight w = to_weight(lambda, ctx);
    for (long long i = 1; i <= ctx.m; ++i) w.at(i) = checked_add(w[i], ctx.m - i + 1);
    return w;
}

Partition partition_of_dominant(const Weight& w) {
    std::vector<long long> v = w.entries();
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) throw DomainError("dominance", "weight is not dominant");
    if (!v.empty() && v.back() < 0) throw DomainError("dominance", "weight is not dominant");
    return Partition(std::move(v));
}

long long greatest_hook(const Partition& lambda) {
    if (lambda.empty()) return 0;
    return lambda.first_part() + static_cast<long long>(lambda.length()) - 1;
}

bool is_p_core(const Partition& lambda, const GroupContext& ctx) {
    Weight v = lambda_plus_rho(lambda, ctx);
    std::set<long long> entries(v.entries().begin(), v.entries().end());
    for (long long e : entries)
        for (long long x = e - ctx.p; x > 0; x -= ctx.p)
            if (!entries.count(x)) return false;
    return true;
}

bool in_lambda_region(const Partition& lambda, long long s, const GroupContext& ctx) {
    if (s < 1 || s > std::min(ctx.m, ctx.p))
        throw DomainError("s-range", "s must satisfy 1 <= s <= min(m,p)");
    return static_cast<long long>(lambda.length()) <= s && s <= ctx.p - lambda.first_part();
}

bool in_lambda_m(const Partition& lambda, long long s, const GroupContext& ctx) {
    if (s < 1 || s > ctx.m) throw DomainError("s-range", "s must satisfy 1 <= s <= m");
    return lambda.first_part() + static_cast<long long>(lambda.length()) <= ctx.p &&
           static_cast<long long>(lambda.length()) <= s;
}

std::vector<Partition> supp(const Partition& lambda, const GroupContext& ctx) {
    if (static_cast<long long>(lambda.length()) > ctx.m)
        throw DomainError("length", "partition longer than m");
    std::set<Partition> out;
    std::size_t len = lambda.length();
    for (std::size_t i = 0; i <= len; ++i) {  // add a box in row i+1
        if (i == len && static_cast<long long>(len) + 1 > ctx.m) continue;
        std::vector<long long> v = lambda.parts();
        if (i == len) v.push_back(0);
        v[i] += 1;
        if (i == 0 || v[i - 1] >= v[i]) out.insert(Partition(std::move(v)));
    }
    for (std::size_t i = 0; i < len; ++i) {  // remove a box from row i+1
        std::vector<long long> v = lambda.parts();
        v[i] -= 1;
        if (i + 1 == len || v[i] >= v[i + 1]) out.insert(Partition(std::move(v)));
    }
    return {out.begin(), out.end()};
}

bool dominance_leq(const Partition& mu, const Partition& lambda, const GroupContext& ctx) {
    if (static_cast<long long>(mu.length()) > ctx.m ||
        static_cast<long long>(lambda.length()) > ctx.m)
        throw DomainError("length", "partition longer than m");
    long long prefix = 0;
    for (long long i = 1; i <= ctx.m; ++i) {
        prefix += lambda.part(i) - mu.part(i);
        if (prefix < 0) return false;
    }
    return prefix % 2 == 0;
}

namespace {
void enumerate_rec(long long remaining, long long rows_left, long long cap,
                   std::vector<long long>& acc, std::vector<Partition>& out) {
    out.push_back(Partition(acc));
    if (rows_left == 0) return;
    for (long long part = std::min(cap, remaining); part >= 1; --part) {
        acc.push_back(part);
        enumerate_rec(remaining - part, rows_left - 1, part, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(long long max_size, long long max_length,
                                            long long max_part) {
    std::vector<Partition> out;
    if (max_size < 0 || max_length < 0 || max_part < 0) return out;
    std::vector<long long> acc;
    enumerate_rec(max_size, max_length, max_part, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace capcurl
