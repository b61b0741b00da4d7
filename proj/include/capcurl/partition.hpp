#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "capcurl/errors.hpp"

namespace capcurl {

// A partition: weakly decreasing nonnegative integers, trailing zeros
// trimmed. Immutable after construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    // Text syntax used everywhere (CLI, JSON, CSV): comma-separated
    // nonincreasing integers, e.g. "6,6,6,3,2". The empty partition is the
    // empty string or "0".
    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<long long>& parts() const { return parts_; }
    // 1-based part with zero padding beyond the length.
    long long part(std::size_t i) const {
        return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
    }
    long long first_part() const { return parts_.empty() ? 0 : parts_[0]; }
    std::size_t length() const { return parts_.size(); }
    long long size() const;
    bool empty() const { return parts_.empty(); }

    bool contains(const Partition& other) const;  // entrywise mu <= lambda
    Partition transposed() const;

    bool operator==(const Partition&) const = default;
    // Graded lexicographic: by |lambda| first, then by parts. Deterministic
    // container order; mu strictly precedes lambda whenever |mu| < |lambda|.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<long long> parts_;
};

// Integer weight vector of fixed length m; entries may be negative.
class Weight {
public:
    explicit Weight(std::vector<long long> entries) : entries_(std::move(entries)) {}

    std::size_t rank() const { return entries_.size(); }
    long long operator[](std::size_t i) const { return entries_.at(i - 1); }  // 1-based
    long long& at(std::size_t i) { return entries_.at(i - 1); }
    const std::vector<long long>& entries() const { return entries_; }

    bool operator==(const Weight&) const = default;

private:
    std::vector<long long> entries_;
};

// The group Sp_{2m} in characteristic p: p an odd prime, m >= 1.
struct GroupContext {
    long long p = 3;
    long long m = 1;

    GroupContext(long long p_, long long m_);
    bool operator==(const GroupContext&) const = default;
};

// rho = (m, m-1, ..., 1), the half sum of positive roots.
Weight rho(const GroupContext& ctx);

// lambda + rho as a length-m vector.
Weight lambda_plus_rho(const Partition& lambda, const GroupContext& ctx);

// Pad to length m; error when l(lambda) > m.
Weight to_weight(const Partition& lambda, const GroupContext& ctx);

// Inverse of to_weight on dominant weights; error when not weakly
// decreasing nonnegative.
Partition partition_of_dominant(const Weight& w);

// lambda_1 + l(lambda) - 1, the greatest hook length; 0 for the empty
// partition.
long long greatest_hook(const Partition& lambda);

// True iff for every entry e of lambda+rho and every l >= 1 with e - lp > 0
// that value occurs among the entries of lambda+rho.
bool is_p_core(const Partition& lambda, const GroupContext& ctx);

// Lambda(s) = { lambda : l(lambda) <= s <= p - lambda_1 }.
bool in_lambda_region(const Partition& lambda, long long s, const GroupContext& ctx);

// Lambda_s = { lambda : lambda_1 + l(lambda) <= p and l(lambda) <= s }.
bool in_lambda_m(const Partition& lambda, long long s, const GroupContext& ctx);

// All partitions of length <= m obtained by adding or removing one box.
std::vector<Partition> supp(const Partition& lambda, const GroupContext& ctx);

// Dominance order: lambda - mu a nonnegative integer combination of the
// positive roots e_i +- e_j, 2e_i. Decided by the prefix-sum test: all
// prefix sums of lambda - mu nonnegative and |lambda| - |mu| even.
bool dominance_leq(const Partition& mu, const Partition& lambda, const GroupContext& ctx);

// All partitions with |lambda| <= max_size, l(lambda) <= max_length and
// lambda_1 <= max_part, in canonical (graded lex) order.
std::vector<Partition> enumerate_partitions(long long max_size, long long max_length,
                                            long long max_part);

}  // namespace capcurl
