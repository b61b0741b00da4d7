#pragma once

#include <optional>
#include <shared_mutex>

#include "capcurl/character.hpp"

namespace capcurl {

// One raw term of the Jantzen sum: the pair (alpha, l) with
// <lambda+rho, alpha^vee> = a + l*p, a >= 1, contributing
// valuation * sign * chi(target) where valuation = nu_p(l*p).
struct JsfTerm {
    RootRef root;
    long long l = 0;
    long long a = 0;
    int valuation = 0;
    int sign = 0;
    Partition target;

    bool operator==(const JsfTerm&) const = default;
};

// nu_p(l * p) = nu_p(l) + 1.
int p_adic_valuation_of_lp(long long l, long long p);

// The full Jantzen sum: over all positive roots alpha and l >= 1 with
// <lambda+rho, alpha^vee> - l*p > 0, collected into a chi-basis character
// (zero normalizations dropped).
FormalCharacter full_jsf(const Partition& lambda, const GroupContext& ctx);

// The reduced sum, defined for p-cores: only alpha = e_i + e_j with
// 1 <= i < j <= l(lambda), a >= 1, (lambda+rho)_j - a > 0 and nonzero
// normalization. Terms come out sorted by (i, j, l). Lemma-level facts
// (entries of the reflected vector distinct and positive, targets strictly
// contained in lambda and pairwise distinct) are asserted.
std::vector<JsfTerm> reduced_jsf(const Partition& lambda, const GroupContext& ctx);

// Collect raw terms into a chi-basis character.
FormalCharacter collect_terms(const std::vector<JsfTerm>& terms);

// A cancelling pair: the e_i+e_j term (with its l) whose chi-term is the
// exact negative of the matched 2e_i term at the same l.
struct CancellationPair {
    RootRef plus_root;
    long long l = 0;
    RootRef twoe_root;

    bool operator==(const CancellationPair&) const = default;
};

// For a p-core: matches every surviving-but-cancelling e_i+e_j contribution
// ((lambda+rho)_j - a < 0, nonzero chi) with its 2e_i partner, verifying the
// bijection and the sign flip, and checks that every e_i-e_j contribution
// normalizes to zero. Any mismatch is an InternalError.
std::vector<CancellationPair> cancellation_pairs(const Partition& lambda,
                                                 const GroupContext& ctx);

// Memoized store of oracle decomposition rows for one group context.
// Single writer per key, many readers; re-inserting a key asserts the row
// is unchanged.
class RowStore {
public:
    explicit RowStore(GroupContext ctx) : ctx_(ctx) {}

    const GroupContext& context() const { return ctx_; }
    const DecompositionRow* find(const Partition& lambda) const;
    const DecompositionRow& insert(const Partition& lambda, DecompositionRow row);
    RowProvider provider() const;

private:
    GroupContext ctx_;
    mutable std::shared_mutex mutex_;
    std::map<Partition, DecompositionRow> rows_;
};

// The JSF-based oracle: for lambda with lambda_1 + l(lambda) <= p, the set
// of mu != lambda with [Delta(lambda) : L(mu)] = 1 is the support of the
// reduced sum rewritten in the L basis. Rows for the reduced targets are
// computed recursively through the store. A negative L-coefficient
// falsifies multiplicity-freeness and raises InternalError.
const DecompositionRow& oracle_decomposition_row(const Partition& lambda,
                                                 const GroupContext& ctx, RowStore& store);

}  // namespace capcurl
