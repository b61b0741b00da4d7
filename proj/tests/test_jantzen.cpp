#include "capcurl/jantzen.hpp"

#include "doctest.h"

using namespace capcurl;

namespace {
Partition P(const std::string& text) { return Partition::parse(text); }

FormalCharacter chi(std::initializer_list<std::pair<const char*, long long>> terms) {
    FormalCharacter c(Basis::Chi);
    for (const auto& [w, a] : terms) c.add(P(w), a);
    return c;
}
}  // namespace

TEST_CASE("p-adic valuation of lp") {
    CHECK(p_adic_valuation_of_lp(1, 3) == 1);
    CHECK(p_adic_valuation_of_lp(2, 3) == 1);
    CHECK(p_adic_valuation_of_lp(3, 3) == 2);
    CHECK(p_adic_valuation_of_lp(18, 3) == 3);
}

TEST_CASE("full Jantzen sums from the worked examples") {
    CHECK(full_jsf(P("4,1"), GroupContext(5, 2)) == chi({{"1", -1}, {"2,1", 1}}));
    CHECK(full_jsf(P("2,1"), GroupContext(5, 2)) == chi({{"1", 1}}));
    CHECK(full_jsf(P("2,1,1"), GroupContext(3, 3)) == chi({{"1,1", 1}, {"0", -1}}));
    CHECK(full_jsf(P(""), GroupContext(5, 2)).zero());
    CHECK(full_jsf(P(""), GroupContext(7, 4)).zero());
}

TEST_CASE("full Jantzen sums along the p=3, m=4 chain") {
    GroupContext ctx(3, 4);
    CHECK(full_jsf(P("1,1"), ctx).zero());
    CHECK(full_jsf(P("3,2,2,1"), ctx).zero());
    CHECK(full_jsf(P("4,2,2"), ctx) == chi({{"3,2,2,1", 1}}));
    CHECK(full_jsf(P("4,4"), ctx) == chi({{"4,2,2", 1}, {"3,2,2,1", -1}}));
    CHECK(full_jsf(P("6,2"), ctx) == chi({{"1,1", 1}, {"4,4", 1}, {"4,2,2", 1}}));
    CHECK(full_jsf(P("6,4,2"), ctx) ==
          chi({{"1,1", -1}, {"4,2,2", 1}, {"4,4", 1}, {"6,2", 2}}));
}

TEST_CASE("full Jantzen sums at p=11, m=5") {
    GroupContext ctx(11, 5);
    CHECK(full_jsf(P("7,7,6,1"), ctx) == chi({{"6,6,6,1", 1}, {"7,7,5", 1}}));
    CHECK(full_jsf(P("6,6,6,1"), ctx) == chi({{"6,6,5", 1}}));
    CHECK(full_jsf(P("7,7,5"), ctx) == chi({{"6,6,5", 1}}));
    CHECK(full_jsf(P("6,6,5"), ctx).zero());
}

TEST_CASE("reduced sum term data for 642 at p=3") {
    GroupContext ctx(3, 4);
    std::vector<JsfTerm> terms = reduced_jsf(P("6,4,2"), ctx);
    REQUIRE(terms.size() == 4);
    // sorted by (i, j, l)
    CHECK(terms[0].root == RootRef::e_plus(1, 2));
    CHECK(terms[0].l == 4);
    CHECK(terms[0].sign == -1);
    CHECK(terms[0].valuation == 1);
    CHECK(terms[0].target == P("1,1"));
    CHECK(terms[1].root == RootRef::e_plus(1, 2));
    CHECK(terms[1].l == 5);
    CHECK(terms[1].sign == 1);
    CHECK(terms[1].target == P("4,2,2"));
    CHECK(terms[2].root == RootRef::e_plus(1, 3));
    CHECK(terms[2].l == 4);
    CHECK(terms[2].target == P("4,4"));
    CHECK(terms[3].root == RootRef::e_plus(2, 3));
    CHECK(terms[3].l == 3);
    CHECK(terms[3].valuation == 2);
    CHECK(terms[3].sign == 1);
    CHECK(terms[3].target == P("6,2"));
}

TEST_CASE("reduced sum term data for 7,7,6,1 at p=11") {
    GroupContext ctx(11, 5);
    std::vector<JsfTerm> terms = reduced_jsf(P("7,7,6,1"), ctx);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].root == RootRef::e_plus(1, 2));
    CHECK(terms[0].l == 2);
    CHECK(terms[0].target == P("6,6,6,1"));
    CHECK(terms[1].root == RootRef::e_plus(3, 4));
    CHECK(terms[1].l == 1);
    CHECK(terms[1].target == P("7,7,5"));
}

TEST_CASE("reduced sum edge cases") {
    CHECK(reduced_jsf(P("1"), GroupContext(5, 2)).empty());
    CHECK(reduced_jsf(P(""), GroupContext(3, 3)).empty());
    // 41 is not a 5-core
    CHECK_THROWS_AS(reduced_jsf(P("4,1"), GroupContext(5, 2)), DomainError);
}

TEST_CASE("cancellation map") {
    auto pairs = cancellation_pairs(P("2,1,1"), GroupContext(3, 3));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].plus_root == RootRef::e_plus(1, 3));
    CHECK(pairs[0].l == 1);
    CHECK(pairs[0].twoe_root == RootRef::two_e(1));

    auto pairs642 = cancellation_pairs(P("6,4,2"), GroupContext(3, 4));
    REQUIRE(pairs642.size() == 4);
    std::vector<CancellationPair> expected = {
        {RootRef::e_plus(1, 3), 2, RootRef::two_e(1)},
        {RootRef::e_plus(1, 4), 3, RootRef::two_e(1)},
        {RootRef::e_plus(2, 4), 2, RootRef::two_e(2)},
        {RootRef::e_plus(3, 4), 1, RootRef::two_e(3)},
    };
    for (const auto& want : expected) {
        bool found = false;
        for (const auto& got : pairs642) found = found || got == want;
        CHECK(found);
    }

    CHECK(cancellation_pairs(P(""), GroupContext(3, 3)).empty());
}

TEST_CASE("full equals reduced for p-cores") {
    for (long long p : {3LL, 5LL}) {
        for (long long m = 1; m <= 4; ++m) {
            GroupContext ctx(p, m);
            for (const Partition& la : enumerate_partitions(10, m, 10)) {
                if (!is_p_core(la, ctx)) continue;
                CHECK(full_jsf(la, ctx) == collect_terms(reduced_jsf(la, ctx)));
                CHECK_NOTHROW(cancellation_pairs(la, ctx));
            }
        }
    }
}

TEST_CASE("nonzero plus-root contributions automatically survive in the small region") {
    // enumerate without the (lambda+rho)_j - a > 0 filter and check it holds,
    // along with a < p - 1
    for (long long p : {3LL, 5LL, 7LL}) {
        for (long long m = 1; m <= 4; ++m) {
            GroupContext ctx(p, m);
            for (const Partition& la : enumerate_partitions(12, m, p - 1)) {
                if (!in_lambda_m(la, m, ctx)) continue;
                Weight lpr = lambda_plus_rho(la, ctx);
                auto len = static_cast<int>(la.length());
                for (int i = 1; i <= len; ++i)
                    for (int j = i + 1; j <= len; ++j) {
                        RootRef alpha = RootRef::e_plus(i, j);
                        long long pair = pairing(lpr, alpha);
                        for (long long l = 1; pair - l * p >= 1; ++l) {
                            if (chi_normalize(reflect_dot(la, alpha, l, ctx), ctx).zero())
                                continue;
                            long long a = pair - l * p;
                            CHECK(lpr[j] - a > 0);
                            CHECK(a < p - 1);
                        }
                    }
            }
        }
    }
}

TEST_CASE("oracle decomposition rows") {
    GroupContext ctx(11, 5);
    RowStore store(ctx);
    const DecompositionRow& row = oracle_decomposition_row(P("7,7,6,1"), ctx, store);
    CHECK(row == DecompositionRow{P("6,6,6,1"), P("7,7,5"), P("6,6,5")});
    CHECK(*store.find(P("6,6,6,1")) == DecompositionRow{P("6,6,5")});
    CHECK(*store.find(P("7,7,5")) == DecompositionRow{P("6,6,5")});
    CHECK(oracle_decomposition_row(P("6,6,5"), ctx, store).empty());
    CHECK(oracle_decomposition_row(P(""), ctx, store).empty());

    // rows are stable under recomputation
    CHECK(oracle_decomposition_row(P("7,7,6,1"), ctx, store) == row);

    CHECK_THROWS_AS(oracle_decomposition_row(P("7,7,6,1"), GroupContext(11, 6), store),
                    InternalError);  // store bound to m=5
    GroupContext small(5, 2);
    RowStore small_store(small);
    CHECK_THROWS_AS(oracle_decomposition_row(P("4,1"), small, small_store),
                    DomainError);  // outside the region
}

TEST_CASE("oracle rows never see a negative L-coefficient in the sweep range") {
    for (long long p : {3LL, 5LL, 7LL}) {
        for (long long m = 1; m <= 4; ++m) {
            GroupContext ctx(p, m);
            RowStore store(ctx);
            for (const Partition& la : enumerate_partitions(12, m, p - 1))
                if (in_lambda_m(la, m, ctx))
                    CHECK_NOTHROW(oracle_decomposition_row(la, ctx, store));
        }
    }
}
