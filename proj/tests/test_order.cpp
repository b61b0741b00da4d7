#include "capcurl/order.hpp"

#include <set>

#include "doctest.h"

using namespace capcurl;

namespace {
Partition P(const std::string& text) { return Partition::parse(text); }

std::set<Partition> targets_of(const std::vector<std::pair<Move, ArrowDiagram>>& succ) {
    std::set<Partition> out;
    for (const auto& [move, d] : succ) out.insert(weight_of_diagram(d));
    return out;
}
}  // namespace

TEST_CASE("successors of 6,6,6,3,2") {
    DiagramContext ctx = build_context(11, 7, 5);
    auto succ = successors(arrow_diagram(P("6,6,6,3,2"), ctx));
    REQUIRE(succ.size() == 4);
    std::set<std::string> moves;
    for (const auto& [move, d] : succ) moves.insert(move.to_string());
    CHECK(moves == std::set<std::string>{"(1,2)v^L", "(1,3)v^L", "(2,3)^^L", "(5,6)v^R"});
    CHECK(targets_of(succ) ==
          std::set<Partition>{P("6,5,5,3,2"), P("5,5,4,3,2"), P("4,4,4,3,2"),
                              P("6,6,6,2,1")});
}

TEST_CASE("successor edge cases") {
    // all arrows crossed: no moves
    DiagramContext small = build_context(5, 7, 2);
    CHECK(successors(arrow_diagram(P("1,1"), small)).empty());

    // the 7,7,6,1 example has exactly two moves
    DiagramContext ctx = build_context(11, 5, 4);
    auto succ = successors(arrow_diagram(P("7,7,6,1"), ctx));
    REQUIRE(succ.size() == 2);
    CHECK(targets_of(succ) == std::set<Partition>{P("6,6,6,1"), P("7,7,5")});
}

TEST_CASE("successors shrink, stay in region, stay WpD-conjugate") {
    for (long long p : {3LL, 5LL, 7LL, 11LL}) {
        long long m = 6;
        GroupContext group(p, m);
        for (long long s = 1; s <= std::min(m, p); ++s) {
            DiagramContext ctx = build_context(p, m, s);
            for (const Partition& la : enumerate_partitions(12, s, p - s)) {
                if (!in_lambda_region(la, s, group)) continue;
                for (const auto& [move, d] : successors(arrow_diagram(la, ctx))) {
                    (void)move;
                    Partition mu = weight_of_diagram(d);
                    CHECK(la.contains(mu));
                    CHECK(mu != la);
                    CHECK((la.size() - mu.size()) % 2 == 0);
                    CHECK(in_lambda_region(mu, s, group));
                    CHECK(conjugate(la, mu, ctx, ConjugacyGroup::WpD));
                }
            }
        }
    }
}

TEST_CASE("preceq examples") {
    DiagramContext ctx = build_context(11, 7, 5);
    CHECK(preceq(P("4,4,4,2,1"), P("6,6,6,3,2"), ctx));
    CHECK(preceq(P("6,6,6,3,2"), P("6,6,6,3,2"), ctx));
    CHECK_FALSE(preceq(P("6,6,6,3,2"), P("4,4,4,2,1"), ctx));
    CHECK_FALSE(preceq(P("6,6,6,2,2"), P("6,6,6,3,2"), ctx));  // odd difference
    CHECK_THROWS_AS(preceq(P("1"), P("7,7,7,7,7"), ctx), DomainError);  // lambda outside
}

TEST_CASE("lower set of 6,6,6,3,2 lists the paper's eight weights in order") {
    DiagramContext ctx = build_context(11, 7, 5);
    std::vector<Partition> expect = {P("6,6,6,3,2"), P("6,6,6,2,1"), P("6,5,5,3,2"),
                                     P("6,5,5,2,1"), P("5,5,4,3,2"), P("5,5,4,2,1"),
                                     P("4,4,4,3,2"), P("4,4,4,2,1")};
    CHECK(lower_set(P("6,6,6,3,2"), ctx) == expect);

    CHECK(lower_set(P("1,1"), build_context(5, 7, 2)) == std::vector<Partition>{P("1,1")});

    std::vector<Partition> chain = lower_set(P("7,7,6,1"), build_context(11, 5, 4));
    std::set<Partition> as_set(chain.begin(), chain.end());
    CHECK(as_set.count(P("6,6,6,1")) == 1);
    CHECK(as_set.count(P("7,7,5")) == 1);
}

TEST_CASE("preceq is a partial order and respects the topological output order") {
    for (long long p : {5LL, 7LL}) {
        long long m = 5;
        GroupContext group(p, m);
        for (long long s = 1; s <= 5; ++s) {
            DiagramContext ctx = build_context(p, m, s);
            for (const Partition& la : enumerate_partitions(9, s, p - s)) {
                if (!in_lambda_region(la, s, group)) continue;
                std::vector<Partition> lower = lower_set(la, ctx);
                CHECK(lower.front() == la);
                for (std::size_t i = 0; i < lower.size(); ++i) {
                    CHECK(preceq(lower[i], la, ctx));
                    for (std::size_t j = i + 1; j < lower.size(); ++j) {
                        // antisymmetry: later labels never dominate earlier ones
                        CHECK_FALSE(preceq(lower[i], lower[j], ctx));
                        // transitivity via BFS closure: members of a member's
                        // lower set stay in the set
                        if (preceq(lower[j], lower[i], ctx))
                            CHECK(std::count(lower.begin(), lower.end(), lower[j]) == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("preceq does not depend on s") {
    for (long long p : {5LL, 7LL}) {
        long long m = 6;
        GroupContext group(p, m);
        for (const Partition& la : enumerate_partitions(9, m, p - 1)) {
            for (const Partition& mu : enumerate_partitions(9, m, p - 1)) {
                std::optional<bool> first;
                for (long long s = 1; s <= std::min(m, p); ++s) {
                    if (!in_lambda_region(la, s, group) || !in_lambda_region(mu, s, group))
                        continue;
                    bool value = preceq(mu, la, build_context(p, m, s));
                    if (!first)
                        first = value;
                    else
                        CHECK(*first == value);
                }
            }
        }
    }
}

TEST_CASE("conjugacy tests") {
    DiagramContext ctx = build_context(11, 7, 5);
    CHECK(conjugate(P("6,6,6,3,2"), P("6,5,5,3,2"), ctx, ConjugacyGroup::WpD));
    for (ConjugacyGroup g : {ConjugacyGroup::Wp, ConjugacyGroup::WpC, ConjugacyGroup::WpD})
        CHECK(conjugate(P("6,6,6,3,2"), P("6,6,6,3,2"), ctx, g));
    CHECK_FALSE(conjugate(P("6,6,6,3,2"), P("6,6,6,2,2"), ctx, ConjugacyGroup::WpC));

    // same node occupancy, odd flip count away from node 1, node 1 empty:
    // C-conjugate but not D-conjugate
    DiagramContext ctx4 = build_context(11, 7, 4);
    CHECK(conjugate(P("6,6,2,1"), P("6,4,2,1"), ctx4, ConjugacyGroup::WpC));
    CHECK_FALSE(conjugate(P("6,6,2,1"), P("6,4,2,1"), ctx4, ConjugacyGroup::WpD));

    // different occupancy
    CHECK_FALSE(conjugate(P("1"), P("2"), build_context(5, 2, 2), ConjugacyGroup::WpC));
    // odd size difference at equal occupancy (multiset diagram, repeats)
    CHECK_FALSE(conjugate(P(""), P("3"), build_context(5, 1, 1), ConjugacyGroup::Wp));
    CHECK_FALSE(conjugate(P(""), P("3"), build_context(5, 1, 1), ConjugacyGroup::WpC));
    CHECK_THROWS_AS(conjugate(P("1,1,1"), P("1"), build_context(5, 3, 2), ConjugacyGroup::Wp),
                    DomainError);
}

TEST_CASE("moves pair off with reduced Jantzen terms") {
    DiagramContext ctx = build_context(11, 7, 5);
    auto pairs = jsf_arrow_pairs(P("6,6,6,3,2"), ctx);
    CHECK(pairs.size() == 4);

    auto pairs2 = jsf_arrow_pairs(P("7,7,6,1"), build_context(11, 5, 4));
    REQUIRE(pairs2.size() == 2);
    std::set<Partition> targets;
    for (const auto& [move, term] : pairs2) targets.insert(term.target);
    CHECK(targets == std::set<Partition>{P("6,6,6,1"), P("7,7,5")});

    CHECK(jsf_arrow_pairs(P("1,1"), build_context(5, 7, 2)).empty());
}

TEST_CASE("arrow-pair bijection across the sweep") {
    for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        long long m = 6;
        GroupContext group(p, m);
        for (long long s = 1; s <= std::min((long long)6, p); ++s) {
            DiagramContext ctx = build_context(p, m, s);
            for (const Partition& la : enumerate_partitions(16, s, p - s))
                if (in_lambda_region(la, s, group)) CHECK_NOTHROW(jsf_arrow_pairs(la, ctx));
        }
    }
}

TEST_CASE("irreducibility criterion") {
    CHECK(is_weyl_irreducible(P(""), build_context(11, 7, 5)));
    CHECK_FALSE(is_weyl_irreducible(P("6,6,6,3,2"), build_context(11, 7, 5)));
    CHECK(is_weyl_irreducible(P("6,6,5"), build_context(11, 5, 3)));

    for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        long long m = 6;
        GroupContext group(p, m);
        for (long long s = 1; s <= std::min((long long)6, p); ++s) {
            DiagramContext ctx = build_context(p, m, s);
            for (const Partition& la : enumerate_partitions(16, s, p - s))
                if (in_lambda_region(la, s, group))
                    CHECK(is_weyl_irreducible(la, ctx) ==
                          reduced_jsf(la, group).empty());
        }
    }
}

TEST_CASE("maximal targets") {
    DiagramContext ctx = build_context(11, 7, 5);
    CHECK(maximal_targets(P("6,6,6,3,2"), ctx) ==
          std::vector<Partition>{P("6,5,5,3,2"), P("6,6,6,2,1")});

    DiagramContext big = build_context(23, 17, 12);
    auto targets = maximal_targets(P("11,11,11,11,11,11,10,6,4,4,1"), big);
    CHECK(targets.size() == 3);

    CHECK(maximal_targets(P("1,1"), build_context(5, 7, 2)).empty());
}

TEST_CASE("maximal targets are maximal in the strict lower set") {
    for (long long p : {5LL, 7LL, 11LL}) {
        long long m = 5;
        GroupContext group(p, m);
        for (long long s = 1; s <= 5; ++s) {
            DiagramContext ctx = build_context(p, m, s);
            for (const Partition& la : enumerate_partitions(10, s, p - s)) {
                if (!in_lambda_region(la, s, group)) continue;
                std::vector<Partition> lower = lower_set(la, ctx);
                for (const Partition& mu : maximal_targets(la, ctx)) {
                    CHECK(preceq(mu, la, ctx));
                    for (const Partition& nu : lower)
                        if (nu != la && nu != mu) CHECK_FALSE(preceq(mu, nu, ctx));
                }
            }
        }
    }
}
