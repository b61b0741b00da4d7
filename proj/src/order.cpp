#include "capcurl/order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace capcurl {

std::string Move::to_string() const {
    const char* name = kind == MoveKind::VeeWedgeL ? "v^L"
                     : kind == MoveKind::VeeWedgeR ? "v^R"
                     : kind == MoveKind::WedgeWedgeL ? "^^L"
                                                     : "vvR";
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")" + name;
}

namespace {
void canonicalize_node1(ArrowDiagram& d) {
    if (d.states[0] == NodeState::Up) d.states[0] = NodeState::Down;
}
}  // namespace

std::vector<std::pair<Move, ArrowDiagram>> successors(const ArrowDiagram& d) {
    std::vector<std::pair<Move, ArrowDiagram>> out;
    const DiagramContext& ctx = d.ctx;
    auto emit = [&](MoveKind kind, int i, int j) {
        ArrowDiagram next = d;
        next.states[i - 1] = next.states[i - 1] == NodeState::Up ? NodeState::Down
                                                                 : NodeState::Up;
        next.states[j - 1] = next.states[j - 1] == NodeState::Up ? NodeState::Down
                                                                 : NodeState::Up;
        canonicalize_node1(next);
        out.push_back({Move{kind, i, j}, std::move(next)});
    };
    for (int i = 1; i <= ctx.node_count; ++i) {
        if (!d.single(i)) continue;
        for (int j = i + 1; j <= ctx.node_count; ++j) {
            if (!d.single(j) || ctx.side_of_node(i) != ctx.side_of_node(j)) continue;
            if (ctx.side_of_node(i) == Side::Left) {
                // Legal left pairs are v^ and ^^; node 1 counts as either.
                if (d.state(j) == NodeState::Up)
                    emit(d.state(i) == NodeState::Down || i == 1 ? MoveKind::VeeWedgeL
                                                                 : MoveKind::WedgeWedgeL,
                         i, j);
            } else {
                // Legal right pairs are v^ and vv.
                if (d.state(i) == NodeState::Down)
                    emit(d.state(j) == NodeState::Up ? MoveKind::VeeWedgeR
                                                     : MoveKind::VeeVeeR,
                         i, j);
            }
        }
    }
    return out;
}

namespace {
// Breadth-first closure over canonical diagrams; states are the visited
// keys since the node-1 arrow is kept canonical.
template <typename Visit>
void bfs_moves(const ArrowDiagram& start, Visit&& visit) {
    std::set<std::vector<NodeState>> seen;
    std::deque<ArrowDiagram> queue;
    ArrowDiagram first = start;
    canonicalize_node1(first);
    seen.insert(first.states);
    visit(first);
    queue.push_back(std::move(first));
    while (!queue.empty()) {
        ArrowDiagram d = std::move(queue.front());
        queue.pop_front();
        for (auto& [move, next] : successors(d)) {
            (void)move;
            if (seen.insert(next.states).second) {
                visit(next);
                queue.push_back(std::move(next));
            }
        }
    }
}
}  // namespace

bool preceq(const Partition& mu, const Partition& lambda, const DiagramContext& ctx) {
    GroupContext group = ctx.group();
    if (!in_lambda_region(lambda, ctx.s, group))
        throw DomainError("region", lambda.to_string() + " is not in Lambda(s)");
    if (mu == lambda) return true;
    if (!lambda.contains(mu) || (lambda.size() - mu.size()) % 2 != 0) return false;
    ArrowDiagram target = arrow_diagram(mu, ctx);
    canonicalize_node1(target);
    bool found = false;
    bfs_moves(arrow_diagram(lambda, ctx),
              [&](const ArrowDiagram& d) { found = found || d.states == target.states; });
    return found;
}

std::vector<Partition> lower_set(const Partition& lambda, const DiagramContext& ctx) {
    GroupContext group = ctx.group();
    if (!in_lambda_region(lambda, ctx.s, group))
        throw DomainError("region", lambda.to_string() + " is not in Lambda(s)");
    std::vector<Partition> out;
    bfs_moves(arrow_diagram(lambda, ctx),
              [&](const ArrowDiagram& d) { out.push_back(weight_of_diagram(d)); });
    // Moves strictly shrink the size, so size-descending is a topological
    // order; ties are incomparable and broken lexicographically.
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

bool conjugate(const Partition& lambda, const Partition& mu, const DiagramContext& ctx,
               ConjugacyGroup group) {
    if (static_cast<long long>(lambda.length()) > ctx.s ||
        static_cast<long long>(mu.length()) > ctx.s)
        throw DomainError("length", "conjugacy test requires l <= s");
    struct NodeCount {
        int arrows = 0;
        int wedges = 0;
    };
    auto occupancy = [&](const Partition& w) {
        std::vector<NodeCount> counts(ctx.node_count);
        for (long long i = 1; i <= ctx.s; ++i) {
            long long y = ((w.part(i) + ctx.m - i + 1) % ctx.p + ctx.p) % ctx.p;
            auto [node, top] = ctx.slot_of_residue(y);
            counts[node - 1].arrows += 1;
            if (node != 1 && !top) counts[node - 1].wedges += 1;
        }
        return counts;
    };
    std::vector<NodeCount> ca = occupancy(lambda), cb = occupancy(mu);
    for (int node = 1; node <= ctx.node_count; ++node)
        if (ca[node - 1].arrows != cb[node - 1].arrows) return false;
    if ((lambda.size() - mu.size()) % 2 != 0) return false;
    if (group != ConjugacyGroup::WpD) return true;
    long long flips = 0;
    for (int node = 2; node <= ctx.node_count; ++node)
        flips += std::abs(ca[node - 1].wedges - cb[node - 1].wedges);
    return flips % 2 == 0 || ca[0].arrows >= 1;
}

std::vector<std::pair<Move, JsfTerm>> jsf_arrow_pairs(const Partition& lambda,
                                                      const DiagramContext& ctx) {
    GroupContext group = ctx.group();
    auto moves = successors(arrow_diagram(lambda, ctx));
    auto terms = reduced_jsf(lambda, group);
    if (moves.size() != terms.size())
        throw InternalError("move count " + std::to_string(moves.size()) +
                            " != reduced term count " + std::to_string(terms.size()) +
                            " for " + lambda.to_string());
    std::map<Partition, Move> by_target;
    for (const auto& [move, d] : moves)
        if (!by_target.emplace(weight_of_diagram(d), move).second)
            throw InternalError("two moves reach one weight for " + lambda.to_string());
    std::vector<std::pair<Move, JsfTerm>> out;
    for (const JsfTerm& t : terms) {
        auto it = by_target.find(t.target);
        if (it == by_target.end())
            throw InternalError("reduced target " + t.target.to_string() +
                                " has no arrow-pair move for " + lambda.to_string());
        out.push_back({it->second, t});
    }
    return out;
}

bool is_weyl_irreducible(const Partition& lambda, const DiagramContext& ctx) {
    CapCurlDiagram c = cap_curl(arrow_diagram(lambda, ctx), CapCurlMode::C);
    return c.caps.empty() && c.curls.empty();
}

std::vector<Partition> maximal_targets(const Partition& lambda, const DiagramContext& ctx) {
    ArrowDiagram d = arrow_diagram(lambda, ctx);
    std::vector<Partition> out;
    for (Side side : {Side::Left, Side::Right}) {
        std::vector<int> singles;
        for (int node = 1; node <= ctx.node_count; ++node)
            if (ctx.side_of_node(node) == side && d.single(node)) singles.push_back(node);
        for (std::size_t k = 0; k + 1 < singles.size(); ++k) {
            int i = singles[k], j = singles[k + 1];
            bool legal;
            if (side == Side::Left) {
                // v^ freely; ^^ only with no single arrows before it (node 1
                // counts as v at will).
                legal = d.state(j) == NodeState::Up &&
                        (d.state(i) == NodeState::Down || i == 1 || k == 0);
            } else {
                // v^ freely; vv only with no single arrows after it.
                legal = d.state(i) == NodeState::Down &&
                        (d.state(j) == NodeState::Up || k + 2 == singles.size());
            }
            if (!legal) continue;
            ArrowDiagram next = d;
            next.states[i - 1] = next.states[i - 1] == NodeState::Up ? NodeState::Down
                                                                     : NodeState::Up;
            next.states[j - 1] = next.states[j - 1] == NodeState::Up ? NodeState::Down
                                                                     : NodeState::Up;
            out.push_back(weight_of_diagram(next));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace capcurl
