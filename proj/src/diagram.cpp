#include "capcurl/diagram.hpp"

#include <algorithm>

namespace capcurl {

namespace {
long long positive_mod(long long x, long long p) { return ((x % p) + p) % p; }

constexpr const char* kUp = "∧";     // wedge
constexpr const char* kDown = "∨";   // vee
constexpr const char* kCross = "×";  // times
}  // namespace

long long DiagramContext::value_of_residue(long long y) const {
    return rho_s + positive_mod(y - rho_s, p);
}

long long DiagramContext::bottom_value(int node) const {
    return value_of_residue(node - 1);
}

long long DiagramContext::top_value(int node) const {
    return value_of_residue(p - (node - 1));
}

std::pair<int, bool> DiagramContext::slot_of_residue(long long y) const {
    if (y == 0) return {1, false};
    if (y <= (p - 1) / 2) return {static_cast<int>(y) + 1, false};
    return {static_cast<int>(p - y) + 1, true};
}

DiagramContext build_context(long long p, long long m, long long s,
                             std::optional<WallSide> wall_drawing_choice) {
    GroupContext group(p, m);  // validates p, m
    if (s < 1 || s > std::min(m, p))
        throw DomainError("s-range", "s must satisfy 1 <= s <= min(m,p)");
    DiagramContext ctx;
    ctx.p = p;
    ctx.m = m;
    ctx.s = s;
    ctx.node_count = static_cast<int>((p + 1) / 2);
    ctx.rho_s = m - s + 1;
    long long x = positive_mod(ctx.rho_s, p);
    ctx.signed_residue = static_cast<int>(x <= (p - 1) / 2 ? x : x - p);
    int r = ctx.signed_residue;
    ctx.wall_after_node = r >= 1 ? r : 1 - r;
    ctx.wall_side = r >= 1 ? WallSide::Below
                  : r == -(p - 1) / 2 ? WallSide::RightEnd
                                      : WallSide::Above;
    if (wall_drawing_choice) {
        if (ctx.wall_side == WallSide::RightEnd) {
            if (*wall_drawing_choice == WallSide::RightEnd)
                throw DomainError("wall-drawing", "choose above or below in the boundary case");
            // Both drawings wrap the right end; nothing else changes.
        } else if (*wall_drawing_choice != ctx.wall_side) {
            throw DomainError("wall-drawing",
                              "the wall position is forced for these (p, m, s)");
        }
    }
    return ctx;
}

int ArrowDiagram::arrow_count() const {
    int n = 0;
    for (NodeState st : states)
        n += st == NodeState::Cross ? 2 : st == NodeState::Empty ? 0 : 1;
    return n;
}

ArrowDiagram arrow_diagram(const Partition& lambda, const DiagramContext& ctx,
                           NodeState zero_arrow_choice) {
    if (zero_arrow_choice != NodeState::Up && zero_arrow_choice != NodeState::Down)
        throw DomainError("zero-arrow", "node-1 arrow must be an arrow");
    GroupContext group = ctx.group();
    if (!in_lambda_region(lambda, ctx.s, group))
        throw DomainError("region", lambda.to_string() + " is not in Lambda(s) for s=" +
                                        std::to_string(ctx.s));
    ArrowDiagram d{ctx, std::vector<NodeState>(ctx.node_count, NodeState::Empty)};
    for (long long i = 1; i <= ctx.s; ++i) {
        long long value = lambda.part(i) + (ctx.m - i + 1);
        if (value < ctx.rho_s || value > ctx.rho_s + ctx.p - 1)
            throw InternalError("arrow value outside the slot window");
        auto [node, top] = ctx.slot_of_residue(positive_mod(value, ctx.p));
        NodeState dir = node == 1 ? zero_arrow_choice : top ? NodeState::Down : NodeState::Up;
        NodeState& st = d.states[node - 1];
        if (st == NodeState::Empty) {
            st = dir;
        } else if ((st == NodeState::Up || st == NodeState::Down) && st != dir) {
            st = NodeState::Cross;
        } else {
            throw InternalError("slot collision while placing arrows");
        }
    }
    if (d.state(1) == NodeState::Cross) throw InternalError("node 1 cannot hold a cross");
    return d;
}

Partition weight_of_diagram(const ArrowDiagram& d) {
    const DiagramContext& ctx = d.ctx;
    std::vector<long long> values;
    for (int node = 1; node <= ctx.node_count; ++node) {
        switch (d.state(node)) {
            case NodeState::Empty: break;
            case NodeState::Up:
                values.push_back(node == 1 ? ctx.node1_value() : ctx.bottom_value(node));
                break;
            case NodeState::Down:
                values.push_back(node == 1 ? ctx.node1_value() : ctx.top_value(node));
                break;
            case NodeState::Cross:
                if (node == 1) throw DomainError("diagram", "node 1 cannot hold a cross");
                values.push_back(ctx.bottom_value(node));
                values.push_back(ctx.top_value(node));
                break;
        }
    }
    if (static_cast<long long>(values.size()) != ctx.s)
        throw DomainError("diagram", "diagram does not carry s arrows");
    std::sort(values.rbegin(), values.rend());
    for (long long i = 0; i < ctx.s; ++i) values[i] -= ctx.m - i;
    return Partition(std::move(values));
}

bool CapCurlDiagram::is_endpoint(int node) const {
    auto hits = [node](const Arc& a) { return a.i == node || a.j == node; };
    return std::any_of(caps.begin(), caps.end(), hits) ||
           std::any_of(curls.begin(), curls.end(), hits);
}

CapCurlDiagram cap_curl(const ArrowDiagram& d, CapCurlMode mode) {
    CapCurlDiagram ccd{d, mode, {}, {}, {}};
    NodeState open = mode == CapCurlMode::C ? NodeState::Down : NodeState::Up;
    for (Side side : {Side::Left, Side::Right}) {
        int lo = side == Side::Left ? 1 : d.ctx.wall_after_node + 1;
        int hi = side == Side::Left ? d.ctx.wall_after_node : d.ctx.node_count;
        // Caps: match close arrows against the nearest open arrow to their
        // left; crosses and capped arrows are transparent.
        std::vector<int> stack, closes;
        for (int node = lo; node <= hi; ++node) {
            if (!d.single(node)) continue;
            if (d.state(node) == open) {
                stack.push_back(node);
            } else if (!stack.empty()) {
                ccd.caps.push_back({stack.back(), node, side});
                stack.pop_back();
            } else {
                closes.push_back(node);
            }
        }
        // Residual singles form closes... opens...; curl the closes pairwise
        // from the left on the left side, the opens pairwise from the right
        // on the right side.
        std::vector<int>& to_pair = side == Side::Left ? closes : stack;
        std::vector<int>& rest = side == Side::Left ? stack : closes;
        std::size_t leftover = to_pair.size() % 2;
        if (side == Side::Left) {
            for (std::size_t k = 0; k + 1 < to_pair.size(); k += 2)
                ccd.curls.push_back({to_pair[k], to_pair[k + 1], side});
            if (leftover) ccd.unmatched.push_back(to_pair.back());
        } else {
            for (std::size_t k = to_pair.size(); k >= 2; k -= 2)
                ccd.curls.push_back({to_pair[k - 2], to_pair[k - 1], side});
            if (leftover) ccd.unmatched.push_back(to_pair.front());
        }
        ccd.unmatched.insert(ccd.unmatched.end(), rest.begin(), rest.end());
    }
    std::sort(ccd.caps.begin(), ccd.caps.end());
    std::sort(ccd.curls.begin(), ccd.curls.end());
    std::sort(ccd.unmatched.begin(), ccd.unmatched.end());
    return ccd;
}

namespace {
int wedge_parity(const ArrowDiagram& d) {
    int ups = 0;
    for (NodeState st : d.states)
        if (st == NodeState::Up) ++ups;
    return ups % 2;
}

NodeState flipped(NodeState st) {
    return st == NodeState::Up ? NodeState::Down : st == NodeState::Down ? NodeState::Up : st;
}
}  // namespace

OverlayResult overlay(const CapCurlDiagram& base_ccd, const Partition& other) {
    const ArrowDiagram& base = base_ccd.base;
    ArrowDiagram od = arrow_diagram(other, base.ctx);
    for (int node = 1; node <= base.ctx.node_count; ++node) {
        bool same_kind = base.single(node) == od.single(node) &&
                         (base.state(node) == NodeState::Cross) ==
                             (od.state(node) == NodeState::Cross);
        if (!same_kind)
            throw DomainError("not-comparable",
                              "arrow diagrams of " + weight_of_diagram(base).to_string() +
                                  " and " + other.to_string() +
                                  " occupy different nodes");
    }
    if (base.single(1) && wedge_parity(od) != wedge_parity(base))
        od.states[0] = flipped(od.states[0]);

    OverlayResult res;
    res.oriented = true;
    for (const Arc& cap : base_ccd.caps)
        if (od.state(cap.i) == od.state(cap.j)) res.oriented = false;
    for (const Arc& curl : base_ccd.curls)
        if (od.state(curl.i) != od.state(curl.j)) res.oriented = false;
    res.nonendpoints_agree = true;
    for (int node = 1; node <= base.ctx.node_count; ++node)
        if (!base_ccd.is_endpoint(node) && od.state(node) != base.state(node))
            res.nonendpoints_agree = false;
    res.overlaid = CapCurlDiagram{od, base_ccd.mode, base_ccd.caps, base_ccd.curls,
                                  base_ccd.unmatched};
    return res;
}

Partition dagger(const Partition& lambda, const DiagramContext& ctx) {
    ArrowDiagram d = arrow_diagram(lambda, ctx);
    for (NodeState& st : d.states) st = flipped(st);
    return weight_of_diagram(d);
}

namespace {
std::string node_glyph(NodeState st, bool ascii) {
    switch (st) {
        case NodeState::Empty: return "o";
        case NodeState::Up: return ascii ? "^" : kUp;
        case NodeState::Down: return ascii ? "v" : kDown;
        case NodeState::Cross: return ascii ? "x" : kCross;
    }
    return "?";
}

std::string arrow_line(const ArrowDiagram& d, bool ascii) {
    std::string out;
    for (int node = 1; node <= d.ctx.node_count; ++node) {
        out += node_glyph(d.state(node), ascii);
        if (node == d.ctx.wall_after_node) out += '|';
    }
    return out;
}

std::string arc_list(const std::vector<Arc>& arcs) {
    if (arcs.empty()) return "-";
    std::string out;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (k) out += ' ';
        out += "(" + std::to_string(arcs[k].i) + "," + std::to_string(arcs[k].j) + ")";
        out += arcs[k].side == Side::Left ? 'L' : 'R';
    }
    return out;
}

const char* state_name(NodeState st) {
    switch (st) {
        case NodeState::Empty: return "empty";
        case NodeState::Up: return "up";
        case NodeState::Down: return "down";
        case NodeState::Cross: return "cross";
    }
    return "?";
}

nlohmann::json arcs_json(const std::vector<Arc>& arcs) {
    nlohmann::json out = nlohmann::json::array();
    for (const Arc& a : arcs)
        out.push_back({a.i, a.j, a.side == Side::Left ? "L" : "R"});
    return out;
}
}  // namespace

nlohmann::json diagram_json(const ArrowDiagram& d) {
    nlohmann::json nodes = nlohmann::json::array();
    for (NodeState st : d.states) nodes.push_back(state_name(st));
    return {{"p", d.ctx.p},
            {"m", d.ctx.m},
            {"s", d.ctx.s},
            {"wall_after_node", d.ctx.wall_after_node},
            {"nodes", nodes},
            {"caps", nlohmann::json::array()},
            {"curls", nlohmann::json::array()}};
}

nlohmann::json diagram_json(const CapCurlDiagram& ccd) {
    nlohmann::json j = diagram_json(ccd.base);
    j["mode"] = ccd.mode == CapCurlMode::C ? "c" : "co";
    j["caps"] = arcs_json(ccd.caps);
    j["curls"] = arcs_json(ccd.curls);
    j["unmatched"] = ccd.unmatched;
    return j;
}

std::string render(const ArrowDiagram& d, TextFormat format) {
    if (format == TextFormat::Json) return diagram_json(d).dump();
    return arrow_line(d, format == TextFormat::Ascii);
}

std::string render(const CapCurlDiagram& ccd, TextFormat format) {
    if (format == TextFormat::Json) return diagram_json(ccd).dump();
    std::string out = arrow_line(ccd.base, format == TextFormat::Ascii);
    out += "\ncaps: " + arc_list(ccd.caps);
    out += "\ncurls: " + arc_list(ccd.curls);
    out += "\nunmatched:";
    if (ccd.unmatched.empty()) out += " -";
    for (int node : ccd.unmatched) out += " " + std::to_string(node);
    return out;
}

ArrowDiagram parse_arrow_string(const std::string& text, const DiagramContext& ctx) {
    std::vector<NodeState> states;
    for (std::size_t k = 0; k < text.size();) {
        auto take = [&](const std::string& glyph) {
            if (text.compare(k, glyph.size(), glyph) != 0) return false;
            k += glyph.size();
            return true;
        };
        if (take(" ")) continue;
        if (take("|")) continue;  // wall position is fixed by the context
        if (take("o")) states.push_back(NodeState::Empty);
        else if (take("^") || take(kUp)) states.push_back(NodeState::Up);
        else if (take("v") || take(kDown)) states.push_back(NodeState::Down);
        else if (take("x") || take(kCross)) states.push_back(NodeState::Cross);
        else throw DomainError("diagram-syntax", "bad diagram glyph in '" + text + "'");
    }
    if (static_cast<int>(states.size()) != ctx.node_count)
        throw DomainError("diagram-syntax", "expected " + std::to_string(ctx.node_count) +
                                                " nodes in '" + text + "'");
    ArrowDiagram d{ctx, std::move(states)};
    if (d.arrow_count() != ctx.s)
        throw DomainError("diagram-syntax", "diagram must carry s arrows");
    if (d.state(1) == NodeState::Cross)
        throw DomainError("diagram-syntax", "node 1 cannot hold a cross");
    return d;
}

}  // namespace capcurl
