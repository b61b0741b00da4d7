#pragma once

#include <optional>

#include "capcurl/partition.hpp"
#include "json.hpp"

namespace capcurl {

enum class NodeState : std::uint8_t { Empty, Up, Down, Cross };  // Up = wedge, Down = vee
enum class WallSide { Below, Above, RightEnd };
enum class Side { Left, Right };
enum class CapCurlMode { C, Co };
enum class TextFormat { Unicode, Ascii, Json };

// Layout of the (p+1)/2 nodes, the wall and the p slot values for a choice
// of (p, m, s). Node k >= 2 has a bottom label k-1 and a top label -(k-1);
// node 1 has the single label 0. Values run rho_s, rho_s+1, ...,
// rho_s+p-1 anticlockwise starting immediately after the wall, where
// anticlockwise order is node 1, bottom slots left to right, top slots
// right to left.
struct DiagramContext {
    long long p = 3;
    long long m = 1;
    long long s = 1;
    int node_count = 2;        // (p+1)/2
    long long rho_s = 1;       // m - s + 1
    int signed_residue = 1;    // rho_s reduced into (-p/2, p/2)
    int wall_after_node = 1;   // the node boundary the wall crosses
    WallSide wall_side = WallSide::Below;

    GroupContext group() const { return GroupContext(p, m); }
    Side side_of_node(int node) const {
        return node <= wall_after_node ? Side::Left : Side::Right;
    }
    // Value sitting in the slot of residue y (0 <= y < p): the
    // representative of y in [rho_s, rho_s + p - 1].
    long long value_of_residue(long long y) const;
    long long node1_value() const { return value_of_residue(0); }
    long long bottom_value(int node) const;  // node >= 2
    long long top_value(int node) const;     // node >= 2
    // Slot of a residue: node index and whether it is the top slot.
    std::pair<int, bool> slot_of_residue(long long y) const;

    bool operator==(const DiagramContext&) const = default;
};

// wall_drawing_choice matters only in the boundary case rho_s = (p+1)/2
// mod p, where the wall wraps the right end and may be drawn above or
// below; both drawings give the same cut and identical semantics.
DiagramContext build_context(long long p, long long m, long long s,
                             std::optional<WallSide> wall_drawing_choice = std::nullopt);

// Arrow placement for lambda in Lambda(s): value in a bottom slot -> Up,
// top slot -> Down, the node-1 value -> zero_arrow_choice; two arrows at a
// node form a cross.
struct ArrowDiagram {
    DiagramContext ctx;
    std::vector<NodeState> states;  // index 0 = node 1

    NodeState state(int node) const { return states.at(node - 1); }
    bool single(int node) const {
        NodeState st = state(node);
        return st == NodeState::Up || st == NodeState::Down;
    }
    int arrow_count() const;

    bool operator==(const ArrowDiagram&) const = default;
};

ArrowDiagram arrow_diagram(const Partition& lambda, const DiagramContext& ctx,
                           NodeState zero_arrow_choice = NodeState::Down);

// Read arrow values back off the diagram and subtract the rho prefix;
// inverse of arrow_diagram up to the node-1 choice.
Partition weight_of_diagram(const ArrowDiagram& d);

struct Arc {
    int i = 0;
    int j = 0;  // node endpoints, i < j, same side of the wall
    Side side = Side::Left;

    bool operator==(const Arc&) const = default;
    auto operator<=>(const Arc&) const = default;
};

struct CapCurlDiagram {
    ArrowDiagram base;
    CapCurlMode mode = CapCurlMode::C;
    std::vector<Arc> caps;
    std::vector<Arc> curls;
    std::vector<int> unmatched;  // single arrows in no cap or curl

    bool is_endpoint(int node) const;
};

// Mode C (c_lambda): per side, recursively cap vee-wedge neighbour pairs;
// then curl the residual wedges pairwise from the left (left side) and the
// residual vees pairwise from the right (right side). Mode Co (co_mu) swaps
// the arrow roles.
CapCurlDiagram cap_curl(const ArrowDiagram& d, CapCurlMode mode);

// Caps and curls of a base weight re-read over the arrow diagram of
// `other`: other's node-1 arrow is flipped if needed so the wedge-count
// parity matches the base diagram; a cap is oriented iff its endpoint
// arrows are opposite, a curl iff they are equal.
struct OverlayResult {
    CapCurlDiagram overlaid;
    bool oriented = false;
    bool nonendpoints_agree = false;
};

OverlayResult overlay(const CapCurlDiagram& base_ccd, const Partition& other);

// Flip every single arrow and read the weight back; an involution on
// Lambda(s).
Partition dagger(const Partition& lambda, const DiagramContext& ctx);

// One-line arrow string over {wedge, vee, cross, o} with '|' at the wall
// cut (ASCII: ^ v x o). Cap-curl rendering appends caps/curls/unmatched
// lines. Json renders the schema
// {"p","m","s","wall_after_node","nodes","caps","curls"}.
std::string render(const ArrowDiagram& d, TextFormat format);
std::string render(const CapCurlDiagram& ccd, TextFormat format);
nlohmann::json diagram_json(const ArrowDiagram& d);
nlohmann::json diagram_json(const CapCurlDiagram& ccd);

// Parse a rendered arrow line (either glyph set, wall optional) back into a
// diagram over the given context.
ArrowDiagram parse_arrow_string(const std::string& text, const DiagramContext& ctx);

}  // namespace capcurl
