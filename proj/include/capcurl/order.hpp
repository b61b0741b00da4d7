#pragma once

#include "capcurl/diagram.hpp"
#include "capcurl/jantzen.hpp"

namespace capcurl {

// One arrow-pair reversal: vee-wedge on either side, wedge-wedge on the
// left, vee-vee on the right. Endpoints are single arrows, strictly on one
// side of the wall; the pair need not be consecutive.
enum class MoveKind { VeeWedgeL, VeeWedgeR, WedgeWedgeL, VeeVeeR };

struct Move {
    MoveKind kind;
    int i = 0;
    int j = 0;

    bool operator==(const Move&) const = default;
    std::string to_string() const;
};

// All diagrams one legal move away. Node-1 arrows are direction-free, so a
// pair (1, j) is legal whenever node j carries a single wedge; produced
// diagrams keep the node-1 arrow canonical (vee). Every successor weight is
// strictly smaller and stays in Lambda(s).
std::vector<std::pair<Move, ArrowDiagram>> successors(const ArrowDiagram& d);

// mu preceq lambda: mu is lambda or reachable by moves. False outright when
// mu is not contained in lambda or the size difference is odd.
bool preceq(const Partition& mu, const Partition& lambda, const DiagramContext& ctx);

// All mu preceq lambda, lambda first, topologically sorted (nu preceq mu
// implies nu appears after mu).
std::vector<Partition> lower_set(const Partition& lambda, const DiagramContext& ctx);

enum class ConjugacyGroup { Wp, WpC, WpD };

// Dot-action conjugacy via the multiset arrow diagram (arrows placed at the
// labels of lambda+rho mod p, repeats allowed; requires l <= s). All groups
// need equal arrow counts at every node; W_p and W_p(C_s) additionally an
// even size difference; W_p(D_s) additionally an even number of arrow flips
// away from node 1 (a node-1 arrow absorbs one flip for free).
bool conjugate(const Partition& lambda, const Partition& mu, const DiagramContext& ctx,
               ConjugacyGroup group);

// The bijection between legal moves on the diagram of lambda and the
// reduced Jantzen terms, matched by target weight. A count or target
// mismatch is an InternalError.
std::vector<std::pair<Move, JsfTerm>> jsf_arrow_pairs(const Partition& lambda,
                                                      const DiagramContext& ctx);

// Delta(lambda) irreducible iff c_lambda has no caps and no curls.
bool is_weyl_irreducible(const Partition& lambda, const DiagramContext& ctx);

// Targets of consecutive-pair reversals with no single arrows in between,
// where additionally a wedge-wedge pair has no single arrows to its left
// and a vee-vee pair none to its right; at these mu the decomposition
// number is guaranteed nonzero.
std::vector<Partition> maximal_targets(const Partition& lambda, const DiagramContext& ctx);

}  // namespace capcurl
