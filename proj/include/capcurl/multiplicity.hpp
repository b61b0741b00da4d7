#pragma once

#include "capcurl/order.hpp"

namespace capcurl {

enum class MatrixKind { Decomp, Tilt };

// Square 0/1 matrix over a preceq-lower set of weights, largest first.
// Decomp rows are [Delta(lambda) : L(mu)], Tilt rows (T(lambda) : nabla(mu)).
struct DecompositionMatrix {
    MatrixKind kind = MatrixKind::Decomp;
    std::vector<Partition> labels;
    std::vector<std::vector<int>> entries;

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

// (T(lambda) : nabla(mu)) = (T(lambda) : Delta(mu)): 1 iff mu preceq lambda
// and the caps/curls of c_lambda are oriented over mu's arrows.
int tilting_mult(const Partition& lambda, const Partition& mu, const DiagramContext& ctx);

// [nabla(lambda) : L(mu)] = [Delta(lambda) : L(mu)]: 1 iff mu preceq lambda
// and the caps/curls of co_mu are oriented over lambda's arrows.
int decomposition_number(const Partition& lambda, const Partition& mu,
                         const DiagramContext& ctx);

DecompositionMatrix decomposition_matrix(const Partition& lambda, const DiagramContext& ctx,
                                         MatrixKind kind);

// [Delta(lambda):L(mu)] == (T(mu^dagger) : nabla(lambda^dagger)); expected
// to hold identically.
bool dagger_duality_check(const Partition& lambda, const Partition& mu,
                          const DiagramContext& ctx);

// Decomposition number [S(mu^T) : D(lambda^T)] of the Brauer algebra
// B_r(delta) over characteristic p, computed through the symplectic side
// with the smallest valid m >= r (with -2m = delta mod p) and smallest
// valid s. Independence of the (m, s) choice is asserted on every call.
struct BrauerResult {
    int value = 0;
    long long p = 0;
    long long delta = 0;
    long long r = 0;
    long long m = 0;  // chosen
    long long s = 0;  // chosen
    Partition lambda_sp, mu_sp;            // inputs, symplectic-side labels
    Partition lambda_brauer, mu_brauer;    // transposed labels reported back
    bool mu_hook_bound_ok = false;         // whether mu_1 + l(mu) <= p holds

    nlohmann::json to_json() const;
};

BrauerResult brauer_decomposition_number(long long p, long long delta, long long r,
                                         const Partition& lambda, const Partition& mu);

}  // namespace capcurl
