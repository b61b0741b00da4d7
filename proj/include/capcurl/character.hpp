#pragma once

#include <functional>
#include <map>
#include <set>

#include "capcurl/partition.hpp"
#include "json.hpp"

namespace capcurl {

// A positive root of type C_m: e_i - e_j, e_i + e_j (1 <= i < j <= m) or
// 2e_i. Indices are 1-based; j is 0 for the long roots 2e_i.
enum class RootKind { EMinus, EPlus, TwoE };

struct RootRef {
    RootKind kind;
    int i = 0;
    int j = 0;

    static RootRef e_minus(int i, int j) { return {RootKind::EMinus, i, j}; }
    static RootRef e_plus(int i, int j) { return {RootKind::EPlus, i, j}; }
    static RootRef two_e(int i) { return {RootKind::TwoE, i, 0}; }

    bool operator==(const RootRef&) const = default;
    std::string to_string() const;
};

// <v, alpha^vee>: v_i - v_j, v_i + v_j, or v_i.
long long pairing(const Weight& v, const RootRef& alpha);

// The affine reflection in the dot action:
// s_{alpha,l} . nu = s_{alpha,l}(nu + rho) - rho where s_{alpha,l}(x) =
// x - a*alpha, a = <x, alpha^vee> - l*p.
Weight reflect_dot(const Weight& nu, const RootRef& alpha, long long l,
                   const GroupContext& ctx);
Weight reflect_dot(const Partition& nu, const RootRef& alpha, long long l,
                   const GroupContext& ctx);

// chi(nu) rewritten on the dominant cone. sign == 0 encodes chi(nu) = 0
// (some |(nu+rho)_i| repeat or vanish); otherwise chi(nu) =
// sign * chi(partition) with sign = det of the signed permutation sorting
// |nu + rho| into strictly decreasing order.
struct ChiNorm {
    int sign = 0;
    Partition partition;

    bool zero() const { return sign == 0; }
    bool operator==(const ChiNorm&) const = default;
};

ChiNorm chi_normalize(const Weight& nu, const GroupContext& ctx);

enum class Basis { Chi, L };

// Finite integer combination of dominant weights in a tagged basis. Zero
// coefficients are never stored. Mixing bases is a hard error.
class FormalCharacter {
public:
    explicit FormalCharacter(Basis basis) : basis_(basis) {}

    Basis basis() const { return basis_; }
    const std::map<Partition, long long>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }
    long long coeff(const Partition& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Partition& w, long long coeff);
    FormalCharacter& operator+=(const FormalCharacter& other);
    FormalCharacter& operator*=(long long scalar);

    bool operator==(const FormalCharacter&) const = default;

    nlohmann::json to_json() const;
    static FormalCharacter from_json(const nlohmann::json& j);

private:
    Basis basis_;
    std::map<Partition, long long> terms_;
};

// One row of decomposition numbers: the set of mu != lambda with
// [Delta(lambda) : L(mu)] = 1 (all numbers in range are 0 or 1; the
// diagonal entry is implicit).
using DecompositionRow = std::set<Partition>;

// Returns the row for a weight, or null when unknown.
using RowProvider = std::function<const DecompositionRow*(const Partition&)>;

// Rewrite a chi-basis character in the L basis using
// ch Delta(nu) = ch L(nu) + sum_{mu in row(nu)} ch L(mu).
FormalCharacter to_L_basis(const FormalCharacter& c, const RowProvider& rows);

// Unitriangular inverse of to_L_basis; needs rows recursively.
FormalCharacter to_chi_basis(const FormalCharacter& c, const RowProvider& rows);

}  // namespace capcurl
