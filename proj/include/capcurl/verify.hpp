#pragma once

#include "capcurl/multiplicity.hpp"

namespace capcurl {

// One record per swept weight. `discrepancies` holds human-readable
// reproduction data for every failed cross-check; `l_values` are the
// distinct reduced-sum l-values, flagged (never failed) when there are more
// than two, or more than one while p > |lambda|.
struct VerifyRecord {
    long long p = 0;
    long long m = 0;
    Partition lambda;
    std::vector<std::string> discrepancies;
    std::vector<long long> l_values;
    bool l_value_flag = false;

    nlohmann::json to_json() const;
};

struct VerifyReport {
    std::vector<VerifyRecord> records;  // sorted by (p, m, lambda)
    long long checked = 0;
    long long failed = 0;
    long long flagged = 0;
    double wall_ms = 0.0;

    nlohmann::json summary_json() const;
};

// Cross-validates, for every lambda with lambda_1 + l(lambda) <= p,
// l(lambda) <= m and |lambda| <= max_size, over each p in ps and each
// m in 1..max_m:
//   (a) oracle row support == theorem decomposition support,
//   (b) the move/reduced-term bijection at every valid s,
//   (c) full == reduced Jantzen sum,
//   (d) the dagger duality for every mu preceq lambda,
//   (e) invariance under s, the node-1 arrow choice and the wall drawing.
// Work items are independent; `jobs` threads share only the per-(p, m)
// oracle row stores. Record order is canonical regardless of scheduling.
VerifyReport verify_sweep(const std::vector<long long>& ps, long long max_m,
                          long long max_size, int jobs);

}  // namespace capcurl
