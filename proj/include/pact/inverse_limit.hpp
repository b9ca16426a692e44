#pragma once

#include "pact/quotient_action.hpp"

namespace pact {

// A finite directed index poset; at most 6 indices.
struct IndexPoset {
    std::vector<std::string> ids;
    std::vector<Subset> leq; // leq[i][j]: i <= j

    int size() const { return static_cast<int>(ids.size()); }
    bool le(int i, int j) const { return leq[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0; }
};

IndexPoset validate_poset(const std::vector<std::string>& ids,
                          const std::vector<std::pair<std::string, std::string>>& relations);

// Orbit spaces X_i = X/~_{H_i} with the bonding maps pi_i^j : X_j -> X_i.
struct InverseSystem {
    PartialAction base;
    IndexPoset index;
    std::vector<std::vector<int>> subgroups;        // i -> H_i (normal; H_j ⊆ H_i for i <= j)
    std::vector<QuotientActionBundle> bundles;      // i -> quotient bundle (holds X_i and the pullback action)
    std::vector<std::vector<ContinuousMap>> bonds;  // bonds[i][j] for i <= j, else an empty map
};

InverseSystem build_system(const PartialAction& eta,
                           const IndexPoset& index,
                           const std::vector<std::vector<int>>& subgroups);

struct LimitSpace {
    FiniteSpace space;                      // threads with the subspace topology of the product
    std::vector<std::vector<int>> threads;  // thread -> class index per poset index
    std::vector<ContinuousMap> projections; // phi_i : limit -> X_i
};

LimitSpace inverse_limit(const InverseSystem& sys);

struct LambdaResult {
    LimitSpace limit;
    ContinuousMap lambda;  // X -> limit, x -> (pi_i(x))_i
    PartialAction theta;   // the transported action on the limit
    bool verified = false;
};

// Requires X Hausdorff (discrete) and G*X closed; verifies that lambda is a
// G-equivalence onto the inverse limit and that the projections separate
// points from closed sets.
LambdaResult lambda_equivalence(const InverseSystem& sys);

} // namespace pact
