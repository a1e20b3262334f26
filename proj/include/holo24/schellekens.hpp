#pragma once

#include "holo24/rootdata.hpp"

#include <optional>
#include <vector>

namespace holo24 {

// All (X_n, k) with h_dual(X_n) = r k, k a positive integer and dim X_n <= dim_cap.
// Each isomorphism class is listed once (B2 = C2, D3 = A3 are not repeated).
std::vector<IdealLevel> simple_ideals_with_ratio(const Rational& r, long dim_cap);

struct CandidateAlgebra {
    SemisimpleTypeWithLevels value;
    long total_dim = 0;
};

std::vector<CandidateAlgebra> enumerate_candidates(long total_dim, const Rational& r);

// Fixed-point types (with levels) of order-3 automorphisms of X_{n,k},
// including the identity. Sorted by type string.
std::vector<SemisimpleTypeWithLevels> order3_fixed_options(SimpleType t, long k, bool include_outer = true);

struct Order3Assignment {
    std::vector<std::vector<std::size_t>> cycles;  // ideal indices permuted cyclically
    std::vector<std::pair<std::size_t, SemisimpleTypeWithLevels>> singletons;
};

std::optional<Order3Assignment> admits_order3_with_fixed(const CandidateAlgebra& c,
                                                         const SemisimpleTypeWithLevels& target);

}  // namespace holo24
