#pragma once

#include "holo24/affinerep.hpp"

#include <functional>
#include <string>
#include <vector>

namespace holo24 {

struct CaseSpec {
    std::string name;
    std::vector<AffineAlgebra> ambient;
    TwistVector h;
};

CaseSpec make_case(const std::string& name, const std::vector<AffineAlgebra>& ambient,
                   const std::vector<std::vector<Rational>>& h_labels);
CaseSpec negated(const CaseSpec& c);

struct NormReport {
    Rational norm;
    bool in_2z = false;
    bool in_two_thirds_z = false;
};

// <h|h> = sum_i k_i (h_i|h_i)
NormReport invariant_norm(const CaseSpec& c);
// (h|alpha) >= -1 for every root of the ambient algebra.
bool shift_ok(const CaseSpec& c);

struct TupleBound {
    std::vector<std::size_t> rows;  // row index into module_table of each ideal
    std::vector<Weight> tuple;
    Rational conformal_sum;
    Integer ell_min;
    Rational n_sum;                 // sum of n_min(h_i, lambda_i)
    Rational bound;
    bool feasible = false;

    bool is_vacuum() const;
};

// Tuples with integral conformal-weight sum, in lexicographic row order.
std::vector<TupleBound> feasible_tuples(const CaseSpec& c);
Rational twisted_weight_lower_bound(const TupleBound& t, const CaseSpec& c);

struct TwistedMinimum {
    Rational minimum;
    TupleBound witness;          // lexicographically least minimizer
    std::size_t examined = 0;
    std::size_t feasible = 0;
    bool all_bounds_in_third_z = true;
    bool vacuum_bound_is_one = false;
};

TwistedMinimum min_twisted_weight(const CaseSpec& c);

// Visits every feasible tuple with its bound; used by property tests.
void for_each_feasible_bound(const CaseSpec& c,
                             const std::function<void(const std::vector<std::size_t>&, const Rational&)>& fn);

}  // namespace holo24
