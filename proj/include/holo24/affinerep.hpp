#pragma once

#include "holo24/rootdata.hpp"

#include <string>
#include <vector>

namespace holo24 {

struct AffineAlgebra {
    SimpleType type;
    long level = 1;

    std::string str() const { return type.str() + "," + std::to_string(level); }
    bool operator==(const AffineAlgebra& o) const { return type == o.type && level == o.level; }
};

AffineAlgebra parse_affine(const std::string& s);  // "A2,3"
std::vector<AffineAlgebra> parse_affine_list(const std::string& s);  // "E6,3 G2,1 G2,1 G2,1"
SemisimpleTypeWithLevels as_type(const std::vector<AffineAlgebra>& ideals);

struct ModuleRow {
    Weight lambda;
    Rational conformal_weight;
    Integer dim_of_top;
};

struct AffineModuleTable {
    AffineAlgebra algebra;
    std::vector<ModuleRow> rows;  // conformal weight ascending, then labels descending
};

AffineModuleTable enumerate_level_weights(const AffineAlgebra& a);
// Cached per algebra; references stay valid for the process lifetime.
const AffineModuleTable& module_table(const AffineAlgebra& a);
bool is_admissible(const Weight& lambda, const AffineAlgebra& a);
Rational conformal_weight(const Weight& lambda, const AffineAlgebra& a);
// Minimum over the weights of the module of the pairing with h.
Rational n_min(const Weight& h, const Weight& lambda);

struct TwistVector {
    std::vector<Weight> components;
};

int sigma_order_on_category(const TwistVector& h, const std::vector<AffineAlgebra>& algebras);

struct InnerFixedIdeal {
    AffineAlgebra ambient;
    SemisimpleTypeWithLevels fixed;
    long dimension = 0;
    std::vector<IntVec> simple_roots;  // retained simple roots in ambient coordinates
};

struct InnerFixedResult {
    SemisimpleTypeWithLevels type;
    long dimension = 0;
    std::vector<InnerFixedIdeal> per_ideal;
};

InnerFixedResult inner_fixed_subalgebra(const std::vector<AffineAlgebra>& ambient, const TwistVector& h);

}  // namespace holo24
