#pragma once

#include "holo24/exactmath.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace holo24 {

struct SimpleType {
    char family = 'A';
    int rank = 1;

    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    auto operator<=>(const SimpleType&) const = default;
};

bool is_valid_type(char family, int rank);
SimpleType simple_type(char family, int rank);  // throws std::invalid_argument
SimpleType parse_simple_type(const std::string& s);  // "E6"

using IntVec = std::vector<long>;

// Simple roots are the coordinate basis; roots are integer vectors in it.
// Weights are rational vectors in the fundamental-weight basis (Dynkin labels).
struct RootSystem {
    SimpleType type;
    int rank = 0;
    QMatrix gram;                          // (a_i|a_j)
    std::vector<IntVec> cartan;            // 2(a_i|a_j)/(a_j|a_j)
    QMatrix weight_gram;                   // (L_i|L_j)
    std::vector<Rational> half_norm;       // (a_i|a_i)/2 = (L_i|a_i)
    std::vector<IntVec> positive_roots;    // sorted by height, then lexicographically
    std::vector<IntVec> roots;             // positives followed by their negatives
    IntVec theta;                          // highest root
    int dual_coxeter = 0;

    Rational root_inner(const IntVec& x, const IntVec& y) const;
    Rational root_norm(const IntVec& x) const { return root_inner(x, x); }
    // (w|x) for a weight w in Dynkin labels and a root-lattice vector x.
    Rational pair(const std::vector<Rational>& w, const IntVec& x) const;
    IntVec root_to_dynkin(const IntVec& x) const;
    bool is_root(const IntVec& x) const;
    std::size_t dimension() const { return roots.size() + static_cast<std::size_t>(rank); }

    std::map<IntVec, std::size_t> root_index;
};

// Cached, process-lifetime root systems (references stay valid).
const RootSystem& build_root_system(SimpleType t);
int dual_coxeter(SimpleType t);
long lie_dimension(SimpleType t);

struct Weight {
    const RootSystem* sys = nullptr;
    std::vector<Rational> coords;

    static Weight zero(const RootSystem& s);
    static Weight fundamental(const RootSystem& s, int i);  // i is 1-based
    static Weight of(const RootSystem& s, const std::vector<Rational>& labels);
    static Weight of_ints(const RootSystem& s, const IntVec& labels);

    bool is_zero() const;
    bool is_dominant_integral() const;
    IntVec integral_labels() const;  // throws if not integral
    std::string str() const;         // "L1+2*L2", "2/3*L3", "0"

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight scaled(const Rational& c) const;
    bool operator==(const Weight& o) const { return sys == o.sys && coords == o.coords; }
};

Rational inner_product(const Weight& x, const Weight& y);

struct WeightSystem {
    std::vector<std::pair<Weight, Integer>> entries;  // dominance-depth order from the top
    Integer total() const;
};

// Weights of the irreducible module as Dynkin labels (no multiplicities).
std::vector<IntVec> weight_set(const RootSystem& s, const IntVec& highest);
WeightSystem weight_system(const Weight& lambda);  // Freudenthal
Weight lowest_weight(const Weight& lambda);
Weight dual_weight(const Weight& lambda);          // -w0(lambda)
Integer weyl_dim(const Weight& lambda);
// Minimum of (L|mu) over the weights mu of the module with highest weight lambda.
Rational lin_min_over_weights(const Weight& big_lambda, const Weight& lambda);
// Same minimum without the non-negativity precondition on L and without shortcut.
Rational min_pairing_over_weights(const Weight& big_lambda, const Weight& lambda);

// Positive roots generated from a Cartan matrix by root strings.
std::vector<IntVec> positive_roots_from_cartan(const std::vector<IntVec>& cartan);

struct IdealLevel {
    SimpleType type;
    Rational level;  // zero means "not assigned"
    bool operator==(const IdealLevel& o) const { return type == o.type && level == o.level; }
    bool operator<(const IdealLevel& o) const {
        if (type != o.type) return type < o.type;
        return level < o.level;
    }
};

struct SemisimpleTypeWithLevels {
    std::vector<IdealLevel> ideals;
    int abelian_rank = 0;

    void normalize();  // canonical order
    SemisimpleTypeWithLevels normalized() const;
    long dimension() const;
    int rank() const;
    std::string str() const;
    bool operator==(const SemisimpleTypeWithLevels& o) const;
};

SemisimpleTypeWithLevels parse_type_string(const std::string& s);
SemisimpleTypeWithLevels merge(const SemisimpleTypeWithLevels& x, const SemisimpleTypeWithLevels& y);

struct DiagramComponent {
    SimpleType type;
    std::vector<int> nodes;
    Rational max_norm;  // largest simple-root norm in the component
};

// Split a Gram matrix of linearly independent roots into irreducible pieces.
std::vector<DiagramComponent> classify_gram(const QMatrix& gram);
QMatrix gram_from_cartan(const std::vector<IntVec>& cartan);

struct AffineDiagram {
    SimpleType type;
    int twist = 1;
    QMatrix gram;           // node 0 first
    std::vector<int> marks;
};

AffineDiagram affine_diagram(SimpleType t, int twist);

struct KacFixed {
    SemisimpleTypeWithLevels type;  // levels unset
    std::vector<DiagramComponent> components;
    std::vector<Rational> level_factor;  // fixed level = ambient level * factor
    int order = 0;
};

KacFixed kac_fixed_subalgebra(SimpleType t, const std::vector<int>& s, int twist);

}  // namespace holo24
