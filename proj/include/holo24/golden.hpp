#pragma once

// Reference values transcribed from the source article. Values are kept as
// strings so that the table reads like the original; parse with parse_rational.

#include "holo24/rootdata.hpp"

#include <map>
#include <string>
#include <vector>

namespace holo24::golden {

struct ModuleRow {
    IntVec labels;
    std::string conformal_weight;
    std::string pairing;  // (direction|lambda); empty when the table has no such column
    std::string n_min;
};

struct ModuleTable {
    std::string key;        // "g2.1", "a2.3", "a1.1", "a5.3", "d4.3"
    std::string algebra;    // "G2,1"
    std::vector<std::string> direction;  // Dynkin labels of the pairing direction, empty if none
    std::size_t count = 0;  // stated number of irreducible modules
    std::string source;
    std::vector<ModuleRow> rows;
};

const std::vector<ModuleTable>& module_tables();
const ModuleTable& module_table(const std::string& key);

struct SeriesTerm {
    long exponent_thirds;  // exponent of q in units of 1/3
    std::string coefficient;
};

struct SExpansion {
    int power;          // n in f^n(S tau)
    int scale_exponent;  // overall factor 3^scale_exponent
    std::vector<SeriesTerm> terms;
};

struct Modular {
    std::vector<SeriesTerm> hauptmodul;          // leading terms of f, exponents in thirds
    std::string hauptmodul_q_coefficient_paper;  // the displayed binomial
    std::vector<SExpansion> s_expansions;
    std::string c_minus3;
    std::vector<long> formula;                   // coefficients of (d0, d13, d23, 1)
};

const Modular& modular();

struct Case {
    std::string id;
    std::vector<std::string> ambient;            // affine algebras in order
    std::vector<std::vector<std::string>> h;     // Dynkin labels per ideal
    std::string norm;
    std::string min_twisted;
    std::string fixed_type;
    long fixed_dim = 0;
    long dim_v1 = 0;
    long dim_tilde = 0;
    std::string ratio;
    std::vector<std::string> ideal_list;         // simple ideals listed for the ratio
    std::vector<std::string> candidates;         // candidate strings as printed
    std::string survivor;
    std::string lattice;                         // "e6_4" or "d4_6"
    std::string isometry;                        // "sigma6", "sigma2", "sigma4"
    std::string source;
};

const std::vector<Case>& cases();
const Case& case_by_id(const std::string& id);

struct Lattice {
    std::string name;
    long discriminant_order;  // |N/Q|
    long root_count;
    long glue_group_order;
    long dimension;           // of the weight-one Lie algebra
};

struct LatticeFacts {
    std::vector<Lattice> lattices;
    std::string projection_norm;      // <u'|u'>
    std::string sigma6_ground_energy;
    long a2cubed_sublattices_in_e6;
    std::map<std::string, long> fixed_dims;        // by isometry name
    std::map<std::string, std::string> fixed_types;
};

const LatticeFacts& lattice_facts();

}  // namespace holo24::golden
