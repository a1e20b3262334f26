#pragma once

#include "holo24/rootdata.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holo24 {

// Positive-definite even lattice given by a basis; vectors are integer
// coordinate columns in that basis.
struct EvenLattice {
    QMatrix gram;
    std::vector<IntVec> roots;  // norm-2 vectors
    std::map<IntVec, std::size_t> root_index;

    int rank() const { return static_cast<int>(gram.rows()); }
    Rational inner(const IntVec& x, const IntVec& y) const;
    void index_roots();
};

EvenLattice root_lattice(SimpleType t);

// Digits per component: E6 uses Z3 = {0,1,2}; D4 uses Z2xZ2 = {0,1,2,3} with XOR.
struct GlueCode {
    std::vector<SimpleType> components;
    std::vector<std::vector<int>> generators;

    std::vector<std::vector<int>> words() const;  // sorted, closed under addition
};

GlueCode glue_code_e6_4();
GlueCode glue_code_d4_6();
int discriminant_order(SimpleType t);
int digit_add(SimpleType t, int x, int y);
// Automorphisms of the discriminant group realised by lattice isometries,
// as digit permutations.
std::vector<std::vector<int>> discriminant_automorphisms(SimpleType t);
// Representative of a digit in Dynkin labels of the component.
IntVec glue_representative(SimpleType t, int digit);

struct NiemeierLattice {
    GlueCode code;
    std::vector<int> offset;  // first Dynkin coordinate of each component
    int dim = 0;
    QMatrix form;             // block-diagonal weight Gram in Dynkin coordinates
    QMatrix basis;            // rows: lattice basis in Dynkin coordinates
    QMatrix basis_inv;
    EvenLattice lattice;
    Rational det;             // of the Gram matrix
    Integer glue_index;       // |N/Q|
    bool even = false;

    std::vector<Rational> to_dynkin(const IntVec& x) const;
    IntVec from_dynkin(const std::vector<Rational>& v) const;  // throws if not in N
    int digit_of(std::size_t component, const std::vector<Rational>& v) const;  // class in Q*/Q
};

NiemeierLattice assemble_niemeier(const GlueCode& code);
const NiemeierLattice& niemeier(const std::string& name);  // "e6_4", "d4_6"; cached

struct LatticeIsometry {
    QMatrix dynkin;  // acts on Dynkin-coordinate columns
    QMatrix matrix;  // acts on lattice-coordinate columns
    std::string description;
};

// Builders acting on one component's Dynkin coordinates.
QMatrix simple_reflection(const RootSystem& s, int i);  // i 0-based
QMatrix root_reflection(const RootSystem& s, const IntVec& root);
QMatrix diagram_automorphism(const std::vector<int>& perm);  // node i -> perm[i]
QMatrix e6_fixed_point_free();
QMatrix d4_fixed_point_free();  // outer, order 3, no fixed vectors
QMatrix d4_weyl_order3();       // s_1 s_2

// Block isometry: slot j of the image receives maps[j] applied to component src[j].
LatticeIsometry block_isometry(const NiemeierLattice& n, const std::vector<int>& src, const std::vector<QMatrix>& maps,
                               const std::string& description);
LatticeIsometry build_isometry(const std::string& name);  // sigma6, sigma2, sigma4
// Dynkin-coordinate map to lattice coordinates; throws if N is not preserved.
QMatrix lattice_matrix(const NiemeierLattice& n, const QMatrix& dynkin);
// Reflection x -> x - (x|r) r in lattice coordinates.
QMatrix lattice_reflection(const EvenLattice& l, const IntVec& root);
bool preserves_lattice(const NiemeierLattice& n, const LatticeIsometry& g);
bool preserves_code(const NiemeierLattice& n, const LatticeIsometry& g);
int matrix_order(const QMatrix& m, int cap = 1000);

// Sparse element of the weight-one Lie algebra: index -> coefficient.
// Indices 0..rank-1 are Cartan basis vectors, rank + r is e^{root r}.
using SparseVec = std::map<std::size_t, Rational>;

class LatticeLieAlgebra {
public:
    explicit LatticeLieAlgebra(const EvenLattice& l);

    std::size_t dim() const { return static_cast<std::size_t>(lat_->rank()) + lat_->roots.size(); }
    std::size_t rank() const { return static_cast<std::size_t>(lat_->rank()); }
    const EvenLattice& lattice() const { return *lat_; }
    int epsilon(const IntVec& a, const IntVec& b) const;  // +-1
    SparseVec bracket_basis(std::size_t i, std::size_t j) const;
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
    Rational form_basis(std::size_t i, std::size_t j) const;
    Rational form(const SparseVec& x, const SparseVec& y) const;

private:
    const EvenLattice* lat_;
    std::vector<std::vector<long>> gram_;
    std::vector<std::size_t> neg_;
};

// Lift of an isometry: e^a -> sign[a] e^{g a}, Cartan by matrix.
struct LiftedAutomorphism {
    QMatrix cartan;
    std::vector<std::size_t> root_image;
    std::vector<int> sign;
    std::vector<int> character;  // linear part of the phase, mod 2, on the lattice basis
    bool character_adjusted_for_order = false;

    SparseVec apply(const SparseVec& x) const;
};

// Phase of the form (-1)^{Q(x)}, solved from the cocycle; `standard` forces
// phase 1 on the fixed sublattice and order equal to the isometry order.
LiftedAutomorphism lift_isometry(const EvenLattice& l, const QMatrix& g, bool standard = true);
LiftedAutomorphism standard_lift(const NiemeierLattice& n, const LatticeIsometry& g);
LiftedAutomorphism compose(const LiftedAutomorphism& a, const LiftedAutomorphism& b);  // a after b
LiftedAutomorphism inverse(const LiftedAutomorphism& a);
int lift_order(const LiftedAutomorphism& a, int cap = 100);
// Exhaustive check on all basis pairs.
bool preserves_brackets(const LatticeLieAlgebra& g, const LiftedAutomorphism& a);
bool preserves_form(const LatticeLieAlgebra& g, const LiftedAutomorphism& a);

// Lie algebra given by sparse structure constants and an invariant form.
struct StructureConstants {
    using Entry = std::pair<std::size_t, Rational>;

    std::size_t dim = 0;
    std::vector<std::vector<std::vector<Entry>>> c;  // c[i][j] = [x_i, x_j]
    QMatrix form;

    std::vector<Rational> bracket(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
    QMatrix ad(const std::vector<Rational>& x) const;
};

struct FixedSubalgebra {
    std::vector<SparseVec> basis;  // in the ambient algebra
    StructureConstants algebra;
    std::size_t cartan_fixed_rank = 0;
};

FixedSubalgebra fixed_subalgebra(const LatticeLieAlgebra& g, const LiftedAutomorphism& a);

struct Identification {
    SemisimpleTypeWithLevels type;
    std::size_t cartan_dim = 0;
    bool exact_check = false;  // Killing-form eigenspace certificate
    std::string note;
};

struct RoundingUnverified : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Identification identify_type(const StructureConstants& sc, std::uint64_t seed = 1);

// rho = 1/4 sum_j (j/n)(1 - j/n) m_j
Rational twisted_ground_energy(const QMatrix& g);
std::vector<Rational> fixed_projection(const QMatrix& g, const std::vector<Rational>& u);
Rational fixed_projection_norm(const NiemeierLattice& n, const LatticeIsometry& g, const std::vector<Rational>& u);
// Dynkin-coordinate vector of a glue word, used as a dual vector u.
std::vector<Rational> glue_vector(const NiemeierLattice& n, const std::vector<int>& digits);

std::size_t count_pattern_sublattices(SimpleType ambient, const std::vector<SimpleType>& pattern);
std::size_t glue_automorphism_group_order(const GlueCode& code);

}  // namespace holo24
