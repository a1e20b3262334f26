#include "doctest.h"
#include "holo24/golden.hpp"
#include "holo24/latticevoa.hpp"

#include <random>

using namespace holo24;

namespace {

SemisimpleTypeWithLevels golden_fixed_type(const std::string& isometry) {
    for (const auto& c : golden::cases())
        if (c.isometry == isometry) return parse_type_string(c.fixed_type);
    throw std::invalid_argument(isometry);
}

bool jacobi_holds(const LatticeLieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
    SparseVec x{{i, Rational(1)}}, y{{j, Rational(1)}}, z{{k, Rational(1)}};
    SparseVec s;
    for (const auto& t : {g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x)), g.bracket(z, g.bracket(x, y))})
        for (const auto& [a, c] : t) s[a] += c;
    for (const auto& [a, c] : s)
        if (sgn(c) != 0) return false;
    return true;
}

// Eigenvalue multiplicities of an order-3 map from ranks, as an independent check.
Rational rho_order3(const QMatrix& g) {
    const std::size_t n = g.rows();
    std::size_t fixed = n - rank(g - QMatrix::identity(n));
    Rational m = rat(static_cast<long>(n - fixed), 2);
    return rat(1, 4) * 2 * rat(2, 9) * m;
}

}  // namespace

TEST_CASE("glue codes and lattice assembly") {
    CHECK(glue_code_e6_4().words().size() == 9);
    CHECK(glue_code_d4_6().words().size() == 64);
    for (const auto& f : golden::lattice_facts().lattices) {
        CAPTURE(f.name);
        const NiemeierLattice& n = niemeier(f.name);
        CHECK(n.dim == 24);
        CHECK(n.det == 1);
        CHECK(n.even);
        CHECK(n.glue_index == f.discriminant_order);
        // Every norm-2 vector lies in the root lattice: nonzero glue words have weight >= 3.
        std::size_t expect = 0;
        for (auto t : n.code.components) expect += build_root_system(t).roots.size();
        CHECK(n.lattice.roots.size() == expect);
        CHECK(n.lattice.roots.size() == static_cast<std::size_t>(f.root_count));
        for (const auto& r : n.lattice.roots) CHECK(n.lattice.inner(r, r) == 2);
    }
    GlueCode bad{{SimpleType{'E', 6}}, {{1}}};
    CHECK_FALSE(assemble_niemeier(bad).det == 1);
    CHECK_THROWS(niemeier("a1_24"));
}

TEST_CASE("component isometries") {
    QMatrix id6 = QMatrix::identity(6), id4 = QMatrix::identity(4);
    QMatrix phi6 = e6_fixed_point_free(), phi4 = d4_fixed_point_free(), psi = d4_weyl_order3();
    CHECK(phi6 * phi6 + phi6 + id6 == QMatrix(6, 6));
    CHECK(phi4 * phi4 + phi4 + id4 == QMatrix(4, 4));
    CHECK(matrix_order(psi) == 3);
    CHECK(rank(psi - id4) == 2);
    const auto& e6 = build_root_system(simple_type('E', 6));
    const auto& d4 = build_root_system(simple_type('D', 4));
    CHECK(phi6.transpose() * e6.weight_gram * phi6 == e6.weight_gram);
    CHECK(phi4.transpose() * d4.weight_gram * phi4 == d4.weight_gram);
    CHECK(matrix_order(simple_reflection(d4, 2)) == 2);
}

TEST_CASE("the three order-3 isometries") {
    for (const std::string name : {"sigma6", "sigma2", "sigma4"}) {
        CAPTURE(name);
        LatticeIsometry g = build_isometry(name);
        const auto& n = niemeier(name == "sigma6" ? "e6_4" : "d4_6");
        CHECK(preserves_lattice(n, g));
        CHECK(preserves_code(n, g));
        CHECK(matrix_order(g.matrix) == 3);
        CHECK(twisted_ground_energy(g.matrix) == rho_order3(g.matrix));
    }
    CHECK(twisted_ground_energy(build_isometry("sigma6").matrix) == parse_rational(golden::lattice_facts().sigma6_ground_energy));
    // Rank of the fixed sublattice of sigma4: psi fixes 2, the 3-cycle fixes 4.
    QMatrix g4 = build_isometry("sigma4").matrix;
    CHECK(24 - rank(g4 - QMatrix::identity(24)) == 6);
    QMatrix minus = QMatrix::identity(24);
    for (std::size_t i = 0; i < 24; ++i) minus(i, i) = -1;
    CHECK(twisted_ground_energy(minus) == rat(3, 2));
    CHECK(twisted_ground_energy(QMatrix::identity(24)) == 0);
    for (const std::string name : {"sigma6", "sigma2", "sigma4"}) {
        QMatrix g = build_isometry(name).matrix;
        CHECK(twisted_ground_energy(g) == twisted_ground_energy(g * g));
    }
}

TEST_CASE("fixed projections of dual vectors") {
    const auto& n = niemeier("e6_4");
    LatticeIsometry g = build_isometry("sigma6");
    CHECK(fixed_projection_norm(n, g, glue_vector(n, {1, 0, 0, 0})) == 0);
    Rational p = fixed_projection_norm(n, g, glue_vector(n, {0, 1, 0, 0}));
    CHECK(p == parse_rational(golden::lattice_facts().projection_norm));
    auto proj = fixed_projection(g.dynkin, glue_vector(n, {0, 1, 0, 0}));
    auto expect = glue_vector(n, {0, 1, 1, 1});
    for (auto& x : expect) x /= 3;
    CHECK(proj == expect);
    auto u = glue_vector(n, {1, 2, 0, 1});
    CHECK(fixed_projection(QMatrix::identity(24), u) == u);
}

TEST_CASE("weight-one Lie algebra satisfies Jacobi") {
    std::mt19937_64 rng(11);
    for (const std::string name : {"e6_4", "d4_6"}) {
        CAPTURE(name);
        LatticeLieAlgebra g(niemeier(name).lattice);
        CHECK(g.dim() == static_cast<std::size_t>(name == "e6_4" ? 312 : 168));
        std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
        int bad = 0;
        for (int t = 0; t < 10000; ++t)
            if (!jacobi_holds(g, pick(rng), pick(rng), pick(rng))) ++bad;
        CHECK(bad == 0);
        // epsilon(a, b) epsilon(b, a) = (-1)^{(a|b)}
        const auto& roots = g.lattice().roots;
        for (int t = 0; t < 500; ++t) {
            const auto& a = roots[pick(rng) % roots.size()];
            const auto& b = roots[pick(rng) % roots.size()];
            long ip = g.lattice().inner(a, b).get_num().get_si();
            CHECK(g.epsilon(a, b) * g.epsilon(b, a) == (ip % 2 == 0 ? 1 : -1));
        }
    }
    // Dense sample: in a single E6 most brackets are nonzero.
    EvenLattice e6 = root_lattice(simple_type('E', 6));
    LatticeLieAlgebra g(e6);
    std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
    int bad = 0, nontrivial = 0;
    for (int t = 0; t < 10000; ++t) {
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        if (!g.bracket_basis(j, k).empty()) ++nontrivial;
        if (!jacobi_holds(g, i, j, k)) ++bad;
    }
    CHECK(bad == 0);
    CHECK(nontrivial > 1000);
}

TEST_CASE("standard lifts") {
    for (const std::string name : {"sigma6", "sigma2", "sigma4"}) {
        CAPTURE(name);
        const auto& n = niemeier(name == "sigma6" ? "e6_4" : "d4_6");
        LatticeLieAlgebra g(n.lattice);
        LatticeIsometry iso = build_isometry(name);
        LiftedAutomorphism a = standard_lift(n, iso);
        CHECK(preserves_brackets(g, a));
        CHECK(preserves_form(g, a));
        CHECK(lift_order(a) == 3);
        for (std::size_t k = 0; k < a.root_image.size(); ++k)
            if (a.root_image[k] == k) CHECK(a.sign[k] == 1);
        LiftedAutomorphism id = compose(a, inverse(a));
        CHECK(lift_order(id) == 1);
    }
    // A reflection lifts to an automorphism too, without the standard normalisation.
    EvenLattice d4 = root_lattice(simple_type('D', 4));
    LatticeLieAlgebra g(d4);
    LiftedAutomorphism r = lift_isometry(d4, lattice_reflection(d4, d4.roots[0]), false);
    CHECK(preserves_brackets(g, r));
    CHECK_THROWS(lift_isometry(d4, QMatrix::identity(4) + QMatrix::identity(4)));
}

TEST_CASE("fixed subalgebras and their types") {
    const auto& facts = golden::lattice_facts();
    for (const auto& [name, dim] : facts.fixed_dims) {
        CAPTURE(name);
        const auto& n = niemeier(name == "sigma6" ? "e6_4" : "d4_6");
        LatticeLieAlgebra g(n.lattice);
        LiftedAutomorphism a = standard_lift(n, build_isometry(name));
        FixedSubalgebra f = fixed_subalgebra(g, a);
        CHECK(f.basis.size() == static_cast<std::size_t>(dim));
        for (const auto& v : f.basis) CHECK(a.apply(v) == v);
        Identification id = identify_type(f.algebra, 3);
        CHECK(id.type == golden_fixed_type(name));
        CHECK(id.exact_check);
        CHECK(id.type.dimension() == dim);
    }
}

TEST_CASE("identification of untwisted root-lattice algebras") {
    for (auto [fam, r] : std::vector<std::pair<char, int>>{{'D', 4}, {'E', 6}, {'A', 2}}) {
        EvenLattice l = root_lattice(simple_type(fam, r));
        LatticeLieAlgebra g(l);
        LiftedAutomorphism id = lift_isometry(l, QMatrix::identity(r));
        FixedSubalgebra f = fixed_subalgebra(g, id);
        Identification t = identify_type(f.algebra, 5);
        CHECK(t.type.str() == simple_type(fam, r).str() + ",1");
        CHECK(t.exact_check);
    }
}

TEST_CASE("identification is invariant under conjugation") {
    const auto& n = niemeier("d4_6");
    LatticeLieAlgebra g(n.lattice);
    LiftedAutomorphism a = standard_lift(n, build_isometry("sigma4"));
    SemisimpleTypeWithLevels target = golden_fixed_type("sigma4");
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> pick(0, n.lattice.roots.size() - 1);
    for (int t = 0; t < 20; ++t) {
        LiftedAutomorphism w = lift_isometry(n.lattice, lattice_reflection(n.lattice, n.lattice.roots[pick(rng)]), false);
        for (int k = 0; k < 2; ++k)
            w = compose(w, lift_isometry(n.lattice, lattice_reflection(n.lattice, n.lattice.roots[pick(rng)]), false));
        LiftedAutomorphism c = compose(w, compose(a, inverse(w)));
        FixedSubalgebra f = fixed_subalgebra(g, c);
        CHECK(f.basis.size() == 54);
        Identification id = identify_type(f.algebra, 100 + static_cast<std::uint64_t>(t));
        CHECK(id.type == target);
    }
}

TEST_CASE("pattern sublattices") {
    CHECK(count_pattern_sublattices(simple_type('E', 6), std::vector<SimpleType>(3, simple_type('A', 2))) ==
          static_cast<std::size_t>(golden::lattice_facts().a2cubed_sublattices_in_e6));
    CHECK(count_pattern_sublattices(simple_type('A', 2), {simple_type('A', 2)}) == 1);
    CHECK(count_pattern_sublattices(simple_type('D', 4), std::vector<SimpleType>(3, simple_type('A', 1))) == 12);
    CHECK(count_pattern_sublattices(simple_type('A', 2), {simple_type('A', 1)}) == 3);
}

TEST_CASE("glue code automorphism groups") {
    for (const auto& f : golden::lattice_facts().lattices) {
        CAPTURE(f.name);
        CHECK(glue_automorphism_group_order(niemeier(f.name).code) == static_cast<std::size_t>(f.glue_group_order));
    }
    CHECK(glue_automorphism_group_order({{simple_type('E', 6)}, {}}) == 2);
    CHECK(glue_automorphism_group_order({{simple_type('D', 4)}, {}}) == 6);
}
