#include "doctest.h"
#include "holo24/exactmath.hpp"

#include <random>

using namespace holo24;

namespace {

Cyclo3 random_cyclo(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    return Cyclo3(rat(num(rng), den(rng)), rat(num(rng), den(rng)));
}

QMatrix random_qmatrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rationals are canonical") {
    CHECK(rat(6, -4) == rat(-3, 2));
    CHECK(to_string(rat(6, -4)) == "-3/2");
    CHECK(to_string(rat(4, 2)) == "2");
    CHECK(parse_rational("10/4") == rat(5, 2));
    CHECK_THROWS(parse_rational("x"));
    CHECK(floor_of(rat(-7, 3)) == -3);
    CHECK(ceil_of(rat(-7, 3)) == -2);
    CHECK(frac_part(rat(-7, 3)) == rat(2, 3));
}

TEST_CASE("cyclo3 arithmetic") {
    Cyclo3 w = Cyclo3::omega();
    CHECK(w * w == Cyclo3(-1, -1));
    CHECK(w * w * w == Cyclo3(1));
    CHECK(Cyclo3(1) + w + w * w == Cyclo3(0));
    CHECK(w.conj() == w * w);
    CHECK(Cyclo3::omega_pow(-1) == w * w);
    // Oracle: the complex embedding agrees with exact multiplication.
    auto x = Cyclo3(rat(3, 2), rat(-5, 7)), y = Cyclo3(rat(-2, 3), rat(1, 4));
    auto z = (x * y).to_complex() - x.to_complex() * y.to_complex();
    CHECK(std::abs(z) < 1e-12);
    CHECK(x.norm() == rat(3, 2) * rat(3, 2) - rat(3, 2) * rat(-5, 7) + rat(25, 49));
    CHECK_THROWS(Cyclo3(0).inverse());
}

TEST_CASE("cyclo3 field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        Cyclo3 a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclo3(1));
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a * b).norm() == a.norm() * b.norm());
    }
}

TEST_CASE("solve_linear") {
    SUBCASE("identity") {
        auto id = QMatrix::identity(3);
        Vec<Rational> b{rat(1), rat(-2, 3), rat(5)};
        auto s = solve_linear(id, b);
        REQUIRE(s);
        CHECK(s->particular == b);
        CHECK(s->kernel.empty());
    }
    SUBCASE("degenerate symmetric") {
        QMatrix a{{1, 1}, {1, 1}};
        auto s = solve_linear(a, Vec<Rational>{1, 1});
        REQUIRE(s);
        CHECK(s->particular == Vec<Rational>{1, 0});
        REQUIRE(s->kernel.size() == 1);
        CHECK(s->kernel[0] == Vec<Rational>{-1, 1});
    }
    SUBCASE("inconsistent") {
        QMatrix a{{1, 1}, {1, 1}};
        CHECK_FALSE(solve_linear(a, Vec<Rational>{1, 2}));
    }
    SUBCASE("dimension mismatch") {
        QMatrix a{{1, 1}, {1, 1}};
        CHECK_THROWS_AS(solve_linear(a, Vec<Rational>{1}), std::invalid_argument);
    }
    SUBCASE("random invertible systems multiply back exactly") {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 10; ++t) {
            QMatrix a = random_qmatrix(rng, 10);
            if (sgn(determinant(a)) == 0) continue;
            Vec<Rational> b;
            for (int i = 0; i < 10; ++i) b.push_back(rat(static_cast<long>(rng() % 17) - 8, 3));
            auto s = solve_linear(a, b);
            REQUIRE(s);
            CHECK(a * s->particular == b);
            CHECK(s->kernel.empty());
        }
    }
    SUBCASE("over cyclo3") {
        ExactMatrix a{{Cyclo3(1), Cyclo3::omega()}, {Cyclo3(0), Cyclo3(2)}};
        Vec<Cyclo3> b{Cyclo3(0, 1), Cyclo3(4)};
        auto s = solve_linear(a, b);
        REQUIRE(s);
        CHECK(a * s->particular == b);
    }
}

TEST_CASE("kernel") {
    CHECK(kernel(QMatrix(3, 3)).size() == 3);
    CHECK(kernel(QMatrix::identity(4)).empty());
    QMatrix p{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    auto k = kernel(p - QMatrix::identity(3));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == k[0][1]);
    CHECK(k[0][1] == k[0][2]);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 5; ++t) {
        QMatrix m(5, 7);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 7; ++j) m(i, j) = static_cast<long>(rng() % 5) - 2;
        auto kb = kernel(m);
        CHECK(kb.size() + rank(m) == 7);
        for (const auto& v : kb) CHECK(m * v == Vec<Rational>(5, Rational(0)));
    }
}

TEST_CASE("determinant and inverse") {
    QMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    CHECK(determinant(a) == 4);
    CHECK(a * inverse(a) == QMatrix::identity(3));
    CHECK_THROWS(inverse(QMatrix{{1, 2}, {2, 4}}));
}

TEST_CASE("float_eigen") {
    SUBCASE("diagonal") {
        QMatrix d{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
        auto e = float_eigen(d);
        REQUIRE(e.clusters.size() == 3);
        CHECK(std::abs(e.clusters[0].value - 1.0) < 1e-9);
        CHECK(std::abs(e.clusters[2].value - 3.0) < 1e-9);
    }
    SUBCASE("rotation by 120 degrees") {
        QMatrix r{{0, -1}, {1, -1}};  // order 3, characteristic polynomial x^2+x+1
        auto e = float_eigen(r);
        REQUIRE(e.values.size() == 2);
        auto w = Cyclo3::omega().to_complex();
        bool has_w = false, has_w2 = false;
        for (auto v : e.values) {
            has_w |= std::abs(v - w) < 1e-9;
            has_w2 |= std::abs(v - std::conj(w)) < 1e-9;
        }
        CHECK(has_w);
        CHECK(has_w2);
    }
}

TEST_CASE("float_eigen matches roots of a known characteristic polynomial") {
    // Companion matrix of x^3 - 7x + 6 = (x-1)(x-2)(x+3).
    QMatrix c{{0, 0, -6}, {1, 0, 7}, {0, 1, 0}};
    auto e = float_eigen(c);
    REQUIRE(e.values.size() == 3);
    CHECK(std::abs(e.values[0] + 3.0) < 1e-9);
    CHECK(std::abs(e.values[1] - 1.0) < 1e-9);
    CHECK(std::abs(e.values[2] - 2.0) < 1e-9);
}
