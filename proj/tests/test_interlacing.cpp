#include <catch_amalgamated.hpp>

#include <random>

#include "lame/interlacing.hpp"
#include "support.hpp"

using namespace lame;

namespace {

std::vector<BigRat> random_positive(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(1, 50), den(1, 12);
    std::vector<BigRat> out;
    for (std::size_t i = 0; i < n; ++i) {
        BigRat q(num(rng), den(rng));
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

RatMatrix cyclic_matrix(const std::vector<BigRat>& a, const std::vector<BigRat>& b, std::size_t n, int sign) {
    RatMatrix M(n, std::vector<BigRat>(n, BigRat(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) M[i][i + 1] = sign * a[i];
    for (std::size_t i = 2; i < n; ++i) M[i][i - 2] = sign * b[i];
    return M;
}

RatPoly reflect(const RatPoly& p) {
    // p(-x) times (-1)^deg, keeping it monic
    std::vector<BigRat> c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if ((c.size() - 1 - k) % 2 == 1) c[k] = -c[k];
    }
    return RatPoly(std::move(c));
}

}  // namespace

TEST_CASE("recurrence examples", "[interlacing]") {
    std::vector<BigRat> one(3, BigRat(1));
    auto t = pqr_recurrence(one, one, one, 2);
    CHECK(t[1].P == (RatPoly{1, 1}));
    CHECK(t[1].Q == (RatPoly{2, 1}));
    CHECK(t[1].R == (RatPoly{3, 1}));
    CHECK(t[2].P == (RatPoly{1, 4, 1}));

    auto u = pqr_recurrence({BigRat(2)}, {BigRat(3)}, {BigRat(5)}, 1);
    CHECK(u[1].P == (RatPoly{2, 1}));
    CHECK(u[1].Q == (RatPoly{5, 1}));
    CHECK(u[1].R == (RatPoly{10, 1}));

    CHECK_THROWS_AS(pqr_recurrence({BigRat(0)}, {BigRat(1)}, {BigRat(1)}, 1), NonPositiveCoefficient);
    CHECK_THROWS_AS(pqr_recurrence({BigRat(1)}, {BigRat(-1)}, {BigRat(1)}, 1), NonPositiveCoefficient);
}

TEST_CASE("interlacing examples", "[interlacing]") {
    std::vector<BigRat> one(3, BigRat(1));
    auto t = pqr_recurrence(one, one, one, 2);
    auto rep = interlacing_check(t);
    CHECK(rep.ok());
    CHECK(rep.checked == 2);
    // r_{1,1} = -3 lies above p_{2,2} = -2 - sqrt 3
    CHECK(t[2].P(BigRat(-3)) < 0);
    CHECK(t[2].P(BigRat(-4)) > 0);

    // a hand-made triple whose roots do not interlace is caught
    PQRTriple bad{1, RatPoly{3, 1}, RatPoly{2, 1}, RatPoly{1, 1}};
    CHECK_FALSE(interlacing_check({bad}).ok());
    CHECK_FALSE(interlacing_check({bad}, false).ok());
    CHECK(interlacing_check(t, false).ok());
}

TEST_CASE("interlacing on random positive sequences", "[interlacing][property]") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<int> steps(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const int j = steps(rng);
        auto A = random_positive(rng, std::size_t(j));
        auto B = random_positive(rng, std::size_t(j));
        auto C = random_positive(rng, std::size_t(j));
        auto rep = interlacing_check(pqr_recurrence(A, B, C, j));
        for (const auto& v : rep.violations) UNSCOPED_INFO(v);
        CHECK(rep.ok());
        if (j <= 5) CHECK(interlacing_check(pqr_recurrence(A, B, C, j), false).ok());
    }
}

TEST_CASE("minor recurrence matches the characteristic polynomial", "[interlacing][property]") {
    std::mt19937_64 rng(77);
    for (int n = 1; n <= 15; ++n) {
        auto a = random_positive(rng, std::size_t(n));
        auto b = random_positive(rng, std::size_t(n));
        auto D = d_recurrence(a, b, n);
        // D_n(s) = det(s I + N) = char poly of -N
        CHECK(D[std::size_t(n)] == rat_charpoly(cyclic_matrix(a, b, std::size_t(n), -1)));
    }
}

TEST_CASE("minors reduce to the recurrence triples", "[interlacing][property]") {
    std::mt19937_64 rng(5);
    const int jmax = 8;
    const int n = 3 * jmax + 2;
    auto a = random_positive(rng, std::size_t(n));
    auto b = random_positive(rng, std::size_t(n));
    auto D = d_recurrence(a, b, n);
    std::vector<BigRat> A, B, C;
    for (int j = 0; j < jmax; ++j) {
        auto c = [&](int k) { return BigRat(a[std::size_t(k)] * a[std::size_t(k + 1)] * b[std::size_t(k + 2)]); };
        A.push_back(c(3 * j));
        B.push_back(c(3 * j + 1));
        C.push_back(c(3 * j + 2));
    }
    auto T = pqr_recurrence(A, B, C, jmax);
    auto cube = [](const RatPoly& p) {
        std::vector<BigRat> c(std::size_t(3 * p.degree() + 1), BigRat(0));
        for (int k = 0; k <= p.degree(); ++k) c[std::size_t(3 * k)] = p.coeff(k);
        return RatPoly(std::move(c));
    };
    const RatPoly s{0, 1};
    for (int j = 0; j <= jmax; ++j) {
        INFO("j=" << j);
        CHECK(D[std::size_t(3 * j)] == cube(T[std::size_t(j)].P));
        CHECK(D[std::size_t(3 * j + 1)] == s * cube(T[std::size_t(j)].Q));
        CHECK(D[std::size_t(3 * j + 2)] == s * s * cube(T[std::size_t(j)].R));
    }
    // the positive cyclic matrix has P with the reflected (positive) roots
    for (int j = 1; j <= jmax; ++j) {
        auto rep = cyclic3_structure_check(cyclic_matrix(a, b, std::size_t(3 * j), 1));
        CHECK(rep.ok());
        CHECK(rep.P == reflect(T[std::size_t(j)].P));
    }
}

TEST_CASE("structure check examples", "[interlacing]") {
    auto r1 = jacobi_structure_check({{BigRat(0), BigRat(1)}, {BigRat(1), BigRat(0)}});
    CHECK(r1.ok());
    CHECK(r1.charpoly == (RatPoly{-1, 0, 1}));

    RatMatrix m3 = {{BigRat(0), BigRat(2), BigRat(0)}, {BigRat(3), BigRat(0), BigRat(5)}, {BigRat(0), BigRat(7), BigRat(0)}};
    auto r3 = jacobi_structure_check(m3);
    CHECK(r3.charpoly == (RatPoly{0, -41, 0, 1}));
    CHECK(r3.k == 1);
    CHECK(r3.ok());

    RatMatrix c3 = {{BigRat(0), BigRat(1), BigRat(0)}, {BigRat(0), BigRat(0), BigRat(1)}, {BigRat(1), BigRat(0), BigRat(0)}};
    auto rc = cyclic3_structure_check(c3);
    CHECK(rc.charpoly == (RatPoly{-1, 0, 0, 1}));
    CHECK(rc.P == (RatPoly{-1, 1}));
    CHECK(rc.ok());

    RatMatrix c4(4, std::vector<BigRat>(4, BigRat(0)));
    for (std::size_t i = 0; i < 3; ++i) c4[i][i + 1] = 1;
    for (std::size_t i = 2; i < 4; ++i) c4[i][i - 2] = 1;
    auto r4 = cyclic3_structure_check(c4);
    CHECK(r4.k == 1);
    CHECK(r4.P == (RatPoly{-2, 1}));
    CHECK(r4.ok());

    CHECK_THROWS_AS(jacobi_structure_check({{BigRat(1), BigRat(1)}, {BigRat(1), BigRat(0)}}), ShapeViolation);
    CHECK_THROWS_AS(cyclic3_structure_check(m3), ShapeViolation);
}

TEST_CASE("spectral matrices have the band structure", "[interlacing]") {
    for (int m = 0; m <= 20; ++m) {
        if (!component_exists(m, Component::I)) continue;
        INFO("m=" << m);
        auto j = jacobi_structure_check(positive_band_form(component_I_matrix(m, BigRat(1), BigRat(0))));
        CHECK(j.ok());
        auto c = cyclic3_structure_check(positive_band_form(component_I_matrix(m, BigRat(0), BigRat(1))));
        CHECK(c.ok());
    }
}
