#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ybx/errors.hpp"
#include "ybx/moebius.hpp"
#include "ybx/polymatrix.hpp"
#include "ybx/rng.hpp"
#include "ybx/sampler.hpp"
#include "ybx/subspace.hpp"

using namespace ybx;

namespace {

// independent determinant oracle: cofactor expansion along the first row
Poly det_cofactor(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Poly acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Poly term = m.at(rows[0], cols[k]) * det_cofactor(m, sub_rows, sub_cols);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

Poly det_cofactor(const PolyMatrix& m) {
    std::vector<int> idx(m.size());
    for (int i = 0; i < m.size(); ++i) idx[i] = i;
    return det_cofactor(m, idx, idx);
}

QMatrix random_invertible(SplitMix64& rng, int n) {
    while (true) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = sample_rat(rng);
        if (m.det() != 0) return m;
    }
}

} // namespace

TEST_CASE("rational parse and serialize") {
    CHECK(rat_str(rat(3, 6)) == "1/2");
    CHECK(rat_str(rat(-4, 2)) == "-2");
    CHECK(rat_parse("7/21") == rat(1, 3));
    CHECK(rat_parse("-5") == rat(-5));
    CHECK(rat_parse("4/-6") == rat(-2, 3));
    CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
    CHECK_THROWS_AS(rat_parse("abc"), ParseError);
    CHECK_THROWS_AS(rat(1, 0), ParseError);
}

TEST_CASE("moebius on projective points") {
    ProjectivePoint z(3, 1);
    CHECK(moebius_apply(Moebius::identity(), z) == z);
    CHECK(moebius_apply(Moebius::inversion(), ProjectivePoint(2, 1)) == ProjectivePoint(1, 2));
    // translation fixes the point at infinity
    Moebius shift(1, 1, 0, 1);
    CHECK(moebius_apply(shift, ProjectivePoint::infinity()) == ProjectivePoint::infinity());
    CHECK_THROWS_AS(Moebius(1, 2, 2, 4), Error);
}

TEST_CASE("moebius composition is associative, inverse round-trips") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        auto rnd = [&rng]() -> Moebius {
            while (true) {
                Rat a = sample_rat(rng), b = sample_rat(rng), c = sample_rat(rng),
                    d = sample_rat(rng);
                if (a * d - b * c != 0) return {a, b, c, d};
            }
        };
        Moebius m1 = rnd(), m2 = rnd(), m3 = rnd();
        ProjectivePoint z(sample_rat(rng), 1);
        CHECK(((m1 * m2) * m3)(z) == (m1 * (m2 * m3))(z));
        CHECK(m1(m1.inverse()(z)) == z);
        CHECK(m1.inverse()(m1(z)) == z);
        CHECK((m1 * m1.inverse()).is_identity()); // projectively the identity
    }
}

TEST_CASE("projector from a complementary pair") {
    Subspace k = Subspace::span({Vec{0, 1}}, 2);
    Subspace l = Subspace::span({Vec{1, 0}}, 2);
    QMatrix p = projector_from_pair(k, l);
    CHECK(p == QMatrix{{1, 0}, {0, 0}});

    Subspace k2 = Subspace::span({Vec{1, -1}}, 2);
    Subspace l2 = Subspace::span({Vec{1, 1}}, 2);
    QMatrix half = projector_from_pair(k2, l2);
    CHECK(half == QMatrix{{rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)}});

    CHECK_THROWS_AS(projector_from_pair(l, l), ComplementarityViolation);
}

TEST_CASE("image and kernel of an idempotent") {
    auto [l, k] = image_kernel(QMatrix{{1, 0}, {0, 0}});
    CHECK(l == Subspace::span({Vec{1, 0}}, 2));
    CHECK(k == Subspace::span({Vec{0, 1}}, 2));

    auto [l2, k2] = image_kernel(QMatrix{{rat(1, 2), rat(1, 2)}, {rat(1, 2), rat(1, 2)}});
    CHECK(l2 == Subspace::span({Vec{1, 1}}, 2));
    CHECK(k2 == Subspace::span({Vec{1, -1}}, 2));

    CHECK_THROWS_AS(image_kernel(QMatrix{{1, 1}, {0, 1}}), NotAProjector);
}

TEST_CASE("projector properties on random complementary pairs") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int dim = 2 + static_cast<int>(rng.next() % 3); // 2..4
        int rank = 1 + static_cast<int>(rng.next() % (dim - 1));
        ProjectorPair pair = sample_projector_pair(rng, dim, rank);
        QMatrix p = projector_from_pair(pair.kernel, pair.image);
        CHECK(p * p == p);
        // identity on L, zero on K
        CHECK(p * pair.image.basis() == pair.image.basis());
        CHECK((p * pair.kernel.basis()).is_zero());
        auto [l, k] = image_kernel(p);
        CHECK(l == pair.image);
        CHECK(k == pair.kernel);
    }
}

TEST_CASE("subspace canonical form survives invertible column mixing") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int dim = 3 + static_cast<int>(rng.next() % 2);
        int k = 1 + static_cast<int>(rng.next() % (dim - 1));
        QMatrix cols(dim, k);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < k; ++j) cols.at(i, j) = sample_rat(rng);
        Subspace s = Subspace::span(cols);
        if (s.dim() != k) continue;
        QMatrix mix = random_invertible(rng, k);
        CHECK(Subspace::span(cols * mix) == s);
    }
}

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 3);
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = sample_rat(rng);
        CHECK(m.det() == det_cofactor(PolyMatrix::constant(m)).coeff(0));
        if (m.det() != 0) CHECK(m * m.inverse() == QMatrix::identity(n));
    }
}

TEST_CASE("char_poly of the scalar matrix zeta I") {
    PolyMatrix m = PolyMatrix::scalar(2, Poly::var());
    auto c = char_poly(m);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Poly::var() * Poly::var()); // zeta^2
    CHECK(c[1] == Poly::monomial(-2, 1));     // -2 zeta
    CHECK(c[2] == Poly(1));
}

TEST_CASE("char_poly evaluated matches cofactor oracle at a random point") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 2 + static_cast<int>(rng.next() % 3); // 2..4
        PolyMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m.at(i, j) = Poly(sample_rat(rng)) + Poly::monomial(sample_rat(rng), 1);
        Rat zeta0 = sample_rat(rng);
        // det(M(zeta0) - eta I) by cofactor expansion over Q[eta]
        PolyMatrix shifted = PolyMatrix::constant(m.eval(zeta0)) - PolyMatrix::scalar(n, Poly::var());
        Poly oracle = det_cofactor(shifted);
        auto c = char_poly(m);
        for (int k = 0; k <= n; ++k) CHECK(c[k].eval(zeta0) == oracle.coeff(k));
    }
}

TEST_CASE("matrix proportionality by cross-multiplication") {
    QMatrix a{{1, 2}, {0, 4}};
    CHECK(proportional(a.scaled(rat(-3, 7)), a));
    CHECK(proportional(a, a));
    CHECK_FALSE(proportional(a, QMatrix{{1, 2}, {1, 4}}));
    CHECK_FALSE(proportional(a, QMatrix(2, 2))); // zero target, nonzero source
    CHECK(proportional(QMatrix(2, 2), QMatrix(2, 2)));
}

TEST_CASE("poly string forms") {
    Poly p = Poly::monomial(1, 2) + Poly::monomial(rat(-3, 2), 1) + Poly(1);
    CHECK(p.str() == "z^2 - 3/2*z + 1");
    CHECK(Poly().str() == "0");
}
