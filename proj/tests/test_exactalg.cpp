#include <doctest.h>

#include <random>

#include "grl/chain_complex.hpp"
#include "grl/exact_matrix.hpp"
#include "grl/integer_matrix.hpp"
#include "oracles.hpp"

using namespace grl;

namespace {

IntegerMatrix int_mat(std::size_t r, std::size_t c, std::vector<long> vals) {
    std::vector<Int> e(vals.begin(), vals.end());
    return IntegerMatrix(r, c, std::move(e));
}

ExactMatrix q_mat(std::size_t r, std::size_t c, std::vector<long> vals) {
    std::vector<Rat> e(vals.begin(), vals.end());
    return ExactMatrix(Field::rationals(), r, c, std::move(e));
}

bool divisibility_chain_holds(const IntegerMatrix& d) {
    Int prev = 0;
    bool seen_zero = false;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) {
        Int cur = d.at(i, i);
        if (cur < 0) return false;
        if (cur == 0) {
            seen_zero = true;
            continue;
        }
        if (seen_zero) return false;  // nonzero after a zero slot
        if (prev != 0 && cur % prev != 0) return false;
        prev = cur;
    }
    return true;
}

bool is_diagonal(const IntegerMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0) return false;
    return true;
}

} // namespace

TEST_CASE("scalar normalization") {
    ExactScalar half(Field::rationals(), Rat(Int(2), Int(4)));
    CHECK(rat_num(half.value()) == 1);
    CHECK(rat_den(half.value()) == 2);

    ExactScalar seven(Field::fp(2), Rat(7));
    CHECK(seven.value() == 1);
    ExactScalar neg(Field::fp(5), Rat(-3));
    CHECK(neg.value() == 2);
    // denominators invert mod p
    ExactScalar frac(Field::fp(5), Rat(Int(3), Int(2)));
    CHECK(frac.value() == 4);

    CHECK_THROWS_AS(ExactScalar(Field::fp(2), Rat(Int(1), Int(2))), BadInput);
    CHECK_THROWS_AS(Field::fp(4), BadInput);
}

TEST_CASE("rank examples") {
    CHECK(rank(ExactMatrix::zero(Field::rationals(), 3, 3)) == 0);
    CHECK(rank(ExactMatrix::identity(Field::rationals(), 3)) == 3);
    CHECK(rank(q_mat(2, 2, {1, 2, 2, 4})) == 1);
    // same matrix, independent minor oracle
    CHECK(oracle::rank_by_minors(int_mat(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("rank over prime fields differs from Q when p divides entries") {
    ExactMatrix m(Field::fp(2), 2, 2, {Rat(2), Rat(0), Rat(0), Rat(1)});
    CHECK(rank(m) == 1);
    ExactMatrix mq(Field::rationals(), 2, 2, {Rat(2), Rat(0), Rat(0), Rat(1)});
    CHECK(rank(mq) == 2);
}

TEST_CASE("rank_of_composite") {
    std::vector<ExactMatrix> ids = {ExactMatrix::identity(Field::rationals(), 2),
                                    ExactMatrix::identity(Field::rationals(), 2)};
    CHECK(rank_of_composite(ids) == 2);

    std::vector<ExactMatrix> through_zero = {q_mat(2, 2, {1, 2, 3, 4}),
                                             ExactMatrix::zero(Field::rationals(), 2, 2)};
    CHECK(rank_of_composite(through_zero) == 0);

    // dim 2 -> 1 -> 2; product has rank 1
    std::vector<ExactMatrix> pair = {q_mat(1, 2, {1, 0}), q_mat(2, 1, {1, 1})};
    CHECK(rank_of_composite(pair) == 1);

    std::vector<ExactMatrix> bad = {q_mat(1, 2, {1, 0}), q_mat(3, 2, {1, 1, 0, 0, 1, 1})};
    CHECK_THROWS_AS(rank_of_composite(bad), DimensionMismatch);
}

TEST_CASE("kernel/image/solve basics") {
    ExactMatrix m = q_mat(2, 3, {1, 0, 1, 0, 1, 1});
    ExactMatrix k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());
    ExactMatrix im = image_basis(m);
    CHECK(im.cols() == 2);

    auto x = solve(m, q_mat(2, 1, {3, 5}));
    REQUIRE(x.has_value());
    CHECK(m * *x == q_mat(2, 1, {3, 5}));

    // inconsistent system
    ExactMatrix singular = q_mat(2, 1, {1, 1});
    CHECK_FALSE(solve(singular, q_mat(2, 1, {1, 2})).has_value());
}

TEST_CASE("smith normal form examples") {
    SUBCASE("diag(2,3) -> diag(1,6)") {
        IntegerMatrix m = int_mat(2, 2, {2, 0, 0, 3});
        auto snf = smith_normal_form(m);
        CHECK(snf.d.at(0, 0) == 1);
        CHECK(snf.d.at(1, 1) == 6);
        CHECK(snf.u * m * snf.v == snf.d);
        // oracle: gcd of 1x1 minors = 1, 2x2 determinant = 6
        auto factors = oracle::invariant_factors_by_minors(m);
        REQUIRE(factors.size() == 2);
        CHECK(factors[0] == 1);
        CHECK(factors[1] == 6);
    }
    SUBCASE("zero matrix") {
        IntegerMatrix m(3, 2);
        auto snf = smith_normal_form(m);
        CHECK(snf.d.is_zero());
        CHECK(snf.u * m * snf.v == snf.d);
    }
    SUBCASE("[[2,4],[6,8]] -> diag(2,4)") {
        IntegerMatrix m = int_mat(2, 2, {2, 4, 6, 8});
        auto snf = smith_normal_form(m);
        CHECK(snf.d.at(0, 0) == 2);
        CHECK(snf.d.at(1, 1) == 4);
        auto factors = oracle::invariant_factors_by_minors(m);
        REQUIRE(factors.size() == 2);
        CHECK(factors[0] == 2);
        CHECK(factors[1] == 4);
    }
}

TEST_CASE("smith normal form properties on 500 random matrices") {
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    for (int trial = 0; trial < 500; ++trial) {
        IntegerMatrix m = oracle::random_integer_matrix(rng, dim(rng), dim(rng));
        auto snf = smith_normal_form(m);
        REQUIRE(snf.u * m * snf.v == snf.d);
        REQUIRE(is_diagonal(snf.d));
        REQUIRE(divisibility_chain_holds(snf.d));
        Int du = determinant(snf.u);
        Int dv = determinant(snf.v);
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));
    }
}

TEST_CASE("smith diagonal agrees with minor-gcd oracle on small matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        IntegerMatrix m = oracle::random_integer_matrix(rng, dim(rng), dim(rng), -6, 6);
        CHECK(invariant_factors(m) == oracle::invariant_factors_by_minors(m));
    }
}

TEST_CASE("rank of product bounded by factor ranks") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        Field f = trial % 2 == 0 ? Field::rationals() : Field::fp(2);
        std::size_t a = dim(rng), b = dim(rng), c = dim(rng);
        ExactMatrix m1 = oracle::random_exact_matrix(rng, f, a, b);
        ExactMatrix m2 = oracle::random_exact_matrix(rng, f, b, c);
        CHECK(rank(m1 * m2) <= std::min(rank(m1), rank(m2)));
    }
}

TEST_CASE("homology examples") {
    SUBCASE("sphere pattern without differentials") {
        std::vector<std::size_t> ranks = {1, 0, 0, 0, 0, 0, 1};
        std::vector<IntegerMatrix> d;
        d.emplace_back(0, 1);
        for (int i = 1; i <= 5; ++i) d.emplace_back(ranks[i - 1], ranks[i]);
        d.emplace_back(0, 1);
        ChainComplex c(ranks, d);
        auto h = homology(c);
        CHECK(h.at(0).betti == 1);
        CHECK(h.at(6).betti == 1);
        for (int i = 1; i <= 5; ++i) {
            CHECK(h.at(i).betti == 0);
            CHECK(h.at(i).torsion.empty());
        }
    }
    SUBCASE("Z -(x2)-> Z") {
        ChainComplex c({1, 1}, {IntegerMatrix(0, 1), int_mat(1, 1, {2})});
        auto h = homology(c);
        CHECK(h.at(0).betti == 0);
        REQUIRE(h.at(0).torsion.size() == 1);
        CHECK(h.at(0).torsion[0] == 2);
        CHECK(h.at(1).betti == 0);
        CHECK(h.at(1).torsion.empty());
    }
    SUBCASE("single 0-cell") {
        auto h = homology(ChainComplex::point());
        CHECK(h.at(0).betti == 1);
        CHECK(h.is_acyclic());
    }
    SUBCASE("d.d != 0 rejected") {
        CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {IntegerMatrix(0, 1), int_mat(1, 1, {1}),
                                                 int_mat(1, 1, {1})}),
                        InvalidComplex);
    }
}

TEST_CASE("homology agrees with minor oracle on random complexes") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        // d_{i+1} = (kernel basis of d_i) * random keeps d.d = 0 by construction.
        std::size_t r0 = dim(rng), r1 = dim(rng);
        IntegerMatrix d1 = oracle::random_integer_matrix(rng, r0, r1, -3, 3);
        IntegerMatrix k1 = integer_kernel_basis(d1);
        std::size_t r2 = dim(rng);
        IntegerMatrix rnd(k1.cols(), r2);
        for (std::size_t i = 0; i < rnd.rows(); ++i)
            for (std::size_t j = 0; j < r2; ++j) rnd.at(i, j) = entry(rng);
        IntegerMatrix d2 = k1 * rnd;
        ChainComplex c({r0, r1, r2}, {IntegerMatrix(0, r0), d1, d2});

        auto h = homology(c);
        // betti from minor ranks, torsion from minor gcd quotients
        std::size_t rank_d1 = oracle::rank_by_minors(d1);
        std::size_t rank_d2 = oracle::rank_by_minors(d2);
        CHECK(h.at(0).betti == r0 - rank_d1);
        CHECK(h.at(1).betti == r1 - rank_d1 - rank_d2);
        CHECK(h.at(2).betti == r2 - rank_d2);
        auto t1 = oracle::invariant_factors_by_minors(d1);
        std::vector<Int> t1_nontrivial;
        for (auto& f : t1)
            if (f > 1) t1_nontrivial.push_back(f);
        CHECK(h.at(0).torsion == t1_nontrivial);
        auto t2 = oracle::invariant_factors_by_minors(d2);
        std::vector<Int> t2_nontrivial;
        for (auto& f : t2)
            if (f > 1) t2_nontrivial.push_back(f);
        CHECK(h.at(1).torsion == t2_nontrivial);
    }
}
