#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <superchain/verify.hpp>

using namespace superchain;

TEST_CASE("naive rank on small matrices") {
    CHECK(oracle::naive_rank({{oracle::DenseScalar(2)}}) == 1);

    oracle::DenseMatrix id(4, std::vector<oracle::DenseScalar>(4));
    for (size_t i = 0; i < 4; ++i) id[i][i] = 1;
    CHECK(oracle::naive_rank(id) == 4);

    const ComplexSlice slice = make_slice(1, 2, -2);
    CHECK(oracle::naive_rank(oracle::to_dense(boundary_matrix(slice, 3))) == 1);

    CHECK(oracle::naive_rank({}) == 0);
    CHECK(oracle::naive_rank({{oracle::DenseScalar(0), oracle::DenseScalar(0)}}) == 0);
}

TEST_CASE("naive rank agrees with the engine on assembled matrices") {
    for (int w = 0; w <= 6; ++w) {
        const ComplexSlice slice = make_slice(1, w, -w);
        if (slice.range.empty) continue;
        for (int m = slice.range.lo; m <= slice.range.hi; ++m) {
            const ExactMatrix mat = boundary_matrix(slice, m);
            REQUIRE(rank(mat) == oracle::naive_rank(oracle::to_dense(mat)));
        }
    }
}

TEST_CASE("generate-and-filter enumeration") {
    const auto cell = oracle::naive_enumerate(1, 2, -2, 2, 4);
    const ChainBasis fast = enumerate_basis(1, 2, -2, 2);
    CHECK(cell == std::set<WedgeWord>(fast.words.begin(), fast.words.end()));

    const auto single = oracle::naive_enumerate(1, 0, 0, 1, 4);
    REQUIRE(single.size() == 1);
    CHECK(*single.begin() == WedgeWord{{vf1(1)}});

    CHECK(oracle::naive_enumerate(1, 5, -5, 10, 8).empty());
    CHECK_THROWS_AS(oracle::naive_enumerate(1, 2, 2, 3, 4), std::invalid_argument);
}

TEST_CASE("explicit Koszul sign") {
    CHECK(oracle::koszul_sign({0, 1, 2}, {0, 0, 0}) == 1);
    CHECK(oracle::koszul_sign({1, 0}, {0, 0}) == -1);
    CHECK(oracle::koszul_sign({1, 0}, {1, 1}) == 1);
    CHECK(oracle::koszul_sign({1, 0}, {0, 1}) == -1);
    // a 3-cycle of even generators is two transpositions
    CHECK(oracle::koszul_sign({1, 2, 0}, {0, 0, 0}) == 1);
}

TEST_CASE("canonicalize sign matches the inversion-count oracle") {
    std::mt19937 rng(877);
    const auto pool = detail::generator_pool(1, 3);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> len(2, 6);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<Generator> factors;
        for (int i = len(rng); i > 0; --i) factors.push_back(pool[pick(rng)]);
        const auto [word, sign] = canonicalize(factors);
        (void)word;
        if (sign == 0) continue;
        std::vector<int> perm(factors.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
            return factors[static_cast<size_t>(a)] < factors[static_cast<size_t>(b)];
        });
        std::vector<int> parities;
        for (const auto& g : factors) parities.push_back(g.parity());
        REQUIRE(sign == oracle::koszul_sign(perm, parities));
    }
}

TEST_CASE("full oracle cross-validation report") {
    const VerificationReport rep = verify_oracle();
    INFO((rep.counterexample ? rep.counterexample->word : std::string()));
    CHECK(rep.pass);
}
