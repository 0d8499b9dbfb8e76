#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pcfec/bch.hpp"

using namespace pcfec;

namespace {

GaloisField f16() { return GaloisField::with_default_poly(4); }

BitWord random_codeword(const ComponentCode& code, std::mt19937_64& rng) {
    std::vector<std::uint8_t> msg(static_cast<std::size_t>(code.k()));
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 1);
    return code.encode(msg);
}

} // namespace

TEST_CASE("construction: (15,7,2) generator from the minimal polynomials") {
    ComponentCode code(f16(), 2, false);
    CHECK(code.generator() == 0x1D1); // x^8+x^7+x^6+x^4+1 = lcm(m1, m3)
    CHECK(code.n() == 15);
    CHECK(code.k() == 7);
    CHECK(code.d_des() == 5);
}

TEST_CASE("construction: even-weight subcodes match the published dimensions") {
    ComponentCode c1(GaloisField::with_default_poly(7), 2, true);
    CHECK(c1.n() == 127);
    CHECK(c1.k() == 112);
    CHECK(c1.d_des() == 6);

    ComponentCode c2(GaloisField::with_default_poly(8), 2, true);
    CHECK(c2.n() == 255);
    CHECK(c2.k() == 238);

    // plain BCH dimension check: (127, 113, 2)
    ComponentCode plain(GaloisField::with_default_poly(7), 2, false);
    CHECK(plain.k() == 113);

    // the (511, ., t) dimensions come from the construction itself
    ComponentCode c511(GaloisField::with_default_poly(9), 3, true);
    CHECK(c511.n() == 511);
    CHECK(c511.k() == 511 - 27 - 1);
}

TEST_CASE("construction rejects unusable parameters") {
    CHECK_THROWS_AS(ComponentCode(f16(), 0, false), UnsupportedParameters);
    CHECK_THROWS_AS(ComponentCode(f16(), 8, false), UnsupportedParameters);
}

TEST_CASE("encode: systematic, linear, generator-consistent") {
    ComponentCode code(f16(), 2, false);

    const BitWord zero = code.encode(std::vector<std::uint8_t>(7, 0));
    CHECK(std::all_of(zero.begin(), zero.end(), [](auto b) { return b == 0; }));

    // unit message at position 0 encodes to the generator's coefficients
    std::vector<std::uint8_t> unit(7, 0);
    unit[0] = 1;
    const BitWord cw = code.encode(unit);
    for (int i = 0; i < 15; ++i) CHECK(cw[static_cast<std::size_t>(i)] == ((code.generator() >> i) & 1));

    CHECK_THROWS_AS(code.encode(std::vector<std::uint8_t>(6, 0)), LengthMismatch);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const BitWord c = random_codeword(code, rng);
        const auto s = code.syndromes(c);
        CHECK(std::all_of(s.begin(), s.end(), [](GfElem v) { return v == 0; }));
        CHECK(code.is_codeword(c));
    }
}

TEST_CASE("syndromes of a single flip are alpha^{ij}") {
    ComponentCode code(f16(), 2, false);
    const GaloisField& f = code.field();
    std::mt19937_64 rng(5);
    const BitWord c = random_codeword(code, rng);
    for (int i = 0; i < code.n(); ++i) {
        BitWord y = c;
        y[static_cast<std::size_t>(i)] ^= 1;
        const auto s = code.syndromes(y);
        for (int j = 1; j <= 4; ++j)
            CHECK(s[static_cast<std::size_t>(j - 1)] == f.exp(static_cast<long long>(i) * j));
        CHECK_FALSE(code.is_codeword(y)); // d_min > 1
    }
}

TEST_CASE("even-weight subcode: parity syndrome and encoder output") {
    ComponentCode code(f16(), 2, true);
    CHECK(code.k() == 6);
    CHECK(poly_mod(code.generator(), 0b11) == 0); // (x+1) divides the generator

    std::mt19937_64 rng(17);
    for (int i = 0; i < 10000; ++i) {
        const BitWord c = random_codeword(code, rng);
        int weight = 0;
        for (auto b : c) weight += b;
        CHECK(weight % 2 == 0);
    }

    BitWord odd(15, 0);
    odd[3] = 1;
    CHECK(code.parity(odd) == 1);
    CHECK_FALSE(code.is_codeword(odd));
}

TEST_CASE("bdd corrects every pattern of weight <= t on (15,7,2)") {
    ComponentCode code(f16(), 2, false);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const BitWord c = random_codeword(code, rng);
        CHECK(code.bdd(c).success);
        CHECK(code.bdd(c).flips.empty());
        for (int i = 0; i < 15; ++i) {
            for (int j = i; j < 15; ++j) {
                BitWord y = c;
                y[static_cast<std::size_t>(i)] ^= 1;
                if (j != i) y[static_cast<std::size_t>(j)] ^= 1;
                const BddResult r = code.bdd(y);
                REQUIRE(r.success);
                CHECK(apply_flips(y, r.flips) == c);
            }
        }
    }
}

TEST_CASE("bdd on weight-3 patterns: both miscorrections and failures occur") {
    ComponentCode code(f16(), 2, false);
    std::mt19937_64 rng(29);
    const BitWord c = random_codeword(code, rng);
    int miscorrections = 0, failures = 0;
    for (int a = 0; a < 15; ++a)
        for (int b = a + 1; b < 15; ++b)
            for (int d = b + 1; d < 15; ++d) {
                BitWord y = c;
                y[static_cast<std::size_t>(a)] ^= 1;
                y[static_cast<std::size_t>(b)] ^= 1;
                y[static_cast<std::size_t>(d)] ^= 1;
                const BddResult r = code.bdd(y);
                if (!r.success) {
                    ++failures;
                    continue;
                }
                const BitWord w = apply_flips(y, r.flips);
                CHECK(w != c); // cannot return to the transmitted word from distance 3
                CHECK(code.is_codeword(w));
                CHECK(static_cast<int>(r.flips.size()) <= 2);
                ++miscorrections;
            }
    CHECK(miscorrections > 0);
    CHECK(failures > 0);
}

TEST_CASE("bdd success output is always a codeword within distance t") {
    // random words, including far-from-code ones
    for (bool even : {false, true}) {
        ComponentCode code(f16(), 2, even);
        std::mt19937_64 rng(31);
        int successes = 0;
        for (int trial = 0; trial < 20000; ++trial) {
            BitWord y(15);
            for (auto& b : y) b = static_cast<std::uint8_t>(rng() & 1);
            const BddResult r = code.bdd(y);
            if (!r.success) continue;
            ++successes;
            REQUIRE(static_cast<int>(r.flips.size()) <= code.t());
            CHECK(code.is_codeword(apply_flips(y, r.flips)));
        }
        CHECK(successes > 0);
    }
}

TEST_CASE("bdd on the even-weight subcode corrects within t and respects parity") {
    ComponentCode code(f16(), 2, true);
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        const BitWord c = random_codeword(code, rng);
        for (int i = 0; i < 15; ++i)
            for (int j = i; j < 15; ++j) {
                BitWord y = c;
                y[static_cast<std::size_t>(i)] ^= 1;
                if (j != i) y[static_cast<std::size_t>(j)] ^= 1;
                const BddResult r = code.bdd(y);
                REQUIRE(r.success);
                CHECK(apply_flips(y, r.flips) == c);
            }
    }
}

TEST_CASE("bdd handles larger fields and radii") {
    // spot checks on (127,113,2), (127,106,3), (255,239,2)
    std::mt19937_64 rng(41);
    for (auto [nu, t] : {std::pair{7, 2}, {7, 3}, {8, 2}}) {
        ComponentCode code(GaloisField::with_default_poly(nu), t, false);
        for (int trial = 0; trial < 30; ++trial) {
            const BitWord c = random_codeword(code, rng);
            BitWord y = c;
            std::set<int> pos;
            while (static_cast<int>(pos.size()) < t)
                pos.insert(static_cast<int>(rng() % static_cast<std::uint64_t>(code.n())));
            for (int p : pos) y[static_cast<std::size_t>(p)] ^= 1;
            const BddResult r = code.bdd(y);
            REQUIRE(r.success);
            CHECK(apply_flips(y, r.flips) == c);
        }
    }
}
