#include <doctest.h>

#include <algorithm>
#include <random>

#include "pcfec/eaed.hpp"
#include "pcfec/rng.hpp"

using namespace pcfec;

namespace {

ComponentCode bch157() { return ComponentCode(GaloisField::with_default_poly(4), 2, false); }
ComponentCode even156() { return ComponentCode(GaloisField::with_default_poly(4), 2, true); }

BitWord random_codeword(const ComponentCode& code, std::mt19937_64& rng) {
    std::vector<std::uint8_t> msg(static_cast<std::size_t>(code.k()));
    for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 1);
    return code.encode(msg);
}

// y = c with `errors` flips and `erasures` erasures at disjoint random positions
TernaryWord corrupt(const BitWord& c, int errors, int erasures, std::mt19937_64& rng) {
    const int n = static_cast<int>(c.size());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < errors + erasures; ++i) {
        const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
        std::swap(pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)]);
    }
    TernaryWord y = to_ternary(c);
    for (int i = 0; i < errors; ++i) {
        auto& v = y[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
        v = (v == Trit::One) ? Trit::Zero : Trit::One;
    }
    for (int i = errors; i < errors + erasures; ++i)
        y[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = Trit::Erased;
    return y;
}

} // namespace

TEST_CASE("fill_erasures produces complementary fills") {
    std::mt19937_64 rng(1);
    TernaryWord y{Trit::Zero, Trit::Erased, Trit::One};
    auto [y1, y2] = fill_erasures(y, rng);
    CHECK(y1[0] == 0);
    CHECK(y2[0] == 0);
    CHECK(y1[2] == 1);
    CHECK(y2[2] == 1);
    CHECK(y1[1] != y2[1]);

    TernaryWord three{Trit::Erased, Trit::Zero, Trit::Erased, Trit::Erased};
    auto [a, b] = fill_erasures(three, rng);
    int diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i) diff += (a[i] != b[i]);
    CHECK(diff == 3); // complement exactly at the erased positions

    TernaryWord none{Trit::Zero, Trit::One};
    CHECK_THROWS_AS(fill_erasures(none, rng), NoErasures);
}

TEST_CASE("fill_erasures is deterministic per seed") {
    TernaryWord y(15, Trit::Erased);
    for (int i = 0; i < 7; ++i) y[static_cast<std::size_t>(i)] = Trit::One;
    auto g1 = make_engine(99), g2 = make_engine(99);
    auto p1 = fill_erasures(y, g1);
    auto p2 = fill_erasures(y, g2);
    CHECK(p1.first == p2.first);
    CHECK(p1.second == p2.second);
}

TEST_CASE("dh_unerased counts committed disagreements only") {
    CHECK(dh_unerased(TernaryWord(8, Trit::Erased), BitWord(8, 1)) == 0);
    TernaryWord same{Trit::Zero, Trit::One, Trit::Zero};
    CHECK(dh_unerased(same, BitWord{0, 1, 0}) == 0);
    TernaryWord y{Trit::Zero, Trit::Erased, Trit::One, Trit::Zero};
    CHECK(dh_unerased(y, BitWord{1, 1, 1, 1}) == 2);
    CHECK_THROWS_AS(dh_unerased(y, BitWord{1, 1}), LengthMismatch);
}

TEST_CASE("eaed refuses to decode at E >= d_des") {
    const ComponentCode code = bch157();
    std::mt19937_64 rng(3);
    const BitWord c = random_codeword(code, rng);
    const TernaryWord y = corrupt(c, 0, 5, rng); // d_des = 5
    auto res = eaed_decode(code, y, rng);
    CHECK(res.tag == EaedTag::NoDecode);
    CHECK_FALSE(res.changed);
}

TEST_CASE("eaed sphere guarantee: 2e + E < d_des always decodes to the codeword") {
    std::mt19937_64 rng(7);
    for (const ComponentCode& code : {bch157(), even156()}) {
        for (int e = 0; 2 * e < code.d_des(); ++e) {
            for (int er = 0; 2 * e + er < code.d_des(); ++er) {
                for (int trial = 0; trial < 1000; ++trial) {
                    const BitWord c = random_codeword(code, rng);
                    const TernaryWord y = corrupt(c, e, er, rng);
                    auto res = eaed_decode(code, y, rng);
                    REQUIRE(res.tag == EaedTag::Decoded);
                    REQUIRE(res.codeword == c);
                }
            }
        }
    }
}

TEST_CASE("eaed at the sphere boundary: success rate strictly between 0 and 1") {
    // 2 errors + 1 erasure on (15,7,2): 2e+E = 5 = d_des
    const ComponentCode code = bch157();
    std::mt19937_64 rng(13);
    int correct = 0;
    const int trials = 10000;
    for (int trial = 0; trial < trials; ++trial) {
        const BitWord c = random_codeword(code, rng);
        const TernaryWord y = corrupt(c, 2, 1, rng);
        auto res = eaed_decode(code, y, rng);
        correct += (res.tag == EaedTag::Decoded && res.codeword == c);
    }
    CHECK(correct > 0);
    CHECK(correct < trials);
}

TEST_CASE("eaed without erasures equals plain bdd") {
    const ComponentCode code = bch157();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        BitWord y(15);
        for (auto& b : y) b = static_cast<std::uint8_t>(rng() & 1);
        auto rng_before = rng;
        auto res = eaed_decode(code, to_ternary(y), rng);
        const BddResult r = code.bdd(y);
        if (r.success) {
            REQUIRE(res.tag == EaedTag::Decoded);
            CHECK(res.codeword == apply_flips(y, r.flips));
            CHECK(res.changed == !r.flips.empty());
            CHECK(res.committed_flips == r.flips);
        } else {
            CHECK(res.tag == EaedTag::BothFailed);
        }
        // the shortcut consumes no randomness
        CHECK(rng() == rng_before());
    }
}

TEST_CASE("eaed on a clean codeword reports no change") {
    const ComponentCode code = bch157();
    std::mt19937_64 rng(19);
    const BitWord c = random_codeword(code, rng);
    auto res = eaed_decode(code, to_ternary(c), rng);
    CHECK(res.tag == EaedTag::Decoded);
    CHECK_FALSE(res.changed);
    CHECK(res.codeword == c);
}

TEST_CASE("eaed output discipline: decoded words are erasure-free codewords") {
    const ComponentCode code = even156();
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 5000; ++trial) {
        TernaryWord y(15);
        for (auto& v : y) {
            const auto r = rng() % 4;
            v = r == 3 ? Trit::Erased : (r == 1 ? Trit::One : Trit::Zero);
        }
        auto res = eaed_decode(code, y, rng);
        if (res.tag != EaedTag::Decoded) continue;
        CHECK(code.is_codeword(res.codeword));
        for (int p : res.committed_flips) CHECK(y[static_cast<std::size_t>(p)] != Trit::Erased);
    }
}

TEST_CASE("eaed decoding is deterministic per seed, including tie-breaks") {
    const ComponentCode code = bch157();
    std::mt19937_64 setup(29);
    for (int trial = 0; trial < 500; ++trial) {
        const BitWord c = random_codeword(code, setup);
        const TernaryWord y = corrupt(c, 2, 2, setup);
        auto g1 = make_engine(1000 + trial), g2 = make_engine(1000 + trial);
        auto r1 = eaed_decode(code, y, g1);
        auto r2 = eaed_decode(code, y, g2);
        CHECK(r1.tag == r2.tag);
        CHECK(r1.codeword == r2.codeword);
        CHECK(r1.committed_flips == r2.committed_flips);
    }
}
