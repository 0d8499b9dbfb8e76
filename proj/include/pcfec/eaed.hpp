// Error-and-erasure decoding of a component code: complementary random
// erasure fills, two BDD attempts, and distance-based arbitration.
#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "pcfec/bch.hpp"

namespace pcfec {

enum class Trit : std::uint8_t { Zero = 0, One = 1, Erased = 2 };

using TernaryWord = std::vector<Trit>;

int erasure_count(const TernaryWord& y);

TernaryWord to_ternary(const BitWord& bits);

// Requires an erasure-free word.
BitWord hard_bits(const TernaryWord& y);

// Fills the erased positions with a uniform random vector and its bitwise
// complement; the two outputs agree with y everywhere else and differ at
// every erased position. Throws NoErasures when the word has none.
std::pair<BitWord, BitWord> fill_erasures(const TernaryWord& y, std::mt19937_64& rng);

// Hamming distance restricted to the unerased coordinates of y.
int dh_unerased(const TernaryWord& y, const BitWord& c);

enum class EaedTag { Decoded, NoDecode, BothFailed };

// On Decoded, `codeword` is erasure-free and a member of the code;
// otherwise the caller keeps the input word unchanged. `committed_flips`
// lists the unerased positions of the input that the codeword changes
// (erasure resolutions are not flips). `changed` is true iff the decoded
// word differs from the input as a ternary word.
struct EaedResult {
    EaedTag tag = EaedTag::BothFailed;
    bool changed = false;
    BitWord codeword;
    std::vector<int> committed_flips;
};

// Full decoding procedure: no decode when E(y) >= d_des, plain BDD when the
// word has no erasures, otherwise two complementary fills, two BDD steps,
// arbitration by validity then by distance at the unerased coordinates,
// with a random tie-break drawn from the same stream as the fill.
EaedResult eaed_decode(const ComponentCode& code, const TernaryWord& y, std::mt19937_64& rng);

} // namespace pcfec
