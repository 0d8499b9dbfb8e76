// Binary BCH component codes and their even-weight subcodes:
// construction, systematic encoding, and bounded-distance decoding.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pcfec/galois.hpp"

namespace pcfec {

using BitWord = std::vector<std::uint8_t>; // one bit per entry, values 0/1

// Outcome of bounded-distance decoding. On success the decoded codeword is
// the input with `flips` applied; |flips| <= t always.
struct BddResult {
    bool success = false;
    std::vector<int> flips;
};

BitWord apply_flips(const BitWord& word, const std::vector<int>& flips);

class ComponentCode {
public:
    // (2^nu - 1, k0, t) BCH code over `field`, or its (2^nu - 1, k0 - 1, t)
    // even-weight subcode. Generator = lcm of the minimal polynomials of
    // alpha^1..alpha^2t, times (x + 1) for the subcode.
    ComponentCode(const GaloisField& field, int t, bool even_weight);

    // Same code with an explicit generator polynomial (fault-injection hook
    // for the self test; no consistency check against t).
    ComponentCode(const GaloisField& field, int t, bool even_weight, Gf2Poly generator);

    const GaloisField& field() const { return field_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }
    int d_des() const { return d_des_; }
    bool even_weight() const { return even_weight_; }
    Gf2Poly generator() const { return generator_; }

    // Systematic: message occupies positions n-k..n-1, parity 0..n-k-1.
    BitWord encode(std::span<const std::uint8_t> message) const;

    // S_j = word(alpha^j) for j = 1..2t.
    std::vector<GfElem> syndromes(std::span<const std::uint8_t> word) const;

    // XOR of all bits; the extra syndrome of the even-weight subcode.
    int parity(std::span<const std::uint8_t> word) const;

    bool is_codeword(std::span<const std::uint8_t> word) const;

    // Decodes to the unique codeword within Hamming distance t when one
    // exists (Berlekamp-Massey + Chien search), otherwise reports failure.
    // Any codeword within radius t is accepted, including miscorrections;
    // for the even-weight subcode a parity check rejects odd-weight output
    // (which also happens to catch some miscorrections).
    BddResult bdd(std::span<const std::uint8_t> word) const;

private:
    void finish_construction();

    GaloisField field_;
    int n_, k_, t_, d_des_;
    bool even_weight_;
    Gf2Poly generator_ = 0;
    std::vector<std::vector<GfElem>> pow_table_; // pow_table_[j-1][i] = alpha^(i*j)
};

} // namespace pcfec
