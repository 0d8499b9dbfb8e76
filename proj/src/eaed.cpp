#include "pcfec/eaed.hpp"

#include <cassert>
#include <string>

#include "pcfec/rng.hpp"

namespace pcfec {

int erasure_count(const TernaryWord& y) {
    int e = 0;
    for (Trit v : y) e += (v == Trit::Erased);
    return e;
}

TernaryWord to_ternary(const BitWord& bits) {
    TernaryWord y(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) y[i] = bits[i] ? Trit::One : Trit::Zero;
    return y;
}

BitWord hard_bits(const TernaryWord& y) {
    BitWord w(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        assert(y[i] != Trit::Erased);
        w[i] = (y[i] == Trit::One) ? 1 : 0;
    }
    return w;
}

std::pair<BitWord, BitWord> fill_erasures(const TernaryWord& y, std::mt19937_64& rng) {
    if (erasure_count(y) == 0) throw NoErasures("fill_erasures on a word without erasures");
    BitWord y1(y.size()), y2(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == Trit::Erased) {
            const int b = draw_bit(rng);
            y1[i] = static_cast<std::uint8_t>(b);
            y2[i] = static_cast<std::uint8_t>(b ^ 1);
        } else {
            y1[i] = y2[i] = (y[i] == Trit::One) ? 1 : 0;
        }
    }
    return {std::move(y1), std::move(y2)};
}

int dh_unerased(const TernaryWord& y, const BitWord& c) {
    if (y.size() != c.size())
        throw LengthMismatch("ternary word length " + std::to_string(y.size()) +
                             " vs codeword length " + std::to_string(c.size()));
    int d = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == Trit::Erased) continue;
        d += (static_cast<std::uint8_t>(y[i] == Trit::One) != c[i]);
    }
    return d;
}

namespace {

// Restriction of a flip set to the unerased coordinates of y. Fills only
// touch erased positions, so these are exactly the committed disagreements.
std::vector<int> committed_flips_of(const TernaryWord& y, const std::vector<int>& flips) {
    std::vector<int> out;
    out.reserve(flips.size());
    for (int p : flips)
        if (y[static_cast<std::size_t>(p)] != Trit::Erased) out.push_back(p);
    return out;
}

} // namespace

EaedResult eaed_decode(const ComponentCode& code, const TernaryWord& y, std::mt19937_64& rng) {
    const int e_count = erasure_count(y);
    if (e_count >= code.d_des()) return {EaedTag::NoDecode, false, {}, {}};

    if (e_count == 0) {
        // Both fills would coincide; a single conventional BDD is exact.
        BitWord w = hard_bits(y);
        BddResult r = code.bdd(w);
        if (!r.success) return {EaedTag::BothFailed, false, {}, {}};
        EaedResult res;
        res.tag = EaedTag::Decoded;
        res.changed = !r.flips.empty();
        res.committed_flips = r.flips;
        res.codeword = apply_flips(w, r.flips);
        return res;
    }

    auto [y1, y2] = fill_erasures(y, rng);
    BddResult r1 = code.bdd(y1);
    BddResult r2 = code.bdd(y2);
    if (!r1.success && !r2.success) return {EaedTag::BothFailed, false, {}, {}};

    bool pick_first;
    if (r1.success != r2.success) {
        pick_first = r1.success;
    } else {
        // d_i counts flips at committed positions: the fills already agree
        // with y everywhere unerased.
        const int d1 = static_cast<int>(committed_flips_of(y, r1.flips).size());
        const int d2 = static_cast<int>(committed_flips_of(y, r2.flips).size());
        if (d1 != d2)
            pick_first = d1 < d2;
        else
            pick_first = draw_bit(rng) == 0;
    }

    const BitWord& base = pick_first ? y1 : y2;
    const BddResult& sel = pick_first ? r1 : r2;
    EaedResult res;
    res.tag = EaedTag::Decoded;
    res.changed = true; // at least the erasures were resolved
    res.codeword = apply_flips(base, sel.flips);
    res.committed_flips = committed_flips_of(y, sel.flips);
    assert(code.is_codeword(res.codeword));
    return res;
}

} // namespace pcfec
