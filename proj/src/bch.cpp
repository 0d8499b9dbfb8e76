#include "pcfec/bch.hpp"

#include <algorithm>
#include <string>

namespace pcfec {

namespace {

// Product of polynomials over GF(2^nu), coefficient vectors.
std::vector<GfElem> field_poly_mul(const GaloisField& f, const std::vector<GfElem>& a,
                                   const std::vector<GfElem>& b) {
    std::vector<GfElem> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<GfElem>(r[i + j] ^ f.mul(a[i], b[j]));
    }
    return r;
}

// lcm of the minimal polynomials of alpha^1..alpha^2t, via cyclotomic cosets.
Gf2Poly bch_generator(const GaloisField& f, int t) {
    const int ord = f.order();
    std::vector<char> covered(ord, 0);
    std::vector<GfElem> g{1};
    for (int i = 1; i <= 2 * t; ++i) {
        if (covered[i]) continue;
        std::vector<GfElem> mi{1};
        int s = i;
        do {
            covered[s] = 1;
            // multiply by (x + alpha^s)
            mi = field_poly_mul(f, mi, {f.exp(s), 1});
            s = (2 * s) % ord;
        } while (s != i);
        g = field_poly_mul(f, g, mi);
    }
    Gf2Poly bits = 0;
    for (std::size_t d = 0; d < g.size(); ++d) {
        if (g[d] > 1)
            throw UnsupportedParameters("generator coefficient outside GF(2)");
        if (d > 63)
            throw UnsupportedParameters("generator degree exceeds 63");
        if (g[d]) bits |= Gf2Poly{1} << d;
    }
    return bits;
}

} // namespace

BitWord apply_flips(const BitWord& word, const std::vector<int>& flips) {
    BitWord out = word;
    for (int p : flips) out[static_cast<std::size_t>(p)] ^= 1;
    return out;
}

ComponentCode::ComponentCode(const GaloisField& field, int t, bool even_weight)
    : field_(field), n_(field.order()), t_(t), even_weight_(even_weight) {
    if (t < 1 || 2 * t >= n_)
        throw UnsupportedParameters("correction radius t = " + std::to_string(t) +
                                    " unsupported for n = " + std::to_string(n_));
    generator_ = bch_generator(field_, t);
    if (even_weight_) generator_ = poly_mul(generator_, 0b11); // times (x + 1)
    finish_construction();
}

ComponentCode::ComponentCode(const GaloisField& field, int t, bool even_weight, Gf2Poly generator)
    : field_(field), n_(field.order()), t_(t), even_weight_(even_weight), generator_(generator) {
    finish_construction();
}

void ComponentCode::finish_construction() {
    d_des_ = even_weight_ ? 2 * t_ + 2 : 2 * t_ + 1;
    const int deg = poly_degree(generator_);
    k_ = n_ - deg;
    if (deg < 1 || k_ < 1)
        throw UnsupportedParameters("generator degree " + std::to_string(deg) +
                                    " leaves no message bits at n = " + std::to_string(n_));
    pow_table_.assign(static_cast<std::size_t>(2 * t_), {});
    for (int j = 1; j <= 2 * t_; ++j) {
        auto& row = pow_table_[static_cast<std::size_t>(j - 1)];
        row.resize(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            row[static_cast<std::size_t>(i)] = field_.exp(static_cast<long long>(i) * j);
    }
}

BitWord ComponentCode::encode(std::span<const std::uint8_t> message) const {
    if (static_cast<int>(message.size()) != k_)
        throw LengthMismatch("message length " + std::to_string(message.size()) +
                             ", expected " + std::to_string(k_));
    const int deg = n_ - k_;
    const Gf2Poly low = generator_ & ((Gf2Poly{1} << deg) - 1); // generator minus leading term
    Gf2Poly rem = 0;
    for (int j = k_ - 1; j >= 0; --j) {
        const std::uint64_t fb = (rem >> (deg - 1)) ^ message[static_cast<std::size_t>(j)];
        rem = (rem << 1) & ((Gf2Poly{1} << deg) - 1);
        if (fb & 1) rem ^= low;
    }
    BitWord out(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < deg; ++i) out[static_cast<std::size_t>(i)] = (rem >> i) & 1;
    for (int j = 0; j < k_; ++j) out[static_cast<std::size_t>(deg + j)] = message[static_cast<std::size_t>(j)];
    return out;
}

std::vector<GfElem> ComponentCode::syndromes(std::span<const std::uint8_t> word) const {
    if (static_cast<int>(word.size()) != n_)
        throw LengthMismatch("word length " + std::to_string(word.size()) +
                             ", expected " + std::to_string(n_));
    std::vector<GfElem> s(static_cast<std::size_t>(2 * t_), 0);
    for (int i = 0; i < n_; ++i) {
        if (!word[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < 2 * t_; ++j)
            s[static_cast<std::size_t>(j)] ^= pow_table_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return s;
}

int ComponentCode::parity(std::span<const std::uint8_t> word) const {
    int p = 0;
    for (auto b : word) p ^= b;
    return p & 1;
}

bool ComponentCode::is_codeword(std::span<const std::uint8_t> word) const {
    const auto s = syndromes(word);
    for (auto v : s)
        if (v != 0) return false;
    if (even_weight_ && parity(word) != 0) return false;
    return true;
}

BddResult ComponentCode::bdd(std::span<const std::uint8_t> word) const {
    const auto synd = syndromes(word);
    bool all_zero = std::all_of(synd.begin(), synd.end(), [](GfElem v) { return v == 0; });
    if (all_zero) {
        // No even-weight codeword can sit within radius t of an odd-weight
        // BCH codeword (their difference would be a codeword of weight <= t).
        if (even_weight_ && parity(word) != 0) return {};
        return {true, {}};
    }

    // Berlekamp-Massey over the 2t syndromes.
    std::vector<GfElem> lambda{1}, prev{1};
    int L = 0, m = 1;
    GfElem prev_disc = 1;
    for (int step = 0; step < 2 * t_; ++step) {
        GfElem d = synd[static_cast<std::size_t>(step)];
        for (int i = 1; i <= L && i < static_cast<int>(lambda.size()); ++i)
            d ^= field_.mul(lambda[static_cast<std::size_t>(i)], synd[static_cast<std::size_t>(step - i)]);
        if (d == 0) {
            ++m;
            continue;
        }
        const GfElem coef = field_.mul(d, field_.inv(prev_disc));
        std::vector<GfElem> next = lambda;
        if (next.size() < prev.size() + static_cast<std::size_t>(m))
            next.resize(prev.size() + static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i + static_cast<std::size_t>(m)] ^= field_.mul(coef, prev[i]);
        if (2 * L <= step) {
            prev = lambda;
            prev_disc = d;
            L = step + 1 - L;
            m = 1;
        } else {
            ++m;
        }
        lambda = std::move(next);
    }
    if (L > t_) return {};

    // Chien search for the roots alpha^-p, p = 0..n-1.
    lambda.resize(static_cast<std::size_t>(L) + 1, 0);
    std::vector<GfElem> terms(lambda.begin(), lambda.end());
    std::vector<GfElem> step_mult(static_cast<std::size_t>(L) + 1, 1);
    for (int l = 1; l <= L; ++l) step_mult[static_cast<std::size_t>(l)] = field_.exp(field_.order() - l);
    std::vector<int> flips;
    for (int p = 0; p < n_; ++p) {
        GfElem acc = 0;
        for (int l = 0; l <= L; ++l) acc ^= terms[static_cast<std::size_t>(l)];
        if (acc == 0) flips.push_back(p);
        for (int l = 1; l <= L; ++l)
            terms[static_cast<std::size_t>(l)] =
                field_.mul(terms[static_cast<std::size_t>(l)], step_mult[static_cast<std::size_t>(l)]);
    }
    if (static_cast<int>(flips.size()) != L) return {};

    // The locator can have the right root count without describing a binary
    // error pattern; re-check the syndromes of the corrected word.
    for (int j = 1; j <= 2 * t_; ++j) {
        GfElem sum = 0;
        for (int p : flips)
            sum ^= pow_table_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(p)];
        if (sum != synd[static_cast<std::size_t>(j - 1)]) return {};
    }
    if (even_weight_ && ((parity(word) ^ (L & 1)) != 0)) return {};
    return {true, std::move(flips)};
}

} // namespace pcfec
