#include "pcfec/galois.hpp"

#include <string>

namespace pcfec {

GaloisField::GaloisField(int nu, std::uint32_t prim_poly)
    : nu_(nu), prim_poly_(prim_poly) {
    if (nu < 3 || nu > 10)
        throw UnsupportedParameters("field exponent must be in [3, 10], got " + std::to_string(nu));
    const std::uint32_t top = 1u << nu;
    if ((prim_poly & top) == 0 || (prim_poly >> (nu + 1)) != 0 || (prim_poly & 1u) == 0)
        throw NonPrimitivePolynomial("polynomial has wrong degree or zero constant term");

    const int ord = order();
    log_.assign(size(), 0);
    antilog_.assign(2 * ord, 0);

    std::uint32_t b = 1;
    for (int j = 0; j < ord; ++j) {
        if (j > 0 && b == 1)
            throw NonPrimitivePolynomial("cycle closed after " + std::to_string(j) +
                                         " steps, expected " + std::to_string(ord));
        log_[b] = static_cast<GfElem>(j);
        antilog_[j] = static_cast<GfElem>(b);
        b <<= 1;
        if (b & top) b ^= prim_poly;
    }
    if (b != 1)
        throw NonPrimitivePolynomial("x^(2^nu - 1) != 1");
    // duplicate the exponent range so mul/inv can skip the mod
    for (int j = ord; j < 2 * ord; ++j) antilog_[j] = antilog_[j - ord];
}

GaloisField GaloisField::with_default_poly(int nu) {
    return GaloisField(nu, default_primitive_poly(nu));
}

GfElem GaloisField::pow(GfElem a, long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long long le = (static_cast<long long>(log_[a]) * e) % order();
    if (le < 0) le += order();
    return antilog_[le];
}

std::uint32_t default_primitive_poly(int nu) {
    switch (nu) {
        case 3: return 0x0B;   // x^3 + x + 1
        case 4: return 0x13;   // x^4 + x + 1
        case 5: return 0x25;   // x^5 + x^2 + 1
        case 6: return 0x43;   // x^6 + x + 1
        case 7: return 0x89;   // x^7 + x^3 + 1
        case 8: return 0x11D;  // x^8 + x^4 + x^3 + x^2 + 1
        case 9: return 0x211;  // x^9 + x^4 + 1
        case 10: return 0x409; // x^10 + x^3 + 1
        default:
            throw UnsupportedParameters("no default primitive polynomial for nu = " +
                                        std::to_string(nu));
    }
}

int poly_degree(Gf2Poly p) {
    int d = -1;
    while (p) {
        ++d;
        p >>= 1;
    }
    return d;
}

Gf2Poly poly_mul(Gf2Poly a, Gf2Poly b) {
    Gf2Poly r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

Gf2Poly poly_mod(Gf2Poly a, Gf2Poly m) {
    if (m == 0) throw DivisionByZero("poly_mod by zero polynomial");
    const int dm = poly_degree(m);
    int da = poly_degree(a);
    while (da >= dm) {
        a ^= m << (da - dm);
        da = poly_degree(a);
    }
    return a;
}

GfElem poly_eval(const GaloisField& f, const std::vector<GfElem>& p, GfElem x) {
    GfElem acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = static_cast<GfElem>(f.mul(acc, x) ^ *it);
    return acc;
}

} // namespace pcfec
