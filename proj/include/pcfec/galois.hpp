// GF(2^nu) arithmetic via log/antilog tables, plus GF(2) bitmask polynomials.
#pragma once

#include <cstdint>
#include <vector>

#include "pcfec/errors.hpp"

namespace pcfec {

// Field element in polynomial basis; fits all supported nu (3..10).
using GfElem = std::uint16_t;

class GaloisField {
public:
    // Builds the field tables from a degree-nu primitive polynomial given as
    // a bitmask (bit i = coefficient of x^i). Throws NonPrimitivePolynomial
    // if the cycle generated by x closes before reaching length 2^nu - 1.
    GaloisField(int nu, std::uint32_t prim_poly);

    static GaloisField with_default_poly(int nu);

    int nu() const { return nu_; }
    std::uint32_t prim_poly() const { return prim_poly_; }
    int size() const { return 1 << nu_; }
    int order() const { return (1 << nu_) - 1; }

    GfElem add(GfElem a, GfElem b) const { return a ^ b; }

    GfElem mul(GfElem a, GfElem b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]]; // extended table, no mod needed
    }

    GfElem inv(GfElem a) const {
        if (a == 0) throw DivisionByZero("gf_inv(0)");
        return antilog_[order() - log_[a]];
    }

    GfElem pow(GfElem a, long long e) const;

    // antilog: alpha^i with period 2^nu - 1 (any nonnegative i)
    GfElem exp(long long i) const { return antilog_[i % order()]; }

    // discrete log of a nonzero element, in [0, 2^nu - 2]
    int log(GfElem a) const {
        if (a == 0) throw DivisionByZero("log of zero element");
        return log_[a];
    }

private:
    int nu_;
    std::uint32_t prim_poly_;
    std::vector<GfElem> log_;     // indexed by element, log_[0] unused
    std::vector<GfElem> antilog_; // indexed by exponent, length 2*(2^nu - 1)
};

// Default primitive polynomial per nu; overridable by constructing
// GaloisField with an explicit polynomial.
std::uint32_t default_primitive_poly(int nu);

// Polynomial over GF(2) as a bitmask: bit i = coefficient of x^i.
using Gf2Poly = std::uint64_t;

int poly_degree(Gf2Poly p); // -1 for the zero polynomial

// Carryless product; total degree must fit in 64 bits.
Gf2Poly poly_mul(Gf2Poly a, Gf2Poly b);

// Remainder of a modulo m; throws DivisionByZero when m == 0.
Gf2Poly poly_mod(Gf2Poly a, Gf2Poly m);

// Horner evaluation of a polynomial over GF(2^nu); p[i] = coefficient of x^i.
GfElem poly_eval(const GaloisField& f, const std::vector<GfElem>& p, GfElem x);

} // namespace pcfec
