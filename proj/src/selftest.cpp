#include "pcfec/selftest.hpp"

#include <random>
#include <vector>

#include "pcfec/bch.hpp"
#include "pcfec/drs.hpp"
#include "pcfec/eaed.hpp"
#include "pcfec/galois.hpp"
#include "pcfec/rng.hpp"

namespace pcfec {

namespace {

struct Check {
    std::ostream& out;
    int failures = 0;

    void report(const char* name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << '\n';
        failures += !ok;
    }
};

bool field_axioms(std::mt19937_64& rng) {
    for (int nu = 4; nu <= 8; ++nu) {
        GaloisField f = GaloisField::with_default_poly(nu);
        const GfElem mask = static_cast<GfElem>(f.size() - 1);
        for (int i = 0; i < 2000; ++i) {
            const GfElem a = static_cast<GfElem>(rng() & mask);
            const GfElem b = static_cast<GfElem>(rng() & mask);
            const GfElem c = static_cast<GfElem>(rng() & mask);
            if (f.mul(a, b) != f.mul(b, a)) return false;
            if (f.mul(a, f.mul(b, c)) != f.mul(f.mul(a, b), c)) return false;
            if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) return false;
        }
        for (int a = 1; a < f.size(); ++a) {
            if (f.mul(static_cast<GfElem>(a), f.inv(static_cast<GfElem>(a))) != 1) return false;
            if (f.exp(f.log(static_cast<GfElem>(a))) != a) return false;
        }
    }
    return true;
}

bool bdd_exhaustive(const ComponentCode& code, std::mt19937_64& rng, int codewords) {
    const int n = code.n();
    std::vector<std::uint8_t> msg(static_cast<std::size_t>(code.k()));
    for (int cw = 0; cw < codewords; ++cw) {
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 1);
        const BitWord c = code.encode(msg);
        // all error patterns of weight <= 2
        for (int i = -1; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                BitWord y = c;
                if (i >= 0) y[static_cast<std::size_t>(i)] ^= 1;
                y[static_cast<std::size_t>(j)] ^= 1;
                BddResult r = code.bdd(y);
                if (!r.success) return false;
                if (apply_flips(y, r.flips) != c) return false;
            }
            if (i >= 0) {
                BitWord y = c;
                y[static_cast<std::size_t>(i)] ^= 1;
                BddResult r = code.bdd(y);
                if (!r.success || apply_flips(y, r.flips) != c) return false;
            }
        }
        BddResult r = code.bdd(c);
        if (!r.success || !r.flips.empty()) return false;
    }
    return true;
}

bool eaed_sphere(const ComponentCode& code, std::mt19937_64& rng, int trials) {
    const int n = code.n();
    std::vector<std::uint8_t> msg(static_cast<std::size_t>(code.k()));
    std::vector<int> positions(static_cast<std::size_t>(n));
    for (int e = 0; 2 * e < code.d_des(); ++e) {
        for (int er = 0; 2 * e + er < code.d_des(); ++er) {
            for (int trial = 0; trial < trials; ++trial) {
                for (auto& b : msg) b = static_cast<std::uint8_t>(rng() & 1);
                const BitWord c = code.encode(msg);
                for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(i)] = i;
                for (int i = 0; i < e + er; ++i) {
                    const int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(n - i));
                    std::swap(positions[static_cast<std::size_t>(i)], positions[static_cast<std::size_t>(j)]);
                }
                TernaryWord y = to_ternary(c);
                for (int i = 0; i < e; ++i) {
                    auto& v = y[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])];
                    v = (v == Trit::One) ? Trit::Zero : Trit::One;
                }
                for (int i = e; i < e + er; ++i)
                    y[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] = Trit::Erased;
                EaedResult res = eaed_decode(code, y, rng);
                if (res.tag != EaedTag::Decoded || res.codeword != c) return false;
            }
        }
    }
    return true;
}

bool drs_fuzz(std::mt19937_64& rng) {
    const int n = 16;
    std::vector<std::uint8_t> init(static_cast<std::size_t>(n) * n);
    for (auto& s : init) s = static_cast<std::uint8_t>(9 + rng() % 16);
    DrsRegister reg(init, n, 9);
    for (int ev = 0; ev < 20000; ++ev) {
        const auto kind = static_cast<FeedbackKind>(rng() % 4);
        std::vector<int> pos;
        const int count = static_cast<int>(rng() % 16);
        for (int i = 0; i < count; ++i) pos.push_back(static_cast<int>(rng() % (n * n)));
        const auto before = reg.scores();
        reg.apply(kind, pos);
        for (auto s : reg.scores())
            if (s > kDrsMax) return false;
        if (kind == FeedbackKind::Failure && reg.scores() != before) return false;
    }
    return true;
}

} // namespace

int run_selftest(std::ostream& out, const SelftestOptions& opts) {
    Check check{out};
    std::mt19937_64 rng = make_engine(opts.seed);

    check.report("gf_axioms_and_tables", field_axioms(rng));

    GaloisField f16 = GaloisField::with_default_poly(4);
    ComponentCode bch157(f16, 2, false);
    check.report("bch_15_7_generator", bch157.generator() == 0x1D1 && bch157.k() == 7);

    if (opts.inject_generator_fault) {
        out << "injecting generator fault\n";
        bch157 = ComponentCode(f16, 2, false, bch157.generator() ^ 0x4);
    }
    check.report("bdd_exhaustive_15_7", bdd_exhaustive(bch157, rng, 50));

    ComponentCode even156(f16, 2, true);
    check.report("eaed_sphere_15_7", eaed_sphere(bch157, rng, 400));
    check.report("eaed_sphere_15_6_even", eaed_sphere(even156, rng, 400));

    check.report("drs_register_fuzz", drs_fuzz(rng));

    out << (check.failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
    return check.failures;
}

} // namespace pcfec
