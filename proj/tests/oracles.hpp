#pragma once

// Brute-force reference implementations and random-input generators shared by
// the test binaries. Everything here is deliberately naive: these are the
// oracles the fast library routes are checked against, so they must not share
// code (or tricks) with the implementation.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <ellip/embedding.hpp>
#include <ellip/spectrum.hpp>

namespace oracle {

using ellip::BigInt;
using ellip::Ellipsoid;
using ellip::Orbit;
using ellip::Rat;
using ellip::SpectrumEntry;

// First K+1 values of {i*a + j*b : i,j >= 0} by full enumeration and sort.
// The multiples of min(a,b) alone supply K+1 combinations, so the cap
// K*min(a,b) is large enough. Quadratic in K; keep K <= 10^3.
inline std::vector<Rat> nk_brute(const Rat& a, const Rat& b, std::int64_t K) {
    BigInt den = boost::multiprecision::lcm(a.den(), b.den());
    BigInt sa = a.num() * (den / a.den());
    BigInt sb = b.num() * (den / b.den());
    BigInt cap = BigInt(K) * (sa < sb ? sa : sb);
    std::vector<BigInt> vals;
    for (BigInt ia = 0; ia <= cap; ia += sa)
        for (BigInt v = ia; v <= cap; v += sb) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(K) + 1);
    for (std::int64_t k = 0; k <= K; ++k)
        out.emplace_back(vals[static_cast<std::size_t>(k)], den);
    return out;
}

// Every orbit with action <= bound, one axis at a time, by repeated addition.
inline std::vector<SpectrumEntry> spectrum_brute(const Ellipsoid& E, const Rat& bound) {
    std::vector<SpectrumEntry> out;
    for (int i = 1; i <= E.dim(); ++i) {
        Rat action = E.axis(i);
        std::int64_t m = 1;
        while (action <= bound) {
            out.push_back(SpectrumEntry{action, Orbit{i, m}});
            ++m;
            action += E.axis(i);
        }
    }
    std::sort(out.begin(), out.end(), [](const SpectrumEntry& x, const SpectrumEntry& y) {
        if (x.action != y.action) return x.action < y.action;
        if (x.orbit.axis != y.orbit.axis) return x.orbit.axis < y.orbit.axis;
        return x.orbit.multiplicity < y.orbit.multiplicity;
    });
    return out;
}

// Conley-Zehnder value by counting spectrum entries one by one, with no
// division or floor anywhere. Independent of both library routes.
inline std::int64_t cz_brute(const Ellipsoid& E, const Orbit& o) {
    Rat ceiling = Rat(o.multiplicity) * E.axis(o.axis);
    std::int64_t count = 0;
    for (int j = 1; j <= E.dim(); ++j) {
        Rat acc = E.axis(j);
        while (acc <= ceiling) {
            ++count;
            acc += E.axis(j);
        }
    }
    return E.dim() - 1 + 2 * count;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng);
    }

    // Positive rational with numerator in [1, max_num], denominator in [1, max_den].
    Rat rat(std::int64_t max_num, std::int64_t max_den) {
        return Rat(BigInt(uniform(1, max_num)), BigInt(uniform(1, max_den)));
    }

    // Nondecreasing positive entries, no other structure.
    Ellipsoid ellipsoid(int dim, std::int64_t max_num, std::int64_t max_den) {
        std::vector<Rat> sizes;
        for (int i = 0; i < dim; ++i) sizes.push_back(rat(max_num, max_den));
        std::sort(sizes.begin(), sizes.end());
        return Ellipsoid(sizes);
    }

    // Ellipsoid whose axis denominators are pairwise coprime and whose
    // spectrum has no coincidences below 10 * a_n. Retries until both hold.
    Ellipsoid generic_ellipsoid(int dim, std::int64_t max_num, std::int64_t max_den) {
        for (;;) {
            std::vector<BigInt> dens;
            while (static_cast<int>(dens.size()) < dim) {
                BigInt d(uniform(1, max_den));
                bool ok = true;
                for (const BigInt& prev : dens)
                    if (boost::multiprecision::gcd(prev, d) != 1) { ok = false; break; }
                if (ok) dens.push_back(d);
            }
            std::vector<Rat> sizes;
            for (int i = 0; i < dim; ++i) sizes.emplace_back(BigInt(uniform(1, max_num)), dens[static_cast<std::size_t>(i)]);
            std::sort(sizes.begin(), sizes.end());
            Ellipsoid E(sizes);
            Rat bound = Rat(10) * E.axis(E.dim());
            if (ellip::degeneracy_check(E, bound).empty()) return E;
        }
    }

    // Pair (a, b) with a_i < b_i < a_{i+1} and b_n < 2*a_1: all 2n values are
    // drawn strictly inside (base, 2*base) and then interleaved.
    std::pair<Ellipsoid, Ellipsoid> interleaved_pair(int dim) {
        Rat base = rat(6, 3);
        std::vector<std::int64_t> ks;
        while (static_cast<int>(ks.size()) < 2 * dim) {
            std::int64_t k = uniform(1, 199);
            if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
        }
        std::sort(ks.begin(), ks.end());
        std::vector<Rat> lo, hi;
        for (int i = 0; i < dim; ++i) {
            lo.push_back(base * (Rat(1) + Rat(BigInt(ks[static_cast<std::size_t>(2 * i)]), BigInt(200))));
            hi.push_back(base * (Rat(1) + Rat(BigInt(ks[static_cast<std::size_t>(2 * i + 1)]), BigInt(200))));
        }
        return {Ellipsoid(lo), Ellipsoid(hi)};
    }

    // Pair (a, b) with a_i < b_i, a_i < 2*a_1, b_i < 2*b_1, both strictly
    // increasing (distinct entries keep the simple-orbit spectrum counts exact).
    std::pair<Ellipsoid, Ellipsoid> dominated_pair(int dim) {
        Rat a1 = rat(6, 3);
        std::vector<Rat> av{a1};
        for (int i = 1; i < dim; ++i) {
            Rat prev = av.back();
            // strictly inside (prev, 2*a1): prev + (2*a1 - prev) * k/100
            Rat t(BigInt(uniform(1, 99)), BigInt(100));
            av.push_back(prev + (Rat(2) * a1 - prev) * t);
        }
        Rat b1 = a1 + (Rat(2) * a1 - a1) * Rat(BigInt(uniform(1, 99)), BigInt(100));
        std::vector<Rat> bv{b1};
        for (int i = 1; i < dim; ++i) {
            Rat floor_v = std::max(av[static_cast<std::size_t>(i)], bv.back());
            Rat t(BigInt(uniform(1, 99)), BigInt(100));
            bv.push_back(floor_v + (Rat(2) * b1 - floor_v) * t);
        }
        return {Ellipsoid(av), Ellipsoid(bv)};
    }
};

}  // namespace oracle
