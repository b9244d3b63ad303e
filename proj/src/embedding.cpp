#include "ellip/embedding.hpp"

#include <stdexcept>
#include <utility>

namespace ellip {

NkStream::NkStream(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.sign() <= 0 || b_.sign() <= 0)
        throw std::invalid_argument("lattice stream parameters must be positive");
    stream_.add_progression(Rat(0), a_);  // column 0
    columns_ = 1;
}

void NkStream::activate_columns(int column, std::int64_t position) {
    // Column j+1 first becomes reachable when the head j*b of column j is
    // emitted; its own head (j+1)*b is strictly larger, so the heap order is
    // never disturbed.
    if (position == 0 && column == columns_ - 1) {
        stream_.add_progression(Rat(columns_) * b_, a_);
        ++columns_;
    }
}

Rat NkStream::next() {
    ProgressionEntry e = stream_.next();
    activate_columns(e.generator, e.position);
    ++emitted_;
    return std::move(e.value);
}

void NkStream::next_scaled(BigInt& value_out) {
    int generator;
    std::int64_t position;
    stream_.next_scaled(value_out, generator, position);
    activate_columns(generator, position);
    ++emitted_;
}

std::vector<Rat> nk_values(const Rat& a, const Rat& b, std::int64_t K) {
    if (K < 0) throw std::invalid_argument("nk_values: K must be >= 0");
    NkStream stream(a, b);
    std::vector<Rat> out;
    out.reserve(static_cast<std::size_t>(K) + 1);
    for (std::int64_t k = 0; k <= K; ++k) out.push_back(stream.next());
    return out;
}

std::pair<Rat, Rat> sqrt_bounds(const Rat& r, const BigInt& scale) {
    if (r.sign() < 0) throw std::invalid_argument("sqrt_bounds: negative argument");
    if (scale < 1) throw std::invalid_argument("sqrt_bounds: scale must be >= 1");
    // sqrt(p/q) = sqrt(p*q)/q; floor integer sqrt of p*q*scale^2 brackets it.
    BigInt radicand = r.num() * r.den() * scale * scale;
    BigInt lo = boost::multiprecision::sqrt(radicand);
    BigInt denom = r.den() * scale;
    return {Rat(lo, denom), Rat(lo + 1, denom)};
}

namespace {

Rat rat_ceil(const Rat& x) {
    return Rat(-((-x).floor()));
}

// Least k beyond which the triangle bounds force N_k(source) and N_k(target)
// apart whenever their volumes differ. Symmetric in source/target.
BigInt verification_cutoff(const Rat& sa, const Rat& sb, const Rat& ta, const Rat& tb) {
    Rat vol_s = sa * sb;
    Rat vol_t = ta * tb;
    const Rat& lo_vol = vol_s < vol_t ? vol_s : vol_t;
    const Rat& hi_vol = vol_s < vol_t ? vol_t : vol_s;
    // Need a positive lower bound on sqrt(hi_vol) - sqrt(lo_vol); tighten the
    // bracketing until it separates (it must, the volumes are distinct).
    BigInt scale = 1000000;
    Rat gap;
    for (;;) {
        Rat hi_lo = sqrt_bounds(hi_vol, scale).first;
        Rat lo_hi = sqrt_bounds(lo_vol, scale).second;
        gap = hi_lo - lo_hi;
        if (gap.sign() > 0) break;
        scale *= 1000;
    }
    Rat spread = sa + sb + ta + tb;
    Rat kstar = spread * spread / (Rat(2) * gap * gap);
    BigInt k = rat_ceil(kstar).num();
    return k < 1 ? BigInt(1) : k;
}

}  // namespace

EmbedVerdict embeds_4d(const Ellipsoid& source, const Ellipsoid& target, std::int64_t K) {
    if (source.dim() != 2 || target.dim() != 2)
        throw std::invalid_argument("embeds_4d handles 2-axis ellipsoids only");
    if (K < 0) throw std::invalid_argument("embeds_4d: K must be >= 0");

    const Rat &sa = source.axis(1), &sb = source.axis(2);
    const Rat &ta = target.axis(1), &tb = target.axis(2);
    Rat vol_s = sa * sb;
    Rat vol_t = ta * tb;

    std::optional<BigInt> cutoff;
    std::int64_t limit = K;
    if (vol_s != vol_t) {
        BigInt kstar = verification_cutoff(sa, sb, ta, tb);
        cutoff = kstar;
        if (kstar < K) limit = kstar.convert_to<std::int64_t>();
    }

    NkStream src(sa, sb);
    NkStream tgt(ta, tb);
    EmbedVerdict v;
    v.cutoff_k = cutoff;
    for (std::int64_t k = 0; k <= limit; ++k) {
        Rat vs = src.next();
        Rat vt = tgt.next();
        v.checked_up_to = k;
        if (vs > vt) {
            v.outcome = EmbedOutcome::Fails;
            v.witness_k = k;
            return v;
        }
    }
    if (cutoff && BigInt(K) >= *cutoff && vol_s < vol_t) {
        v.outcome = EmbedOutcome::Embeds;
        return v;
    }
    v.outcome = EmbedOutcome::PassUpToK;
    return v;
}

CapacityResult capacity_c0(const Rat& a, std::int64_t K) {
    if (a < Rat(1)) throw std::invalid_argument("capacity_c0: a must be >= 1");
    if (K < 1) throw std::invalid_argument("capacity_c0: K must be >= 1");
    NkStream num(Rat(1), a);
    NkStream den(Rat(1), Rat(1));
    num.next();  // both N_0 = 0; the ratio starts at k = 1
    den.next();
    CapacityResult best{Rat(0), 0};
    for (std::int64_t k = 1; k <= K; ++k) {
        Rat ratio = num.next() / den.next();
        if (k == 1 || ratio > best.value) {
            best.value = std::move(ratio);
            best.argmax_k = k;
        }
    }
    return best;
}

std::vector<StaircaseRow> staircase_table(const Rat& a_min, const Rat& a_max, const Rat& step,
                                          std::int64_t K) {
    if (a_min < Rat(1)) throw std::invalid_argument("staircase_table: a_min must be >= 1");
    if (a_max < a_min) throw std::invalid_argument("staircase_table: a_max must be >= a_min");
    if (step.sign() <= 0) throw std::invalid_argument("staircase_table: step must be positive");
    std::vector<StaircaseRow> rows;
    for (Rat x = a_min; x <= a_max; x += step) {
        CapacityResult c = capacity_c0(x, K);
        rows.push_back(StaircaseRow{x, std::move(c.value), c.argmax_k});
    }
    return rows;
}

}  // namespace ellip
