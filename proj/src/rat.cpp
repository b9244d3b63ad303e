#include "ellip/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace ellip {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    canonicalize();
}

void Rat::canonicalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = big_gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rat::floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    // Denominators are positive, so cross multiplication preserves order.
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat& Rat::operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    canonicalize();
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("division by zero rational");
    num_ *= o.den_;
    den_ *= o.num_;
    canonicalize();
    return *this;
}

std::string Rat::to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rat Rat::parse(std::string_view text) {
    auto fail = [&](std::size_t pos, const std::string& what) {
        throw std::invalid_argument("'" + std::string(text) + "' is not a rational: " + what +
                                    " at position " + std::to_string(pos));
    };
    if (text.empty()) throw std::invalid_argument("empty string is not a rational");

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '-') {
        negative = true;
        ++i;
        if (i == text.size()) fail(i, "expected digits");
    }

    auto read_digits = [&](BigInt& out) {
        if (i == text.size() || text[i] < '0' || text[i] > '9')
            fail(i, std::string("unexpected character '") +
                        (i < text.size() ? std::string(1, text[i]) : std::string("<end>")) + "'");
        out = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            out = out * 10 + (text[i] - '0');
            ++i;
        }
    };

    BigInt num;
    read_digits(num);
    BigInt den = 1;
    if (i < text.size()) {
        if (text[i] != '/')
            fail(i, std::string("unexpected character '") + std::string(1, text[i]) + "'");
        ++i;
        read_digits(den);
        if (i < text.size())
            fail(i, std::string("unexpected character '") + std::string(1, text[i]) + "'");
        if (den == 0) fail(i - 1, "zero denominator");
    }
    if (negative) num = -num;
    return Rat(std::move(num), std::move(den));
}

std::string Rat::decimal_approx(int digits) const {
    BigInt scale = 1;
    for (int k = 0; k < digits; ++k) scale *= 10;
    BigInt scaled = num_ * scale / den_;  // truncates toward zero
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string raw = scaled.str();
    if (static_cast<int>(raw.size()) <= digits)
        raw.insert(0, static_cast<std::size_t>(digits + 1) - raw.size(), '0');
    raw.insert(raw.size() - static_cast<std::size_t>(digits), 1, '.');
    // Trim trailing zeros but keep at least one fractional digit.
    std::size_t last = raw.find_last_not_of('0');
    if (raw[last] == '.') ++last;
    raw.erase(last + 1);
    return neg ? "-" + raw : raw;
}

BigInt floor_div(const Rat& x, const Rat& y) {
    return (x / y).floor();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.to_string();
}

}  // namespace ellip
