#include "bsp/cost.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace bsp {

namespace {

using Wide = __int128;

long long narrow(Wide v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw std::overflow_error("Cost arithmetic overflow");
    return static_cast<long long>(v);
}

}  // namespace

Cost::Cost(long long value) : num_(value), den_(1) {
    if (value < 0) throw std::invalid_argument("Cost must be nonnegative");
}

Cost::Cost(long long num, long long den) : num_(num), den_(den) {
    if (den == 0) throw std::invalid_argument("Cost denominator is zero");
    if (den < 0) { num_ = -num_; den_ = -den_; }
    if (num_ < 0) throw std::invalid_argument("Cost must be nonnegative");
    normalize();
}

void Cost::normalize() {
    long long g = std::gcd(num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
}

Cost Cost::ceil() const {
    return Cost((num_ + den_ - 1) / den_);
}

std::optional<Cost> Cost::parse(std::string_view text) {
    auto parse_int = [](std::string_view s, long long& out) {
        if (s.empty()) return false;
        auto res = std::from_chars(s.data(), s.data() + s.size(), out);
        return res.ec == std::errc() && res.ptr == s.data() + s.size();
    };
    long long num = 0, den = 1;
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!parse_int(text, num)) return std::nullopt;
    } else {
        if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
        if (den <= 0) return std::nullopt;
    }
    if (num < 0) return std::nullopt;
    return Cost(num, den);
}

std::string Cost::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Cost& Cost::operator+=(const Cost& other) {
    Wide n = Wide(num_) * other.den_ + Wide(other.num_) * den_;
    Wide d = Wide(den_) * other.den_;
    Wide g = std::gcd(narrow(n < 0 ? -n : n), narrow(d));
    if (g > 1) { n /= g; d /= g; }
    num_ = narrow(n);
    den_ = narrow(d);
    return *this;
}

Cost operator*(const Cost& a, const Cost& b) {
    Wide n = Wide(a.num_) * b.num_;
    Wide d = Wide(a.den_) * b.den_;
    Wide g = std::gcd(narrow(n), narrow(d));
    if (g > 1) { n /= g; d /= g; }
    Cost r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

std::strong_ordering Cost::operator<=>(const Cost& other) const {
    Wide lhs = Wide(num_) * other.den_;
    Wide rhs = Wide(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace bsp
