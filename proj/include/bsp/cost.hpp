#ifndef BSP_COST_HPP
#define BSP_COST_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace bsp {

// Exact nonnegative rational. Always kept in canonical reduced form:
// den >= 1, gcd(num, den) == 1. All solver arithmetic goes through this
// type; there is no floating point anywhere in a solver path.
class Cost {
public:
    Cost() = default;
    Cost(long long value);                  // integer value, must be >= 0
    Cost(long long num, long long den);     // num/den, must be >= 0, den != 0

    static std::optional<Cost> parse(std::string_view text);

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Smallest integer >= value, as a Cost.
    Cost ceil() const;

    std::string str() const;    // "p" or "p/q"

    Cost& operator+=(const Cost& other);
    friend Cost operator+(Cost a, const Cost& b) { return a += b; }
    friend Cost operator*(const Cost& a, const Cost& b);

    std::strong_ordering operator<=>(const Cost& other) const;
    bool operator==(const Cost& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }

private:
    void normalize();

    long long num_ = 0;
    long long den_ = 1;
};

// (follower-cost, leader-cost) pair under lexicographic order. This is the
// exact replacement for the epsilon-perturbed weights: compare the follower
// component first, break ties on the leader component.
struct LexValue {
    Cost primary;     // follower objective d
    Cost secondary;   // leader objective c

    LexValue& operator+=(const LexValue& o) {
        primary += o.primary;
        secondary += o.secondary;
        return *this;
    }
    friend LexValue operator+(LexValue a, const LexValue& b) { return a += b; }

    auto operator<=>(const LexValue&) const = default;
};

}  // namespace bsp

#endif
