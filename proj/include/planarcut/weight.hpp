#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace planarcut {

// Nonnegative edge weight with a distinguished infinite value. Finite values
// are scaled integers so that sums and comparisons are exact.
class Weight {
public:
    constexpr Weight() = default;
    constexpr explicit Weight(std::int64_t v) : value_(v) {}

    static constexpr Weight infinite() {
        Weight w;
        w.inf_ = true;
        return w;
    }

    constexpr bool is_infinite() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }
    constexpr std::int64_t value() const { return value_; }

    friend constexpr Weight operator+(Weight a, Weight b) {
        if (a.inf_ || b.inf_) return infinite();
        return Weight(a.value_ + b.value_);
    }
    Weight& operator+=(Weight b) { return *this = *this + b; }

    friend constexpr bool operator==(Weight a, Weight b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(Weight a, Weight b) {
        if (a.inf_ || b.inf_) return int(a.inf_) <=> int(b.inf_);
        return a.value_ <=> b.value_;
    }

private:
    std::int64_t value_ = 0;
    bool inf_ = false;
};

// Internal path cost. An infinite dart counts as one unit of the first
// component, so shortest paths through guard edges stay well defined and
// comparisons stay exact. Differences may be negative (potential labels).
struct Cost {
    std::int64_t inf = 0;
    std::int64_t fin = 0;

    static constexpr Cost of(Weight w) {
        return w.is_infinite() ? Cost{1, 0} : Cost{0, w.value()};
    }
    // Sentinel for "not reached"; larger than any real path cost.
    static constexpr Cost unreached() {
        return Cost{std::numeric_limits<std::int64_t>::max() / 4, 0};
    }

    constexpr bool is_unreached() const { return inf >= unreached().inf; }
    constexpr Weight weight() const {
        return inf > 0 ? Weight::infinite() : Weight(fin);
    }

    friend constexpr Cost operator+(Cost a, Cost b) { return {a.inf + b.inf, a.fin + b.fin}; }
    friend constexpr Cost operator-(Cost a, Cost b) { return {a.inf - b.inf, a.fin - b.fin}; }
    Cost& operator+=(Cost b) { return *this = *this + b; }
    friend constexpr bool operator==(Cost a, Cost b) = default;
    friend constexpr auto operator<=>(Cost a, Cost b) = default;
};

// Decimal text <-> scaled integer. `scale` is a power of ten.
std::string format_weight(Weight w, std::int64_t scale = 1);

}  // namespace planarcut
