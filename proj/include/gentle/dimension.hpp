// Homological dimension values: a natural number or infinity.
#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace gentle {

// Value in N union {infinity}; infinity is maximal for the total order.
class Dim {
public:
    constexpr Dim() : v_(0) {}
    constexpr explicit Dim(std::uint32_t n) : v_(n) {}

    static constexpr Dim infinity() { return Dim(kInf, Tag{}); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr bool is_finite() const { return v_ != kInf; }

    // Finite value; callers must check is_finite() first.
    constexpr std::uint32_t value() const { return v_; }

    friend constexpr bool operator==(Dim a, Dim b) { return a.v_ == b.v_; }
    friend constexpr auto operator<=>(Dim a, Dim b) { return a.v_ <=> b.v_; }

    friend constexpr Dim operator+(Dim a, std::uint32_t k) {
        return a.is_infinite() ? a : Dim(a.v_ + k);
    }
    friend constexpr Dim max(Dim a, Dim b) { return a < b ? b : a; }

    std::string str() const {
        return is_infinite() ? "infinity" : std::to_string(v_);
    }

private:
    struct Tag {};
    constexpr Dim(std::uint32_t n, Tag) : v_(n) {}
    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t v_;
};

} // namespace gentle
