#ifndef MVTSP_COST_HPP
#define MVTSP_COST_HPP

#include <compare>
#include <cstdint>
#include <string>

namespace mvtsp {

using u128 = unsigned __int128;

// Extended nonnegative integer: a finite 128-bit value or +Infinity.
// Addition and scaling saturate at Infinity. 128 bits keep sums exact for
// costs up to 2^40 multiplied by multiplicities up to 2^20 over any matrix
// size this project handles.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr Cost(std::uint64_t v) : value_(v) {}

  static constexpr Cost infinity() {
    Cost c;
    c.infinite_ = true;
    return c;
  }
  static constexpr Cost from_u128(u128 v) {
    Cost c;
    c.value_ = v;
    return c;
  }

  constexpr bool finite() const { return !infinite_; }
  constexpr bool infinite() const { return infinite_; }
  constexpr bool is_zero() const { return !infinite_ && value_ == 0; }

  // Finite value; meaningless when infinite().
  constexpr u128 value() const { return value_; }

  constexpr Cost operator+(const Cost& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return from_u128(value_ + o.value_);
  }
  constexpr Cost& operator+=(const Cost& o) {
    *this = *this + o;
    return *this;
  }
  // Scale by a multiplicity. Infinity times zero is zero: an unused edge
  // contributes nothing even when its cost is infinite.
  constexpr Cost scaled(std::uint64_t times) const {
    if (times == 0) return Cost();
    if (infinite_) return infinity();
    return from_u128(value_ * static_cast<u128>(times));
  }

  constexpr bool operator==(const Cost& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  constexpr bool operator!=(const Cost& o) const { return !(*this == o); }
  constexpr bool operator<(const Cost& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
  }
  constexpr bool operator<=(const Cost& o) const { return !(o < *this); }
  constexpr bool operator>(const Cost& o) const { return o < *this; }
  constexpr bool operator>=(const Cost& o) const { return !(*this < o); }

  std::string to_string() const;

 private:
  u128 value_ = 0;
  bool infinite_ = false;
};

std::string u128_to_string(u128 v);

}  // namespace mvtsp

#endif  // MVTSP_COST_HPP
