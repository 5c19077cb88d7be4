#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fspt {

/// Element of Q/Z stored as a reduced fraction num/den with 0 <= num < den.
/// This is the additive model of U(1): the fraction x stands for e^{2*pi*i*x}.
/// All arithmetic is exact; overflow of the 64-bit numerator/denominator
/// raises std::overflow_error instead of wrapping.
class Phase {
 public:
  constexpr Phase() = default;

  /// num/den mod 1, reduced. den must be nonzero.
  static Phase fraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Phase operator+(Phase o) const;
  Phase operator-(Phase o) const;
  Phase operator-() const;
  /// k * p mod 1.
  Phase scaled(std::int64_t k) const;

  friend bool operator==(Phase a, Phase b) = default;

  /// Canonical "p/q" form, e.g. "0/1", "3/8".
  std::string str() const;

  /// Parses "p/q". Returns nullopt on malformed input. If require_reduced is
  /// set, fractions like "3/6" or "9/8" are rejected instead of canonicalized.
  static std::optional<Phase> parse(std::string_view text, bool require_reduced);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// e^{i*pi*k/2} as a phase: k/4 mod 1.
Phase lift_quarter(std::int64_t k);
/// e^{i*pi*k/4} as a phase: k/8 mod 1.
Phase lift_eighth(std::int64_t k);
/// k/2 mod 1 (sign exponents).
Phase lift_half(std::int64_t k);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);
/// Floor modulus with result in [0, m).
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

}  // namespace fspt
