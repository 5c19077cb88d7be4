#include "fspt/phase.hpp"

#include <charconv>
#include <numeric>

namespace fspt {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exact integer addition overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("exact integer subtraction overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exact integer multiplication overflow");
  return r;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm of zero");
  const std::int64_t g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

Phase Phase::fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("phase with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  num = floor_mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  Phase p;
  if (num == 0) {
    p.num_ = 0;
    p.den_ = 1;
  } else {
    p.num_ = num / g;
    p.den_ = den / g;
  }
  return p;
}

Phase Phase::operator+(Phase o) const {
  const std::int64_t den = lcm_checked(den_, o.den_);
  const std::int64_t num =
      checked_add(checked_mul(num_, den / den_), checked_mul(o.num_, den / o.den_));
  return fraction(num, den);
}

Phase Phase::operator-(Phase o) const { return *this + (-o); }

Phase Phase::operator-() const { return fraction(checked_sub(0, num_), den_); }

Phase Phase::scaled(std::int64_t k) const { return fraction(checked_mul(num_, k), den_); }

std::string Phase::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::optional<Phase> Phase::parse(std::string_view text, bool require_reduced) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos || slash == 0 || slash + 1 >= text.size())
    return std::nullopt;
  std::int64_t num = 0, den = 0;
  const char* nb = text.data();
  auto r1 = std::from_chars(nb, nb + slash, num);
  if (r1.ec != std::errc{} || r1.ptr != nb + slash) return std::nullopt;
  const char* db = text.data() + slash + 1;
  auto r2 = std::from_chars(db, text.data() + text.size(), den);
  if (r2.ec != std::errc{} || r2.ptr != text.data() + text.size()) return std::nullopt;
  if (den <= 0 || num < 0) return std::nullopt;
  if (require_reduced) {
    if (num >= den || std::gcd(num == 0 ? 1 : num, den) != 1) return std::nullopt;
    if (num == 0 && den != 1) return std::nullopt;
  }
  return fraction(num, den);
}

Phase lift_quarter(std::int64_t k) { return Phase::fraction(k, 4); }
Phase lift_eighth(std::int64_t k) { return Phase::fraction(k, 8); }
Phase lift_half(std::int64_t k) { return Phase::fraction(k, 2); }

}  // namespace fspt
