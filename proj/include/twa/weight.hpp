#pragma once

/**
 * @file weight.hpp
 * @brief Exact tropical scalars.
 *
 * A Weight is either a rational number or the semiring zero. Which
 * infinity the zero stands for (-inf in max-plus, +inf in min-plus, false
 * in the Boolean semiring) is decided by the SemiringTag passed to each
 * operation, so the same value type serves every tag and files keep the
 * weights they were written with.
 */

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace twa {

using Rational = mpq_class;

enum class SemiringTag { MaxPlus, MinPlus, Boolean, MaxPlusPair };

std::string_view to_string(SemiringTag tag);

class Weight {
 public:
  /// The semiring zero.
  Weight() = default;
  Weight(const Rational& value) : finite_(true), value_(value) {
    value_.canonicalize();
  }
  Weight(long value) : finite_(true), value_(value) {}

  static Weight zero() { return Weight(); }
  /// The multiplicative unit, i.e. the rational 0.
  static Weight one() { return Weight(0L); }

  bool is_zero() const noexcept { return !finite_; }
  bool is_finite() const noexcept { return finite_; }

  /// Precondition: is_finite().
  const Rational& value() const;

  friend bool operator==(const Weight& x, const Weight& y) {
    if (x.finite_ != y.finite_) return false;
    return !x.finite_ || x.value_ == y.value_;
  }

 private:
  bool finite_ = false;
  Rational value_;
};

/// max, min or logical-or, with zero neutral.
Weight oplus(const Weight& x, const Weight& y, SemiringTag tag);
/// Rational sum, with zero absorbing.
Weight otimes(const Weight& x, const Weight& y, SemiringTag tag);

/// x |-> -x, the isomorphism between R_max and R_min. Zero maps to zero.
Weight negate_weight(const Weight& x);

/// Canonical morphism onto the Boolean semiring: zero stays zero, every
/// finite value becomes the Boolean one (the rational 0).
Weight boolean_projection(const Weight& x);

/// Throws SemiringError unless `x` is a legal element under `tag`.
void check_conforms(const Weight& x, SemiringTag tag);

// Convenience predicates on the natural order of the rationals. A zero
// weight satisfies none of them.
inline bool is_positive(const Weight& x) { return x.is_finite() && sgn(x.value()) > 0; }
inline bool is_nonpositive(const Weight& x) { return x.is_finite() && sgn(x.value()) <= 0; }
inline bool is_exactly_zero_rational(const Weight& x) {
  return x.is_finite() && sgn(x.value()) == 0;
}

/// Element of R_max x R_max as used by the pair product. Either both
/// coordinates are finite or the pair is the zero (zero, zero).
class PairWeight {
 public:
  PairWeight() = default;
  PairWeight(const Rational& first, const Rational& second) : first_(first), second_(second) {}

  static PairWeight zero() { return PairWeight(); }

  bool is_zero() const noexcept { return first_.is_zero(); }
  const Weight& first() const noexcept { return first_; }
  const Weight& second() const noexcept { return second_; }

  friend bool operator==(const PairWeight&, const PairWeight&) = default;

 private:
  Weight first_;
  Weight second_;
};

/// Componentwise max / sum. `tag` must be MaxPlusPair.
PairWeight oplus(const PairWeight& x, const PairWeight& y, SemiringTag tag);
PairWeight otimes(const PairWeight& x, const PairWeight& y, SemiringTag tag);
void check_conforms(const PairWeight& x, SemiringTag tag);

// Literal syntax shared by the file format and the CLI: optional sign,
// then an integer, a fraction `p/q`, or a decimal with at most nine
// fractional digits. Decimals are converted exactly.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

/// Finite weights print as rationals; zero prints as "-inf", "+inf" or
/// "zero" depending on the tag.
std::string format_weight(const Weight& x, SemiringTag tag);
std::string format_weight(const PairWeight& x, SemiringTag tag);

std::ostream& operator<<(std::ostream& os, const Weight& x);
std::ostream& operator<<(std::ostream& os, const PairWeight& x);

}  // namespace twa
