#include "twa/weight.hpp"

#include <cctype>
#include <ostream>

#include "twa/errors.hpp"

namespace twa {

std::string_view to_string(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::MaxPlus: return "max-plus";
    case SemiringTag::MinPlus: return "min-plus";
    case SemiringTag::Boolean: return "boolean";
    case SemiringTag::MaxPlusPair: return "max-plus-pair";
  }
  return "?";
}

const Rational& Weight::value() const {
  if (!finite_) throw SemiringError("value() of the semiring zero");
  return value_;
}

namespace {

void require_scalar_tag(SemiringTag tag) {
  if (tag == SemiringTag::MaxPlusPair) {
    throw SemiringError("scalar weight used with the max-plus-pair semiring");
  }
}

}  // namespace

Weight oplus(const Weight& x, const Weight& y, SemiringTag tag) {
  require_scalar_tag(tag);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  switch (tag) {
    case SemiringTag::MaxPlus: return x.value() >= y.value() ? x : y;
    case SemiringTag::MinPlus: return x.value() <= y.value() ? x : y;
    default: return Weight::one();
  }
}

Weight otimes(const Weight& x, const Weight& y, SemiringTag tag) {
  require_scalar_tag(tag);
  if (x.is_zero() || y.is_zero()) return Weight::zero();
  if (tag == SemiringTag::Boolean) return Weight::one();
  return Weight(Rational(x.value() + y.value()));
}

Weight negate_weight(const Weight& x) {
  if (x.is_zero()) return x;
  return Weight(Rational(-x.value()));
}

Weight boolean_projection(const Weight& x) {
  return x.is_zero() ? Weight::zero() : Weight::one();
}

void check_conforms(const Weight& x, SemiringTag tag) {
  require_scalar_tag(tag);
  if (tag == SemiringTag::Boolean && x.is_finite() && sgn(x.value()) != 0) {
    throw SemiringError("Boolean weight must be zero or one, got " +
                        format_rational(x.value()));
  }
}

PairWeight oplus(const PairWeight& x, const PairWeight& y, SemiringTag tag) {
  if (tag != SemiringTag::MaxPlusPair) throw SemiringError("pair weight needs max-plus-pair");
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const Rational& a = x.first().value() >= y.first().value() ? x.first().value()
                                                            : y.first().value();
  const Rational& b = x.second().value() >= y.second().value() ? x.second().value()
                                                              : y.second().value();
  return PairWeight(a, b);
}

PairWeight otimes(const PairWeight& x, const PairWeight& y, SemiringTag tag) {
  if (tag != SemiringTag::MaxPlusPair) throw SemiringError("pair weight needs max-plus-pair");
  if (x.is_zero() || y.is_zero()) return PairWeight::zero();
  return PairWeight(Rational(x.first().value() + y.first().value()),
                    Rational(x.second().value() + y.second().value()));
}

void check_conforms(const PairWeight&, SemiringTag tag) {
  if (tag != SemiringTag::MaxPlusPair) throw SemiringError("pair weight needs max-plus-pair");
}

Rational parse_rational(std::string_view text) {
  auto fail = [&](const char* why) -> Rational {
    throw ParseError(0, "bad weight literal '" + std::string(text) + "': " + why);
  };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };
  std::size_t int_end = digits(pos);
  if (int_end == pos) return fail("expected digits");
  mpz_class numerator(std::string(text.substr(pos, int_end - pos)), 10);
  mpz_class denominator = 1;
  pos = int_end;
  if (pos < text.size()) {
    if (text[pos] == '/') {
      std::size_t end = digits(pos + 1);
      if (end == pos + 1 || end != text.size()) return fail("expected p/q");
      denominator = mpz_class(std::string(text.substr(pos + 1, end - pos - 1)), 10);
      if (denominator == 0) return fail("zero denominator");
    } else if (text[pos] == '.') {
      std::size_t end = digits(pos + 1);
      std::size_t frac = end - pos - 1;
      if (frac == 0 || end != text.size()) return fail("expected fractional digits");
      if (frac > 9) return fail("more than 9 fractional digits");
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac);
      numerator = numerator * scale + mpz_class(std::string(text.substr(pos + 1, frac)), 10);
      denominator = scale;
    } else {
      return fail("unexpected character");
    }
  }
  Rational value(negative ? mpz_class(-numerator) : numerator, denominator);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

std::string format_weight(const Weight& x, SemiringTag tag) {
  if (x.is_finite()) return format_rational(x.value());
  switch (tag) {
    case SemiringTag::MaxPlus: return "-inf";
    case SemiringTag::MinPlus: return "+inf";
    default: return "zero";
  }
}

std::string format_weight(const PairWeight& x, SemiringTag) {
  if (x.is_zero()) return "zero";
  return format_rational(x.first().value()) + "," + format_rational(x.second().value());
}

std::ostream& operator<<(std::ostream& os, const Weight& x) {
  return os << (x.is_finite() ? format_rational(x.value()) : std::string("zero"));
}

std::ostream& operator<<(std::ostream& os, const PairWeight& x) {
  return os << format_weight(x, SemiringTag::MaxPlusPair);
}

}  // namespace twa
