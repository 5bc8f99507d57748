#include "corekit/classnumbers.hpp"

#include <charconv>
#include <numeric>

#include "corekit/errors.hpp"

namespace corekit {

ExactRational::ExactRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(Errc::InvalidArgument, "zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

ExactRational operator+(const ExactRational& a, const ExactRational& b) {
  const std::int64_t l = std::lcm(a.den_, b.den_);
  return ExactRational(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

ExactRational operator-(const ExactRational& a, const ExactRational& b) {
  return a + ExactRational(-b.num_, b.den_);
}

ExactRational operator*(const ExactRational& a, const ExactRational& b) {
  const std::int64_t g1 = std::gcd(a.num_, b.den_);
  const std::int64_t g2 = std::gcd(b.num_, a.den_);
  return ExactRational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
  return (a - b).num_ <=> 0;
}

std::string format_rational(const ExactRational& r) {
  if (r.is_integer()) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ExactRational parse_rational(std::string_view text) {
  auto parse_part = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(Errc::Parse, "malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRational(parse_part(text));
  const std::int64_t den = parse_part(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::Parse, "zero denominator in '" + std::string(text) + "'");
  return ExactRational(parse_part(text.substr(0, slash)), den);
}

bool QuadraticForm::is_reduced() const noexcept {
  const std::int64_t abs_b = b < 0 ? -b : b;
  if (a <= 0 || discriminant() >= 0) return false;
  if (!(abs_b <= a && a <= c)) return false;
  if ((abs_b == a || a == c) && b < 0) return false;
  return true;
}

std::vector<QuadraticForm> reduced_forms(std::int64_t D) {
  if (D < 1) throw Error(Errc::InvalidArgument, "reduced_forms needs D >= 1");
  std::vector<QuadraticForm> out;
  if (D % 4 == 1 || D % 4 == 2) return out;
  // |b| <= a <= c forces 3b^2 <= D.
  for (std::int64_t b = D % 2; 3 * b * b <= D; b += 2) {
    const std::int64_t ac = (b * b + D) / 4;
    for (std::int64_t a = std::max<std::int64_t>(b, 1); a * a <= ac; ++a) {
      if (ac % a != 0) continue;
      const std::int64_t c = ac / a;
      out.push_back({a, b, c});
      if (0 < b && b < a && a < c) out.push_back({a, -b, c});
    }
  }
  return out;
}

ExactRational form_weight(const QuadraticForm& f) {
  if (f.a == f.b && f.b == f.c) return ExactRational(1, 3);
  if (f.b == 0 && f.a == f.c) return ExactRational(1, 2);
  return ExactRational(1);
}

ExactRational hurwitz(const ExactRational& arg) {
  if (arg >= ExactRational(0)) {
    throw Error(Errc::NonNegativeArgument, "Hurwitz class number needs a negative argument, got " + format_rational(arg));
  }
  if (!arg.is_integer()) return ExactRational(0);
  ExactRational total(0);
  for (const QuadraticForm& f : reduced_forms(-arg.numerator())) total += form_weight(f);
  return total;
}

int sc2_count(long n) {
  for (long k = 1; k * (k + 1) / 2 <= n; ++k) {
    if (k * (k + 1) / 2 == n) return 1;
  }
  return 0;
}

int sc3_count(long n) {
  for (long r = 1; r * (3 * r - 2) <= n; ++r) {
    if (r * (3 * r - 2) == n || r * (3 * r + 2) == n) return 1;
  }
  return 0;
}

namespace {

std::uint64_t to_count(const ExactRational& value, long n) {
  if (!value.is_integer() || value.numerator() < 0) {
    throw Error(Errc::NonIntegralResult,
                "class number combination for n=" + std::to_string(n) + " is " + format_rational(value));
  }
  return static_cast<std::uint64_t>(value.numerator());
}

}  // namespace

bool sc7_ono_raji_applies(long n) noexcept {
  return n >= 1 && n % 2 == 1 && n % 7 != 5;
}

std::uint64_t sc7_ono_raji(long n) {
  if (!sc7_ono_raji_applies(n)) {
    throw Error(Errc::PreconditionViolated, "odd n >= 1 with n != 5 (mod 7) required, got " + std::to_string(n));
  }
  if (n % 4 == 1) return to_count(ExactRational(1, 4) * hurwitz(ExactRational(-28 * n - 56)), n);
  if (n % 8 == 3) return to_count(ExactRational(1, 2) * hurwitz(ExactRational(-7 * n - 14)), n);
  return 0;  // n = 7 (mod 8)
}

std::uint64_t sc7_bkm(long n) {
  if (n < 1) throw Error(Errc::PreconditionViolated, "n >= 1 required, got " + std::to_string(n));
  const ExactRational sum = hurwitz(ExactRational(-28 * n - 56)) - hurwitz(ExactRational(-4 * n - 8, 7)) -
                            ExactRational(2) * hurwitz(ExactRational(-7 * n - 14)) +
                            ExactRational(2) * hurwitz(ExactRational(-n - 2, 7));
  return to_count(ExactRational(1, 4) * sum, n);
}

}  // namespace corekit
