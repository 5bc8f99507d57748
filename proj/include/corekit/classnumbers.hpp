#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace corekit {

/// Exact rational in lowest terms with a positive denominator.
class ExactRational {
 public:
  constexpr ExactRational() = default;
  ExactRational(std::int64_t numerator, std::int64_t denominator = 1);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b);
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b);
  ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }

  friend bool operator==(const ExactRational&, const ExactRational&) = default;
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// "p/q" or "p"; integers print without a denominator.
std::string format_rational(const ExactRational& r);
ExactRational parse_rational(std::string_view text);

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadraticForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;

  std::int64_t discriminant() const noexcept { return b * b - 4 * a * c; }
  bool is_reduced() const noexcept;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Reduced positive-definite forms of discriminant -D, ordered by b (as |b|)
/// then a, with (a, b, c) before (a, -b, c). Empty when D is 1 or 2 mod 4.
std::vector<QuadraticForm> reduced_forms(std::int64_t D);

/// Class weight: 1/3 for multiples of x^2+xy+y^2, 1/2 for multiples of x^2+y^2, else 1.
ExactRational form_weight(const QuadraticForm& f);

/// Hurwitz class number H(arg) for arg < 0; zero off the integers.
/// Throws Errc::NonNegativeArgument if arg >= 0.
ExactRational hurwitz(const ExactRational& arg);
inline ExactRational hurwitz_of_discriminant(std::int64_t D) { return hurwitz(ExactRational(-D)); }

/// Closed-form counts of self-conjugate 2- and 3-cores (each 0 or 1).
int sc2_count(long n);
int sc3_count(long n);

/// sc_7(n) for odd n not 5 mod 7. Throws Errc::PreconditionViolated otherwise.
std::uint64_t sc7_ono_raji(long n);
bool sc7_ono_raji_applies(long n) noexcept;

/// sc_7(n) for every n >= 1 as a four-term class number combination.
std::uint64_t sc7_bkm(long n);

}  // namespace corekit
