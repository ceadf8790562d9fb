#pragma once

#include <mpfr.h>

#include <wsieve/numeric.hpp>

#include <cstdint>

namespace wsieve {

// Default working precision for bound evaluation: 256 bits is about 77
// decimal digits, comfortably past the 50 digits the bound checks need.
inline constexpr unsigned kDefaultPrec = 256;

// Directed-rounding enclosure [lo, hi] of a real number. Every operation
// rounds lo toward -inf and hi toward +inf, so the true value stays inside;
// verdicts derived from an enclosure cannot flip when precision increases.
class RealInterval {
 public:
  explicit RealInterval(unsigned prec = kDefaultPrec);
  RealInterval(const RealInterval& o);
  RealInterval(RealInterval&& o) noexcept;
  RealInterval& operator=(const RealInterval& o);
  RealInterval& operator=(RealInterval&& o) noexcept;
  ~RealInterval();

  static RealInterval exact(long v, unsigned prec = kDefaultPrec);
  static RealInterval exact(uint64_t v, unsigned prec = kDefaultPrec);
  static RealInterval exact(const Integer& v, unsigned prec = kDefaultPrec);
  static RealInterval exact(const Rational& q, unsigned prec = kDefaultPrec);
  // Doubles are dyadic rationals, so this is exact as well.
  static RealInterval exact(double v, unsigned prec = kDefaultPrec);
  // [v - err, v + err]
  static RealInterval with_error(double v, double err, unsigned prec = kDefaultPrec);
  static RealInterval pi(unsigned prec = kDefaultPrec);

  unsigned precision() const { return prec_; }
  double lo_double() const;   // rounded down
  double hi_double() const;   // rounded up
  double mid() const;
  double width() const;       // hi - lo, rounded up

  bool contains(const Rational& q) const;
  // Certain comparisons: true only when the whole enclosure satisfies them.
  bool certainly_le(const Rational& q) const;   // hi <= q
  bool certainly_ge(const Rational& q) const;   // lo >= q
  bool certainly_positive() const;
  // Possible comparison: false only when the whole enclosure refutes it.
  bool possibly_ge(const Rational& q) const;    // hi >= q

  // a <= b is not refuted: a.lo <= b.hi.
  friend bool possibly_le(const RealInterval& a, const RealInterval& b);

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  // Divisor enclosure must not straddle zero.
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);

  friend RealInterval sqrt(const RealInterval& x);   // x >= 0
  friend RealInterval cbrt(const RealInterval& x);
  friend RealInterval log(const RealInterval& x);    // natural log, x > 0
  friend RealInterval log2(const RealInterval& x);   // x > 0
  friend RealInterval exp(const RealInterval& x);
  // base^e for base > 0, via exp(e * log(base)).
  friend RealInterval pow(const RealInterval& base, const RealInterval& e);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
  unsigned prec_;
};

}  // namespace wsieve
