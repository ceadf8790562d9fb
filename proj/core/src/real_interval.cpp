#include <wsieve/real_interval.hpp>

#include <algorithm>
#include <stdexcept>

namespace wsieve {

RealInterval::RealInterval(unsigned prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(const RealInterval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

RealInterval RealInterval::exact(long v, unsigned prec) {
  RealInterval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(uint64_t v, unsigned prec) {
  static_assert(sizeof(unsigned long) == sizeof(uint64_t));
  RealInterval r(prec);
  mpfr_set_ui(r.lo_, v, MPFR_RNDD);
  mpfr_set_ui(r.hi_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(const Integer& v, unsigned prec) {
  RealInterval r(prec);
  mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(const Rational& q, unsigned prec) {
  RealInterval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

RealInterval RealInterval::exact(double v, unsigned prec) {
  RealInterval r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::with_error(double v, double err, unsigned prec) {
  RealInterval r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_sub_d(r.lo_, r.lo_, err, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  mpfr_add_d(r.hi_, r.hi_, err, MPFR_RNDU);
  return r;
}

RealInterval RealInterval::pi(unsigned prec) {
  RealInterval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

bool possibly_le(const RealInterval& a, const RealInterval& b) {
  return mpfr_cmp(a.lo_, b.hi_) <= 0;
}

double RealInterval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double RealInterval::mid() const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_ui(m, m, 2, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

double RealInterval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool RealInterval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool RealInterval::certainly_le(const Rational& q) const {
  return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0;
}

bool RealInterval::certainly_ge(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0;
}

bool RealInterval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }

bool RealInterval::possibly_ge(const Rational& q) const {
  return mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);

  // lo = min over endpoint products rounded down, hi = max rounded up.
  bool first = true;
  auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_mul(t, x, y, MPFR_RNDD);
    if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, x, y, MPFR_RNDU);
    if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    first = false;
  };
  consider(a.lo_, b.lo_);
  consider(a.lo_, b.hi_);
  consider(a.hi_, b.lo_);
  consider(a.hi_, b.hi_);

  mpfr_clear(t);
  return r;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (mpfr_sgn(b.lo_) <= 0 && mpfr_sgn(b.hi_) >= 0) {
    throw std::domain_error("interval division by an enclosure of zero");
  }
  RealInterval r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  bool first = true;
  auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
    mpfr_div(t, x, y, MPFR_RNDD);
    if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
    mpfr_div(t, x, y, MPFR_RNDU);
    if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
    first = false;
  };
  consider(a.lo_, b.lo_);
  consider(a.lo_, b.hi_);
  consider(a.hi_, b.lo_);
  consider(a.hi_, b.hi_);
  mpfr_clear(t);
  return r;
}

RealInterval sqrt(const RealInterval& x) {
  RealInterval r(x.prec_);
  mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealInterval cbrt(const RealInterval& x) {
  RealInterval r(x.prec_);
  mpfr_cbrt(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_cbrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealInterval log(const RealInterval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw std::domain_error("interval log needs x > 0");
  RealInterval r(x.prec_);
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealInterval log2(const RealInterval& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw std::domain_error("interval log2 needs x > 0");
  RealInterval r(x.prec_);
  mpfr_log2(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log2(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealInterval exp(const RealInterval& x) {
  RealInterval r(x.prec_);
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

RealInterval pow(const RealInterval& base, const RealInterval& e) {
  return exp(e * log(base));
}

}  // namespace wsieve
