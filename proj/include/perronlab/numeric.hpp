#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

#include "perronlab/errors.hpp"

namespace perronlab {

using Rational = mpq_class;

// Parses "3", "-0.125", "7/2" into an exact rational.
Rational rational_from_decimal(std::string_view s);

// Renders a rational as a decimal string. Exact when the reduced
// denominator is of the form 2^a 5^b; otherwise rounded to max_digits
// significant digits and suffix-free (still a plain decimal literal).
std::string decimal_from_rational(const Rational& q, int max_digits = 40);

// Thin RAII wrapper over mpfr_t with value semantics.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] guaranteed to contain the represented value.
// All operations round outward, so enclosures stay valid.
class Interval {
 public:
  Interval() : lo_(2), hi_(2) {}
  Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {}

  static Interval exact_int(long n, mpfr_prec_t prec);
  static Interval exact(const mpz_class& n, mpfr_prec_t prec);
  static Interval from_rational(const Rational& q, mpfr_prec_t prec);
  // Treats the decimal string as the true value up to one ulp of its last
  // digit (the convention for truncated constant tables).
  static Interval from_decimal_string(std::string_view digits, mpfr_prec_t prec);
  static Interval point(const Real& x);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t prec() const { return lo_.prec(); }

  Interval add(const Interval& o) const;
  Interval sub(const Interval& o) const;
  Interval neg() const;
  Interval mul(const Interval& o) const;
  Interval mul_int(long k) const;
  Interval mul_z(const mpz_class& k) const;
  Interval div(const Interval& o) const;  // requires o sign-definite
  Interval recip() const;                 // requires sign-definite
  Interval abs() const;
  // cos/sin via midpoint evaluation plus a Lipschitz width bound; always valid.
  Interval cos() const;
  Interval sin() const;

  // Certified three-way comparisons: +1 / -1 when provable, 0 when the
  // enclosures are inconclusive.
  int cmp(const Rational& q) const;      // sign of (value - q), 0 if straddles
  int cmp(const Interval& o) const;
  bool certainly_less(const Rational& q) const { return cmp(q) < 0; }
  bool certainly_greater(const Rational& q) const { return cmp(q) > 0; }

  bool contains_zero() const;
  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }

  Real width() const;
  Real mid() const;
  double mid_double() const { return mid().to_double(); }
  // Exact rational value of the midpoint (mpfr values are dyadic rationals).
  Rational mid_rational() const;
  Rational width_rational() const;

  std::string to_decimal(int digits = 40) const;  // midpoint decimal

 private:
  Real lo_, hi_;
};

// pi and 2*pi enclosures at the requested precision (from mpfr_const_pi,
// used by geometry and sanity checks; the diophantine module keeps its own
// decimal-table constant).
Interval pi_interval(mpfr_prec_t prec);

}  // namespace perronlab
