#include "perronlab/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>

namespace perronlab {

Rational rational_from_decimal(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw_invalid("empty numeric literal");

  auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    Rational num = rational_from_decimal(s.substr(0, slash));
    Rational den = rational_from_decimal(s.substr(slash + 1));
    if (den == 0) throw_invalid("division by zero in rational literal");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string intpart, fracpart;
  long exp10 = 0;
  size_t i = 0;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) intpart += s[i];
  if (i < s.size() && s[i] == '.') {
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) fracpart += s[i];
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) { eneg = s[i] == '-'; ++i; }
    std::string digits;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) digits += s[i];
    if (digits.empty()) throw_invalid("malformed exponent in numeric literal");
    exp10 = std::strtol(digits.c_str(), nullptr, 10);
    if (eneg) exp10 = -exp10;
  }
  if (i != s.size() || (intpart.empty() && fracpart.empty()))
    throw_invalid("malformed numeric literal: '" + std::string(s) + "'");

  mpz_class num(intpart.empty() ? std::string("0") : intpart);
  for (char c : fracpart) {
    num *= 10;
    num += c - '0';
  }
  mpz_class den(1);
  long shift = exp10 - static_cast<long>(fracpart.size());
  mpz_class ten(10);
  if (shift >= 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    num *= f;
  } else {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  Rational r(num, den);
  r.canonicalize();
  if (neg) r = -r;
  return r;
}

namespace {

// True if d = 2^a 5^b, so the fraction has a finite decimal expansion.
bool denominator_decimal_friendly(mpz_class d) {
  while (mpz_even_p(d.get_mpz_t())) d /= 2;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
  return d == 1;
}

}  // namespace

std::string decimal_from_rational(const Rational& q, int max_digits) {
  if (q == 0) return "0";
  mpz_class num = q.get_num(), den = q.get_den();
  bool neg = num < 0;
  if (neg) num = -num;

  std::string out;
  if (denominator_decimal_friendly(den)) {
    // Scale so the denominator becomes a power of ten.
    mpz_class d = den;
    unsigned long twos = 0, fives = 0;
    while (mpz_even_p(d.get_mpz_t())) { d /= 2; ++twos; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
    unsigned long k = std::max(twos, fives);
    mpz_class scale, five(5), two(2), f;
    mpz_pow_ui(f.get_mpz_t(), five.get_mpz_t(), k - fives);
    scale = f;
    mpz_pow_ui(f.get_mpz_t(), two.get_mpz_t(), k - twos);
    scale *= f;
    mpz_class scaled = num * scale;  // value = scaled / 10^k
    std::string digits = scaled.get_str();
    if (k == 0) {
      out = digits;
    } else if (digits.size() > k) {
      out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    } else {
      out = "0." + std::string(k - digits.size(), '0') + digits;
    }
    // Trim trailing zeros after a decimal point.
    if (out.find('.') != std::string::npos) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
  } else {
    // Round to max_digits significant digits via mpfr.
    Real x(static_cast<mpfr_prec_t>(max_digits * 4 + 32));
    mpfr_set_q(x.get(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, max_digits, x.get(), MPFR_RNDN);
    std::string digits(s);
    mpfr_free_str(s);
    if (!digits.empty() && digits[0] == '-') digits = digits.substr(1);
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (e <= 0) {
      out = "0." + std::string(static_cast<size_t>(-e), '0') + digits;
    } else if (static_cast<size_t>(e) >= digits.size()) {
      out = digits + std::string(static_cast<size_t>(e) - digits.size(), '0');
    } else {
      out = digits.substr(0, static_cast<size_t>(e)) + "." + digits.substr(static_cast<size_t>(e));
    }
  }
  return neg ? "-" + out : out;
}

Interval Interval::exact_int(long n, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_si(lo.get(), n, MPFR_RNDD);
  mpfr_set_si(hi.get(), n, MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::exact(const mpz_class& n, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_z(lo.get(), n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), n.get_mpz_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_set_q(lo.get(), q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), q.get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::from_decimal_string(std::string_view digits, mpfr_prec_t prec) {
  // Exact rational of the literal, then widen by one ulp of the last digit.
  Rational q = rational_from_decimal(digits);
  size_t frac = 0;
  auto dot = digits.find('.');
  if (dot != std::string_view::npos) frac = digits.size() - dot - 1;
  mpz_class ten(10), p;
  mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(frac));
  Rational ulp(1, p);
  Real lo(prec), hi(prec);
  Rational qlo = q - ulp, qhi = q + ulp;
  mpfr_set_q(lo.get(), qlo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), qhi.get_mpq_t(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::point(const Real& x) {
  return Interval(x, x);
}

Interval Interval::add(const Interval& o) const {
  mpfr_prec_t p = std::max(prec(), o.prec());
  Real lo(p), hi(p);
  mpfr_add(lo.get(), lo_.get(), o.lo_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi_.get(), o.hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::sub(const Interval& o) const {
  mpfr_prec_t p = std::max(prec(), o.prec());
  Real lo(p), hi(p);
  mpfr_sub(lo.get(), lo_.get(), o.hi_.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), hi_.get(), o.lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::neg() const {
  Real lo(prec()), hi(prec());
  mpfr_neg(lo.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(hi.get(), lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::mul(const Interval& o) const {
  mpfr_prec_t p = std::max(prec(), o.prec());
  Real lo(p), hi(p), t(p);
  bool first = true;
  mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
  mpfr_srcptr b[2] = {o.lo_.get(), o.hi_.get()};
  for (auto x : a)
    for (auto y : b) {
      mpfr_mul(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t.get(), lo.get()) < 0) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t.get(), hi.get()) > 0) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::mul_int(long k) const {
  Real lo(prec()), hi(prec());
  if (k >= 0) {
    mpfr_mul_si(lo.get(), lo_.get(), k, MPFR_RNDD);
    mpfr_mul_si(hi.get(), hi_.get(), k, MPFR_RNDU);
  } else {
    mpfr_mul_si(lo.get(), hi_.get(), k, MPFR_RNDD);
    mpfr_mul_si(hi.get(), lo_.get(), k, MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::mul_z(const mpz_class& k) const {
  Real lo(prec()), hi(prec());
  if (k >= 0) {
    mpfr_mul_z(lo.get(), lo_.get(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), hi_.get(), k.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(lo.get(), hi_.get(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), lo_.get(), k.get_mpz_t(), MPFR_RNDU);
  }
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::recip() const {
  if (contains_zero()) throw_precision_exhausted("interval reciprocal across zero");
  Real lo(prec()), hi(prec());
  mpfr_ui_div(lo.get(), 1, hi_.get(), MPFR_RNDD);
  mpfr_ui_div(hi.get(), 1, lo_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval Interval::div(const Interval& o) const {
  return mul(o.recip());
}

Interval Interval::abs() const {
  if (mpfr_sgn(lo_.get()) >= 0) return *this;
  if (mpfr_sgn(hi_.get()) <= 0) return neg();
  Real lo(prec()), hi(prec()), t(prec());
  mpfr_set_zero(lo.get(), 1);
  mpfr_neg(t.get(), lo_.get(), MPFR_RNDU);
  if (mpfr_cmp(t.get(), hi_.get()) > 0)
    mpfr_set(hi.get(), t.get(), MPFR_RNDU);
  else
    mpfr_set(hi.get(), hi_.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

namespace {

// f(mid) +- (width/2 + 2 ulp) for 1-Lipschitz f, clamped to [-1, 1].
Interval lipschitz_eval(const Interval& x, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
  mpfr_prec_t p = x.prec();
  Real m(p), val(p), rad(p), lo(p), hi(p), one(p);
  mpfr_add(m.get(), x.lo().get(), x.hi().get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  f(val.get(), m.get(), MPFR_RNDN);
  mpfr_sub(rad.get(), x.hi().get(), x.lo().get(), MPFR_RNDU);
  mpfr_div_2ui(rad.get(), rad.get(), 1, MPFR_RNDU);
  // Two ulps absorb the rounding of f and of the midpoint.
  Real ulp(p);
  mpfr_set_ui_2exp(ulp.get(), 2, -p, MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), ulp.get(), MPFR_RNDU);
  mpfr_sub(lo.get(), val.get(), rad.get(), MPFR_RNDD);
  mpfr_add(hi.get(), val.get(), rad.get(), MPFR_RNDU);
  mpfr_set_si(one.get(), -1, MPFR_RNDD);
  if (mpfr_cmp(lo.get(), one.get()) < 0) mpfr_set(lo.get(), one.get(), MPFR_RNDD);
  mpfr_set_si(one.get(), 1, MPFR_RNDU);
  if (mpfr_cmp(hi.get(), one.get()) > 0) mpfr_set(hi.get(), one.get(), MPFR_RNDU);
  return Interval(lo, hi);
}

}  // namespace

Interval Interval::cos() const { return lipschitz_eval(*this, mpfr_cos); }
Interval Interval::sin() const { return lipschitz_eval(*this, mpfr_sin); }

int Interval::cmp(const Rational& q) const {
  if (mpfr_cmp_q(lo_.get(), q.get_mpq_t()) > 0) return 1;
  if (mpfr_cmp_q(hi_.get(), q.get_mpq_t()) < 0) return -1;
  return 0;
}

int Interval::cmp(const Interval& o) const {
  if (mpfr_cmp(lo_.get(), o.hi_.get()) > 0) return 1;
  if (mpfr_cmp(hi_.get(), o.lo_.get()) < 0) return -1;
  return 0;
}

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

Real Interval::width() const {
  Real w(prec());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w;
}

Real Interval::mid() const {
  Real m(prec());
  mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

namespace {

Rational rational_of_mpfr(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Rational(0);
  mpq_class q;
  mpf_class f(0, mpfr_get_prec(x) + 8);
  mpfr_get_f(f.get_mpf_t(), x, MPFR_RNDN);  // exact: target has enough precision
  q = Rational(f);
  q.canonicalize();
  return q;
}

}  // namespace

Rational Interval::mid_rational() const { return rational_of_mpfr(mid().get()); }

Rational Interval::width_rational() const { return rational_of_mpfr(width().get()); }

std::string Interval::to_decimal(int digits) const {
  Real m = mid();
  if (mpfr_zero_p(m.get())) return "0";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, m.get(), MPFR_RNDN);
  std::string raw(s);
  mpfr_free_str(s);
  bool neg = !raw.empty() && raw[0] == '-';
  if (neg) raw = raw.substr(1);
  while (raw.size() > 1 && raw.back() == '0') raw.pop_back();
  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + raw;
  } else if (static_cast<size_t>(e) >= raw.size()) {
    out = raw + std::string(static_cast<size_t>(e) - raw.size(), '0');
  } else {
    out = raw.substr(0, static_cast<size_t>(e)) + "." + raw.substr(static_cast<size_t>(e));
  }
  return neg ? "-" + out : out;
}

Interval pi_interval(mpfr_prec_t prec) {
  Real lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

}  // namespace perronlab
