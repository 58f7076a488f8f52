#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricform {

using Int = mpz_class;
using Rat = mpq_class;
using Cplx = std::complex<double>;

// Raised on malformed user input (files, flags, points outside a domain).
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a property the theory guarantees fails to hold; always a bug.
struct theorem_violation : std::logic_error {
  explicit theorem_violation(const std::string& msg) : std::logic_error(msg) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw input_error("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// base^e for integer e of either sign; base must be nonzero when e < 0.
inline Rat pow_rat(const Rat& base, const Int& e) {
  if (e >= 0) {
    if (!e.fits_ulong_p()) throw input_error("exponent too large");
    Rat num(pow_int(base.get_num(), e.get_ui()));
    Rat den(pow_int(base.get_den(), e.get_ui()));
    return num / den;
  }
  if (base == 0) throw input_error("zero base with negative exponent");
  Int m = -e;
  if (!m.fits_ulong_p()) throw input_error("exponent too large");
  Rat num(pow_int(base.get_den(), m.get_ui()));
  Rat den(pow_int(base.get_num(), m.get_ui()));
  return num / den;
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline Cplx pow_cplx(const Cplx& base, const Int& e) {
  if (e == 0) return Cplx(1.0, 0.0);
  long k = e.get_si();
  Cplx acc(1.0, 0.0);
  Cplx b = k > 0 ? base : Cplx(1.0, 0.0) / base;
  long m = k > 0 ? k : -k;
  while (m > 0) {
    if (m & 1) acc *= b;
    b *= b;
    m >>= 1;
  }
  return acc;
}

inline std::string rat_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw input_error("bad rational literal: " + s);
  }
}

}  // namespace toricform
