#ifndef COAMAP_NUMERIC_HPP
#define COAMAP_NUMERIC_HPP

#include <gmpxx.h>

#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

namespace coamap {

// All exact arithmetic in the library runs on GMP scalars.  Int is an
// arbitrary-precision integer, Rat a canonical (reduced, positive
// denominator) rational.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Floor and ceiling division with sign handling matching mathematical
// convention (not C truncation).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int rat_ceil(const Rat& r) { return ceil_div(r.get_num(), r.get_den()); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline double to_double(const Rat& r) { return r.get_d(); }
inline double to_double(const Int& z) { return z.get_d(); }

inline std::string to_string(const Int& z) { return z.get_str(); }

// "p/q" with the "/q" part omitted for integers.
inline std::string to_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Shortest decimal representation that round-trips the double exactly.
inline std::string double_str(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace coamap

#endif
