#pragma once
// Small helpers around GMP rationals. Every coefficient in this project is
// an exact mpq_class; no floating point anywhere.

#include <gmpxx.h>

#include <string>

#include "rh4/errors.hpp"

namespace rh4 {

inline bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

// Converts an exact integer rational to long, throwing on failure.
inline long integer_value(const mpq_class& q, const char* what) {
  if (!is_integer(q))
    throw internal_error(std::string(what) + ": expected integer, got " +
                         q.get_str());
  mpz_class n = q.get_num();
  if (!n.fits_slong_p())
    throw domain_error(std::string(what) + ": value " + n.get_str() +
                       " exceeds machine range");
  return n.get_si();
}

}  // namespace rh4
