#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace pfd {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
// verification failure -> 1, precondition/cap -> 2, precision ambiguity -> 3.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rat& q) { return q.str(); }

inline Rat parse_rat(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw PreconditionError("not a rational: " + s);
  }
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace pfd
