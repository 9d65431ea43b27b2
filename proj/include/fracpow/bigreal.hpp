#ifndef FRACPOW_BIGREAL_HPP
#define FRACPOW_BIGREAL_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <ios>
#include <string>

namespace fracpow {

/// Arbitrary-precision real. Working precision is a process-wide setting,
/// expressed in bits and installed with set_precision_bits() before any
/// BigReal arithmetic takes place.
using BigReal =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline unsigned bits_to_digits10(unsigned bits) {
  // 1/log2(10) = 0.30103..., round up and pad so round-trips are lossless
  return static_cast<unsigned>(bits * 0.3010299957) + 3;
}

inline void set_precision_bits(unsigned bits) {
  BigReal::default_precision(bits_to_digits10(bits));
}

inline unsigned current_digits10() { return BigReal::default_precision(); }

/// Full-precision decimal string, suitable for caching.
inline std::string to_decimal(const BigReal& x) {
  return x.str(current_digits10() + 5, std::ios::scientific);
}

/// RAII guard that switches the working precision and restores it on exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(BigReal::default_precision()) {
    set_precision_bits(bits);
  }
  ~PrecisionGuard() { BigReal::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

}  // namespace fracpow

#endif  // FRACPOW_BIGREAL_HPP
