#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace twistcoh {

  using Integer = boost::multiprecision::cpp_int;

  inline Integer abs(Integer const& x) {
    return x < 0 ? Integer(-x) : x;
  }

  inline Integer gcd(Integer a, Integer b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
      Integer r = a % b;
      a         = std::move(b);
      b         = std::move(r);
    }
    return a;
  }

  // Representative of a in [0, n) for n > 0.
  inline Integer floor_mod(Integer const& a, Integer const& n) {
    Integer r = a % n;
    if (r < 0) {
      r += n;
    }
    return r;
  }

  // Inverse of a modulo n, or 0 when a is not a unit (n >= 2).
  inline Integer inverse_mod(Integer const& a, Integer const& n) {
    Integer old_r = floor_mod(a, n), r = n;
    Integer old_s = 1, s = 0;
    while (r != 0) {
      Integer q   = old_r / r;
      Integer tmp = old_r - q * r;
      old_r       = std::move(r);
      r           = std::move(tmp);
      tmp         = old_s - q * s;
      old_s       = std::move(s);
      s           = std::move(tmp);
    }
    if (old_r != 1) {
      return 0;
    }
    return floor_mod(old_s, n);
  }

  inline std::string to_string(Integer const& x) {
    return x.str();
  }

}  // namespace twistcoh
