#pragma once
#include <cstdint>
#include <numeric>

namespace irs {

// Minimal exact rational on int64 with __int128 intermediates.
// Enough for expected-weight bookkeeping; not a general number type.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num * b.den + (__int128)b.num * a.den;
    __int128 d = (__int128)a.den * b.den;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r; r.num = (long long)n; r.den = (long long)d; return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat{-b.num, b.den}; }
  friend Rat operator*(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num * b.num;
    __int128 d = (__int128)a.den * b.den;
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r; r.num = (long long)n; r.den = (long long)d; return r;
  }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num * b.den < (__int128)b.num * a.den;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }

  // floor(num/den)
  long long floor() const {
    long long q = num / den, r = num % den;
    return (r != 0 && num < 0) ? q - 1 : q;
  }
  // round half away from zero
  long long round() const {
    long long f = floor();
    Rat frac = *this - Rat{f};
    return 2 * frac.num >= frac.den ? f + 1 : f;
  }
  double to_double() const { return (double)num / (double)den; }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a;
  }
};

}  // namespace irs
