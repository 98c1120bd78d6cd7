#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jacring {

// Element of a prime field F_p.  Every value carries its modulus so mixed
// arithmetic is rejected instead of silently wrapping; p must be an odd prime
// below 2^62 (products are formed in 128-bit intermediates).
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t prime) : v(value % prime), p(prime) {}

  bool is_zero() const { return v == 0; }
};

inline void check_same_field(const Fp& a, const Fp& b) {
  if (a.p != b.p)
    throw std::invalid_argument("prime-field arithmetic with mismatched moduli: " +
                                std::to_string(a.p) + " vs " + std::to_string(b.p));
}

inline Fp operator+(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  std::uint64_t s = a.v + b.v;
  if (s >= a.p) s -= a.p;
  return Fp{s, a.p};
}

inline Fp operator-(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  std::uint64_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
  return Fp{s, a.p};
}

inline Fp operator-(const Fp& a) {
  return Fp{a.v == 0 ? 0 : a.p - a.v, a.p};
}

inline Fp operator*(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  unsigned __int128 prod = static_cast<unsigned __int128>(a.v) * b.v;
  return Fp{static_cast<std::uint64_t>(prod % a.p), a.p};
}

// Extended Euclid; throws on non-invertible input (only 0 mod p).
inline Fp inverse(const Fp& a) {
  if (a.v == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(a.p), new_r = static_cast<std::int64_t>(a.v);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t; new_t = tmp;
    tmp = r - q * new_r;
    r = new_r; new_r = tmp;
  }
  if (r != 1) throw std::domain_error("modulus is not prime: gcd != 1 in F_p inverse");
  if (t < 0) t += static_cast<std::int64_t>(a.p);
  return Fp{static_cast<std::uint64_t>(t), a.p};
}

inline Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }

inline Fp& operator+=(Fp& a, const Fp& b) { a = a + b; return a; }
inline Fp& operator-=(Fp& a, const Fp& b) { a = a - b; return a; }
inline Fp& operator*=(Fp& a, const Fp& b) { a = a * b; return a; }
inline Fp& operator/=(Fp& a, const Fp& b) { a = a / b; return a; }

inline bool operator==(const Fp& a, const Fp& b) { return a.p == b.p && a.v == b.v; }
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline Fp one_like(const Fp& model) { return Fp{1, model.p}; }
inline Fp from_int_like(const Fp& model, long long x) {
  long long m = x % static_cast<long long>(model.p);
  if (m < 0) m += static_cast<long long>(model.p);
  return Fp{static_cast<std::uint64_t>(m), model.p};
}
inline std::string to_string(const Fp& a) { return std::to_string(a.v); }

// Deterministic Miller–Rabin for 64-bit inputs (the listed witness set is
// exact for this range).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                              31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t acc = 1;
    base %= n;
    while (exp) {
      if (exp & 1) acc = mulmod(acc, base);
      base = mulmod(base, base);
      exp >>= 1;
    }
    return acc;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                          37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Factory for prime-field elements; the only place a modulus enters from outside.
struct FpContext {
  std::uint64_t p;
  explicit FpContext(std::uint64_t prime) : p(prime) {
    if (prime < 3 || prime >= (1ull << 62) || !is_prime_u64(prime))
      throw std::invalid_argument("prime-field modulus must be an odd prime >= 3 and < 2^62");
  }
  Fp zero() const { return Fp{0, p}; }
  Fp one() const { return Fp{1, p}; }
  Fp from_int(long long x) const { return from_int_like(Fp{0, p}, x); }
};

}  // namespace jacring
