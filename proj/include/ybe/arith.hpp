#ifndef YBE_ARITH_HPP_
#define YBE_ARITH_HPP_

// Exact modular arithmetic on Z_n: factorization, units, nilpotents and the
// Chinese remainder plumbing used by the brace and solution modules.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace ybe {

  using Int = std::uint64_t;

  //! Largest order accepted for anything that materializes a table or does
  //! residue arithmetic.
  inline constexpr Int kMaxOrder = Int{1} << 31;

  //! Largest integer accepted by pure counting code (factorization only).
  inline constexpr Int kMaxCountOrder = Int{1} << 53;

  inline Int gcd(Int a, Int b) noexcept {
    return std::gcd(a, b);
  }

  inline Int mul_mod(Int a, Int b, Int n) noexcept {
    return static_cast<Int>((static_cast<unsigned __int128>(a) * b) % n);
  }

  inline Int add_mod(Int a, Int b, Int n) noexcept {
    return static_cast<Int>((static_cast<unsigned __int128>(a) + b) % n);
  }

  inline Int sub_mod(Int a, Int b, Int n) noexcept {
    a %= n;
    b %= n;
    return a >= b ? a - b : n - (b - a);
  }

  inline Int pow_mod(Int base, Int exp, Int n) noexcept {
    Int result = 1 % n;
    base %= n;
    while (exp > 0) {
      if (exp & 1) {
        result = mul_mod(result, base, n);
      }
      base = mul_mod(base, base, n);
      exp >>= 1;
    }
    return result;
  }

  //! Integer power; throws if the result would exceed kMaxCountOrder.
  inline Int ipow(Int base, unsigned exp) {
    Int result = 1;
    for (unsigned i = 0; i < exp; ++i) {
      if (base != 0 && result > kMaxCountOrder / base) {
        throw ParameterError("integer power overflow");
      }
      result *= base;
    }
    return result;
  }

  struct PrimePower {
    Int      prime;
    unsigned exponent;

    Int value() const {
      return ipow(prime, exponent);
    }

    bool operator==(PrimePower const&) const = default;
  };

  //! A positive integer together with its prime factorization (primes
  //! strictly increasing, exponents positive).
  class FactoredInt {
   public:
    explicit FactoredInt(Int n) : _n(n) {
      if (n == 0) {
        throw ParameterError("factorize: n must be positive");
      }
      if (n > kMaxCountOrder) {
        throw ResourceError("factorize: n = " + std::to_string(n)
                            + " exceeds the supported range");
      }
      Int m = n;
      for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
          unsigned k = 0;
          while (m % p == 0) {
            m /= p;
            ++k;
          }
          _factors.push_back({p, k});
        }
      }
      if (m > 1) {
        _factors.push_back({m, 1});
      }
    }

    Int value() const noexcept {
      return _n;
    }

    std::span<PrimePower const> factors() const& noexcept {
      return _factors;
    }

    //! By value on temporaries, so range-for over factorize(n).factors() is safe.
    std::vector<PrimePower> factors() && {
      return std::move(_factors);
    }

    //! Product of the distinct primes.
    Int radical() const noexcept {
      Int r = 1;
      for (auto const& f : _factors) {
        r *= f.prime;
      }
      return r;
    }

    //! The prime-power components p_i^{k_i}, in increasing order of p_i.
    std::vector<Int> components() const {
      std::vector<Int> out;
      out.reserve(_factors.size());
      for (auto const& f : _factors) {
        out.push_back(f.value());
      }
      return out;
    }

    unsigned max_exponent() const noexcept {
      unsigned e = 0;
      for (auto const& f : _factors) {
        e = std::max(e, f.exponent);
      }
      return e;
    }

    bool is_prime_power() const noexcept {
      return _factors.size() == 1;
    }

    //! Exponent of p in n (0 if p does not divide n).
    unsigned valuation(Int p) const noexcept {
      for (auto const& f : _factors) {
        if (f.prime == p) {
          return f.exponent;
        }
      }
      return 0;
    }

   private:
    Int                     _n;
    std::vector<PrimePower> _factors;
  };

  inline FactoredInt factorize(Int n) {
    return FactoredInt(n);
  }

  //! Exponent of the prime p in x; x must be nonzero.
  inline unsigned valuation(Int x, Int p) noexcept {
    unsigned k = 0;
    while (x != 0 && x % p == 0) {
      x /= p;
      ++k;
    }
    return k;
  }

  //! An element of Z_n stored in [0, n).
  class Residue {
   public:
    Residue(Int value, Int modulus) : _value(0), _modulus(modulus) {
      if (modulus == 0) {
        throw ParameterError("residue modulus must be positive");
      }
      _value = value % modulus;
    }

    Int value() const noexcept {
      return _value;
    }

    Int modulus() const noexcept {
      return _modulus;
    }

    bool operator==(Residue const&) const = default;

   private:
    Int _value;
    Int _modulus;
  };

  //! True iff t mod n lies in the nilradical of Z_n, i.e. every prime of n
  //! divides t (t = 0 included).
  inline bool is_nilpotent(Int t, FactoredInt const& n) noexcept {
    t %= n.value();
    for (auto const& f : n.factors()) {
      if (t % f.prime != 0) {
        return false;
      }
    }
    return true;
  }

  inline bool is_nilpotent(Int t, Int n) {
    return is_nilpotent(t, FactoredInt(n));
  }

  //! Least m >= 0 with n | t^m.  Requires t nilpotent mod n.
  inline unsigned nilpotency_degree(Int t, FactoredInt const& n) {
    if (!is_nilpotent(t, n)) {
      throw ParameterError("t not in nil(Z_n)");
    }
    Int      tm = t % n.value();
    unsigned m  = 0;
    for (auto const& f : n.factors()) {
      unsigned need = 0;
      if (tm == 0) {
        need = 1;
      } else {
        unsigned v = std::min(valuation(tm, f.prime), f.exponent);
        need       = (f.exponent + v - 1) / v;
      }
      m = std::max(m, need);
    }
    return m;
  }

  //! The set N(Z_n): all products p_1^{t_1}...p_s^{t_s} with 1 <= t_i <= k_i,
  //! ascending.  Empty for n = 1.
  inline std::vector<Int> canonical_nilpotents(FactoredInt const& n) {
    if (n.value() == 1) {
      return {};
    }
    std::vector<Int> out = {1};
    for (auto const& f : n.factors()) {
      std::vector<Int> next;
      for (Int base : out) {
        Int pk = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
          pk *= f.prime;
          next.push_back(base * pk);
        }
      }
      out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline Int euler_phi(FactoredInt const& n) noexcept {
    Int phi = n.value();
    for (auto const& f : n.factors()) {
      phi = phi / f.prime * (f.prime - 1);
    }
    return phi;
  }

  //! All residues coprime to n, ascending.  By convention units(1) = {0}.
  inline std::vector<Residue> units(Int n) {
    if (n == 0 || n > kMaxOrder) {
      throw ParameterError("units: n out of range");
    }
    std::vector<Residue> out;
    if (n == 1) {
      out.emplace_back(0, 1);
      return out;
    }
    for (Int a = 1; a < n; ++a) {
      if (gcd(a, n) == 1) {
        out.emplace_back(a, n);
      }
    }
    return out;
  }

  inline Residue mod_inverse(Residue a) {
    Int const n = a.modulus();
    if (gcd(a.value(), n) != 1) {
      throw ParameterError("not invertible: " + std::to_string(a.value())
                           + " mod " + std::to_string(n));
    }
    __int128 old_r = static_cast<__int128>(a.value()), r = n;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
      __int128 q = old_r / r;
      __int128 tmp = old_r - q * r;
      old_r        = r;
      r            = tmp;
      tmp          = old_s - q * s;
      old_s        = s;
      s            = tmp;
    }
    __int128 inv = old_s % static_cast<__int128>(n);
    if (inv < 0) {
      inv += n;
    }
    return Residue(static_cast<Int>(inv), n);
  }

  inline Int mod_inverse(Int a, Int n) {
    return mod_inverse(Residue(a, n)).value();
  }

  //! x reduced modulo each prime-power component of n.
  inline std::vector<Residue> crt_split(Residue x, FactoredInt const& n) {
    if (x.modulus() != n.value()) {
      throw ParameterError("crt_split: residue modulus does not match n");
    }
    std::vector<Residue> out;
    for (Int q : n.components()) {
      out.emplace_back(x.value() % q, q);
    }
    return out;
  }

  //! Inverse of crt_split.
  inline Residue crt_join(std::span<Residue const> parts, FactoredInt const& n) {
    auto const comps = n.components();
    if (parts.size() != comps.size()) {
      throw ParameterError("crt_join: wrong number of components");
    }
    Int x = 0, m = 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (parts[i].modulus() != comps[i]) {
        throw ParameterError("crt_join: mismatched moduli");
      }
      Int const q = comps[i];
      // x' = x + m * ((r - x) * m^{-1} mod q)
      Int const k = mul_mod(sub_mod(parts[i].value(), x % q, q),
                            mod_inverse(m % q, q), q);
      x += m * k;
      m *= q;
    }
    return Residue(x, n.value());
  }

  //! All positive divisors of n, ascending.
  inline std::vector<Int> divisors(FactoredInt const& n) {
    std::vector<Int> out = {1};
    for (auto const& f : n.factors()) {
      std::size_t const size = out.size();
      Int               pk   = 1;
      for (unsigned e = 1; e <= f.exponent; ++e) {
        pk *= f.prime;
        for (std::size_t i = 0; i < size; ++i) {
          out.push_back(out[i] * pk);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace ybe

#endif  // YBE_ARITH_HPP_
