#ifndef YBE_COCYCLIC_HPP_
#define YBE_COCYCLIC_HPP_

// Indecomposable solutions with cyclic permutation group on Z_n:
//
//   standard  sigma_b(c) = a + c + t*a*b + t*a*c + t^2*a*b*c        (mod n)
//   tilde4    sigma_b(c) = a + c + 2*a*b                            (mod 4)
//   four_n    sigma_b(c) = a + c + 2t*a*b + 4t*h*a*c + 4t^2*a*b*c   (mod 4m)
//
// where in the last family m = n/4 is odd, t is odd and h = 2^{-1} mod m.

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "solution.hpp"

namespace ybe {

  enum class Family { standard, tilde4, four_n };

  inline std::string to_string(Family f) {
    switch (f) {
      case Family::tilde4:
        return "tilde4";
      case Family::four_n:
        return "fourn";
      case Family::standard:
      default:
        return "standard";
    }
  }

  inline Family family_from_string(std::string const& s) {
    if (s == "standard") {
      return Family::standard;
    } else if (s == "tilde4") {
      return Family::tilde4;
    } else if (s == "fourn") {
      return Family::four_n;
    }
    throw ParameterError("unknown family '" + s + "'");
  }

  //! Parameters of K(n, t, a).  For the standard family t and a are residues
  //! mod n (t = 0 and t = n are the same parameter).  For four_n, t is the odd
  //! divisor of m = n/4 that enters the formula as an integer.
  struct KParams {
    Int    n;
    Int    t;
    Int    a;
    Family family = Family::standard;

    bool operator==(KParams const&) const = default;
  };

  //! Throws ParameterError unless p satisfies the family's constraints.
  //! Returns p with t and a reduced.
  inline KParams validate(KParams p) {
    if (p.n == 0 || p.n > kMaxOrder) {
      throw ParameterError("n out of range");
    }
    FactoredInt const nf(p.n);
    switch (p.family) {
      case Family::standard:
        p.t %= p.n;
        p.a %= p.n;
        if (!is_nilpotent(p.t, nf)) {
          throw ParameterError("t not in nil(Z_n)");
        }
        if (p.n % 4 == 0 && p.t % 4 != 0) {
          // B_t(n) with 2-part of t equal to 2 is not cocyclic
          throw ParameterError("4 must divide t when 4 divides n");
        }
        break;
      case Family::tilde4:
        p.a %= p.n;
        if (p.n != 4 || p.t != 2) {
          throw ParameterError("tilde4 requires n = 4 and t = 2");
        }
        break;
      case Family::four_n: {
        p.a %= p.n;
        if (p.n % 8 != 4) {
          throw ParameterError("fourn requires n = 4 (mod 8)");
        }
        Int const m = p.n / 4;
        if (p.t == 0 || p.t % 2 == 0 || m % p.t != 0
            || !is_nilpotent(p.t, FactoredInt(m))) {
          throw ParameterError("fourn requires an odd t in N(Z_{n/4})");
        }
        break;
      }
    }
    if (gcd(p.a, p.n) != 1) {
      throw ParameterError("a must be a unit mod n");
    }
    return p;
  }

  //! sigma_b(c) for the given (validated) parameters.
  inline Int k_sigma(KParams const& p, Int b, Int c) {
    Int const n = p.n;
    Int const a = p.a;
    switch (p.family) {
      case Family::tilde4:
        return (a + c + 2 * a * b) % 4;
      case Family::four_n: {
        Int const m    = n / 4;
        Int const half = m == 1 ? 0 : mod_inverse(2, m);
        Int const t    = p.t % n;
        Int       s    = add_mod(a, c, n);
        s = add_mod(s, mul_mod(mul_mod(2 * t % n, a, n), b, n), n);
        s = add_mod(s, mul_mod(mul_mod(mul_mod(4 * t % n, half, n), a, n), c, n),
                    n);
        Int const tt = mul_mod(t, t, n);
        s            = add_mod(
            s, mul_mod(mul_mod(mul_mod(4 * tt % n, a, n), b, n), c, n), n);
        return s;
      }
      case Family::standard:
      default: {
        Int const t  = p.t;
        Int const ta = mul_mod(t, a, n);
        Int       s  = add_mod(a, c, n);
        s            = add_mod(s, mul_mod(ta, b, n), n);
        s            = add_mod(s, mul_mod(ta, c, n), n);
        s = add_mod(s, mul_mod(mul_mod(mul_mod(t, ta, n), b, n), c, n), n);
        return s;
      }
    }
  }

  //! The solution K(n, t, a) of the given family, tau completed from sigma.
  inline SolutionTable make_K(KParams p) {
    p = validate(p);
    if (p.n > kMaxTableOrder) {
      throw ResourceError("solution order exceeds the table cap");
    }
    std::size_t const  n = p.n;
    std::vector<Point> sigma(n * n);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        sigma[b * n + c] = static_cast<Point>(k_sigma(p, b, c));
      }
    }
    return SolutionTable::from_sigma(n, std::move(sigma));
  }

  //! A certificate (1 + h) a = a' (1 + z t) mod n with h in Soc(B_t(n)).
  struct IsomorphismWitness {
    Int h;
    Int z;
  };

  struct KIsomorphism {
    bool                              isomorphic = false;
    std::optional<IsomorphismWitness> witness;
  };

  namespace detail {

    // Smallest h in Ann(t) admitting z with (1+h) a = a' (1 + z t) mod n.
    inline std::optional<IsomorphismWitness>
    find_witness(Int n, Int t, Int a, Int a2) {
      Int const t0   = gcd(t, n);  // t = 0 gives t0 = n
      Int const step = n / t0;     // Ann(t) = (n/t0) Z_n
      Int const inv2 = mod_inverse(a2, n);
      for (Int h = 0; h < n; h += step) {
        // z t = ((1+h) a - a') / a'
        Int const rhs = mul_mod(
            sub_mod(mul_mod(add_mod(1, h, n), a, n), a2, n), inv2, n);
        if (rhs % t0 != 0) {
          continue;
        }
        Int const m = n / t0;
        Int       z = 0;
        if (m > 1) {
          z = mul_mod(rhs / t0, mod_inverse((t / t0) % m, m), m);
        }
        return IsomorphismWitness{h, z};
      }
      return std::nullopt;
    }

  }  // namespace detail

  //! Closed-form isomorphism test within one family:
  //!   standard: a = a' mod gcd(t0, n/t0) with t0 = gcd(t, n);
  //!   tilde4:   always;
  //!   four_n:   a = a' mod gcd(t, m/t), m = n/4.
  inline KIsomorphism isomorphic_K(KParams p1, KParams p2) {
    p1 = validate(p1);
    p2 = validate(p2);
    if (p1.n != p2.n || p1.t != p2.t || p1.family != p2.family) {
      throw ParameterError("criteria apply only within a family");
    }
    Int const    n = p1.n;
    KIsomorphism out;
    switch (p1.family) {
      case Family::standard: {
        Int const t0 = gcd(p1.t, n);
        Int const d  = gcd(t0, n / t0);
        out.isomorphic = (p1.a % d) == (p2.a % d);
        break;
      }
      case Family::tilde4:
        out.isomorphic = true;
        break;
      case Family::four_n: {
        Int const m    = n / 4;
        Int const d    = gcd(p1.t, m / p1.t);
        out.isomorphic = (p1.a % d) == (p2.a % d);
        break;
      }
    }
    if (out.isomorphic && p1.family != Family::four_n) {
      out.witness = detail::find_witness(n, p1.t, p1.a, p2.a);
    }
    return out;
  }

  //! The solution sigma_x(y) = r x + y + 1 on Z_n.  Throws if the resulting
  //! tables fail verification (r^2 != 0 mod n).
  inline SolutionTable rump_example(Int n, Int r) {
    if (n == 0 || n > kMaxTableOrder) {
      throw ParameterError("n out of range");
    }
    if (!is_nilpotent(r, n)) {
      throw ParameterError("r not in nil(Z_n)");
    }
    r %= n;
    std::vector<Point> sigma(n * n);
    for (Int x = 0; x < n; ++x) {
      for (Int y = 0; y < n; ++y) {
        sigma[x * n + y]
            = static_cast<Point>(add_mod(add_mod(mul_mod(r, x, n), y, n), 1, n));
      }
    }
    SolutionTable s = SolutionTable::from_sigma(n, std::move(sigma));
    if (!verify(s).ok()) {
      throw ParameterError("sigma_x(y) = " + std::to_string(r)
                           + "x + y + 1 is not a solution mod "
                           + std::to_string(n));
    }
    return s;
  }

  //! Prime-power (or tilde x odd) components of a cocyclic solution and the
  //! explicit isomorphism onto their product.
  struct SolutionSplitting {
    std::vector<KParams> components;
    std::vector<Point>   phi;  // phi[x] = lexicographic index in the product
    bool                 certified = false;
  };

  //! Product of the component solutions, left-folded (lexicographic).
  inline SolutionTable product_of(std::vector<KParams> const& comps) {
    SolutionTable prod = make_K(comps.front());
    for (std::size_t i = 1; i < comps.size(); ++i) {
      prod = product_solution(prod, make_K(comps[i]));
    }
    return prod;
  }

  //! standard: K(n,t,a) ~ prod_i K(p_i^{k_i}, t_i, (t/t_i) a) via
  //!           x -> ((t/t_i) x mod p_i^{k_i})_i; t must lie in N(Z_n).
  //! four_n:   ~ tilde4(ta mod 4) x K(m, t, 2a mod m) via x -> (tx mod 4, 2x mod m).
  inline SolutionSplitting split_solution(KParams p) {
    p = validate(p);
    Int const         n = p.n;
    SolutionSplitting out;
    std::vector<Int>  mult, mods;

    if (p.family == Family::four_n) {
      Int const m = n / 4;
      out.components.push_back({4, 2, mul_mod(p.t, p.a, 4), Family::tilde4});
      mult.push_back(p.t % 4);
      mods.push_back(4);
      if (m > 1) {
        out.components.push_back({m, p.t % m, mul_mod(2, p.a, m)});
        mult.push_back(2 % m);
        mods.push_back(m);
      }
    } else if (p.family == Family::tilde4 || n == 1
               || FactoredInt(n).is_prime_power()) {
      out.components.push_back(p);
      mult.push_back(1);
      mods.push_back(n);
    } else {
      FactoredInt const nf(n);
      Int const         t = p.t == 0 ? n : p.t;
      if (n % t != 0) {
        throw ParameterError("splitting requires t in N(Z_n)");
      }
      for (auto const& f : nf.factors()) {
        Int const q  = f.value();
        Int const ti = ipow(f.prime, valuation(t, f.prime));
        Int const c  = t / ti;
        out.components.push_back({q, ti % q, mul_mod(c, p.a, q)});
        mult.push_back(c % q);
        mods.push_back(q);
      }
    }

    out.phi.resize(n);
    for (Int x = 0; x < n; ++x) {
      Int idx = 0;
      for (std::size_t i = 0; i < mods.size(); ++i) {
        idx = idx * mods[i] + mul_mod(x, mult[i], mods[i]);
      }
      out.phi[x] = static_cast<Point>(idx);
    }
    out.certified
        = is_solution_isomorphism(make_K(p), product_of(out.components), out.phi);
    return out;
  }

}  // namespace ybe

#endif  // YBE_COCYCLIC_HPP_
