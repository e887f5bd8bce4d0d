#ifndef YBE_CLASSIFY_HPP_
#define YBE_CLASSIFY_HPP_

// Classification of finite indecomposable cocyclic solutions by the triple
// (n, t, a), counting and enumeration of the classes, an independent
// exhaustive search over cyclic-regular tables, and the comparison with the
// (order, socle index) prediction.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cocyclic.hpp"
#include "error.hpp"
#include "isomorphism.hpp"
#include "solution.hpp"

namespace ybe {

  //! n; t | n with every prime of n dividing t and 4 | t whenever 8 | n;
  //! a the least positive integer coprime to n in its class mod gcd(t, n/t).
  struct CocyclicInvariants {
    Int n;
    Int t;
    Int a;

    Int socle_index() const noexcept {
      return n / t;
    }

    auto operator<=>(CocyclicInvariants const&) const = default;
  };

  inline std::string to_string(CocyclicInvariants const& c) {
    return "(" + std::to_string(c.n) + ", " + std::to_string(c.t) + ", "
           + std::to_string(c.a) + ")";
  }

  inline bool is_admissible_t(FactoredInt const& n, Int t) {
    Int const nv = n.value();
    if (t == 0 || nv % t != 0) {
      return false;
    }
    for (auto const& f : n.factors()) {
      if (t % f.prime != 0) {
        return false;
      }
    }
    return nv % 8 != 0 || t % 4 == 0;
  }

  //! All admissible t for order n, descending (t = n first).
  inline std::vector<Int> admissible_t(Int n) {
    FactoredInt const nf(n);
    std::vector<Int>  out;
    for (Int d : divisors(nf)) {
      if (is_admissible_t(nf, d)) {
        out.push_back(d);
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  //! gcd(t, n/t): two classes with the same t coincide iff a = a' mod this.
  inline Int class_modulus(Int n, Int t) {
    return gcd(t, n / t);
  }

  //! One canonical a per unit class mod gcd(t, n/t), ascending.
  inline std::vector<Int> canonical_a_values(Int n, Int t) {
    FactoredInt const nf(n);
    if (!is_admissible_t(nf, t)) {
      throw ParameterError("t = " + std::to_string(t)
                           + " is not an admissible invariant for n = "
                           + std::to_string(n));
    }
    Int const         d    = class_modulus(n, t);
    Int const         want = euler_phi(FactoredInt(d));
    std::vector<bool> seen(d, false);
    std::vector<Int>  out;
    for (Int a = 1; out.size() < want; ++a) {
      if (gcd(a, n) == 1 && !seen[a % d]) {
        seen[a % d] = true;
        out.push_back(a);
      }
    }
    return out;
  }

  //! True when the 2-primary component of the class is the tilde solution.
  inline bool uses_tilde_component(Int n, Int t) {
    return n % 8 == 4 && t % 4 == 2;
  }

  //! Constructor parameters realizing the class.
  inline KParams to_params(CocyclicInvariants const& c) {
    if (uses_tilde_component(c.n, c.t)) {
      if (c.n == 4) {
        return {4, 2, c.a % 4, Family::tilde4};
      }
      return {c.n, c.t / 2, c.a % c.n, Family::four_n};
    }
    return {c.n, c.t % c.n, c.a % c.n, Family::standard};
  }

  inline SolutionTable materialize(CocyclicInvariants const& c) {
    return make_K(to_params(c));
  }

  //! Multipermutation level: least s with n | t^s, raised to max(2, s) (s
  //! taken on the odd part) when the tilde component is present.
  inline unsigned level_of(CocyclicInvariants const& c) {
    if (c.n == 1) {
      return 0;
    }
    if (uses_tilde_component(c.n, c.t)) {
      Int const m = c.n / 4;
      return std::max(2u, nilpotency_degree(c.t / 2, FactoredInt(m)));
    }
    return nilpotency_degree(c.t % c.n, FactoredInt(c.n));
  }

  namespace detail {

    // Sorted multiset of k(x) with sigma_{sigma_x(x)} = sigma_x^{k(x)}, where
    // every sigma_x is written as a power of the n-cycle sigma_0.  Empty if
    // sigma_0 is not an n-cycle.  An isomorphism invariant.
    inline std::vector<Int> power_signature(SolutionTable const& s) {
      std::size_t const  n = s.size();
      std::vector<Int>   pos(n, n);
      Point              y = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (pos[y] != n) {
          return {};
        }
        pos[y] = k;
        y      = s.sigma(0, y);
      }
      std::vector<Int> e(n), out;
      for (std::size_t x = 0; x < n; ++x) {
        e[x] = pos[s.sigma(x, 0)];
      }
      for (std::size_t x = 0; x < n; ++x) {
        if (n == 1) {
          out.push_back(0);
          continue;
        }
        if (gcd(e[x], n) != 1) {
          return {};
        }
        out.push_back(mul_mod(e[s.sigma(x, x)], mod_inverse(e[x], n), n));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace detail

  //! The triple (n, t, a) of an indecomposable cocyclic solution: t is n over
  //! the size of the retraction, a is found by isomorphism search against
  //! the canonical representatives with that t.
  inline CocyclicInvariants canonical_invariants(SolutionTable const& s) {
    static std::string const what = "not an indecomposable cocyclic solution";
    if (!verify(s).ok()) {
      throw ParameterError(what + " (verification failed)");
    }
    std::size_t const n = s.size();
    PermGroup const   g = permutation_group(s);
    if (!g.is_transitive() || !g.is_cyclic() || !g.is_regular()) {
      throw ParameterError(what);
    }
    Int const t = n / retract(s).size();
    if (!is_admissible_t(FactoredInt(n), t)) {
      throw ParameterError(what + " (inadmissible retraction size)");
    }
    auto const       sig = detail::power_signature(s);
    IsoSearchOptions opts{std::max<std::size_t>(n, 16)};
    for (Int a : canonical_a_values(n, t)) {
      CocyclicInvariants const c{n, t, a};
      SolutionTable const      candidate = materialize(c);
      if (!sig.empty() && detail::power_signature(candidate) != sig) {
        continue;
      }
      if (isomorphic_bruteforce(candidate, s, opts)) {
        return c;
      }
    }
    throw Error("no canonical class matched; classification is incomplete");
  }

  //! Number of classes of order p^k from the closed forms.
  inline Int prime_power_count(Int p, unsigned k) {
    if (k == 0) {
      return 1;
    }
    if (k == 1) {
      return 1;
    }
    unsigned const r = k / 2;
    if (p != 2) {
      return k % 2 == 0 ? ipow(p, r) + ipow(p, r - 1) - 1 : 2 * ipow(p, r) - 1;
    }
    if (k == 2) {
      return 2;
    }
    return k % 2 == 0 ? ipow(2, r) + ipow(2, r - 1) - 2 : ipow(2, r + 1) - 2;
  }

  struct CountReport {
    Int                              n;
    Int                              total;
    std::vector<std::pair<Int, Int>> per_t;  // (t, number of classes)
  };

  //! Sum over admissible t of phi(gcd(t, n/t)).
  inline CountReport count_cocyclic(Int n) {
    if (n == 0) {
      throw ParameterError("n must be positive");
    }
    FactoredInt const nf(n);
    CountReport       report{n, 0, {}};
    std::vector<Int>  ts;
    for (Int d : divisors(nf)) {
      if (is_admissible_t(nf, d)) {
        ts.push_back(d);
      }
    }
    std::reverse(ts.begin(), ts.end());
    for (Int t : ts) {
      Int const c = euler_phi(FactoredInt(class_modulus(n, t)));
      report.per_t.emplace_back(t, c);
      report.total += c;
    }
    return report;
  }

  struct EnumerationReport {
    Int                             n;
    std::vector<CocyclicInvariants> classes;  // t descending, then a ascending
    std::vector<unsigned>           levels;   // parallel to classes
    Int                             total = 0;
    std::map<unsigned, Int>         per_level;
  };

  inline EnumerationReport enumerate_all(Int n) {
    if (n == 0 || n > kMaxOrder) {
      throw ParameterError("n out of range");
    }
    EnumerationReport report{n, {}, {}, 0, {}};
    for (Int t : admissible_t(n)) {
      std::vector<Int> seen_classes;
      Int const        d = class_modulus(n, t);
      for (Int a : canonical_a_values(n, t)) {
        // distinct residues mod d certify pairwise non-isomorphism
        if (std::find(seen_classes.begin(), seen_classes.end(), a % d)
            != seen_classes.end()) {
          throw Error("duplicate class in enumeration");
        }
        seen_classes.push_back(a % d);
        CocyclicInvariants const c{n, t, a};
        unsigned const           lvl = level_of(c);
        report.classes.push_back(c);
        report.levels.push_back(lvl);
        ++report.per_level[lvl];
      }
    }
    report.total = report.classes.size();
    return report;
  }

  inline std::map<unsigned, Int> level_histogram(Int n) {
    return enumerate_all(n).per_level;
  }

  struct Table1 {
    std::vector<Int>              primes;
    unsigned                      k_min;
    unsigned                      k_max;
    std::vector<std::vector<Int>> counts;  // counts[i][k - k_min]
  };

  inline Table1 table1() {
    Table1 tbl{{2, 3, 5, 7}, 2, 15, {}};
    for (Int p : tbl.primes) {
      std::vector<Int> row;
      for (unsigned k = tbl.k_min; k <= tbl.k_max; ++k) {
        row.push_back(prime_power_count(p, k));
      }
      tbl.counts.push_back(std::move(row));
    }
    return tbl;
  }

  struct OracleOptions {
    Int  max_order  = 8;
    bool allow_slow = false;  // admits n = 9
  };

  struct OracleReport {
    Int                        n;
    std::size_t                leaves     = 0;  // exponent maps fully assigned
    std::size_t                survivors  = 0;  // passed verify and gcd test
    std::vector<SolutionTable> representatives;  // sorted by sigma table
    std::vector<std::size_t>   class_sizes;      // parallel
  };

  //! Enumerates all maps e: Z_n -> Z_n, sigma_x(y) = y + e(x), with the
  //! e(x) generating Z_n, keeps those that verify, and buckets them into
  //! isomorphism classes by brute-force search.  Every indecomposable
  //! cocyclic solution is isomorphic to one of this shape, since a regular
  //! cyclic permutation group is conjugate to the group of translations.
  inline OracleReport oracle_exhaustive_cyclic(Int n, OracleOptions opts = {}) {
    Int const cap = opts.allow_slow ? std::max<Int>(opts.max_order, 9)
                                    : opts.max_order;
    if (n == 0) {
      throw ParameterError("n must be positive");
    }
    if (n > cap) {
      throw ResourceError("oracle is capped at n = " + std::to_string(cap)
                          + (opts.allow_slow ? "" : " (n = 9 needs the slow flag)"));
    }
    OracleReport     report{n, 0, 0, {}, {}};
    std::vector<Int> e(n, 0);
    std::vector<std::vector<Int>> class_keys;

    // e(x) + e(y - e(x)) = e(y) + e(x - e(y)) on all pairs whose indices
    // are assigned (positions < filled).
    auto consistent = [&](std::size_t filled) {
      Int const j = filled - 1;
      for (Int x = 0; x < filled; ++x) {
        for (Int y = 0; y < filled; ++y) {
          Int const u = sub_mod(y, e[x], n);
          Int const v = sub_mod(x, e[y], n);
          if (u >= filled || v >= filled) {
            continue;
          }
          if (x != j && y != j && u != j && v != j) {
            continue;
          }
          if (add_mod(e[x], e[u], n) != add_mod(e[y], e[v], n)) {
            return false;
          }
        }
      }
      return true;
    };

    auto leaf = [&]() {
      ++report.leaves;
      Int g = n;
      for (Int x = 0; x < n; ++x) {
        g = gcd(g, e[x]);
      }
      if (g != 1 && n != 1) {
        return;
      }
      std::vector<Point> sigma(n * n);
      for (Int x = 0; x < n; ++x) {
        for (Int y = 0; y < n; ++y) {
          sigma[x * n + y] = static_cast<Point>(add_mod(y, e[x], n));
        }
      }
      SolutionTable s = SolutionTable::from_sigma(n, std::move(sigma));
      if (!verify(s).ok()) {
        return;
      }
      ++report.survivors;
      std::size_t const rsize = retract(s).size();
      for (std::size_t c = 0; c < report.representatives.size(); ++c) {
        if (class_keys[c][0] != rsize) {
          continue;
        }
        if (isomorphic_bruteforce(report.representatives[c], s)) {
          ++report.class_sizes[c];
          return;
        }
      }
      // odometer order is lexicographic in sigma, so the first member seen
      // is the least one
      report.representatives.push_back(std::move(s));
      report.class_sizes.push_back(1);
      class_keys.push_back({rsize});
    };

    // odometer over e(0), e(1), ... with pruning after each assignment
    std::size_t filled = 0;
    std::vector<Int> next_value(n + 1, 0);
    while (true) {
      if (filled == n) {
        leaf();
        if (filled == 0) {
          break;
        }
        --filled;
        continue;
      }
      if (next_value[filled] >= n) {
        next_value[filled] = 0;
        if (filled == 0) {
          break;
        }
        --filled;
        continue;
      }
      e[filled] = next_value[filled]++;
      if (consistent(filled + 1)) {
        ++filled;
        next_value[filled] = filled < n ? 0 : next_value[filled];
      }
    }

    // sort classes by representative sigma table
    std::vector<std::size_t> order(report.representatives.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return report.representatives[i].sigma_table()
             < report.representatives[j].sigma_table();
    });
    OracleReport sorted{n, report.leaves, report.survivors, {}, {}};
    for (std::size_t i : order) {
      sorted.representatives.push_back(report.representatives[i]);
      sorted.class_sizes.push_back(report.class_sizes[i]);
    }
    return sorted;
  }

  struct OracleComparison {
    bool match = false;
    //! For each oracle class, the index of the isomorphic enumerated class.
    std::vector<std::optional<std::size_t>> oracle_to_enumeration;
  };

  //! Pairs oracle classes with enumerated classes by brute-force isomorphism.
  inline OracleComparison compare_with_enumeration(OracleReport const&      oracle,
                                                   EnumerationReport const& en) {
    OracleComparison  cmp;
    std::vector<bool> used(en.classes.size(), false);
    cmp.match = oracle.representatives.size() == en.classes.size();
    for (auto const& rep : oracle.representatives) {
      std::optional<std::size_t> hit;
      for (std::size_t i = 0; i < en.classes.size(); ++i) {
        if (isomorphic_bruteforce(rep, materialize(en.classes[i]))) {
          hit = i;
          break;
        }
      }
      if (!hit || used[*hit]) {
        cmp.match = false;
      } else {
        used[*hit] = true;
      }
      cmp.oracle_to_enumeration.push_back(hit);
    }
    return cmp;
  }

  struct RumpPrediction {
    Int              n;
    std::vector<Int> socle_indices;  // ascending
    Int              predicted;
  };

  //! Divisors s of n with p | n => ps | n for every prime p, and 8 | n =>
  //! 4s | n; one predicted class per s.
  inline RumpPrediction rump_prediction(Int n) {
    FactoredInt const nf(n);
    RumpPrediction    out{n, {}, 0};
    for (Int s : divisors(nf)) {
      bool ok = true;
      for (auto const& f : nf.factors()) {
        ok = ok && (n % (f.prime * s) == 0);
      }
      if (n % 8 == 0) {
        ok = ok && (n % (4 * s) == 0);
      }
      if (ok) {
        out.socle_indices.push_back(s);
      }
    }
    out.predicted = out.socle_indices.size();
    return out;
  }

  enum class Certificate { exhausted_bijection_search, closed_form };

  inline std::string to_string(Certificate c) {
    return c == Certificate::closed_form ? "closed-form criterion"
                                         : "exhausted bijection search";
  }

  struct Counterexample {
    CocyclicInvariants first;
    CocyclicInvariants second;
    SolutionTable      first_table;
    SolutionTable      second_table;
    std::size_t        first_retract_size;
    std::size_t        second_retract_size;
    Certificate        certificate;
    bool               non_isomorphic;
  };

  struct RumpRefutation {
    Int                           n;
    Int                           predicted;
    Int                           actual;
    std::vector<Int>              socle_indices;
    std::optional<Counterexample> counterexample;
    std::string                   message;
  };

  //! Two non-isomorphic solutions of order n sharing the socle index n/t,
  //! or a report that the prediction holds at this order.
  inline RumpRefutation refute_rump(Int n) {
    RumpPrediction const    pred = rump_prediction(n);
    EnumerationReport const en   = enumerate_all(n);
    RumpRefutation          out{n, pred.predicted, en.total, pred.socle_indices,
                       std::nullopt, ""};
    if (en.total <= pred.predicted) {
      out.message = "no counterexample at this order";
      return out;
    }
    for (std::size_t i = 0; i + 1 < en.classes.size(); ++i) {
      auto const& c1 = en.classes[i];
      auto const& c2 = en.classes[i + 1];
      if (c1.t != c2.t) {
        continue;
      }
      SolutionTable s1 = materialize(c1);
      SolutionTable s2 = materialize(c2);
      Certificate   cert;
      bool          non_iso;
      if (n <= IsoSearchOptions{}.max_size) {
        cert    = Certificate::exhausted_bijection_search;
        non_iso = !isomorphic_bruteforce(s1, s2).has_value();
      } else {
        cert    = Certificate::closed_form;
        non_iso = !isomorphic_K(to_params(c1), to_params(c2)).isomorphic;
      }
      std::size_t const r1 = retract(s1).size();
      std::size_t const r2 = retract(s2).size();
      out.counterexample   = Counterexample{c1,  c2,   std::move(s1),
                                          std::move(s2), r1, r2, cert, non_iso};
      out.message = "counterexample: " + to_string(c1) + " and "
                    + to_string(c2) + " share socle index "
                    + std::to_string(c1.socle_index());
      return out;
    }
    out.message = "no counterexample at this order";
    return out;
  }

}  // namespace ybe

#endif  // YBE_CLASSIFY_HPP_
