// Acceptance checks.  One PASS/FAIL line per criterion; exit status is the
// number of failures.  All checks are exact (no tolerances).

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ybe/ybe.hpp"

using namespace ybe;

namespace {

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  std::vector<KParams> all_params(Int n) {
    std::vector<KParams> out;
    auto const           nf = factorize(n);
    for (auto const& u : units(n)) {
      Int const a = u.value();
      for (Int t = 0; t < n; ++t) {
        if (is_nilpotent(t, nf) && (n % 4 != 0 || t % 4 == 0)) {
          out.push_back({n, t, a});
        }
      }
      if (n == 4) {
        out.push_back({4, 2, a, Family::tilde4});
      }
      if (n % 8 == 4 && n > 4) {
        Int const m = n / 4;
        for (Int t : divisors(factorize(m))) {
          if (is_nilpotent(t, factorize(m))) {
            out.push_back({n, t, a, Family::four_n});
          }
        }
      }
    }
    return out;
  }

  // 1. every valid parameter triple, n <= 200, all families
  Outcome axiom_suite() {
    std::size_t tables = 0, failed = 0;
    for (Int n = 1; n <= 200; ++n) {
      for (auto const& p : all_params(n)) {
        ++tables;
        failed += !verify(make_K(p)).ok();
      }
    }
    return {failed == 0, std::to_string(tables) + " tables, "
                             + std::to_string(failed) + " failed"};
  }

  // 2. the published grid of counts for p^k
  Outcome table1_reproduction() {
    std::vector<std::vector<Int>> const published = {
        {2, 2, 4, 6, 10, 14, 22, 30, 46, 62, 94, 126, 190, 254},
        {3, 5, 11, 17, 35, 53, 107, 161, 323, 485, 971, 1457, 2915, 4373},
        {5, 9, 29, 49, 149, 249, 749, 1249, 3749, 6249, 18749, 31249, 93749,
         156249},
        {7, 13, 55, 97, 391, 685, 2743, 4801, 19207, 33613, 134455, 235297,
         941191, 1647085}};
    Table1 const tbl   = table1();
    std::size_t  match = 0;
    for (std::size_t i = 0; i < tbl.primes.size(); ++i) {
      for (unsigned k = 2; k <= 15; ++k) {
        Int const cell   = published[i][k - 2];
        Int const counted = count_cocyclic(ipow(tbl.primes[i], k)).total;
        match += tbl.counts[i][k - 2] == cell && counted == cell;
      }
    }
    return {match == 56, std::to_string(match) + "/56 cells"};
  }

  // 3. worked examples
  Outcome census() {
    std::map<unsigned, Int> const h675 = {{1, 1}, {2, 14}, {3, 10}};
    bool const ok = count_cocyclic(9).total == 3 && count_cocyclic(27).total == 5
                    && count_cocyclic(36).total == 6
                    && count_cocyclic(675).total == 25
                    && level_histogram(675) == h675;
    return {ok, "9:3 27:5 36:6 675:25, levels of 675 {1:1, 2:14, 3:10}"};
  }

  // 4. closed form against brute force
  Outcome iso_cross_validation() {
    std::size_t pairs = 0, disagree = 0, witness_bad = 0;
    for (Int n = 1; n <= 12; ++n) {
      auto const params = all_params(n);
      std::vector<SolutionTable> tables;
      for (auto const& p : params) {
        tables.push_back(make_K(p));
      }
      for (std::size_t i = 0; i < params.size(); ++i) {
        for (std::size_t j = 0; j < params.size(); ++j) {
          auto const& p = params[i];
          auto const& q = params[j];
          if (p.t != q.t || p.family != q.family) {
            continue;
          }
          ++pairs;
          auto const closed = isomorphic_K(p, q);
          bool const brute  = isomorphic_bruteforce(tables[i], tables[j]).has_value();
          disagree += closed.isomorphic != brute;
          if (closed.witness) {
            auto const [h, z] = *closed.witness;
            witness_bad
                += mul_mod(p.t, h, n) != 0
                   || mul_mod(add_mod(1, h, n), p.a, n)
                          != mul_mod(q.a, add_mod(1, mul_mod(z, p.t, n), n), n);
          }
        }
      }
    }
    return {disagree == 0 && witness_bad == 0 && pairs >= 100,
            std::to_string(pairs) + " pairs, " + std::to_string(disagree)
                + " disagreements, " + std::to_string(witness_bad)
                + " bad witnesses"};
  }

  // 5. Ret^m(K(p^k, p^w, a)) = K(p^{max(k - mw, 0)}, p^w, a)
  Outcome retraction_theorem() {
    std::size_t cases = 0, by_search = 0, by_invariants = 0, failed = 0;
    for (Int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                  59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113,
                  127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
                  191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241}) {
      for (unsigned k = 1; ipow(p, k) <= 243; ++k) {
        Int const q = ipow(p, k);
        for (unsigned w = 1; w <= k; ++w) {
          if (p == 2 && w == 1 && k >= 2) {
            continue;  // B_2(2^k) with k >= 2 is not cocyclic
          }
          Int const t = ipow(p, w);
          for (auto const& u : units(q)) {
            Int const     a       = u.value();
            SolutionTable current = make_K({q, t, a});
            for (unsigned m = 1;; ++m) {
              current = retract(current);
              unsigned const e      = k > m * w ? k - m * w : 0;
              Int const      target = ipow(p, e);
              SolutionTable const expect = make_K({target, t, a});
              ++cases;
              if (target <= 16) {
                ++by_search;
                failed += !isomorphic_bruteforce(current, expect).has_value();
              } else {
                ++by_invariants;
                failed += canonical_invariants(current)
                          != canonical_invariants(expect);
              }
              if (e == 0) {
                break;
              }
            }
          }
        }
      }
    }
    return {failed == 0, std::to_string(cases) + " retractions ("
                             + std::to_string(by_search) + " by search, "
                             + std::to_string(by_invariants)
                             + " by invariants), " + std::to_string(failed)
                             + " failed"};
  }

  // 6. exhaustive cyclic-regular search against enumeration
  Outcome oracle_equivalence() {
    std::string detail;
    bool        ok = true;
    for (Int n = 2; n <= 9; ++n) {
      OracleOptions opts;
      opts.allow_slow = n == 9;
      auto const o    = oracle_exhaustive_cyclic(n, opts);
      auto const e    = enumerate_all(n);
      bool const m    = compare_with_enumeration(o, e).match;
      ok              = ok && m && o.representatives.size() == e.total;
      detail += std::to_string(n) + ":" + std::to_string(o.representatives.size())
                + (n < 9 ? " " : "");
    }
    auto const o9 = oracle_exhaustive_cyclic(9, {8, true});
    ok            = ok && o9.representatives.size() == 3;
    return {ok, "classes " + detail};
  }

  // 7. two non-isomorphic solutions with the same order and socle index
  Outcome refutation() {
    auto const r9  = refute_rump(9);
    auto const r25 = refute_rump(25);
    auto good      = [](RumpRefutation const& r) {
      if (!r.counterexample) {
        return false;
      }
      auto const& c = *r.counterexample;
      return c.non_isomorphic && c.first.socle_index() == c.second.socle_index()
             && c.first_retract_size == c.first.socle_index()
             && c.second_retract_size == c.second.socle_index()
             && c.first_table.size() == r.n && c.second_table.size() == r.n;
    };
    bool const ok
        = good(r9) && good(r25) && r9.actual == 3 && r9.predicted == 2
          && r9.counterexample->certificate
                 == Certificate::exhausted_bijection_search
          && r9.counterexample->first_retract_size == 3 && r25.actual == 5
          && r25.predicted == 2;
    return {ok, "n=9 actual " + std::to_string(r9.actual) + " predicted "
                    + std::to_string(r9.predicted) + "; n=25 actual "
                    + std::to_string(r25.actual) + " predicted "
                    + std::to_string(r25.predicted)};
  }

  // 8. associated solution of B/Soc(B) against Ret of the associated solution
  Outcome brace_bridge() {
    std::size_t braces = 0, equal = 0, by_search = 0, failed = 0;
    for (Int q = 2; q <= 81; ++q) {
      auto const qf = factorize(q);
      if (!qf.is_prime_power()) {
        continue;
      }
      for (Int t = 0; t < q; ++t) {
        if (!is_nilpotent(t, qf)) {
          continue;
        }
        ++braces;
        auto const b   = make_Bt(q, t);
        auto const lhs = associated_solution(quotient_by_socle(b));
        auto const rhs = retract(associated_solution(b));
        if (lhs == rhs) {
          ++equal;
        } else {
          ++by_search;
          failed += !isomorphic_bruteforce(lhs, rhs, {lhs.size()}).has_value();
        }
      }
    }
    return {failed == 0, std::to_string(braces) + " braces ("
                             + std::to_string(equal) + " identical tables, "
                             + std::to_string(by_search) + " by search), "
                             + std::to_string(failed) + " failed"};
  }

  // 9. splitting maps as entrywise solution isomorphisms
  Outcome splitting_witnesses() {
    std::size_t maps = 0, failed = 0;
    for (Int n : {36, 45, 675}) {
      auto const nf = factorize(n);
      for (auto const& u : units(n)) {
        for (Int t : divisors(nf)) {
          if (is_nilpotent(t, nf) && (n % 4 != 0 || t % 4 == 0)) {
            ++maps;
            failed += !split_solution({n, t, u.value()}).certified;
          }
        }
        if (n % 8 == 4) {
          auto const mf = factorize(n / 4);
          for (Int t : divisors(mf)) {
            if (is_nilpotent(t, mf)) {
              ++maps;
              failed
                  += !split_solution({n, t, u.value(), Family::four_n}).certified;
            }
          }
        }
      }
    }
    return {failed == 0, std::to_string(maps) + " maps, "
                             + std::to_string(failed) + " failed"};
  }

}  // namespace

int main() {
  std::vector<std::pair<char const*, std::function<Outcome()>>> const criteria
      = {{"axiom suite", axiom_suite},
         {"Table 1 reproduction", table1_reproduction},
         {"worked-example census", census},
         {"isomorphism cross-validation", iso_cross_validation},
         {"retraction theorem", retraction_theorem},
         {"oracle equivalence", oracle_equivalence},
         {"refutation reproduced", refutation},
         {"brace-solution bridge", brace_bridge},
         {"splitting witnesses", splitting_witnesses}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    out;
    try {
      out = criteria[i].second();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    failures += !out.pass;
    std::printf("%s %zu %s: %s [%.1fs]\n", out.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures;
}
