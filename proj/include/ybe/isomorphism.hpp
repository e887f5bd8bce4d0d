#ifndef YBE_ISOMORPHISM_HPP_
#define YBE_ISOMORPHISM_HPP_

// Backtracking search for solution isomorphisms.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "solution.hpp"

namespace ybe {

  struct IsoSearchOptions {
    //! Inputs larger than this are refused with a ResourceError.
    std::size_t max_size = 16;
  };

  namespace detail {

    inline constexpr Point kUnassigned = static_cast<Point>(-1);

    class IsoSearch {
     public:
      IsoSearch(SolutionTable const& s1, SolutionTable const& s2)
          : _s1(s1), _s2(s2), _n(s1.size()) {}

      std::optional<Perm> run() {
        State st{std::vector<Point>(_n, kUnassigned),
                 std::vector<bool>(_n, false),
                 {}};
        return search(std::move(st));
      }

     private:
      struct State {
        std::vector<Point> phi;
        std::vector<bool>  used;
        std::vector<Point> assigned;  // domain points in assignment order
      };

      // Sets phi(x) = y and closes the partial map under
      // phi(sigma_b(c)) = sigma'_{phi(b)}(phi(c)).  False on contradiction.
      bool assign(State& st, Point x, Point y) const {
        std::vector<std::pair<Point, Point>> pending = {{x, y}};
        while (!pending.empty()) {
          auto [u, v] = pending.back();
          pending.pop_back();
          if (st.phi[u] != kUnassigned) {
            if (st.phi[u] != v) {
              return false;
            }
            continue;
          }
          if (st.used[v]) {
            return false;
          }
          st.phi[u]  = v;
          st.used[v] = true;
          st.assigned.push_back(u);
          for (Point b : st.assigned) {
            Point const pb = st.phi[b];
            pending.emplace_back(_s1.sigma(u, b), _s2.sigma(v, pb));
            if (b != u) {
              pending.emplace_back(_s1.sigma(b, u), _s2.sigma(pb, v));
            }
          }
        }
        return true;
      }

      std::optional<Perm> search(State st) const {
        Point next = kUnassigned;
        for (Point x = 0; x < _n; ++x) {
          if (st.phi[x] == kUnassigned) {
            next = x;
            break;
          }
        }
        if (next == kUnassigned) {
          if (is_solution_isomorphism(_s1, _s2, st.phi)) {
            return st.phi;
          }
          return std::nullopt;
        }
        for (Point y = 0; y < _n; ++y) {
          if (st.used[y]) {
            continue;
          }
          State branch = st;
          if (assign(branch, next, y)) {
            if (auto found = search(std::move(branch))) {
              return found;
            }
          }
        }
        return std::nullopt;
      }

      SolutionTable const& _s1;
      SolutionTable const& _s2;
      std::size_t          _n;
    };

  }  // namespace detail

  //! Searches for a bijection phi with phi(sigma_b(c)) = sigma'_{phi(b)}(phi(c))
  //! (tau compatibility is confirmed on the final map).  Returns the
  //! lexicographically least witness (phi(0), phi(1), ...) or nullopt.
  //!
  //! Branching is on the smallest unmapped point, candidates in increasing
  //! order, after propagating every forced image.  When every sigma_x is an
  //! n-cycle (all indecomposable cocyclic solutions) one choice of phi(0)
  //! forces the whole map, so the search is O(n^3).
  inline std::optional<Perm> isomorphic_bruteforce(SolutionTable const& s1,
                                                   SolutionTable const& s2,
                                                   IsoSearchOptions opts = {}) {
    if (s1.size() != s2.size()) {
      return std::nullopt;
    }
    if (s1.size() > opts.max_size) {
      throw ResourceError("brute-force isomorphism search is capped at size "
                          + std::to_string(opts.max_size) + " (got "
                          + std::to_string(s1.size())
                          + "); use the closed-form test");
    }
    return detail::IsoSearch(s1, s2).run();
  }

}  // namespace ybe

#endif  // YBE_ISOMORPHISM_HPP_
