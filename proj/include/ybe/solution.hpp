#ifndef YBE_SOLUTION_HPP_
#define YBE_SOLUTION_HPP_

// Finite involutive non-degenerate set-theoretic solutions of the
// Yang-Baxter equation on {0, ..., n-1}, stored as sigma/tau tables.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "perm.hpp"

namespace ybe {

  //! Tables larger than this are refused outright.
  inline constexpr std::size_t kMaxTableOrder = 8192;

  //! sigma(x, y) is the permutation sigma_x applied to y; tau(y, x) is
  //! tau_y applied to x.  Both are stored row-major, one permutation per row.
  class SolutionTable {
   public:
    SolutionTable(std::size_t n, std::vector<Point> sigma, std::vector<Point> tau)
        : _n(n), _sigma(std::move(sigma)), _tau(std::move(tau)) {
      if (n == 0) {
        throw ParameterError("solution must have at least one element");
      }
      if (n > kMaxTableOrder) {
        throw ResourceError("solution order " + std::to_string(n)
                            + " exceeds the table cap");
      }
      if (_sigma.size() != n * n || _tau.size() != n * n) {
        throw ParameterError("sigma and tau must be n x n tables");
      }
      for (std::size_t i = 0; i < n * n; ++i) {
        if (_sigma[i] >= n || _tau[i] >= n) {
          throw ParameterError("table entry out of range");
        }
      }
    }

    //! Completes tau from sigma (see tau_from_sigma).
    static SolutionTable from_sigma(std::size_t n, std::vector<Point> sigma);

    std::size_t size() const noexcept {
      return _n;
    }

    Point sigma(std::size_t x, std::size_t y) const noexcept {
      return _sigma[x * _n + y];
    }

    Point tau(std::size_t y, std::size_t x) const noexcept {
      return _tau[y * _n + x];
    }

    std::span<Point const> sigma_row(std::size_t x) const noexcept {
      return {_sigma.data() + x * _n, _n};
    }

    std::span<Point const> tau_row(std::size_t y) const noexcept {
      return {_tau.data() + y * _n, _n};
    }

    std::vector<Point> const& sigma_table() const noexcept {
      return _sigma;
    }

    std::vector<Point> const& tau_table() const noexcept {
      return _tau;
    }

    //! r(x, y) = (sigma_x(y), tau_y(x)).
    std::pair<Point, Point> r(Point x, Point y) const noexcept {
      return {sigma(x, y), tau(y, x)};
    }

    bool operator==(SolutionTable const&) const = default;

   private:
    std::size_t        _n;
    std::vector<Point> _sigma;
    std::vector<Point> _tau;
  };

  //! tau_y(x) = sigma^{-1}_{sigma_x(y)}(x), the only tau that can make the
  //! pair involutive.  Throws if some row of sigma is not a bijection.
  inline std::vector<Point> tau_from_sigma(std::size_t n,
                                           std::span<Point const> sigma) {
    if (sigma.size() != n * n) {
      throw ParameterError("sigma must be an n x n table");
    }
    std::vector<Point> sigma_inv(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      auto row = sigma.subspan(x * n, n);
      if (!is_bijection(row)) {
        throw ParameterError("sigma row " + std::to_string(x)
                             + " is not a bijection");
      }
      for (std::size_t y = 0; y < n; ++y) {
        sigma_inv[x * n + row[y]] = static_cast<Point>(y);
      }
    }
    std::vector<Point> tau(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        tau[y * n + x] = sigma_inv[sigma[x * n + y] * n + x];
      }
    }
    return tau;
  }

  inline SolutionTable SolutionTable::from_sigma(std::size_t        n,
                                                 std::vector<Point> sigma) {
    auto tau = tau_from_sigma(n, sigma);
    return SolutionTable(n, std::move(sigma), std::move(tau));
  }

  struct VerificationReport {
    bool non_degenerate = false;
    bool involutive     = false;
    bool braid          = false;

    bool ok() const noexcept {
      return non_degenerate && involutive && braid;
    }
  };

  namespace detail {

    // The braid relation on all n^3 triples, with the tables narrowed to T
    // to keep them cache resident.
    template <typename T>
    bool braid_holds(SolutionTable const& s) {
      std::size_t const n = s.size();
      std::vector<T>    sig(n * n), tau(n * n), tc(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          sig[i * n + j] = static_cast<T>(s.sigma(i, j));
          tau[i * n + j] = static_cast<T>(s.tau(i, j));
          // tc[y * n + z] = tau_z(y), so that z-loops read contiguously
          tc[j * n + i] = static_cast<T>(s.tau(i, j));
        }
      }
      for (std::size_t x = 0; x < n; ++x) {
        T const* const sx = sig.data() + x * n;
        T const* const tx = tc.data() + x * n;
        for (std::size_t y = 0; y < n; ++y) {
          T const* const sy  = sig.data() + y * n;
          T const* const ty  = tc.data() + y * n;
          std::size_t const a1 = sx[y];
          std::size_t const b1 = tau[y * n + x];
          T const* const sa1 = sig.data() + a1 * n;
          T const* const ta1 = tc.data() + a1 * n;
          T const* const sb1 = sig.data() + b1 * n;
          T const* const tb1 = tc.data() + b1 * n;
          bool           ok  = true;
          for (std::size_t z = 0; z < n; ++z) {
            // (id x r)(r x id)(id x r)
            std::size_t const y1 = sy[z];
            std::size_t const z1 = ty[z];
            T const           x2 = sx[y1];
            std::size_t const y2 = tx[y1];
            T const           y3 = sig[y2 * n + z1];
            T const           z3 = tau[z1 * n + y2];
            // (r x id)(id x r)(r x id)
            std::size_t const b2 = sb1[z];
            T const           c2 = tb1[z];
            T const           a3 = sa1[b2];
            T const           b3 = ta1[b2];
            ok &= (x2 == a3) & (y3 == b3) & (z3 == c2);
          }
          if (!ok) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace detail

  //! Exhaustive check: bijectivity of all sigma_x and tau_y, r^2 = id on all
  //! pairs, and the braid relation on all n^3 triples.
  inline VerificationReport verify(SolutionTable const& s) {
    std::size_t const  n = s.size();
    VerificationReport report;

    report.non_degenerate = true;
    for (std::size_t x = 0; x < n && report.non_degenerate; ++x) {
      report.non_degenerate
          = is_bijection(s.sigma_row(x)) && is_bijection(s.tau_row(x));
    }

    report.involutive = true;
    for (Point x = 0; x < n && report.involutive; ++x) {
      for (Point y = 0; y < n; ++y) {
        auto [u, v] = s.r(x, y);
        if (s.r(u, v) != std::pair<Point, Point>(x, y)) {
          report.involutive = false;
          break;
        }
      }
    }

    report.braid = n <= 256 ? detail::braid_holds<std::uint8_t>(s)
                            : detail::braid_holds<std::uint16_t>(s);
    return report;
  }

  //! The group generated by the sigma_x.
  inline PermGroup
  permutation_group(SolutionTable const& s,
                    std::size_t max_elements = PermGroup::kDefaultMaxElements) {
    std::vector<Perm> gens;
    gens.reserve(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      auto row = s.sigma_row(x);
      gens.emplace_back(row.begin(), row.end());
    }
    return PermGroup(s.size(), std::move(gens), max_elements);
  }

  //! True iff the orbit of 0 under the sigma_x is everything.
  inline bool is_indecomposable(SolutionTable const& s) {
    std::size_t const  n = s.size();
    std::vector<bool>  seen(n, false);
    std::vector<Point> queue = {0};
    seen[0]                  = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t x = 0; x < n; ++x) {
        Point y = s.sigma(x, queue[i]);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return queue.size() == n;
  }

  struct Retraction {
    SolutionTable      solution;
    std::vector<Point> class_of;  // element -> class label
  };

  //! Quotient by x ~ y <=> sigma_x = sigma_y.  Classes are labelled 0..m-1 in
  //! increasing order of their smallest member.
  inline Retraction retract_with_classes(SolutionTable const& s) {
    std::size_t const  n = s.size();
    std::vector<Point>                  class_of(n);
    std::vector<Point>                  reps;
    std::map<std::vector<Point>, Point> labels;
    for (std::size_t x = 0; x < n; ++x) {
      auto row = s.sigma_row(x);
      auto [it, inserted]
          = labels.emplace(std::vector<Point>(row.begin(), row.end()),
                           static_cast<Point>(reps.size()));
      if (inserted) {
        reps.push_back(static_cast<Point>(x));
      }
      class_of[x] = it->second;
    }
    std::size_t const  m = reps.size();
    std::vector<Point> sigma(m * m), tau(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        sigma[i * m + j] = class_of[s.sigma(reps[i], reps[j])];
        tau[i * m + j]   = class_of[s.tau(reps[i], reps[j])];
      }
    }
    return {SolutionTable(m, std::move(sigma), std::move(tau)),
            std::move(class_of)};
  }

  inline SolutionTable retract(SolutionTable const& s) {
    return retract_with_classes(s).solution;
  }

  //! Least m with |Ret^m(S)| = 1, or nullopt if the retraction stops
  //! shrinking above size 1.
  inline std::optional<unsigned> multipermutation_level(SolutionTable const& s) {
    SolutionTable current = s;
    for (unsigned m = 0; m <= s.size(); ++m) {
      if (current.size() == 1) {
        return m;
      }
      SolutionTable next = retract(current);
      if (next.size() == current.size()) {
        return std::nullopt;
      }
      current = std::move(next);
    }
    return std::nullopt;
  }

  //! Sizes |Ret^0(S)|, |Ret^1(S)|, ... until the size stops changing.
  inline std::vector<std::size_t> retraction_sizes(SolutionTable const& s) {
    std::vector<std::size_t> sizes = {s.size()};
    SolutionTable            current = s;
    while (current.size() > 1) {
      current = retract(current);
      if (current.size() == sizes.back()) {
        break;
      }
      sizes.push_back(current.size());
    }
    return sizes;
  }

  //! Componentwise product on pairs, pair (i, j) indexed as i * n2 + j.
  inline SolutionTable product_solution(SolutionTable const& s1,
                                        SolutionTable const& s2) {
    std::size_t const n1 = s1.size(), n2 = s2.size(), n = n1 * n2;
    if (n > kMaxTableOrder) {
      throw ResourceError("product solution exceeds the table cap");
    }
    std::vector<Point> sigma(n * n), tau(n * n);
    for (std::size_t x1 = 0; x1 < n1; ++x1) {
      for (std::size_t x2 = 0; x2 < n2; ++x2) {
        std::size_t const x = x1 * n2 + x2;
        for (std::size_t y1 = 0; y1 < n1; ++y1) {
          for (std::size_t y2 = 0; y2 < n2; ++y2) {
            std::size_t const y = y1 * n2 + y2;
            sigma[x * n + y]
                = static_cast<Point>(s1.sigma(x1, y1) * n2 + s2.sigma(x2, y2));
            tau[x * n + y]
                = static_cast<Point>(s1.tau(x1, y1) * n2 + s2.tau(x2, y2));
          }
        }
      }
    }
    return SolutionTable(n, std::move(sigma), std::move(tau));
  }

  //! True iff phi is a bijection carrying s1 onto s2:
  //! phi(sigma_b(c)) = sigma'_{phi(b)}(phi(c)) and likewise for tau.
  inline bool is_solution_isomorphism(SolutionTable const&  s1,
                                      SolutionTable const&  s2,
                                      std::span<Point const> phi) {
    std::size_t const n = s1.size();
    if (s2.size() != n || phi.size() != n || !is_bijection(phi)) {
      return false;
    }
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (phi[s1.sigma(b, c)] != s2.sigma(phi[b], phi[c])
            || phi[s1.tau(b, c)] != s2.tau(phi[b], phi[c])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace ybe

#endif  // YBE_SOLUTION_HPP_
