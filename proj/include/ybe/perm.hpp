#ifndef YBE_PERM_HPP_
#define YBE_PERM_HPP_

// Permutations of {0, ..., n-1} and groups generated by them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "error.hpp"

namespace ybe {

  using Point = std::uint32_t;
  using Perm  = std::vector<Point>;

  inline Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), Point{0});
    return p;
  }

  inline bool is_bijection(std::span<Point const> p) {
    std::vector<bool> seen(p.size(), false);
    for (Point x : p) {
      if (x >= p.size() || seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  }

  //! (f * g)(x) = f(g(x)).
  inline Perm compose(Perm const& f, Perm const& g) {
    Perm out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
      out[x] = f[g[x]];
    }
    return out;
  }

  inline Perm inverse(std::span<Point const> f) {
    Perm out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      out[f[x]] = static_cast<Point>(x);
    }
    return out;
  }

  inline Int perm_order(Perm const& f) {
    std::vector<bool> seen(f.size(), false);
    Int               order = 1;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (seen[x]) {
        continue;
      }
      Int len = 0;
      for (std::size_t y = x; !seen[y]; y = f[y]) {
        seen[y] = true;
        ++len;
      }
      order = std::lcm(order, len);
    }
    return order;
  }

  //! Disjoint cycle notation without fixed points, e.g. "(147)(285)".
  //! Points are separated by spaces once the degree exceeds 10; the identity
  //! prints as "()".
  inline std::string cycle_notation(std::span<Point const> f) {
    bool const        spaced = f.size() > 10;
    std::vector<bool> seen(f.size(), false);
    std::string       out;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (seen[x] || f[x] == x) {
        continue;
      }
      out += '(';
      bool first = true;
      for (std::size_t y = x; !seen[y]; y = f[y]) {
        seen[y] = true;
        if (!first && spaced) {
          out += ' ';
        }
        out += std::to_string(y);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  //! A finite permutation group given by generators, with its element set
  //! computed by breadth-first closure.
  class PermGroup {
   public:
    static constexpr std::size_t kDefaultMaxElements = 1'000'000;

    PermGroup(std::size_t degree,
              std::vector<Perm> generators,
              std::size_t max_elements = kDefaultMaxElements)
        : _degree(degree) {
      std::set<Perm> distinct;
      for (auto& g : generators) {
        if (g.size() != degree || !is_bijection(g)) {
          throw ParameterError("generator is not a permutation of the degree");
        }
        distinct.insert(std::move(g));
      }
      _generators.assign(distinct.begin(), distinct.end());

      Perm const id = identity_perm(degree);
      _elements.insert(id);
      std::vector<Perm const*> frontier = {&*_elements.find(id)};
      while (!frontier.empty()) {
        std::vector<Perm const*> next;
        for (Perm const* f : frontier) {
          for (auto const& g : _generators) {
            auto [it, inserted] = _elements.insert(compose(g, *f));
            if (inserted) {
              if (_elements.size() > max_elements) {
                throw ResourceError("permutation group exceeds "
                                    + std::to_string(max_elements)
                                    + " elements");
              }
              next.push_back(&*it);
            }
          }
        }
        frontier = std::move(next);
      }
    }

    std::size_t degree() const noexcept {
      return _degree;
    }

    std::size_t order() const noexcept {
      return _elements.size();
    }

    std::vector<Perm> const& generators() const noexcept {
      return _generators;
    }

    std::set<Perm> const& elements() const noexcept {
      return _elements;
    }

    bool contains(Perm const& f) const {
      return _elements.count(f) != 0;
    }

    bool is_abelian() const {
      for (std::size_t i = 0; i < _generators.size(); ++i) {
        for (std::size_t j = i + 1; j < _generators.size(); ++j) {
          if (compose(_generators[i], _generators[j])
              != compose(_generators[j], _generators[i])) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_cyclic() const {
      Int const n = order();
      for (auto const& f : _elements) {
        if (perm_order(f) == n) {
          return true;
        }
      }
      return false;
    }

    //! Orbit of a point under the generators, ascending.
    std::vector<Point> orbit(Point x) const {
      return orbit_of(_degree, _generators, x);
    }

    bool is_transitive() const {
      return _degree == 0 || orbit(0).size() == _degree;
    }

    bool is_regular() const {
      return is_transitive() && order() == _degree;
    }

    static std::vector<Point> orbit_of(std::size_t              degree,
                                       std::vector<Perm> const& gens,
                                       Point                    x) {
      std::vector<bool>  seen(degree, false);
      std::vector<Point> queue = {x};
      seen[x]                  = true;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto const& g : gens) {
          Point y = g[queue[i]];
          if (!seen[y]) {
            seen[y] = true;
            queue.push_back(y);
          }
        }
      }
      std::sort(queue.begin(), queue.end());
      return queue;
    }

   private:
    std::size_t       _degree;
    std::vector<Perm> _generators;
    std::set<Perm>    _elements;
  };

}  // namespace ybe

#endif  // YBE_PERM_HPP_
