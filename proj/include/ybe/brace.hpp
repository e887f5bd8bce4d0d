#ifndef YBE_BRACE_HPP_
#define YBE_BRACE_HPP_

// Finite left braces on residue carriers: the parametric family B_t(n) with
// a o b = a + b + t*a*b, explicit operation tables (the four-element
// cocyclic brace that is not cyclic), and direct products of these.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arith.hpp"
#include "error.hpp"
#include "solution.hpp"

namespace ybe {

  class Brace {
   public:
    enum class Kind { parametric, tables, product };

    //! Explicit tables are only admitted up to this carrier size.
    static constexpr std::size_t kMaxTableSize = 64;

    //! B_t(n).  t is stored reduced mod n, so t = n and t = 0 coincide.
    static Brace parametric(Int n, Int t) {
      if (n == 0 || n > kMaxOrder) {
        throw ParameterError("brace order out of range");
      }
      if (!is_nilpotent(t, n)) {
        throw ParameterError("t not in nil(Z_n): t = " + std::to_string(t)
                             + ", n = " + std::to_string(n));
      }
      return Brace(Parametric{n, t % n});
    }

    //! Brace from explicit addition and circle tables (row-major n x n).
    //! All group and brace axioms are checked exhaustively.
    static Brace from_tables(std::size_t        n,
                             std::vector<Point> add,
                             std::vector<Point> circ) {
      if (n == 0 || n > kMaxTableSize) {
        throw ParameterError("explicit brace tables are limited to "
                             + std::to_string(kMaxTableSize) + " elements");
      }
      if (add.size() != n * n || circ.size() != n * n) {
        throw ParameterError("brace tables must be n x n");
      }
      for (std::size_t i = 0; i < n * n; ++i) {
        if (add[i] >= n || circ[i] >= n) {
          throw ParameterError("brace table entry out of range");
        }
      }
      Tables tb{n, std::move(add), std::move(circ), {}, {}};
      tb.neg      = group_inverses(n, tb.add, "addition");
      tb.circ_inv = group_inverses(n, tb.circ, "circle operation");
      auto at     = [&](auto const& t, std::size_t a, std::size_t b) {
        return t[a * n + b];
      };
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (at(tb.add, a, b) != at(tb.add, b, a)) {
            throw ParameterError("addition is not commutative");
          }
          for (std::size_t c = 0; c < n; ++c) {
            if (at(tb.add, at(tb.add, a, b), c) != at(tb.add, a, at(tb.add, b, c))
                || at(tb.circ, at(tb.circ, a, b), c)
                       != at(tb.circ, a, at(tb.circ, b, c))) {
              throw ParameterError("operation is not associative");
            }
            // a o b + a o c = a o (b + c) + a
            if (at(tb.add, at(tb.circ, a, b), at(tb.circ, a, c))
                != at(tb.add, at(tb.circ, a, at(tb.add, b, c)), a)) {
              throw ParameterError("left brace law fails");
            }
          }
        }
      }
      return Brace(std::move(tb));
    }

    static Brace product(Brace const& first, Brace const& second) {
      if (first.size() * second.size() > kMaxOrder) {
        throw ParameterError("product brace too large");
      }
      return Brace(Product{std::make_shared<Brace const>(first),
                           std::make_shared<Brace const>(second)});
    }

    Kind kind() const noexcept {
      return static_cast<Kind>(_data.index());
    }

    Int size() const noexcept {
      return std::visit([](auto const& d) { return d.size(); }, _data);
    }

    //! The parameter t of B_t(n); nullopt for non-parametric braces.
    std::optional<Int> parameter() const noexcept {
      if (auto const* p = std::get_if<Parametric>(&_data)) {
        return p->t;
      }
      return std::nullopt;
    }

    //! Factors of a product brace.
    std::pair<Brace const&, Brace const&> factors() const {
      auto const& p = std::get<Product>(_data);
      return {*p.first, *p.second};
    }

    Int add(Int a, Int b) const {
      return std::visit(
          [&](auto const& d) -> Int {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, Parametric>) {
              return add_mod(a, b, d.n);
            } else if constexpr (std::is_same_v<D, Tables>) {
              return d.add[a * d.n + b];
            } else {
              return d.combine(a, b, [](Brace const& f, Int x, Int y) {
                return f.add(x, y);
              });
            }
          },
          _data);
    }

    Int neg(Int a) const {
      return std::visit(
          [&](auto const& d) -> Int {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, Parametric>) {
              return sub_mod(0, a, d.n);
            } else if constexpr (std::is_same_v<D, Tables>) {
              return d.neg[a];
            } else {
              return d.apply(a, [](Brace const& f, Int x) { return f.neg(x); });
            }
          },
          _data);
    }

    Int sub(Int a, Int b) const {
      return add(a, neg(b));
    }

    Int circ(Int a, Int b) const {
      return std::visit(
          [&](auto const& d) -> Int {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, Parametric>) {
              // a + b + t*a*b
              Int const tab = mul_mod(mul_mod(d.t, a, d.n), b, d.n);
              return add_mod(add_mod(a, b, d.n), tab, d.n);
            } else if constexpr (std::is_same_v<D, Tables>) {
              return d.circ[a * d.n + b];
            } else {
              return d.combine(a, b, [](Brace const& f, Int x, Int y) {
                return f.circ(x, y);
              });
            }
          },
          _data);
    }

    //! Inverse in (B, o).  For B_t(n) this is -a(1 + t*a)^{-1}.
    Int circ_inverse(Int a) const {
      return std::visit(
          [&](auto const& d) -> Int {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, Parametric>) {
              if (d.n == 1) {
                return 0;
              }
              Int const u = add_mod(1, mul_mod(d.t, a, d.n), d.n);
              return mul_mod(sub_mod(0, a, d.n), mod_inverse(u, d.n), d.n);
            } else if constexpr (std::is_same_v<D, Tables>) {
              return d.circ_inv[a];
            } else {
              return d.apply(
                  a, [](Brace const& f, Int x) { return f.circ_inverse(x); });
            }
          },
          _data);
    }

    //! lambda_a(b) = a o b - a.
    Int lambda(Int a, Int b) const {
      return sub(circ(a, b), a);
    }

    //! lambda_a^{-1}(b) = lambda_{inverse of a}(b).
    Int lambda_inverse(Int a, Int b) const {
      return lambda(circ_inverse(a), b);
    }

    //! a * b = a o b - a - b.
    Int star(Int a, Int b) const {
      return sub(sub(circ(a, b), a), b);
    }

   private:
    struct Parametric {
      Int n;
      Int t;
      Int size() const noexcept {
        return n;
      }
    };

    struct Tables {
      std::size_t        n;
      std::vector<Point> add;
      std::vector<Point> circ;
      std::vector<Point> neg;
      std::vector<Point> circ_inv;
      Int                size() const noexcept {
        return n;
      }
    };

    struct Product {
      std::shared_ptr<Brace const> first;
      std::shared_ptr<Brace const> second;

      Int size() const noexcept {
        return first->size() * second->size();
      }

      template <typename Op>
      Int combine(Int a, Int b, Op op) const {
        Int const m = second->size();
        return op(*first, a / m, b / m) * m + op(*second, a % m, b % m);
      }

      template <typename Op>
      Int apply(Int a, Op op) const {
        Int const m = second->size();
        return op(*first, a / m) * m + op(*second, a % m);
      }
    };

    using Data = std::variant<Parametric, Tables, Product>;

    explicit Brace(Data d) : _data(std::move(d)) {}

    static std::vector<Point> group_inverses(std::size_t               n,
                                             std::vector<Point> const& op,
                                             char const*               what) {
      for (std::size_t a = 0; a < n; ++a) {
        if (op[a] != a || op[a * n] != a) {
          throw ParameterError(std::string(what) + ": 0 is not neutral");
        }
      }
      std::vector<Point> inv(n);
      for (std::size_t a = 0; a < n; ++a) {
        auto row = std::span<Point const>(op).subspan(a * n, n);
        auto it  = std::find(row.begin(), row.end(), Point{0});
        if (it == row.end()) {
          throw ParameterError(std::string(what) + ": missing inverse");
        }
        inv[a] = static_cast<Point>(it - row.begin());
        if (op[inv[a] * n + a] != 0) {
          throw ParameterError(std::string(what) + ": inverse not two-sided");
        }
      }
      return inv;
    }

    Data _data;
  };

  inline Brace make_Bt(Int n, Int t) {
    return Brace::parametric(n, t);
  }

  inline Brace product_brace(Brace const& b1, Brace const& b2) {
    return Brace::product(b1, b2);
  }

  //! Exhaustive check of a o b + a o c = a o (b + c) + a.
  inline bool satisfies_brace_law(Brace const& b) {
    Int const n = b.size();
    for (Int x = 0; x < n; ++x) {
      for (Int y = 0; y < n; ++y) {
        Int const xy = b.circ(x, y);
        for (Int z = 0; z < n; ++z) {
          if (b.add(xy, b.circ(x, z)) != b.add(b.circ(x, b.add(y, z)), x)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! The four-element brace obtained from B_2(4) by exchanging + and o: its
  //! additive group is the Klein group and its circle group is Z_4.
  inline Brace make_exceptional4() {
    Brace const        b24 = make_Bt(4, 2);
    std::vector<Point> add(16), circ(16);
    for (Int a = 0; a < 4; ++a) {
      for (Int c = 0; c < 4; ++c) {
        add[a * 4 + c]  = static_cast<Point>(b24.circ(a, c));
        circ[a * 4 + c] = static_cast<Point>(b24.add(a, c));
      }
    }
    return Brace::from_tables(4, std::move(add), std::move(circ));
  }

  struct SocleSet {
    std::vector<Int> members;  // ascending

    bool contains(Int a) const {
      return std::binary_search(members.begin(), members.end(), a);
    }
    std::size_t size() const noexcept {
      return members.size();
    }
  };

  //! All a with lambda_a = id.
  inline SocleSet socle(Brace const& b) {
    Int const n = b.size();
    SocleSet  soc;
    for (Int a = 0; a < n; ++a) {
      bool trivial = true;
      for (Int c = 0; c < n && trivial; ++c) {
        trivial = b.lambda(a, c) == c;
      }
      if (trivial) {
        soc.members.push_back(a);
      }
    }
    return soc;
  }

  //! Additive subgroup generated by gens (closure under +), ascending.
  inline std::vector<Int> additive_span(Brace const& b, std::vector<Int> gens) {
    Int const         n = b.size();
    std::vector<bool> in_span(n, false);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Int> queue = {0};
    in_span[0]             = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Int g : gens) {
        Int s = b.add(queue[i], g);
        if (!in_span[s]) {
          in_span[s] = true;
          queue.push_back(s);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  struct NilpotencyDegrees {
    //! Least m with B^{m+1} = 0 (left) and B^{(m+1)} = 0 (right); nullopt if
    //! the chain stabilizes above {0}.
    std::optional<unsigned>       left;
    std::optional<unsigned>       right;
    std::vector<std::size_t>      left_sizes;   // |B^1|, |B^2|, ...
    std::vector<std::size_t>      right_sizes;  // |B^(1)|, |B^(2)|, ...
  };

  namespace detail {

    template <bool Left>
    std::optional<unsigned> star_chain(Brace const&              b,
                                       std::vector<std::size_t>& sizes) {
      Int const        n = b.size();
      std::vector<Int> all(n);
      std::iota(all.begin(), all.end(), Int{0});
      std::vector<Int> current = all;
      sizes                    = {current.size()};
      for (unsigned m = 0;; ++m) {
        if (current.size() == 1) {
          return m;
        }
        std::vector<Int> gens;
        gens.reserve(n * current.size());
        for (Int a : all) {
          for (Int c : current) {
            gens.push_back(Left ? b.star(a, c) : b.star(c, a));
          }
        }
        std::vector<Int> next = additive_span(b, std::move(gens));
        sizes.push_back(next.size());
        if (next.size() == current.size()) {
          return std::nullopt;
        }
        current = std::move(next);
      }
    }

  }  // namespace detail

  inline NilpotencyDegrees nilpotency_chains(Brace const& b) {
    NilpotencyDegrees d;
    d.left  = detail::star_chain<true>(b, d.left_sizes);
    d.right = detail::star_chain<false>(b, d.right_sizes);
    return d;
  }

  //! sigma_x(y) = lambda_x(y), tau_y(x) = lambda^{-1}_{lambda_x(y)}(x).
  inline SolutionTable associated_solution(Brace const& b) {
    Int const n = b.size();
    if (n > kMaxTableOrder) {
      throw ResourceError("brace too large to tabulate its solution");
    }
    std::vector<Point> sigma(n * n), tau(n * n);
    for (Int x = 0; x < n; ++x) {
      for (Int y = 0; y < n; ++y) {
        Int const s          = b.lambda(x, y);
        sigma[x * n + y]     = static_cast<Point>(s);
        tau[y * n + x]       = static_cast<Point>(b.lambda_inverse(s, x));
      }
    }
    return SolutionTable(n, std::move(sigma), std::move(tau));
  }

  //! B / Soc(B).  Cosets are relabelled by their smallest representative; for
  //! B_t(n) this is B_{t mod (n/g)}(n/g) with g = gcd(t, n).
  inline Brace quotient_by_socle(Brace const& b) {
    switch (b.kind()) {
      case Brace::Kind::parametric: {
        Int const n = b.size();
        Int const t = *b.parameter();
        Int const g = gcd(t, n);  // |Soc| = |Ann(t)|
        Int const m = n / g;
        return Brace::parametric(m, t % m);
      }
      case Brace::Kind::product: {
        auto [first, second] = b.factors();
        return Brace::product(quotient_by_socle(first),
                              quotient_by_socle(second));
      }
      case Brace::Kind::tables:
      default: {
        Int const          n   = b.size();
        SocleSet const     soc = socle(b);
        constexpr Point    kNone = static_cast<Point>(-1);
        std::vector<Point> label(n, kNone);
        std::vector<Int>   reps;
        for (Int a = 0; a < n; ++a) {
          if (label[a] != kNone) {
            continue;
          }
          for (Int s : soc.members) {
            label[b.add(a, s)] = static_cast<Point>(reps.size());
          }
          reps.push_back(a);
        }
        std::size_t const  m = reps.size();
        std::vector<Point> add(m * m), circ(m * m);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) {
            add[i * m + j]  = label[b.add(reps[i], reps[j])];
            circ[i * m + j] = label[b.circ(reps[i], reps[j])];
          }
        }
        return Brace::from_tables(m, std::move(add), std::move(circ));
      }
    }
  }

  //! The isomorphism B_t(n) -> B_{t_1}(p_1^{k_1}) x ... x B_{t_s}(p_s^{k_s}),
  //! a -> (a * t/t_i mod p_i^{k_i})_i, together with its certification.
  struct BtSplitting {
    std::vector<Brace> components;
    Brace              product;
    std::vector<Int>   image;  // image[a] = index of f(a) in the product
    bool               bijective     = false;
    bool               respects_add  = false;
    bool               respects_circ = false;

    bool certified() const noexcept {
      return bijective && respects_add && respects_circ;
    }
  };

  inline BtSplitting bt_splitting_iso(Int n, Int t) {
    if (n < 2) {
      throw ParameterError("bt_splitting_iso: n must be at least 2");
    }
    FactoredInt const nf(n);
    if (t % n == 0) {
      t = n;
    }
    if (n % t != 0 || !is_nilpotent(t, nf)) {
      throw ParameterError("invalid t decomposition: t must be a product of "
                           "prime powers p_i^{t_i} with 1 <= t_i <= k_i");
    }
    std::vector<Brace> comps;
    std::vector<Int>   mult, mods;
    for (auto const& f : nf.factors()) {
      Int const q  = f.value();
      Int const ti = ipow(f.prime, valuation(t, f.prime));
      comps.push_back(Brace::parametric(q, ti % q));
      mult.push_back(t / ti);
      mods.push_back(q);
    }
    Brace prod = comps.front();
    for (std::size_t i = 1; i < comps.size(); ++i) {
      prod = Brace::product(prod, comps[i]);
    }
    Brace const bt = Brace::parametric(n, t);

    std::vector<Int> image(n);
    for (Int a = 0; a < n; ++a) {
      Int idx = 0;
      for (std::size_t i = 0; i < mods.size(); ++i) {
        idx = idx * mods[i] + mul_mod(a, mult[i], mods[i]);
      }
      image[a] = idx;
    }
    BtSplitting out{std::move(comps), prod, std::move(image)};

    std::vector<bool> hit(n, false);
    out.bijective = true;
    for (Int a = 0; a < n; ++a) {
      if (hit[out.image[a]]) {
        out.bijective = false;
      }
      hit[out.image[a]] = true;
    }
    out.respects_add  = true;
    out.respects_circ = true;
    for (Int a = 0; a < n; ++a) {
      for (Int c = 0; c < n; ++c) {
        if (out.image[bt.add(a, c)] != prod.add(out.image[a], out.image[c])) {
          out.respects_add = false;
        }
        if (out.image[bt.circ(a, c)] != prod.circ(out.image[a], out.image[c])) {
          out.respects_circ = false;
        }
      }
    }
    return out;
  }

  struct GroupShape {
    bool             cyclic = false;
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ..., ascending
  };

  //! Structure of the abelian group (B, o).  Throws if (B, o) is not abelian.
  inline GroupShape multiplicative_group_shape(Brace const& b) {
    Int const n = b.size();
    for (Int x = 0; x < n; ++x) {
      for (Int y = x + 1; y < n; ++y) {
        if (b.circ(x, y) != b.circ(y, x)) {
          throw ParameterError("multiplicative group is not abelian");
        }
      }
    }
    std::vector<Int> order(n);
    for (Int x = 0; x < n; ++x) {
      Int k = 1;
      for (Int y = x; y != 0; y = b.circ(y, x)) {
        ++k;
      }
      order[x] = k;
    }
    GroupShape shape;
    if (n == 1) {
      shape.cyclic = true;
      return shape;
    }
    // For each prime, the number of cyclic p-factors of order >= p^j is
    // log_p(N_j / N_{j-1}) where N_j counts elements killed by p^j.
    std::vector<std::vector<unsigned>> parts;  // per prime, descending exps
    std::vector<Int>                   primes;
    for (auto const& f : FactoredInt(n).factors()) {
      std::vector<Int> killed = {1};
      Int              pj     = 1;
      while (killed.back() < ipow(f.prime, f.exponent)) {
        pj *= f.prime;
        Int cnt = 0;
        for (Int x = 0; x < n; ++x) {
          cnt += (pj % order[x] == 0);
        }
        killed.push_back(cnt);
      }
      std::vector<unsigned> at_least;  // at_least[j-1] = #factors >= p^j
      for (std::size_t j = 1; j < killed.size(); ++j) {
        at_least.push_back(valuation(killed[j] / killed[j - 1], f.prime));
      }
      std::vector<unsigned> exps;
      for (unsigned r = at_least.empty() ? 0 : at_least[0]; r > 0; --r) {
        unsigned e = 0;
        while (e < at_least.size() && at_least[e] >= r) {
          ++e;
        }
        exps.push_back(e);
      }
      std::sort(exps.rbegin(), exps.rend());
      parts.push_back(std::move(exps));
      primes.push_back(f.prime);
    }
    std::size_t rank = 0;
    for (auto const& e : parts) {
      rank = std::max(rank, e.size());
    }
    for (std::size_t i = 0; i < rank; ++i) {
      Int d = 1;
      for (std::size_t p = 0; p < parts.size(); ++p) {
        if (i < parts[p].size()) {
          d *= ipow(primes[p], parts[p][i]);
        }
      }
      shape.invariant_factors.push_back(d);
    }
    std::sort(shape.invariant_factors.begin(), shape.invariant_factors.end());
    shape.cyclic = shape.invariant_factors.size() <= 1;
    return shape;
  }

}  // namespace ybe

#endif  // YBE_BRACE_HPP_
