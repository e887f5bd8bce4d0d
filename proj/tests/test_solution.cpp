#include <catch_amalgamated.hpp>

#include <numeric>

#include "oracles.hpp"
#include "ybe/cocyclic.hpp"
#include "ybe/solution.hpp"

using namespace ybe;

namespace {

  SolutionTable flip(std::size_t n) {
    std::vector<Point> id(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      std::iota(id.begin() + x * n, id.begin() + (x + 1) * n, Point{0});
    }
    return SolutionTable(n, id, id);
  }

  SolutionTable affine(std::size_t n, Int c0, Int cb, Int cc) {
    std::vector<Point> sigma(n * n);
    for (Int b = 0; b < n; ++b) {
      for (Int c = 0; c < n; ++c) {
        sigma[b * n + c] = static_cast<Point>((c0 + cb * b + cc * c) % n);
      }
    }
    return SolutionTable::from_sigma(n, std::move(sigma));
  }

}  // namespace

TEST_CASE("verify known solutions", "[solution]") {
  auto const k = make_K({9, 3, 1});
  auto const r = verify(k);
  CHECK(r.non_degenerate);
  CHECK(r.involutive);
  CHECK(r.braid);
  CHECK(verify(flip(5)).ok());
  // sigma_b(c) = 1 + 3b + 4c on Z_9
  CHECK(affine(9, 1, 3, 4) == k);
  CHECK(verify(affine(9, 1, 3, 4)).ok());
}

TEST_CASE("verify detects a corrupted row", "[solution]") {
  auto const         k     = make_K({9, 3, 1});
  std::vector<Point> sigma = k.sigma_table();
  std::swap(sigma[9], sigma[10]);
  SolutionTable const bad(9, sigma, k.tau_table());
  auto const          r = verify(bad);
  CHECK(r.non_degenerate);
  CHECK_FALSE(r.braid);
  CHECK(oracle::axioms(bad).braid == r.braid);
  CHECK(oracle::axioms(bad).involutive == r.involutive);
}

TEST_CASE("verify agrees with direct evaluation", "[solution]") {
  // every sigma_x(y) = y + e(x) with e: Z_4 -> Z_4, tau completed
  std::size_t agree = 0, valid = 0;
  for (Int code = 0; code < 256; ++code) {
    std::vector<Point> sigma(16);
    for (Int x = 0; x < 4; ++x) {
      Int const e = (code >> (2 * x)) & 3;
      for (Int y = 0; y < 4; ++y) {
        sigma[x * 4 + y] = static_cast<Point>((y + e) % 4);
      }
    }
    auto const s  = SolutionTable::from_sigma(4, sigma);
    auto const r  = verify(s);
    auto const o  = oracle::axioms(s);
    agree += r.non_degenerate == o.non_degenerate && r.involutive == o.involutive
             && r.braid == o.braid;
    valid += r.ok();
  }
  CHECK(agree == 256);
  CHECK(valid > 0);
  CHECK(valid < 256);
}

TEST_CASE("tau completion", "[solution]") {
  auto const f = flip(4);
  CHECK(tau_from_sigma(4, f.sigma_table()) == f.tau_table());
  // sigma_x(y) = rx + y + 1 completes to tau_y(x) = x - 1 - r(y + 1)
  Int const  n = 9, r = 3;
  auto const s = rump_example(n, r);
  for (Int x = 0; x < n; ++x) {
    for (Int y = 0; y < n; ++y) {
      Int const expect = ((x + 9 * n - 1 - r * (y + 1)) % n);
      CHECK(s.tau(y, x) == expect);
    }
  }
  std::vector<Point> bad = {0, 0, 1, 0};
  CHECK_THROWS_AS(tau_from_sigma(2, bad), ParameterError);
  CHECK_THROWS_AS(SolutionTable(2, {0, 1}, {0, 1}), ParameterError);
  CHECK_THROWS_AS(SolutionTable(2, {0, 1, 2, 0}, {0, 1, 0, 1}), ParameterError);
}

TEST_CASE("permutation group of a solution", "[solution]") {
  auto const g = permutation_group(make_K({9, 3, 1}));
  CHECK(g.order() == 9);
  CHECK(g.is_cyclic());
  CHECK(g.is_regular());
  auto const g0 = permutation_group(make_K({9, 0, 1}));
  CHECK(g0.order() == 9);
  CHECK(g0.generators().size() == 1);
  auto const gf = permutation_group(flip(3));
  CHECK(gf.order() == 1);
  CHECK_FALSE(gf.is_transitive());
}

TEST_CASE("indecomposability", "[solution]") {
  CHECK(is_indecomposable(make_K({9, 3, 1})));
  CHECK_FALSE(is_indecomposable(flip(2)));
  // every sigma of K(2,0,1) x K(2,0,1) is the same translation by (1, 1)
  auto const k2 = make_K({2, 0, 1});
  auto const p  = product_solution(k2, k2);
  CHECK(verify(p).ok());
  CHECK_FALSE(is_indecomposable(p));
  CHECK(permutation_group(p).order() == 2);
  // K(2,0,1) x K(3,0,1) is indecomposable, with regular group Z_6
  auto const p6 = product_solution(k2, make_K({3, 0, 1}));
  CHECK(is_indecomposable(p6));
  CHECK(permutation_group(p6).is_cyclic());
  CHECK(permutation_group(p6).is_regular());
  // K(4,0,1) x K(4,0,1): sigma_x = translation by (1, 1) for every x
  auto const k4 = make_K({4, 0, 1});
  CHECK_FALSE(is_indecomposable(product_solution(k4, k4)));
}

TEST_CASE("retraction", "[solution]") {
  CHECK(retract(flip(4)).size() == 1);
  auto const k = make_K({27, 3, 1});
  auto const r = retract_with_classes(k);
  CHECK(r.solution.size() == 9);
  CHECK(r.solution.size() == oracle::retract_size(k));
  CHECK(r.class_of[0] == 0);
  CHECK(r.class_of[9] == 0);
  CHECK(r.class_of[10] == 1);
  CHECK(verify(r.solution).ok());
  CHECK(retraction_sizes(k) == std::vector<std::size_t>{27, 9, 3, 1});
}

TEST_CASE("multipermutation level", "[solution]") {
  CHECK(multipermutation_level(make_K({27, 3, 1})) == 3u);
  CHECK(multipermutation_level(make_K({9, 0, 1})) == 1u);
  CHECK(multipermutation_level(make_K({36, 9, 1, Family::four_n})) == 2u);
  CHECK(multipermutation_level(flip(1)) == 0u);
  // pairwise distinct rows: the retraction never shrinks
  CHECK_FALSE(multipermutation_level(affine(3, 0, 1, 1)).has_value());
}

TEST_CASE("level of K(p^k, p^w, a) is ceil(k / w)", "[solution]") {
  for (Int p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned k = 1; ipow(p, k) <= 243; ++k) {
      for (unsigned w = 1; w <= k; ++w) {
        if (p == 2 && w == 1 && k >= 2) {
          continue;
        }
        for (auto const& u : units(ipow(p, k))) {
          auto const s = make_K({ipow(p, k), ipow(p, w), u.value()});
          REQUIRE(multipermutation_level(s) == (k + w - 1) / w);
        }
      }
    }
  }
}

TEST_CASE("permutation solution", "[solution]") {
  // r(x, y) = (f(y), f^{-1}(x)) with f = (01)
  std::vector<Point> sigma = {1, 0, 1, 0};
  auto const         s     = SolutionTable::from_sigma(2, sigma);
  CHECK(verify(s).ok());
  CHECK(retract(s).size() == 1);
  CHECK(multipermutation_level(s) == 1u);
}

TEST_CASE("product solution indexing", "[solution]") {
  auto const a = make_K({3, 0, 1});
  auto const b = make_K({4, 0, 1});
  auto const p = product_solution(a, b);
  CHECK(p.size() == 12);
  CHECK(verify(p).ok());
  // pair (1, 2) is 1 * 4 + 2 = 6; sigma_(1,2)((0,0)) = (1, 1) = 5
  CHECK(p.sigma(6, 0) == 5);
}
