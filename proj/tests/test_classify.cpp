#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <trusslab/classify.hpp>
#include <trusslab/fixtures.hpp>

using namespace trusslab;
namespace fx = trusslab::fixtures;

namespace {

  bool is_truss_oracle(finite_heap const& h, table const& mul) {
    std::size_t const n = h.size();
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            return false;
          }
          for (element x = 0; x < n; ++x) {
            if (mul(x, h(a, b, c)) != h(mul(x, a), mul(x, b), mul(x, c))
                || mul(h(a, b, c), x) != h(mul(a, x), mul(b, x), mul(c, x))) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::vector<table> naive_products(finite_heap const& h) {
    std::size_t const    n = h.size();
    std::vector<element> c(n * n, 0);
    std::vector<table>   out;
    while (true) {
      table t(n, c);
      if (is_truss_oracle(h, t)) {
        out.push_back(t);
      }
      std::size_t i = c.size();
      while (i > 0 && ++c[i - 1] == n) {
        c[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

  bool brute_isomorphic(finite_truss const& a, finite_truss const& b) {
    if (a.size() != b.size()) {
      return false;
    }
    std::vector<element> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      if (is_truss_morphism(a, b, endo_map(p))) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  std::vector<finite_truss> products_on(finite_heap const& h) {
    std::vector<finite_truss> out;
    for (auto const& m : enumerate_truss_products(h)) {
      out.emplace_back(h, m, finite_truss::trusted);
    }
    return out;
  }

}  // namespace

TEST_CASE("enumeration agrees with the naive filter", "[classify][oracle]") {
  CHECK(enumerate_truss_products(cyclic_heap(1)).size() == 1);
  auto const z2 = enumerate_truss_products(fx::z2_heap());
  CHECK(z2.size() == 8);
  CHECK(z2 == naive_products(fx::z2_heap()));
  std::set<table> named;
  for (std::size_t i = 1; i <= 8; ++i) {
    named.insert(fx::z2_table(i));
  }
  CHECK(std::set<table>(z2.begin(), z2.end()) == named);
  for (auto const& h : heaps_of_order(3)) {
    CHECK(enumerate_truss_products(h) == naive_products(h));
  }
}

TEST_CASE("enumeration on order 4 yields trusses only", "[classify]") {
  for (auto const& h : heaps_of_order(4)) {
    auto const all = enumerate_truss_products(h);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (auto const& m : all) {
      CHECK(validate_truss(h, m).ok());
    }
  }
  CHECK_THROWS_AS(enumerate_truss_products(cyclic_heap(5)), size_cap_exceeded);
}

TEST_CASE("isomorphisms between the two-element tables", "[classify]") {
  auto const swap = fx::swap2();
  auto const i73  = isomorphism(fx::z2_truss(7), fx::z2_truss(3));
  REQUIRE(i73.has_value());
  CHECK(*i73 == swap);
  auto const i62 = isomorphism(fx::z2_truss(6), fx::z2_truss(2));
  REQUIRE(i62.has_value());
  CHECK(*i62 == swap);
  auto const i81 = isomorphism(fx::z2_truss(8), fx::z2_truss(1));
  REQUIRE(i81.has_value());
  CHECK(*i81 == swap);
  CHECK_FALSE(isomorphism(fx::z2_truss(1), fx::z2_truss(3)).has_value());
  CHECK_FALSE(isomorphism(fx::z2_truss(4), fx::z2_truss(5)).has_value());
  CHECK_FALSE(isomorphism(fx::z2_truss(3), function_truss(fx::z2_truss(3), 2)).has_value());
}

TEST_CASE("isomorphism search agrees with brute force", "[classify][oracle]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<finite_truss> all;
    for (auto const& h : heaps_of_order(n)) {
      for (auto& t : products_on(h)) {
        all.push_back(std::move(t));
      }
    }
    // Order 4 has 306 products; compare a deterministic sample of pairs.
    std::mt19937                          rng(7);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::size_t const pairs = n <= 3 ? all.size() * all.size() : 3000;
    for (std::size_t k = 0; k < pairs; ++k) {
      std::size_t const i = n <= 3 ? k / all.size() : pick(rng);
      std::size_t const j = n <= 3 ? k % all.size() : pick(rng);
      auto const        f = isomorphism(all[i], all[j]);
      bool const        b = brute_isomorphic(all[i], all[j]);
      REQUIRE(f.has_value() == b);
      if (f) {
        CHECK(f->is_bijective());
        CHECK(is_truss_morphism(all[i], all[j], *f));
        auto const back = isomorphism(all[j], all[i]);
        REQUIRE(back.has_value());
        CHECK(is_truss_morphism(all[j], all[i], f->inverse()));
      }
      CHECK(f.has_value() == (canonical_form(all[i]) == canonical_form(all[j])));
    }
  }
}

TEST_CASE("canonical forms", "[classify]") {
  CHECK(canonical_form(fx::z2_truss(7)) == canonical_form(fx::z2_truss(3)));
  CHECK(canonical_form(fx::z2_truss(3)).mul == fx::z2_table(3));
  std::set<std::pair<table, table>> forms;
  for (std::size_t i = 1; i <= 8; ++i) {
    auto const c = canonical_form(fx::z2_truss(i));
    forms.insert({c.add, c.mul});
    CHECK(is_truss_morphism(fx::z2_truss(i), c.truss(), c.sigma));
  }
  CHECK(forms.size() == 5);

  // Invariance under relabeling, including moves of the base point.
  std::mt19937 rng(99);
  for (auto const& h : heaps_of_order(4)) {
    auto const all = products_on(h);
    for (std::size_t i = 0; i < all.size(); i += 7) {
      std::vector<element> p{0, 1, 2, 3};
      std::shuffle(p.begin(), p.end(), rng);
      endo_map const sigma(p);
      auto const     moved = relabel(all[i], sigma);
      CHECK(is_truss_morphism(all[i], moved, sigma));
      CHECK(canonical_form(moved) == canonical_form(all[i]));
    }
  }
  CHECK_THROWS_AS(canonical_form(function_truss(fx::z2_truss(3), 4)), size_cap_exceeded);
}

TEST_CASE("census of the two-element heap", "[classify][census]") {
  auto const r = census(fx::z2_heap());
  CHECK(r.total_products == 8);
  REQUIRE(r.classes.size() == 5);
  std::size_t const expected[5] = {1, 3, 4, 5, 2};
  std::size_t       sum         = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(r.classes[i].canonical.mul == fx::z2_table(expected[i]));
    sum += r.classes[i].size();
  }
  CHECK(sum == 8);
  auto inventory = [&](std::size_t cls, std::string const& kind) -> std::optional<std::size_t> {
    for (auto const& [k, v] : r.classes[cls].inventory) {
      if (k == kind) {
        return v;
      }
    }
    return std::nullopt;
  };
  CHECK(inventory(1, "rb0:0") == 1u);  // table (3)
  CHECK(inventory(0, "rb0:0") == 2u);  // table (1)
  CHECK(inventory(1, "rey") == 3u);
  CHECK_FALSE(inventory(2, "rb0:0").has_value());
  CHECK_FALSE(inventory(4, "der:0").has_value());
  auto const rb1 = search_operators(r.classes[1].canonical.truss(), operator_kind::rb1());
  CHECK(std::find(rb1.begin(), rb1.end(), fx::swap2()) != rb1.end());

  // Class members per table: (1)+(8), (3)+(7), (4), (5), (2)+(6).
  CHECK(r.classes[0].members == std::vector<table>{fx::z2_table(1), fx::z2_table(8)});
  CHECK(r.classes[1].members == std::vector<table>{fx::z2_table(3), fx::z2_table(7)});
  CHECK(r.classes[4].members == std::vector<table>{fx::z2_table(2), fx::z2_table(6)});
}

TEST_CASE("census of the one-element heap", "[classify][census]") {
  auto const r = census(cyclic_heap(1));
  CHECK(r.total_products == 1);
  REQUIRE(r.classes.size() == 1);
  for (auto const& [kind, count] : r.classes[0].inventory) {
    INFO(kind);
    CHECK(count == 1);
  }
}

TEST_CASE("census inventories agree with the naive search", "[classify][census][oracle]") {
  for (auto const& h : heaps_of_order(3)) {
    auto const r = census(h);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      sum += r.classes[i].size();
      auto const rep = r.classes[i].canonical.truss();
      for (std::size_t j = 0; j < i; ++j) {
        CHECK_FALSE(isomorphism(rep, r.classes[j].canonical.truss()).has_value());
      }
      auto const kinds = inventory_kinds(rep);
      REQUIRE(kinds.size() == r.classes[i].inventory.size());
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        CHECK(r.classes[i].inventory[k].second == naive_search_operators(rep, kinds[k]).size());
      }
    }
    CHECK(sum == r.total_products);
  }
}
