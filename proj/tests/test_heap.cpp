#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include <trusslab/heap.hpp>

using namespace trusslab;

namespace {

  // All bijections of {0..n-1}.
  std::vector<endo_map> permutations(std::size_t n) {
    std::vector<element> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<endo_map> out;
    do {
      out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  std::vector<finite_heap> heaps_up_to(std::size_t max_n) {
    std::vector<finite_heap> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (auto& h : heaps_of_order(n)) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("group tables yield heaps passing the audit", "[heap]") {
  for (auto const& h : heaps_up_to(6)) {
    auto const report = validate_heap(h.ternary());
    INFO("n = " << h.size());
    CHECK(report.ok());
  }
}

TEST_CASE("the audit rejects non-heaps", "[heap]") {
  ternary_table left(3);
  for (element a = 0; a < 3; ++a) {
    for (element b = 0; b < 3; ++b) {
      for (element c = 0; c < 3; ++c) {
        left(a, b, c) = a;
      }
    }
  }
  auto const report = validate_heap(left);
  CHECK_FALSE(report.ok());
  CHECK(report.count("malcev_left") > 0);
  CHECK(report.count("malcev_right") == 0);

  ternary_table open(2);
  open(1, 1, 1) = 7;
  CHECK(validate_heap(open).count("closure") == 1);
}

TEST_CASE("non-group tables are refused", "[heap]") {
  CHECK_THROWS_AS(heap_from_group(table(2, std::vector<element>{0, 1, 1, 1})), not_a_group);
  CHECK_THROWS_AS(heap_from_group(table(2, std::vector<element>{0, 0, 0, 0})), not_a_group);
  // Non-abelian: S3 is not accepted.
  auto const s3 = table::from_rows({{0, 1, 2, 3, 4, 5},
                                    {1, 0, 4, 5, 2, 3},
                                    {2, 5, 0, 4, 3, 1},
                                    {3, 4, 5, 0, 1, 2},
                                    {4, 3, 1, 2, 5, 0},
                                    {5, 2, 3, 1, 0, 4}});
  CHECK_THROWS_AS(heap_from_group(s3), not_a_group);
}

TEST_CASE("identity away from index 0 is rebased without relabeling", "[heap]") {
  // Z_3 with identity 2: x + y = x + y + 1 mod 3 in the usual labels.
  auto const add = table::generate(3, [](element x, element y) { return (x + y + 1) % 3; });
  auto const h   = heap_from_group(add);
  CHECK(h.add()(0, 0) == 0);
  for (element a = 0; a < 3; ++a) {
    for (element b = 0; b < 3; ++b) {
      for (element c = 0; c < 3; ++c) {
        // a - b + c computed in the original group, inverse of b is 1 - b.
        element const expected = add(add(a, (4 - b) % 3), c);
        CHECK(h(a, b, c) == expected);
      }
    }
  }
}

TEST_CASE("bracket checks its arguments", "[heap]") {
  auto const h = cyclic_heap(3);
  CHECK(h.bracket(2, 1, 0) == 1);
  CHECK_THROWS_AS(h.bracket(3, 0, 0), index_out_of_range);
}

TEST_CASE("retracts at every base are groups with that identity", "[heap]") {
  for (auto const& h : heaps_up_to(6)) {
    for (element e = 0; e < h.size(); ++e) {
      auto const g = retract(h, e);
      for (element x = 0; x < h.size(); ++x) {
        CHECK(g(x, e) == x);
        CHECK(g(x, retract_inverse(h, e, x)) == e);
      }
      // H(G(H; e)) gives back the same ternary operation.
      CHECK(heap_from_group(g).ternary().cells == h.ternary().cells);
    }
  }
}

TEST_CASE("heap morphisms agree with the naive filter", "[heap][oracle]") {
  auto const heaps = heaps_up_to(5);
  for (auto const& src : heaps) {
    for (auto const& dst : heaps) {
      if (src.size() > 4 || dst.size() > 4) {
        continue;
      }
      std::vector<endo_map> naive;
      for (auto& f : all_maps(src.size())) {
        bool in_range = std::all_of(f.image.begin(), f.image.end(),
                                    [&](element v) { return v < dst.size(); });
        if (in_range && is_heap_morphism(src, dst, f)) {
          naive.push_back(f);
        }
      }
      if (src.size() == dst.size()) {
        INFO(src.size());
        CHECK(heap_morphisms(src, dst) == naive);
      }
    }
  }
  // Self-maps of orders 5 and 6, where all_maps is still small.
  for (std::size_t n : {5, 6}) {
    auto const h = cyclic_heap(n);
    std::size_t count = 0;
    for (auto& f : all_maps(n)) {
      count += is_heap_morphism(h, h, f) ? 1 : 0;
    }
    CHECK(heap_endomorphisms(h).size() == count);
    CHECK(count == n * n);  // translation times End(Z_n)
  }
}

TEST_CASE("element orders and generators", "[heap]") {
  auto const z6 = cyclic_heap(6);
  std::vector<std::size_t> orders;
  for (element x = 0; x < 6; ++x) {
    orders.push_back(element_order(z6, x));
  }
  CHECK(orders == std::vector<std::size_t>{1, 6, 3, 2, 3, 6});

  auto const v4   = heap_from_group(product_of_cyclic({2, 2}));
  auto const gens = generators(v4);
  CHECK(gens.size() == 2);
}

TEST_CASE("invariant factor lists", "[heap]") {
  using lists = std::vector<std::vector<std::size_t>>;
  CHECK(invariant_factors(1) == lists{{}});
  CHECK(invariant_factors(4) == lists{{2, 2}, {4}});
  CHECK(invariant_factors(6) == lists{{6}});
  CHECK(invariant_factors(8) == lists{{2, 2, 2}, {2, 4}, {8}});
  CHECK(invariant_factors(12) == lists{{2, 6}, {12}});
  CHECK(heaps_of_order(16).size() == 5);
}

TEST_CASE("heap isomorphism classes match group isomorphism classes", "[heap][oracle]") {
  // Brute force over all bijections for n <= 6: distinct group types never
  // give isomorphic heaps, and the search finds relabeled copies.
  for (std::size_t n = 1; n <= 6; ++n) {
    auto const heaps = heaps_of_order(n);
    auto const perms = permutations(n);
    for (std::size_t i = 0; i < heaps.size(); ++i) {
      for (std::size_t j = 0; j < heaps.size(); ++j) {
        bool brute = std::any_of(perms.begin(), perms.end(), [&](endo_map const& p) {
          return is_heap_morphism(heaps[i], heaps[j], p);
        });
        CHECK(brute == (i == j));
        CHECK(heap_isomorphism(heaps[i], heaps[j]).has_value() == (i == j));
      }
    }
  }
}

TEST_CASE("heap isomorphism finds relabeled copies", "[heap]") {
  auto const h = heap_from_group(product_of_cyclic({2, 2}));
  endo_map const sigma(std::vector<element>{2, 0, 3, 1});
  auto const inv = sigma.inverse();
  auto const moved = heap_from_group(
      table::generate(4, [&](element x, element y) { return sigma(h.plus(inv(x), inv(y))); }));
  auto const phi = heap_isomorphism(h, moved);
  REQUIRE(phi.has_value());
  CHECK(phi->is_bijective());
  CHECK(is_heap_morphism(h, moved, *phi));
}
