// Named small examples: the eight products on the two-element heap, the
// Klein four-group table in both readings of its unclear entry, the field
// with two elements and the tridendriform tables built from the swap map.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "core.hpp"
#include "heap.hpp"
#include "structures.hpp"
#include "truss.hpp"

namespace trusslab::fixtures {

  // Row-major products 00, 01, 10, 11 of tables (1) to (8).
  inline constexpr std::array<std::array<element, 4>, 8> z2_cells{{
      {0, 0, 0, 0},  // (1) zero product
      {0, 1, 1, 0},  // (2) x + y
      {0, 0, 0, 1},  // (3) x y
      {0, 0, 1, 1},  // (4) x
      {0, 1, 0, 1},  // (5) y
      {1, 0, 0, 1},  // (6) x + y + 1
      {0, 1, 1, 1},  // (7) x + y + x y
      {1, 1, 1, 1},  // (8) 1
  }};

  inline finite_heap z2_heap() { return cyclic_heap(2); }

  // Table (i), 1 <= i <= 8.
  inline table z2_table(std::size_t i) {
    if (i < 1 || i > 8) {
      throw invalid_parameters("z2_table: index must lie in 1..8");
    }
    auto const& c = z2_cells[i - 1];
    return table(2, std::vector<element>(c.begin(), c.end()));
  }

  inline finite_truss z2_truss(std::size_t i) { return finite_truss(z2_heap(), z2_table(i)); }

  // Klein four-group with labels 0, a, b, a+b as 0..3 and XOR addition.
  inline constexpr std::array<char const*, 4> klein_labels{"0", "a", "b", "a+b"};

  inline table klein_add() {
    return table::generate(4, [](element x, element y) { return x ^ y; });
  }

  // The printed multiplication table; `unclear` fills the (a+b, a+b) entry.
  inline table klein_mul(element unclear) {
    return table::from_rows({{0, 0, 2, 1}, {1, 1, 3, 0}, {2, 2, 0, 3}, {3, 3, 3, unclear}});
  }

  inline table klein_mul_sum() { return klein_mul(3); }
  inline table klein_mul_b() { return klein_mul(2); }

  // F_2 with its usual operations.
  inline finite_ring f2_ring() {
    return finite_ring(table(2, std::vector<element>{0, 1, 1, 0}), table(2, std::vector<element>{0, 0, 0, 1}));
  }

  // Tables obtained from the swap on table (3) with weight 1.
  inline table tridendriform_vee() { return table(2, std::vector<element>{0, 0, 0, 1}); }
  inline table tridendriform_succ() { return table(2, std::vector<element>{0, 1, 0, 0}); }
  inline table tridendriform_prec() { return table(2, std::vector<element>{0, 0, 1, 0}); }

  inline endo_map swap2() { return endo_map(std::vector<element>{1, 0}); }

  ////////////////////////////////////////////////////////////////////////
  // Test corpus
  ////////////////////////////////////////////////////////////////////////

  struct corpus_entry {
    std::string  name;
    finite_truss truss;
  };

  // One canonical representative per isomorphism class, for every heap of
  // order 1 to `max_size`.
  inline std::vector<corpus_entry> truss_classes(std::size_t max_size) {
    std::vector<corpus_entry> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
      std::size_t heap_index = 0;
      for (auto const& h : heaps_of_order(n)) {
        auto const report = census(h);
        for (std::size_t i = 0; i < report.classes.size(); ++i) {
          out.push_back({"n" + std::to_string(n) + "h" + std::to_string(heap_index) + "c" + std::to_string(i),
                         report.classes[i].canonical.truss()});
        }
        ++heap_index;
      }
    }
    return out;
  }

  // Size-4 constructions: T ⋉ T, T^2 and an idempotent-matrix truss.
  inline std::vector<corpus_entry> size4_constructions() {
    std::vector<corpus_entry> out;
    out.push_back({"ltimes(z2:3,0)", product_ltimes(z2_truss(3), 0)});
    out.push_back({"ltimes(z2:1,0)", product_ltimes(z2_truss(1), 0)});
    out.push_back({"power(z2:3,2)", function_truss(z2_truss(3), 2)});
    out.push_back({"power(z2:4,2)", function_truss(z2_truss(4), 2)});
    out.push_back({"power(z2:7,2)", function_truss(z2_truss(7), 2)});
    out.push_back({"idem(f2,e11)", idempotent_module_truss(f2_ring(), 2, ring_matrix{2, {1, 0, 0, 0}})});
    out.push_back({"idem(f2,e12)", idempotent_module_truss(f2_ring(), 2, ring_matrix{2, {1, 1, 0, 0}})});
    return out;
  }

}  // namespace trusslab::fixtures
