// Enumeration of truss products on a heap, isomorphism search, canonical
// forms and census reports.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "core.hpp"
#include "heap.hpp"
#include "operators.hpp"
#include "truss.hpp"

namespace trusslab {

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  // Every multiplication table making `h` a truss, in lexicographic order.
  //
  // Each row y -> x y is a heap endomorphism and each column is one too, so
  // the table is fixed by the rows of 0 and of the retract generators:
  // row(x + g) = [row(x), row(0), row(g)]. The search picks those rows among
  // the heap endomorphisms, rejects inconsistent extensions and then tests
  // associativity.
  inline std::vector<table> enumerate_truss_products(finite_heap const& h, limits const& lim = {}) {
    detail::check_cap(h.size(), lim.enumeration, "enumerate_truss_products");
    std::size_t const n      = h.size();
    auto const        rows   = heap_endomorphisms(h);
    auto const        gens   = generators(h);
    std::size_t const chosen = gens.size() + 1;
    std::vector<table> out;

    std::vector<std::size_t>    pick(chosen, 0);
    table                       mul(n);
    std::vector<bool>           known(n);
    std::vector<element>        queue;
    while (true) {
      std::fill(known.begin(), known.end(), false);
      auto set_row = [&](element x, std::vector<element> const& r) {
        for (element y = 0; y < n; ++y) {
          mul(x, y) = r[y];
        }
        known[x] = true;
      };
      set_row(0, rows[pick[0]].image);
      bool consistent = true;
      for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
        if (known[gens[i]]) {
          consistent = false;  // generators are distinct and nonzero
          break;
        }
        set_row(gens[i], rows[pick[i + 1]].image);
      }
      queue.assign({0});
      for (element g : gens) {
        queue.push_back(g);
      }
      for (std::size_t qi = 0; qi < queue.size() && consistent; ++qi) {
        element const x = queue[qi];
        for (element g : gens) {
          element const xg = h.plus(x, g);
          for (element y = 0; y < n && consistent; ++y) {
            element const v = h(mul(x, y), mul(0, y), mul(g, y));
            if (!known[xg]) {
              mul(xg, y) = v;
            } else if (mul(xg, y) != v) {
              consistent = false;
            }
          }
          if (consistent && !known[xg]) {
            known[xg] = true;
            queue.push_back(xg);
          }
        }
      }
      if (consistent) {
        bool assoc = true;
        for (element x = 0; x < n && assoc; ++x) {
          for (element y = 0; y < n && assoc; ++y) {
            element const xy = mul(x, y);
            for (element z = 0; z < n && assoc; ++z) {
              assoc = mul(xy, z) == mul(x, mul(y, z));
            }
          }
        }
        if (assoc) {
          out.push_back(mul);
        }
      }
      std::size_t i = chosen;
      while (i > 0 && ++pick[i - 1] == rows.size()) {
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relabeling
  ////////////////////////////////////////////////////////////////////////

  // The truss transported along the bijection sigma (old label -> new label).
  inline finite_truss relabel(finite_truss const& t, endo_map const& sigma) {
    auto const  p    = sigma.inverse();
    std::size_t n    = t.size();
    element     base = p(0);
    auto        add  = table::generate(n, [&](element i, element j) {
      return sigma(t.bracket(p(i), base, p(j)));
    });
    auto mul = table::generate(n, [&](element i, element j) { return sigma(t(p(i), p(j))); });
    return finite_truss(finite_heap(std::move(add), finite_heap::trusted), std::move(mul),
                        finite_truss::trusted);
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    using element_signature = std::tuple<bool, bool, bool, std::size_t, std::size_t, std::size_t>;

    // Invariants of an element under truss isomorphisms.
    inline std::vector<element_signature> signatures(finite_truss const& t) {
      std::size_t const              n = t.size();
      std::vector<element_signature> out(n);
      for (element x = 0; x < n; ++x) {
        std::vector<bool> row_img(n, false);
        std::vector<bool> col_img(n, false);
        std::size_t       fixes = 0;
        for (element y = 0; y < n; ++y) {
          row_img[t(x, y)] = true;
          col_img[t(y, x)] = true;
          fixes += t(x, y) == x ? 1 : 0;
        }
        out[x] = {t(x, x) == x,
                  is_left_absorber(t.mul(), x),
                  is_right_absorber(t.mul(), x),
                  static_cast<std::size_t>(std::count(row_img.begin(), row_img.end(), true)),
                  static_cast<std::size_t>(std::count(col_img.begin(), col_img.end(), true)),
                  fixes};
      }
      return out;
    }
  }  // namespace detail

  // A bijection preserving bracket and multiplication, or nullopt.
  //
  // Heap isomorphisms are x -> c + alpha(x) with alpha a group isomorphism of
  // the retracts at 0, so the search picks c and the images of the retract
  // generators, pruning on element signatures and additive orders.
  inline std::optional<endo_map> isomorphism(finite_truss const& t1, finite_truss const& t2) {
    if (t1.size() != t2.size()) {
      return std::nullopt;
    }
    std::size_t const n  = t1.size();
    auto const        s1 = detail::signatures(t1);
    auto const        s2 = detail::signatures(t2);
    {
      auto a = s1;
      auto b = s2;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    auto const& h1   = t1.heap();
    auto const& h2   = t2.heap();
    auto const  gens = generators(h1);
    std::vector<std::size_t> gen_orders;
    for (element g : gens) {
      gen_orders.push_back(element_order(h1, g));
    }

    std::optional<endo_map> found;
    std::vector<element>    alpha_images(gens.size());
    element                 c = 0;

    auto try_complete = [&]() {
      auto alpha = extend_additive(h1, gens, alpha_images, h2);
      if (!alpha) {
        return false;
      }
      std::vector<element> img(n);
      for (element x = 0; x < n; ++x) {
        img[x] = h2.plus(c, (*alpha)[x]);
        if (s1[x] != s2[img[x]]) {
          return false;
        }
      }
      endo_map phi(std::move(img));
      if (!phi.is_bijective() || !is_multiplicative(t1, t2, phi)) {
        return false;
      }
      found = std::move(phi);
      return true;
    };

    auto rec = [&](auto&& self, std::size_t i) -> bool {
      if (i == gens.size()) {
        return try_complete();
      }
      for (element y = 0; y < n; ++y) {
        if (y == 0 || element_order(h2, y) != gen_orders[i]) {
          continue;
        }
        if (s1[gens[i]] != s2[h2.plus(c, y)]) {
          continue;
        }
        alpha_images[i] = y;
        if (self(self, i + 1)) {
          return true;
        }
      }
      return false;
    };

    for (c = 0; c < n; ++c) {
      if (s1[0] != s2[c]) {
        continue;
      }
      if (rec(rec, 0)) {
        return found;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical form
  ////////////////////////////////////////////////////////////////////////

  struct canonical_truss {
    table    add;    // retract at the new 0
    table    mul;
    endo_map sigma;  // old label -> new label achieving the minimum

    [[nodiscard]] finite_truss truss() const {
      return finite_truss(finite_heap(add, finite_heap::trusted), mul, finite_truss::trusted);
    }

    friend bool operator==(canonical_truss const& l, canonical_truss const& r) {
      return l.add == r.add && l.mul == r.mul;
    }
  };

  // Lexicographically least (add, mul) over all n! relabelings; the stored
  // add is the retract at the new label 0. Equal forms iff isomorphic.
  inline canonical_truss canonical_form(finite_truss const& t, limits const& lim = {}) {
    std::size_t const n = t.size();
    detail::check_cap(n, lim.canonical, "canonical_form");
    std::vector<element> p(n);  // new label i <- old element p[i]
    std::iota(p.begin(), p.end(), 0);
    std::vector<element> sigma(n);

    std::vector<element> best;
    std::vector<element> best_p;
    std::vector<element> cur(2 * n * n);
    do {
      for (element i = 0; i < n; ++i) {
        sigma[p[i]] = i;
      }
      // Build cells in order and stop as soon as the candidate loses.
      bool        better = best.empty();
      std::size_t k      = 0;
      bool        lost   = false;
      for (std::size_t part = 0; part < 2 && !lost; ++part) {
        for (element i = 0; i < n && !lost; ++i) {
          for (element j = 0; j < n; ++j, ++k) {
            cur[k] = part == 0 ? sigma[t.bracket(p[i], p[0], p[j])] : sigma[t(p[i], p[j])];
            if (!better) {
              if (cur[k] < best[k]) {
                better = true;
              } else if (cur[k] > best[k]) {
                lost = true;
                break;
              }
            }
          }
        }
      }
      if (!lost && better) {
        best   = cur;
        best_p = p;
      }
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<element> s(n);
    for (element i = 0; i < n; ++i) {
      s[best_p[i]] = i;
    }
    return {table(n, std::vector<element>(best.begin(), best.begin() + n * n)),
            table(n, std::vector<element>(best.begin() + n * n, best.end())), endo_map(std::move(s))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Census
  ////////////////////////////////////////////////////////////////////////

  // The operator kinds inventoried for a truss: rb0 and der only with an
  // absorber, rbw:a for each central a, and the kinds without parameters.
  inline std::vector<operator_kind> inventory_kinds(finite_truss const& t) {
    std::vector<operator_kind> out;
    if (auto z = absorber(t)) {
      out.push_back(operator_kind::rb0(*z));
      out.push_back(operator_kind::derivation(*z));
    }
    for (element a : center(t)) {
      out.push_back(operator_kind::rb_weighted(a));
    }
    for (auto k : {operator_kind::rb1(), operator_kind::modified_derivation(),
                   operator_kind::reynolds(), operator_kind::nijenhuis(), operator_kind::avg_left(),
                   operator_kind::avg_right(), operator_kind::avg(), operator_kind::avg_hom()}) {
      out.push_back(k);
    }
    return out;
  }

  struct census_class {
    canonical_truss                             canonical;
    std::vector<table>                          members;  // products on the input heap
    std::vector<std::pair<std::string, std::size_t>> inventory;

    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
  };

  struct census_report {
    finite_heap               heap;
    std::size_t               total_products = 0;
    std::vector<census_class> classes;  // ordered by canonical form
  };

  inline census_report census(finite_heap const& h, limits const& lim = {}) {
    census_report report;
    report.heap     = h;
    auto const all  = enumerate_truss_products(h, lim);
    report.total_products = all.size();

    std::map<std::pair<table, table>, std::size_t> index;
    for (auto const& mul : all) {
      finite_truss const t(h, mul, finite_truss::trusted);
      auto               c   = canonical_form(t, lim);
      auto               key = std::pair{c.add, c.mul};
      auto               it  = index.find(key);
      if (it == index.end()) {
        index.emplace(key, report.classes.size());
        report.classes.push_back({std::move(c), {mul}, {}});
      } else {
        report.classes[it->second].members.push_back(mul);
      }
    }
    std::sort(report.classes.begin(), report.classes.end(), [](auto const& a, auto const& b) {
      return std::tie(a.canonical.add, a.canonical.mul) < std::tie(b.canonical.add, b.canonical.mul);
    });
    for (auto& cls : report.classes) {
      auto const rep = cls.canonical.truss();
      for (auto const& k : inventory_kinds(rep)) {
        cls.inventory.emplace_back(to_string(k), search_operators(rep, k, lim).size());
      }
    }
    return report;
  }

}  // namespace trusslab
