// Finite abelian heaps.
//
// A heap is stored through its retract group at base 0: `add(x, y)` is
// x +_0 y = [x, 0, y] and the bracket is recovered as [a, b, c] = a - b + c in
// that group. Carrier labels are never permuted; building a heap from a group
// whose identity sits elsewhere only moves the stored base.

#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace trusslab {

  // An arbitrary ternary operation, used only for auditing raw data.
  struct ternary_table {
    std::size_t          n = 0;
    std::vector<element> cells;  // n^3, index (a*n + b)*n + c

    ternary_table() = default;
    explicit ternary_table(std::size_t size, element fill = 0)
        : n(size), cells(size * size * size, fill) {}

    element operator()(element a, element b, element c) const noexcept {
      return cells[(a * n + b) * n + c];
    }
    element& operator()(element a, element b, element c) noexcept {
      return cells[(a * n + b) * n + c];
    }
  };

  class finite_heap {
   public:
    finite_heap() : finite_heap(table(1, 0), trusted) {}

    // `add` must be an abelian group table with identity 0; not checked.
    struct trusted_t {};
    static constexpr trusted_t trusted{};

    finite_heap(table add, trusted_t) : add_(std::move(add)), neg_(add_.size(), 0) {
      std::size_t const n = add_.size();
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          if (add_(x, y) == 0) {
            neg_[x] = y;
            break;
          }
        }
      }
    }

    [[nodiscard]] std::size_t size() const noexcept { return add_.size(); }

    // Retract group at base 0.
    [[nodiscard]] table const& add() const noexcept { return add_; }

    element plus(element x, element y) const noexcept { return add_(x, y); }
    element negate(element x) const noexcept { return neg_[x]; }
    element minus(element x, element y) const noexcept { return add_(x, neg_[y]); }

    // [a, b, c] = a - b + c, unchecked.
    element operator()(element a, element b, element c) const noexcept {
      return add_(add_(a, neg_[b]), c);
    }

    [[nodiscard]] element bracket(element a, element b, element c) const {
      detail::check_index(a, size(), "bracket");
      detail::check_index(b, size(), "bracket");
      detail::check_index(c, size(), "bracket");
      return (*this)(a, b, c);
    }

    // The derived ternary operation as a full table.
    [[nodiscard]] ternary_table ternary() const {
      std::size_t const n = size();
      ternary_table     t(n);
      for (element a = 0; a < n; ++a) {
        for (element b = 0; b < n; ++b) {
          for (element c = 0; c < n; ++c) {
            t(a, b, c) = (*this)(a, b, c);
          }
        }
      }
      return t;
    }

    friend bool operator==(finite_heap const& l, finite_heap const& r) { return l.add_ == r.add_; }

   private:
    table                add_;
    std::vector<element> neg_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Identity of a closed binary table, if any.
    inline std::optional<element> find_identity(table const& add) {
      std::size_t const n = add.size();
      for (element e = 0; e < n; ++e) {
        bool ok = true;
        for (element x = 0; x < n && ok; ++x) {
          ok = add(e, x) == x && add(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    // Throws not_a_group describing the first defect; returns the identity.
    inline element check_abelian_group(table const& add) {
      std::size_t const n = add.size();
      if (n == 0) {
        throw not_a_group("group: empty carrier");
      }
      if (!add.closed()) {
        throw not_a_group("group: table entries must lie in 0.." + std::to_string(n - 1));
      }
      auto const e = find_identity(add);
      if (!e) {
        throw not_a_group("group: no identity element");
      }
      for (element x = 0; x < n; ++x) {
        bool has_inverse = false;
        for (element y = 0; y < n && !has_inverse; ++y) {
          has_inverse = add(x, y) == *e;
        }
        if (!has_inverse) {
          throw not_a_group("group: element " + std::to_string(x) + " has no inverse");
        }
        for (element y = 0; y < n; ++y) {
          if (add(x, y) != add(y, x)) {
            throw not_a_group("group: not commutative at (" + std::to_string(x) + ", "
                              + std::to_string(y) + ")");
          }
        }
      }
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          for (element z = 0; z < n; ++z) {
            if (add(add(x, y), z) != add(x, add(y, z))) {
              throw not_a_group("group: not associative at (" + std::to_string(x) + ", "
                                + std::to_string(y) + ", " + std::to_string(z) + ")");
            }
          }
        }
      }
      return *e;
    }
  }  // namespace detail

  // H(G): the heap [a, b, c] = a - b + c of an abelian group given by its
  // Cayley table. The identity may sit at any index.
  inline finite_heap heap_from_group(table const& add) {
    element const     e = detail::check_abelian_group(add);
    std::size_t const n = add.size();
    std::vector<element> neg(n);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (add(x, y) == e) {
          neg[x] = y;
        }
      }
    }
    // x +_0 y = x - 0 + y in G.
    return finite_heap(table::generate(n, [&](element x, element y) { return add(add(x, neg[0]), y); }),
                       finite_heap::trusted);
  }

  // The retract G(H; e): x +_e y = [x, e, y], identity e.
  inline table retract(finite_heap const& h, element e) {
    detail::check_index(e, h.size(), "retract");
    return table::generate(h.size(), [&](element x, element y) { return h(x, e, y); });
  }

  // Inverse of a in G(H; e).
  inline element retract_inverse(finite_heap const& h, element e, element a) {
    return h(e, a, e);
  }

  ////////////////////////////////////////////////////////////////////////
  // Axiom audit
  ////////////////////////////////////////////////////////////////////////

  struct heap_audit_options {
    // The interchange law quantifies over 9 variables; by default it is only
    // checked for n <= 4.
    std::optional<bool> interchange;
  };

  // Lists every violated instance of heap associativity, the Mal'cev
  // identities and commutativity, plus the interchange law as a redundancy
  // check. Entries outside the carrier are reported as "closure".
  inline validation_report validate_heap(ternary_table const& t, heap_audit_options opts = {}) {
    validation_report r;
    std::size_t const n = t.n;
    if (t.cells.size() != n * n * n) {
      r.add("shape", {static_cast<element>(t.cells.size())});
      return r;
    }
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element c = 0; c < n; ++c) {
          if (t(a, b, c) >= n) {
            r.add("closure", {a, b, c});
          }
        }
      }
    }
    if (!r.ok()) {
      return r;
    }
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        if (t(a, a, b) != b) {
          r.add("malcev_left", {a, b});
        }
        if (t(b, a, a) != b) {
          r.add("malcev_right", {a, b});
        }
        for (element c = 0; c < n; ++c) {
          if (t(a, b, c) != t(c, b, a)) {
            r.add("commutativity", {a, b, c});
          }
          for (element x = 0; x < n; ++x) {
            for (element y = 0; y < n; ++y) {
              if (t(t(a, b, c), x, y) != t(a, b, t(c, x, y))) {
                r.add("associativity", {a, b, c, x, y});
              }
            }
          }
        }
      }
    }
    if (opts.interchange.value_or(n <= 4)) {
      std::vector<element> v(9, 0);
      while (true) {
        element const lhs = t(t(v[0], v[1], v[2]), t(v[3], v[4], v[5]), t(v[6], v[7], v[8]));
        element const rhs = t(t(v[0], v[3], v[6]), t(v[1], v[4], v[7]), t(v[2], v[5], v[8]));
        if (lhs != rhs) {
          r.add("interchange", {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]});
        }
        std::size_t i = 9;
        while (i > 0 && ++v[i - 1] == n) {
          v[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          break;
        }
      }
    }
    return r;
  }

  // Naive triple check: f([a, b, c]) = [f(a), f(b), f(c)].
  inline bool is_heap_morphism(finite_heap const& src, finite_heap const& dst, endo_map const& f) {
    std::size_t const n = src.size();
    if (f.size() != n) {
      return false;
    }
    for (element v : f.image) {
      if (v >= dst.size()) {
        return false;
      }
    }
    for (element a = 0; a < n; ++a) {
      for (element b = 0; b < n; ++b) {
        for (element c = 0; c < n; ++c) {
          if (f(src(a, b, c)) != dst(f(a), f(b), f(c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphism enumeration via f(x) = t +_0 g(x), g additive
  ////////////////////////////////////////////////////////////////////////

  // Additive order of x in the retract at 0.
  inline std::size_t element_order(finite_heap const& h, element x) {
    std::size_t k   = 1;
    element     acc = x;
    while (acc != 0) {
      acc = h.plus(acc, x);
      ++k;
    }
    return k;
  }

  // Greedy generating set of the retract group at 0: each generator is the
  // smallest element outside the span of the previous ones.
  inline std::vector<element> generators(finite_heap const& h) {
    std::size_t const    n = h.size();
    std::vector<bool>    in_span(n, false);
    std::vector<element> gens;
    in_span[0] = true;
    for (element x = 0; x < n; ++x) {
      if (in_span[x]) {
        continue;
      }
      gens.push_back(x);
      // Close the span under the new generator set.
      std::vector<element> frontier;
      for (element y = 0; y < n; ++y) {
        if (in_span[y]) {
          frontier.push_back(y);
        }
      }
      while (!frontier.empty()) {
        element const y = frontier.back();
        frontier.pop_back();
        for (element g : gens) {
          element const z = h.plus(y, g);
          if (!in_span[z]) {
            in_span[z] = true;
            frontier.push_back(z);
          }
        }
      }
    }
    return gens;
  }

  // Extends generator images to an additive map, or nullopt if inconsistent.
  inline std::optional<std::vector<element>> extend_additive(finite_heap const&          src,
                                                             std::vector<element> const& gens,
                                                             std::vector<element> const& images,
                                                             finite_heap const&          dst) {
    std::size_t const    n = src.size();
    constexpr element    unset = static_cast<element>(-1);
    std::vector<element> f(n, unset);
    std::deque<element>  queue{0};
    f[0] = 0;
    while (!queue.empty()) {
      element const x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        element const y   = src.plus(x, gens[i]);
        element const val = dst.plus(f[x], images[i]);
        if (f[y] == unset) {
          f[y] = val;
          queue.push_back(y);
        } else if (f[y] != val) {
          return std::nullopt;
        }
      }
    }
    return f;
  }

  // All additive maps between the retracts at 0, in lexicographic order.
  inline std::vector<endo_map> additive_maps(finite_heap const& src, finite_heap const& dst) {
    auto const                gens = generators(src);
    std::vector<std::size_t>  orders;
    for (element g : gens) {
      orders.push_back(element_order(src, g));
    }
    std::vector<std::vector<element>> choices(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (element y = 0; y < dst.size(); ++y) {
        if (orders[i] % element_order(dst, y) == 0) {
          choices[i].push_back(y);
        }
      }
    }
    std::vector<endo_map>    out;
    std::vector<std::size_t> pick(gens.size(), 0);
    std::vector<element>     images(gens.size());
    while (true) {
      bool empty = false;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (choices[i].empty()) {
          empty = true;
          break;
        }
        images[i] = choices[i][pick[i]];
      }
      if (empty) {
        break;
      }
      if (auto f = extend_additive(src, gens, images, dst)) {
        out.emplace_back(std::move(*f));
      }
      std::size_t i = gens.size();
      while (i > 0 && ++pick[i - 1] == choices[i - 1].size()) {
        pick[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // All heap morphisms src -> dst, lexicographic.
  inline std::vector<endo_map> heap_morphisms(finite_heap const& src, finite_heap const& dst) {
    std::vector<endo_map> out;
    for (auto const& g : additive_maps(src, dst)) {
      for (element t = 0; t < dst.size(); ++t) {
        std::vector<element> img(src.size());
        for (element x = 0; x < src.size(); ++x) {
          img[x] = dst.plus(t, g(x));
        }
        out.emplace_back(std::move(img));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::vector<endo_map> heap_endomorphisms(finite_heap const& h) {
    return heap_morphisms(h, h);
  }

  // Heap isomorphism src -> dst, searched over translations composed with
  // group isomorphisms of the retracts at 0.
  inline std::optional<endo_map> heap_isomorphism(finite_heap const& src, finite_heap const& dst) {
    if (src.size() != dst.size()) {
      return std::nullopt;
    }
    for (auto const& g : additive_maps(src, dst)) {
      if (g.is_bijective()) {
        return g;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelian groups by isomorphism class
  ////////////////////////////////////////////////////////////////////////

  // Invariant factor lists d1 | d2 | ... | dk with product n, di >= 2.
  inline std::vector<std::vector<std::size_t>> invariant_factors(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              cur;
    auto rec = [&](auto&& self, std::size_t remaining, std::size_t last) -> void {
      if (remaining == 1) {
        out.push_back(cur);
        return;
      }
      for (std::size_t d = 2; d <= remaining; ++d) {
        if (remaining % d != 0 || (last != 0 && d % last != 0)) {
          continue;
        }
        // The final factor must be a multiple of d, so d^2 | remaining unless
        // d == remaining.
        if (d != remaining && (remaining / d) % d != 0) {
          continue;
        }
        cur.push_back(d);
        self(self, remaining / d, d);
        cur.pop_back();
      }
    };
    rec(rec, n, 0);
    return out;
  }

  // Cayley table of Z_{d1} x ... x Z_{dk}, mixed radix with the last factor
  // varying fastest; identity 0.
  inline table product_of_cyclic(std::vector<std::size_t> const& factors) {
    std::size_t n = 1;
    for (auto d : factors) {
      n *= d;
    }
    auto digits = [&](element x) {
      std::vector<std::size_t> out(factors.size());
      for (std::size_t i = factors.size(); i-- > 0;) {
        out[i] = x % factors[i];
        x /= static_cast<element>(factors[i]);
      }
      return out;
    };
    return table::generate(n, [&](element x, element y) {
      auto const dx = digits(x);
      auto const dy = digits(y);
      element    v  = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        v = static_cast<element>(v * factors[i] + (dx[i] + dy[i]) % factors[i]);
      }
      return v;
    });
  }

  inline table cyclic_group(std::size_t n) {
    return product_of_cyclic(n == 1 ? std::vector<std::size_t>{} : std::vector<std::size_t>{n});
  }

  // One heap per abelian group isomorphism class of order n.
  inline std::vector<finite_heap> heaps_of_order(std::size_t n) {
    std::vector<finite_heap> out;
    for (auto const& f : invariant_factors(n)) {
      out.push_back(heap_from_group(product_of_cyclic(f)));
    }
    return out;
  }

  inline finite_heap cyclic_heap(std::size_t n) { return heap_from_group(cyclic_group(n)); }

}  // namespace trusslab
