// Finite trusses: an abelian heap plus an associative multiplication that
// distributes over the bracket in each argument. Also the ring <-> truss
// functors and the product constructions on T x T.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "heap.hpp"

namespace trusslab {

  namespace detail {
    // Distributivity is checked on the instances [u, 0, w]: a map is a heap
    // morphism iff f(u +_0 w) = [f(u), f(0), f(w)] for all u, w, so this is
    // equivalent to the full four-variable law at O(n^3) cost.
    template <typename Mul>
    void check_left_distributive(finite_heap const& h, Mul&& mul, std::string_view law,
                                 validation_report& r) {
      std::size_t const n = h.size();
      for (element x = 0; x < n; ++x) {
        element const x0 = mul(x, 0);
        for (element u = 0; u < n; ++u) {
          element const xu = mul(x, u);
          for (element w = 0; w < n; ++w) {
            if (mul(x, h.plus(u, w)) != h(xu, x0, mul(x, w))) {
              r.add(law, {x, u, 0, w});
            }
          }
        }
      }
    }

    template <typename Mul>
    void check_right_distributive(finite_heap const& h, Mul&& mul, std::string_view law,
                                  validation_report& r) {
      std::size_t const n = h.size();
      for (element x = 0; x < n; ++x) {
        element const x0 = mul(0, x);
        for (element u = 0; u < n; ++u) {
          element const ux = mul(u, x);
          for (element w = 0; w < n; ++w) {
            if (mul(h.plus(u, w), x) != h(ux, x0, mul(w, x))) {
              r.add(law, {u, 0, w, x});
            }
          }
        }
      }
    }

    template <typename Mul>
    void check_associative(std::size_t n, Mul&& mul, std::string_view law, validation_report& r) {
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          element const xy = mul(x, y);
          for (element z = 0; z < n; ++z) {
            if (mul(xy, z) != mul(x, mul(y, z))) {
              r.add(law, {x, y, z});
            }
          }
        }
      }
    }
  }  // namespace detail

  // Truss axioms for `mul` over `h`. Associativity witnesses are (x, y, z);
  // distributivity witnesses are (x, u, v, w) for x[u,v,w] and (u, v, w, x)
  // for [u,v,w]x.
  inline validation_report validate_truss(finite_heap const& h, table const& mul) {
    validation_report r;
    if (mul.size() != h.size()) {
      r.add("shape", {static_cast<element>(mul.size())});
      return r;
    }
    if (!mul.closed()) {
      for (element x = 0; x < mul.size(); ++x) {
        for (element y = 0; y < mul.size(); ++y) {
          if (mul(x, y) >= mul.size()) {
            r.add("closure", {x, y});
          }
        }
      }
      return r;
    }
    detail::check_associative(h.size(), mul, "associativity", r);
    detail::check_left_distributive(h, mul, "left_distributivity", r);
    detail::check_right_distributive(h, mul, "right_distributivity", r);
    return r;
  }

  class finite_truss {
   public:
    struct trusted_t {};
    static constexpr trusted_t trusted{};

    finite_truss() = default;

    // Validates; throws invalid_truss carrying every violated instance.
    finite_truss(finite_heap heap, table mul) : heap_(std::move(heap)), mul_(std::move(mul)) {
      auto report = validate_truss(heap_, mul_);
      if (!report.ok()) {
        throw invalid_truss("not a truss: " + std::to_string(report.total) + " violated instance(s)",
                            std::move(report));
      }
    }

    finite_truss(finite_heap heap, table mul, trusted_t)
        : heap_(std::move(heap)), mul_(std::move(mul)) {}

    [[nodiscard]] std::size_t        size() const noexcept { return heap_.size(); }
    [[nodiscard]] finite_heap const& heap() const noexcept { return heap_; }
    [[nodiscard]] table const&       mul() const noexcept { return mul_; }

    element operator()(element x, element y) const noexcept { return mul_(x, y); }
    element bracket(element a, element b, element c) const noexcept { return heap_(a, b, c); }

    friend bool operator==(finite_truss const& l, finite_truss const& r) {
      return l.heap_ == r.heap_ && l.mul_ == r.mul_;
    }

   private:
    finite_heap heap_;
    table       mul_{1, 0};
  };

  inline finite_truss truss_new(finite_heap const& h, table const& mul) {
    return finite_truss(h, mul);
  }

  ////////////////////////////////////////////////////////////////////////
  // Rings
  ////////////////////////////////////////////////////////////////////////

  inline validation_report validate_ring(table const& add, table const& mul) {
    validation_report r;
    try {
      detail::check_abelian_group(add);
    } catch (not_a_group const&) {
      r.add("group", {});
      return r;
    }
    if (mul.size() != add.size() || !mul.closed()) {
      r.add("shape", {});
      return r;
    }
    std::size_t const n = add.size();
    detail::check_associative(n, mul, "associativity", r);
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        for (element z = 0; z < n; ++z) {
          if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))) {
            r.add("left_distributivity", {x, y, z});
          }
          if (mul(add(x, y), z) != add(mul(x, z), mul(y, z))) {
            r.add("right_distributivity", {x, y, z});
          }
        }
      }
    }
    return r;
  }

  // Associative, not necessarily unital ring. The additive identity may sit
  // at any index.
  class finite_ring {
   public:
    finite_ring(table add, table mul) : add_(std::move(add)), mul_(std::move(mul)) {
      auto report = validate_ring(add_, mul_);
      if (!report.ok()) {
        throw validation_error("not a ring: " + std::to_string(report.total)
                                   + " violated instance(s)",
                               std::move(report));
      }
      zero_ = *detail::find_identity(add_);
      neg_.resize(add_.size());
      for (element x = 0; x < size(); ++x) {
        for (element y = 0; y < size(); ++y) {
          if (add_(x, y) == zero_) {
            neg_[x] = y;
          }
        }
      }
    }

    [[nodiscard]] std::size_t  size() const noexcept { return add_.size(); }
    [[nodiscard]] table const& add() const noexcept { return add_; }
    [[nodiscard]] table const& mul() const noexcept { return mul_; }
    [[nodiscard]] element      zero() const noexcept { return zero_; }

    element plus(element x, element y) const noexcept { return add_(x, y); }
    element negate(element x) const noexcept { return neg_[x]; }
    element times(element x, element y) const noexcept { return mul_(x, y); }

    friend bool operator==(finite_ring const& l, finite_ring const& r) {
      return l.add_ == r.add_ && l.mul_ == r.mul_;
    }

   private:
    table                add_;
    table                mul_;
    element              zero_ = 0;
    std::vector<element> neg_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Absorbers and central elements
  ////////////////////////////////////////////////////////////////////////

  struct absorber_set {
    std::vector<element> left;       // t . z = z for all t
    std::vector<element> right;      // z . t = z for all t
    std::vector<element> two_sided;  // left and right
  };

  inline bool is_left_absorber(table const& mul, element z) {
    for (element t = 0; t < mul.size(); ++t) {
      if (mul(t, z) != z) {
        return false;
      }
    }
    return true;
  }

  inline bool is_right_absorber(table const& mul, element z) {
    for (element t = 0; t < mul.size(); ++t) {
      if (mul(z, t) != z) {
        return false;
      }
    }
    return true;
  }

  inline bool is_absorber(table const& mul, element z) {
    return z < mul.size() && is_left_absorber(mul, z) && is_right_absorber(mul, z);
  }

  inline bool is_absorber(finite_truss const& t, element z) { return is_absorber(t.mul(), z); }

  inline absorber_set find_absorbers(finite_truss const& t) {
    absorber_set s;
    for (element z = 0; z < t.size(); ++z) {
      bool const l = is_left_absorber(t.mul(), z);
      bool const r = is_right_absorber(t.mul(), z);
      if (l) {
        s.left.push_back(z);
      }
      if (r) {
        s.right.push_back(z);
      }
      if (l && r) {
        s.two_sided.push_back(z);
      }
    }
    return s;
  }

  // A two-sided absorber is unique when it exists.
  inline std::optional<element> absorber(finite_truss const& t) {
    auto const s = find_absorbers(t);
    if (s.two_sided.empty()) {
      return std::nullopt;
    }
    return s.two_sided.front();
  }

  inline bool is_central(finite_truss const& t, element e) {
    if (e >= t.size()) {
      return false;
    }
    for (element x = 0; x < t.size(); ++x) {
      if (t(e, x) != t(x, e)) {
        return false;
      }
    }
    return true;
  }

  inline std::vector<element> center(finite_truss const& t) {
    std::vector<element> out;
    for (element e = 0; e < t.size(); ++e) {
      if (is_central(t, e)) {
        out.push_back(e);
      }
    }
    return out;
  }

  inline std::vector<element> idempotents(finite_truss const& t) {
    std::vector<element> out;
    for (element e = 0; e < t.size(); ++e) {
      if (t(e, e) == e) {
        out.push_back(e);
      }
    }
    return out;
  }

  namespace detail {
    inline void require_absorber(finite_truss const& t, element z, char const* where) {
      detail::check_index(z, t.size(), where);
      if (!is_absorber(t, z)) {
        throw not_an_absorber(std::string(where) + ": element " + std::to_string(z)
                              + " is not a two-sided absorber");
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Functors
  ////////////////////////////////////////////////////////////////////////

  // T(R): heap H(R, +), multiplication unchanged.
  inline finite_truss truss_from_ring(finite_ring const& r) {
    return finite_truss(heap_from_group(r.add()), r.mul());
  }

  // R(T; z): addition x + y = [x, z, y], multiplication unchanged.
  inline finite_ring ring_from_truss(finite_truss const& t, element z) {
    detail::require_absorber(t, z, "ring_from_truss");
    return finite_ring(retract(t.heap(), z), t.mul());
  }

  ////////////////////////////////////////////////////////////////////////
  // Morphisms and subtrusses
  ////////////////////////////////////////////////////////////////////////

  inline bool is_multiplicative(finite_truss const& src, finite_truss const& dst, endo_map const& f) {
    for (element x = 0; x < src.size(); ++x) {
      for (element y = 0; y < src.size(); ++y) {
        if (f(src(x, y)) != dst(f(x), f(y))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_truss_morphism(finite_truss const& src, finite_truss const& dst, endo_map const& f) {
    return is_heap_morphism(src.heap(), dst.heap(), f) && is_multiplicative(src, dst, f);
  }

  // Closed under the bracket and the multiplication.
  inline bool is_subtruss(finite_truss const& t, std::vector<element> const& s) {
    std::vector<bool> in(t.size(), false);
    for (element x : s) {
      detail::check_index(x, t.size(), "is_subtruss");
      in[x] = true;
    }
    for (element a : s) {
      for (element b : s) {
        if (!in[t(a, b)]) {
          return false;
        }
        for (element c : s) {
          if (!in[t.bracket(a, b, c)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Products on T x T, pair (a, x) encoded as a*n + x
  ////////////////////////////////////////////////////////////////////////

  inline element pair_index(std::size_t n, element a, element x) {
    return static_cast<element>(a * n + x);
  }
  inline element pair_first(std::size_t n, element p) { return static_cast<element>(p / n); }
  inline element pair_second(std::size_t n, element p) { return static_cast<element>(p % n); }

  // Componentwise heap on H x H.
  inline finite_heap square_heap(finite_heap const& h) {
    std::size_t const n = h.size();
    return finite_heap(table::generate(n * n,
                                       [&](element p, element q) {
                                         return pair_index(
                                             n,
                                             h.plus(pair_first(n, p), pair_first(n, q)),
                                             h.plus(pair_second(n, p), pair_second(n, q)));
                                       }),
                       finite_heap::trusted);
  }

  namespace detail {
    template <typename F>
    finite_truss pair_truss(finite_truss const& t, F&& f, limits const& lim, char const* where) {
      std::size_t const n = t.size();
      check_cap(n * n, lim.truss_size, where);
      table mul = table::generate(n * n, [&](element p, element q) {
        auto const [first, second]
            = f(pair_first(n, p), pair_second(n, p), pair_first(n, q), pair_second(n, q));
        return pair_index(n, first, second);
      });
      return finite_truss(square_heap(t.heap()), std::move(mul));
    }
  }  // namespace detail

  // T ⋉ T: (a, x)(b, y) = (ab, [ay, z, xb]) for the absorber z.
  inline finite_truss product_ltimes(finite_truss const& t, element z, limits const& lim = {}) {
    detail::require_absorber(t, z, "product_ltimes");
    return detail::pair_truss(
        t,
        [&](element a, element x, element b, element y) {
          return std::pair{t(a, b), t.bracket(t(a, y), z, t(x, b))};
        },
        lim, "product_ltimes");
  }

  // T ⋈_e T: (a, x)(b, y) = (ab, [ay, e x y, xb]) for central e.
  inline finite_truss product_bowtie(finite_truss const& t, element e, limits const& lim = {}) {
    detail::check_index(e, t.size(), "product_bowtie");
    if (!is_central(t, e)) {
      throw not_central("product_bowtie: element " + std::to_string(e) + " is not central");
    }
    return detail::pair_truss(
        t,
        [&](element a, element x, element b, element y) {
          return std::pair{t(a, b), t.bracket(t(a, y), t(t(e, x), y), t(x, b))};
        },
        lim, "product_bowtie");
  }

  enum class hemisemi_side { left, right, medium };

  // Left: (ab, ay); right: (ab, xb); medium: (ab, xy).
  inline finite_truss hemisemi_product(finite_truss const& t, hemisemi_side side,
                                       limits const& lim = {}) {
    return detail::pair_truss(
        t,
        [&](element a, element x, element b, element y) {
          switch (side) {
            case hemisemi_side::left:
              return std::pair{t(a, b), t(a, y)};
            case hemisemi_side::right:
              return std::pair{t(a, b), t(x, b)};
            default:
              return std::pair{t(a, b), t(x, y)};
          }
        },
        lim, "hemisemi_product");
  }

  ////////////////////////////////////////////////////////////////////////
  // Function trusses and idempotent-matrix trusses
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::size_t checked_power(std::size_t base, std::size_t k, std::size_t cap,
                                     char const* where) {
      std::size_t out = 1;
      for (std::size_t i = 0; i < k; ++i) {
        out *= base;
        check_cap(out, cap, where);
      }
      return out;
    }

    // Base-n digits of x, most significant first.
    inline std::vector<element> digits(element x, std::size_t n, std::size_t k) {
      std::vector<element> d(k);
      for (std::size_t i = k; i-- > 0;) {
        d[i] = static_cast<element>(x % n);
        x /= static_cast<element>(n);
      }
      return d;
    }

    inline element from_digits(std::vector<element> const& d, std::size_t n) {
      element x = 0;
      for (element v : d) {
        x = static_cast<element>(x * n + v);
      }
      return x;
    }

    template <typename F>
    table pointwise(std::size_t n, std::size_t k, std::size_t size, F&& f) {
      return table::generate(size, [&](element p, element q) {
        auto const dp = digits(p, n, k);
        auto const dq = digits(q, n, k);
        std::vector<element> out(k);
        for (std::size_t i = 0; i < k; ++i) {
          out[i] = f(dp[i], dq[i]);
        }
        return from_digits(out, n);
      });
    }
  }  // namespace detail

  // T^k with pointwise operations, tuples encoded in base n.
  inline finite_truss function_truss(finite_truss const& t, std::size_t k, limits const& lim = {}) {
    if (k == 0) {
      throw invalid_parameters("function_truss: k must be positive");
    }
    std::size_t const n    = t.size();
    std::size_t const size = detail::checked_power(n, k, lim.truss_size, "function_truss");
    auto add = detail::pointwise(n, k, size, [&](element x, element y) { return t.heap().plus(x, y); });
    auto mul = detail::pointwise(n, k, size, [&](element x, element y) { return t(x, y); });
    return finite_truss(finite_heap(std::move(add), finite_heap::trusted), std::move(mul));
  }

  // k x k matrix over a ring, row-major.
  struct ring_matrix {
    std::size_t          k = 0;
    std::vector<element> cells;

    element operator()(std::size_t i, std::size_t j) const { return cells[i * k + j]; }
  };

  inline ring_matrix matrix_product(finite_ring const& r, ring_matrix const& a, ring_matrix const& b) {
    ring_matrix out{a.k, std::vector<element>(a.k * a.k, r.zero())};
    for (std::size_t i = 0; i < a.k; ++i) {
      for (std::size_t j = 0; j < a.k; ++j) {
        element acc = r.zero();
        for (std::size_t l = 0; l < a.k; ++l) {
          acc = r.plus(acc, r.times(a(i, l), b(l, j)));
        }
        out.cells[i * a.k + j] = acc;
      }
    }
    return out;
  }

  // R^k with [x, y, z] = x - y + z and x . y = x + y e for an idempotent e.
  inline finite_truss idempotent_module_truss(finite_ring const& r, std::size_t k, ring_matrix const& e,
                                              limits const& lim = {}) {
    if (k == 0 || e.k != k || e.cells.size() != k * k) {
      throw invalid_parameters("idempotent_module_truss: matrix must be k x k with k >= 1");
    }
    for (element v : e.cells) {
      detail::check_index(v, r.size(), "idempotent_module_truss");
    }
    if (matrix_product(r, e, e).cells != e.cells) {
      throw not_idempotent("idempotent_module_truss: e * e != e");
    }
    std::size_t const n    = r.size();
    std::size_t const size = detail::checked_power(n, k, lim.truss_size, "idempotent_module_truss");
    table add = detail::pointwise(n, k, size, [&](element x, element y) { return r.plus(x, y); });
    table mul = table::generate(size, [&](element p, element q) {
      auto const x = detail::digits(p, n, k);
      auto const y = detail::digits(q, n, k);
      std::vector<element> out(k);
      for (std::size_t j = 0; j < k; ++j) {
        element ye = r.zero();
        for (std::size_t i = 0; i < k; ++i) {
          ye = r.plus(ye, r.times(y[i], e(i, j)));
        }
        out[j] = r.plus(x[j], ye);
      }
      return detail::from_digits(out, n);
    });
    return finite_truss(heap_from_group(add), std::move(mul));
  }

}  // namespace trusslab
