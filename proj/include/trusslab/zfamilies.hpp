// Parametric truss products on the integers with the heap [l,m,n] = l - m + n,
// checked on finite windows [-W, W].

#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "core.hpp"

namespace trusslab {

  enum class zfamily { proj_left, proj_right, f40a, f40b, f41a, f41b, f42 };

  inline constexpr std::array<std::pair<zfamily, std::string_view>, 7> zfamily_names{{
      {zfamily::proj_left, "projL"},
      {zfamily::proj_right, "projR"},
      {zfamily::f40a, "f40a"},
      {zfamily::f40b, "f40b"},
      {zfamily::f41a, "f41a"},
      {zfamily::f41b, "f41b"},
      {zfamily::f42, "f42"},
  }};

  inline std::string_view to_string(zfamily f) {
    for (auto const& [tag, name] : zfamily_names) {
      if (tag == f) {
        return name;
      }
    }
    return "?";
  }

  inline zfamily parse_zfamily(std::string_view s) {
    for (auto const& [tag, name] : zfamily_names) {
      if (name == s) {
        return tag;
      }
    }
    throw invalid_parameters("unknown integer truss family '" + std::string(s) + "'");
  }

  inline std::size_t zfamily_arity(zfamily f) {
    switch (f) {
      case zfamily::proj_left:
      case zfamily::proj_right: return 0;
      case zfamily::f40a:
      case zfamily::f40b:
      case zfamily::f41a:
      case zfamily::f41b: return 1;
      case zfamily::f42: return 3;
    }
    return 0;
  }

  // m n = a m n + b (m + n) + c covers every family except the projections.
  class ztruss {
   public:
    ztruss(zfamily family, std::vector<std::int64_t> params) : family_(family), params_(std::move(params)) {
      if (params_.size() != zfamily_arity(family_)) {
        throw invalid_parameters(std::string(to_string(family_)) + " takes " +
                                 std::to_string(zfamily_arity(family_)) + " parameter(s)");
      }
      auto fail = [&](char const* why) {
        throw invalid_parameters(std::string(to_string(family_)) + ": " + why);
      };
      switch (family_) {
        case zfamily::proj_left:
        case zfamily::proj_right: break;
        case zfamily::f40a:
          if (params_[0] < 0 || params_[0] == 1) {
            fail("a must be a natural number other than 1");
          }
          a_ = params_[0];
          break;
        case zfamily::f40b:
          if (params_[0] < 0) {
            fail("a must be a natural number");
          }
          a_ = params_[0];
          b_ = 1;
          break;
        case zfamily::f41a:
          if (params_[0] < 1) {
            fail("c must be at least 1");
          }
          c_ = params_[0];
          break;
        case zfamily::f41b:
          if (params_[0] < 1) {
            fail("c must be at least 1");
          }
          b_ = 1;
          c_ = params_[0];
          break;
        case zfamily::f42: {
          auto const a = params_[0];
          auto const b = params_[1];
          auto const c = params_[2];
          if (a < 3 || b < 2 || b > a - 1 || c < 1) {
            fail("need a >= 3, 2 <= b <= a - 1 and c >= 1");
          }
          boost::multiprecision::cpp_int const lhs = boost::multiprecision::cpp_int(a) * c;
          boost::multiprecision::cpp_int const rhs = boost::multiprecision::cpp_int(b) * (b - 1);
          if (lhs != rhs) {
            fail("need a c = b (b - 1)");
          }
          a_ = a;
          b_ = b;
          c_ = c;
          break;
        }
      }
    }

    [[nodiscard]] zfamily family() const noexcept { return family_; }
    [[nodiscard]] std::vector<std::int64_t> const& params() const noexcept { return params_; }
    [[nodiscard]] std::int64_t a() const noexcept { return a_; }
    [[nodiscard]] std::int64_t b() const noexcept { return b_; }
    [[nodiscard]] std::int64_t c() const noexcept { return c_; }

    // Product in any integer type with the usual arithmetic.
    template <typename Int>
    [[nodiscard]] Int mul(Int const& m, Int const& n) const {
      switch (family_) {
        case zfamily::proj_left: return m;
        case zfamily::proj_right: return n;
        default: return Int(a_) * m * n + Int(b_) * (m + n) + Int(c_);
      }
    }

   private:
    zfamily                   family_;
    std::vector<std::int64_t> params_;
    std::int64_t              a_ = 0;
    std::int64_t              b_ = 0;
    std::int64_t              c_ = 0;
  };

  struct zviolation {
    std::string               law;
    std::vector<std::int64_t> args;
  };

  // Outcome of a window scan. Passing is evidence on [-W, W], not a proof.
  struct zwindow_report {
    std::int64_t            window = 0;
    std::size_t             checked = 0;
    std::size_t             total   = 0;
    std::vector<zviolation> violations;
    bool                    widened = false;  // int64 overflowed, redone in cpp_int

    [[nodiscard]] bool ok() const noexcept { return total == 0; }

    void add(std::string_view law, std::initializer_list<std::int64_t> args) {
      ++total;
      if (violations.size() < validation_report::max_listed) {
        violations.push_back({std::string(law), std::vector<std::int64_t>(args)});
      }
    }
  };

  namespace detail {
    // int64 arithmetic that records overflow instead of wrapping.
    struct checked_int {
      std::int64_t v = 0;
      bool*        overflow = nullptr;

      checked_int() = default;
      checked_int(std::int64_t x) : v(x) {}  // NOLINT(google-explicit-constructor)
      checked_int(std::int64_t x, bool* o) : v(x), overflow(o) {}

      static bool* sink(checked_int const& a, checked_int const& b) {
        return a.overflow != nullptr ? a.overflow : b.overflow;
      }

      friend checked_int operator+(checked_int const& a, checked_int const& b) {
        checked_int r{0, sink(a, b)};
        if (__builtin_add_overflow(a.v, b.v, &r.v) && r.overflow != nullptr) {
          *r.overflow = true;
        }
        return r;
      }
      friend checked_int operator-(checked_int const& a, checked_int const& b) {
        checked_int r{0, sink(a, b)};
        if (__builtin_sub_overflow(a.v, b.v, &r.v) && r.overflow != nullptr) {
          *r.overflow = true;
        }
        return r;
      }
      friend checked_int operator*(checked_int const& a, checked_int const& b) {
        checked_int r{0, sink(a, b)};
        if (__builtin_mul_overflow(a.v, b.v, &r.v) && r.overflow != nullptr) {
          *r.overflow = true;
        }
        return r;
      }
      friend bool operator==(checked_int const& a, checked_int const& b) { return a.v == b.v; }
    };

    template <typename Int, typename Make>
    void scan_window(ztruss const& z, std::int64_t w, Make make, zwindow_report& r) {
      auto mul     = [&](Int const& x, Int const& y) { return z.template mul<Int>(x, y); };
      auto bracket = [](Int const& l, Int const& m, Int const& n) { return l - m + n; };
      for (std::int64_t l = -w; l <= w; ++l) {
        Int const L = make(l);
        for (std::int64_t m = -w; m <= w; ++m) {
          Int const M  = make(m);
          Int const LM = mul(L, M);
          for (std::int64_t n = -w; n <= w; ++n) {
            Int const N = make(n);
            ++r.checked;
            if (!(mul(LM, N) == mul(L, mul(M, N)))) {
              r.add("associativity", {l, m, n});
            }
            Int const B = bracket(L, M, N);
            for (std::int64_t p = -w; p <= w; ++p) {
              Int const P = make(p);
              if (!(mul(P, B) == bracket(mul(P, L), mul(P, M), mul(P, N)))) {
                r.add("left_distributivity", {p, l, m, n});
              }
              if (!(mul(B, P) == bracket(mul(L, P), mul(M, P), mul(N, P)))) {
                r.add("right_distributivity", {l, m, n, p});
              }
            }
          }
        }
      }
    }

    inline void require_window(std::int64_t w) {
      if (w < 1) {
        throw invalid_parameters("window must be at least 1");
      }
    }
  }  // namespace detail

  // Associativity and both distributive laws for all arguments in [-W, W].
  inline zwindow_report verify_window(ztruss const& z, std::int64_t w) {
    detail::require_window(w);
    zwindow_report r;
    r.window      = w;
    bool overflow = false;
    detail::scan_window<detail::checked_int>(
        z, w, [&](std::int64_t x) { return detail::checked_int{x, &overflow}; }, r);
    if (overflow) {
      r = {};
      r.window  = w;
      r.widened = true;
      using big = boost::multiprecision::cpp_int;
      detail::scan_window<big>(z, w, [](std::int64_t x) { return big(x); }, r);
    }
    return r;
  }

  // R(m) = [m, a, m] = 2m - a on the constant product m n = a: heap morphism
  // and the weight-zero Rota-Baxter identity with absorber a, on [-W, W].
  inline zwindow_report zrb_constant_product(std::int64_t a, std::int64_t w) {
    detail::require_window(w);
    if (std::llabs(a) > w) {
      throw invalid_parameters("window must contain the constant");
    }
    using big = boost::multiprecision::cpp_int;
    zwindow_report r;
    r.window     = w;
    big const A  = a;
    auto R       = [&](big const& m) { return m - A + m; };
    auto mul     = [&](big const&, big const&) { return A; };
    auto bracket = [](big const& l, big const& m, big const& n) { return l - m + n; };
    for (std::int64_t l = -w; l <= w; ++l) {
      for (std::int64_t m = -w; m <= w; ++m) {
        ++r.checked;
        big const L = l;
        big const M = m;
        if (mul(R(L), R(M)) != R(bracket(mul(R(L), M), A, mul(L, R(M))))) {
          r.add("rb0", {l, m});
        }
        for (std::int64_t n = -w; n <= w; ++n) {
          big const N = n;
          if (R(bracket(L, M, N)) != bracket(R(L), R(M), R(N))) {
            r.add("heap_morphism", {l, m, n});
          }
        }
      }
    }
    if (R(A) != A) {
      r.add("absorber_condition", {a});
    }
    return r;
  }

}  // namespace trusslab
