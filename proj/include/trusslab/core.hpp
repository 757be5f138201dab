// Basic vocabulary shared by every trusslab module: carrier elements, square
// operation tables, endomaps, validation reports, size limits and the
// exception hierarchy.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trusslab {

  // Carrier elements are the indices 0..n-1.
  using element = std::uint32_t;

  ////////////////////////////////////////////////////////////////////////
  // Errors
  ////////////////////////////////////////////////////////////////////////

  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class index_out_of_range : public error {
   public:
    using error::error;
  };

  class not_a_group : public error {
   public:
    using error::error;
  };

  class not_an_absorber : public error {
   public:
    using error::error;
  };

  class not_central : public error {
   public:
    using error::error;
  };

  class size_cap_exceeded : public error {
   public:
    using error::error;
  };

  class invalid_parameters : public error {
   public:
    using error::error;
  };

  class not_idempotent : public error {
   public:
    using error::error;
  };

  class not_group_homomorphism : public error {
   public:
    using error::error;
  };

  class operator_check_failed : public error {
   public:
    using error::error;
  };

  ////////////////////////////////////////////////////////////////////////
  // Limits
  ////////////////////////////////////////////////////////////////////////

  // Size caps for constructions and exhaustive searches. Every operation that
  // can blow up takes one of these; the defaults keep the test suites fast.
  struct limits {
    std::size_t truss_size      = 256;  // constructed trusses
    std::size_t operator_search = 6;    // morphism-decomposition search
    std::size_t naive_search    = 4;    // n^n naive cross-check
    std::size_t enumeration     = 4;    // truss products on a heap
    std::size_t canonical       = 8;    // n! canonical-form search
  };

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  // A binary operation on {0..n-1}, stored row-major.
  class table {
   public:
    table() = default;

    explicit table(std::size_t n, element fill = 0) : n_(n), cells_(n * n, fill) {}

    table(std::size_t n, std::vector<element> cells) : n_(n), cells_(std::move(cells)) {
      if (cells_.size() != n_ * n_) {
        throw error("table: expected " + std::to_string(n_ * n_) + " cells, got "
                    + std::to_string(cells_.size()));
      }
    }

    static table from_rows(std::vector<std::vector<element>> const& rows) {
      std::size_t const n = rows.size();
      std::vector<element> cells;
      cells.reserve(n * n);
      for (auto const& row : rows) {
        if (row.size() != n) {
          throw error("table: rows must have length " + std::to_string(n));
        }
        cells.insert(cells.end(), row.begin(), row.end());
      }
      return table(n, std::move(cells));
    }

    template <typename F>
    static table generate(std::size_t n, F&& f) {
      table t(n);
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          t.cells_[x * n + y] = f(x, y);
        }
      }
      return t;
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    element operator()(element x, element y) const noexcept { return cells_[x * n_ + y]; }
    element& operator()(element x, element y) noexcept { return cells_[x * n_ + y]; }

    [[nodiscard]] std::span<element const> cells() const noexcept { return cells_; }
    [[nodiscard]] std::span<element const> row(element x) const noexcept {
      return std::span<element const>(cells_).subspan(x * n_, n_);
    }

    [[nodiscard]] std::vector<std::vector<element>> rows() const {
      std::vector<std::vector<element>> out(n_);
      for (element x = 0; x < n_; ++x) {
        out[x].assign(cells_.begin() + x * n_, cells_.begin() + (x + 1) * n_);
      }
      return out;
    }

    // True iff every cell is a carrier index.
    [[nodiscard]] bool closed() const noexcept {
      return std::all_of(cells_.begin(), cells_.end(), [this](element v) { return v < n_; });
    }

    friend bool operator==(table const&, table const&)  = default;
    friend auto operator<=>(table const&, table const&) = default;

   private:
    std::size_t          n_ = 0;
    std::vector<element> cells_;
  };

  // A total map carrier -> carrier.
  struct endo_map {
    std::vector<element> image;

    endo_map() = default;
    explicit endo_map(std::vector<element> img) : image(std::move(img)) {}
    endo_map(std::initializer_list<element> img) : image(img) {}

    static endo_map identity(std::size_t n) {
      std::vector<element> img(n);
      for (element i = 0; i < n; ++i) {
        img[i] = i;
      }
      return endo_map(std::move(img));
    }

    static endo_map constant(std::size_t n, element c) {
      return endo_map(std::vector<element>(n, c));
    }

    [[nodiscard]] std::size_t size() const noexcept { return image.size(); }
    element operator()(element x) const noexcept { return image[x]; }

    [[nodiscard]] bool is_bijective() const {
      std::vector<bool> seen(image.size(), false);
      for (element v : image) {
        if (v >= image.size() || seen[v]) {
          return false;
        }
        seen[v] = true;
      }
      return true;
    }

    // Only meaningful when is_bijective().
    [[nodiscard]] endo_map inverse() const {
      std::vector<element> inv(image.size());
      for (element x = 0; x < image.size(); ++x) {
        inv[image[x]] = x;
      }
      return endo_map(std::move(inv));
    }

    friend bool operator==(endo_map const&, endo_map const&)  = default;
    friend auto operator<=>(endo_map const&, endo_map const&) = default;
  };

  // All n^n total maps in lexicographic order.
  inline std::vector<endo_map> all_maps(std::size_t n) {
    std::vector<endo_map> out;
    std::vector<element>  img(n, 0);
    while (true) {
      out.emplace_back(img);
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++img[i] < n) {
          break;
        }
        img[i] = 0;
        if (i == 0) {
          return out;
        }
      }
      if (n == 0) {
        return out;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Validation reports
  ////////////////////////////////////////////////////////////////////////

  struct violation {
    std::string          law;
    std::vector<element> args;

    friend bool operator==(violation const&, violation const&) = default;
  };

  // Every violated instance is counted; the first `max_listed` are kept.
  struct validation_report {
    static constexpr std::size_t max_listed = 4096;

    std::vector<violation> violations;
    std::size_t            total = 0;

    [[nodiscard]] bool ok() const noexcept { return total == 0; }

    void add(std::string_view law, std::initializer_list<element> args) {
      ++total;
      if (violations.size() < max_listed) {
        violations.push_back({std::string(law), std::vector<element>(args)});
      }
    }

    void merge(validation_report const& other) {
      total += other.total;
      for (auto const& v : other.violations) {
        if (violations.size() >= max_listed) {
          break;
        }
        violations.push_back(v);
      }
    }

    [[nodiscard]] std::size_t count(std::string_view law) const {
      return static_cast<std::size_t>(std::count_if(
          violations.begin(), violations.end(), [law](violation const& v) { return v.law == law; }));
    }

    [[nodiscard]] violation const* first(std::string_view law) const {
      auto it = std::find_if(
          violations.begin(), violations.end(), [law](violation const& v) { return v.law == law; });
      return it == violations.end() ? nullptr : &*it;
    }
  };

  // Thrown when a constructor re-validates its result and finds violations.
  class validation_error : public error {
   public:
    validation_error(std::string const& what, validation_report report)
        : error(what), report_(std::move(report)) {}

    [[nodiscard]] validation_report const& report() const noexcept { return report_; }

   private:
    validation_report report_;
  };

  class invalid_truss : public validation_error {
   public:
    using validation_error::validation_error;
  };

  class invalid_structure : public validation_error {
   public:
    using validation_error::validation_error;
  };

  namespace detail {
    inline void check_index(element x, std::size_t n, char const* where) {
      if (x >= n) {
        throw index_out_of_range(std::string(where) + ": element " + std::to_string(x)
                                 + " out of range for carrier of size " + std::to_string(n));
      }
    }

    inline void check_cap(std::size_t n, std::size_t cap, char const* where) {
      if (n > cap) {
        throw size_cap_exceeded(std::string(where) + ": size " + std::to_string(n)
                                + " exceeds cap " + std::to_string(cap));
      }
    }
  }  // namespace detail

}  // namespace trusslab
