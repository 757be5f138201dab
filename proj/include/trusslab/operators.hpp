// Rota-Baxter type operators on finite trusses: direct checks, exhaustive
// search, graph characterizations, and the Nijenhuis operator induced on
// T ⋉ T by a weight-zero Rota-Baxter operator.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "heap.hpp"
#include "truss.hpp"

namespace trusslab {

  enum class operator_tag {
    rb0,                  // R(x)R(y) = R([R(x)y, 0, xR(y)]), R(0) = 0
    rb_weighted,          // R(x)R(y) = R([R(x)y, a x y, xR(y)]), a central
    rb1,                  // R(x)R(y) = R([R(x)y, x y, xR(y)])
    derivation,           // D(xy) = [D(x)y, 0, xD(y)], D(0) = 0
    modified_derivation,  // D(xy) = [xD(y), xy, D(x)y]
    reynolds,             // P(x)P(y) = P([P(x)y, P(x)P(y), xP(y)])
    nijenhuis,            // N(x)N(y) = N([N(x)y, N(xy), xN(y)])
    avg_left,             // K(x)K(y) = K(K(x)y)
    avg_right,            // K(x)K(y) = K(xK(y))
    avg,                  // both
    avg_hom,              // both, and a truss morphism
  };

  // An operator class together with its distinguished element: the absorber
  // for rb0 / derivation (nullopt = use the truss's absorber), the weight for
  // rb_weighted.
  struct operator_kind {
    operator_tag           tag;
    std::optional<element> param;

    static operator_kind rb0(std::optional<element> zero = std::nullopt) {
      return {operator_tag::rb0, zero};
    }
    static operator_kind rb_weighted(element a) { return {operator_tag::rb_weighted, a}; }
    static operator_kind rb1() { return {operator_tag::rb1, std::nullopt}; }
    static operator_kind derivation(std::optional<element> zero = std::nullopt) {
      return {operator_tag::derivation, zero};
    }
    static operator_kind modified_derivation() {
      return {operator_tag::modified_derivation, std::nullopt};
    }
    static operator_kind reynolds() { return {operator_tag::reynolds, std::nullopt}; }
    static operator_kind nijenhuis() { return {operator_tag::nijenhuis, std::nullopt}; }
    static operator_kind avg_left() { return {operator_tag::avg_left, std::nullopt}; }
    static operator_kind avg_right() { return {operator_tag::avg_right, std::nullopt}; }
    static operator_kind avg() { return {operator_tag::avg, std::nullopt}; }
    static operator_kind avg_hom() { return {operator_tag::avg_hom, std::nullopt}; }

    friend bool operator==(operator_kind const&, operator_kind const&) = default;
  };

  inline constexpr std::array<std::pair<operator_tag, std::string_view>, 11> operator_tag_names{{
      {operator_tag::rb0, "rb0"},
      {operator_tag::rb_weighted, "rbw"},
      {operator_tag::rb1, "rb1"},
      {operator_tag::derivation, "der"},
      {operator_tag::modified_derivation, "mder"},
      {operator_tag::reynolds, "rey"},
      {operator_tag::nijenhuis, "nij"},
      {operator_tag::avg_left, "avgl"},
      {operator_tag::avg_right, "avgr"},
      {operator_tag::avg, "avg"},
      {operator_tag::avg_hom, "avgh"},
  }};

  inline std::string_view tag_name(operator_tag tag) {
    for (auto const& [t, name] : operator_tag_names) {
      if (t == tag) {
        return name;
      }
    }
    return "?";
  }

  // "rb0", "rb0:2", "rbw:1", "rb1", "der", "der:0", "mder", "rey", "nij",
  // "avgl", "avgr", "avg", "avgh".
  inline std::string to_string(operator_kind const& k) {
    std::string out(tag_name(k.tag));
    if (k.param) {
      out += ":" + std::to_string(*k.param);
    }
    return out;
  }

  inline operator_kind parse_operator_kind(std::string_view s) {
    auto const             colon = s.find(':');
    std::string_view const name  = s.substr(0, colon);
    std::optional<element> param;
    if (colon != std::string_view::npos) {
      std::string const digits(s.substr(colon + 1));
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw invalid_parameters("operator kind: bad parameter in '" + std::string(s) + "'");
      }
      param = static_cast<element>(std::stoul(digits));
    }
    for (auto const& [tag, tname] : operator_tag_names) {
      if (tname == name) {
        bool const takes_param = tag == operator_tag::rb0 || tag == operator_tag::derivation
                                 || tag == operator_tag::rb_weighted;
        if (param && !takes_param) {
          throw invalid_parameters("operator kind '" + std::string(name) + "' takes no parameter");
        }
        if (tag == operator_tag::rb_weighted && !param) {
          throw invalid_parameters("operator kind 'rbw' needs a weight, e.g. rbw:1");
        }
        return {tag, param};
      }
    }
    throw invalid_parameters("unknown operator kind '" + std::string(s) + "'");
  }

  struct check_report {
    enum class failure { none, not_heap_morphism, absorber_condition, identity, not_truss_morphism };

    bool                 ok     = true;
    failure              reason = failure::none;
    std::vector<element> witness;  // (x, y) for identity failures

    explicit operator bool() const noexcept { return ok; }
  };

  inline std::string_view to_string(check_report::failure f) {
    switch (f) {
      case check_report::failure::none:
        return "none";
      case check_report::failure::not_heap_morphism:
        return "not_heap_morphism";
      case check_report::failure::absorber_condition:
        return "absorber_condition";
      case check_report::failure::identity:
        return "identity";
      case check_report::failure::not_truss_morphism:
        return "not_truss_morphism";
    }
    return "?";
  }

  namespace detail {
    // Fills in the absorber for rb0 / derivation and rejects bad designations.
    inline operator_kind resolve(finite_truss const& t, operator_kind k) {
      switch (k.tag) {
        case operator_tag::rb0:
        case operator_tag::derivation: {
          if (!k.param) {
            auto const z = absorber(t);
            if (!z) {
              throw not_an_absorber(std::string(tag_name(k.tag)) + ": truss has no absorber");
            }
            k.param = *z;
          }
          require_absorber(t, *k.param, tag_name(k.tag).data());
          break;
        }
        case operator_tag::rb_weighted:
          check_index(*k.param, t.size(), "rbw");
          if (!is_central(t, *k.param)) {
            throw not_central("rbw: weight " + std::to_string(*k.param) + " is not central");
          }
          break;
        default:
          break;
      }
      return k;
    }

    inline std::optional<std::pair<element, element>>
    first_identity_failure(finite_truss const& t, endo_map const& f, operator_kind const& k) {
      std::size_t const n = t.size();
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          bool ok = true;
          switch (k.tag) {
            case operator_tag::rb0:
              ok = t(f(x), f(y)) == f(t.bracket(t(f(x), y), *k.param, t(x, f(y))));
              break;
            case operator_tag::rb_weighted:
              ok = t(f(x), f(y)) == f(t.bracket(t(f(x), y), t(t(*k.param, x), y), t(x, f(y))));
              break;
            case operator_tag::rb1:
              ok = t(f(x), f(y)) == f(t.bracket(t(f(x), y), t(x, y), t(x, f(y))));
              break;
            case operator_tag::derivation:
              ok = f(t(x, y)) == t.bracket(t(f(x), y), *k.param, t(x, f(y)));
              break;
            case operator_tag::modified_derivation:
              ok = f(t(x, y)) == t.bracket(t(x, f(y)), t(x, y), t(f(x), y));
              break;
            case operator_tag::reynolds:
              ok = t(f(x), f(y)) == f(t.bracket(t(f(x), y), t(f(x), f(y)), t(x, f(y))));
              break;
            case operator_tag::nijenhuis:
              ok = t(f(x), f(y)) == f(t.bracket(t(f(x), y), f(t(x, y)), t(x, f(y))));
              break;
            case operator_tag::avg_left:
              ok = t(f(x), f(y)) == f(t(f(x), y));
              break;
            case operator_tag::avg_right:
              ok = t(f(x), f(y)) == f(t(x, f(y)));
              break;
            case operator_tag::avg:
            case operator_tag::avg_hom:
              ok = t(f(x), f(y)) == f(t(f(x), y)) && t(f(x), f(y)) == f(t(x, f(y)));
              break;
          }
          if (!ok) {
            return std::pair{x, y};
          }
        }
      }
      return std::nullopt;
    }

    // Everything except the heap-morphism test; k must be resolved.
    inline check_report check_resolved(finite_truss const& t, endo_map const& f,
                                       operator_kind const& k) {
      check_report r;
      if ((k.tag == operator_tag::rb0 || k.tag == operator_tag::derivation)
          && f(*k.param) != *k.param) {
        r.ok     = false;
        r.reason = check_report::failure::absorber_condition;
        r.witness = {*k.param};
        return r;
      }
      if (k.tag == operator_tag::avg_hom) {
        for (element x = 0; x < t.size(); ++x) {
          for (element y = 0; y < t.size(); ++y) {
            if (f(t(x, y)) != t(f(x), f(y))) {
              r.ok      = false;
              r.reason  = check_report::failure::not_truss_morphism;
              r.witness = {x, y};
              return r;
            }
          }
        }
      }
      if (auto w = first_identity_failure(t, f, k)) {
        r.ok      = false;
        r.reason  = check_report::failure::identity;
        r.witness = {w->first, w->second};
      }
      return r;
    }

    inline void check_map(finite_truss const& t, endo_map const& f, char const* where) {
      if (f.size() != t.size()) {
        throw invalid_parameters(std::string(where) + ": map has " + std::to_string(f.size())
                                 + " entries, truss has " + std::to_string(t.size()));
      }
      for (element v : f.image) {
        check_index(v, t.size(), where);
      }
    }
  }  // namespace detail

  // Checks f against the defining identity of `kind`, after the heap-morphism
  // requirement and any absorber condition. Throws not_an_absorber /
  // not_central when the kind's distinguished element is unusable.
  inline check_report check_operator(finite_truss const& t, endo_map const& f, operator_kind kind) {
    detail::check_map(t, f, "check_operator");
    kind = detail::resolve(t, kind);
    if (!is_heap_morphism(t.heap(), t.heap(), f)) {
      check_report r;
      r.ok     = false;
      r.reason = check_report::failure::not_heap_morphism;
      return r;
    }
    return detail::check_resolved(t, f, kind);
  }

  // Every operator of the kind. Candidates are the heap endomorphisms
  // f(x) = t +_0 g(x), g additive.
  inline std::vector<endo_map> search_operators(finite_truss const& t, operator_kind kind,
                                                limits const& lim = {}) {
    detail::check_cap(t.size(), lim.operator_search, "search_operators");
    kind = detail::resolve(t, kind);
    std::vector<endo_map> out;
    for (auto& f : heap_endomorphisms(t.heap())) {
      if (detail::check_resolved(t, f, kind).ok) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  // Cross-check: filters all n^n maps through check_operator.
  inline std::vector<endo_map> naive_search_operators(finite_truss const& t, operator_kind kind,
                                                      limits const& lim = {}) {
    detail::check_cap(t.size(), lim.naive_search, "naive_search_operators");
    std::vector<endo_map> out;
    for (auto& f : all_maps(t.size())) {
      if (check_operator(t, f, kind).ok) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  // Gr(f) = {(f(x), x)} as indices of T x T.
  inline std::vector<element> graph(endo_map const& f) {
    std::vector<element> out;
    for (element x = 0; x < f.size(); ++x) {
      out.push_back(pair_index(f.size(), f(x), x));
    }
    return out;
  }

  // Decides the operator identity through subtruss membership of the graph:
  // rb0 in T ⋉ T, rb_weighted in T ⋈_a T, avg_left / avg_right in the
  // left / right hemisemi-direct product, avg_hom in all three hemisemi
  // products. The rb0 condition f(0) = 0 is not visible in the graph and is
  // tested separately.
  inline bool graph_characterization(finite_truss const& t, endo_map const& f, operator_kind kind,
                                     limits const& lim = {}) {
    detail::check_map(t, f, "graph_characterization");
    kind           = detail::resolve(t, kind);
    auto const gr  = graph(f);
    switch (kind.tag) {
      case operator_tag::rb0:
        return f(*kind.param) == *kind.param && is_subtruss(product_ltimes(t, *kind.param, lim), gr);
      case operator_tag::rb_weighted:
        return is_subtruss(product_bowtie(t, *kind.param, lim), gr);
      case operator_tag::avg_left:
        return is_subtruss(hemisemi_product(t, hemisemi_side::left, lim), gr);
      case operator_tag::avg_right:
        return is_subtruss(hemisemi_product(t, hemisemi_side::right, lim), gr);
      case operator_tag::avg_hom:
        return is_subtruss(hemisemi_product(t, hemisemi_side::left, lim), gr)
               && is_subtruss(hemisemi_product(t, hemisemi_side::right, lim), gr)
               && is_subtruss(hemisemi_product(t, hemisemi_side::medium, lim), gr);
      default:
        throw invalid_parameters("graph_characterization: no graph form for kind '"
                                 + to_string(kind) + "'");
    }
  }

  struct nijenhuis_on_product {
    finite_truss product;  // T ⋉ T
    endo_map     op;       // N(a, x) = (R(x), 0)
  };

  inline nijenhuis_on_product nijenhuis_from_rb0(finite_truss const& t, endo_map const& r,
                                                 element zero, limits const& lim = {}) {
    auto const report = check_operator(t, r, operator_kind::rb0(zero));
    if (!report.ok) {
      throw operator_check_failed("nijenhuis_from_rb0: map is not a weight-zero Rota-Baxter operator");
    }
    std::size_t const n = t.size();
    auto product        = product_ltimes(t, zero, lim);
    std::vector<element> img(n * n);
    for (element p = 0; p < n * n; ++p) {
      img[p] = pair_index(n, r(pair_second(n, p)), zero);
    }
    return {std::move(product), endo_map(std::move(img))};
  }

  // R(x) R(y) = R(R(x) y + x R(y)) on a ring, for additive R.
  inline bool check_rb_ring(finite_ring const& r, endo_map const& f) {
    std::size_t const n = r.size();
    if (f.size() != n) {
      throw invalid_parameters("check_rb_ring: map size mismatch");
    }
    for (element v : f.image) {
      detail::check_index(v, n, "check_rb_ring");
    }
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (f(r.plus(x, y)) != r.plus(f(x), f(y))) {
          throw not_group_homomorphism("check_rb_ring: map is not additive at ("
                                       + std::to_string(x) + ", " + std::to_string(y) + ")");
        }
      }
    }
    for (element x = 0; x < n; ++x) {
      for (element y = 0; y < n; ++y) {
        if (r.times(f(x), f(y)) != f(r.plus(r.times(f(x), y), r.times(x, f(y))))) {
          return false;
        }
      }
    }
    return true;
  }

  // phi o f o phi^-1, transporting an operator along a bijection.
  inline endo_map conjugate(endo_map const& f, endo_map const& phi) {
    auto const           inv = phi.inverse();
    std::vector<element> img(f.size());
    for (element y = 0; y < f.size(); ++y) {
      img[y] = phi(f(inv(y)));
    }
    return endo_map(std::move(img));
  }

}  // namespace trusslab
