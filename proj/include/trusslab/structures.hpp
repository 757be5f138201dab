// Split structures: dendriform, tridendriform and NS trusses, di- and
// tri-trusses, and the ring-side twins of the first three. Builds them from
// operators, validates their axiom lists, recombines them into subadjacent
// trusses and moves them between the truss and ring sides.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core.hpp"
#include "heap.hpp"
#include "operators.hpp"
#include "truss.hpp"

namespace trusslab {

  enum class structure_kind { dendriform, tridendriform, ns, di, tri };
  enum class structure_side { truss, ring };

  inline std::string_view to_string(structure_kind k) {
    switch (k) {
      case structure_kind::dendriform:
        return "dendriform";
      case structure_kind::tridendriform:
        return "tridendriform";
      case structure_kind::ns:
        return "ns";
      case structure_kind::di:
        return "di";
      case structure_kind::tri:
        return "tri";
    }
    return "?";
  }

  inline std::string_view to_string(structure_side s) {
    return s == structure_side::truss ? "truss" : "ring";
  }

  inline structure_kind parse_structure_kind(std::string_view s) {
    for (auto k : {structure_kind::dendriform, structure_kind::tridendriform, structure_kind::ns,
                   structure_kind::di, structure_kind::tri}) {
      if (to_string(k) == s) {
        return k;
      }
    }
    throw invalid_parameters("unknown structure kind '" + std::string(s) + "'");
  }

  inline structure_side parse_structure_side(std::string_view s) {
    if (s == "truss") {
      return structure_side::truss;
    }
    if (s == "ring") {
      return structure_side::ring;
    }
    throw invalid_parameters("unknown structure side '" + std::string(s) + "'");
  }

  // Table names per kind: succ (≻), prec (≺), vee (∨), curlyvee (⋎),
  // vdash (⊢), dashv (⊣), bot (⊥).
  inline std::vector<std::string> required_tables(structure_kind k) {
    switch (k) {
      case structure_kind::dendriform:
        return {"succ", "prec"};
      case structure_kind::tridendriform:
        return {"succ", "vee", "prec"};
      case structure_kind::ns:
        return {"succ", "curlyvee", "prec"};
      case structure_kind::di:
        return {"vdash", "dashv"};
      case structure_kind::tri:
        return {"vdash", "dashv", "bot"};
    }
    return {};
  }

  // The heap is always stored; on the ring side `zero` is the additive
  // identity and x + y = [x, zero, y]. Dendriform structures carry their
  // distinguished absorber in `zero` on both sides.
  struct split_structure {
    structure_side               side = structure_side::truss;
    structure_kind               kind = structure_kind::dendriform;
    finite_heap                  heap;
    std::optional<element>       zero;
    std::map<std::string, table> tables;

    [[nodiscard]] std::size_t size() const noexcept { return heap.size(); }

    [[nodiscard]] table const& op(std::string const& name) const {
      auto it = tables.find(name);
      if (it == tables.end()) {
        throw invalid_parameters("split structure: missing table '" + name + "'");
      }
      return it->second;
    }

    friend bool operator==(split_structure const&, split_structure const&) = default;
  };

  namespace detail {
    template <typename F>
    void for_triples(std::size_t n, F&& f) {
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          for (element z = 0; z < n; ++z) {
            f(x, y, z);
          }
        }
      }
    }

    inline void check_distributive_both(finite_heap const& h, table const& op, std::string const& name,
                                        validation_report& r) {
      check_left_distributive(h, op, "dist_" + name + "_right_arg", r);
      check_right_distributive(h, op, "dist_" + name + "_left_arg", r);
    }

    // x op (y + w) = x op y + x op w and (x + y) op w = x op w + y op w in
    // the retract at zero.
    inline void check_additive_both(finite_heap const& h, element zero, table const& op,
                                    std::string const& name, validation_report& r) {
      std::size_t const n = h.size();
      for_triples(n, [&](element x, element y, element w) {
        if (op(x, h(y, zero, w)) != h(op(x, y), zero, op(x, w))) {
          r.add("add_" + name + "_right_arg", {x, y, w});
        }
        if (op(h(x, zero, y), w) != h(op(x, w), zero, op(y, w))) {
          r.add("add_" + name + "_left_arg", {x, y, w});
        }
      });
    }

    inline void validate_dendriform(split_structure const& s, validation_report& r) {
      auto const& h    = s.heap;
      auto const& succ = s.op("succ");
      auto const& prec = s.op("prec");
      element const z  = *s.zero;
      std::size_t const n = s.size();
      if (s.side == structure_side::truss) {
        for (element x = 0; x < n; ++x) {
          if (succ(x, z) != z || succ(z, x) != z || prec(z, x) != z || prec(x, z) != z) {
            r.add("dend1", {x});
          }
        }
        check_right_distributive(h, succ, "dend2_succ", r);
        check_left_distributive(h, prec, "dend2_prec", r);
      } else {
        for (element x = 0; x < n; ++x) {
          if (succ(x, z) != z || prec(z, x) != z) {
            r.add("ring_zero", {x});
          }
        }
        for_triples(n, [&](element x, element y, element w) {
          if (succ(h(x, z, y), w) != h(succ(x, w), z, succ(y, w))) {
            r.add("add_succ_left_arg", {x, y, w});
          }
          if (prec(x, h(y, z, w)) != h(prec(x, y), z, prec(x, w))) {
            r.add("add_prec_right_arg", {x, y, w});
          }
        });
      }
      // On the ring side x ≻ y + x ≺ y = [x ≻ y, 0, x ≺ y], so the remaining
      // axioms read the same on both sides.
      for_triples(n, [&](element x, element y, element w) {
        if (succ(h(succ(x, y), z, prec(x, y)), w) != succ(x, succ(y, w))) {
          r.add("dend3", {x, y, w});
        }
        if (prec(succ(x, y), w) != succ(x, prec(y, w))) {
          r.add("dend4", {x, y, w});
        }
        if (prec(prec(x, y), w) != prec(x, h(succ(y, w), z, prec(y, w)))) {
          r.add("dend5", {x, y, w});
        }
      });
    }

    // The ring-side product ∗ = ≻ - ∨ + ≺ equals the truss-side [≻, ∨, ≺],
    // so both sides share the seven axioms.
    inline void validate_tridendriform(split_structure const& s, validation_report& r) {
      auto const& h    = s.heap;
      auto const& succ = s.op("succ");
      auto const& vee  = s.op("vee");
      auto const& prec = s.op("prec");
      for (auto const& name : required_tables(structure_kind::tridendriform)) {
        if (s.side == structure_side::truss) {
          check_distributive_both(h, s.op(name), name, r);
        } else {
          check_additive_both(h, *s.zero, s.op(name), name, r);
        }
      }
      auto star = [&](element x, element y) { return h(succ(x, y), vee(x, y), prec(x, y)); };
      for_triples(s.size(), [&](element x, element y, element z) {
        if (prec(prec(x, y), z) != prec(x, star(y, z))) {
          r.add("tri1", {x, y, z});
        }
        if (prec(succ(x, y), z) != succ(x, prec(y, z))) {
          r.add("tri2", {x, y, z});
        }
        if (succ(star(x, y), z) != succ(x, succ(y, z))) {
          r.add("tri3", {x, y, z});
        }
        if (vee(succ(x, y), z) != succ(x, vee(y, z))) {
          r.add("tri4", {x, y, z});
        }
        if (vee(prec(x, y), z) != vee(x, succ(y, z))) {
          r.add("tri5", {x, y, z});
        }
        if (prec(vee(x, y), z) != vee(x, prec(y, z))) {
          r.add("tri6", {x, y, z});
        }
        if (vee(vee(x, y), z) != vee(x, vee(y, z))) {
          r.add("tri7", {x, y, z});
        }
      });
    }

    inline void validate_ns(split_structure const& s, validation_report& r) {
      auto const& h     = s.heap;
      auto const& succ  = s.op("succ");
      auto const& cvee  = s.op("curlyvee");
      auto const& prec  = s.op("prec");
      for (auto const& name : required_tables(structure_kind::ns)) {
        if (s.side == structure_side::truss) {
          check_distributive_both(h, s.op(name), name, r);
        } else {
          check_additive_both(h, *s.zero, s.op(name), name, r);
        }
      }
      if (s.side == structure_side::truss) {
        auto dia = [&](element x, element y) { return h(succ(x, y), cvee(x, y), prec(x, y)); };
        for_triples(s.size(), [&](element x, element y, element z) {
          if (prec(prec(x, y), z) != prec(x, dia(y, z))) {
            r.add("NS1", {x, y, z});
          }
          if (prec(succ(x, y), z) != succ(x, prec(y, z))) {
            r.add("NS2", {x, y, z});
          }
          if (succ(dia(x, y), z) != succ(x, succ(y, z))) {
            r.add("NS3", {x, y, z});
          }
          if (prec(cvee(x, y), z) != succ(x, cvee(y, z))) {
            r.add("NS4", {x, y, z});
          }
          if (cvee(dia(x, y), z) != cvee(x, dia(y, z))) {
            r.add("NS5", {x, y, z});
          }
        });
      } else {
        element const zero = *s.zero;
        auto plus = [&](element a, element b) { return h(a, zero, b); };
        auto dot  = [&](element x, element y) {
          return plus(plus(succ(x, y), prec(x, y)), cvee(x, y));
        };
        for_triples(s.size(), [&](element x, element y, element z) {
          if (prec(prec(x, y), z) != prec(x, dot(y, z))) {
            r.add("NS1", {x, y, z});
          }
          if (prec(succ(x, y), z) != succ(x, prec(y, z))) {
            r.add("NS2", {x, y, z});
          }
          if (succ(dot(x, y), z) != succ(x, succ(y, z))) {
            r.add("NS3", {x, y, z});
          }
          if (plus(prec(cvee(x, y), z), cvee(dot(x, y), z))
              != plus(succ(x, cvee(y, z)), cvee(x, dot(y, z)))) {
            r.add("NS4_ring", {x, y, z});
          }
        });
      }
    }

    inline void validate_di(split_structure const& s, validation_report& r) {
      auto const& h     = s.heap;
      auto const& vdash = s.op("vdash");
      auto const& dashv = s.op("dashv");
      check_distributive_both(h, vdash, "vdash", r);
      check_distributive_both(h, dashv, "dashv", r);
      check_associative(s.size(), vdash, "assoc_vdash", r);
      check_associative(s.size(), dashv, "assoc_dashv", r);
      for_triples(s.size(), [&](element x, element y, element z) {
        if (vdash(dashv(x, y), z) != vdash(x, vdash(y, z))) {
          r.add("axiom3", {x, y, z});
        }
        if (dashv(dashv(x, y), z) != dashv(x, vdash(y, z))) {
          r.add("axiom4", {x, y, z});
        }
        if (dashv(vdash(x, y), z) != vdash(x, dashv(y, z))) {
          r.add("axiom5", {x, y, z});
        }
      });
    }

    inline void validate_tri(split_structure const& s, validation_report& r) {
      validate_di(s, r);
      auto const& h     = s.heap;
      auto const& vdash = s.op("vdash");
      auto const& dashv = s.op("dashv");
      auto const& bot   = s.op("bot");
      check_distributive_both(h, bot, "bot", r);
      check_associative(s.size(), bot, "assoc_bot", r);
      for_triples(s.size(), [&](element x, element y, element z) {
        if (dashv(dashv(x, y), z) != dashv(x, bot(y, z))) {
          r.add("axiom6", {x, y, z});
        }
        if (dashv(bot(x, y), z) != bot(x, dashv(y, z))) {
          r.add("axiom7", {x, y, z});
        }
        if (bot(dashv(x, y), z) != bot(x, vdash(y, z))) {
          r.add("axiom8", {x, y, z});
        }
        if (bot(vdash(x, y), z) != vdash(x, bot(y, z))) {
          r.add("axiom9", {x, y, z});
        }
        if (vdash(bot(x, y), z) != vdash(x, vdash(y, z))) {
          r.add("axiom10", {x, y, z});
        }
      });
    }
  }  // namespace detail

  // Exhaustive check of the kind's axiom list for the structure's side.
  // Violations are tagged by axiom name.
  inline validation_report validate_structure(split_structure const& s) {
    validation_report r;
    for (auto const& name : required_tables(s.kind)) {
      auto it = s.tables.find(name);
      if (it == s.tables.end()) {
        r.add("missing_" + name, {});
      } else if (it->second.size() != s.size() || !it->second.closed()) {
        r.add("shape_" + name, {});
      }
    }
    bool const needs_zero = s.kind == structure_kind::dendriform || s.side == structure_side::ring;
    if (needs_zero && (!s.zero || *s.zero >= s.size())) {
      r.add("zero", {});
    }
    if (s.side == structure_side::ring
        && (s.kind == structure_kind::di || s.kind == structure_kind::tri)) {
      r.add("ring_side_undefined", {});
    }
    if (!r.ok()) {
      return r;
    }
    switch (s.kind) {
      case structure_kind::dendriform:
        detail::validate_dendriform(s, r);
        break;
      case structure_kind::tridendriform:
        detail::validate_tridendriform(s, r);
        break;
      case structure_kind::ns:
        detail::validate_ns(s, r);
        break;
      case structure_kind::di:
        detail::validate_di(s, r);
        break;
      case structure_kind::tri:
        detail::validate_tri(s, r);
        break;
    }
    return r;
  }

  namespace detail {
    inline void require_valid(split_structure const& s, char const* where) {
      auto report = validate_structure(s);
      if (!report.ok()) {
        throw invalid_structure(std::string(where) + ": " + std::string(to_string(s.kind))
                                    + " axioms fail on " + std::to_string(report.total)
                                    + " instance(s)",
                                std::move(report));
      }
    }

    inline void require_operator(finite_truss const& t, endo_map const& f, operator_kind const& k,
                                 char const* where) {
      auto const report = check_operator(t, f, k);
      if (!report.ok) {
        throw operator_check_failed(std::string(where) + ": map fails the " + to_string(k)
                                    + " check (" + std::string(to_string(report.reason)) + ")");
      }
    }
  }  // namespace detail

  // The product induced on T by an operator:
  //   rb0:        [R(x)y, 0, xR(y)]
  //   rbw / rb1:  [R(x)y, w, xR(y)] with w = a x y / x y
  //   reynolds:   [P(x)y, P(x)P(y), xP(y)]
  //   nijenhuis:  [N(x)y, N(xy), xN(y)]
  inline finite_truss derive_truss(finite_truss const& t, endo_map const& f, operator_kind kind) {
    kind = detail::resolve(t, kind);
    detail::require_operator(t, f, kind, "derive_truss");
    auto mul = table::generate(t.size(), [&](element x, element y) -> element {
      element const left  = t(f(x), y);
      element const right = t(x, f(y));
      switch (kind.tag) {
        case operator_tag::rb0:
          return t.bracket(left, *kind.param, right);
        case operator_tag::rb_weighted:
          return t.bracket(left, t(t(*kind.param, x), y), right);
        case operator_tag::rb1:
          return t.bracket(left, t(x, y), right);
        case operator_tag::reynolds:
          return t.bracket(left, t(f(x), f(y)), right);
        case operator_tag::nijenhuis:
          return t.bracket(left, f(t(x, y)), right);
        default:
          throw invalid_parameters("derive_truss: no derived product for kind '" + to_string(kind)
                                   + "'");
      }
    });
    return finite_truss(t.heap(), std::move(mul));
  }

  // The splitting induced by an operator:
  //   rb0 -> dendriform (≻ = R(x)y, ≺ = xR(y), zero = 0)
  //   rbw / rb1 -> tridendriform (∨ = a x y / x y)
  //   reynolds -> NS (⋎ = P(x)P(y)); nijenhuis -> NS (⋎ = N(xy))
  //   avg -> di (⊢ = K(x)y, ⊣ = xK(y)); avgh -> tri (⊥ = the original product)
  // Throws invalid_structure if the result fails its axioms.
  inline split_structure split_from_operator(finite_truss const& t, endo_map const& f,
                                             operator_kind kind) {
    kind = detail::resolve(t, kind);
    detail::require_operator(t, f, kind, "split_from_operator");
    std::size_t const n = t.size();
    auto left  = table::generate(n, [&](element x, element y) { return t(f(x), y); });
    auto right = table::generate(n, [&](element x, element y) { return t(x, f(y)); });
    split_structure s;
    s.side = structure_side::truss;
    s.heap = t.heap();
    switch (kind.tag) {
      case operator_tag::rb0:
        s.kind           = structure_kind::dendriform;
        s.zero           = kind.param;
        s.tables["succ"] = std::move(left);
        s.tables["prec"] = std::move(right);
        break;
      case operator_tag::rb_weighted:
      case operator_tag::rb1: {
        s.kind           = structure_kind::tridendriform;
        s.tables["succ"] = std::move(left);
        s.tables["prec"] = std::move(right);
        s.tables["vee"]  = table::generate(n, [&](element x, element y) {
          return kind.tag == operator_tag::rb1 ? t(x, y) : t(t(*kind.param, x), y);
        });
        break;
      }
      case operator_tag::reynolds:
        s.kind               = structure_kind::ns;
        s.tables["succ"]     = std::move(left);
        s.tables["prec"]     = std::move(right);
        s.tables["curlyvee"] = table::generate(n, [&](element x, element y) { return t(f(x), f(y)); });
        break;
      case operator_tag::nijenhuis:
        s.kind               = structure_kind::ns;
        s.tables["succ"]     = std::move(left);
        s.tables["prec"]     = std::move(right);
        s.tables["curlyvee"] = table::generate(n, [&](element x, element y) { return f(t(x, y)); });
        break;
      case operator_tag::avg:
        s.kind            = structure_kind::di;
        s.tables["vdash"] = std::move(left);
        s.tables["dashv"] = std::move(right);
        break;
      case operator_tag::avg_hom:
        s.kind            = structure_kind::tri;
        s.tables["vdash"] = std::move(left);
        s.tables["dashv"] = std::move(right);
        s.tables["bot"]   = t.mul();
        break;
      default:
        throw invalid_parameters("split_from_operator: no splitting for kind '" + to_string(kind)
                                 + "'");
    }
    detail::require_valid(s, "split_from_operator");
    return s;
  }

  // Recombined product on the truss side: [≻, 0, ≺], [≻, ∨, ≺] or [≻, ⋎, ≺].
  inline finite_truss subadjacent(split_structure const& s) {
    if (s.side != structure_side::truss) {
      throw invalid_parameters("subadjacent: expects a truss-side structure");
    }
    if (s.kind == structure_kind::di || s.kind == structure_kind::tri) {
      throw invalid_parameters("subadjacent: di- and tri-trusses have no subadjacent product");
    }
    detail::require_valid(s, "subadjacent");
    auto const& h    = s.heap;
    auto const& succ = s.op("succ");
    auto const& prec = s.op("prec");
    table mul = table::generate(s.size(), [&](element x, element y) -> element {
      switch (s.kind) {
        case structure_kind::dendriform:
          return h(succ(x, y), *s.zero, prec(x, y));
        case structure_kind::tridendriform:
          return h(succ(x, y), s.op("vee")(x, y), prec(x, y));
        default:
          return h(succ(x, y), s.op("curlyvee")(x, y), prec(x, y));
      }
    });
    return finite_truss(h, std::move(mul));
  }

  // Ring-side product: ≻ + ≺, ≻ - ∨ + ≺ or ≻ + ≺ + ⋎.
  inline finite_ring subadjacent_ring(split_structure const& s) {
    if (s.side != structure_side::ring) {
      throw invalid_parameters("subadjacent_ring: expects a ring-side structure");
    }
    detail::require_valid(s, "subadjacent_ring");
    auto const&   h    = s.heap;
    element const z    = *s.zero;
    auto const&   succ = s.op("succ");
    auto const&   prec = s.op("prec");
    table mul = table::generate(s.size(), [&](element x, element y) -> element {
      switch (s.kind) {
        case structure_kind::dendriform:
          return h(succ(x, y), z, prec(x, y));
        case structure_kind::tridendriform:
          return h(succ(x, y), s.op("vee")(x, y), prec(x, y));
        default:
          return h(h(succ(x, y), z, prec(x, y)), z, s.op("curlyvee")(x, y));
      }
    });
    return finite_ring(retract(h, z), std::move(mul));
  }

  namespace detail {
    // z absorbs every table on both sides.
    inline bool absorbs_all(split_structure const& s, element z) {
      for (auto const& [name, op] : s.tables) {
        if (!is_absorber(op, z)) {
          return false;
        }
      }
      return true;
    }

    // The ring-side ⋎ enters the ring product with a plus sign, the truss-side
    // one sits in the middle of the bracket; transport negates it.
    inline void negate_curlyvee(split_structure& s, element z) {
      auto& cv = s.tables.at("curlyvee");
      for (element x = 0; x < s.size(); ++x) {
        for (element y = 0; y < s.size(); ++y) {
          cv(x, y) = s.heap(z, cv(x, y), z);
        }
      }
    }
  }  // namespace detail

  // Truss side -> ring side with x + y = [x, z, y]. For dendriform z must be
  // the distinguished zero (defaulted); for tridendriform and NS it must
  // absorb every table.
  inline split_structure truss_side_to_ring_side(split_structure const& s,
                                                 std::optional<element> z = std::nullopt) {
    if (s.side != structure_side::truss) {
      throw invalid_parameters("truss_side_to_ring_side: expects a truss-side structure");
    }
    if (s.kind == structure_kind::di || s.kind == structure_kind::tri) {
      throw invalid_parameters("truss_side_to_ring_side: no ring-side form for "
                               + std::string(to_string(s.kind)));
    }
    detail::require_valid(s, "truss_side_to_ring_side");
    if (!z) {
      z = s.zero;
    }
    if (!z) {
      throw not_an_absorber("truss_side_to_ring_side: no absorber given");
    }
    detail::check_index(*z, s.size(), "truss_side_to_ring_side");
    if (s.kind == structure_kind::dendriform ? *z != *s.zero : !detail::absorbs_all(s, *z)) {
      throw not_an_absorber("truss_side_to_ring_side: element " + std::to_string(*z)
                            + " is not an absorber of the structure");
    }
    split_structure out = s;
    out.side            = structure_side::ring;
    out.zero            = z;
    if (s.kind == structure_kind::ns) {
      detail::negate_curlyvee(out, *z);
    }
    detail::require_valid(out, "truss_side_to_ring_side");
    return out;
  }

  // Ring side -> truss side with [x, y, z] = x - y + z. Dendriform keeps its
  // zero as the distinguished absorber.
  inline split_structure ring_side_to_truss_side(split_structure const& s) {
    if (s.side != structure_side::ring) {
      throw invalid_parameters("ring_side_to_truss_side: expects a ring-side structure");
    }
    detail::require_valid(s, "ring_side_to_truss_side");
    split_structure out = s;
    out.side            = structure_side::truss;
    if (s.kind == structure_kind::ns) {
      detail::negate_curlyvee(out, *s.zero);
    }
    if (s.kind != structure_kind::dendriform) {
      out.zero.reset();
    }
    detail::require_valid(out, "ring_side_to_truss_side");
    return out;
  }

  // x ≻ y = R(x) y, x ≺ y = x R(y) for a Rota-Baxter operator on a ring.
  inline split_structure dendriform_ring_from_rb_ring(finite_ring const& r, endo_map const& f) {
    if (!check_rb_ring(r, f)) {
      throw operator_check_failed("dendriform_ring_from_rb_ring: map is not a Rota-Baxter operator");
    }
    split_structure s;
    s.side           = structure_side::ring;
    s.kind           = structure_kind::dendriform;
    s.heap           = heap_from_group(r.add());
    s.zero           = r.zero();
    s.tables["succ"] = table::generate(r.size(), [&](element x, element y) { return r.times(f(x), y); });
    s.tables["prec"] = table::generate(r.size(), [&](element x, element y) { return r.times(x, f(y)); });
    detail::require_valid(s, "dendriform_ring_from_rb_ring");
    return s;
  }

}  // namespace trusslab
