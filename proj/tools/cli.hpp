// Subcommand front end. Results go to `out` as JSON, usage problems to `err`.
// Exit codes: 0 valid / done, 1 violation report emitted, 2 usage error.

#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <trusslab/trusslab.hpp>

namespace trusslab::cli {

  inline constexpr int exit_ok        = 0;
  inline constexpr int exit_violation = 1;
  inline constexpr int exit_usage     = 2;

  // TRUSSLAB_SIZE_CAP raises or lowers the carrier-size cap of the product
  // constructions.
  inline limits limits_from_environment() {
    limits lim;
    if (char const* cap = std::getenv("TRUSSLAB_SIZE_CAP")) {
      try {
        std::size_t pos   = 0;
        auto const  value = std::stoul(cap, &pos);
        if (pos == std::string(cap).size() && value > 0) {
          lim.truss_size = value;
        }
      } catch (std::exception const&) {
        // ignored: an unusable value leaves the default
      }
    }
    return lim;
  }

  inline std::vector<element> parse_list(std::string const& s) {
    std::vector<element> out;
    std::stringstream    in(s);
    std::string          item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t pos = 0;
        long const  v   = std::stol(item, &pos);
        if (pos != item.size() || v < 0) {
          throw std::invalid_argument(item);
        }
        out.push_back(static_cast<element>(v));
      } catch (std::exception const&) {
        throw invalid_parameters("expected a comma-separated list of element indices, got '" + s + "'");
      }
    }
    return out;
  }

  inline std::vector<std::int64_t> parse_int_list(std::string const& s) {
    std::vector<std::int64_t> out;
    std::stringstream         in(s);
    std::string               item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t pos = 0;
        auto const  v   = std::stoll(item, &pos);
        if (pos != item.size()) {
          throw std::invalid_argument(item);
        }
        out.push_back(v);
      } catch (std::exception const&) {
        throw invalid_parameters("expected a comma-separated list of integers, got '" + s + "'");
      }
    }
    return out;
  }

  inline void emit(std::ostream& out, json const& j) { out << j.dump(2) << '\n'; }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  inline int cmd_verify(std::string const& path, std::ostream& out) {
    auto const doc = truss_document_from_json(read_json_file(path));
    finite_heap h;
    try {
      h = heap_from_group(doc.add);
    } catch (not_a_group const& e) {
      emit(out, {{"valid", false}, {"total", 1}, {"violations", {{{"law", "heap"}, {"args", json::array()}}}},
                 {"error", e.what()}});
      return exit_violation;
    }
    auto const report = validate_truss(h, doc.mul);
    emit(out, to_json(report, doc.labels));
    return report.ok() ? exit_ok : exit_violation;
  }

  inline int cmd_census(std::optional<std::size_t> size, std::optional<std::string> const& heap_path,
                        limits const& lim, std::ostream& out) {
    finite_heap const h = heap_path ? heap_from_json(read_json_file(*heap_path)) : cyclic_heap(*size);
    emit(out, to_json(census(h, lim)));
    return exit_ok;
  }

  inline int cmd_ops(std::string const& path, std::string const& kind, bool naive, limits const& lim,
                     std::ostream& out) {
    auto const t  = truss_from_json(read_json_file(path));
    auto const k  = parse_operator_kind(kind);
    auto const ops = naive ? naive_search_operators(t, k, lim) : search_operators(t, k, lim);
    json list = json::array();
    for (auto const& f : ops) {
      list.push_back(to_json(f));
    }
    emit(out, {{"kind", to_string(detail::resolve(t, k))}, {"count", ops.size()}, {"operators", list}});
    return exit_ok;
  }

  inline int cmd_check(std::string const& path, std::string const& kind, std::string const& map,
                       std::ostream& out) {
    auto const t      = truss_from_json(read_json_file(path));
    auto const k      = parse_operator_kind(kind);
    auto const report = check_operator(t, endo_map(parse_list(map)), k);
    emit(out, to_json(report));
    return report.ok ? exit_ok : exit_violation;
  }

  inline int cmd_derive(std::string const& path, std::string const& kind, std::string const& map,
                        std::ostream& out) {
    auto const t = truss_from_json(read_json_file(path));
    auto const k = parse_operator_kind(kind);
    endo_map const f(parse_list(map));
    detail::check_map(t, f, "derive");
    auto const report = check_operator(t, f, k);
    if (!report.ok) {
      emit(out, {{"operator", to_json(report)}});
      return exit_violation;
    }
    json j = json::object();
    switch (k.tag) {
      case operator_tag::rb0:
      case operator_tag::rb_weighted:
      case operator_tag::rb1:
      case operator_tag::reynolds:
      case operator_tag::nijenhuis:
        j["derived"] = to_json(derive_truss(t, f, k));
        break;
      default:
        j["derived"] = nullptr;
    }
    switch (k.tag) {
      case operator_tag::rb0:
      case operator_tag::rb_weighted:
      case operator_tag::rb1:
      case operator_tag::reynolds:
      case operator_tag::nijenhuis:
      case operator_tag::avg:
      case operator_tag::avg_hom:
        j["split"] = to_json(split_from_operator(t, f, k));
        break;
      default:
        j["split"] = nullptr;
    }
    emit(out, j);
    return exit_ok;
  }

  inline int cmd_validate(std::string const& path, std::optional<std::string> const& kind,
                          std::ostream& out) {
    auto const s = structure_from_json(read_json_file(path));
    if (kind && parse_structure_kind(*kind) != s.kind) {
      throw invalid_parameters("file holds a " + std::string(to_string(s.kind)) + " structure, not "
                               + *kind);
    }
    auto const report = validate_structure(s);
    emit(out, to_json(report));
    return report.ok() ? exit_ok : exit_violation;
  }

  inline int cmd_iso(std::string const& a, std::string const& b, std::ostream& out) {
    auto const t1 = truss_from_json(read_json_file(a));
    auto const t2 = truss_from_json(read_json_file(b));
    auto const f  = isomorphism(t1, t2);
    emit(out, {{"isomorphic", f.has_value()}, {"bijection", f ? to_json(*f) : json("none")}});
    return exit_ok;
  }

  inline int cmd_zverify(std::optional<std::string> const& family, std::string const& params,
                         std::optional<std::int64_t> rb_constant, std::int64_t window, std::ostream& out) {
    if (rb_constant) {
      auto const r = zrb_constant_product(*rb_constant, window);
      auto       j = to_json(r);
      j["check"]   = "rb0 of R(m) = 2m - a on m n = a";
      j["a"]       = *rb_constant;
      emit(out, j);
      return r.ok() ? exit_ok : exit_violation;
    }
    if (!family) {
      throw invalid_parameters("zverify needs --family or --rb-constant");
    }
    ztruss const z(parse_zfamily(*family), params.empty() ? std::vector<std::int64_t>{} : parse_int_list(params));
    auto const   r = verify_window(z, window);
    auto         j = to_json(r);
    j["family"]    = to_string(z.family());
    j["params"]    = z.params();
    emit(out, j);
    return r.ok() ? exit_ok : exit_violation;
  }

  // Replays the headline computations on the two-element heap and the Klein
  // table.
  inline int cmd_demo(std::ostream& out) {
    json checks = json::array();
    bool all    = true;
    auto record = [&](std::string name, bool pass, json detail = nullptr) {
      all = all && pass;
      checks.push_back({{"name", std::move(name)}, {"pass", pass}, {"detail", std::move(detail)}});
    };

    auto const report = census(fixtures::z2_heap());
    bool       reps   = report.classes.size() == 5;
    if (reps) {
      for (std::size_t i = 0; i < 5; ++i) {
        std::size_t const expected[5] = {1, 3, 4, 5, 2};
        reps = reps && report.classes[i].canonical.mul == fixtures::z2_table(expected[i]);
      }
    }
    record("z2 census: 8 products in 5 classes (1)-(5)", report.total_products == 8 && reps,
           {{"total_products", report.total_products}, {"classes", report.classes.size()}});

    auto const t3  = fixtures::z2_truss(3);
    auto const rb0 = search_operators(t3, operator_kind::rb0());
    record("table (3): zero map is the only rb0 operator",
           rb0.size() == 1 && rb0[0] == endo_map::constant(2, 0), {{"count", rb0.size()}});

    auto const swap = fixtures::swap2();
    record("table (3): swap is a weight-1 Rota-Baxter operator",
           check_operator(t3, swap, operator_kind::rb1()).ok);

    auto const split = split_from_operator(t3, swap, operator_kind::rb1());
    record("tridendriform split from the swap",
           split.op("vee") == fixtures::tridendriform_vee() && split.op("succ") == fixtures::tridendriform_succ()
               && split.op("prec") == fixtures::tridendriform_prec(),
           to_json(split));

    auto const klein = validate_truss(finite_heap(fixtures::klein_add(), finite_heap::trusted),
                                      fixtures::klein_mul_sum());
    std::vector<std::string> labels(fixtures::klein_labels.begin(), fixtures::klein_labels.end());
    record("Klein table: right distributivity fails", klein.count("right_distributivity") > 0,
           to_json(klein, labels)["violations"][0]);

    emit(out, {{"checks", checks}, {"all_pass", all}});
    return all ? exit_ok : exit_violation;
  }

  ////////////////////////////////////////////////////////////////////////
  // Entry point
  ////////////////////////////////////////////////////////////////////////

  inline int run(int argc, char const* const* argv, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr) {
    CLI::App app{"Finite trusses: validation, operator search, split structures and census", "trusslab"};
    app.require_subcommand(1);

    std::string in;
    std::string kind;
    std::string map;
    bool        naive = false;

    auto* verify = app.add_subcommand("verify", "Check the truss axioms of a table file");
    verify->add_option("--in", in, "Truss JSON file")->required();

    std::optional<std::size_t> size;
    std::optional<std::string> heap_path;
    auto* census_cmd = app.add_subcommand("census", "Classify all truss products on a heap");
    auto* size_opt   = census_cmd->add_option("--size", size, "Cyclic heap of this order")->check(CLI::PositiveNumber);
    auto* heap_opt   = census_cmd->add_option("--heap", heap_path, "Heap JSON file");
    size_opt->excludes(heap_opt);
    heap_opt->excludes(size_opt);

    auto* ops = app.add_subcommand("ops", "List the operators of a kind on a truss");
    ops->add_option("--kind", kind, "rb0|rbw:a|rb1|der|mder|rey|nij|avgl|avgr|avg|avgh")->required();
    ops->add_option("--in", in, "Truss JSON file")->required();
    ops->add_flag("--naive", naive, "Filter all n^n maps instead of the heap morphisms");

    auto* check = app.add_subcommand("check", "Check one map against an operator identity");
    check->add_option("--kind", kind, "Operator kind")->required();
    check->add_option("--map", map, "Images of 0..n-1, comma separated")->required();
    check->add_option("--in", in, "Truss JSON file")->required();

    auto* derive = app.add_subcommand("derive", "Derived product and splitting induced by an operator");
    derive->add_option("--kind", kind, "Operator kind")->required();
    derive->add_option("--map", map, "Images of 0..n-1, comma separated")->required();
    derive->add_option("--in", in, "Truss JSON file")->required();

    std::optional<std::string> structure_kind_name;
    auto* validate = app.add_subcommand("validate", "Check the axioms of a split structure file");
    validate->add_option("--in", in, "Structure JSON file")->required();
    validate->add_option("--kind", structure_kind_name, "Expected kind");

    std::string a_path;
    std::string b_path;
    auto* iso = app.add_subcommand("iso", "Search for a truss isomorphism");
    iso->add_option("--a", a_path, "First truss JSON file")->required();
    iso->add_option("--b", b_path, "Second truss JSON file")->required();

    std::optional<std::string>  family;
    std::string                 params;
    std::optional<std::int64_t> rb_constant;
    std::int64_t                window = 25;
    auto* zverify = app.add_subcommand("zverify", "Window check of an integer truss family");
    auto* family_opt = zverify->add_option("--family", family, "projL|projR|f40a|f40b|f41a|f41b|f42");
    zverify->add_option("--params", params, "Comma-separated parameters");
    auto* rb_opt = zverify->add_option("--rb-constant", rb_constant,
                                       "Check R(m) = 2m - a on the constant product a instead");
    zverify->add_option("--window", window, "Arguments range over [-W, W]")->check(CLI::PositiveNumber);
    family_opt->excludes(rb_opt);
    rb_opt->excludes(family_opt);

    auto* demo = app.add_subcommand("demo", "Replay the headline computations");

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "trusslab: " << e.what() << '\n';
      return exit_usage;
    }

    try {
      limits const lim = limits_from_environment();
      if (verify->parsed()) {
        return cmd_verify(in, out);
      }
      if (census_cmd->parsed()) {
        if (!size && !heap_path) {
          throw invalid_parameters("census needs --size or --heap");
        }
        return cmd_census(size, heap_path, lim, out);
      }
      if (ops->parsed()) {
        return cmd_ops(in, kind, naive, lim, out);
      }
      if (check->parsed()) {
        return cmd_check(in, kind, map, out);
      }
      if (derive->parsed()) {
        return cmd_derive(in, kind, map, out);
      }
      if (validate->parsed()) {
        return cmd_validate(in, structure_kind_name, out);
      }
      if (iso->parsed()) {
        return cmd_iso(a_path, b_path, out);
      }
      if (zverify->parsed()) {
        return cmd_zverify(family, params, rb_constant, window, out);
      }
      if (demo->parsed()) {
        return cmd_demo(out);
      }
    } catch (error const& e) {
      err << "trusslab: " << e.what() << '\n';
      return exit_usage;
    } catch (json::exception const& e) {
      err << "trusslab: " << e.what() << '\n';
      return exit_usage;
    }
    return exit_usage;
  }

}  // namespace trusslab::cli
