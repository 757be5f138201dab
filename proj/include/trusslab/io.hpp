// JSON reading and writing for heaps, trusses, rings, split structures and
// the various reports. Tables are row-major arrays of arrays.

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "classify.hpp"
#include "core.hpp"
#include "heap.hpp"
#include "operators.hpp"
#include "structures.hpp"
#include "truss.hpp"
#include "zfamilies.hpp"

namespace trusslab {

  using json = nlohmann::json;

  class parse_error : public error {
   public:
    using error::error;
  };

  ////////////////////////////////////////////////////////////////////////
  // Reading
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw parse_error(std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    inline std::size_t read_size(json const& j) {
      auto const& s = field(j, "size");
      if (!s.is_number_integer() || s.get<std::int64_t>() < 1) {
        throw parse_error("'size' must be a positive integer");
      }
      return s.get<std::size_t>();
    }

    inline table read_table(json const& j, std::size_t n, std::string const& name) {
      if (!j.is_array() || j.size() != n) {
        throw parse_error("'" + name + "' must have " + std::to_string(n) + " rows");
      }
      std::vector<element> cells;
      cells.reserve(n * n);
      for (auto const& row : j) {
        if (!row.is_array() || row.size() != n) {
          throw parse_error("'" + name + "' rows must have length " + std::to_string(n));
        }
        for (auto const& v : row) {
          if (!v.is_number_integer() || v.get<std::int64_t>() < 0
              || v.get<std::int64_t>() >= static_cast<std::int64_t>(n)) {
            throw parse_error("'" + name + "' entries must lie in 0.." + std::to_string(n - 1));
          }
          cells.push_back(v.get<element>());
        }
      }
      return table(n, std::move(cells));
    }

    inline std::optional<element> read_optional_element(json const& j, char const* key, std::size_t n) {
      if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
      }
      auto const& v = j.at(key);
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0
          || v.get<std::int64_t>() >= static_cast<std::int64_t>(n)) {
        throw parse_error(std::string("'") + key + "' must be an element index");
      }
      return v.get<element>();
    }
  }  // namespace detail

  inline json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw parse_error("cannot open '" + path + "'");
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw parse_error("'" + path + "': " + e.what());
    }
  }

  inline table read_add_table(json const& j) {
    return detail::read_table(detail::field(j, "add"), detail::read_size(j), "add");
  }

  inline finite_heap heap_from_json(json const& j) { return heap_from_group(read_add_table(j)); }

  // A truss file as written, before any validation.
  struct truss_document {
    table                                   add;
    table                                   mul;
    std::optional<std::vector<std::string>> labels;

    [[nodiscard]] std::size_t size() const noexcept { return add.size(); }

    [[nodiscard]] std::string label(element x) const {
      return labels ? (*labels)[x] : std::to_string(x);
    }
  };

  inline truss_document truss_document_from_json(json const& j) {
    auto const     n = detail::read_size(j);
    truss_document d{detail::read_table(detail::field(j, "add"), n, "add"),
                     detail::read_table(detail::field(j, "mul"), n, "mul"), std::nullopt};
    if (j.contains("labels") && !j.at("labels").is_null()) {
      auto const& l = j.at("labels");
      if (!l.is_array() || l.size() != n) {
        throw parse_error("'labels' must list " + std::to_string(n) + " strings");
      }
      std::vector<std::string> labels;
      for (auto const& s : l) {
        if (!s.is_string()) {
          throw parse_error("'labels' must list strings");
        }
        labels.push_back(s.get<std::string>());
      }
      d.labels = std::move(labels);
    }
    return d;
  }

  // Validating read; add must be an abelian group table (any identity).
  inline finite_truss truss_from_json(json const& j) {
    auto d = truss_document_from_json(j);
    return finite_truss(heap_from_group(d.add), d.mul);
  }

  inline finite_ring ring_from_json(json const& j) {
    auto const n = detail::read_size(j);
    return finite_ring(detail::read_table(detail::field(j, "add"), n, "add"),
                       detail::read_table(detail::field(j, "mul"), n, "mul"));
  }

  inline split_structure structure_from_json(json const& j) {
    auto const      n = detail::read_size(j);
    split_structure s;
    s.side = parse_structure_side(detail::field(j, "side").get<std::string>());
    s.kind = parse_structure_kind(detail::field(j, "kind").get<std::string>());
    s.heap = heap_from_group(detail::read_table(detail::field(j, "add"), n, "add"));
    s.zero = detail::read_optional_element(j, "zero", n);
    auto const& tables = detail::field(j, "tables");
    if (!tables.is_object()) {
      throw parse_error("'tables' must be an object");
    }
    for (auto const& [name, t] : tables.items()) {
      s.tables.emplace(name, detail::read_table(t, n, name));
    }
    return s;
  }

  inline endo_map map_from_json(json const& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) {
      throw parse_error("map must list " + std::to_string(n) + " images");
    }
    std::vector<element> img;
    for (auto const& v : j) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0
          || v.get<std::int64_t>() >= static_cast<std::int64_t>(n)) {
        throw parse_error("map images must lie in 0.." + std::to_string(n - 1));
      }
      img.push_back(v.get<element>());
    }
    return endo_map(std::move(img));
  }

  ////////////////////////////////////////////////////////////////////////
  // Writing
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(table const& t) { return t.rows(); }

  inline json to_json(endo_map const& f) { return f.image; }

  inline json to_json(finite_heap const& h) { return {{"size", h.size()}, {"add", to_json(h.add())}}; }

  inline json to_json(finite_truss const& t) {
    return {{"size", t.size()}, {"add", to_json(t.heap().add())}, {"mul", to_json(t.mul())}};
  }

  inline json to_json(finite_ring const& r) {
    return {{"size", r.size()}, {"add", to_json(r.add())}, {"mul", to_json(r.mul())}};
  }

  inline json to_json(split_structure const& s) {
    json tables = json::object();
    for (auto const& [name, t] : s.tables) {
      tables[name] = to_json(t);
    }
    json j{{"side", to_string(s.side)},
           {"kind", to_string(s.kind)},
           {"size", s.size()},
           {"add", to_json(s.heap.add())},
           {"tables", tables}};
    j["zero"] = s.zero ? json(*s.zero) : json(nullptr);
    return j;
  }

  // Witness arguments are rendered through `labels` when given.
  inline json to_json(validation_report const& r,
                      std::optional<std::vector<std::string>> const& labels = std::nullopt) {
    json list = json::array();
    for (auto const& v : r.violations) {
      json item{{"law", v.law}, {"args", v.args}};
      if (labels) {
        std::vector<std::string> named;
        for (element a : v.args) {
          named.push_back(a < labels->size() ? (*labels)[a] : std::to_string(a));
        }
        item["labeled"] = named;
      }
      list.push_back(std::move(item));
    }
    return {{"valid", r.ok()}, {"total", r.total}, {"violations", list}};
  }

  inline json to_json(check_report const& r) {
    return {{"ok", r.ok}, {"reason", to_string(r.reason)}, {"witness", r.witness}};
  }

  inline json to_json(canonical_truss const& c) {
    return {{"size", c.add.size()}, {"add", to_json(c.add)}, {"mul", to_json(c.mul)}};
  }

  inline json to_json(census_report const& r) {
    json classes = json::array();
    for (auto const& c : r.classes) {
      json inventory = json::object();
      for (auto const& [kind, count] : c.inventory) {
        inventory[kind] = count;
      }
      json members = json::array();
      for (auto const& m : c.members) {
        members.push_back(to_json(m));
      }
      classes.push_back({{"canonical", to_json(c.canonical)},
                         {"class_size", c.size()},
                         {"members", members},
                         {"inventory", inventory}});
    }
    return {{"heap", to_json(r.heap)}, {"total_products", r.total_products}, {"classes", classes}};
  }

  inline json to_json(zwindow_report const& r) {
    json list = json::array();
    for (auto const& v : r.violations) {
      list.push_back({{"law", v.law}, {"args", v.args}});
    }
    return {{"valid", r.ok()},
            {"window", r.window},
            {"checked", r.checked},
            {"total", r.total},
            {"violations", list},
            {"note", "window scan: evidence on [-W, W], not a proof"}};
  }

}  // namespace trusslab
