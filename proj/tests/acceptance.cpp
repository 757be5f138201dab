// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a
// criterion fails that is not listed in `known_failures`.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <trusslab/trusslab.hpp>

using namespace trusslab;
namespace fx = trusslab::fixtures;

namespace {

  struct outcome {
    bool        pass;
    std::string detail;
  };

  struct process_result {
    int         status;
    std::string out;
  };

  process_result run_cli(std::string const& args) {
    std::string const cmd  = std::string(TRUSSLAB_CLI) + " " + args + " 2>/dev/null";
    FILE*             pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      return {-1, ""};
    }
    std::string             out;
    std::array<char, 4096>  buf{};
    std::size_t             got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      out.append(buf.data(), got);
    }
    int const status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::string data(std::string const& name) { return std::string(TRUSSLAB_DATA) + "/" + name; }

  std::vector<fx::corpus_entry> corpus() {
    auto out = fx::truss_classes(3);
    for (auto& e : fx::size4_constructions()) {
      out.push_back(std::move(e));
    }
    return out;
  }

  std::vector<finite_truss> all_trusses(std::size_t max_n) {
    std::vector<finite_truss> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (auto const& h : heaps_of_order(n)) {
        for (auto const& mul : enumerate_truss_products(h)) {
          out.emplace_back(h, mul, finite_truss::trusted);
        }
      }
    }
    return out;
  }

  std::size_t naive_product_count(finite_heap const& h) {
    std::size_t const    n = h.size();
    std::vector<element> c(n * n, 0);
    std::size_t          count = 0;
    while (true) {
      table const t(n, c);
      bool        ok = true;
      for (element a = 0; a < n && ok; ++a) {
        for (element b = 0; b < n && ok; ++b) {
          for (element d = 0; d < n && ok; ++d) {
            ok = t(t(a, b), d) == t(a, t(b, d));
            for (element x = 0; x < n && ok; ++x) {
              ok = t(x, h(a, b, d)) == h(t(x, a), t(x, b), t(x, d))
                   && t(h(a, b, d), x) == h(t(a, x), t(b, x), t(d, x));
            }
          }
        }
      }
      count += ok ? 1 : 0;
      std::size_t i = c.size();
      while (i > 0 && ++c[i - 1] == n) {
        c[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        break;
      }
    }
    return count;
  }

  outcome ac1() {
    auto const r = run_cli("census --size 2");
    if (r.status != 0) {
      return {false, "census exited with " + std::to_string(r.status)};
    }
    auto const j       = json::parse(r.out);
    bool       pass    = j["total_products"] == 8 && j["classes"].size() == 5;
    std::size_t const named[5] = {1, 3, 4, 5, 2};
    for (std::size_t i = 0; pass && i < 5; ++i) {
      pass = j["classes"][i]["canonical"]["mul"] == fx::z2_table(named[i]).rows();
    }
    // (6), (7), (8) sit in the classes of (2), (3), (1).
    auto same_class = [&](std::size_t a, std::size_t b) {
      return canonical_form(fx::z2_truss(a)) == canonical_form(fx::z2_truss(b));
    };
    pass = pass && same_class(6, 2) && same_class(7, 3) && same_class(8, 1);
    std::size_t const oracle = naive_product_count(fx::z2_heap());
    pass                     = pass && oracle == 8;
    return {pass, "products " + j["total_products"].dump() + " (oracle " + std::to_string(oracle) + "), classes "
                      + std::to_string(j["classes"].size())};
  }

  outcome ac2() {
    auto const ops = search_operators(fx::z2_truss(3), operator_kind::rb0(0));
    return {ops.size() == 1 && ops[0] == endo_map::constant(2, 0),
            std::to_string(ops.size()) + " operator(s)"};
  }

  outcome ac3() {
    auto const t     = fx::z2_truss(3);
    bool const rb1   = check_operator(t, fx::swap2(), operator_kind::rb1()).ok;
    auto const split = split_from_operator(t, fx::swap2(), operator_kind::rb_weighted(1));
    bool const tables = split.op("vee") == fx::tridendriform_vee() && split.op("succ") == fx::tridendriform_succ()
                        && split.op("prec") == fx::tridendriform_prec();
    return {rb1 && tables, std::string("swap rb1 ") + (rb1 ? "ok" : "fails") + ", tables "
                               + (tables ? "match" : "differ")};
  }

  outcome ac4() {
    std::size_t ops = 0;
    std::array<std::size_t, 5> bad{};
    std::size_t                nij_ns = 0;
    std::size_t                nij    = 0;
    for (auto const& [name, t] : corpus()) {
      std::vector<operator_kind> kinds;
      if (auto z = absorber(t)) {
        kinds.push_back(operator_kind::rb0(*z));
      }
      for (element a : center(t)) {
        kinds.push_back(operator_kind::rb_weighted(a));
      }
      for (auto k : {operator_kind::rb1(), operator_kind::reynolds(), operator_kind::nijenhuis(),
                     operator_kind::avg(), operator_kind::avg_hom()}) {
        kinds.push_back(k);
      }
      for (auto const& k : kinds) {
        bool const derivable = k.tag != operator_tag::avg && k.tag != operator_tag::avg_hom;
        for (auto const& f : search_operators(t, k)) {
          ++ops;
          std::optional<finite_truss> derived;
          if (derivable) {
            derived = derive_truss(t, f, k);
            bad[0] += validate_truss(derived->heap(), derived->mul()).ok() ? 0 : 1;
            bad[3] += is_truss_morphism(*derived, t, f) ? 0 : 1;
          }
          try {
            auto const s = split_from_operator(t, f, k);
            if (derived && !(subadjacent(s) == *derived)) {
              ++bad[2];
            }
          } catch (invalid_structure const&) {
            ++bad[1];
            if (k.tag == operator_tag::nijenhuis) {
              ++nij_ns;
            }
          }
          nij += k.tag == operator_tag::nijenhuis ? 1 : 0;
        }
        if (auto z = absorber(t); z && k.tag == operator_tag::rb0) {
          for (auto const& r : search_operators(t, k)) {
            auto const np = nijenhuis_from_rb0(t, r, *z);
            bad[4] += check_operator(np.product, np.op, operator_kind::nijenhuis()).ok ? 0 : 1;
          }
        }
      }
    }
    std::ostringstream d;
    d << ops << " operators; failures a=" << bad[0] << " b=" << bad[1] << " (nijenhuis NS4: " << nij_ns << " of "
      << nij << ") c=" << bad[2] << " d=" << bad[3] << " e=" << bad[4];
    bool const pass = bad[0] + bad[1] + bad[2] + bad[3] + bad[4] == 0;
    return {pass, d.str()};
  }

  outcome ac5() {
    std::size_t checks = 0;
    std::size_t diffs  = 0;
    for (auto const& t : all_trusses(3)) {
      std::vector<operator_kind> kinds{operator_kind::avg_left(), operator_kind::avg_right()};
      if (auto z = absorber(t)) {
        kinds.push_back(operator_kind::rb0(*z));
      }
      for (element a : center(t)) {
        kinds.push_back(operator_kind::rb_weighted(a));
      }
      for (auto const& f : all_maps(t.size())) {
        for (auto const& k : kinds) {
          ++checks;
          diffs += graph_characterization(t, f, k) == check_operator(t, f, k).ok ? 0 : 1;
        }
      }
    }
    return {diffs == 0, std::to_string(checks) + " verdicts, " + std::to_string(diffs) + " disagreements"};
  }

  outcome ac6() {
    std::size_t checks = 0;
    std::size_t diffs  = 0;
    for (auto const& [name, t] : corpus()) {
      auto const z = absorber(t);
      if (!z) {
        continue;
      }
      for (auto const& d : all_maps(t.size())) {
        if (!d.is_bijective()) {
          continue;
        }
        auto const inv = d.inverse();
        checks += 2;
        diffs += check_operator(t, d, operator_kind::derivation(*z)).ok
                         == check_operator(t, inv, operator_kind::rb0(*z)).ok
                     ? 0
                     : 1;
        diffs += check_operator(t, d, operator_kind::modified_derivation()).ok
                         == check_operator(t, inv, operator_kind::reynolds()).ok
                     ? 0
                     : 1;
      }
    }
    return {diffs == 0 && checks > 0,
            std::to_string(checks) + " equivalences, " + std::to_string(diffs) + " mismatches"};
  }

  outcome ac7() {
    std::size_t checks = 0;
    std::size_t bad    = 0;
    for (auto const& [name, t] : corpus()) {
      auto const z = absorber(t);
      if (!z) {
        continue;
      }
      auto const ring = ring_from_truss(t, *z);
      checks += 2;
      bad += truss_from_ring(ring) == t ? 0 : 1;
      bad += ring_from_truss(truss_from_ring(ring), ring.zero()) == ring ? 0 : 1;
      for (auto const& f : search_operators(t, operator_kind::rb0(*z))) {
        auto const truss_side = split_from_operator(t, f, operator_kind::rb0(*z));
        auto const ring_side  = dendriform_ring_from_rb_ring(ring, f);
        checks += 3;
        bad += truss_side_to_ring_side(truss_side) == ring_side ? 0 : 1;
        bad += ring_side_to_truss_side(ring_side) == truss_side ? 0 : 1;
        bad += subadjacent_ring(ring_side) == ring_from_truss(subadjacent(truss_side), *z) ? 0 : 1;
      }
    }
    return {bad == 0 && checks > 0, std::to_string(checks) + " round trips, " + std::to_string(bad) + " mismatches"};
  }

  outcome ac8() {
    auto const r = run_cli("verify --in " + data("klein_v4.json"));
    if (r.status != 1) {
      return {false, "verify exited with " + std::to_string(r.status)};
    }
    auto const  j     = json::parse(r.out);
    std::size_t right = 0;
    bool        named = false;
    for (auto const& v : j["violations"]) {
      if (v["law"] == "right_distributivity") {
        ++right;
        named = named || v["labeled"] == std::vector<std::string>{"a", "0", "b", "a+b"};
      }
    }
    return {right > 0 && named, std::to_string(right) + " right-distributivity witness(es) listed, exit 1"};
  }

  outcome ac9() {
    std::size_t families = 0;
    bool        pass     = true;
    auto run             = [&](zfamily f, std::vector<std::int64_t> p) {
      ++families;
      pass = pass && verify_window(ztruss(f, std::move(p)), 25).ok();
    };
    run(zfamily::proj_left, {});
    run(zfamily::proj_right, {});
    for (std::int64_t a : {0, 2, 3}) {
      run(zfamily::f40a, {a});
      run(zfamily::f40b, {a});
    }
    for (std::int64_t c : {1, 2, 3}) {
      run(zfamily::f41a, {c});
      run(zfamily::f41b, {c});
    }
    for (std::int64_t a = 3; a <= 10; ++a) {
      for (std::int64_t b = 2; b <= a - 1; ++b) {
        if (b * (b - 1) % a == 0) {
          run(zfamily::f42, {a, b, b * (b - 1) / a});
        }
      }
    }
    for (std::int64_t a : {-2, 0, 3}) {
      pass = pass && zrb_constant_product(a, 20).ok();
    }
    return {pass, std::to_string(families) + " families at W=25, 3 Rota-Baxter checks at W=20"};
  }

  outcome ac10() {
    auto const ops = search_operators(fx::z2_truss(3), operator_kind::reynolds());
    std::vector<endo_map> const expected{endo_map::constant(2, 0), endo_map::identity(2), endo_map::constant(2, 1)};
    return {ops == expected, std::to_string(ops.size()) + " operator(s)"};
  }

  struct criterion {
    std::string              id;
    std::string              title;
    double                   seconds;
    std::function<outcome()> run;
  };

}  // namespace

int main() {
  // The Nijenhuis-to-NS splitting fails NS4 on valid Nijenhuis operators.
  std::set<std::string> const known_failures{"AC4"};

  std::vector<criterion> const criteria{
      {"AC1", "Z2 census: 8 products, 5 classes equal to (1)-(5)", 1.0, ac1},
      {"AC2", "rb0 on table (3) is only the zero map", 1.0, ac2},
      {"AC3", "swap is rb1 on table (3); tridendriform tables", 1.0, ac3},
      {"AC4", "theorem suite over the corpus", 60.0, ac4},
      {"AC5", "graph verdicts equal direct verdicts", 60.0, ac5},
      {"AC6", "derivation/rb0 and modified derivation/Reynolds duality", 60.0, ac6},
      {"AC7", "functor and dendriform round trips", 60.0, ac7},
      {"AC8", "Klein table right-distributivity witness", 10.0, ac8},
      {"AC9", "integer families and constant-product operator", 10.0, ac9},
      {"AC10", "Reynolds operators on table (3)", 1.0, ac10},
  };

  int unexpected = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.seconds) {
      o.pass = false;
      o.detail += "; over time limit";
    }
    bool const known = !o.pass && known_failures.count(c.id) != 0;
    std::printf("%s %-4s %s: %s [%.3fs]%s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                o.detail.c_str(), secs, known ? " (known failure)" : "");
    if (!o.pass && !known) {
      ++unexpected;
    }
  }
  return unexpected == 0 ? 0 : 1;
}
