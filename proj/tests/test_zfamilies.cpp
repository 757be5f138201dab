#include <catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include <trusslab/zfamilies.hpp>

using namespace trusslab;

namespace {

  // All (a, b, c) with 3 <= a <= amax, 2 <= b <= a - 1, c >= 1, a c = b (b - 1).
  std::vector<std::vector<std::int64_t>> f42_grid(std::int64_t amax) {
    std::vector<std::vector<std::int64_t>> out;
    for (std::int64_t a = 3; a <= amax; ++a) {
      for (std::int64_t b = 2; b <= a - 1; ++b) {
        if ((b * (b - 1)) % a == 0) {
          out.push_back({a, b, b * (b - 1) / a});
        }
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("parameter constraints", "[zfamilies]") {
  CHECK_NOTHROW(ztruss(zfamily::f42, {6, 3, 1}));
  CHECK_THROWS_AS(ztruss(zfamily::f42, {4, 2, 1}), invalid_parameters);
  CHECK_THROWS_AS(ztruss(zfamily::f42, {2, 1, 0}), invalid_parameters);
  CHECK_THROWS_AS(ztruss(zfamily::f40a, {1}), invalid_parameters);
  CHECK_THROWS_AS(ztruss(zfamily::f40a, {-2}), invalid_parameters);
  CHECK_NOTHROW(ztruss(zfamily::f40a, {0}));
  CHECK_NOTHROW(ztruss(zfamily::f40b, {1}));
  CHECK_THROWS_AS(ztruss(zfamily::f41a, {0}), invalid_parameters);
  CHECK_THROWS_AS(ztruss(zfamily::f41b, {}), invalid_parameters);
  CHECK_THROWS_AS(ztruss(zfamily::proj_left, {1}), invalid_parameters);
  CHECK(parse_zfamily("projR") == zfamily::proj_right);
  CHECK_THROWS_AS(parse_zfamily("f43"), invalid_parameters);
}

TEST_CASE("products", "[zfamilies]") {
  ztruss const f40a(zfamily::f40a, {2});
  CHECK(f40a.mul<std::int64_t>(3, -5) == -30);
  ztruss const f42(zfamily::f42, {6, 3, 1});
  CHECK(f42.mul<std::int64_t>(1, 2) == 6 * 2 + 3 * 3 + 1);
  CHECK(ztruss(zfamily::proj_left, {}).mul<std::int64_t>(4, 9) == 4);
  CHECK(ztruss(zfamily::proj_right, {}).mul<std::int64_t>(4, 9) == 9);
}

TEST_CASE("legal f42 parameters up to a = 10", "[zfamilies]") {
  CHECK(f42_grid(10) == std::vector<std::vector<std::int64_t>>{{6, 3, 1}, {6, 4, 2}, {10, 5, 2}, {10, 6, 3}});
}

TEST_CASE("every family passes the window check at W = 25", "[zfamilies]") {
  std::vector<ztruss> sample{ztruss(zfamily::proj_left, {}), ztruss(zfamily::proj_right, {})};
  for (std::int64_t a : {0, 2, 3}) {
    sample.emplace_back(zfamily::f40a, std::vector<std::int64_t>{a});
    sample.emplace_back(zfamily::f40b, std::vector<std::int64_t>{a});
  }
  for (std::int64_t c : {1, 2, 3}) {
    sample.emplace_back(zfamily::f41a, std::vector<std::int64_t>{c});
    sample.emplace_back(zfamily::f41b, std::vector<std::int64_t>{c});
  }
  for (auto const& p : f42_grid(10)) {
    sample.emplace_back(zfamily::f42, p);
  }
  for (auto const& z : sample) {
    INFO(to_string(z.family()));
    auto const r = verify_window(z, 25);
    CHECK(r.ok());
    CHECK(r.checked == 51u * 51u * 51u);
    CHECK_FALSE(r.widened);
  }
}

TEST_CASE("products outside the families fail", "[zfamilies]") {
  // The f42 formula with a c != b (b - 1) is not associative.
  std::int64_t const a = 4, b = 2, c = 1;
  auto mul = [&](std::int64_t m, std::int64_t n) { return a * m * n + b * (m + n) + c; };
  bool failed = false;
  for (std::int64_t m = -2; m <= 2 && !failed; ++m) {
    for (std::int64_t n = -2; n <= 2 && !failed; ++n) {
      for (std::int64_t p = -2; p <= 2 && !failed; ++p) {
        failed = mul(mul(m, n), p) != mul(m, mul(n, p));
      }
    }
  }
  CHECK(failed);
}

TEST_CASE("constant c is a two-sided absorber of f41a", "[zfamilies]") {
  for (std::int64_t c : {1, 2, 3, 17}) {
    ztruss const z(zfamily::f41a, {c});
    for (std::int64_t w : {1, 5, 25}) {
      for (std::int64_t m = -w; m <= w; ++m) {
        CHECK(z.mul<std::int64_t>(m, c) == c);
        CHECK(z.mul<std::int64_t>(c, m) == c);
      }
    }
  }
}

TEST_CASE("int64 overflow falls back to big integers", "[zfamilies]") {
  ztruss const z(zfamily::f40a, {std::int64_t{1} << 40});
  auto const   r = verify_window(z, 3);
  CHECK(r.widened);
  CHECK(r.ok());
}

TEST_CASE("constant-product Rota-Baxter operator", "[zfamilies]") {
  for (std::int64_t a : {-2, 0, 3}) {
    auto const r = zrb_constant_product(a, 20);
    INFO(a);
    CHECK(r.ok());
    CHECK(r.checked == 41u * 41u);
  }
  CHECK_THROWS_AS(zrb_constant_product(30, 20), invalid_parameters);
  CHECK_THROWS_AS(verify_window(ztruss(zfamily::proj_left, {}), 0), invalid_parameters);
}
