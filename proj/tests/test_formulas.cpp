#include <doctest.h>

#include "switchquest/formulas.hpp"

using namespace switchquest;

TEST_SUITE("formulas") {

TEST_CASE("log_prime") {
  CHECK(log_prime(2, 3) == 2);
  CHECK(log_prime(2, 1) == 1);
  CHECK(log_prime(3, 4) == 2);
  CHECK(log_prime(3, 3) == 1);
  for (int d = 2; d <= 5; ++d)
    for (int k = 1; k <= 400; ++k) {
      const int i = log_prime(d, k);
      long long lo = 0, p = 1;
      for (int j = 0; j < i; ++j, p *= d) lo += p;
      CHECK(lo <= k);
      CHECK(k < lo + p);
    }
  CHECK_THROWS_AS(log_prime(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(log_prime(2, 0), std::invalid_argument);
}

TEST_CASE("tree_rounds") {
  CHECK(tree_rounds(2, 4, 3) == 2);
  CHECK(tree_rounds(3, 2, 4) == 1);
  CHECK(tree_rounds(2, 0, 5) == 0);
  for (int n = 0; n <= 20; ++n)
    for (int k = 1; k <= 63; ++k) {
      int floor_log = 0;
      while ((1 << (floor_log + 1)) <= k + 1) ++floor_log;
      CHECK(tree_rounds(2, n, k) == ceil_div(n, floor_log));
    }
  CHECK_THROWS_AS(tree_rounds(2, -1, 1), std::invalid_argument);
}

TEST_CASE("pyramid bounds") {
  CHECK(s_of_l(1) == 1);
  CHECK(s_of_l(2) == 3);
  CHECK(s_of_l(3) == 6);
  CHECK(pyramid_lower(5, 2) == 4);
  CHECK(pyramid_lower(4, 3) == 2);
  for (int n = 1; n <= 30; ++n) CHECK(pyramid_lower(n, 1) == n);
  CHECK(pyramid_upper(7, 2) == 4);
  for (int n = 1; n <= 30; ++n) CHECK(pyramid_upper(n, 1) == n);
  CHECK(pyramid_upper(4, 2) == 2);
  CHECK(pyramid_upper(4, 2) == pyramid_lower(4, 3));
  for (int n = 1; n <= 100; ++n)
    for (int l = 1; l <= 5; ++l) {
      CHECK(pyramid_lower(n, s_of_l(l)) <= pyramid_upper(n, l));
      if (l <= 2) CHECK(pyramid_lower(n, s_of_l(l)) == pyramid_upper(n, l));
    }
  CHECK_THROWS_AS(pyramid_lower(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(pyramid_upper(1, 0), std::invalid_argument);
}

TEST_CASE("generalized pyramid bounds") {
  CHECK(gpy_lower(3, 6, 4) == 3);
  CHECK(gpy_lower(2, 4, 3) == 2);
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= 10; ++k) CHECK(gpy_lower(2, n, k) == pyramid_lower(n, k));
  CHECK(gpy_layered_upper(2, 4, 3) == 2);
  CHECK(gpy_layered_upper(2, 4, 3) == gpy_lower(2, 4, 3));
  CHECK(gpy_layered_upper(3, 6, 4) == 3);
  for (int d = 2; d <= 5; ++d)
    for (int n = 1; n <= 20; ++n) {
      CHECK(gpy_layered_upper(d, n, 1) == n);
      for (int k = 1; k <= 20; ++k) {
        CHECK(gpy_lower(d, n, k) <= gpy_layered_upper(d, n, k));
        if ((k - 1) % d == 0) CHECK(gpy_lower(d, n, k) == gpy_layered_upper(d, n, k));
      }
    }
  CHECK_THROWS_AS(gpy_lower(1, 2, 2), std::invalid_argument);
}

TEST_CASE("ratio_bound") {
  for (int k = 1; k <= 10; ++k) {
    CHECK(ratio_bound(1, k) == k);
    CHECK(ratio_bound(k, k) == 1);
  }
  CHECK(ratio_bound(2, 5) == 3);
  CHECK_THROWS_AS(ratio_bound(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(ratio_bound(0, 2), std::invalid_argument);
}

TEST_CASE("catalog and evaluation") {
  const Json doc = evaluate_formula("tree_rounds", {2, 4, 3});
  CHECK(doc["name"] == "tree_rounds");
  CHECK(doc["value"] == 2);
  CHECK(doc["kind"] == "exact");
  CHECK(doc["params"]["d"] == 2);
  CHECK(doc["params"]["n"] == 4);
  CHECK(doc["params"]["k"] == 3);
  CHECK(evaluate_formula("pyramid_lower", {5, 2})["kind"] == "lower");
  CHECK(evaluate_formula("pyramid_upper", {7, 2})["kind"] == "upper");
  CHECK(evaluate_formula("gpy_layered_upper", {3, 6, 4})["value"] == 3);
  for (const auto& info : formula_catalog()) {
    std::vector<int> args(info.params.size(), 2);
    CHECK_NOTHROW(evaluate_formula(info.name, args));
  }
  CHECK_THROWS_AS(evaluate_formula("nope", {1}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_formula("tree_rounds", {2, 4}), std::invalid_argument);
}

}  // TEST_SUITE
