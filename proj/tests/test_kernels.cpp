#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permcover/closed_forms.hpp"
#include "permcover/error.hpp"
#include "permcover/kernels.hpp"

using namespace permcover;
using namespace permcover::kernels;

namespace {

std::vector<GroupCode> small_codes() {
  std::vector<GroupCode> codes;
  for (int n = 3; n <= 8; ++n) {
    codes.push_back(make_cyclic(n));
    codes.push_back(make_dihedral(n));
  }
  for (const auto &parts : std::vector<std::vector<int>>{{3, 3}, {4, 2}, {5, 3}, {2, 2, 2}, {4, 4}, {3, 2, 2}})
    codes.push_back(make_product(FactorProfile(parts)));
  codes.push_back(relabel(make_product(FactorProfile({4, 3})), Permutation({3, 7, 1, 5, 2, 6, 4})));
  codes.push_back(relabel(make_dihedral(8), Permutation({2, 5, 8, 1, 3, 7, 4, 6})));
  return codes;
}

} // namespace

TEST_CASE("code table") {
  const auto code = make_dihedral(5);
  const auto t = CodeTable::from(code);
  CHECK(t.n == 5);
  CHECK(t.size == 10);
  for (int g = 0; g < t.size; ++g)
    for (int i = 0; i < 5; ++i)
      CHECK(t.row(g)[static_cast<std::size_t>(i)] == code.elements()[static_cast<std::size_t>(g)](i + 1));
}

TEST_CASE("placement order alternates extremes") {
  CHECK(placement_order(10, 7) == std::vector<int>{1, 10, 2, 9});
  CHECK(placement_order(20, 15) == std::vector<int>{1, 20, 2, 19, 3, 18, 4, 17});
  CHECK(placement_order(5, 3) == std::vector<int>{1, 5});
}

TEST_CASE("brute force kernels agree with the oracle and with each other") {
  for (const auto &code : small_codes()) {
    const auto t = CodeTable::from(code);
    const auto serial = covering_radius_serial(t);
    const int expected = oracle::radius_naive(oracle::elements(code));
    CHECK(serial.value == expected);
    CHECK(oracle::dist_to(serial.witness, oracle::elements(code)) == expected);
    for (int threads : {1, 2, 3, 8}) {
      const auto omp = covering_radius_omp(t, threads);
      CHECK(omp.value == serial.value);
      CHECK(omp.witness == serial.witness);
    }
  }
}

TEST_CASE("brute force witness is the lexicographically first maximizer") {
  const auto code = make_dihedral(6);
  const auto elems = oracle::elements(code);
  const int r = oracle::radius_naive(elems);
  auto f = oracle::identity(6);
  oracle::Perm first;
  do
    if (oracle::dist_to(f, elems) == r) {
      first = f;
      break;
    }
  while (std::next_permutation(f.begin(), f.end()));
  CHECK(covering_radius_omp(CodeTable::from(code), 4).witness == first);
}

TEST_CASE("restricted kernels agree for every admissible rtilde") {
  for (const auto &code : small_codes()) {
    const int n = code.degree();
    const auto t = CodeTable::from(code);
    for (int rt = (n - 3) / 2 + 1; rt <= n - 2; ++rt) {
      if (2 * rt <= n - 3)
        continue;
      const auto serial = restricted_serial(t, rt);
      CHECK(oracle::dist_to(serial.witness, oracle::elements(code)) == serial.value);
      for (int threads : {1, 2, 5}) {
        const auto omp = restricted_omp(t, rt, threads);
        CAPTURE(code.descriptor().to_string());
        CAPTURE(rt);
        CHECK(omp.value == serial.value);
        CHECK(omp.witness == serial.witness);
        CHECK(omp.exposed == serial.exposed);
      }
    }
  }
}

TEST_CASE("restricted kernels agree on larger dihedral codes") {
  for (int n = 9; n <= 12; ++n) {
    const auto t = CodeTable::from(make_dihedral(n));
    for (int rt : {dn_bounds(n).lower, dn_bounds(n).upper, n - 2}) {
      const auto serial = restricted_serial(t, rt);
      const auto omp = restricted_omp(t, rt, 3);
      CAPTURE(n);
      CAPTURE(rt);
      CHECK(omp.value == serial.value);
      CHECK(omp.witness == serial.witness);
    }
  }
}

TEST_CASE("restricted kernels reject overlapping or empty windows") {
  const auto t = CodeTable::from(make_dihedral(10));
  CHECK_THROWS_AS(restricted_serial(t, 3), ValidationError);
  CHECK_THROWS_AS(restricted_omp(t, 3, 2), ValidationError);
  CHECK_THROWS_AS(restricted_serial(t, 9), ValidationError);
  CHECK_THROWS_AS(restricted_omp(t, 9, 2), ValidationError);
}

TEST_CASE("representatives use the deterministic completion") {
  const int n = 9, rt = 6;
  const auto out = restricted_serial(CodeTable::from(make_dihedral(n)), rt);
  // middle values [n-rt, rt+1] appear in increasing order
  std::vector<int> middle;
  for (int v : out.witness)
    if (v >= n - rt && v <= rt + 1)
      middle.push_back(v);
  CHECK(std::is_sorted(middle.begin(), middle.end()));
  CHECK(middle.size() == static_cast<std::size_t>(2 * rt + 2 - n));
}
