#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "permcover/error.hpp"
#include "permcover/group_codes.hpp"
#include "permcover/permutation.hpp"

using namespace permcover;

namespace {
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
Permutation random_permutation(int n, std::mt19937_64 &rng) { return Permutation(oracle::random_perm(n, rng)); }
oracle::Perm V(const Permutation &f) { return {f.images().begin(), f.images().end()}; }
} // namespace

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(P({}), ValidationError);
  CHECK_THROWS_AS(P({1, 1, 2}), ValidationError);
  CHECK_THROWS_AS(P({0, 1, 2}), ValidationError);
  CHECK_THROWS_AS(P({1, 2, 4}), ValidationError);
  CHECK(P({3, 1, 2}).degree() == 3);
  CHECK(Permutation::identity(5).is_identity());
}

TEST_CASE("parse one-line and cycle notation") {
  CHECK(Permutation::parse("[2,3,1]") == P({2, 3, 1}));
  CHECK(Permutation::parse(" [ 2, 3 ,1 ] ") == P({2, 3, 1}));
  CHECK(Permutation::parse("(1,2,3)") == P({2, 3, 1}));
  CHECK(Permutation::parse("(1,2,3)(4,5)") == P({2, 3, 1, 5, 4}));
  CHECK(Permutation::parse("(2,3)", 4) == P({1, 3, 2, 4}));
  CHECK(Permutation::parse("()", 3) == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation::parse("[2,2,1]"), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("(1,2)(2,3)"), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("[1,2"), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("(1,5)", 3), ValidationError);
  CHECK_THROWS_AS(Permutation::parse("hello"), ValidationError);
  CHECK(P({4, 1, 3, 2}).to_string() == "[4,1,3,2]");
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_permutation(1 + t % 12, rng);
    CHECK(Permutation::parse(f.to_string()) == f);
  }
}

TEST_CASE("compose examples") {
  CHECK(compose(P({2, 1, 3}), P({3, 2, 1})) == P({3, 1, 2}));
  CHECK(compose(Permutation::identity(4), P({4, 3, 2, 1})) == P({4, 3, 2, 1}));
  CHECK(compose(P({2, 3, 1}), P({2, 3, 1})) == P({3, 1, 2}));
  CHECK_THROWS_AS(compose(P({1, 2}), P({1, 2, 3})), ValidationError);
}

TEST_CASE("inverse examples") {
  CHECK(inverse(P({2, 3, 1})) == P({3, 1, 2}));
  CHECK(inverse(Permutation::identity(6)) == Permutation::identity(6));
  CHECK(inverse(P({4, 3, 2, 1})) == P({4, 3, 2, 1}));
}

TEST_CASE("conjugate examples") {
  const auto g = P({2, 3, 1});
  CHECK(conjugate(Permutation::identity(3), g) == g);
  // relabel (1,2,3) as (h(1),h(2),h(3)) = (2,1,3): 2->1, 1->3, 3->2
  CHECK(conjugate(P({2, 1, 3}), g) == P({3, 1, 2}));
  CHECK(conjugate(P({2, 1, 3}), g) == Permutation::parse("(2,1,3)"));
  CHECK_THROWS_AS(conjugate(P({1, 2}), g), ValidationError);
}

TEST_CASE("compose, inverse and conjugate agree with the oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 10;
    const auto f = random_permutation(n, rng), g = random_permutation(n, rng), h = random_permutation(n, rng);
    CHECK(V(compose(f, g)) == oracle::compose(V(f), V(g)));
    CHECK(V(inverse(f)) == oracle::inverse(V(f)));
    CHECK(compose(f, inverse(f)).is_identity());
    CHECK(V(conjugate(h, g)) == oracle::compose(oracle::compose(V(h), V(g)), oracle::inverse(V(h))));
    CHECK(conjugate(h, conjugate(inverse(h), g)) == g);
    CHECK(conjugate(h, g).cycle_type() == g.cycle_type());
  }
}

TEST_CASE("cycle type") {
  CHECK(P({2, 3, 1, 5, 4}).cycle_type() == std::vector<int>{2, 3});
  CHECK(Permutation::identity(3).cycle_type() == std::vector<int>{1, 1, 1});
}

TEST_CASE("linf distance examples") {
  CHECK(linf_distance(P({1, 2, 3}), P({3, 2, 1})) == 2);
  CHECK(linf_distance(P({2, 3, 1}), P({2, 3, 1})) == 0);
  for (int n = 1; n <= 12; ++n) {
    std::vector<int> rev;
    for (int i = n; i >= 1; --i)
      rev.push_back(i);
    CHECK(linf_distance(Permutation::identity(n), P(rev)) == n - 1);
  }
  CHECK_THROWS_AS(linf_distance(P({1, 2}), P({1, 2, 3})), ValidationError);
}

TEST_CASE("linf distance is a right-invariant metric") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const int n = 1 + t % 10;
    const auto f = random_permutation(n, rng), g = random_permutation(n, rng), h = random_permutation(n, rng);
    const int fg = linf_distance(f, g);
    CHECK(fg == oracle::dist(V(f), V(g)));
    CHECK(fg == linf_distance(g, f));
    CHECK((fg == 0) == (f == g));
    CHECK(linf_distance(f, h) <= fg + linf_distance(g, h));
    CHECK(linf_distance(compose(f, h), compose(g, h)) == fg);
  }
}

TEST_CASE("linf distance is not left-invariant") {
  const auto f = P({1, 2, 3}), g = P({2, 1, 3}), h = P({1, 3, 2});
  // h o f = [1,3,2], h o g = [3,1,2]: distance 2, while d(f,g) = 1
  CHECK(linf_distance(f, g) == 1);
  CHECK(linf_distance(compose(h, f), compose(h, g)) == 2);
}

TEST_CASE("distance to a code") {
  const auto g4 = make_cyclic(4);
  CHECK(distance_to_code(P({2, 3, 4, 1}), g4) == 0);
  CHECK(distance_to_code(P({4, 1, 2, 3}), g4) == 0);
  // rotations [1,2,3,4] [2,3,4,1] [3,4,1,2] [4,1,2,3] against [2,1,4,3]: 1, 3, 2, 2
  CHECK(distance_to_code(P({2, 1, 4, 3}), g4) == 1);
  CHECK(distance_to_code(P({2, 1, 4, 3}), g4) == oracle::dist_to({2, 1, 4, 3}, oracle::elements(g4)));
  CHECK_THROWS_AS(distance_to_code(P({1, 2, 3}), g4), ValidationError);
}

TEST_CASE("r-exposure") {
  std::mt19937_64 rng(3);
  const auto d6 = make_dihedral(6);
  for (int t = 0; t < 200; ++t) {
    const auto f = random_permutation(6, rng);
    CHECK_FALSE(is_r_exposed(f, d6, 5));
    const int d = distance_to_code(f, d6);
    CHECK(is_r_exposed(f, d6, d - 1));
    CHECK_FALSE(is_r_exposed(f, d6, d));
  }
  for (const auto &g : d6.elements())
    CHECK_FALSE(is_r_exposed(g, d6, 0));
}

TEST_CASE("partial placement") {
  PartialPlacement p(5);
  p.assign(2, 5);
  p.assign(4, 1);
  CHECK(p.size() == 2);
  CHECK(p.has_position(2));
  CHECK(p.has_value(1));
  CHECK_FALSE(p.has_value(2));
  CHECK(p.value_at(3) == 0);
  CHECK_THROWS_AS(p.assign(2, 3), ValidationError);
  CHECK_THROWS_AS(p.assign(3, 5), ValidationError);
  CHECK_THROWS_AS(p.assign(6, 2), ValidationError);
  CHECK_THROWS_AS(p.assign(1, 0), ValidationError);
  CHECK(p.unused_values() == std::vector<int>{2, 3, 4});
  const auto f = p.complete();
  CHECK(f == P({2, 5, 3, 1, 4}));
  CHECK(p.extended_by(f));
  CHECK_FALSE(p.extended_by(P({5, 2, 3, 1, 4})));
  const std::vector<int> order{4, 2, 3};
  CHECK(p.complete_with(order) == P({4, 5, 2, 1, 3}));
  const std::vector<int> bad{4, 2, 2};
  CHECK_THROWS_AS(p.complete_with(bad), ValidationError);
  CHECK(p.assignments() == std::vector<std::pair<int, int>>{{2, 5}, {4, 1}});
}
