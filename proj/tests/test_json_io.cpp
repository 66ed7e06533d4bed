#include <doctest.h>

#include "permcover/error.hpp"
#include "permcover/json_io.hpp"

using namespace permcover;
using json_io::json;

TEST_CASE("permutations") {
  CHECK(json_io::to_json(Permutation({2, 3, 1})) == "[2,3,1]");
  CHECK(json_io::permutation_from_json("[2,3,1]") == Permutation({2, 3, 1}));
  CHECK(json_io::permutation_from_json(json::array({2, 3, 1})) == Permutation({2, 3, 1}));
  CHECK(json_io::permutation_from_json("(1,2)", 3) == Permutation({2, 1, 3}));
  CHECK_THROWS_AS(json_io::permutation_from_json(5), ValidationError);
  CHECK_THROWS_AS(json_io::permutation_from_json(json::array({1, "x"})), ValidationError);
}

TEST_CASE("descriptors round trip") {
  const std::vector<CodeDescriptor> ds{
      CodeDescriptor::cyclic(7), CodeDescriptor::dihedral(12), CodeDescriptor::product(FactorProfile({5, 3})),
      CodeDescriptor::relabeled(CodeDescriptor::product(FactorProfile({2, 2})), Permutation({4, 1, 3, 2})),
      CodeDescriptor::relabeled(CodeDescriptor::relabeled(CodeDescriptor::dihedral(4), Permutation({2, 1, 3, 4})),
                                Permutation({1, 3, 2, 4}))};
  for (const auto &d : ds)
    CHECK(json_io::descriptor_from_json(json_io::to_json(d)) == d);
  CHECK(json_io::to_json(CodeDescriptor::dihedral(12)).dump() == R"({"kind":"dihedral","n":12})");
  CHECK(json_io::to_json(CodeDescriptor::product(FactorProfile({5, 3}))).dump() == R"({"kind":"product","parts":[5,3]})");
  CHECK(json_io::to_json(ds[3]).dump() ==
        R"({"kind":"relabeled","base":{"kind":"product","parts":[2,2]},"pi":"[4,1,3,2]"})");
}

TEST_CASE("malformed descriptors") {
  CHECK_THROWS_AS(json_io::descriptor_from_json(json::parse(R"({"n":5})")), ValidationError);
  CHECK_THROWS_AS(json_io::descriptor_from_json(json::parse(R"({"kind":"torus","n":5})")), ValidationError);
  CHECK_THROWS_AS(json_io::descriptor_from_json(json::parse(R"({"kind":"dihedral","n":"x"})")), ValidationError);
  CHECK_THROWS_AS(json_io::descriptor_from_json(json::parse(R"({"kind":"product","parts":[2,3]})")), ValidationError);
  CHECK_THROWS_AS(json_io::descriptor_from_json(json::parse(R"({"kind":"dihedral","n":2})")), ValidationError);
  CHECK_THROWS_AS(json_io::code_from_text("{not json"), ValidationError);
}

TEST_CASE("codes from text") {
  CHECK(json_io::code_from_text("D_12").same_elements(make_dihedral(12)));
  CHECK(json_io::code_from_text("G_7").same_elements(make_cyclic(7)));
  CHECK(json_io::code_from_text("G_{5,3}").same_elements(make_product(FactorProfile({5, 3}))));
  CHECK(json_io::code_from_text(R"({"kind":"dihedral","n":6})").same_elements(make_dihedral(6)));
  const auto ex = json_io::code_from_text(R"({"kind":"explicit","n":3,"elements":["[1,2,3]","[2,1,3]"]})");
  CHECK(ex.size() == 2);
  CHECK(json_io::code_from_json(json_io::to_json(ex)).same_elements(ex));
  const auto rel = json_io::code_from_text(
      R"({"kind":"relabeled","base":{"kind":"explicit","n":3,"elements":["[2,3,1]"]},"pi":"[2,1,3]"})");
  CHECK(rel.elements()[0] == Permutation({3, 1, 2}));
  CHECK_THROWS_AS(json_io::code_from_text(R"({"kind":"explicit","n":3,"elements":["[1,2]"]})"), ValidationError);
  CHECK_THROWS_AS(json_io::code_from_text(R"({"kind":"explicit","n":3,"elements":[]})"), ValidationError);
}

TEST_CASE("radius results round trip") {
  const auto r = radius_auto(make_dihedral(9));
  const auto j = json_io::to_json(r);
  CHECK(j["value"] == 5);
  CHECK(j["status"] == "exact-restricted");
  const auto back = json_io::radius_result_from_json(j);
  CHECK(back.value == r.value);
  CHECK(back.status == r.status);
  CHECK(back.witness == r.witness);
  CHECK(back.rtilde == r.rtilde);
  CHECK(back.stats.candidates == r.stats.candidates);
  CHECK(json_io::to_json(back) == j);
  CHECK_THROWS_AS(json_io::radius_result_from_json(json::parse(R"({"value":1,"status":"bogus"})")), ValidationError);
}

TEST_CASE("witness bundles round trip") {
  for (const auto &w : {witness_pq(5, 3), witness_lmax(7, 7), witness_dn(12), witness_dn_refined(30), witness_pq(4, 2)}) {
    const auto j = json_io::to_json(w);
    CHECK(j["report"]["verified"] == true);
    const auto back = json_io::witness_from_json(j);
    CHECK(back.family == w.family);
    CHECK(back.code == w.code);
    CHECK(back.r0 == w.r0);
    CHECK(back.conjugator == w.conjugator);
    CHECK(back.completed == w.completed);
    CHECK(back.placement.assignments() == w.placement.assignments());
    CHECK(back.trace.sequences == w.trace.sequences);
    CHECK(back.trace.params == w.trace.params);
    CHECK(verify_witness(back).verified);
    CHECK(json_io::to_json(back) == j);
  }
}

TEST_CASE("other payloads") {
  const auto b = json_io::to_json(dn_bounds(12));
  CHECK(b.dump() == R"({"lower":8,"upper":8,"exact":8})");
  CHECK(json_io::to_json(dn_bounds(7)).dump() == R"({"lower":3,"upper":4,"exact":null})");
  const auto e = json_io::to_json(explain_exposure(Permutation({6, 5, 4, 3, 2, 1}), make_product(FactorProfile({3, 3})), 2));
  CHECK(e["blocks"].size() == 2);
  CHECK(e["exposed_by_asets"] == e["exposed_direct"]);
  const auto x = json_io::to_json(relabel_extrema(make_cyclic(4)));
  CHECK(x["lmax"] == lmax_cyclic(4));
  CHECK(json_io::to_json(lmin_reduction_check(3, 2))["holds"] == true);
}
