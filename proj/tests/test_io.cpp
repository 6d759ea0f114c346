#include <gtest/gtest.h>

#include <sstream>

#include "catx/io.hpp"

using namespace catx;

namespace {

IndexSet S(std::initializer_list<int> idx) { return IndexSet::from_indices(std::vector<int>(idx)); }

std::string error_of(const std::string& text, bool strict) {
  try {
    read_character(text, strict);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(CharacterJson, RoundTripIsExact) {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    const WeylGroup W(CartanType::parse(name));
    for (IndexSet itheta : W.simple_indices().subsets()) {
      const FormalCharacter theta{"theta", itheta};
      for (IndexSet J : itheta.subsets()) {
        for (const ModuleCharacter& c : {ch_M(W, theta, J), ch_E(W, theta, J), ch_nabla(W, theta, J)}) {
          const std::string text = write_character(W, c);
          const CharacterFile back = read_character(text, true);
          EXPECT_EQ(back.type, W.root_system().cartan_type());
          EXPECT_EQ(back.character, c);
          EXPECT_FALSE(back.canonicalized);
          EXPECT_EQ(write_character(W, back.character), text);
        }
      }
    }
  }
}

TEST(CharacterJson, MixedLabelsCarryPerWeightFields) {
  const WeylGroup W(CartanType::parse("B2"));
  const ModuleCharacter c = ch_E(W, {"theta", S({1})}, S({1})) + ch_E(W, {"lambda", S({})}, S({}));
  const Json j = character_to_json(W, c);
  for (const auto& e : j.at("weights")) {
    EXPECT_TRUE(e.contains("label"));
    EXPECT_TRUE(e.contains("itheta"));
  }
  EXPECT_EQ(read_character(j.dump(), true).character, c);
}

TEST(CharacterJson, Layout) {
  const WeylGroup W(CartanType::parse("A1"));
  const Json j = character_to_json(W, ch_M(W, {"theta", S({1})}, S({})));
  EXPECT_EQ(j.at("type"), "A1");
  EXPECT_EQ(j.at("itheta"), Json::array({1}));
  EXPECT_EQ(j.at("label"), "theta");
  ASSERT_EQ(j.at("weights").size(), 2u);
  EXPECT_EQ(j.at("weights")[0].at("coset_rep"), Json::array());
  EXPECT_EQ(j.at("weights")[0].at("mult"), 1);
}

TEST(CharacterJson, RejectsInvalidFiles) {
  EXPECT_NE(error_of(R"({"type":"A2","itheta":[],"label":"t","weights":[{"coset_rep":[],"v":[],"mult":0}]})", false)
                .find("nonpositive multiplicity"),
            std::string::npos);
  EXPECT_NE(error_of("{not json", false).find("malformed JSON"), std::string::npos);
  EXPECT_NE(error_of(R"({"type":"Z9","itheta":[],"label":"t","weights":[]})", false), "");
  EXPECT_NE(error_of(R"({"type":"A2","itheta":[3],"label":"t","weights":[]})", false), "");
  EXPECT_NE(error_of(R"({"type":"A2","itheta":[2,1],"label":"t","weights":[]})", false), "");
  EXPECT_NE(error_of(R"({"type":"A2","itheta":[],"label":"t","weights":[{"coset_rep":[4],"v":[],"mult":1}]})", false),
            "");
  EXPECT_NE(error_of(R"({"type":"A2","itheta":[],"label":"t"})", false).find("weights"), std::string::npos);
  EXPECT_NE(error_of("[]", false), "");
}

TEST(CharacterJson, StrictRejectsNonMinimalCosetRep) {
  const std::string text =
      R"({"type":"A2","itheta":[1],"label":"t","weights":[{"coset_rep":[1],"v":[],"mult":1}]})";
  EXPECT_NE(error_of(text, true).find("coset_rep"), std::string::npos);
  const CharacterFile f = read_character(text, false);
  EXPECT_TRUE(f.canonicalized);
  ASSERT_EQ(f.character.distinct(), 1u);
  EXPECT_TRUE(f.character.entries().begin()->first.tchar.coset_rep.is_identity());
}

TEST(CharacterJson, RepeatedWeightsAccumulate) {
  const std::string text =
      R"({"type":"A1","itheta":[],"label":"t","weights":[{"coset_rep":[],"v":[1],"mult":2},{"coset_rep":[],"v":[1,1,1],"mult":3}]})";
  const CharacterFile f = read_character(text, true);
  EXPECT_EQ(f.character.distinct(), 1u);
  EXPECT_EQ(f.character.total(), 5);
}

TEST(ModuleJson, RoundTrip) {
  const IncidenceAlgebra A = build_incidence_algebra(2);
  for (const AlgebraModule& m :
       {regular_module(A), interval_module(2, S({}), S({1})), AlgebraModule::zero(2),
        direct_sum({interval_module(2, S({1}), S({1, 2})), interval_module(2, S({}), S({2}))})}) {
    const Json j = module_to_json(m);
    const AlgebraModule back = module_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.dim_vector(), m.dim_vector());
    EXPECT_EQ(back.maps(), m.maps());
  }
}

TEST(ModuleJson, AcceptsFractionsAndRejectsNonsense) {
  const Json ok = Json::parse(R"({"n":1,"dims":{"[]":1,"[1]":1},"maps":{"[]->[1]":[["1/2"]]}})");
  EXPECT_EQ(module_from_json(ok).action(S({}), S({1}))(0, 0), Rational(1, 2));

  for (const char* bad : {
           R"({"n":1,"dims":{"[]":1,"[1]":1},"maps":{"[1]->[]":[[1]]}})",
           R"({"n":1,"dims":{"[]":1,"[1]":1},"maps":{"[]->[1]":[[1,2]]}})",
           R"({"n":1,"dims":{"[]":1,"[1]":1},"maps":{"[]->[1]":[["x"]]}})",
           R"({"n":1,"dims":{"[]":1,"[1]":1},"maps":{"[]->[1]":[[1]],"[ ]->[1]":[[1]]}})",
           R"({"n":1,"dims":{"[2]":1}})",
           R"({"n":1,"dims":{"[]":-1}})",
           R"({"n":11,"dims":{}})",
           R"({"dims":{}})",
       }) {
    EXPECT_THROW(module_from_json(Json::parse(bad)), InputError) << bad;
  }
}

TEST(Csv, QuotesFieldsWhenNeeded) {
  std::ostringstream out;
  write_csv(out, {"a", "b"}, {{"1", "x,y"}, {"say \"hi\"", ""}});
  EXPECT_EQ(out.str(), "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",\n");
}

TEST(Csv, CartanMatrixAndMultiplicities) {
  std::ostringstream cartan;
  cartan_csv(cartan, build_root_system(CartanType::parse("B2")));
  EXPECT_EQ(cartan.str(), ",a1,a2\na1,2,-1\na2,-2,2\n");

  const WeylGroup W(CartanType::parse("A1"));
  std::ostringstream mult;
  multiplicity_csv(mult, W, ch_M(W, {"theta", S({})}, S({})));
  EXPECT_EQ(mult.str(), "label,itheta,coset_rep,v,mult\ntheta,[],,,1\ntheta,[],1,1,1\n");
}
