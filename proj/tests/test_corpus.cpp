#include <gtest/gtest.h>

#include "tfc/checks.hpp"

using namespace tfc;

namespace tfc {
void PrintTo(const GeneratorSpec& g, std::ostream* os) { *os << spec_label(g); }
}  // namespace tfc

TEST(Spec, ParseAndLabel) {
  for (const std::string s : {"oriental:3", "cube:2", "globe:1", "theta:[[],[]]", "boundary:oriental:4"})
    EXPECT_EQ(spec_label(parse_spec(s)), s);
  EXPECT_THROW(parse_spec("oriental"), InputError);
  EXPECT_THROW(parse_spec("oriental:x"), InputError);
  EXPECT_THROW(parse_spec("oriental:-1"), InputError);
  EXPECT_THROW(parse_spec("simplex:2"), InputError);
  EXPECT_THROW(parse_spec("theta:[[]"), InputError);
}

TEST(Spec, JsonRoundTrip) {
  for (const auto& g : default_corpus()) EXPECT_EQ(spec_from_json(spec_to_json(g)), g);
  EXPECT_THROW(spec_from_json(json::parse(R"({"kind":"cube"})")), InputError);
  EXPECT_THROW(spec_from_json(json::parse(R"({"kind":"cube","n":2,"size":3})")), InputError);
}

TEST(Corpus, CoversTheRequiredFamilies) {
  auto specs = default_corpus();
  auto has = [&](const std::string& label) {
    return std::any_of(specs.begin(), specs.end(), [&](const GeneratorSpec& g) { return spec_label(g) == label; });
  };
  for (const auto& t : theta_terms(6, 3)) EXPECT_TRUE(has("theta:" + to_string(t)));
  for (int n = 0; n <= 4; ++n) EXPECT_TRUE(has("oriental:" + std::to_string(n)));
  for (int n = 0; n <= 3; ++n) EXPECT_TRUE(has("cube:" + std::to_string(n)));
  EXPECT_TRUE(has("boundary:oriental:4"));
  EXPECT_TRUE(has("boundary:cube:3"));
  EXPECT_FALSE(has("boundary:oriental:0"));
}

TEST(Corpus, ManifestMatchesEnumeration) {
  auto checked_in = load_manifest(TFC_CORPUS_MANIFEST);
  EXPECT_EQ(checked_in, default_corpus());
}

TEST(Corpus, EveryEntryIsValid) {
  for (const auto& g : default_corpus()) EXPECT_TRUE(validate(build(g)).valid) << spec_label(g);
}

TEST(Targets, Resolution) {
  auto one = resolve_targets("oriental:2", TFC_CORPUS_MANIFEST);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].label, "oriental:2");
  EXPECT_EQ(resolve_targets("corpus", TFC_CORPUS_MANIFEST).size(), default_corpus().size());
  EXPECT_THROW(resolve_targets("corpus", "/nonexistent.json"), InputError);
}

TEST(Checks, PreorderChecksPass) {
  CheckOptions opt;
  EXPECT_TRUE(check_disc_sphere(opt).ok());
  opt.max_carrier = 3;
  EXPECT_TRUE(check_iso_sd(opt).ok());
  EXPECT_TRUE(check_dc_contract(opt).ok());
  opt.d = 1;
  EXPECT_TRUE(check_disc_sphere(opt).ok());
  opt.d = 9;
  EXPECT_THROW(check_disc_sphere(opt), InputError);
}

TEST(Checks, BudgetAndBadCellAreReported) {
  std::vector<Target> ts{{"oriental:3", oriental(3)}};
  CheckOptions opt;
  opt.max_cells = 5;
  EXPECT_EQ(check_thm_a(ts, opt).verdict, Verdict::budget);
  CheckOptions bad;
  bad.cell = R"({"n":0})";
  EXPECT_EQ(check_thm_a(ts, bad).verdict, Verdict::error);
  CheckOptions big;
  big.cell = "big";
  auto r = check_exists_min(ts, big);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.details["atom_cells"], 1);
}

TEST(Checks, NamedDispatch) {
  std::vector<Target> ts{{"theta:[[],[],[]]", term_to_complex(parse_term("[[],[],[]]"))}};
  for (const auto& name : check_names()) {
    CheckOptions opt;
    opt.max_carrier = 3;
    auto r = run_check(name, ts, opt);
    EXPECT_TRUE(r.ok()) << name << " " << r.details.dump();
    EXPECT_EQ(r.name, name);
    EXPECT_FALSE(r.claim.empty());
  }
  EXPECT_THROW(run_check("nope", ts, {}), InputError);
}
