#include <gtest/gtest.h>

#include <json.hpp>

#include "cubicmcm/error.hpp"
#include "cubicmcm/mf_document.hpp"

using namespace cubicmcm;
using nlohmann::json;

namespace {

MfDocument koszul_doc(const Field& field, std::int64_t psi) {
  const HesseCubic c = hesse(Scalar(field, psi));
  MatrixFactorization mf = koszul_hesse(c);
  mf.A.set_grading(infer_pair_grading(mf));
  return make_document(mf, c.psi, "koszul");
}

ErrorKind decode_kind(const std::string& text, bool verify = true) {
  try {
    decode_mf(text, verify);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalError;
}

}  // namespace

TEST(Document, RoundTrip) {
  for (const Field& field : {Field::rational(), Field::prime(7)}) {
    const MfDocument doc = koszul_doc(field, 3);
    const std::string text = encode_mf(doc);
    const MfDocument back = decode_mf(text);
    EXPECT_EQ(back.field, field);
    EXPECT_EQ(back.variables, (std::vector<std::string>{"x0", "x1", "x2"}));
    EXPECT_EQ(back.psi, doc.psi);
    EXPECT_EQ(back.note, doc.note);
    EXPECT_EQ(back.mf.f, doc.mf.f);
    EXPECT_EQ(back.mf.A, doc.mf.A);
    EXPECT_EQ(back.mf.B, doc.mf.B);
    EXPECT_EQ(back.mf.A.grading(), doc.mf.A.grading());
    // canonical: encoding is a fixed point
    EXPECT_EQ(encode_mf(back), text);
  }
}

TEST(Document, CanonicalLayout) {
  const std::string text = encode_mf(koszul_doc(Field::rational(), 0));
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  const json j = json::parse(text);
  EXPECT_EQ(j["format"], "cubicmcm-mf/1");
  EXPECT_EQ(j["field"], "rational");
  EXPECT_EQ(j["grading"]["rows"], json({0, 0, 0, 1}));
  EXPECT_EQ(j["grading"]["cols"], json({1, 2, 2, 2}));
  EXPECT_EQ(j["f"][0]["coefficient"], "1/1");
  EXPECT_EQ(j["f"][0]["exponents"], json({3, 0, 0}));
  // keys appear sorted
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_LT(text.find("\"A\""), text.find("\"B\""));
  EXPECT_LT(text.find("\"B\""), text.find("\"f\""));
}

TEST(Document, SyntaxErrorsCarryPosition) {
  try {
    decode_mf("{\n  \"format\": \"cubicmcm-mf/1\",\n  \"field\" \"rational\"\n}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    // the column of the last character read: the closing quote of "rational"
    EXPECT_EQ(e.column(), 20u);
  }
  try {
    decode_mf("[1, 2,");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(Document, SemanticErrors) {
  const json base = json::parse(encode_mf(koszul_doc(Field::rational(), 0)));
  auto with = [&](auto edit) {
    json j = base;
    edit(j);
    return j.dump();
  };
  EXPECT_EQ(decode_kind(with([](json& j) { j["format"] = "other/2"; })), ErrorKind::ParseError);
  EXPECT_EQ(decode_kind(with([](json& j) { j.erase("A"); })), ErrorKind::ParseError);
  EXPECT_EQ(decode_kind(with([](json& j) { j["extra"] = 1; })), ErrorKind::ParseError);
  EXPECT_EQ(decode_kind(with([](json& j) { j["field"] = "prime:9"; })), ErrorKind::ParseError);
  EXPECT_EQ(decode_kind(with([](json& j) { j["A"][0].erase(0); })), ErrorKind::ParseError);
  EXPECT_EQ(decode_kind(with([](json& j) { j["f"][0]["coefficient"] = "0/1"; })), ErrorKind::ParseError);
  EXPECT_EQ(decode_kind(with([](json& j) { j["f"].push_back(j["f"][0]); })), ErrorKind::ParseError);
  EXPECT_EQ(decode_kind(with([](json& j) { j["f"][0]["exponents"] = {3, 0}; })), ErrorKind::ParseError);
  EXPECT_EQ(decode_kind(with([](json& j) { j["grading"]["rows"] = {0, 0, 0}; })), ErrorKind::ParseError);
  try {
    decode_mf(with([](json& j) { j["f"][0]["coefficient"] = "x"; }));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("/f/0/coefficient"), std::string::npos);
  }
}

TEST(Document, VerificationFailures) {
  const json base = json::parse(encode_mf(koszul_doc(Field::rational(), 0)));
  json bad_entry = base;
  bad_entry["A"][0][0] = json::array({{{"coefficient", "2/1"}, {"exponents", {1, 0, 0}}}});
  EXPECT_EQ(decode_kind(bad_entry.dump()), ErrorKind::VerificationFailed);
  // without verification the pair loads
  EXPECT_NO_THROW(decode_mf(bad_entry.dump(), false));

  json bad_psi = base;
  bad_psi["psi"] = "5/1";
  EXPECT_EQ(decode_kind(bad_psi.dump()), ErrorKind::VerificationFailed);

  json bad_grading = base;
  bad_grading["grading"]["rows"] = {0, 0, 0, 0};
  EXPECT_EQ(decode_kind(bad_grading.dump(), false), ErrorKind::VerificationFailed);
}

TEST(Document, OptionalFieldsAbsent) {
  const HesseCubic c = hesse(Scalar(Field::prime(11), 3));
  const MfDocument doc = make_document(skyscraper_mf(c, point_search(c, false).front()));
  const std::string text = encode_mf(doc);
  const json j = json::parse(text);
  EXPECT_FALSE(j.contains("psi"));
  EXPECT_FALSE(j.contains("note"));
  EXPECT_FALSE(j.contains("grading"));
  const MfDocument back = decode_mf(text);
  EXPECT_EQ(back.mf.A, doc.mf.A);
  EXPECT_FALSE(back.psi.has_value());
}
