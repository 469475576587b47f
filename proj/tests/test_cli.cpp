#include "lensform/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace lensform;
using cli::Json;

TEST(Cli, DocumentShape) {
  const Json doc = cli::cmd_spectrum(make_lens(5, {1, 2}), 4);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "results", "version"}));
  EXPECT_EQ(doc["version"], "0.1.0");
  EXPECT_EQ(doc["results"]["rows"].size(), 5u);
  EXPECT_EQ(doc["results"]["rows"][4], Json::array({4, 24, 5}));
}

TEST(Cli, JsonRoundTrip) {
  for (const Json& doc : {cli::cmd_spectrum(make_lens(11, {1, 2, 3}), 8),
                          cli::cmd_isospectral(make_lens(11, {1, 2, 3}), make_lens(11, {1, 2, 4})),
                          cli::cmd_invariants(make_lens(7, {1, 3}), 10), cli::cmd_toric(make_lens(7, {1, 2}), 3),
                          cli::cmd_oracle(make_lens(5, {1, 2}), 4), cli::cmd_search(11, 3).document}) {
    const std::string text = cli::render(doc, "json");
    EXPECT_EQ(Json::parse(text), doc);
    EXPECT_EQ(cli::render(Json::parse(text), "json"), text);
  }
}

TEST(Cli, IsospectralFields) {
  const Json iso = cli::cmd_isospectral(make_lens(11, {1, 2, 3}), make_lens(11, {1, 2, 4}))["results"];
  EXPECT_EQ(iso["verdict"], "Isospectral");
  EXPECT_TRUE(iso["witness"].is_null());
  EXPECT_EQ(iso["isometric"], false);
  EXPECT_FALSE(iso["certificate"].is_null());

  const Json non = cli::cmd_isospectral(make_lens(5, {1, 1}), make_lens(5, {1, 2}))["results"];
  EXPECT_EQ(non["verdict"], "NotIsospectral");
  EXPECT_EQ(non["witness"]["k"], 2);
  EXPECT_EQ(non["stanley_agrees_with_verdict"], false);

  const Json same = cli::cmd_isospectral(make_lens(7, {1, 3}), make_lens(7, {2, 6}))["results"];
  EXPECT_EQ(same["isometric"], true);
  EXPECT_EQ(same["isometry"]["t"], 2);
}

TEST(Cli, ToricAndOracle) {
  const Json t = cli::cmd_toric(make_lens(7, {1, 2}), 2)["results"];
  EXPECT_EQ(t["degree"], 112);
  EXPECT_EQ(t["fundamental_volume"], 7);
  const Json o = cli::cmd_oracle(make_lens(5, {1, 2}), 4)["results"];
  EXPECT_EQ(o["dimension"], 5);
  EXPECT_EQ(o["agree"], true);
}

TEST(Cli, InvariantsSphere) {
  const Json inv = cli::cmd_invariants(make_lens(1, {1, 1}), 6)["results"];
  EXPECT_EQ(inv["verify_series"]["first_ball_mismatch"], 1);
  EXPECT_TRUE(inv["verify_series"]["first_simplex_mismatch"].is_null());
  EXPECT_EQ(inv["s"], 1);
  EXPECT_THROW(cli::cmd_invariants(make_lens(7, {1, 3}), 3), cli::UsageError);
}

TEST(Cli, Guards) {
  EXPECT_THROW(cli::parse_literal("12:2,3"), cli::UsageError);
  EXPECT_THROW(cli::parse_literal("7:"), cli::UsageError);
  EXPECT_THROW(cli::parse_literal("x"), cli::UsageError);
  EXPECT_THROW(cli::cmd_spectrum(make_lens(501, {1, 2}), 5), cli::UsageError);
  EXPECT_THROW(cli::cmd_spectrum(make_lens(7, {1, 2, 3, 4, 5}), 5), cli::UsageError);
  EXPECT_THROW(cli::cmd_spectrum(make_lens(7, {1, 2}), 71), cli::UsageError);
  EXPECT_THROW(cli::cmd_spectrum(make_lens(7, {1}), 5), cli::UsageError);
  cli::Limits unsafe;
  unsafe.unsafe = true;
  EXPECT_NO_THROW(cli::cmd_spectrum(make_lens(7, {1, 2}), 71, unsafe));
  EXPECT_THROW(cli::cmd_search(0, 2), cli::UsageError);
  EXPECT_THROW(cli::cmd_search(5, 1), cli::UsageError);
  EXPECT_THROW(cli::cmd_oracle(make_lens(1, {1, 1, 1, 1}), 40), cli::UsageError);
}

TEST(Cli, SearchCsv) {
  const auto res = cli::cmd_search(11, 3);
  std::istringstream in(res.csv);
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, "bucket_id,q,n,p_canonical,shell_vector_prefix");
  std::vector<std::string> rows;
  while (std::getline(in, row)) rows.push_back(row);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.rfind("0,11,3,", 0), 0u);
    const std::string prefix = r.substr(r.rfind(',') + 1);
    EXPECT_EQ(std::count(prefix.begin(), prefix.end(), ';'), 21);  // 2q values
  }
  EXPECT_EQ(cli::render(res.document, "csv").substr(0, 10), "key,value\n");
}

TEST(Cli, Renderers) {
  const Json doc = cli::cmd_oracle(make_lens(5, {1, 2}), 2);
  EXPECT_NE(cli::render(doc, "plain").find("\ndimension: "), std::string::npos);
  EXPECT_THROW(cli::render(doc, "xml"), cli::UsageError);
}

TEST(Cli, WriteReport) {
  const auto dir = std::filesystem::temp_directory_path() / "lensform_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "report.csv";
  cli::write_report(path.string(), "a,b\n");
  std::ifstream f(path);
  std::string text((std::istreambuf_iterator<char>(f)), {});
  EXPECT_EQ(text, "a,b\n");
  EXPECT_THROW(cli::write_report((dir / "missing" / "r.csv").string(), "x"), cli::OutputError);
  std::filesystem::remove_all(dir);
}
