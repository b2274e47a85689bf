#include <doctest.h>

#include <memory>
#include <random>

#include <nlohmann/json.hpp>

#include "eqsplit/error.hpp"
#include "eqsplit/serialize.hpp"
#include "eqsplit/verify.hpp"

using namespace eqsplit;
using nlohmann::json;

namespace {

ContextPtr context(const char* name) {
  return RepContext::build(std::make_shared<const FiniteGroup>(FiniteGroup::builtin(name)));
}

RepSequence rep(const ContextPtr& ctx, const std::string& text) {
  return RepSequence::parse(ctx->table(), text);
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("LaTeX rendering") {
    const auto c2 = context("C2");
    const auto d = split_cp_abelian(*c2, rep(c2, "triv,sign"));
    CHECK(decomposition_latex(decomposition_to_json(*c2, d)) == "S^{0} \\vee S^{\\sigma}");
    const auto s3 = context("S3");
    const auto g = split_cp_general(*s3, rep(s3, "triv,std"));
    CHECK(decomposition_latex(decomposition_to_json(*s3, g)) ==
          "S^{0} \\vee \\mathrm{Th}(\\mathbb{C}\\otimes \\gamma_{\\mathrm{std}})");
    CHECK(latex_label("triv") == "\\mathbb{C}");
    CHECK(latex_label("chi2") == "\\chi_{2}");
    CHECK(latex_label("rho1") == "\\rho_{1}");
  }

  TEST_CASE("decomposition JSON layout") {
    const auto c2 = context("C2");
    const auto j = decomposition_to_json(*c2, split_cp_abelian(*c2, rep(c2, "triv,triv,sign")));
    CHECK(j.at("group") == "C2");
    CHECK(j.at("target") == "cp");
    CHECK(j.at("method") == "abelian");
    CHECK(j.at("rep") == json{"triv", "triv", "sign"});
    REQUIRE(j.at("summands").size() == 3);
    CHECK(j["summands"][0].at("kind") == "sphere");
    CHECK(j["summands"][2].at("rep") == json{{"sign", 2}});
    CHECK(decomposition_text(j).find("S^0") != std::string::npos);
  }

  TEST_CASE("decomposition JSON round trip") {
    std::mt19937 rng(61);
    for (const char* name : {"C2", "C4", "S3", "D4", "A4", "S4"}) {
      CAPTURE(name);
      const auto ctx = context(name);
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> blocks;
        long dim = 0;
        while (dim < 5) {
          const int b = static_cast<int>(rng() % static_cast<unsigned>(ctx->table()->size()));
          blocks.push_back(b);
          dim += ctx->table()->dimension(b);
        }
        const RepSequence v(ctx->table(), blocks);
        std::vector<WedgeDecomposition> ds{split_cp_general(*ctx, v),
                                           split_gr_recursive(*ctx, 2, v)};
        if (ctx->all_linear(v)) {
          ds.push_back(split_cp_abelian(*ctx, v));
          ds.push_back(split_gr_abelian(*ctx, 3, v));
        }
        for (const auto& d : ds) {
          const auto j = decomposition_to_json(*ctx, d);
          CHECK(decomposition_from_json(*ctx, j) == d);
          // Through text as well.
          CHECK(decomposition_from_json(*ctx, json::parse(j.dump())) == d);
        }
      }
    }
  }

  TEST_CASE("inconsistent decompositions are rejected") {
    const auto s3 = context("S3");
    const auto j = decomposition_to_json(*s3, split_cp_general(*s3, rep(s3, "triv,std")));
    auto wrong_kind = j;
    wrong_kind["summands"][1]["kind"] = "sphere";
    CHECK_THROWS_AS(decomposition_from_json(*s3, wrong_kind), InputError);
    auto wrong_label = j;
    wrong_label["rep"][1] = "bogus";
    CHECK_THROWS_AS(decomposition_from_json(*s3, wrong_label), InputError);
    auto wrong_group = j;
    wrong_group["group"] = "C2";
    CHECK_THROWS_AS(decomposition_from_json(*s3, wrong_group), InputError);
    CHECK_THROWS_AS(decomposition_from_json(*s3, json::object()), InputError);
  }

  TEST_CASE("report JSON") {
    const auto s3 = context("S3");
    const auto r = verify_cp(*s3, rep(s3, "triv,std"), Mode::General);
    const auto j = report_to_json(r);
    CHECK(j.at("pass") == true);
    CHECK(j.at("group") == "S3");
    REQUIRE(j.at("records").size() == 4);
    for (const auto& rec : j["records"]) {
      CHECK(rec.at("splitting") == rec.at("direct"));
      CHECK(rec.at("equal") == true);
    }
    CHECK(!j.contains("seconds"));
    CHECK(report_to_json(r, true).contains("seconds"));
    const auto text = report_text(j);
    CHECK(text.find("PASS") != std::string::npos);
  }

  TEST_CASE("sweep JSON and JUnit") {
    SweepConfig cfg;
    cfg.groups = {"A4"};
    cfg.max_dim = 3;
    cfg.mode = Mode::General;
    cfg.twist = Twist::Tensor;
    const auto r = sweep(cfg);
    REQUIRE(r.failed > 0);
    const auto j = sweep_to_json(r);
    CHECK(j.at("failed") == r.failed);
    CHECK(j.at("total") == r.total);
    CHECK(j.at("reports").size() == r.failed);
    const auto xml = junit_xml(r);
    CHECK(xml.rfind("<?xml", 0) == 0);
    CHECK(xml.find("<testsuite") != std::string::npos);
    CHECK(xml.find("<failure") != std::string::npos);
  }
}
