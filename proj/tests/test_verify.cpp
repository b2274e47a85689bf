#include <doctest.h>

#include <algorithm>
#include <memory>

#include "eqsplit/error.hpp"
#include "eqsplit/verify.hpp"
#include "oracle.hpp"

using namespace eqsplit;

namespace {

ContextPtr context(const char* name) {
  return RepContext::build(std::make_shared<const FiniteGroup>(FiniteGroup::builtin(name)));
}

RepSequence rep(const ContextPtr& ctx, const std::string& text) {
  return RepSequence::parse(ctx->table(), text);
}

const SubgroupRecord& record(const VerificationReport& r, const std::string& label) {
  const auto it = std::find_if(r.records.begin(), r.records.end(),
                               [&](const SubgroupRecord& x) { return x.subgroup == label; });
  REQUIRE(it != r.records.end());
  return *it;
}

void check_both(const VerificationReport& r, const std::string& label, const PoincarePolynomial& p) {
  CAPTURE(label);
  const auto& rec = record(r, label);
  CHECK(rec.splitting == p);
  CHECK(rec.direct == p);
  CHECK(rec.equal);
  CHECK(rec.even);
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("CP examples") {
    const auto c2 = context("C2");
    {
      const auto r = verify_cp(*c2, rep(c2, "triv,triv,sign"), Mode::Abelian);
      CHECK(r.pass);
      check_both(r, "C2", oracle::poly({2, 0, 1}));
      check_both(r, "e", oracle::cp_series(3));
    }
    const auto s3 = context("S3");
    {
      const auto r = verify_cp(*s3, rep(s3, "triv,std"), Mode::General);
      CHECK(r.pass);
      CHECK(r.records.size() == 4);
      check_both(r, "C3", oracle::poly({3}));
      check_both(r, "C2", oracle::poly({2, 0, 1}));
      check_both(r, "e", oracle::cp_series(3));
      // Only the trivial line is fixed by all of S3.
      check_both(r, "S3", oracle::poly({1}));
    }
    const auto e = context("e");
    {
      const auto r = verify_cp(*e, rep(e, "4*triv"), Mode::Abelian);
      CHECK(r.pass);
      check_both(r, "e", oracle::cp_series(4));
    }
  }

  TEST_CASE("Grassmannian examples") {
    const auto e = context("e");
    for (auto mode : {Mode::Abelian, Mode::General}) {
      const auto r = verify_gr(*e, 2, rep(e, "4*triv"), mode);
      CHECK(r.pass);
      check_both(r, "e", oracle::poly({1, 0, 1, 0, 2, 0, 1, 0, 1}));
    }
    const auto c2 = context("C2");
    {
      const auto r = verify_gr(*c2, 2, rep(c2, "2*triv,2*sign"), Mode::Abelian);
      CHECK(r.pass);
      check_both(r, "C2", oracle::poly({3, 0, 2, 0, 1}));
    }
    const auto s4 = context("S4");
    {
      const auto r = verify_gr(*s4, 0, rep(s4, "std,rho1"), Mode::General);
      CHECK(r.pass);
      for (const auto& rec : r.records) check_both(r, rec.subgroup, PoincarePolynomial::one());
    }
  }

  TEST_CASE("modes and options") {
    const auto s3 = context("S3");
    CHECK(natural_mode(*s3, rep(s3, "triv,sign")) == Mode::Abelian);
    CHECK(natural_mode(*s3, rep(s3, "triv,std")) == Mode::General);
    CHECK_THROWS_AS(verify_cp(*s3, rep(s3, "triv,std"), Mode::Abelian), InputError);
    VerifyOptions only;
    only.subgroup = "C3";
    const auto r = verify_cp(*s3, rep(s3, "triv,std"), Mode::General, only);
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].subgroup == "C3");
    only.subgroup = "Z9";
    CHECK_THROWS_AS(verify_cp(*s3, rep(s3, "triv,std"), Mode::General, only), InputError);
    CHECK_THROWS_AS(verify_gr(*s3, 4, rep(s3, "triv,std"), Mode::General), DomainError);
  }

  TEST_CASE("every ordering passes") {
    for (const char* name : {"S3", "D4", "A4"}) {
      CAPTURE(name);
      const auto ctx = context(name);
      const auto& t = *ctx->table();
      std::vector<int> blocks;
      for (int i = 0; i < t.size() && blocks.size() < 4; ++i) {
        if (t.dimension(i) <= 2) blocks.push_back(i);
      }
      std::sort(blocks.begin(), blocks.end());
      std::vector<std::vector<WedgeSummand>> seen;
      do {
        const RepSequence v(ctx->table(), blocks);
        CAPTURE(v.to_string());
        const auto cp = verify_cp(*ctx, v, Mode::General);
        CHECK(cp.pass);
        for (int n = 1; n <= 3; ++n) CHECK(verify_gr(*ctx, n, v, Mode::General).pass);
        seen.push_back(split_cp_general(*ctx, v).summands);
      } while (std::next_permutation(blocks.begin(), blocks.end()));
      // Different orders give different decompositions.
      for (std::size_t i = 0; i < seen.size(); ++i) {
        for (std::size_t j = i + 1; j < seen.size(); ++j) CHECK(seen[i] != seen[j]);
      }
    }
  }

  TEST_CASE("sequence enumeration") {
    const auto c2 = context("C2");
    const auto seqs = enumerate_sequences(c2->table(), {0, 1}, 1, 3, 0);
    CHECK(seqs.size() == 2 + 4 + 8);
    CHECK(seqs.front().size() == 1);
    CHECK(seqs.back().size() == 3);
    const auto s3 = context("S3");
    // Dimension 2 from {triv, sign, std}: four length-2 linear sequences plus std.
    CHECK(enumerate_sequences(s3->table(), {0, 1, 2}, 2, 2, 0).size() == 5);
    CHECK(enumerate_sequences(s3->table(), {0, 1, 2}, 1, 4, 1).size() == 3);
  }

  TEST_CASE("small sweeps") {
    SweepConfig cfg;
    cfg.groups = {"C2", "S3", "Q8"};
    cfg.max_dim = 4;
    cfg.threads = 2;
    const auto cp = sweep(cfg);
    CHECK(cp.complete);
    CHECK(cp.failed == 0);
    CHECK(cp.total == cp.passed);
    CHECK(cp.total > 0);
    CHECK(cp.even);
    CHECK(cp.reports.empty());

    cfg.target = Target::Gr;
    cfg.max_n = 2;
    cfg.keep_all = true;
    const auto gr = sweep(cfg);
    CHECK(gr.failed == 0);
    CHECK(gr.reports.size() == gr.total);

    // Results do not depend on the thread count.
    cfg.threads = 1;
    const auto serial = sweep(cfg);
    REQUIRE(serial.reports.size() == gr.reports.size());
    for (std::size_t i = 0; i < serial.reports.size(); ++i) {
      CHECK(serial.reports[i].rep == gr.reports[i].rep);
      CHECK(serial.reports[i].n == gr.reports[i].n);
    }
  }

  TEST_CASE("sampling is deterministic") {
    SweepConfig cfg;
    cfg.groups = {"S4"};
    cfg.max_dim = 6;
    cfg.sample = 20;
    cfg.seed = 7;
    cfg.keep_all = true;
    const auto a = sweep(cfg);
    const auto b = sweep(cfg);
    CHECK(a.total == 20);
    REQUIRE(a.reports.size() == b.reports.size());
    for (std::size_t i = 0; i < a.reports.size(); ++i) CHECK(a.reports[i].rep == b.reports[i].rep);
    CHECK(a.failed == 0);
  }

  TEST_CASE("wrong twist fails on a nonabelian group") {
    SweepConfig cfg;
    cfg.groups = {"A4"};
    cfg.max_dim = 3;
    cfg.mode = Mode::General;
    cfg.twist = Twist::Tensor;
    const auto r = sweep(cfg);
    CHECK(r.failed > 0);
    CHECK(r.reports.size() == r.failed);
  }

  TEST_CASE("a tiny budget leaves the sweep incomplete") {
    SweepConfig cfg;
    cfg.groups = {"S4", "D6"};
    cfg.target = Target::Gr;
    cfg.max_dim = 8;
    cfg.max_n = 4;
    cfg.time_budget_seconds = 1e-6;
    cfg.threads = 1;
    const auto r = sweep(cfg);
    CHECK(!r.complete);
    CHECK(r.skipped > 0);
    CHECK(r.passed + r.failed + r.skipped == r.total);
  }

  TEST_CASE("unknown groups are input errors") {
    SweepConfig cfg;
    cfg.groups = {"nonsense"};
    CHECK_THROWS_AS(sweep(cfg), InputError);
  }
}
