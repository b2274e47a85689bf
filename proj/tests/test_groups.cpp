#include <doctest.h>

#include <nlohmann/json.hpp>

#include "eqsplit/error.hpp"
#include "eqsplit/groups.hpp"
#include "oracle.hpp"

using namespace eqsplit;
using nlohmann::json;

TEST_SUITE("groups") {
  TEST_CASE("builtin orders and class counts") {
    struct Row {
      const char* name;
      int order;
      int classes;
      bool abelian;
    };
    const Row rows[] = {
        {"e", 1, 1, true},     {"C2", 2, 2, true},   {"C6", 6, 6, true},
        {"C2xC2", 4, 4, true}, {"V4", 4, 4, true},   {"S3", 6, 3, false},
        {"D4", 8, 5, false},   {"Q8", 8, 5, false},  {"A4", 12, 4, false},
        {"S4", 24, 5, false},  {"D5", 10, 4, false}, {"D6", 12, 6, false},
        {"D12", 24, 9, false}, {"C2xC4", 8, 8, true},
    };
    for (const auto& r : rows) {
      CAPTURE(r.name);
      const auto g = FiniteGroup::builtin(r.name);
      CHECK(g.order() == r.order);
      CHECK(g.class_count() == r.classes);
      CHECK(g.is_abelian() == r.abelian);
      CHECK(g.class_size(0) == 1);
      CHECK(g.class_rep(0) == g.identity());
      int total = 0;
      for (int c = 0; c < g.class_count(); ++c) total += g.class_size(c);
      CHECK(total == g.order());
    }
  }

  TEST_CASE("S3 classes and structure") {
    const auto g = FiniteGroup::builtin("S3");
    std::vector<int> sizes;
    for (int c = 0; c < g.class_count(); ++c) sizes.push_back(g.class_size(c));
    // Ordered by element order: identity, transpositions, 3-cycles.
    CHECK(sizes == std::vector<int>{1, 3, 2});
    CHECK(g.exponent() == 6);
    CHECK(structure_name(g) == "S3");
    CHECK(structure_name(FiniteGroup::builtin("D4")) == "D4");
    CHECK(structure_name(FiniteGroup::builtin("Q8")) == "Q8");
    CHECK(structure_name(FiniteGroup::builtin("A4")) == "A4");
    CHECK(structure_name(FiniteGroup::builtin("C6")) == "C6");
  }

  TEST_CASE("group axioms hold for builtins") {
    for (const char* name : {"S3", "D4", "Q8", "A4", "C2xC3", "D5"}) {
      CAPTURE(name);
      const auto g = FiniteGroup::builtin(name);
      const int n = g.order();
      for (int a = 0; a < n; ++a) {
        CHECK(g.mul(a, g.inverse(a)) == g.identity());
        CHECK(g.mul(g.identity(), a) == a);
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
          CHECK(g.class_of(g.conjugate(a, b)) == g.class_of(a));
        }
      }
    }
  }

  TEST_CASE("subgroup classes match brute force") {
    for (const char* name :
         {"e", "C2", "C4", "C6", "C2xC2", "S3", "D4", "Q8", "A4", "D5", "D6", "C2xC2xC2",
          "C2xC4", "C8", "C12", "C2xC6"}) {
      CAPTURE(name);
      const auto g = FiniteGroup::builtin(name);
      const auto subs = subgroups_up_to_conjugacy(g);
      CHECK(static_cast<int>(subs.size()) == oracle::brute_force_subgroup_classes(g));
      for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1].order() <= subs[i].order());
      CHECK(subs.front().order() == 1);
      CHECK(subs.back().order() == g.order());
    }
    CHECK(subgroups_up_to_conjugacy(FiniteGroup::builtin("S4")).size() == 11);
  }

  TEST_CASE("subgroup labels") {
    auto labels = [](const char* name) {
      std::vector<std::string> out;
      for (const auto& s : subgroups_up_to_conjugacy(FiniteGroup::builtin(name))) {
        out.push_back(s.label);
      }
      return out;
    };
    CHECK(labels("C4") == std::vector<std::string>{"e", "C2", "C4"});
    CHECK(labels("S3") == std::vector<std::string>{"e", "C2", "C3", "S3"});
    const auto d4 = labels("D4");
    CHECK(d4.size() == 8);
    CHECK(d4.back() == "D4");
  }

  TEST_CASE("subgroup fusion is consistent") {
    const auto g = FiniteGroup::builtin("S4");
    for (const auto& s : subgroups_up_to_conjugacy(g)) {
      CAPTURE(s.label);
      const auto& h = *s.group;
      CHECK(h.order() == s.order());
      for (int a = 0; a < h.order(); ++a) {
        CHECK(s.class_map[h.class_of(a)] == g.class_of(s.members[a]));
        for (int b = 0; b < h.order(); ++b) {
          CHECK(s.members[h.mul(a, b)] == g.mul(s.members[a], s.members[b]));
        }
      }
    }
  }

  TEST_CASE("cycle notation") {
    CHECK(parse_cycles("(1 2)(3 4)", 4) == Permutation{1, 0, 3, 2});
    CHECK(parse_cycles("(1 2 3)", 4) == Permutation{1, 2, 0, 3});
    CHECK(parse_cycles("()", 3) == Permutation{0, 1, 2});
    CHECK_THROWS_AS(parse_cycles("(1 5)", 4), InputError);
    CHECK_THROWS_AS(parse_cycles("(1 2", 4), InputError);
    CHECK_THROWS_AS(parse_cycles("1 2)", 4), InputError);
  }

  TEST_CASE("group specs from JSON") {
    const auto s3 = FiniteGroup::from_json(
        json{{"type", "perm"}, {"degree", 3}, {"generators", {"(1 2)", "(1 2 3)"}}});
    CHECK(s3.order() == 6);
    CHECK(s3.class_count() == 3);
    const auto zero_based = FiniteGroup::from_json(
        json{{"type", "perm"}, {"degree", 3}, {"generators", {{1, 0, 2}, {1, 2, 0}}}});
    CHECK(zero_based.order() == 6);
    const auto one_based = FiniteGroup::from_json(
        json{{"type", "perm"}, {"degree", 4}, {"generators", {{2, 3, 4, 1}}}});
    CHECK(one_based.order() == 4);
    CHECK(one_based.is_abelian());
    CHECK(FiniteGroup::from_json(json{{"type", "abelian"}, {"orders", {2, 3}}}).order() == 6);
    CHECK(FiniteGroup::from_json(json{{"type", "builtin"}, {"name", "Q8"}}).order() == 8);
    const auto c3 = FiniteGroup::from_json(
        json{{"type", "table"}, {"mult", {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}}});
    CHECK(c3.order() == 3);
    CHECK(c3.exponent() == 3);
  }

  TEST_CASE("malformed group specs are input errors") {
    CHECK_THROWS_AS(FiniteGroup::builtin("Z7"), InputError);
    CHECK_THROWS_AS(FiniteGroup::builtin("D13"), InputError);
    CHECK_THROWS_AS(FiniteGroup::builtin("C0"), InputError);
    CHECK_THROWS_AS(FiniteGroup::builtin("C97"), InputError);
    CHECK_THROWS_AS(FiniteGroup::from_json(json{{"type", "lie"}}), InputError);
    CHECK_THROWS_AS(FiniteGroup::from_json(json{{"type", "abelian"}}), InputError);
    // Not associative.
    CHECK_THROWS_AS(FiniteGroup::from_json(json{{"type", "table"},
                                                {"mult", {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}}}),
                    InputError);
    CHECK_THROWS_AS(FiniteGroup::from_json(json{{"type", "table"}, {"mult", {{0, 1}, {1, 2}}}}),
                    InputError);
    CHECK_THROWS_AS(FiniteGroup::from_json(
                        json{{"type", "perm"}, {"degree", 3}, {"generators", {{0, 0, 1}}}}),
                    InputError);
    CHECK_THROWS_AS(load_group("/nonexistent/group.json"), InputError);
  }
}
