#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eqsplit/fixedpoints.hpp"

namespace eqsplit {

enum class Mode { Abelian, General };

struct DirectComponent {
  std::string description;  // "CP^2 [chi1]", "Gr_1(C^2) x Gr_1(C^1)"
  PoincarePolynomial poincare;
};

struct SubgroupRecord {
  std::string subgroup;
  int order = 0;
  std::vector<DirectComponent> components;
  std::vector<PoincarePolynomial> per_summand;
  PoincarePolynomial splitting;
  PoincarePolynomial direct;
  bool equal = false;
  /// Every polynomial above is supported in even degrees.
  bool even = false;
};

struct VerificationReport {
  std::string group;
  std::string rep;
  Target target = Target::CP;
  int n = 1;
  Mode mode = Mode::General;
  bool wrong_twist = false;
  std::vector<SubgroupRecord> records;
  bool pass = false;
  bool even = false;
  double seconds = 0.0;
};

struct VerifyOptions {
  Twist twist = Twist::Hom;
  /// Restrict to one subgroup class by label; empty means all classes.
  std::string subgroup;
};

/// Compares the fixed points of the splitting of CP(V) with the direct
/// computation for every subgroup class. Failures are report content.
VerificationReport verify_cp(const RepContext& ctx, const RepSequence& v, Mode mode,
                             const VerifyOptions& opts = {});
VerificationReport verify_gr(const RepContext& ctx, int n, const RepSequence& v, Mode mode,
                             const VerifyOptions& opts = {});

/// Mode that applies to v without further input: abelian when every block is
/// one-dimensional.
Mode natural_mode(const RepContext& ctx, const RepSequence& v);

struct SweepConfig {
  std::vector<std::string> groups;
  Target target = Target::CP;
  int min_dim = 1;
  int max_dim = 5;
  /// 0 = no bound on the number of blocks.
  int max_blocks = 0;
  int min_n = 0;
  int max_n = 3;
  /// Unset: the natural mode of each sequence. Abelian restricts the block
  /// pool to one-dimensional irreducibles.
  std::optional<Mode> mode;
  Twist twist = Twist::Hom;
  /// Verify a random sample of this many sequences per group instead of all.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 0;
  /// 0 = unlimited. Tasks not started within the budget are skipped and the
  /// result is flagged incomplete.
  double time_budget_seconds = 0.0;
  unsigned threads = 0;
  /// Keep passing reports too, not only failing ones.
  bool keep_all = false;
  /// Called once per finished report, serialized.
  std::function<void(const VerificationReport&)> on_report;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  bool complete = true;
  bool even = true;
  double seconds = 0.0;
};

/// Every ordered sequence of irreducibles (from `pool`) with total dimension
/// in [min_dim, max_dim] and at most max_blocks blocks, in lexicographic
/// order of block indices by length.
std::vector<RepSequence> enumerate_sequences(const TablePtr& table, const std::vector<int>& pool,
                                             int min_dim, int max_dim, int max_blocks);

SweepResult sweep(const SweepConfig& config);

}  // namespace eqsplit
