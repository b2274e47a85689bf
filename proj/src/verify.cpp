#include "eqsplit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "eqsplit/error.hpp"

namespace eqsplit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> selected_subgroups(const RepContext& ctx, const std::string& label) {
  std::vector<int> out;
  if (label.empty()) {
    out.resize(ctx.subgroups().size());
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  const int idx = ctx.subgroup_index(label);
  if (idx < 0) {
    std::string known;
    for (const auto& sd : ctx.subgroups()) {
      known += (known.empty() ? "" : ", ") + sd.subgroup.label;
    }
    throw InputError("unknown subgroup '" + label + "' (classes: " + known + ")");
  }
  return {idx};
}

std::string cp_component_text(const FixedComponentCP& c) {
  return "CP^" + std::to_string(c.multiplicity - 1) + " [" + c.alpha + "]";
}

std::string gr_component_text(const FixedComponentGr& c) {
  std::string s;
  for (std::size_t a = 0; a < c.n.size(); ++a) {
    if (c.n[a] == 0) continue;
    s += (s.empty() ? "" : " x ") + std::string("Gr_") + std::to_string(c.m[a]) + "(C^" +
         std::to_string(c.n[a]) + ") [" + c.labels[a] + "]";
  }
  return s.empty() ? "pt" : s;
}

void finish_record(SubgroupRecord& r) {
  r.equal = r.splitting == r.direct;
  r.even = r.splitting.even_supported() && r.direct.even_supported();
  for (const auto& p : r.per_summand) r.even = r.even && p.even_supported();
  for (const auto& c : r.components) r.even = r.even && c.poincare.even_supported();
}

VerificationReport run(const RepContext& ctx, Target target, int n, const RepSequence& v,
                       Mode mode, const VerifyOptions& opts) {
  if (mode == Mode::Abelian && opts.twist == Twist::Tensor) {
    throw InputError("the twist diagnostic acts on Thom summands; use the general mode");
  }
  const auto start = Clock::now();
  VerificationReport rep;
  rep.group = ctx.group().name();
  rep.rep = v.to_string();
  rep.target = target;
  rep.n = n;
  rep.mode = mode;
  rep.wrong_twist = opts.twist == Twist::Tensor;

  WedgeDecomposition d;
  if (target == Target::CP) {
    d = mode == Mode::Abelian ? split_cp_abelian(ctx, v) : split_cp_general(ctx, v);
  } else {
    d = mode == Mode::Abelian ? split_gr_abelian(ctx, n, v) : split_gr_recursive(ctx, n, v);
  }

  for (int h : selected_subgroups(ctx, opts.subgroup)) {
    const SubgroupData& sd = ctx.subgroups()[static_cast<std::size_t>(h)];
    SubgroupRecord r;
    r.subgroup = sd.subgroup.label;
    r.order = sd.subgroup.order();
    for (const auto& s : d.summands) {
      r.per_summand.push_back(fixed_poincare_summand(ctx, s, h, opts.twist));
      r.splitting += r.per_summand.back();
    }
    if (target == Target::CP) {
      for (const auto& c : cp_fixed(ctx, v, h)) {
        r.components.push_back({cp_component_text(c), c.poincare()});
        r.direct += r.components.back().poincare;
      }
    } else {
      for (const auto& c : gr_fixed(ctx, n, v, h)) {
        r.components.push_back({gr_component_text(c), c.poincare()});
        r.direct += r.components.back().poincare;
      }
    }
    finish_record(r);
    rep.records.push_back(std::move(r));
  }
  rep.pass = std::all_of(rep.records.begin(), rep.records.end(),
                         [](const auto& r) { return r.equal; });
  rep.even = std::all_of(rep.records.begin(), rep.records.end(),
                         [](const auto& r) { return r.even; });
  rep.seconds = seconds_since(start);
  return rep;
}

}  // namespace

VerificationReport verify_cp(const RepContext& ctx, const RepSequence& v, Mode mode,
                             const VerifyOptions& opts) {
  return run(ctx, Target::CP, 1, v, mode, opts);
}

VerificationReport verify_gr(const RepContext& ctx, int n, const RepSequence& v, Mode mode,
                             const VerifyOptions& opts) {
  if (n < 0 || n > v.dimension()) {
    throw DomainError("no " + std::to_string(n) + "-planes in a " +
                      std::to_string(v.dimension()) + "-dimensional space");
  }
  return run(ctx, Target::Gr, n, v, mode, opts);
}

Mode natural_mode(const RepContext& ctx, const RepSequence& v) {
  return ctx.all_linear(v) ? Mode::Abelian : Mode::General;
}

std::vector<RepSequence> enumerate_sequences(const TablePtr& table, const std::vector<int>& pool,
                                             int min_dim, int max_dim, int max_blocks) {
  std::vector<RepSequence> out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, long dim) -> void {
    if (dim >= min_dim && !cur.empty()) out.emplace_back(table, cur);
    if (max_blocks > 0 && static_cast<int>(cur.size()) >= max_blocks) return;
    for (int b : pool) {
      const long d = table->dimension(b);
      if (dim + d > max_dim) continue;
      cur.push_back(b);
      self(self, dim + d);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const RepSequence& a, const RepSequence& b) {
    return a.size() < b.size();
  });
  return out;
}

SweepResult sweep(const SweepConfig& config) {
  const auto start = Clock::now();
  struct Task {
    ContextPtr ctx;
    RepSequence v;
    int n;
    Mode mode;
  };
  std::vector<Task> tasks;
  for (const auto& name : config.groups) {
    ContextPtr ctx = RepContext::build(std::make_shared<const FiniteGroup>(load_group(name)));
    std::vector<int> pool;
    for (int i = 0; i < ctx->table()->size(); ++i) {
      if (config.mode != Mode::Abelian || ctx->table()->dimension(i) == 1) pool.push_back(i);
    }
    auto seqs = enumerate_sequences(ctx->table(), pool, config.min_dim, config.max_dim,
                                    config.max_blocks);
    if (config.sample && *config.sample < seqs.size()) {
      std::vector<std::size_t> idx(seqs.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::mt19937_64 rng(config.seed);
      std::shuffle(idx.begin(), idx.end(), rng);
      idx.resize(*config.sample);
      std::sort(idx.begin(), idx.end());
      std::vector<RepSequence> kept;
      for (auto i : idx) kept.push_back(std::move(seqs[i]));
      seqs = std::move(kept);
    }
    for (auto& v : seqs) {
      const Mode mode =
          config.mode.value_or(config.twist == Twist::Tensor ? Mode::General
                                                             : natural_mode(*ctx, v));
      if (config.target == Target::CP) {
        tasks.push_back({ctx, v, 1, mode});
        continue;
      }
      const int top = static_cast<int>(std::min<long>(config.max_n, v.dimension()));
      for (int n = config.min_n; n <= top; ++n) tasks.push_back({ctx, v, n, mode});
    }
  }

  SweepResult result;
  result.total = tasks.size();
  std::vector<std::pair<std::size_t, VerificationReport>> kept;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> passed{0}, failed{0}, skipped{0};
  std::atomic<bool> even{true};
  std::exception_ptr error;

  const auto worker = [&] {
    VerifyOptions opts;
    opts.twist = config.twist;
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      if (config.time_budget_seconds > 0 && seconds_since(start) > config.time_budget_seconds) {
        ++skipped;
        continue;
      }
      const Task& t = tasks[i];
      VerificationReport r;
      try {
        r = config.target == Target::CP ? verify_cp(*t.ctx, t.v, t.mode, opts)
                                        : verify_gr(*t.ctx, t.n, t.v, t.mode, opts);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        next = tasks.size();
        return;
      }
      ++(r.pass ? passed : failed);
      if (!r.even) even = false;
      std::lock_guard lock(mu);
      if (config.on_report) config.on_report(r);
      if (config.keep_all || !r.pass) kept.emplace_back(i, std::move(r));
    }
  };

  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  if (error) std::rethrow_exception(error);
  std::sort(kept.begin(), kept.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [i, r] : kept) result.reports.push_back(std::move(r));
  result.passed = passed;
  result.failed = failed;
  result.skipped = skipped;
  result.complete = skipped == 0;
  result.even = even;
  result.seconds = seconds_since(start);
  return result;
}

}  // namespace eqsplit
