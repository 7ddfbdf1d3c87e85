// Copyright 2026 The Teamforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "teamforge/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "teamforge/detail/search.hpp"
#include "teamforge/error.hpp"

namespace teamforge {

using detail::branch_and_bound;
using detail::PairWeights;
using detail::SearchLimits;
using detail::SearchOptions;
using detail::SearchResult;
using detail::StageProblem;

void SolveConfig::validate() const {
  if (time_limit.count() <= 0) {
    throw Error(Errc::InvalidArgument, "time limit must be positive");
  }
  if (!(work_rate >= 0.0) || std::isinf(work_rate)) {
    throw Error(Errc::InvalidArgument, "work rate must be finite and >= 0");
  }
}

std::string_view to_string(StageStatus s) noexcept {
  switch (s) {
    case StageStatus::Optimal: return "optimal";
    case StageStatus::Feasible: return "feasible";
    case StageStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string_view to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::Unknown: return "unknown";
  }
  return "?";
}

std::string_view to_string(TimeMode m) noexcept {
  return m == TimeMode::Global ? "global" : "timeboxed";
}

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t work_for(Seconds budget, double rate) {
  if (rate <= 0.0) return std::numeric_limits<std::uint64_t>::max();
  const double units = budget.count() * rate;
  if (units >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::max(0.0, units));
}

// Everything one solve call shares across its stages.
class LexicographicSolver {
 public:
  LexicographicSolver(const Instance& inst, const SolveConfig& cfg)
      : inst_(inst),
        cfg_(cfg),
        start_(Clock::now()),
        m_(inst.num_students()),
        n_(inst.num_teams()) {
    cfg_.validate();
    stage_start_ = start_;
    options_.order = detail::branching_order(inst, cfg.seed);
    options_.symmetry_breaking = cfg.symmetry_breaking;
    options_.hooks = cfg.hooks;
  }

  SolveOutcome feasibility() {
    SolveOutcome out;
    const Seconds budget = cfg_.time_limit;
    const SearchLimits limits{start_ + cfg_.time_limit, work_for(budget, cfg_.work_rate)};
    StageProblem problem;
    const auto res = run_search(problem, limits, nullptr);
    if (res.best) {
      incumbent_ = *res.best;
      out.status = SolveStatus::Optimal;
    } else {
      out.status = res.exhausted ? SolveStatus::Infeasible : SolveStatus::Unknown;
    }
    finish(out);
    return out;
  }

  SolveOutcome lexicographic(const Strategy& strat) {
    SolveOutcome out;
    const auto& stages = strat.stages();
    const int count = static_cast<int>(stages.size());
    const Seconds total = cfg_.time_limit;
    const Seconds per_stage = total / count;
    const std::uint64_t total_work = work_for(total, cfg_.work_rate);
    bool all_optimal = true;

    for (int i = 0; i < count; ++i) {
      StageResult sr;
      sr.objective = stages[i];
      const auto stage_start = Clock::now();
      SearchLimits limits;
      if (cfg_.time_mode == TimeMode::Timeboxed) {
        sr.budget = per_stage;
        limits.deadline = stage_start + std::chrono::duration_cast<Clock::duration>(per_stage);
        limits.work_budget = work_for(per_stage, cfg_.work_rate);
      } else {
        sr.budget = total;
        limits.deadline = start_ + cfg_.time_limit;
        limits.work_budget = total_work > work_ ? total_work - work_ : 0;
        if (stage_start >= limits.deadline || limits.work_budget == 0) {
          all_optimal = false;
          out.stages.push_back(sr);
          continue;
        }
      }
      const std::uint64_t work_before = work_;
      stage_start_ = stage_start;
      stage_work_start_ = work_before;
      stage_best_time_ = Seconds{0};
      stage_best_work_ = 0;
      if (cfg_.hooks && cfg_.hooks->on_stage) cfg_.hooks->on_stage(i);

      if (!incumbent_) {
        // First stage: any feasible assignment before optimizing.
        StageProblem problem;
        const auto res = run_search(problem, limits, nullptr);
        if (!res.best) {
          out.status = res.exhausted ? SolveStatus::Infeasible : SolveStatus::Unknown;
          sr.time_total = Clock::now() - stage_start;
          sr.work = work_ - work_before;
          out.stages.push_back(sr);
          for (int rest = i + 1; rest < count; ++rest) {
            StageResult skipped;
            skipped.objective = stages[rest];
            skipped.budget = cfg_.time_mode == TimeMode::Timeboxed ? per_stage : total;
            out.stages.push_back(skipped);
          }
          finish(out);
          return out;
        }
        incumbent_ = *res.best;
        limits.work_budget -= std::min(limits.work_budget, res.work);
      }

      bool optimal = false;
      const std::uint64_t nodes_before = nodes_;
      if (stages[i].kind() == ObjectiveKind::O2) {
        optimal = run_o2_stage(limits);
      } else {
        StageProblem problem = constrained_problem();
        problem.objective = detail::pair_weights(stages[i], inst_);
        const auto res = run_search(problem, limits, &*incumbent_);
        if (res.improved && res.best) incumbent_ = *res.best;
        optimal = res.exhausted;
      }

      const auto asg = Assignment::from_labels(*incumbent_, n_);
      sr.stage_value = evaluate(stages[i], inst_, asg);
      sr.status = optimal ? StageStatus::Optimal : StageStatus::Feasible;
      sr.time_total = Clock::now() - stage_start;
      sr.time_to_best = stage_best_time_;
      sr.nodes = nodes_ - nodes_before;
      sr.work = work_ - work_before;
      sr.work_to_best = stage_best_work_;
      all_optimal = all_optimal && optimal;
      priors_.push_back({stages[i], *sr.stage_value});
      out.stages.push_back(sr);
    }

    out.status = all_optimal ? SolveStatus::Optimal : SolveStatus::Feasible;
    finish(out);
    return out;
  }

 private:
  struct Prior {
    Objective objective;
    ObjectiveValue value;
  };

  // Base problem with every completed stage held at its final value.
  StageProblem constrained_problem() const {
    StageProblem problem;
    auto forbid = [&](auto&& predicate) {
      if (problem.forbidden.empty()) {
        problem.forbidden.assign(static_cast<std::size_t>(m_) * m_, 0);
      }
      for (int a = 0; a < m_; ++a) {
        for (int b = 0; b < m_; ++b) {
          if (a != b && predicate(a, b)) problem.forbidden[a * m_ + b] = 1;
        }
      }
    };
    for (const auto& prior : priors_) {
      const auto& obj = prior.objective;
      switch (obj.kind()) {
        case ObjectiveKind::O2:
          forbid([&](int a, int b) {
            return std::min(inst_.pref(a, b), inst_.pref(b, a)) < prior.value;
          });
          break;
        case ObjectiveKind::O3:
          if (obj.sense() == Sense::Minimize && prior.value == 0) {
            const int p0 = *obj.p0();
            forbid([&](int a, int b) {
              return inst_.pref(a, b) == p0 || inst_.pref(b, a) == p0;
            });
            break;
          }
          if (obj.sense() == Sense::Maximize && prior.value <= 0) break;
          [[fallthrough]];
        case ObjectiveKind::O1:
          problem.thresholds.push_back(
              {detail::pair_weights(obj, inst_), detail::sense_sign(obj) * prior.value});
          break;
      }
    }
    return problem;
  }

  // Raises the O2 threshold one distinct preference value at a time: each
  // step is a pure feasibility search with every pair below the threshold
  // kept apart. Returns true when the last step proved no higher value fits.
  bool run_o2_stage(SearchLimits limits) {
    const auto& prefs = inst_.preferences();
    std::vector<ObjectiveValue> levels;
    for (int v : prefs.off_diagonal_values()) levels.push_back(v);
    levels.push_back(ObjectiveValue{prefs.max_entry()} + 1);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    ObjectiveValue current = eval_o2(inst_, Assignment::from_labels(*incumbent_, n_));
    const StageProblem base = constrained_problem();
    for (ObjectiveValue level : levels) {
      if (level <= current) continue;
      StageProblem problem = base;
      if (problem.forbidden.empty()) {
        problem.forbidden.assign(static_cast<std::size_t>(m_) * m_, 0);
      }
      for (int a = 0; a < m_; ++a) {
        for (int b = 0; b < m_; ++b) {
          if (a != b && std::min(prefs(a, b), prefs(b, a)) < level) {
            problem.forbidden[a * m_ + b] = 1;
          }
        }
      }
      const auto res = run_search(problem, limits, nullptr);
      limits.work_budget -= std::min(limits.work_budget, res.work);
      if (res.best) {
        incumbent_ = *res.best;
        current = eval_o2(inst_, Assignment::from_labels(*incumbent_, n_));
        continue;
      }
      return res.exhausted;
    }
    return true;
  }

  SearchResult run_search(const StageProblem& problem, const SearchLimits& limits,
                          const std::vector<TeamIndex>* incumbent) {
    const std::uint64_t base_work = work_;
    options_.on_improve = [&](std::span<const TeamIndex> labels, ObjectiveValue,
                              std::uint64_t work_so_far) {
      const auto now = Clock::now();
      const std::vector<TeamIndex> copy(labels.begin(), labels.end());
      const auto asg = Assignment::from_labels(copy, n_);
      trace_.push_back({now - start_, base_work + work_so_far, eval_o1(inst_, asg)});
      stage_best_time_ = now - stage_start_;
      stage_best_work_ = base_work + work_so_far - stage_work_start_;
    };
    auto res = branch_and_bound(inst_, problem, limits, options_, incumbent);
    options_.on_improve = nullptr;
    work_ += res.work;
    nodes_ += res.nodes;
    return res;
  }

  void finish(SolveOutcome& out) {
    out.elapsed = Clock::now() - start_;
    out.work = work_;
    out.quality_trace = std::move(trace_);
    if (incumbent_ && out.status != SolveStatus::Infeasible &&
        out.status != SolveStatus::Unknown) {
      out.assignment = Assignment::from_labels(*incumbent_, n_);
      for (auto& sr : out.stages) sr.value = evaluate(sr.objective, inst_, *out.assignment);
    }
  }

  const Instance& inst_;
  SolveConfig cfg_;
  const Clock::time_point start_;
  const int m_;
  const int n_;
  SearchOptions options_;
  std::optional<std::vector<TeamIndex>> incumbent_;
  std::vector<Prior> priors_;
  std::vector<TracePoint> trace_;
  std::uint64_t work_ = 0;
  std::uint64_t nodes_ = 0;
  Clock::time_point stage_start_;
  std::uint64_t stage_work_start_ = 0;
  Seconds stage_best_time_{0};
  std::uint64_t stage_best_work_ = 0;
};

}  // namespace

SolveOutcome solve_feasibility(const Instance& inst, const SolveConfig& cfg) {
  return LexicographicSolver(inst, cfg).feasibility();
}

SolveOutcome solve(const Instance& inst, const Strategy& strat, const SolveConfig& cfg) {
  return LexicographicSolver(inst, cfg).lexicographic(strat);
}

CertificationReport audit(const Instance& inst, const Strategy& strat,
                          const SolveOutcome& outcome) {
  CertificationReport report;
  auto fail = [&](std::string what) {
    report.ok = false;
    report.failures.push_back(std::move(what));
  };
  auto pass = [&](std::string what) { report.passed.push_back(std::move(what)); };

  const bool solved = outcome.status == SolveStatus::Optimal ||
                      outcome.status == SolveStatus::Feasible;
  if (solved != outcome.assignment.has_value()) {
    fail(std::string("status ") + std::string(to_string(outcome.status)) +
         (solved ? " requires" : " forbids") + " an assignment");
  }
  for (std::size_t i = 1; i < outcome.quality_trace.size(); ++i) {
    if (outcome.quality_trace[i].elapsed < outcome.quality_trace[i - 1].elapsed ||
        outcome.quality_trace[i].work < outcome.quality_trace[i - 1].work) {
      fail("quality trace is not monotone in time");
      break;
    }
  }
  if (!outcome.stages.empty() && outcome.stages.size() != strat.size()) {
    fail("outcome has " + std::to_string(outcome.stages.size()) +
         " stages, strategy has " + std::to_string(strat.size()));
  }
  if (!outcome.assignment) return report;
  const auto& asg = *outcome.assignment;

  try {
    check_structure(inst, asg);
    pass("structure");
  } catch (const Error& e) {
    fail(std::string("structure: ") + e.what());
    return report;
  }

  const auto feas = is_feasible(inst, asg);
  for (const auto& v : feas.violations) {
    std::string members;
    for (int a : asg.teams()[v.team]) {
      members += (members.empty() ? "" : ", ") + inst.student_names()[a];
    }
    fail(std::string(to_string(v.kind)) + " constraint violated by team " +
         std::to_string(v.team + 1) + " {" + members + "}: " + std::to_string(v.actual) +
         " vs required " + std::to_string(v.required));
  }
  if (feas.feasible) pass("team-size and team-skill constraints");

  const std::size_t stages = std::min(outcome.stages.size(), strat.size());
  bool all_optimal = !outcome.stages.empty();
  for (std::size_t i = 0; i < stages; ++i) {
    const auto& sr = outcome.stages[i];
    const std::string label =
        "stage " + std::to_string(i + 1) + " (" + strat.stages()[i].to_string() + ")";
    if (!(sr.objective == strat.stages()[i])) {
      fail(label + ": objective recorded as " + sr.objective.to_string());
      continue;
    }
    const ObjectiveValue actual = evaluate(sr.objective, inst, asg);
    if (!sr.value || *sr.value != actual) {
      fail(label + ": reported value " +
           (sr.value ? std::to_string(*sr.value) : std::string("none")) +
           ", re-evaluated " + std::to_string(actual));
    } else {
      pass(label + " value " + std::to_string(actual));
    }
    if (sr.status != StageStatus::Optimal) all_optimal = false;
    if (sr.status == StageStatus::Skipped) continue;
    if (!sr.stage_value) {
      fail(label + ": completed stage without a stage value");
      continue;
    }
    if (!sr.objective.attains(actual, *sr.stage_value)) {
      fail(label + ": final value " + std::to_string(actual) +
           " does not keep the stage value " + std::to_string(*sr.stage_value));
    }
    if (sr.status == StageStatus::Optimal && actual != *sr.stage_value) {
      fail(label + ": optimal stage value " + std::to_string(*sr.stage_value) +
           " differs from final value " + std::to_string(actual));
    }
  }
  if (!outcome.stages.empty()) {
    if ((outcome.status == SolveStatus::Optimal) != all_optimal) {
      fail("overall status does not match stage statuses");
    }
  }

  ObjectiveValue decomposed = 0;
  for (int p0 : inst.preferences().off_diagonal_values()) {
    decomposed += p0 * eval_o3(inst, asg, p0);
  }
  if (decomposed != eval_o1(inst, asg)) {
    fail("O1 decomposition identity does not hold");
  } else {
    pass("O1 decomposition");
  }
  return report;
}

CertificationReport certify(const Instance& inst, const Strategy& strat,
                            const SolveOutcome& outcome) {
  auto report = audit(inst, strat, outcome);
  if (!report.ok) {
    std::string message;
    for (const auto& f : report.failures) {
      if (!message.empty()) message += "; ";
      message += f;
    }
    throw Error(Errc::CertificationFailure, message);
  }
  return report;
}

}  // namespace teamforge
