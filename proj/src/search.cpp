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

#include "teamforge/detail/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "teamforge/error.hpp"
#include "teamforge/random.hpp"

namespace teamforge::detail {

PairWeights pair_weights(const Objective& obj, const Instance& inst) {
  if (obj.kind() == ObjectiveKind::O2) {
    throw Error(Errc::InvalidArgument, "O2 has no pair-weight form");
  }
  const int m = inst.num_students();
  const int sign = sense_sign(obj);
  PairWeights w{m, std::vector<int>(static_cast<std::size_t>(m) * m, 0)};
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      int v = 0;
      if (obj.kind() == ObjectiveKind::O1) {
        v = inst.pref(a, b) + inst.pref(b, a);
      } else {
        const int p0 = *obj.p0();
        v = (inst.pref(a, b) == p0) + (inst.pref(b, a) == p0);
      }
      w.cells[a * m + b] = sign * v;
      w.cells[b * m + a] = sign * v;
    }
  }
  return w;
}

std::vector<StudentIndex> branching_order(const Instance& inst, std::uint64_t seed) {
  const int m = inst.num_students();
  std::vector<long long> mass(m, 0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      mass[a] += std::abs(inst.pref(a, b)) + std::abs(inst.pref(b, a));
    }
  }
  std::vector<int> tie(m);
  std::iota(tie.begin(), tie.end(), 0);
  if (seed != 0) {
    Rng rng(seed);
    rng.shuffle(std::span<int>(tie));
  }
  std::vector<StudentIndex> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (mass[x] != mass[y]) return mass[x] > mass[y];
    return tie[x] < tie[y];
  });
  return order;
}

namespace {

using Clock = std::chrono::steady_clock;

// Deadline polling interval, in nodes.
constexpr std::uint64_t kPollInterval = 1024;

struct WeightedTerm {
  const PairWeights* weights;
  ObjectiveValue at_least;  // ignored for the objective term
  // Flattened per-student lists of (weight, other) with weight > 0, sorted
  // by descending weight; list of u is entries[offset[u] .. offset[u + 1]).
  std::vector<std::pair<int, int>> entries;
  std::vector<int> offset;
  std::vector<int> gain;  // [student * n + team]: sum of weights to members
  ObjectiveValue current = 0;
};

class Search {
 public:
  Search(const Instance& inst, const StageProblem& problem,
         const SearchLimits& limits, const SearchOptions& options)
      : inst_(inst),
        problem_(problem),
        limits_(limits),
        options_(options),
        m_(inst.num_students()),
        n_(inst.num_teams()),
        k_min_(inst.min_team_size()),
        k_max_(inst.max_team_size()),
        c_(inst.min_coverage()),
        words_(inst.skill_words()) {
    if (static_cast<int>(options_.order.size()) != m_) {
      throw Error(Errc::InvalidArgument, "branching order must cover every student");
    }
    pos_.assign(m_, -1);
    for (int d = 0; d < m_; ++d) {
      const int u = options_.order[d];
      if (u < 0 || u >= m_ || pos_[u] != -1) {
        throw Error(Errc::InvalidArgument, "branching order is not a permutation");
      }
      pos_[u] = d;
    }
    has_forbidden_ = !problem_.forbidden.empty();
    if (has_forbidden_ &&
        problem_.forbidden.size() != static_cast<std::size_t>(m_) * m_) {
      throw Error(Errc::InvalidArgument, "forbidden matrix must be m x m");
    }

    has_objective_ = problem_.objective.has_value();
    if (has_objective_) add_term(&*problem_.objective, 0);
    for (const auto& t : problem_.thresholds) add_term(&t.weights, t.at_least);

    team_of_.assign(m_, -1);
    size_.assign(n_, 0);
    mask_.assign(static_cast<std::size_t>(n_) * words_, 0);
    cover_.assign(n_, 0);
    saved_mask_.assign(static_cast<std::size_t>(m_) * words_, 0);
    saved_cover_.assign(m_, 0);
    saved_opened_.assign(m_, 0);
    if (has_forbidden_) conflict_.assign(static_cast<std::size_t>(m_) * n_, 0);
    candidates_.assign(static_cast<std::size_t>(m_) * n_, 0);
    compat_.assign(n_, 0);
    prefix_.assign(terms_.size() * static_cast<std::size_t>(k_max_), 0);

    suffix_union_.assign(static_cast<std::size_t>(m_ + 1) * words_, 0);
    suffix_max_skills_.assign(m_ + 1, 0);
    for (int d = m_ - 1; d >= 0; --d) {
      const auto skills = inst_.skill_mask(options_.order[d]);
      int count = 0;
      for (int w = 0; w < words_; ++w) {
        suffix_union_[d * words_ + w] = suffix_union_[(d + 1) * words_ + w] | skills[w];
        count += std::popcount(skills[w]);
      }
      suffix_max_skills_[d] = std::max(suffix_max_skills_[d + 1], count);
    }
  }

  SearchResult run(const std::vector<TeamIndex>* incumbent) {
    if (incumbent != nullptr) {
      if (static_cast<int>(incumbent->size()) != m_) {
        throw Error(Errc::InvalidArgument, "incumbent has the wrong length");
      }
      result_.best = *incumbent;
      result_.best_value = has_objective_ ? score_of(*incumbent) : 0;
      have_best_ = true;
      // Without an objective any incumbent already answers the question.
      if (!has_objective_) {
        result_.exhausted = true;
        return std::move(result_);
      }
    }
    if (Clock::now() >= limits_.deadline || limits_.work_budget == 0) {
      stop_ = true;
    } else if (!prune(0)) {
      dfs(0);
    }
    result_.exhausted = !stop_ || (found_ && !has_objective_);
    result_.nodes = nodes_;
    result_.work = work_;
    return std::move(result_);
  }

 private:
  void add_term(const PairWeights* weights, ObjectiveValue at_least) {
    WeightedTerm term;
    term.weights = weights;
    term.at_least = at_least;
    term.offset.assign(m_ + 1, 0);
    for (int u = 0; u < m_; ++u) {
      term.offset[u] = static_cast<int>(term.entries.size());
      const auto begin = term.entries.size();
      for (int v = 0; v < m_; ++v) {
        if (v == u || (*weights)(u, v) <= 0) continue;
        if (has_forbidden_ && problem_.forbidden[u * m_ + v]) continue;
        term.entries.emplace_back((*weights)(u, v), v);
      }
      std::sort(term.entries.begin() + begin, term.entries.end(),
                [](const auto& x, const auto& y) {
                  return x.first != y.first ? x.first > y.first : x.second < y.second;
                });
    }
    term.offset[m_] = static_cast<int>(term.entries.size());
    term.gain.assign(static_cast<std::size_t>(m_) * n_, 0);
    terms_.push_back(std::move(term));
  }

  ObjectiveValue score_of(const std::vector<TeamIndex>& labels) const {
    const auto& w = *problem_.objective;
    ObjectiveValue total = 0;
    for (int a = 0; a < m_; ++a) {
      for (int b = a + 1; b < m_; ++b) {
        if (labels[a] == labels[b]) total += w(a, b);
      }
    }
    return total;
  }

  // True when no completion of the current partial assignment can be
  // feasible, meet every threshold and beat the incumbent.
  bool prune(int depth) {
    const int remaining = m_ - depth;
    work_ += static_cast<std::uint64_t>(n_) + 1;

    // Team-size and team-skill completion.
    long long needed = 0;
    const std::uint64_t* pool = suffix_union_.data() + depth * words_;
    const int pool_best = suffix_max_skills_[depth];
    for (int j = 0; j < n_; ++j) {
      int need = std::max(0, k_min_ - size_[j]);
      if (cover_[j] < c_) {
        if (remaining == 0 || pool_best == 0) return true;
        int reachable = 0;
        work_ += static_cast<std::uint64_t>(words_);
        for (int w = 0; w < words_; ++w) {
          reachable += std::popcount(mask_[j * words_ + w] | pool[w]);
        }
        if (reachable < c_) return true;
        const int missing = c_ - cover_[j];
        const int skill_need = (missing + pool_best - 1) / pool_best;
        if (skill_need > k_max_ - size_[j]) return true;
        need = std::max(need, skill_need);
      }
      needed += need;
    }
    if (needed > remaining) return true;

    if (terms_.empty() && !has_forbidden_) return false;

    // Bounds and forward checking over the unassigned students.
    const int terms = static_cast<int>(terms_.size());
    std::fill(compat_.begin(), compat_.end(), 0);
    work_ += static_cast<std::uint64_t>(n_);
    std::vector<ObjectiveValue>& bound2 = bound_scratch_;
    bound2.assign(terms, 0);
    const int slots = k_max_ - 1;
    for (int d = depth; d < m_; ++d) {
      const int u = options_.order[d];
      for (int k = 0; k < terms; ++k) {
        const auto& term = terms_[k];
        long long* prefix = prefix_.data() + k * k_max_;
        prefix[0] = 0;
        int taken = 0;
        for (int e = term.offset[u]; e < term.offset[u + 1] && taken < slots; ++e) {
          ++work_;
          const int v = term.entries[e].second;
          if (pos_[v] < depth) continue;
          ++taken;
          prefix[taken] = prefix[taken - 1] + term.entries[e].first;
        }
        for (int t = taken + 1; t <= slots; ++t) prefix[t] = prefix[taken];
        work_ += static_cast<std::uint64_t>(slots);
      }

      bool any = false;
      bool empty_seen = false;
      for (int k = 0; k < terms; ++k) best_scratch_[k] = kMinusInf;
      for (int j = 0; j < n_; ++j) {
        if (size_[j] >= k_max_) continue;
        if (has_forbidden_ && conflict_[u * n_ + j] > 0) continue;
        if (size_[j] < k_min_) ++compat_[j];
        if (size_[j] == 0) {
          if (empty_seen) continue;
          empty_seen = true;
        }
        any = true;
        const int free_slots = k_max_ - size_[j] - 1;
        for (int k = 0; k < terms; ++k) {
          const long long value = 2LL * terms_[k].gain[u * n_ + j] +
                                  prefix_[k * k_max_ + free_slots];
          best_scratch_[k] = std::max(best_scratch_[k], value);
        }
      }
      work_ += static_cast<std::uint64_t>(n_) * (terms + 1);
      if (!any) return true;
      for (int k = 0; k < terms; ++k) bound2[k] += best_scratch_[k];
    }

    if (has_forbidden_) {
      for (int j = 0; j < n_; ++j) {
        if (size_[j] > 0 && size_[j] < k_min_ && compat_[j] < k_min_ - size_[j]) {
          return true;
        }
      }
    }

    for (int k = 0; k < terms; ++k) {
      const long long total2 = 2LL * terms_[k].current + bound2[k];
      if (k == 0 && has_objective_) {
        if (have_best_ && total2 <= 2LL * result_.best_value) return true;
      } else if (total2 < 2LL * terms_[k].at_least) {
        return true;
      }
    }
    return false;
  }

  void apply(int depth, int u, int j) {
    team_of_[u] = j;
    ++size_[j];
    for (int w = 0; w < words_; ++w) {
      saved_mask_[depth * words_ + w] = mask_[j * words_ + w];
    }
    saved_cover_[depth] = cover_[j];
    saved_opened_[depth] = opened_;
    const auto skills = inst_.skill_mask(u);
    int cover = 0;
    for (int w = 0; w < words_; ++w) {
      mask_[j * words_ + w] |= skills[w];
      cover += std::popcount(mask_[j * words_ + w]);
    }
    cover_[j] = cover;
    opened_ = std::max(opened_, j + 1);

    for (auto& term : terms_) {
      term.current += term.gain[u * n_ + j];
      const auto& w = *term.weights;
      for (int d = depth + 1; d < m_; ++d) {
        const int v = options_.order[d];
        term.gain[v * n_ + j] += w(v, u);
      }
    }
    if (has_forbidden_) {
      for (int d = depth + 1; d < m_; ++d) {
        const int v = options_.order[d];
        conflict_[v * n_ + j] += problem_.forbidden[v * m_ + u];
      }
    }
    work_ += static_cast<std::uint64_t>(m_ - depth) * (terms_.size() + 1);
  }

  void undo(int depth, int u, int j) {
    if (has_forbidden_) {
      for (int d = depth + 1; d < m_; ++d) {
        const int v = options_.order[d];
        conflict_[v * n_ + j] -= problem_.forbidden[v * m_ + u];
      }
    }
    for (auto& term : terms_) {
      const auto& w = *term.weights;
      for (int d = depth + 1; d < m_; ++d) {
        const int v = options_.order[d];
        term.gain[v * n_ + j] -= w(v, u);
      }
      term.current -= term.gain[u * n_ + j];
    }
    opened_ = saved_opened_[depth];
    cover_[j] = saved_cover_[depth];
    for (int w = 0; w < words_; ++w) {
      mask_[j * words_ + w] = saved_mask_[depth * words_ + w];
    }
    --size_[j];
    team_of_[u] = -1;
  }

  // Preference for placing u into j when there is no objective to guide
  // the dive: help teams that still miss skills, then teams below k_min.
  int feasibility_score(int u, int j) const {
    int score = 0;
    if (cover_[j] < c_) {
      const auto skills = inst_.skill_mask(u);
      int fresh = 0;
      for (int w = 0; w < words_; ++w) {
        fresh += std::popcount(skills[w] & ~mask_[j * words_ + w]);
      }
      score += 4 * std::min(fresh, c_ - cover_[j]);
    }
    if (size_[j] < k_min_) score += 2;
    return score;
  }

  bool limit_reached() {
    if (work_ >= limits_.work_budget) return true;
    if (nodes_ % kPollInterval == 0 && Clock::now() >= limits_.deadline) return true;
    return false;
  }

  void dfs(int depth) {
    if (depth == m_) {
      leaf();
      return;
    }
    const int u = options_.order[depth];
    int* cand = candidates_.data() + depth * n_;
    int count = 0;
    const int last = options_.symmetry_breaking ? std::min(opened_, n_ - 1) : n_ - 1;
    for (int j = 0; j <= last; ++j) {
      if (size_[j] >= k_max_) continue;
      if (has_forbidden_ && conflict_[u * n_ + j] > 0) continue;
      cand[count++] = j;
    }
    // Insertion sort: score desc, size desc, index asc.
    long long scores[kMaxInlineTeams];
    std::vector<long long> heap_scores;
    long long* score = scores;
    if (n_ > kMaxInlineTeams) {
      heap_scores.resize(n_);
      score = heap_scores.data();
    }
    for (int i = 0; i < count; ++i) {
      const int j = cand[i];
      score[i] = has_objective_ ? terms_[0].gain[u * n_ + j] : feasibility_score(u, j);
    }
    for (int i = 1; i < count; ++i) {
      const int j = cand[i];
      const long long s = score[i];
      int k = i - 1;
      while (k >= 0) {
        const int jk = cand[k];
        const bool before = score[k] != s ? score[k] > s
                            : size_[jk] != size_[j] ? size_[jk] > size_[j]
                                                    : jk < j;
        if (before) break;
        cand[k + 1] = cand[k];
        score[k + 1] = score[k];
        --k;
      }
      cand[k + 1] = j;
      score[k + 1] = s;
    }
    work_ += static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(count) * count;
    if (options_.hooks && options_.hooks->on_branch) {
      options_.hooks->on_branch(depth, u, std::span<const TeamIndex>(cand, count));
    }

    for (int i = 0; i < count; ++i) {
      const int j = cand[i];
      apply(depth, u, j);
      ++nodes_;
      if (limit_reached()) {
        stop_ = true;
      } else if (!prune(depth + 1)) {
        dfs(depth + 1);
      }
      undo(depth, u, j);
      if (stop_) return;
    }
  }

  void leaf() {
    if (options_.hooks && options_.hooks->on_leaf) options_.hooks->on_leaf(team_of_);
    result_.best = team_of_;
    result_.best_value = has_objective_ ? terms_[0].current : 0;
    result_.improved = true;
    result_.work_to_best = work_;
    have_best_ = true;
    found_ = true;
    if (options_.on_improve) options_.on_improve(team_of_, result_.best_value, work_);
    if (!has_objective_) stop_ = true;
  }

  static constexpr int kMaxInlineTeams = 64;
  static constexpr long long kMinusInf = std::numeric_limits<long long>::min() / 4;

  const Instance& inst_;
  const StageProblem& problem_;
  SearchLimits limits_;
  const SearchOptions& options_;
  const int m_;
  const int n_;
  const int k_min_;
  const int k_max_;
  const int c_;
  const int words_;

  std::vector<int> pos_;
  bool has_forbidden_ = false;
  bool has_objective_ = false;
  std::vector<WeightedTerm> terms_;

  std::vector<int> team_of_;
  std::vector<int> size_;
  std::vector<std::uint64_t> mask_;
  std::vector<int> cover_;
  int opened_ = 0;
  std::vector<std::uint64_t> saved_mask_;
  std::vector<int> saved_cover_;
  std::vector<int> saved_opened_;
  std::vector<int> conflict_;
  std::vector<int> candidates_;
  std::vector<int> compat_;
  std::vector<long long> prefix_;
  std::vector<std::uint64_t> suffix_union_;
  std::vector<int> suffix_max_skills_;
  std::vector<ObjectiveValue> bound_scratch_;
  long long best_scratch_[16] = {};

  SearchResult result_;
  bool have_best_ = false;
  bool found_ = false;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
  std::uint64_t work_ = 0;
};

}  // namespace

SearchResult branch_and_bound(const Instance& inst, const StageProblem& problem,
                              const SearchLimits& limits,
                              const SearchOptions& options,
                              const std::vector<TeamIndex>* incumbent) {
  if (problem.thresholds.size() + 1 > 16) {
    throw Error(Errc::InvalidArgument, "at most 15 threshold terms are supported");
  }
  Search search(inst, problem, limits, options);
  return search.run(incumbent);
}

}  // namespace teamforge::detail
