// Copyright 2026 The kfx Authors
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

#include "kfx/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <string_view>
#include <thread>
#include <unordered_set>

#include "kfx/closed_forms.hpp"
#include "kfx/errors.hpp"
#include "kfx/families.hpp"
#include "kfx/metrics.hpp"

namespace kfx {

const char* degree_mode_name(DegreeMode m) { return m == DegreeMode::Exact ? "exact" : "at-most"; }
const char* objective_name(Objective o) { return o == Objective::Max ? "max" : "min"; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "match";
    case Verdict::Mismatch:
      return "mismatch";
    case Verdict::NotApplicable:
      break;
  }
  return "not-applicable";
}

std::vector<RootedTree> rooted_trees(int size) {
  if (size < 1) throw InvalidParameter("rooted trees need at least one node");
  std::vector<int> levels(static_cast<std::size_t>(size));
  std::iota(levels.begin(), levels.end(), 0);
  std::vector<RootedTree> out;
  while (true) {
    out.push_back(RootedTree::from_levels(levels));
    int p = size - 1;
    while (p > 0 && levels[static_cast<std::size_t>(p)] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (levels[static_cast<std::size_t>(q)] != levels[static_cast<std::size_t>(p)] - 1) --q;
    for (int i = p; i < size; ++i) {
      levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
    }
  }
  return out;
}

std::vector<BigInt> rooted_tree_counts(int max_size) {
  // a(m+1) = (1/m) sum_{k=1..m} (sum_{d|k} d a(d)) a(m-k+1)
  std::vector<BigInt> a(static_cast<std::size_t>(std::max(max_size, 1)) + 1, 0);
  a[1] = 1;
  for (int m = 1; m < max_size; ++m) {
    BigInt sum = 0;
    for (int k = 1; k <= m; ++k) {
      BigInt inner = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) inner += d * a[static_cast<std::size_t>(d)];
      }
      sum += inner * a[static_cast<std::size_t>(m - k + 1)];
    }
    a[static_cast<std::size_t>(m + 1)] = sum / m;
  }
  return a;
}

namespace {

// Rooted-tree l-tuples with sizes summing to n, summed over l in [lo, hi].
BigInt tuple_count(int n, int lo, int hi) {
  const auto r = rooted_tree_counts(n);
  // power[m] = [z^m] R(z)^l, advanced one l at a time.
  std::vector<BigInt> power(static_cast<std::size_t>(n) + 1, 0);
  power[0] = 1;
  BigInt total = 0;
  for (int l = 1; l <= hi; ++l) {
    std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 0; m <= n; ++m) {
      if (power[static_cast<std::size_t>(m)] == 0) continue;
      for (int k = 1; m + k <= n; ++k) {
        next[static_cast<std::size_t>(m + k)] += power[static_cast<std::size_t>(m)] * r[static_cast<std::size_t>(k)];
      }
    }
    power = std::move(next);
    if (l >= lo) total += power[static_cast<std::size_t>(n)];
  }
  return total;
}

BigInt estimated_classes(int n, int lo, int hi) {
  if (n < 3 || hi < lo) return 0;
  return tuple_count(n, lo, hi) / (2 * n);
}

struct TreeInfo {
  RootedTree tree;
  std::string code;
  int root_children = 0;
  int max_nonroot_degree = 0;
};

std::vector<TreeInfo> tree_infos(int size) {
  std::vector<TreeInfo> out;
  for (auto& t : rooted_trees(size)) {
    TreeInfo info;
    const auto kids = t.child_counts();
    info.root_children = kids[0];
    for (std::size_t k = 1; k < kids.size(); ++k) info.max_nonroot_degree = std::max(info.max_nonroot_degree, kids[k] + 1);
    info.code = rooted_tree_code(t);
    info.tree = std::move(t);
    out.push_back(std::move(info));
  }
  return out;
}

int tree_degree(const TreeInfo& t) { return std::max(t.root_children + 2, t.max_nonroot_degree); }

struct Unit {
  int cycle_length;
  std::vector<int> sizes;
};

bool dihedral_minimal(const std::vector<int>& sizes) {
  const std::size_t l = sizes.size();
  std::vector<int> image(l);
  for (int dir : {1, -1}) {
    for (std::size_t s = 0; s < l; ++s) {
      for (std::size_t i = 0; i < l; ++i) image[i] = sizes[dir > 0 ? (s + i) % l : (s + l - i) % l];
      if (image < sizes) return false;
    }
  }
  return true;
}

void compositions(int remaining, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  for (int k = 1; k <= remaining - (parts - 1); ++k) {
    prefix.push_back(k);
    compositions(remaining - k, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

struct Plan {
  std::vector<Unit> units;
  std::vector<std::vector<TreeInfo>> trees;  // filtered by degree, indexed by size
};

Plan make_plan(const EnumerationOptions& opt) {
  if (opt.n < 3) throw InvalidParameter("unicyclic graphs need n >= 3");
  const int lo = std::max(3, opt.min_cycle_length);
  const int hi = std::min(opt.n, opt.max_cycle_length.value_or(opt.n));
  if (opt.delta && (*opt.delta < 2 || *opt.delta > opt.n - 1)) {
    throw InvalidParameter("maximum degree must satisfy 2 <= delta <= n - 1");
  }
  const BigInt estimate = estimated_classes(opt.n, lo, hi);
  if (estimate > BigInt(static_cast<unsigned long>(opt.cap))) {
    throw CapExceeded("estimated class count " + estimate.get_str() + " exceeds cap " + std::to_string(opt.cap));
  }

  Plan plan;
  plan.trees.resize(static_cast<std::size_t>(opt.n) + 1);
  const int max_tree = opt.n - lo + 1;
  for (int size = 1; size <= max_tree && size <= opt.n; ++size) {
    for (auto& info : tree_infos(size)) {
      if (opt.delta && tree_degree(info) > *opt.delta) continue;
      plan.trees[static_cast<std::size_t>(size)].push_back(std::move(info));
    }
  }
  for (int l = lo; l <= hi; ++l) {
    std::vector<std::vector<int>> comps;
    std::vector<int> prefix;
    compositions(opt.n, l, prefix, comps);
    for (auto& c : comps) {
      if (dihedral_minimal(c)) plan.units.push_back(Unit{l, std::move(c)});
    }
  }
  return plan;
}

// Calls visit(code, trees-in-cycle-order) once per new class in the unit.
template <class Visit>
void enumerate_unit(const Plan& plan, const Unit& unit, const EnumerationOptions& opt,
                    std::atomic<std::uint64_t>& class_count, Visit&& visit) {
  const std::size_t l = unit.sizes.size();
  std::vector<const std::vector<TreeInfo>*> lists(l);
  for (std::size_t i = 0; i < l; ++i) {
    lists[i] = &plan.trees[static_cast<std::size_t>(unit.sizes[i])];
    if (lists[i]->empty()) return;
  }
  std::vector<std::size_t> idx(l, 0);
  std::vector<std::string_view> codes(l);
  std::unordered_set<std::string> seen;
  while (true) {
    int degree = 0;
    for (std::size_t i = 0; i < l; ++i) {
      const TreeInfo& t = (*lists[i])[idx[i]];
      degree = std::max(degree, tree_degree(t));
      codes[i] = t.code;
    }
    const bool keep = !opt.delta || opt.degree_mode == DegreeMode::AtMost ? true : degree == *opt.delta;
    if (keep) {
      CanonicalCode code = canonical_code_from_tree_codes(codes);
      if (seen.insert(code.str()).second) {
        if (class_count.fetch_add(1) + 1 > opt.cap) {
          throw CapExceeded("class count exceeds cap " + std::to_string(opt.cap));
        }
        std::vector<RootedTree> trees;
        trees.reserve(l);
        for (std::size_t i = 0; i < l; ++i) trees.push_back((*lists[i])[idx[i]].tree);
        visit(std::move(code), UnicyclicRepr(std::move(trees)), degree);
      }
    }
    std::size_t pos = l;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < lists[pos]->size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

template <class Fn>
void run_parallel(std::size_t count, int workers, Fn fn) {
  const auto threads = static_cast<std::size_t>(std::max(1, workers));
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, count); ++t) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

BigInt estimated_unicyclic_classes(int n) { return estimated_classes(n, 3, n); }

std::vector<EnumeratedGraph> enumerate_unicyclic(const EnumerationOptions& options) {
  const Plan plan = make_plan(options);
  std::vector<std::vector<EnumeratedGraph>> per_unit(plan.units.size());
  std::atomic<std::uint64_t> count{0};
  run_parallel(plan.units.size(), options.workers, [&](std::size_t u) {
    enumerate_unit(plan, plan.units[u], options, count, [&](CanonicalCode code, UnicyclicRepr repr, int) {
      per_unit[u].push_back(EnumeratedGraph{std::move(code), std::move(repr)});
    });
  });
  std::vector<EnumeratedGraph> out;
  for (auto& list : per_unit) {
    for (auto& g : list) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.code < b.code; });
  return out;
}

std::vector<TreeClass> enumerate_trees(int n, std::optional<int> delta, DegreeMode mode) {
  if (n < 1) throw InvalidParameter("trees need n >= 1");
  std::map<CanonicalCode, Graph> classes;
  for (const auto& t : rooted_trees(n)) {
    std::vector<Edge> edges;
    for (int k = 1; k < t.size(); ++k) edges.emplace_back(t.parent(k), k);
    Graph g(n, std::move(edges));
    if (delta) {
      const int d = max_degree(g);
      if (mode == DegreeMode::Exact ? d != *delta : d > *delta) continue;
    }
    CanonicalCode code = canonical_tree_code(g);
    classes.emplace(std::move(code), std::move(g));
  }
  std::vector<TreeClass> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(TreeClass{code, g});
  return out;
}

namespace {

struct LocalExtremum {
  std::uint64_t count = 0;
  std::optional<BigRational> value;
  std::vector<CanonicalCode> codes;
  std::vector<ClassRecord> records;

  void offer(const CanonicalCode& code, const BigRational& kf, Objective objective) {
    ++count;
    if (!value || (objective == Objective::Max ? kf > *value : kf < *value)) {
      value = kf;
      codes.assign(1, code);
    } else if (kf == *value) {
      codes.push_back(code);
    }
  }

  void merge(LocalExtremum&& other, Objective objective) {
    count += other.count;
    for (auto& r : other.records) records.push_back(std::move(r));
    if (!other.value) return;
    if (!value || (objective == Objective::Max ? *other.value > *value : *other.value < *value)) {
      value = std::move(other.value);
      codes = std::move(other.codes);
    } else if (*other.value == *value) {
      for (auto& c : other.codes) codes.push_back(std::move(c));
    }
  }
};

CanonicalCode code_of(const Graph& g) { return canonical_code(g); }

int hub_cycle_length(int n, int x, int delta) { return n - x * (delta - 2); }

// Fills the formula comparison for a finished exhaustive or formula-only report.
void attach_formula(ExtremalReport& r) {
  const bool exact = r.degree_mode == DegreeMode::Exact;
  if (!exact || r.delta < 3 || r.n < r.delta + 1) return;
  if (r.objective == Objective::Max) {
    if (r.l_filter) {
      if (r.n < *r.l_filter + r.delta - 2) return;
      r.formula_name = "kf-a";
      r.formula_value = kf_a_formula(r.n, *r.l_filter, r.delta);
      r.expected_code = code_of(make_graph_a(r.n, *r.l_filter, r.delta));
    } else {
      r.formula_name = "theorem-bound";
      r.formula_value = theorem_bound(r.n, r.delta);
      r.expected_code = code_of(make_p3_extremal(r.n, r.delta));
    }
    return;
  }
  if (r.l_filter) return;
  const bool branch_i = r.n <= 10 || (r.n == 11 && r.delta >= 5);
  if (branch_i) {
    r.branch = "i";
    r.formula_name = "conj-min-i";
    r.formula_value = conj_min_formula_i(r.n, r.delta);
    r.expected_code = code_of(make_conj_min_i(r.n, r.delta));
    return;
  }
  r.branch = "ii";
  const auto xs = admissible_x(r.n, r.delta);
  if (xs.empty()) {
    r.notes.push_back("no admissible x for branch (ii)");
    return;
  }
  r.formula_name = "conj-min-ii";
  for (int x : xs) {
    const BigRational v = conj_min_formula_ii(r.n, r.delta, x);
    if (!r.formula_value || v < *r.formula_value) {
      r.formula_value = v;
      r.formula_x = x;
    }
  }
  r.expected_code = code_of(make_conj_min_ii(r.n, r.delta, *r.formula_x));
  // Same hub construction without the upper bound l <= x + delta - 2.
  std::optional<BigRational> relaxed;
  int relaxed_x = 0;
  for (int x = 1; hub_cycle_length(r.n, x, r.delta) >= 3 && x <= hub_cycle_length(r.n, x, r.delta); ++x) {
    const BigRational v = conj_min_formula_ii(r.n, r.delta, x);
    if (!relaxed || v < *relaxed) {
      relaxed = v;
      relaxed_x = x;
    }
  }
  if (relaxed && *relaxed < *r.formula_value) {
    r.notes.push_back("construction (ii) with x = " + std::to_string(relaxed_x) + " outside the admissible range gives " +
                      relaxed->to_fraction());
  }
}

void decide_verdict(ExtremalReport& r) {
  if (!r.formula_value || !r.extremal_value) {
    r.verdict = Verdict::NotApplicable;
    return;
  }
  bool ok = *r.formula_value == *r.extremal_value;
  if (r.expected_code) {
    const bool attained = std::binary_search(r.argext_codes.begin(), r.argext_codes.end(), *r.expected_code);
    if (r.objective == Objective::Max) {
      // The maximum is claimed to be attained uniquely by the expected graph.
      ok = ok && r.argext_codes.size() == 1 && attained;
    } else if (!attained) {
      r.notes.push_back("conjectured graph is not among the minimizers");
    }
  }
  if (!ok && !r.argext_codes.empty()) {
    r.notes.push_back("witness " + r.argext_codes.front().str());
  }
  r.verdict = ok ? Verdict::Match : Verdict::Mismatch;
}

}  // namespace

SearchResult search_extremal(const SearchOptions& options) {
  const EnumerationOptions& enumeration = options.enumeration;
  const Plan plan = make_plan(enumeration);
  std::vector<LocalExtremum> partial(plan.units.size());
  std::atomic<std::uint64_t> count{0};
  run_parallel(plan.units.size(), enumeration.workers, [&](std::size_t u) {
    enumerate_unit(plan, plan.units[u], enumeration, count, [&](CanonicalCode code, UnicyclicRepr repr, int degree) {
      BigRational kf = kirchhoff_index(repr, Engine::Structural);
      partial[u].offer(code, kf, options.objective);
      if (options.collect_all) {
        partial[u].records.push_back(ClassRecord{std::move(code), repr.cycle_length(), degree, std::move(kf)});
      }
    });
  });
  LocalExtremum total;
  for (auto& p : partial) total.merge(std::move(p), options.objective);
  std::sort(total.codes.begin(), total.codes.end());
  std::sort(total.records.begin(), total.records.end(), [](const auto& a, const auto& b) { return a.code < b.code; });

  SearchResult result;
  ExtremalReport& r = result.report;
  r.n = enumeration.n;
  r.delta = enumeration.delta.value_or(0);
  if (enumeration.max_cycle_length && *enumeration.max_cycle_length == enumeration.min_cycle_length) {
    r.l_filter = enumeration.min_cycle_length;
  }
  r.objective = options.objective;
  r.degree_mode = enumeration.degree_mode;
  r.graph_count = total.count;
  r.extremal_value = total.value;
  r.argext_codes = std::move(total.codes);
  result.records = std::move(total.records);
  const bool unrestricted = enumeration.min_cycle_length <= 3 &&
                            (!enumeration.max_cycle_length || *enumeration.max_cycle_length >= enumeration.n);
  if (enumeration.delta && (unrestricted || r.l_filter)) {
    attach_formula(r);
  }
  decide_verdict(r);
  return result;
}

ExtremalReport verify_theorem(int n, int delta, const RunLimits& limits) {
  if (delta < 3 || n < delta + 1) throw InvalidParameter("theorem check needs delta >= 3 and n >= delta + 1");
  const int l_max = n - delta + 2;  // n >= l + delta - 2

  if (estimated_classes(n, 3, l_max) > BigInt(static_cast<unsigned long>(limits.cap))) {
    ExtremalReport r;
    r.n = n;
    r.delta = delta;
    r.mode = "formula-only";
    r.extremal_value = kirchhoff_index(make_p3_extremal(n, delta), Engine::Structural);
    r.argext_codes = {code_of(make_p3_extremal(n, delta))};
    r.formula_name = "theorem-bound";
    r.formula_value = theorem_bound(n, delta);
    r.expected_code = r.argext_codes.front();
    r.verdict = *r.extremal_value == *r.formula_value ? Verdict::Match : Verdict::Mismatch;
    r.notes.push_back("enumeration exceeds cap; compared Kf(P3 extremal graph) with the bound only");
    return r;
  }

  SearchOptions opt;
  opt.enumeration.n = n;
  opt.enumeration.delta = delta;
  opt.enumeration.max_cycle_length = l_max;
  opt.enumeration.cap = limits.cap;
  opt.enumeration.workers = limits.workers;
  opt.objective = Objective::Max;
  auto result = search_extremal(opt);
  ExtremalReport r = std::move(result.report);
  r.l_filter.reset();
  r.formula_name = "theorem-bound";
  r.formula_value = theorem_bound(n, delta);
  r.expected_code = code_of(make_p3_extremal(n, delta));
  r.notes.clear();
  decide_verdict(r);

  // Cycle lengths outside the hypothesis: reported, never asserted.
  if (l_max < n) {
    SearchOptions outside = opt;
    outside.enumeration.min_cycle_length = l_max + 1;
    outside.enumeration.max_cycle_length = n;
    const auto extra = search_extremal(outside).report;
    std::string note = "outside hypothesis (l > n - delta + 2): " + std::to_string(extra.graph_count) + " classes";
    if (extra.extremal_value && *extra.extremal_value > *r.formula_value) note += ", some exceed the bound";
    r.notes.push_back(note);
  }
  return r;
}

ExtremalReport probe_conjecture(int n, int delta, const RunLimits& limits) {
  if (delta < 3 || n < delta + 1) throw InvalidParameter("conjecture probe needs delta >= 3 and n >= delta + 1");
  SearchOptions opt;
  opt.enumeration.n = n;
  opt.enumeration.delta = delta;
  opt.enumeration.cap = limits.cap;
  opt.enumeration.workers = limits.workers;
  opt.objective = Objective::Min;
  return search_extremal(opt).report;
}

bool LemmaReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const LemmaResult& r) { return !r.asserted || r.passed(); });
}

namespace {

void record_violation(LemmaResult& r, const std::string& what) {
  if (r.violations++ == 0) r.first_violation = what;
}

std::string params_text(int n, int l, int delta) {
  return "n=" + std::to_string(n) + " l=" + std::to_string(l) + " delta=" + std::to_string(delta);
}

RootedTree rooted_path(int size) {
  RootedTreeBuilder b;
  b.add_path(0, size - 1);
  return b.build();
}

int repr_max_degree_tree(const UnicyclicRepr& u, int delta) {
  for (int i = 0; i < u.cycle_length(); ++i) {
    const auto& t = u.trees()[static_cast<std::size_t>(i)];
    const auto kids = t.child_counts();
    if (kids[0] + 2 == delta) return i;
    for (std::size_t k = 1; k < kids.size(); ++k) {
      if (kids[k] + 1 == delta) return i;
    }
  }
  return -1;
}

}  // namespace

LemmaReport check_lemma_properties(const LemmaOptions& options) {
  LemmaReport report;
  report.options = options;
  LemmaResult replace{"path-replacement", "replacing non-hub hanging trees by pendant paths never decreases Kf; strictly increases it when a tree changes"};
  LemmaResult members{"family-maximizer", "every Kf maximizer over G(n,l,delta) is a tadpole-with-hub family member"};
  LemmaResult members_strong{"family-dominates", "every non-member has smaller Kf than every family member"};
  members_strong.asserted = false;
  LemmaResult broom{"broom-wiener", "among trees with maximum degree delta, W is uniquely maximized by the broom T(n,delta)"};
  LemmaResult hub{"hub-on-cycle", "within the family, Kf is uniquely maximized with the hub on the cycle (hub_pos = 0)"};
  LemmaResult single_hub{"single-hub-maximizer", "the theorem maximizer has exactly one vertex of maximum degree"};
  single_hub.asserted = false;

  for (int n = 4; n <= options.n_max; ++n) {
    for (int delta = 3; delta <= n - 1; ++delta) {
      for (int l = 3; l <= n - delta + 2; ++l) {
        EnumerationOptions eo;
        eo.n = n;
        eo.delta = delta;
        eo.cap = options.limits.cap;
        eo.workers = options.limits.workers;
        eo.only_cycle_length(l);
        const auto classes = enumerate_unicyclic(eo);

        // Family members and their Kf by hub position.
        std::vector<CanonicalCode> member_codes;
        std::vector<BigRational> member_kf;
        for (int h = 0; h <= max_hub_pos(n, l, delta); ++h) {
          const auto repr = p_family_member_repr(n, l, delta, h);
          member_codes.push_back(canonical_code(repr));
          member_kf.push_back(kirchhoff_index(repr));
        }
        ++hub.instances;
        for (std::size_t h = 1; h < member_kf.size(); ++h) {
          if (member_kf[h] >= member_kf[0]) {
            record_violation(hub, params_text(n, l, delta) + " hub_pos=" + std::to_string(h));
          }
        }
        std::sort(member_codes.begin(), member_codes.end());
        const BigRational min_member = *std::min_element(member_kf.begin(), member_kf.end());

        std::optional<BigRational> best;
        std::vector<CanonicalCode> best_codes;
        for (const auto& g : classes) {
          const BigRational kf = kirchhoff_index(g.repr);
          if (!best || kf > *best) {
            best = kf;
            best_codes.assign(1, g.code);
          } else if (kf == *best) {
            best_codes.push_back(g.code);
          }

          // Path replacement keeps the hub tree and straightens the others.
          const int hub_tree = repr_max_degree_tree(g.repr, delta);
          std::vector<RootedTree> trees = g.repr.trees();
          bool changed = false;
          for (int i = 0; i < g.repr.cycle_length(); ++i) {
            if (i == hub_tree) continue;
            auto& t = trees[static_cast<std::size_t>(i)];
            if (!t.is_rooted_path()) {
              t = rooted_path(t.size());
              changed = true;
            }
          }
          const BigRational replaced = kirchhoff_index(UnicyclicRepr(std::move(trees)));
          ++replace.instances;
          if (replaced < kf || (changed && replaced == kf)) {
            record_violation(replace, params_text(n, l, delta) + " " + g.code.str());
          }

          const bool member = std::binary_search(member_codes.begin(), member_codes.end(), g.code);
          ++members_strong.instances;
          if (!member && kf >= min_member) {
            record_violation(members_strong, params_text(n, l, delta) + " " + g.code.str());
          }
        }
        ++members.instances;
        for (const auto& c : best_codes) {
          if (!std::binary_search(member_codes.begin(), member_codes.end(), c)) {
            record_violation(members, params_text(n, l, delta) + " " + c.str());
          }
        }
      }

      // Degree-delta vertex count of the theorem maximizer.
      const Graph p3 = make_p3_extremal(n, delta);
      int hubs = 0;
      for (Vertex v = 0; v < n; ++v) hubs += p3.degree(v) == delta ? 1 : 0;
      const auto verdict = verify_theorem(n, delta, options.limits);
      ++single_hub.instances;
      if (hubs != 1 || verdict.argext_codes.size() != 1) {
        record_violation(single_hub, "n=" + std::to_string(n) + " delta=" + std::to_string(delta));
      }
    }
  }

  for (int n = 3; n <= options.tree_n_max; ++n) {
    for (int delta = 2; delta <= n - 1; ++delta) {
      const auto trees = enumerate_trees(n, delta);
      std::int64_t best = -1;
      std::vector<CanonicalCode> best_codes;
      for (const auto& t : trees) {
        const std::int64_t w = wiener(t.tree);
        if (w > best) {
          best = w;
          best_codes.assign(1, t.code);
        } else if (w == best) {
          best_codes.push_back(t.code);
        }
      }
      ++broom.instances;
      const auto expected = canonical_tree_code(make_t_n_delta(n, delta));
      if (best_codes.size() != 1 || best_codes.front() != expected || BigInt(static_cast<long>(best)) != wiener_broom_formula(n, delta)) {
        record_violation(broom, "n=" + std::to_string(n) + " delta=" + std::to_string(delta));
      }
    }
  }

  report.results = {replace, members, members_strong, broom, hub, single_hub};
  return report;
}

Graph random_unicyclic_graph(int n, std::mt19937_64& rng) {
  if (n < 3) throw InvalidParameter("unicyclic graphs need n >= 3");
  const int l = std::uniform_int_distribution<int>(3, n)(rng);
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) edges.emplace_back(i, (i + 1) % l);
  for (int v = l; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Graph(n, std::move(edges)).relabeled(perm);
}

}  // namespace kfx
