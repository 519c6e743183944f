#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json_codec.hpp"
#include "polyspace/catalog.hpp"
#include "polyspace/lp.hpp"
#include "polyspace/realize.hpp"

namespace polyspace {

namespace {

__extension__ using Wide = __int128;

enum Status : std::uint8_t { kUndecided, kIn, kForcedOut, kChosenOut };

// Candidate subgees T of [n-1] with 1 <= |T| <= n-3, listed in a linear
// extension of the Gale order (Gale order strictly increases the sum).
struct Element {
  IndexSet set;
  std::vector<std::size_t> below;
  std::vector<std::size_t> above;
  IntegerConstraint short_row;
  IntegerConstraint long_row;
  IndexSet bar;
};

struct Task {
  std::size_t index = 0;
  std::vector<std::uint8_t> status;
  std::vector<std::int64_t> witness;
};

class Search {
 public:
  explicit Search(int n) : n_(n) {
    std::vector<IndexSet> sets;
    const std::uint64_t full = IndexSet::interval(n - 1).mask();
    for (std::uint64_t m = full; m != 0; m = (m - 1) & full) {
      const auto s = IndexSet::from_mask(m);
      if (s.size() <= n - 3) sets.push_back(s);
    }
    auto weight = [](const IndexSet& s) {
      int w = 0;
      for (int x : s.descending()) w += x;
      return w;
    };
    std::sort(sets.begin(), sets.end(), [&](const IndexSet& a, const IndexSet& b) {
      const int wa = weight(a);
      const int wb = weight(b);
      return wa != wb ? wa < wb : a.mask() < b.mask();
    });
    std::map<std::uint64_t, std::size_t> position;
    for (std::size_t i = 0; i < sets.size(); ++i) position[sets[i].mask()] = i;
    for (const auto& s : sets) {
      Element e;
      e.set = s;
      for (const auto& p : gale_covers_below(s)) {
        if (p.empty()) continue;
        e.below.push_back(position.at(p.mask()));
      }
      for (const auto& q : gale_covers_above(s, n - 1)) {
        const auto it = position.find(q.mask());
        if (it != position.end()) e.above.push_back(it->second);
      }
      e.short_row = shortness_row(n, s, true);
      e.long_row = shortness_row(n, s, false);
      e.bar = gee_bar(s, n);
      elements_.push_back(std::move(e));
    }
    IntegerConstraint positive;
    positive.coeffs.assign(static_cast<std::size_t>(n), 0);
    positive.coeffs[0] = 1;
    base_rows_.push_back(positive);
    for (int i = 1; i < n; ++i) {
      IntegerConstraint order;
      order.relation = Relation::Weak;
      order.coeffs.assign(static_cast<std::size_t>(n), 0);
      order.coeffs[static_cast<std::size_t>(i)] = 1;
      order.coeffs[static_cast<std::size_t>(i - 1)] = -1;
      base_rows_.push_back(std::move(order));
    }
    base_rows_.push_back(shortness_row(n, IndexSet{}, true));
  }

  // Root state: only the base constraints; {n} short is always satisfiable.
  Task root() const {
    Task t;
    t.status.assign(elements_.size(), kUndecided);
    const auto sol = solve({});
    if (!sol) throw InternalError("base realization system infeasible");
    t.witness = *sol;
    return t;
  }

  // Expands until `depth` binary choices have been made, collecting the
  // resulting subtrees in a deterministic order.
  void split(Task task, int depth, std::vector<Task>& out) const {
    status_ = std::move(task.status);
    frontier_ = &out;
    split_depth_ = depth;
    explore(task.index, task.witness, 0);
    frontier_ = nullptr;
  }

  void run(Task task, std::vector<GeneticCode>& leaves) const {
    status_ = std::move(task.status);
    leaves_ = &leaves;
    explore(task.index, task.witness, 0);
    leaves_ = nullptr;
  }

 private:
  std::optional<std::vector<std::int64_t>> solve(const std::vector<const IntegerConstraint*>& extra) const {
    std::vector<IntegerConstraint> rows = base_rows_;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (status_.empty()) break;
      if (status_[i] == kIn) {
        const auto& above = elements_[i].above;
        const bool maximal =
            std::none_of(above.begin(), above.end(), [&](std::size_t j) { return status_[j] == kIn; });
        if (maximal) rows.push_back(elements_[i].short_row);
      } else if (status_[i] == kChosenOut) {
        rows.push_back(elements_[i].long_row);
      }
    }
    for (const auto* r : extra) rows.push_back(*r);
    const auto result = max_slack(n_, rows, true);
    if (!result.feasible) return std::nullopt;
    std::vector<std::int64_t> w;
    for (const auto& v : result.numerators) {
      if (!v.fits_slong_p()) throw InternalError("witness coordinate exceeds 64 bits");
      w.push_back(v.get_si());
    }
    return w;
  }

  static int side(const IntegerConstraint& short_row, const std::vector<std::int64_t>& w) {
    Wide s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<Wide>(short_row.coeffs[i]) * w[i];
    return s > 0 ? 1 : (s < 0 ? -1 : 0);
  }

  bool glem_blocks(std::size_t idx) const {
    const auto& e = elements_[idx];
    if (gale_leq(e.bar, e.set)) return true;
    for (std::size_t i = 0; i < idx; ++i) {
      if (status_[i] != kIn) continue;
      if (gale_leq(e.bar, elements_[i].set) || gale_leq(elements_[i].bar, e.set)) return true;
    }
    return false;
  }

  void explore(std::size_t idx, const std::vector<std::int64_t>& witness, int depth) const {
    if (frontier_ != nullptr && depth == split_depth_) {
      frontier_->push_back(Task{idx, status_, witness});
      return;
    }
    if (idx == elements_.size()) {
      if (leaves_ != nullptr) leaves_->push_back(leaf_code());
      if (frontier_ != nullptr) frontier_->push_back(Task{idx, status_, witness});
      return;
    }
    const auto& e = elements_[idx];
    const bool forced = std::any_of(e.below.begin(), e.below.end(),
                                    [&](std::size_t j) { return status_[j] != kIn; });
    if (forced) {
      status_[idx] = kForcedOut;
      explore(idx + 1, witness, depth);
      status_[idx] = kUndecided;
      return;
    }
    const int at_witness = side(e.short_row, witness);
    std::vector<std::pair<bool, std::vector<std::int64_t>>> children;
    for (const bool in : {true, false}) {
      if (in && glem_blocks(idx)) continue;
      if ((in && at_witness > 0) || (!in && at_witness < 0)) {
        children.emplace_back(in, witness);
      } else if (auto sol = solve({in ? &e.short_row : &e.long_row})) {
        children.emplace_back(in, std::move(*sol));
      }
    }
    // Only genuine two-way splits count towards the fan-out depth.
    const int next_depth = depth + (children.size() == 2 ? 1 : 0);
    for (const auto& [in, next] : children) {
      status_[idx] = in ? kIn : kChosenOut;
      explore(idx + 1, next, next_depth);
      status_[idx] = kUndecided;
    }
  }

  GeneticCode leaf_code() const {
    std::vector<IndexSet> gees;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (status_[i] != kIn) continue;
      const auto& above = elements_[i].above;
      if (std::none_of(above.begin(), above.end(), [&](std::size_t j) { return status_[j] == kIn; })) {
        gees.push_back(elements_[i].set);
      }
    }
    if (gees.empty()) gees.push_back(IndexSet{});
    return canonicalize(std::move(gees), n_);
  }

  int n_;
  std::vector<Element> elements_;
  std::vector<IntegerConstraint> base_rows_;

  // Per-run scratch; a Search is used by one thread at a time.
  mutable std::vector<std::uint8_t> status_;
  mutable std::vector<Task>* frontier_ = nullptr;
  mutable std::vector<GeneticCode>* leaves_ = nullptr;
  mutable int split_depth_ = 0;
};

// The search tree is lopsided (one long spine of mostly-in decisions), so
// the split depth grows until there are enough subtrees to balance workers.
constexpr std::size_t kTargetTasks = 256;
constexpr int kMaxSplitDepth = 64;

CatalogEntry make_entry(const GeneticCode& code) {
  auto witness = is_realizable(code);
  if (!witness) throw InternalError("enumerated code " + format_code(code) + " failed realization");
  return CatalogEntry{code, std::move(*witness), std::nullopt};
}

class Checkpoint {
 public:
  Checkpoint(std::string path, int n, std::size_t tasks) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    if (in && std::getline(in, line)) {
      const auto header = nlohmann::json::parse(line);
      if (header.value("n", 0) != n || header.value("tasks", std::size_t{0}) != tasks) {
        throw std::invalid_argument("checkpoint " + path_ + " belongs to a different run");
      }
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j;
        try {
          j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception&) {
          break;  // truncated final line from an interrupted run
        }
        std::vector<CatalogEntry> entries;
        for (const auto& e : j.at("entries")) entries.push_back(detail::entry_from_json(e));
        done_[j.at("task").get<std::size_t>()] = std::move(entries);
      }
    } else {
      std::ofstream out(path_, std::ios::trunc);
      nlohmann::ordered_json header{{"checkpoint", "polyspace-enumerate"}, {"n", n}, {"tasks", tasks}};
      out << header.dump() << '\n';
    }
  }

  const std::vector<CatalogEntry>* find(std::size_t task) const {
    const auto it = done_.find(task);
    return it == done_.end() ? nullptr : &it->second;
  }

  void record(std::size_t task, const std::vector<CatalogEntry>& entries) {
    if (path_.empty()) return;
    nlohmann::ordered_json j{{"task", task}, {"entries", nlohmann::ordered_json::array()}};
    for (const auto& e : entries) j["entries"].push_back(detail::entry_to_json(e));
    std::lock_guard<std::mutex> lock(mutex_);
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << '\n';
  }

 private:
  std::string path_;
  std::map<std::size_t, std::vector<CatalogEntry>> done_;
  std::mutex mutex_;
};

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < std::min<std::size_t>(jobs, count); ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<CatalogEntry> enumerate_codes(int n, const EnumerateOptions& options) {
  if (n < kMinEnumerateN || n > kMaxEnumerateN) {
    throw std::invalid_argument("enumeration supports " + std::to_string(kMinEnumerateN) +
                                " <= n <= " + std::to_string(kMaxEnumerateN));
  }
  if (n == kMaxEnumerateN && !options.allow_long) {
    throw std::invalid_argument("n = 9 runs for hours; pass allow_long to request it");
  }
  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;

  const Search prototype(n);
  std::vector<Task> tasks;
  {
    Search splitter = prototype;
    const Task root = splitter.root();
    for (int depth = 8; depth <= kMaxSplitDepth; depth += 2) {
      std::vector<Task> next;
      splitter.split(root, depth, next);
      const bool saturated = next.size() == tasks.size();
      tasks = std::move(next);
      if (tasks.size() >= kTargetTasks || saturated) break;
    }
  }

  Checkpoint checkpoint(options.checkpoint_path, n, tasks.size());
  std::vector<std::vector<CatalogEntry>> results(tasks.size());
  std::atomic<std::size_t> finished{0};
  std::mutex progress_mutex;
  parallel_for(tasks.size(), jobs, [&](std::size_t i) {
    if (const auto* saved = checkpoint.find(i)) {
      results[i] = *saved;
    } else {
      Search worker = prototype;
      std::vector<GeneticCode> leaves;
      worker.run(tasks[i], leaves);
      for (const auto& code : leaves) results[i].push_back(make_entry(code));
      checkpoint.record(i, results[i]);
    }
    const auto done = ++finished;
    if (options.progress) {
      std::lock_guard<std::mutex> lock(progress_mutex);
      options.progress(done, tasks.size());
    }
  });

  std::vector<CatalogEntry> all;
  for (auto& r : results) {
    for (auto& e : r) all.push_back(std::move(e));
  }
  std::sort(all.begin(), all.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return code_less(a.code, b.code); });
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i - 1].code == all[i].code) {
      throw InternalError("code " + format_code(all[i].code) + " enumerated twice");
    }
  }
  if (options.with_reports) {
    parallel_for(all.size(), jobs, [&](std::size_t i) { all[i].report = make_report(all[i].code); });
  }
  return all;
}

std::size_t census(int n, const EnumerateOptions& options) {
  EnumerateOptions plain = options;
  plain.with_reports = false;
  return enumerate_codes(n, plain).size();
}

}  // namespace polyspace
