#include "xifam/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "xifam/crossing.hpp"
#include "xifam/extremal.hpp"

namespace xifam::search {

std::vector<Mask> divisible_universe(int n, Frac frac) {
  check_ground_size(n);
  std::vector<Mask> out;
  const Mask limit = full_mask(n);
  for (Mask m = 0;; ++m) {
    if (popcount(m) % frac.d() == 0) out.push_back(m);
    if (m == limit) break;
  }
  return out;
}

namespace {

struct Record {
  std::uint64_t product = 0;
  std::vector<Mask> a;
  std::vector<Mask> b;
};

// State shared by all workers of one enumerate_maximal call.
struct Shared {
  std::atomic<std::uint64_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> pruned{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<bool> violation{false};
  std::uint64_t max_nodes = 0;
  std::uint64_t power = 0;  // 2^n
  bool prune = true;
};

void raise_best(std::atomic<std::uint64_t>& best, std::uint64_t value) {
  std::uint64_t seen = best.load(std::memory_order_relaxed);
  while (value > seen && !best.compare_exchange_weak(seen, value, std::memory_order_relaxed)) {
  }
}

class Worker {
 public:
  Worker(int n, Frac frac, const std::vector<Mask>& universe, Shared& shared)
      : universe_(universe), shared_(shared), tracker_(n, frac) {}

  // Explores every family whose smallest member is universe[first].
  void explore_root_child(std::size_t first) {
    if (shared_.prune) {
      const std::uint64_t bound = tracker_.size() * (universe_.size() - first);
      if (bound < shared_.best.load(std::memory_order_relaxed)) {
        shared_.pruned.fetch_add(1, std::memory_order_relaxed);
        return;
      }
    }
    include(first);
  }

  std::vector<Record> take_records() { return std::move(records_); }

 private:
  void include(std::size_t j) {
    tracker_.push(universe_[j]);
    chosen_.push_back(universe_[j]);
    visit(j + 1);
    chosen_.pop_back();
    tracker_.pop();
  }

  void visit(std::size_t next) {
    if (shared_.budget_hit.load(std::memory_order_relaxed)) return;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) >= shared_.max_nodes) {
      shared_.budget_hit.store(true);
      return;
    }
    const std::uint64_t a_size = tracker_.size();
    const std::uint64_t product = a_size * chosen_.size();
    if (product > shared_.power) shared_.violation.store(true);
    if (product > 0 && product >= shared_.best.load(std::memory_order_relaxed)) {
      raise_best(shared_.best, product);
      record(product);
    }
    const std::size_t m = universe_.size();
    for (std::size_t j = next; j < m; ++j) {
      if (shared_.prune) {
        // Any family below this child has at most |chosen| + (m − j) members
        // and an A-side no larger than the current one. The bound only
        // shrinks as j grows, so the remaining siblings go too.
        const std::uint64_t bound = a_size * (chosen_.size() + (m - j));
        if (a_size == 0 || bound < shared_.best.load(std::memory_order_relaxed)) {
          shared_.pruned.fetch_add(1, std::memory_order_relaxed);
          break;
        }
      }
      include(j);
      if (shared_.budget_hit.load(std::memory_order_relaxed)) return;
    }
  }

  void record(std::uint64_t product) {
    if (product > local_best_) {
      records_.clear();
      local_best_ = product;
    }
    records_.push_back({product, tracker_.current(), chosen_});
  }

  const std::vector<Mask>& universe_;
  Shared& shared_;
  AMaxTracker tracker_;
  std::vector<Mask> chosen_;
  std::vector<Record> records_;
  std::uint64_t local_best_ = 0;
};

bool pair_less(const PairInstance& x, const PairInstance& y) {
  if (x.b.members() != y.b.members()) return x.b.members() < y.b.members();
  return x.a.members() < y.a.members();
}

void append_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

}  // namespace

SearchResult enumerate_maximal(int n, Frac frac, const SearchConfig& cfg) {
  check_ground_size(n);
  if (cfg.max_nodes < 1) throw InputError("max_nodes must be at least 1");
  if (cfg.canonicalize && n > kMaxCanonicalGround) {
    throw InputError("canonicalization supports n <= " + std::to_string(kMaxCanonicalGround) +
                     "; disable it for n = " + std::to_string(n));
  }

  const std::vector<Mask> universe = divisible_universe(n, frac);
  Shared shared;
  shared.max_nodes = cfg.max_nodes;
  shared.power = std::uint64_t{1} << n;
  shared.prune = cfg.prune;

  // The root (B = empty family) has product 0.
  shared.nodes.fetch_add(1);

  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(universe.size())));
  std::atomic<std::size_t> next_root{0};
  std::mutex sink_mu;
  std::vector<Record> sink;

  auto run = [&] {
    Worker worker(n, frac, universe, shared);
    for (std::size_t j = next_root.fetch_add(1); j < universe.size() && !shared.budget_hit.load();
         j = next_root.fetch_add(1)) {
      worker.explore_root_child(j);
    }
    auto records = worker.take_records();
    std::lock_guard lock(sink_mu);
    for (auto& r : records) sink.push_back(std::move(r));
  };

  if (threads == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(run);
  }

  SearchResult result;
  result.n = n;
  result.frac = frac;
  result.exhausted = !shared.budget_hit.load();
  result.nodes_visited = std::min(shared.nodes.load(), cfg.max_nodes);
  result.pruned = shared.pruned.load();
  result.bound_violation = shared.violation.load();
  result.max_product = shared.best.load();

  for (auto& r : sink) {
    if (r.product != result.max_product) continue;
    result.maximal_pairs.emplace_back(frac, Family::from_masks(n, std::move(r.a)),
                                      Family::from_masks(n, std::move(r.b)));
  }
  std::sort(result.maximal_pairs.begin(), result.maximal_pairs.end(), pair_less);

  if (cfg.canonicalize) {
    result.canonicalized = true;
    std::map<CanonicalKey, CanonicalClass> by_key;
    for (const auto& p : result.maximal_pairs) {
      CanonicalClass cls = canonical_class(p);
      auto [it, inserted] = by_key.try_emplace(cls.key, std::move(cls));
      ++it->second.count;
    }
    for (auto& [key, cls] : by_key) result.classes.push_back(std::move(cls));
  }
  return result;
}

Mask permute_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  while (m != 0) {
    const int i = std::countr_zero(m);
    out |= Mask{1} << perm[static_cast<std::size_t>(i)];
    m &= m - 1;
  }
  return out;
}

PairInstance permute_pair(const PairInstance& p, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != p.n()) throw InputError("permutation length mismatch");
  std::vector<Mask> a;
  std::vector<Mask> b;
  for (Mask m : p.a) a.push_back(permute_mask(m, perm));
  for (Mask m : p.b) b.push_back(permute_mask(m, perm));
  return PairInstance(p.frac, Family::from_masks(p.n(), std::move(a)),
                      Family::from_masks(p.n(), std::move(b)));
}

CanonicalClass canonical_class(const PairInstance& p) {
  const int n = p.n();
  if (n > kMaxCanonicalGround) {
    throw InputError("canonical form needs n <= " + std::to_string(kMaxCanonicalGround) +
                     "; disable canonicalization for n = " + std::to_string(n));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  const std::size_t table_size = std::size_t{1} << n;
  std::vector<Mask> table(table_size);
  std::vector<Mask> a(p.a.size());
  std::vector<Mask> b(p.b.size());
  std::vector<Mask> best_a;
  std::vector<Mask> best_b;
  bool have_best = false;

  do {
    for (std::size_t m = 0; m < table_size; ++m) {
      table[m] = permute_mask(static_cast<Mask>(m), perm);
    }
    std::transform(p.a.begin(), p.a.end(), a.begin(), [&](Mask m) { return table[m]; });
    std::transform(p.b.begin(), p.b.end(), b.begin(), [&](Mask m) { return table[m]; });
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // |A| and |B| do not depend on the permutation, so comparing A then B
    // is the same as comparing the serialized bytes.
    if (!have_best || std::tie(a, b) < std::tie(best_a, best_b)) {
      best_a = a;
      best_b = b;
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  CanonicalKey key;
  key.bytes.push_back(static_cast<std::uint8_t>(n));
  append_be32(key.bytes, static_cast<std::uint32_t>(best_a.size()));
  for (Mask m : best_a) append_be32(key.bytes, m);
  append_be32(key.bytes, static_cast<std::uint32_t>(best_b.size()));
  for (Mask m : best_b) append_be32(key.bytes, m);

  PairInstance rep(p.frac, Family::from_masks(n, std::move(best_a)),
                   Family::from_masks(n, std::move(best_b)));
  return {std::move(key), std::move(rep), 0};
}

CanonicalKey canonical_form(const PairInstance& p) { return canonical_class(p).key; }

MatchReport compare_with_predicted(const SearchResult& r) {
  if (!r.exhausted) throw ContractError("cannot compare a search that hit its node budget");
  if (!r.canonicalized) throw ContractError("cannot compare a search run without canonicalization");

  std::map<CanonicalKey, CanonicalClass> predicted;
  for (const auto& p : extremal::predicted_classes(r.n, r.frac)) {
    CanonicalClass cls = canonical_class(p);
    predicted.try_emplace(cls.key, std::move(cls));
  }
  MatchReport report;
  report.predicted_count = predicted.size();
  report.found_count = r.classes.size();
  for (const auto& cls : r.classes) {
    if (predicted.erase(cls.key) == 0) report.extra.push_back(cls);
  }
  for (auto& [key, cls] : predicted) report.missing.push_back(std::move(cls));
  report.match = report.missing.empty() && report.extra.empty();
  return report;
}

SymmetricReport symmetric_max_search(int n, Frac frac, const SearchConfig& cfg) {
  check_ground_size(n, kMaxSymmetricGround);
  if (cfg.max_nodes < 1) throw InputError("max_nodes must be at least 1");

  // compat[b] has bit a set iff (a, b) satisfies the symmetric rule. The
  // rule is pairwise, so the largest A-side for a family B is the AND of
  // compat over B.
  const std::size_t sets = std::size_t{1} << n;
  std::vector<std::uint64_t> compat(sets, 0);
  for (std::size_t b = 0; b < sets; ++b) {
    for (std::size_t a = 0; a < sets; ++a) {
      if (symmetric_rule(static_cast<Mask>(a), static_cast<Mask>(b), frac)) {
        compat[b] |= std::uint64_t{1} << a;
      }
    }
  }

  SymmetricReport report;
  report.n = n;
  report.frac = frac;
  std::vector<std::pair<std::uint64_t, std::vector<Mask>>> best_families;
  std::vector<Mask> chosen;
  bool budget_hit = false;

  auto visit = [&](auto&& self, std::size_t next, std::uint64_t common) -> void {
    if (report.nodes_visited >= cfg.max_nodes) {
      budget_hit = true;
      return;
    }
    ++report.nodes_visited;
    const std::uint64_t a_size = static_cast<std::uint64_t>(std::popcount(common));
    const std::uint64_t product = a_size * chosen.size();
    if (product > 0 && product >= report.best_product) {
      if (product > report.best_product) best_families.clear();
      report.best_product = product;
      best_families.emplace_back(common, chosen);
    }
    for (std::size_t j = next; j < sets && !budget_hit; ++j) {
      if (cfg.prune) {
        const std::uint64_t bound = a_size * (chosen.size() + (sets - j));
        if (a_size == 0 || bound < report.best_product) {
          ++report.pruned;
          break;
        }
      }
      chosen.push_back(static_cast<Mask>(j));
      self(self, j + 1, common & compat[j]);
      chosen.pop_back();
    }
  };
  visit(visit, 0, sets == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << sets) - 1);
  report.exhausted = !budget_hit;

  for (const auto& [common, b] : best_families) {
    std::vector<Mask> a;
    for (std::size_t m = 0; m < sets; ++m) {
      if (((common >> m) & 1U) != 0) a.push_back(static_cast<Mask>(m));
    }
    report.witnesses.emplace_back(frac, Family::from_masks(n, std::move(a)),
                                  Family::from_masks(n, b));
  }
  std::sort(report.witnesses.begin(), report.witnesses.end(), pair_less);
  return report;
}

}  // namespace xifam::search
