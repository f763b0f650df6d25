#include "gj/jordan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "gj/error.hpp"

namespace gj {
namespace {

using Clock = std::chrono::steady_clock;

using BitvecSet = std::unordered_set<Bitvec, Bitvec::Hash>;

// Orbit of a subgroup (as a bit-vector) under conjugation by the whole
// parent group, driven by a generating set.  Returns the full orbit; if any
// conjugate is already in `stop_if_seen`, returns empty (the class is
// already accounted for).
std::vector<Bitvec> conjugation_orbit(const GroupTable& g,
                                      std::span<const Elt> gens,
                                      const Bitvec& start,
                                      const BitvecSet* stop_if_seen) {
  if (stop_if_seen != nullptr && stop_if_seen->contains(start)) return {};
  BitvecSet seen;
  seen.insert(start);
  std::deque<Bitvec> queue;
  queue.push_back(start);
  std::vector<Bitvec> orbit;
  orbit.push_back(start);
  while (!queue.empty()) {
    Bitvec cur = std::move(queue.front());
    queue.pop_front();
    for (Elt t : gens) {
      Bitvec img(g.order());
      cur.for_each([&](std::size_t x) {
        img.set(g.conj(t, static_cast<Elt>(x)));
      });
      if (stop_if_seen != nullptr && stop_if_seen->contains(img)) return {};
      if (seen.insert(img).second) {
        orbit.push_back(img);
        queue.push_back(img);
      }
    }
  }
  return orbit;
}

Bitvec lex_least(const std::vector<Bitvec>& orbit) {
  const Bitvec* best = &orbit.front();
  for (const Bitvec& b : orbit) {
    if (Bitvec::lex_less(b, *best)) best = &b;
  }
  return *best;
}

struct ExtensionResult {
  bool fresh = false;
  Bitvec canonical;
  std::vector<Bitvec> orbit;
};

}  // namespace

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn) {
  std::size_t width = threads <= 1 ? 1 : static_cast<std::size_t>(threads);
  width = std::min(width, n);
  if (width <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(width);
  for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

SubgroupClassInventory subgroup_classes(const GroupTable& g, int threads,
                                        std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("subgroup enumeration over order cap (" +
                      std::to_string(g.order()) + " > " + std::to_string(cap) +
                      ")");
  }
  const std::size_t n = g.order();
  const std::vector<Elt> gens = small_generating_set(g);

  SubgroupClassInventory inv;
  inv.parent = &g;

  std::vector<SubgroupClass> classes;
  BitvecSet raw_seen;  // every subgroup of every accepted class

  auto accept = [&](const Bitvec& canonical, const std::vector<Bitvec>& orbit) {
    SubgroupClass cls;
    cls.members = canonical;
    cls.order = canonical.count();
    cls.class_size = orbit.size();
    classes.push_back(std::move(cls));
    for (const Bitvec& b : orbit) raw_seen.insert(b);
  };

  // Seed: trivial subgroup and all cyclic subgroups.
  {
    Bitvec triv(n);
    triv.set(GroupTable::kId);
    accept(triv, {triv});
  }
  for (std::size_t x = 1; x < n; ++x) {
    Bitvec cyc(n);
    Elt cur = static_cast<Elt>(x);
    while (cur != GroupTable::kId) {
      cyc.set(cur);
      cur = g.mul(cur, static_cast<Elt>(x));
    }
    cyc.set(GroupTable::kId);
    if (raw_seen.contains(cyc)) continue;
    auto orbit = conjugation_orbit(g, gens, cyc, &raw_seen);
    if (orbit.empty()) continue;
    accept(lex_least(orbit), orbit);
  }

  // Rounds: try to extend each known class by one element per right coset.
  std::size_t processed = 0;
  while (processed < classes.size()) {
    const std::size_t round_begin = processed;
    const std::size_t round_end = classes.size();
    processed = round_end;

    struct Task {
      std::size_t class_idx;
      Elt extra;
    };
    std::vector<Task> tasks;
    for (std::size_t ci = round_begin; ci < round_end; ++ci) {
      const Bitvec& h = classes[ci].members;
      if (h.count() == n) continue;
      Bitvec covered = h;
      for (std::size_t x = 0; x < n; ++x) {
        if (covered.test(x)) continue;
        tasks.push_back({ci, static_cast<Elt>(x)});
        // Mark the whole right coset Hx: closure(H + hx) = closure(H + x).
        h.for_each([&](std::size_t hh) {
          covered.set(g.mul(static_cast<Elt>(hh), static_cast<Elt>(x)));
        });
      }
    }

    const std::size_t kBatch = 256;
    for (std::size_t start = 0; start < tasks.size(); start += kBatch) {
      const std::size_t stop = std::min(start + kBatch, tasks.size());
      std::vector<ExtensionResult> results(stop - start);
      parallel_for(stop - start, threads, [&](std::size_t k) {
        const Task& task = tasks[start + k];
        SubSet base(g, classes[task.class_idx].members);
        std::array<Elt, 1> extra{task.extra};
        Bitvec ext = subgroup_closure_extend(g, base, extra).members;
        if (raw_seen.contains(ext)) return;
        auto orbit = conjugation_orbit(g, gens, ext, &raw_seen);
        if (orbit.empty()) return;
        results[k].fresh = true;
        results[k].canonical = lex_least(orbit);
        results[k].orbit = std::move(orbit);
      });
      for (auto& r : results) {
        if (!r.fresh) continue;
        if (raw_seen.contains(r.canonical)) continue;
        accept(r.canonical, r.orbit);
      }
    }
  }

  // Normalizer orders and final ordering.
  for (auto& cls : classes) {
    cls.normalizer_order = n / cls.class_size;
  }
  std::sort(classes.begin(), classes.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) {
              if (a.order != b.order) return a.order < b.order;
              return Bitvec::lex_less(a.members, b.members);
            });
  inv.total_subgroups = raw_seen.size();
  inv.classes = std::move(classes);
  return inv;
}

std::vector<SubSet> normal_subgroups_within(const GroupTable& g,
                                            const SubSet& h) {
  const std::size_t n = g.order();
  const std::vector<Elt> hgens = small_generating_set(g, h);

  // Normal closure of each cyclic subgroup of H: the subgroup generated by
  // the H-conjugacy class of its generator.
  BitvecSet seen;
  std::vector<SubSet> normals;
  auto admit = [&](SubSet sub) {
    if (seen.insert(sub.members).second) normals.push_back(std::move(sub));
  };
  {
    Bitvec assigned(n);
    h.members.for_each([&](std::size_t x0) {
      if (assigned.test(x0)) return;
      std::vector<Elt> orbit{static_cast<Elt>(x0)};
      Bitvec in_orbit(n);
      in_orbit.set(x0);
      for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (Elt t : hgens) {
          Elt y = g.conj(t, orbit[i]);
          if (!in_orbit.test(y)) {
            in_orbit.set(y);
            orbit.push_back(y);
          }
        }
      }
      in_orbit.for_each([&](std::size_t y) { assigned.set(y); });
      admit(subgroup_closure(g, orbit));
    });
  }

  // Join fixpoint: every normal subgroup of H is a join of cyclic normal
  // closures, and joins of normal subgroups are normal.
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (normals[j].members.is_subset_of(normals[i].members) ||
          normals[i].members.is_subset_of(normals[j].members)) {
        continue;
      }
      std::vector<Elt> extra;
      normals[j].members.for_each([&](std::size_t x) {
        if (!normals[i].members.test(x)) extra.push_back(static_cast<Elt>(x));
      });
      admit(subgroup_closure_extend(g, normals[i], extra));
    }
  }

  std::sort(normals.begin(), normals.end(), [](const SubSet& a, const SubSet& b) {
    if (a.size != b.size) return a.size < b.size;
    return Bitvec::lex_less(a.members, b.members);
  });
  return normals;
}

std::vector<SubSet> normal_subgroups(const GroupTable& g) {
  return normal_subgroups_within(g, full_subset(g));
}

std::size_t max_normal_abelian_order_within(const GroupTable& g,
                                            const SubSet& h) {
  if (is_abelian_subset(g, h)) return h.size;
  auto normals = normal_subgroups_within(g, h);
  // Descending order; first abelian wins.
  for (auto it = normals.rbegin(); it != normals.rend(); ++it) {
    if (is_abelian_subset(g, *it)) return it->size;
  }
  return 1;  // unreachable: the trivial subgroup is always present
}

std::size_t min_index_normal_abelian(const GroupTable& g) {
  return g.order() / max_normal_abelian_order_within(g, full_subset(g));
}

NormalAbelianProfile normal_abelian_profile(const GroupTable& g) {
  NormalAbelianProfile profile;
  for (auto& sub : normal_subgroups(g)) {
    if (!is_abelian_subset(g, sub)) continue;
    NormalAbelianEntry entry;
    entry.invariants = abelian_invariants(g, sub);
    entry.sub = std::move(sub);
    profile.entries.push_back(std::move(entry));
  }
  std::sort(profile.entries.begin(), profile.entries.end(),
            [](const NormalAbelianEntry& a, const NormalAbelianEntry& b) {
              if (a.sub.size != b.sub.size) return a.sub.size < b.sub.size;
              if (a.invariants != b.invariants) return a.invariants < b.invariants;
              return Bitvec::lex_less(a.sub.members, b.sub.members);
            });
  return profile;
}

JordanReport jordan_constant(const GroupTable& g, int threads) {
  const auto t0 = Clock::now();
  JordanReport report;
  report.label = g.label();
  report.order = g.order();

  SubgroupClassInventory inv = subgroup_classes(g, threads);
  report.class_count = inv.classes.size();

  std::vector<std::size_t> index_of(inv.classes.size(), 0);
  parallel_for(inv.classes.size(), threads, [&](std::size_t i) {
    const SubgroupClass& cls = inv.classes[i];
    SubSet sub(g, cls.members);
    index_of[i] = cls.order / max_normal_abelian_order_within(g, sub);
  });

  std::size_t best = 0;
  std::size_t best_at = 0;
  for (std::size_t i = 0; i < inv.classes.size(); ++i) {
    // Classes are sorted by (order, members); the first maximizer in this
    // order is the canonical witness.
    if (index_of[i] > best) {
      best = index_of[i];
      best_at = i;
    }
    if (inv.classes[i].order == g.order()) {
      report.whole_group_index = index_of[i];
    }
  }
  report.jordan = best;

  const SubgroupClass& star = inv.classes[best_at];
  report.witness.subgroup = star.members;
  {
    SubSet sub(g, star.members);
    std::size_t target = star.order / best;
    Bitvec pick;
    bool have = false;
    for (const auto& nsub : normal_subgroups_within(g, sub)) {
      if (nsub.size != target) continue;
      if (!is_abelian_subset(g, nsub)) continue;
      if (!have || Bitvec::lex_less(nsub.members, pick)) {
        pick = nsub.members;
        have = true;
      }
    }
    report.witness.abelian = pick;
  }

  report.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
          .count());
  return report;
}

std::size_t jordan_sup(const std::vector<std::shared_ptr<const GroupTable>>& groups,
                       int threads) {
  if (groups.empty()) throw Error("jordan_sup: empty group list");
  std::size_t sup = 0;
  for (const auto& g : groups) sup = std::max(sup, jordan_constant(*g, threads).jordan);
  return sup;
}

}  // namespace gj
