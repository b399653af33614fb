#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>

#include "genfact/kernels.hpp"
#include "genfact/numerics.hpp"
#include "genfact/ordering.hpp"

namespace genfact {

namespace {

constexpr std::uint64_t kNoValue = std::numeric_limits<std::uint64_t>::max();

std::mt19937_64 step_rng(const TieBreakPolicy& policy, std::span<const std::int64_t> prefix) {
  std::seed_seq seq{static_cast<std::uint32_t>(policy.seed), static_cast<std::uint32_t>(policy.seed >> 32),
                    static_cast<std::uint32_t>(prefix.size()),
                    static_cast<std::uint32_t>(prefix.empty() ? 0 : prefix.back())};
  return std::mt19937_64(seq);
}

std::int64_t choose(std::vector<std::int64_t> pool, const TieBreakPolicy& policy,
                    std::span<const std::int64_t> prefix) {
  std::sort(pool.begin(), pool.end(), canonical_less);
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (policy.kind == TieBreakPolicy::Kind::Canonical || pool.size() == 1) return pool.front();
  auto rng = step_rng(policy, prefix);
  return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
}

bool in_prefix(std::span<const std::int64_t> prefix, std::int64_t a) {
  return std::find(prefix.begin(), prefix.end(), a) != prefix.end();
}

std::uint64_t exact_value(std::span<const std::int64_t> prefix, std::int64_t b, std::int64_t a) {
  std::uint64_t s = 0;
  for (std::int64_t x : prefix) {
    const std::uint32_t v = ord_b_u32(b, a - x);
    if (v == kOrdInfinite) return kNoValue;
    s += v;
  }
  return s;
}

/// Minimises over an explicit candidate list with the batched kernel.
GreedyStep scan(const std::vector<std::int64_t>& candidates, std::span<const std::int64_t> prefix, std::int64_t b,
                const SetDescriptor& s, const TieBreakPolicy& policy, bool exhaustive) {
  std::vector<std::uint32_t> sums(candidates.size());
  kernels::valuation_sums(candidates, prefix, b, sums);
  std::uint32_t best = kOrdInfinite;
  for (std::uint32_t v : sums) best = std::min(best, v);
  if (best == kOrdInfinite) return {s.first_element(), ExtNat::infinity(), exhaustive};
  std::vector<std::int64_t> pool;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (sums[i] == best) pool.push_back(candidates[i]);
  // A zero value is globally minimal whatever lies outside the window.
  return {choose(std::move(pool), policy, prefix), ExtNat(best), exhaustive || best == 0};
}

/// The elements a finite scan must cover, or nullopt when S is not known to
/// be exhausted by its enumeration.
std::optional<std::vector<std::int64_t>> complete_listing(const SetDescriptor& s) {
  if (s.kind() == SetKind::ExplicitFinite) return s.elements();
  if (s.kind() == SetKind::CustomPredicate && s.cardinality().is_finite()) {
    auto all = s.enumerate(s.enumeration_cap());
    if (ExtNat(static_cast<std::uint64_t>(all.size())) == s.cardinality()) return all;
  }
  return std::nullopt;
}

std::vector<std::int64_t> window_listing(const SetDescriptor& s, const EngineLimits& limits) {
  return s.enumerate(std::min<std::int64_t>(limits.window, s.enumeration_cap()));
}

/// First `count` elements of S outside the prefix, canonical order.
std::vector<std::int64_t> first_outside(const SetDescriptor& s, std::span<const std::int64_t> prefix,
                                        std::size_t count) {
  std::vector<std::int64_t> out;
  if (auto all = complete_listing(s)) {
    std::sort(all->begin(), all->end(), canonical_less);
    for (std::int64_t a : *all)
      if (out.size() < count && !in_prefix(prefix, a)) out.push_back(a);
    return out;
  }
  const std::int64_t cap = s.enumeration_cap();
  for (std::int64_t bound = 16;; bound = bound > cap / 2 ? cap : bound * 2) {
    bound = std::min(bound, cap);
    out.clear();
    for (std::int64_t a : s.enumerate(bound))
      if (out.size() < count && !in_prefix(prefix, a)) out.push_back(a);
    if (out.size() >= count || bound >= cap) return out;
  }
}

struct TrieNode {
  std::uint64_t weight;
  unsigned level;
  std::int64_t residue;
  std::int64_t modulus;
  std::vector<std::int64_t> members;
};

struct HeavierFirst {
  bool operator()(const TrieNode& x, const TrieNode& y) const {
    return x.weight != y.weight ? x.weight > y.weight : x.level > y.level;
  }
};

/// Best-first search over the b-adic residue tree. A node's weight counts
/// prefix elements congruent to the class at levels 1..L and lower-bounds
/// the value of every element in the class; a child class holding no prefix
/// element realises its parent's weight exactly.
std::optional<GreedyStep> residue_search(std::span<const std::int64_t> prefix, std::int64_t b,
                                         const SetDescriptor& s, const TieBreakPolicy& policy,
                                         const EngineLimits& limits) {
  std::uint64_t best = kNoValue;
  std::vector<std::pair<std::int64_t, std::int64_t>> terminals;  // (residue, modulus) at value best
  std::vector<std::int64_t> exact;                                // finite-class members at value best
  auto offer = [&](std::uint64_t v) {
    if (v < best) {
      best = v;
      terminals.clear();
      exact.clear();
    }
    return v == best;
  };

  std::priority_queue<TrieNode, std::vector<TrieNode>, HeavierFirst> heap;
  heap.push({0, 0, 0, 1, std::vector<std::int64_t>(prefix.begin(), prefix.end())});
  while (!heap.empty()) {
    TrieNode node = heap.top();
    heap.pop();
    if (node.weight > best) break;
    std::int64_t child_mod = 0;
    if (node.level >= limits.max_level || __builtin_mul_overflow(node.modulus, b, &child_mod)) return std::nullopt;
    for (std::int64_t t = 0; t < b; ++t) {
      const std::int64_t r = node.residue + t * node.modulus;
      const ResidueStatus st = s.residue_status(r, child_mod);
      switch (st.kind) {
        case ResidueStatus::Kind::Empty:
          break;
        case ResidueStatus::Kind::FiniteOnly:
          for (std::int64_t a : st.members) {
            if (in_prefix(prefix, a)) continue;
            if (offer(exact_value(prefix, b, a))) exact.push_back(a);
          }
          break;
        case ResidueStatus::Kind::Infinite: {
          std::vector<std::int64_t> inside;
          for (std::int64_t a : node.members)
            if (mod_floor(a, child_mod) == r) inside.push_back(a);
          if (inside.empty()) {
            if (offer(node.weight)) terminals.emplace_back(r, child_mod);
          } else if (node.weight + inside.size() <= best) {
            heap.push({node.weight + inside.size(), node.level + 1, r, child_mod, std::move(inside)});
          }
          break;
        }
        case ResidueStatus::Kind::Unknown:
          return std::nullopt;
      }
    }
  }
  if (best == kNoValue) return GreedyStep{s.first_element(), ExtNat::infinity(), true};

  const std::size_t per_class = policy.kind == TieBreakPolicy::Kind::Canonical ? 1 : limits.random_pool;
  std::vector<std::int64_t> pool = exact;
  for (const auto& [r, m] : terminals)
    for (std::int64_t a : s.first_in_class(r, m, {}, per_class)) pool.push_back(a);
  return GreedyStep{choose(std::move(pool), policy, prefix), ExtNat(best), true};
}

}  // namespace

std::string TieBreakPolicy::name() const {
  return kind == Kind::Canonical ? "canonical" : "seeded-random(" + std::to_string(seed) + ")";
}

GreedyStep greedy_step(std::span<const std::int64_t> prefix, std::int64_t b, const SetDescriptor& s,
                       const TieBreakPolicy& policy, const EngineLimits& limits) {
  if (b < 0) throw std::domain_error("greedy_step: negative base");
  const std::size_t pool_size = policy.kind == TieBreakPolicy::Kind::Canonical ? 1 : limits.random_pool;

  if (b == 1 || b == 0) {
    // b = 1: every difference has infinite valuation. b = 0: value 0 for any
    // element not yet used, ∞ otherwise.
    const bool all_zero = prefix.empty();
    if (b == 1 && !all_zero) return {s.first_element(), ExtNat::infinity(), true};
    auto pool = first_outside(s, prefix, pool_size);
    if (pool.empty()) return {s.first_element(), ExtNat::infinity(), complete_listing(s).has_value()};
    return {choose(std::move(pool), policy, prefix), ExtNat(0), true};
  }

  if (auto all = complete_listing(s)) return scan(*all, prefix, b, s, policy, true);
  if (s.kind() != SetKind::CustomPredicate)
    if (auto step = residue_search(prefix, b, s, policy, limits)) return *step;
  return scan(window_listing(s, limits), prefix, b, s, policy, false);
}

bool BOrdering::all_certified() const {
  return std::all_of(certified.begin(), certified.end(), [](bool c) { return c; });
}

BOrdering b_ordering(const SetDescriptor& s, std::int64_t b, std::size_t k, const TieBreakPolicy& policy,
                     std::optional<std::int64_t> start, const EngineLimits& limits) {
  if (b < 0) throw std::domain_error("b_ordering: negative base");
  BOrdering out;
  out.base = b;
  out.strategy = policy.name();
  if (start) {
    if (!s.contains(*start)) throw std::invalid_argument("b_ordering: start element not in S");
    out.elements.push_back(*start);
    out.exponents.emplace_back(0);
    out.certified.push_back(true);
    out.strategy += ",start=" + std::to_string(*start);
  } else {
    const GreedyStep first = greedy_step({}, b, s, policy, limits);
    out.elements.push_back(first.element);
    out.exponents.push_back(first.value);
    out.certified.push_back(first.certified);
  }
  bool exhausted = false;
  for (std::size_t i = 1; i <= k; ++i) {
    if (exhausted) {
      out.elements.push_back(s.first_element());
      out.exponents.push_back(ExtNat::infinity());
      out.certified.push_back(out.certified.back());
      continue;
    }
    const GreedyStep step = greedy_step(out.elements, b, s, policy, limits);
    out.elements.push_back(step.element);
    out.exponents.push_back(step.value);
    out.certified.push_back(step.certified);
    exhausted = step.value.is_infinite() && b != 1;
  }
  return out;
}

}  // namespace genfact
