#pragma once

// Word rewriting: normal forms, critical pairs and bounded completion.

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "dtq/algebra.hpp"

namespace dtq {

struct RewriteRule {
  Word lhs;
  Combination rhs;
};

/// An ambiguity whose two one-step reductions normalise differently.
struct CriticalPair {
  Word ambiguity;
  Combination left;
  Combination right;
};

class RewriteSystem {
 public:
  RewriteSystem(std::vector<Gen> alphabet, std::vector<RewriteRule> rules, ScalarRing ring);

  const std::vector<Gen>& alphabet() const noexcept { return alphabet_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
  const ScalarRing& ring() const noexcept { return ring_; }

  /// Leftmost-redex normal form; results are memoised (thread-safe).
  Combination normalize(const Word& w) const;
  Combination normalize(const Combination& c) const;
  /// Same normal form reached by firing a uniformly random redex at each step.
  Combination normalize_random(const Word& w, std::mt19937_64& rng) const;

  bool is_irreducible(const Word& w) const;
  /// All irreducible words of length <= max_length, in grlex order.
  std::vector<Word> irreducible_words(int max_length) const;

  /// Overlap and inclusion ambiguities whose length is at most degree_bound.
  std::vector<CriticalPair> check_confluence(int degree_bound) const;
  /// Rules whose right-hand side is not strictly below the left-hand side.
  std::vector<std::size_t> order_violations() const;

  /// Adds the relations (each "= 0") and runs Knuth-Bendix style completion.
  /// Needs every leading coefficient to be invertible in the scalar ring.
  RewriteSystem complete(const std::vector<Combination>& relations, std::size_t max_rules = 400) const;

 private:
  struct Match {
    std::size_t position;
    std::size_t rule;
  };
  struct Cache;

  std::optional<Match> leftmost_redex(const Word& w) const;
  std::vector<Match> all_redexes(const Word& w) const;
  Combination apply(const Word& w, const Match& m) const;
  std::optional<std::size_t> rule_at(const Word& w, std::size_t pos, std::size_t len) const;

  std::vector<Gen> alphabet_;
  std::vector<RewriteRule> rules_;
  ScalarRing ring_;
  std::vector<std::size_t> lhs_lengths_;
  std::shared_ptr<Cache> cache_;
};

std::string format_rule(const RewriteRule& r);

}  // namespace dtq
