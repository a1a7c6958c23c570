#include "dtq/rewrite.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <unordered_map>

#include "dtq/error.hpp"

namespace dtq {

struct RewriteSystem::Cache {
  std::shared_mutex mutex;
  std::unordered_map<Word, Combination, WordHash> normal_forms;
  std::unordered_map<Word, std::size_t, WordHash> rule_index;
};

RewriteSystem::RewriteSystem(std::vector<Gen> alphabet, std::vector<RewriteRule> rules, ScalarRing ring)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)), ring_(std::move(ring)),
      cache_(std::make_shared<Cache>()) {
  std::set<std::size_t> lengths;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].lhs.empty()) throw Error(ErrorKind::InvalidParams, "rule with empty left-hand side");
    auto [it, inserted] = cache_->rule_index.emplace(rules_[i].lhs, i);
    if (!inserted) {
      throw Error(ErrorKind::InvalidParams, "duplicate rule for " + format_word(rules_[i].lhs));
    }
    lengths.insert(rules_[i].lhs.size());
    Combination rhs;
    for (const auto& [w, c] : rules_[i].rhs) accumulate(rhs, w, ring_.reduce(c));
    rules_[i].rhs = std::move(rhs);
  }
  lhs_lengths_.assign(lengths.begin(), lengths.end());
}

std::optional<std::size_t> RewriteSystem::rule_at(const Word& w, std::size_t pos, std::size_t len) const {
  if (pos + len > w.size()) return std::nullopt;
  Word piece(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + len));
  auto it = cache_->rule_index.find(piece);
  if (it == cache_->rule_index.end()) return std::nullopt;
  return it->second;
}

std::optional<RewriteSystem::Match> RewriteSystem::leftmost_redex(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t len : lhs_lengths_)
      if (auto r = rule_at(w, pos, len)) return Match{pos, *r};
  return std::nullopt;
}

std::vector<RewriteSystem::Match> RewriteSystem::all_redexes(const Word& w) const {
  std::vector<Match> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (std::size_t len : lhs_lengths_)
      if (auto r = rule_at(w, pos, len)) out.push_back({pos, *r});
  return out;
}

Combination RewriteSystem::apply(const Word& w, const Match& m) const {
  const RewriteRule& rule = rules_[m.rule];
  Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.position));
  Word suffix(w.begin() + static_cast<std::ptrdiff_t>(m.position + rule.lhs.size()), w.end());
  Combination out;
  for (const auto& [piece, c] : rule.rhs) accumulate(out, concat(concat(prefix, piece), suffix), c);
  return out;
}

bool RewriteSystem::is_irreducible(const Word& w) const { return !leftmost_redex(w).has_value(); }

Combination RewriteSystem::normalize(const Word& w) const {
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->normal_forms.find(w);
    if (it != cache_->normal_forms.end()) return it->second;
  }
  Combination result;
  auto redex = leftmost_redex(w);
  if (!redex) {
    result.emplace(w, QScalar(1));
  } else {
    for (const auto& [next, c] : apply(w, *redex))
      for (const auto& [nf, cn] : normalize(next)) accumulate(result, nf, ring_.reduce(c * cn));
  }
  std::unique_lock lock(cache_->mutex);
  cache_->normal_forms.emplace(w, result);
  return result;
}

Combination RewriteSystem::normalize(const Combination& c) const {
  Combination out;
  for (const auto& [w, coefficient] : c)
    for (const auto& [nf, cn] : normalize(w)) accumulate(out, nf, ring_.reduce(coefficient * cn));
  return out;
}

Combination RewriteSystem::normalize_random(const Word& w, std::mt19937_64& rng) const {
  auto redexes = all_redexes(w);
  if (redexes.empty()) return Combination{{w, QScalar(1)}};
  std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
  Combination out;
  for (const auto& [next, c] : apply(w, redexes[pick(rng)]))
    for (const auto& [nf, cn] : normalize_random(next, rng)) accumulate(out, nf, ring_.reduce(c * cn));
  return out;
}

std::vector<Word> RewriteSystem::irreducible_words(int max_length) const {
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  std::vector<Gen> letters = alphabet_;
  std::sort(letters.begin(), letters.end());
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Gen g : letters) {
        Word candidate = w;
        candidate.push_back(g);
        // Only suffixes can contain a new redex.
        bool reducible = false;
        for (std::size_t l : lhs_lengths_) {
          if (l <= candidate.size() && rule_at(candidate, candidate.size() - l, l)) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(candidate));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<CriticalPair> RewriteSystem::check_confluence(int degree_bound) const {
  std::vector<CriticalPair> out;
  auto resolve = [&](const Word& ambiguity, const Match& first, const Match& second) {
    Combination left = normalize(apply(ambiguity, first));
    Combination right = normalize(apply(ambiguity, second));
    if (left != right) out.push_back({ambiguity, std::move(left), std::move(right)});
  };
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Word& l1 = rules_[i].lhs;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      const Word& l2 = rules_[j].lhs;
      // Overlap: a proper suffix of l1 is a proper prefix of l2.
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
        if (!std::equal(l1.end() - static_cast<std::ptrdiff_t>(k), l1.end(), l2.begin())) continue;
        Word ambiguity = concat(l1, Word(l2.begin() + static_cast<std::ptrdiff_t>(k), l2.end()));
        if (static_cast<int>(ambiguity.size()) > degree_bound) continue;
        resolve(ambiguity, Match{0, i}, Match{l1.size() - k, j});
      }
      // Inclusion: l2 sits strictly inside l1.
      if (i != j && l2.size() <= l1.size()) {
        for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
          if (!std::equal(l2.begin(), l2.end(), l1.begin() + static_cast<std::ptrdiff_t>(pos))) continue;
          if (static_cast<int>(l1.size()) > degree_bound) continue;
          resolve(l1, Match{0, i}, Match{pos, j});
        }
      }
    }
  }
  return out;
}

std::vector<std::size_t> RewriteSystem::order_violations() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rules_.size(); ++i)
    for (const auto& [w, c] : rules_[i].rhs)
      if (!grlex_less(w, rules_[i].lhs)) {
        out.push_back(i);
        break;
      }
  return out;
}

namespace {

// Turns "relation = 0" into a rule leading-word -> rest, or nullopt for zero.
std::optional<RewriteRule> orient(const Combination& relation, const ScalarRing& ring) {
  if (relation.empty()) return std::nullopt;
  auto lead = std::max_element(relation.begin(), relation.end(),
                               [](const auto& x, const auto& y) { return grlex_less(x.first, y.first); });
  auto inv = ring.inverse(lead->second);
  if (!inv) {
    throw Error(ErrorKind::CompletionFailed,
                "leading coefficient " + lead->second.to_string() + " of " + format_word(lead->first) +
                    " is not invertible");
  }
  RewriteRule rule{lead->first, {}};
  for (const auto& [w, c] : relation)
    if (w != lead->first) accumulate(rule.rhs, w, ring.reduce(-(*inv) * c));
  return rule;
}

Combination difference(const Combination& x, const Combination& y) {
  Combination out = x;
  for (const auto& [w, c] : y) accumulate(out, w, -c);
  return out;
}

}  // namespace

RewriteSystem RewriteSystem::complete(const std::vector<Combination>& relations, std::size_t max_rules) const {
  std::vector<RewriteRule> rules = rules_;
  std::vector<Combination> pending = relations;
  int bound = 0;
  for (int round = 0; round < 200; ++round) {
    // Absorb pending relations one at a time so each sees the previous ones.
    while (!pending.empty()) {
      RewriteSystem current(alphabet_, rules, ring_);
      Combination reduced = current.normalize(pending.back());
      pending.pop_back();
      auto rule = orient(reduced, ring_);
      if (!rule) continue;
      // Left-hand sides containing the new one become relations again.
      std::vector<RewriteRule> kept;
      for (auto& r : rules) {
        bool contains = std::search(r.lhs.begin(), r.lhs.end(), rule->lhs.begin(), rule->lhs.end()) != r.lhs.end();
        if (contains) {
          Combination rel = r.rhs;
          accumulate(rel, r.lhs, QScalar(-1));
          pending.push_back(std::move(rel));
        } else {
          kept.push_back(std::move(r));
        }
      }
      kept.push_back(std::move(*rule));
      rules = std::move(kept);
      if (rules.size() > max_rules) {
        throw Error(ErrorKind::CompletionFailed, "rule budget exceeded during completion");
      }
    }
    // Right-hand sides are kept in normal form.
    {
      RewriteSystem current(alphabet_, rules, ring_);
      for (auto& r : rules) r.rhs = current.normalize(r.rhs);
    }
    RewriteSystem current(alphabet_, rules, ring_);
    std::size_t longest = 0;
    for (const auto& r : rules) longest = std::max(longest, r.lhs.size());
    bound = static_cast<int>(2 * longest);
    for (const auto& cp : current.check_confluence(bound)) pending.push_back(difference(cp.left, cp.right));
    if (pending.empty()) return current;
  }
  throw Error(ErrorKind::CompletionFailed, "completion did not stabilise");
}

std::string format_rule(const RewriteRule& r) {
  std::vector<std::pair<Word, QScalar>> terms(r.rhs.begin(), r.rhs.end());
  std::string rhs;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string piece = format_coefficient_term(it->second, format_word(it->first));
    if (rhs.empty()) {
      rhs = piece;
    } else if (piece[0] == '-') {
      rhs += " - " + piece.substr(1);
    } else {
      rhs += " + " + piece;
    }
  }
  if (rhs.empty()) rhs = "0";
  return format_word(r.lhs) + " -> " + rhs;
}

}  // namespace dtq
