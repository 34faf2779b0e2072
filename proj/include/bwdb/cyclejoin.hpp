// Cycle-joining trees under the first non-zero parent rules, plus the
// chain-aware reference successor h(alpha) they induce.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bwdb/ucycle.hpp"
#include "bwdb/words.hpp"

namespace bwdb {

enum class FeedbackKind { pcr, msr };

std::string_view to_string(FeedbackKind k) noexcept;

/// Two strings that differ only in their first symbol. `sigma` lies in the
/// parent cycle, `sigma_hat` in the child cycle.
struct ConjugatePair {
    Word sigma;
    Word sigma_hat;
};

struct TreeNode {
    Word label;
    /// 1-based index of the symbol the parent rule changes (the first
    /// non-zero position); the PCR root uses n.
    std::size_t change_index = 1;
    std::optional<std::size_t> parent;
    /// Pair joining this node to its parent; empty for the root.
    std::optional<ConjugatePair> edge;
    /// Sorted by change index.
    std::vector<std::size_t> children;
};

/// Rooted cycle-joining tree; node 0 is the root. Immutable once built.
class CycleTree {
public:
    /// Assembles a tree from nodes whose `parent` and `edge` fields are set;
    /// children lists are derived. Throws std::invalid_argument on a
    /// malformed parent structure.
    CycleTree(FeedbackKind kind, ParamSet params, std::vector<TreeNode> nodes);

    FeedbackKind kind() const noexcept { return kind_; }
    const ParamSet& params() const noexcept { return params_; }
    const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const TreeNode& root() const { return nodes_.front(); }
    std::optional<std::size_t> find(const Word& label) const;

    /// Length of the strings that make up the underlying set (n for both kinds).
    std::size_t window_length() const noexcept { return params_.n; }

private:
    FeedbackKind kind_;
    ParamSet params_;
    std::vector<TreeNode> nodes_;
    std::unordered_map<Word, std::size_t, WordHash> index_;
};

/// First non-zero parent rule: decrement the first non-zero symbol.
Word pcr_parent(const Word& node);

/// MSR variant: decrement the first non-zero symbol and increment the next.
Word msr_parent(const Word& node);

/// Conjugate pair joining a non-root node to its parent under the given rule.
ConjugatePair joining_pair(FeedbackKind kind, const Word& child);

/// Materializes the first non-zero tree. PCR nodes are N_t(n,w); MSR nodes are
/// the length-(n+1) necklaces of weight exactly w and require w < t.
/// Throws std::length_error if the node count would exceed `cap`.
CycleTree build_tree(FeedbackKind kind, const ParamSet& p, std::uint64_t cap = kDefaultCap);

/// No node has two children joined through pairs sharing the same
/// length-(n-1) suffix.
bool check_chain_property(const CycleTree& tree);

/// Every periodic non-root node is a leaf. PCR trees only.
bool check_periodic_leaves(const CycleTree& tree);

/// Feedback function of the register: the first symbol (PCR) or the missing
/// symbol w - weight (MSR).
Symbol feedback(FeedbackKind kind, const ParamSet& p, std::span<const Symbol> alpha);

/// Reference successor h(alpha) = g(alpha) for strings in a conjugate pair and
/// f(alpha) otherwise, with g following maximal chains.
class GenericSuccessor {
public:
    explicit GenericSuccessor(const CycleTree& tree);

    Symbol operator()(const Word& alpha) const;
    Symbol operator()(std::span<const Symbol> alpha) const;

private:
    using Key = std::vector<Symbol>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept { return WordHash{}(k); }
    };

    FeedbackKind kind_;
    ParamSet params_;
    // sigma -> sigma_hat (down the chain) and the reverse
    std::unordered_map<Key, Key, KeyHash> down_;
    std::unordered_map<Key, Key, KeyHash> up_;
};

Symbol generic_successor(const CycleTree& tree, const Word& alpha);

/// Full cycle produced by iterating GenericSuccessor from 0^n.
UCycle generate_generic(const CycleTree& tree);

}  // namespace bwdb
