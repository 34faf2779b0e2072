#include "bwdb/cyclejoin.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwdb {

std::string_view to_string(FeedbackKind k) noexcept { return k == FeedbackKind::pcr ? "pcr" : "msr"; }

namespace {

std::size_t first_nonzero(std::span<const Symbol> a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return i;
    return a.size();
}

void require_necklace(const Word& node) {
    if (necklace_period(node.symbols()) == 0) {
        throw std::invalid_argument("node " + node.str() + " is not a necklace");
    }
}

}  // namespace

CycleTree::CycleTree(FeedbackKind kind, ParamSet params, std::vector<TreeNode> nodes)
    : kind_(kind), params_(params), nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("cycle-joining tree needs a root");
    if (nodes_[0].parent) throw std::invalid_argument("node 0 must be the root");
    for (auto& node : nodes_) node.children.clear();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!index_.emplace(nodes_[i].label, i).second) {
            throw std::invalid_argument("duplicate node label " + nodes_[i].label.str());
        }
        if (i == 0) continue;
        const auto parent = nodes_[i].parent;
        if (!parent || *parent >= nodes_.size() || *parent == i) {
            throw std::invalid_argument("node " + nodes_[i].label.str() + " has no valid parent");
        }
        nodes_[*parent].children.push_back(i);
    }
    for (auto& node : nodes_) {
        std::sort(node.children.begin(), node.children.end(), [&](std::size_t a, std::size_t b) {
            if (nodes_[a].change_index != nodes_[b].change_index)
                return nodes_[a].change_index < nodes_[b].change_index;
            return a < b;
        });
    }
    // every node must reach the root
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        std::size_t cur = i;
        for (std::size_t steps = 0; nodes_[cur].parent; ++steps) {
            if (steps > nodes_.size()) throw std::invalid_argument("parent links contain a cycle");
            cur = *nodes_[cur].parent;
        }
        if (cur != 0) throw std::invalid_argument("tree has more than one root");
    }
}

std::optional<std::size_t> CycleTree::find(const Word& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Word pcr_parent(const Word& node) {
    const auto a = node.symbols();
    const std::size_t j = first_nonzero(a);
    if (j == a.size()) throw std::invalid_argument("the root 0^n has no parent");
    require_necklace(node);
    std::vector<Symbol> parent(a.begin(), a.end());
    --parent[j];
    return Word(std::move(parent), node.alphabet());
}

Word msr_parent(const Word& node) {
    const auto a = node.symbols();
    if (a.size() < 2) throw std::invalid_argument("MSR nodes have length n+1 >= 2");
    const std::size_t j = first_nonzero(a);
    if (j + 1 >= a.size()) throw std::invalid_argument("the root 0^n w has no parent");
    require_necklace(node);
    if (a[j + 1] + 1 >= node.alphabet()) {
        throw std::invalid_argument("MSR parent of " + node.str() + " leaves the alphabet");
    }
    std::vector<Symbol> parent(a.begin(), a.end());
    --parent[j];
    ++parent[j + 1];
    return Word(std::move(parent), node.alphabet());
}

ConjugatePair joining_pair(FeedbackKind kind, const Word& child) {
    const auto a = child.symbols();
    const std::size_t j = first_nonzero(a);
    const Symbol t = child.alphabet();
    if (kind == FeedbackKind::pcr) {
        if (j == a.size()) throw std::invalid_argument("the root has no joining pair");
        // rotate so the changed symbol leads
        std::vector<Symbol> hat(a.begin() + static_cast<std::ptrdiff_t>(j), a.end());
        hat.insert(hat.end(), j, 0);
        std::vector<Symbol> sigma = hat;
        --sigma[0];
        return {Word(std::move(sigma), t), Word(std::move(hat), t)};
    }
    if (j + 1 >= a.size()) throw std::invalid_argument("the root has no joining pair");
    // rotate so the symbol after the change leads; the changed symbol becomes
    // the missing one
    std::vector<Symbol> hat(a.begin() + static_cast<std::ptrdiff_t>(j + 1), a.end());
    hat.insert(hat.end(), j, 0);
    std::vector<Symbol> sigma = hat;
    ++sigma[0];
    return {Word(std::move(sigma), t), Word(std::move(hat), t)};
}

CycleTree build_tree(FeedbackKind kind, const ParamSet& p, std::uint64_t cap) {
    p.validate();
    std::vector<Word> labels;
    if (kind == FeedbackKind::pcr) {
        // colex order puts the root 0^n first
        labels = enumerate_bounded_necklaces(p, cap);
    } else {
        if (p.w >= p.t) {
            throw std::invalid_argument("MSR tree requires w < t (got t=" + std::to_string(p.t) +
                                        ", w=" + std::to_string(p.w) + ")");
        }
        labels = enumerate_fixed_weight_necklaces(p.t, p.n + 1, p.w, cap);
        // colex largest is 0^n w, the root
        std::reverse(labels.begin(), labels.end());
    }
    if (labels.size() > cap) throw std::length_error("tree exceeds node cap");

    std::unordered_map<Word, std::size_t, WordHash> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

    std::vector<TreeNode> nodes;
    nodes.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        TreeNode node{labels[i], 1, std::nullopt, std::nullopt, {}};
        const std::size_t j = first_nonzero(labels[i].symbols());
        if (i == 0) {
            node.change_index = kind == FeedbackKind::pcr ? p.n : std::min(j + 1, p.n + 1);
        } else {
            node.change_index = j + 1;
            const Word parent =
                kind == FeedbackKind::pcr ? pcr_parent(labels[i]) : msr_parent(labels[i]);
            auto it = index.find(parent);
            if (it == index.end()) {
                throw std::logic_error("parent " + parent.str() + " of " + labels[i].str() +
                                       " is not a node");
            }
            node.parent = it->second;
            node.edge = joining_pair(kind, labels[i]);
        }
        nodes.push_back(std::move(node));
    }
    return CycleTree(kind, p, std::move(nodes));
}

bool check_chain_property(const CycleTree& tree) {
    const auto& nodes = tree.nodes();
    for (const auto& node : nodes) {
        std::vector<std::vector<Symbol>> suffixes;
        for (std::size_t c : node.children) {
            const auto& edge = nodes[c].edge;
            if (!edge) return false;
            const auto s = edge->sigma.symbols().subspan(1);
            suffixes.emplace_back(s.begin(), s.end());
        }
        std::sort(suffixes.begin(), suffixes.end());
        if (std::adjacent_find(suffixes.begin(), suffixes.end()) != suffixes.end()) return false;
    }
    return true;
}

bool check_periodic_leaves(const CycleTree& tree) {
    if (tree.kind() != FeedbackKind::pcr) {
        throw std::invalid_argument("periodic-leaf check applies to PCR trees only");
    }
    const auto& nodes = tree.nodes();
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const auto& label = nodes[i].label;
        const std::size_t p = necklace_period(label.symbols());
        if (p != label.size() && !nodes[i].children.empty()) return false;
    }
    return true;
}

Symbol feedback(FeedbackKind kind, const ParamSet& p, std::span<const Symbol> alpha) {
    if (kind == FeedbackKind::pcr) return alpha[0];
    return static_cast<Symbol>(p.w - weight(alpha));
}

GenericSuccessor::GenericSuccessor(const CycleTree& tree)
    : kind_(tree.kind()), params_(tree.params()) {
    for (const auto& node : tree.nodes()) {
        if (!node.edge) continue;
        const Key sigma = node.edge->sigma.vec();
        const Key hat = node.edge->sigma_hat.vec();
        if (!down_.emplace(sigma, hat).second || !up_.emplace(hat, sigma).second) {
            throw std::invalid_argument("tree violates the Chain Property");
        }
    }
}

Symbol GenericSuccessor::operator()(const Word& alpha) const { return (*this)(alpha.symbols()); }

Symbol GenericSuccessor::operator()(std::span<const Symbol> alpha) const {
    if (!params_.contains(alpha)) {
        throw std::invalid_argument("string " + render(alpha) + " is outside the underlying set");
    }
    Key key(alpha.begin(), alpha.end());
    if (auto it = down_.find(key); it != down_.end()) {
        return feedback(kind_, params_, it->second);
    }
    if (!up_.contains(key)) return feedback(kind_, params_, alpha);
    // bottom of a chain: wrap to the top
    while (true) {
        auto it = up_.find(key);
        if (it == up_.end()) break;
        key = it->second;
    }
    return feedback(kind_, params_, key);
}

Symbol generic_successor(const CycleTree& tree, const Word& alpha) {
    return GenericSuccessor(tree)(alpha);
}

UCycle generate_generic(const CycleTree& tree) {
    const ParamSet& p = tree.params();
    const std::uint64_t total = p.bounded_word_count();
    UCycle out{{}, p, Engine::generic};
    if (total < p.n) {
        out.symbols.assign(total, 0);
        return out;
    }
    const GenericSuccessor h(tree);
    out.symbols.reserve(total);
    out.symbols.assign(p.n, 0);
    while (out.symbols.size() < total) {
        const std::span<const Symbol> window(out.symbols.data() + out.symbols.size() - p.n, p.n);
        out.symbols.push_back(h(window));
    }
    return out;
}

}  // namespace bwdb
