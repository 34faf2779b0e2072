#include "bwdb/export.hpp"

#include <sstream>

#include "json.hpp"

namespace bwdb {

using nlohmann::ordered_json;

namespace {

ordered_json params_json(const ParamSet& p) {
    return {{"t", p.t}, {"n", p.n}, {"w", p.w}, {"w_effective", p.effective_w()}};
}

ordered_json members_json(const std::vector<Member>& list) {
    ordered_json out = ordered_json::array();
    for (const auto& m : list) out.push_back(m);
    return out;
}

}  // namespace

std::string tree_to_json(const CycleTree& tree, int indent) {
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const auto& node = tree.nodes()[i];
        ordered_json j;
        j["id"] = i;
        j["label"] = node.label.str();
        j["change_index"] = node.change_index;
        j["periodic"] = necklace_period(node.label.symbols()) != node.label.size();
        j["parent"] = node.parent ? ordered_json(*node.parent) : ordered_json(nullptr);
        if (node.edge) {
            j["conjugate_pair"] = {{"sigma", node.edge->sigma.str()},
                                   {"sigma_hat", node.edge->sigma_hat.str()}};
        } else {
            j["conjugate_pair"] = nullptr;
        }
        j["children"] = node.children;
        nodes.push_back(std::move(j));
    }
    ordered_json out;
    out["kind"] = to_string(tree.kind());
    out["params"] = params_json(tree.params());
    out["node_count"] = tree.size();
    out["chain_property"] = check_chain_property(tree);
    if (tree.kind() == FeedbackKind::pcr) out["periodic_leaves"] = check_periodic_leaves(tree);
    out["nodes"] = std::move(nodes);
    return out.dump(indent);
}

std::string tree_to_dot(const CycleTree& tree) {
    std::ostringstream os;
    const auto& p = tree.params();
    os << "digraph \"" << to_string(tree.kind()) << "_t" << p.t << "_n" << p.n << "_w" << p.w
       << "\" {\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const auto& node = tree.nodes()[i];
        os << "  n" << i << " [label=\"" << node.label.str() << "\\nc=" << node.change_index
           << "\"];\n";
    }
    for (std::size_t i = 0; i < tree.size(); ++i) {
        const auto& node = tree.nodes()[i];
        if (!node.parent) continue;
        os << "  n" << *node.parent << " -> n" << i << " [label=\"(" << node.edge->sigma.str()
           << "," << node.edge->sigma_hat.str() << ")\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string report_to_json(const VerifyReport& r, int indent) {
    ordered_json out;
    out["ok"] = r.ok;
    out["expected_count"] = r.expected_count;
    out["seen_count"] = r.seen_count;
    out["missing_total"] = r.missing_total;
    out["duplicated_total"] = r.duplicated_total;
    out["foreign_total"] = r.foreign_total;
    out["missing"] = members_json(r.missing);
    out["duplicated"] = members_json(r.duplicated);
    out["foreign"] = members_json(r.foreign);
    return out.dump(indent);
}

std::string object_to_json(const CombObject& o, int indent) {
    ordered_json out;
    out["kind"] = to_string(o.kind);
    out["n"] = o.n;
    out["k"] = o.k;
    out["elements"] = o.elements;
    return out.dump(indent);
}

std::string conjecture_to_json(const ParamSet& p, const ConjectureReport& r, int indent) {
    ordered_json out;
    out["params"] = params_json(p);
    out["equal"] = r.equal;
    out["first_divergence"] =
        r.first_divergence ? ordered_json(*r.first_divergence) : ordered_json(nullptr);
    out["msr_length"] = r.msr_length;
    out["reverse_colex_length"] = r.reverse_colex_length;
    return out.dump(indent);
}

}  // namespace bwdb
