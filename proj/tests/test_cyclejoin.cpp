#include <map>
#include <set>
#include <stdexcept>

#include "bwdb/cyclejoin.hpp"
#include "bwdb/msr.hpp"
#include "doctest.h"
#include "support/goldens.hpp"
#include "support/reference.hpp"

using namespace bwdb;

namespace {

Word W(const char* s, Symbol t) { return Word::parse(s, t); }

// Parent under the first non-zero rule, straight from the definition.
ref::Seq ref_parent(ref::Seq a, bool msr) {
    std::size_t j = 0;
    while (a[j] == 0) ++j;
    --a[j];
    if (msr) ++a[j + 1];
    return a;
}

bool is_rotation(const ref::Seq& a, const ref::Seq& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (ref::rotate(a, k) == b) return true;
    return false;
}

ref::Seq with_missing(const ref::Seq& s, std::uint64_t w) {
    ref::Seq out = s;
    out.push_back(static_cast<std::uint32_t>(w - ref::weight(s)));
    return out;
}

std::map<std::string, std::string> parent_map(const CycleTree& tree) {
    std::map<std::string, std::string> out;
    for (const auto& node : tree.nodes())
        if (node.parent) out[node.label.str()] = tree.nodes()[*node.parent].label.str();
    return out;
}

template <class F>
void for_desk_cells(F&& f) {
    for (Symbol t = 2; t <= 5; ++t)
        for (std::size_t n = 1; n <= 5; ++n) {
            if (n == 5 && t > 4) continue;
            for (std::uint64_t w = 0; w <= n * (t - 1); ++w) f(ParamSet{t, n, w});
        }
}

}  // namespace

TEST_SUITE("cyclejoin") {
    TEST_CASE("pcr parent examples and errors") {
        CHECK(pcr_parent(W("001", 5)).str() == "000");
        CHECK(pcr_parent(W("112", 5)).str() == "012");
        CHECK(pcr_parent(W("021", 5)).str() == "011");
        CHECK_THROWS_AS(pcr_parent(W("000", 5)), std::invalid_argument);
    }

    TEST_CASE("msr parent examples and errors") {
        CHECK(msr_parent(W("0013", 5)).str() == "0004");
        CHECK(msr_parent(W("0112", 5)).str() == "0022");
        CHECK(msr_parent(W("0211", 5)).str() == "0121");
        CHECK_THROWS_AS(msr_parent(W("0004", 5)), std::invalid_argument);
    }

    TEST_CASE("first non-zero tree for t=5 n=3 w=4") {
        const auto tree = build_tree(FeedbackKind::pcr, {5, 3, 4});
        CHECK(tree.size() == 13);
        CHECK(tree.root().label.str() == "000");
        const auto pm = parent_map(tree);
        CHECK(pm.at("001") == "000");
        CHECK(pm.at("112") == "012");
        CHECK(pm.at("021") == "011");
        CHECK(check_chain_property(tree));
        CHECK(check_periodic_leaves(tree));
        for (const char* periodic : {"111", "022"}) {
            const auto id = tree.find(W(periodic, 5));
            REQUIRE(id);
            CHECK(tree.nodes()[*id].children.empty());
        }
    }

    TEST_CASE("MSR tree for t=5 n=3 w=4") {
        const auto tree = build_tree(FeedbackKind::msr, {5, 3, 4});
        CHECK(tree.size() == 10);
        CHECK(tree.root().label.str() == "0004");
        const auto pm = parent_map(tree);
        CHECK(pm.at("0013") == "0004");
        CHECK(pm.at("0112") == "0022");
        CHECK(pm.at("0211") == "0121");
        CHECK(check_chain_property(tree));
        CHECK_THROWS_AS(check_periodic_leaves(tree), std::invalid_argument);
    }

    TEST_CASE("small pcr path") {
        const auto tree = build_tree(FeedbackKind::pcr, {2, 2, 2});
        CHECK(parent_map(tree) == std::map<std::string, std::string>{{"01", "00"}, {"11", "01"}});
    }

    TEST_CASE("build_tree errors") {
        CHECK_THROWS_AS(build_tree(FeedbackKind::msr, {3, 3, 3}), std::invalid_argument);
        CHECK_THROWS_AS(build_tree(FeedbackKind::pcr, {4, 6, 18}, 100), std::length_error);
    }

    TEST_CASE("chain property violation is detected") {
        std::vector<TreeNode> nodes(3, TreeNode{W("00", 3), 2, std::nullopt, std::nullopt, {}});
        nodes[1] = TreeNode{W("01", 3), 2, 0, ConjugatePair{W("00", 3), W("10", 3)}, {}};
        nodes[2] = TreeNode{W("02", 3), 2, 0, ConjugatePair{W("10", 3), W("20", 3)}, {}};
        const CycleTree tree(FeedbackKind::pcr, {3, 2, 4}, nodes);
        CHECK_FALSE(check_chain_property(tree));

        // two pairs leaving the same string cannot both be applied
        nodes[2] = TreeNode{W("02", 3), 2, 0, ConjugatePair{W("00", 3), W("20", 3)}, {}};
        const CycleTree clash(FeedbackKind::pcr, {3, 2, 4}, nodes);
        CHECK_FALSE(check_chain_property(clash));
        CHECK_THROWS_AS(GenericSuccessor{clash}, std::invalid_argument);
    }

    TEST_CASE("malformed trees are rejected") {
        std::vector<TreeNode> dup(2, TreeNode{W("00", 3), 2, std::nullopt, std::nullopt, {}});
        dup[1].parent = 0;
        CHECK_THROWS_AS(CycleTree(FeedbackKind::pcr, {3, 2, 4}, dup), std::invalid_argument);
        std::vector<TreeNode> orphan(2, TreeNode{W("00", 3), 2, std::nullopt, std::nullopt, {}});
        orphan[1].label = W("01", 3);
        CHECK_THROWS_AS(CycleTree(FeedbackKind::pcr, {3, 2, 4}, orphan), std::invalid_argument);
    }

    TEST_CASE("periodic leaves: t=2 n=4 w=4 and a single-node tree") {
        CHECK(check_periodic_leaves(build_tree(FeedbackKind::pcr, {2, 4, 4})));
        const auto single = build_tree(FeedbackKind::pcr, {1, 3, 0});
        CHECK(single.size() == 1);
        CHECK(check_periodic_leaves(single));
    }

    TEST_CASE("generic successor examples") {
        const auto pcr = build_tree(FeedbackKind::pcr, {5, 3, 4});
        CHECK(generic_successor(pcr, W("000", 5)) == 1);
        CHECK(generic_successor(pcr, W("100", 5)) == 2);
        CHECK(generic_successor(pcr, W("200", 5)) == 3);
        CHECK(generic_successor(pcr, W("300", 5)) == 4);
        CHECK(generic_successor(pcr, W("400", 5)) == 0);
        CHECK_THROWS_AS(generic_successor(pcr, W("444", 5)), std::invalid_argument);

        // windows outside every conjugate pair fall back to the first symbol
        GenericSuccessor h(pcr);
        std::set<ref::Seq> in_pairs;
        for (const auto& node : pcr.nodes()) {
            if (!node.edge) continue;
            in_pairs.insert(node.edge->sigma.vec());
            in_pairs.insert(node.edge->sigma_hat.vec());
        }
        for (const auto& a : ref::sigma(5, 3, 4))
            if (!in_pairs.count(a)) CHECK(h(std::span<const Symbol>(a)) == a[0]);

        const auto msr = build_tree(FeedbackKind::msr, {5, 3, 4});
        CHECK(generic_successor(msr, W("000", 5)) == 4);
    }

    TEST_CASE("trees match the brute-force parent rule") {
        for_desk_cells([](const ParamSet& p) {
            CAPTURE(p.t);
            CAPTURE(p.n);
            CAPTURE(p.w);
            const auto tree = build_tree(FeedbackKind::pcr, p);
            const auto expect = ref::necklaces_colex(p.t, static_cast<unsigned>(p.n), 0, p.w);
            REQUIRE(tree.size() == expect.size());
            CHECK(tree.root().label.vec() == ref::Seq(p.n, 0));
            std::map<std::size_t, std::set<std::size_t>> periodic_children;
            for (std::size_t i = 1; i < tree.size(); ++i) {
                const auto& node = tree.nodes()[i];
                const ref::Seq label = node.label.vec();
                CHECK(ref::is_necklace(label));
                const ref::Seq parent = ref_parent(label, false);
                CHECK(tree.nodes()[*node.parent].label.vec() == parent);
                CHECK(ref::is_necklace(parent));
                ref::Seq lone_one(p.n, 0);
                lone_one.back() = 1;
                if (label != lone_one) CHECK(ref::period(parent) == p.n);
                if (ref::period(label) != p.n) periodic_children[*node.parent].insert(i);
                // pair: sigma in the parent cycle, sigma_hat in the child cycle
                const auto& e = *node.edge;
                CHECK(is_rotation(parent, e.sigma.vec()));
                CHECK(is_rotation(label, e.sigma_hat.vec()));
                CHECK(e.sigma[0] != e.sigma_hat[0]);
                for (std::size_t k = 1; k < p.n; ++k) CHECK(e.sigma[k] == e.sigma_hat[k]);
            }
            for (const auto& [parent, kids] : periodic_children) CHECK(kids.size() <= 1);
            CHECK(check_chain_property(tree));
            CHECK(check_periodic_leaves(tree));
        });
    }

    TEST_CASE("MSR trees match the brute-force parent rule") {
        for_desk_cells([](const ParamSet& p) {
            if (p.w >= p.t) return;
            CAPTURE(p.t);
            CAPTURE(p.n);
            CAPTURE(p.w);
            const auto tree = build_tree(FeedbackKind::msr, p);
            const auto expect = ref::necklaces_colex(p.t, static_cast<unsigned>(p.n + 1), p.w, p.w);
            REQUIRE(tree.size() == expect.size());
            ref::Seq root(p.n + 1, 0);
            root.back() = static_cast<std::uint32_t>(p.w);
            CHECK(tree.root().label.vec() == root);
            for (std::size_t i = 1; i < tree.size(); ++i) {
                const auto& node = tree.nodes()[i];
                const ref::Seq label = node.label.vec();
                CHECK(ref::weight(label) == p.w);
                CHECK(ref::is_necklace(label));
                const ref::Seq parent = ref_parent(label, true);
                CHECK(tree.nodes()[*node.parent].label.vec() == parent);
                const auto& e = *node.edge;
                CHECK(is_rotation(parent, with_missing(e.sigma.vec(), p.w)));
                CHECK(is_rotation(label, with_missing(e.sigma_hat.vec(), p.w)));
                CHECK(e.sigma[0] != e.sigma_hat[0]);
            }
            CHECK(check_chain_property(tree));
        });
    }

    TEST_CASE("generic successor yields universal cycles") {
        for_desk_cells([](const ParamSet& p) {
            CAPTURE(p.t);
            CAPTURE(p.n);
            CAPTURE(p.w);
            const auto universe = ref::sigma(p.t, static_cast<unsigned>(p.n), p.w);
            const auto cycle = generate_generic(build_tree(FeedbackKind::pcr, p));
            CHECK(cycle.size() == universe.size());
            if (universe.size() >= p.n) CHECK(ref::is_universal(cycle.symbols, p.n, universe));
            if (p.w < p.t) {
                const auto msr = generate_generic(build_tree(FeedbackKind::msr, p));
                if (universe.size() >= p.n) CHECK(ref::is_universal(msr.symbols, p.n, universe));
            }
        });
    }

    TEST_CASE("generic successor over the MSR tree agrees with h2 on every window") {
        for_desk_cells([](const ParamSet& p) {
            if (p.w >= p.t) return;
            CAPTURE(p.t);
            CAPTURE(p.n);
            CAPTURE(p.w);
            GenericSuccessor h(build_tree(FeedbackKind::msr, p));
            for (const auto& a : ref::sigma(p.t, static_cast<unsigned>(p.n), p.w))
                CHECK(h(std::span<const Symbol>(a)) == successor_h2(p, std::span<const Symbol>(a)));
        });
    }

    TEST_CASE("feedback functions") {
        const ParamSet p{5, 3, 4};
        const ref::Seq a{2, 1, 0};
        CHECK(feedback(FeedbackKind::pcr, p, a) == 2);
        CHECK(feedback(FeedbackKind::msr, p, a) == 1);
    }
}
