#include "holdercover/covertree.hpp"

#include <cmath>
#include <utility>

#include "holdercover/errors.hpp"

namespace holdercover {

Real edge_length(int level, Real d) {
    const Real exponent = static_cast<Real>(level) * d;
    if (exponent == std::floor(exponent) && std::fabs(exponent) < 16000)
        return std::ldexp(Real(1), -static_cast<int>(exponent));
    return std::exp2(-exponent);
}

CoverTree build_tree(const CoverChain& chain) {
    if (chain.levels.empty()) throw ValidationError("cover chain has no levels");
    if (chain.levels.front().balls.size() != 1) throw ValidationError("level 0 must hold exactly one ball");

    CoverTree tree;
    tree.d_ = chain.d;
    std::size_t offset = 0;
    for (const auto& level : chain.levels) {
        tree.level_offset_.push_back(offset);
        offset += level.balls.size();
    }
    tree.vertices_.reserve(offset);
    tree.children_.resize(offset);
    for (std::size_t l = 0; l < chain.levels.size(); ++l) {
        const auto& level = chain.levels[l];
        const int k = static_cast<int>(l);
        if (k > 0 && level.parents.size() != level.balls.size())
            throw ValidationError("missing parent link at level " + std::to_string(k));
        const Real length = k == 0 ? Real(0) : edge_length(k, chain.d);
        for (std::size_t i = 0; i < level.balls.size(); ++i) {
            TreeVertex v;
            v.level = k;
            v.index = i;
            if (k > 0) {
                const std::size_t p = level.parents[i];
                if (p >= chain.levels[l - 1].balls.size())
                    throw ValidationError("missing parent link at level " + std::to_string(k));
                v.parent = tree.level_offset_[l - 1] + p;
                v.edge_length = length;
                tree.children_[v.parent].push_back(tree.vertices_.size());
                tree.total_length_ += length;
            }
            tree.vertices_.push_back(v);
        }
    }
    return tree;
}

Real tree_distance(const CoverTree& tree, std::size_t u, std::size_t v) {
    const auto& vs = tree.vertices();
    Real total = 0;
    while (u != v) {
        if (vs[u].level >= vs[v].level) {
            total += vs[u].edge_length;
            u = vs[u].parent;
        } else {
            total += vs[v].edge_length;
            v = vs[v].parent;
        }
    }
    return total;
}

EulerTour euler_tour(const CoverTree& tree) {
    EulerTour tour;
    if (tree.size() == 0) throw ValidationError("empty tree has no tour");
    tour.steps.reserve(2 * (tree.size() - 1));
    Real cumulative = 0;
    // (vertex, next child position)
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& kids = tree.children(v);
        if (next < kids.size()) {
            const std::size_t c = kids[next++];
            cumulative += tree.vertices()[c].edge_length;
            tour.steps.push_back({v, c, tree.vertices()[c].edge_length, cumulative});
            stack.emplace_back(c, 0);
        } else {
            const std::size_t done = v;
            stack.pop_back();
            if (!stack.empty()) {
                cumulative += tree.vertices()[done].edge_length;
                tour.steps.push_back({done, stack.back().first, tree.vertices()[done].edge_length, cumulative});
            }
        }
    }
    return tour;
}

}  // namespace holdercover
