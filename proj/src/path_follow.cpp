#include "sperner/path_follow.hpp"

#include <algorithm>

namespace sperner {

namespace {

class ExplicitSpace {
public:
    struct Node {
        int level;
        FaceIndex face;
    };
    using Key = std::pair<int, FaceIndex>;

    explicit ExplicitSpace(const Labeling& L) : L_(L), K_(*L.complex()), n_(K_.dim()) {}

    int dim() const { return n_; }
    int level(const Node& node) const { return node.level; }
    Key key(const Node& node) const { return {node.level, node.face}; }

    Node start() const {
        // v_1: the vertex with every coordinate but the first equal to zero.
        const std::uint32_t want = ((1u << (n_ + 1)) - 1) & ~1u;
        for (VertexId v = 0; v < K_.vertex_count(); ++v)
            if (K_.vertex_zero_mask(v) == want) return {0, K_.index_of(Simplex{v})};
        throw InvariantBreach("complex has no vertex at v_1");
    }

    std::vector<Label> labels(const Node& node) {
        std::vector<Label> out;
        for (VertexId v : K_.face(node.level, node.face)) out.push_back(L_[v]);
        if (stats_) stats_->label_queries += out.size();
        return out;
    }

    bool facet_in_lower(const Node& node, int i) const {
        const FaceIndex g = K_.facets(node.level, node.face)[i];
        return (K_.face_zero_mask(node.level - 1, g) >> node.level) & 1u;
    }

    Node lower(const Node& node, int i) const { return {node.level - 1, K_.facets(node.level, node.face)[i]}; }

    std::optional<Node> across(const Node& node, int i) const {
        const int k = node.level;
        const FaceIndex g = K_.facets(k, node.face)[i];
        std::optional<Node> found;
        for (FaceIndex c : K_.cofaces(k - 1, g)) {
            if (c == node.face || !in_face(k, c)) continue;
            if (found) throw InvariantBreach("facet shared by more than two simplices of a face");
            found = Node{k, c};
        }
        return found;
    }

    Node upper(const Node& node) const {
        const int k = node.level;
        std::optional<Node> found;
        for (FaceIndex c : K_.cofaces(k, node.face)) {
            if (!in_face(k + 1, c)) continue;
            if (found) throw InvariantBreach("boundary door with two cofacets");
            found = Node{k + 1, c};
        }
        if (!found) throw InvariantBreach("boundary door without a cofacet");
        return *found;
    }

    void set_stats(PathStats* stats) { stats_ = stats; }

private:
    // The face lies in F_k: coordinates k+2..n+1 vanish on all its vertices.
    bool in_face(int k, FaceIndex f) const {
        const std::uint32_t high = ((1u << (n_ + 1)) - 1) & ~((1u << (k + 1)) - 1);
        return (K_.face_zero_mask(k, f) & high) == high;
    }

    const Labeling& L_;
    const EmbeddedComplex& K_;
    int n_;
    PathStats* stats_ = nullptr;
};

class KuhnSpace {
public:
    using Node = KuhnCell;
    struct Key {
        std::vector<std::int64_t> base;
        std::vector<int> perm;
        friend bool operator==(const Key&, const Key&) = default;
    };

    KuhnSpace(const EdgewiseGrid& grid, const LatticeLabeler& labeler, PathStats* stats)
        : grid_(grid), labeler_(labeler), stats_(stats) {}

    int dim() const { return grid_.dim(); }
    int level(const Node& node) const { return node.level(); }
    Key key(const Node& node) const { return {node.base, node.perm}; }
    Node start() const { return {}; }

    std::vector<Label> labels(const Node& node) {
        std::vector<Label> out;
        for (const LatticePoint& a : grid_.vertices(node)) out.push_back(label_of(a));
        return out;
    }

    bool facet_in_lower(const Node& node, int i) const {
        const int k = node.level();
        return i == k && node.base[k - 1] == 0 && node.perm[k - 1] == k - 1;
    }

    Node lower(const Node& node, int) const {
        const int k = node.level();
        return {std::vector<std::int64_t>(node.base.begin(), node.base.begin() + (k - 1)),
                std::vector<int>(node.perm.begin(), node.perm.begin() + (k - 1))};
    }

    std::optional<Node> across(const Node& node, int i) const { return grid_.neighbor(node, i); }

    Node upper(const Node& node) const {
        Node up = node;
        up.base.push_back(0);
        up.perm.push_back(node.level());
        return up;
    }

private:
    Label label_of(const LatticePoint& a) {
        if (auto it = cache_.find(a); it != cache_.end()) return it->second;
        const Label l = labeler_(a);
        if (stats_) ++stats_->label_queries;
        if (l < 1 || l > grid_.dim() + 1 || a[l - 1] == 0)
            throw InvalidLabeling("lattice labeler returned label " + std::to_string(l) +
                                  " violating the Sperner condition");
        if (cache_.size() >= kCacheLimit) cache_.clear();
        cache_.emplace(a, l);
        return l;
    }

    static constexpr std::size_t kCacheLimit = std::size_t{1} << 20;

    const EdgewiseGrid& grid_;
    const LatticeLabeler& labeler_;
    PathStats* stats_;
    std::unordered_map<LatticePoint, Label, LatticePointHash> cache_;
};

} // namespace

FaceIndex find_fully_labeled_pathfollow(const Labeling& L, PathStats* stats) {
    const auto& K = *L.complex();
    if (K.dim() != K.ambient_dim()) throw InvalidInput("path-following needs a full-dimensional complex");
    require_sperner(L);
    ExplicitSpace space(L);
    space.set_stats(stats);
    return walk_nested_doors(space, stats).face;
}

KuhnCell find_fully_labeled_pathfollow(const EdgewiseGrid& grid, const LatticeLabeler& labeler, PathStats* stats) {
    KuhnSpace space(grid, labeler, stats);
    return walk_nested_doors(space, stats);
}

} // namespace sperner
