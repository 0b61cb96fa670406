#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "autfp/matrix.hpp"

namespace autfp {

struct MuteNode;

/// Labelled vertex with its mute children.
struct LabelNode {
    int label = -1;
    std::vector<MuteNode> children;
};

/// Mute vertex with its labelled children (never empty in a valid tree).
struct MuteNode {
    std::vector<LabelNode> children;
};

/// Planted bipartite labelled tree: the root * has a unique mute neighbour
/// (`top`), mute and labelled vertices alternate, labels are 0..n-1 each
/// appearing once, and no mute vertex is a leaf. Values are immutable and
/// canonically ordered; equality is planted tree isomorphism over the labels.
class TreeJ {
public:
    TreeJ(MuteNode top, int label_count);

    /// The minimum N_E: a single mute vertex with every label as a leaf.
    static TreeJ minimal(int label_count);
    /// Parse the nested-parenthesis form, e.g. "(*(m(1)(2)))".
    static TreeJ parse(const std::string& text);

    const MuteNode& top() const { return top_; }
    int label_count() const { return label_count_; }
    const std::string& key() const { return key_; }
    /// Nested-parenthesis serialization (identical to key()).
    const std::string& to_text() const { return key_; }

    bool operator==(const TreeJ& o) const { return key_ == o.key_; }
    bool operator<(const TreeJ& o) const { return key_ < o.key_; }

    int mute_count() const;

    /// All trees reachable by one elementary fold (covering moves downward).
    std::vector<TreeJ> covering_folds() const;

    /// True when every mute vertex other than the root's neighbour is
    /// bivalent; membership in the subfamily indexing the H_0 decomposition.
    bool in_fancy_f() const;

private:
    void validate() const;
    MuteNode top_;
    int label_count_;
    std::string key_;
};

/// All trees over labels 0..n-1, deduplicated by canonical key, sorted.
std::vector<TreeJ> enumerate_trees(int label_count, int max_labels = 6);

/// Folding order: true iff a is reachable from b by a (possibly empty)
/// sequence of folds; computed by closure over the covering graph.
bool fold_leq(const TreeJ& a, const TreeJ& b);

/// The tree poset with reachability precomputed, for order/homology work.
class TreePoset {
public:
    explicit TreePoset(std::vector<TreeJ> elements);
    static TreePoset full(int label_count, int max_labels = 6) {
        return TreePoset(enumerate_trees(label_count, max_labels));
    }

    int size() const { return static_cast<int>(elements_.size()); }
    const TreeJ& element(int i) const { return elements_[i]; }
    int index_of(const TreeJ& t) const;
    bool less(int i, int j) const { return i != j && leq_[i][j]; }
    bool leq(int i, int j) const { return leq_[i][j]; }
    /// Indices of elements covered by i via one fold.
    const std::vector<int>& down_covers(int i) const { return covers_[i]; }

private:
    std::vector<TreeJ> elements_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> covers_;
    std::vector<std::vector<char>> leq_;
};

/// Partial injection between label sets {0..src_size-1} -> {0..dst_size-1}.
struct ThetaMorphism {
    int src_size = 0;
    int dst_size = 0;
    std::vector<int> map;  // per source label: target label or -1

    ThetaMorphism() = default;
    ThetaMorphism(int src, int dst, std::vector<int> m);

    static ThetaMorphism identity(int n);
    /// Total inclusion sending label e to e.
    static ThetaMorphism inclusion(int src, int dst);
    /// Partial identity on E defined exactly on the given subset.
    static ThetaMorphism subset_idempotent(int n, const std::vector<int>& subset);

    bool defined(int e) const { return e >= 0 && e < src_size && map[e] >= 0; }
    /// this after other: (this o other)(x) = this(other(x)).
    ThetaMorphism compose_after(const ThetaMorphism& other) const;
    std::vector<int> domain() const;
};

/// The tree functor on a Theta morphism: fold at labels outside the domain,
/// cut their leaves, relabel along f, then plant the new labels beside the
/// root. Monotone for the folding order.
TreeJ jf_map(const ThetaMorphism& f, const TreeJ& a);

}  // namespace autfp
