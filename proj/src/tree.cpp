#include "autfp/tree.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <set>

#include <fmt/format.h>

namespace autfp {

namespace {

int min_label_of(const MuteNode& m);

int min_label_of(const LabelNode& l) {
    int best = l.label;
    for (const auto& m : l.children) best = std::min(best, min_label_of(m));
    return best;
}

int min_label_of(const MuteNode& m) {
    int best = INT_MAX;
    for (const auto& l : m.children) best = std::min(best, min_label_of(l));
    return best;
}

void canonicalize(MuteNode& m);

void canonicalize(LabelNode& l) {
    for (auto& m : l.children) canonicalize(m);
    std::sort(l.children.begin(), l.children.end(),
              [](const MuteNode& a, const MuteNode& b) { return min_label_of(a) < min_label_of(b); });
}

void canonicalize(MuteNode& m) {
    for (auto& l : m.children) canonicalize(l);
    std::sort(m.children.begin(), m.children.end(),
              [](const LabelNode& a, const LabelNode& b) { return min_label_of(a) < min_label_of(b); });
}

void serialize(const MuteNode& m, std::string& out);

void serialize(const LabelNode& l, std::string& out) {
    out += "(";
    out += std::to_string(l.label);
    for (const auto& m : l.children) serialize(m, out);
    out += ")";
}

void serialize(const MuteNode& m, std::string& out) {
    out += "(m";
    for (const auto& l : m.children) serialize(l, out);
    out += ")";
}

void collect_labels(const MuteNode& m, std::vector<int>& out);

void collect_labels(const LabelNode& l, std::vector<int>& out) {
    out.push_back(l.label);
    for (const auto& m : l.children) collect_labels(m, out);
}

void collect_labels(const MuteNode& m, std::vector<int>& out) {
    for (const auto& l : m.children) collect_labels(l, out);
}

void check_mute_not_leaf(const MuteNode& m, bool is_top) {
    if (m.children.empty() && !is_top)
        throw StructuralError("TreeJ: mute vertex is a leaf");
    for (const auto& l : m.children)
        for (const auto& c : l.children) check_mute_not_leaf(c, false);
}

int count_mutes(const MuteNode& m) {
    int n = 1;
    for (const auto& l : m.children)
        for (const auto& c : l.children) n += count_mutes(c);
    return n;
}

}  // namespace

TreeJ::TreeJ(MuteNode top, int label_count) : top_(std::move(top)), label_count_(label_count) {
    validate();
    canonicalize(top_);
    key_ = "(*";
    serialize(top_, key_);
    key_ += ")";
}

void TreeJ::validate() const {
    if (label_count_ <= 0)
        throw StructuralError("TreeJ: the label set must be nonempty");
    std::vector<int> labels;
    collect_labels(top_, labels);
    std::vector<char> seen(label_count_, 0);
    for (int l : labels) {
        if (l < 0 || l >= label_count_) throw StructuralError("TreeJ: label out of range");
        if (seen[l]) throw StructuralError("TreeJ: repeated label");
        seen[l] = 1;
    }
    if (static_cast<int>(labels.size()) != label_count_)
        throw StructuralError("TreeJ: missing label");
    check_mute_not_leaf(top_, false);  // the top mute also needs a child
}

TreeJ TreeJ::minimal(int label_count) {
    MuteNode top;
    for (int e = 0; e < label_count; ++e) top.children.push_back({e, {}});
    return TreeJ(std::move(top), label_count);
}

int TreeJ::mute_count() const { return count_mutes(top_); }

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void expect(char c) {
        if (pos >= s.size() || s[pos] != c)
            throw StructuralError(fmt::format("TreeJ::parse: expected '{}' at {}", c, pos));
        ++pos;
    }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    LabelNode parse_label() {
        expect('(');
        size_t start = pos;
        while (pos < s.size() && std::isdigit(s[pos])) ++pos;
        if (pos == start) throw StructuralError("TreeJ::parse: expected label");
        LabelNode l;
        l.label = std::stoi(s.substr(start, pos - start));
        while (peek() == '(') l.children.push_back(parse_mute());
        expect(')');
        return l;
    }

    MuteNode parse_mute() {
        expect('(');
        expect('m');
        MuteNode m;
        while (peek() == '(') m.children.push_back(parse_label());
        expect(')');
        return m;
    }
};

}  // namespace

TreeJ TreeJ::parse(const std::string& text) {
    Parser p(text);
    p.expect('(');
    p.expect('*');
    MuteNode top = p.parse_mute();
    p.expect(')');
    if (p.pos != text.size()) throw StructuralError("TreeJ::parse: trailing input");
    std::vector<int> labels;
    collect_labels(top, labels);
    int n = 0;
    for (int l : labels) n = std::max(n, l + 1);
    return TreeJ(std::move(top), n);
}

namespace {

// Trees over exactly the labels in `bits` are enumerated by mutual recursion
// on mute contents and labelled subtrees, memoized per label subset.
struct Enumerator {
    int n;
    std::unordered_map<unsigned, std::vector<MuteNode>> mute_memo;
    std::unordered_map<unsigned, std::vector<LabelNode>> label_memo;

    std::vector<unsigned> bits_of(unsigned mask) const {
        std::vector<unsigned> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(i);
        return v;
    }

    // all set partitions of mask into nonempty blocks; allow_empty covers the
    // zero-block partition of the empty set
    std::vector<std::vector<unsigned>> partitions(unsigned mask) const {
        if (mask == 0) return {{}};
        std::vector<std::vector<unsigned>> out;
        unsigned low = mask & ~(mask - 1);  // lowest bit anchors its block
        unsigned rest = mask ^ low;
        // iterate subsets of rest joining the anchor block
        unsigned sub = 0;
        for (;;) {
            unsigned block = low | sub;
            for (auto tail : partitions(mask ^ block)) {
                tail.insert(tail.begin(), block);
                out.push_back(std::move(tail));
            }
            if (sub == rest) break;
            sub = (sub - rest) & rest;  // next subset of rest
        }
        return out;
    }

    const std::vector<LabelNode>& labelled(unsigned mask) {
        auto it = label_memo.find(mask);
        if (it != label_memo.end()) return it->second;
        std::vector<LabelNode> out;
        for (unsigned e : bits_of(mask)) {
            unsigned rest = mask & ~(1u << e);
            for (const auto& part : partitions(rest)) {
                std::vector<std::vector<MuteNode>> choices;
                for (unsigned block : part) choices.push_back(mutes(block));
                std::vector<size_t> pick(choices.size(), 0);
                for (;;) {
                    LabelNode l;
                    l.label = static_cast<int>(e);
                    for (size_t k = 0; k < choices.size(); ++k)
                        l.children.push_back(choices[k][pick[k]]);
                    out.push_back(std::move(l));
                    size_t k = 0;
                    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
                    if (k == pick.size()) break;
                    if (choices.empty()) break;
                }
                if (choices.empty()) continue;  // single iteration already emitted
            }
        }
        return label_memo.emplace(mask, std::move(out)).first->second;
    }

    std::vector<MuteNode> mutes(unsigned mask) {
        auto it = mute_memo.find(mask);
        if (it != mute_memo.end()) return it->second;
        std::vector<MuteNode> out;
        for (const auto& part : partitions(mask)) {
            if (part.empty()) continue;
            std::vector<std::vector<LabelNode>> choices;
            for (unsigned block : part) choices.push_back(labelled(block));
            std::vector<size_t> pick(choices.size(), 0);
            for (;;) {
                MuteNode m;
                for (size_t k = 0; k < choices.size(); ++k)
                    m.children.push_back(choices[k][pick[k]]);
                out.push_back(std::move(m));
                size_t k = 0;
                while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
                if (k == pick.size()) break;
            }
        }
        mute_memo.emplace(mask, out);
        return out;
    }
};

}  // namespace

std::vector<TreeJ> enumerate_trees(int label_count, int max_labels) {
    if (label_count <= 0) throw StructuralError("enumerate_trees: empty label set");
    if (label_count > max_labels)
        throw BoundExceeded(fmt::format("enumerate_trees: {} labels exceeds bound {}",
                                        label_count, max_labels));
    Enumerator en{label_count};
    std::set<std::string> keys;
    std::vector<TreeJ> out;
    for (auto& top : en.mutes((1u << label_count) - 1)) {
        TreeJ t(top, label_count);
        if (keys.insert(t.key()).second) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct LabelFold {
    LabelNode node;
    std::vector<LabelNode> promoted;  // grandchildren handed to the parent mute
};

std::vector<MuteNode> folds_of_mute(const MuteNode& m);

std::vector<LabelFold> folds_of_label(const LabelNode& ln) {
    std::vector<LabelFold> out;
    const int k = static_cast<int>(ln.children.size());
    // merge two child edges
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            LabelNode v{ln.label, {}};
            MuteNode merged = ln.children[i];
            merged.children.insert(merged.children.end(), ln.children[j].children.begin(),
                                   ln.children[j].children.end());
            for (int t = 0; t < k; ++t) {
                if (t == j) continue;
                v.children.push_back(t == i ? merged : ln.children[t]);
            }
            out.push_back({std::move(v), {}});
        }
    // merge a child edge with the parent edge
    for (int i = 0; i < k; ++i) {
        LabelNode v{ln.label, {}};
        for (int t = 0; t < k; ++t)
            if (t != i) v.children.push_back(ln.children[t]);
        out.push_back({std::move(v), ln.children[i].children});
    }
    // recurse into subtrees
    for (int i = 0; i < k; ++i)
        for (auto& variant : folds_of_mute(ln.children[i])) {
            LabelNode v{ln.label, ln.children};
            v.children[i] = std::move(variant);
            out.push_back({std::move(v), {}});
        }
    return out;
}

std::vector<MuteNode> folds_of_mute(const MuteNode& m) {
    std::vector<MuteNode> out;
    for (size_t i = 0; i < m.children.size(); ++i)
        for (auto& lf : folds_of_label(m.children[i])) {
            MuteNode v{m.children};
            v.children[i] = std::move(lf.node);
            for (auto& p : lf.promoted) v.children.push_back(std::move(p));
            out.push_back(std::move(v));
        }
    return out;
}

}  // namespace

std::vector<TreeJ> TreeJ::covering_folds() const {
    std::vector<TreeJ> out;
    std::set<std::string> seen;
    for (auto& m : folds_of_mute(top_)) {
        TreeJ t(std::move(m), label_count_);
        if (seen.insert(t.key()).second) out.push_back(std::move(t));
    }
    return out;
}

bool TreeJ::in_fancy_f() const {
    // every mute vertex below a labelled vertex must have exactly one child
    struct {
        bool ok = true;
        void visit(const LabelNode& l) {
            for (const auto& m : l.children) {
                if (m.children.size() != 1) ok = false;
                for (const auto& c : m.children) visit(c);
            }
        }
    } walker;
    for (const auto& l : top_.children) walker.visit(l);
    return walker.ok;
}

bool fold_leq(const TreeJ& a, const TreeJ& b) {
    if (a.label_count() != b.label_count())
        throw StructuralError("fold_leq: different label sets");
    if (a == b) return true;
    if (a.mute_count() > b.mute_count()) return false;
    std::set<std::string> seen{b.key()};
    std::vector<TreeJ> frontier{b};
    while (!frontier.empty()) {
        std::vector<TreeJ> next;
        for (const auto& t : frontier)
            for (auto& f : t.covering_folds()) {
                if (f == a) return true;
                if (f.mute_count() >= a.mute_count() && seen.insert(f.key()).second)
                    next.push_back(std::move(f));
            }
        frontier = std::move(next);
    }
    return false;
}

TreePoset::TreePoset(std::vector<TreeJ> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    for (int i = 0; i < size(); ++i) index_[elements_[i].key()] = i;
    covers_.resize(size());
    leq_.assign(size(), std::vector<char>(size(), 0));
    for (int i = 0; i < size(); ++i) {
        leq_[i][i] = 1;
        for (const auto& f : elements_[i].covering_folds()) {
            auto it = index_.find(f.key());
            if (it == index_.end())
                throw StructuralError("TreePoset: fold leaves the element set");
            covers_[i].push_back(it->second);
        }
    }
    // reachability: propagate in increasing mute-count order
    std::vector<int> order(size());
    for (int i = 0; i < size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return elements_[x].mute_count() < elements_[y].mute_count();
    });
    for (int i : order)
        for (int c : covers_[i])
            for (int j = 0; j < size(); ++j)
                if (leq_[j][c]) leq_[j][i] = 1;
}

int TreePoset::index_of(const TreeJ& t) const {
    auto it = index_.find(t.key());
    if (it == index_.end()) throw StructuralError("TreePoset: unknown element");
    return it->second;
}

ThetaMorphism::ThetaMorphism(int src, int dst, std::vector<int> m)
    : src_size(src), dst_size(dst), map(std::move(m)) {
    if (static_cast<int>(map.size()) != src_size)
        throw StructuralError("ThetaMorphism: wrong map length");
    std::vector<char> hit(dst_size, 0);
    for (int v : map) {
        if (v < -1 || v >= dst_size) throw StructuralError("ThetaMorphism: target out of range");
        if (v >= 0) {
            if (hit[v]) throw StructuralError("ThetaMorphism: not injective");
            hit[v] = 1;
        }
    }
}

ThetaMorphism ThetaMorphism::identity(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return ThetaMorphism(n, n, std::move(m));
}

ThetaMorphism ThetaMorphism::inclusion(int src, int dst) {
    if (src > dst) throw StructuralError("ThetaMorphism::inclusion: source too large");
    std::vector<int> m(src);
    for (int i = 0; i < src; ++i) m[i] = i;
    return ThetaMorphism(src, dst, std::move(m));
}

ThetaMorphism ThetaMorphism::subset_idempotent(int n, const std::vector<int>& subset) {
    std::vector<int> m(n, -1);
    for (int e : subset) {
        if (e < 0 || e >= n) throw StructuralError("subset_idempotent: label out of range");
        m[e] = e;
    }
    return ThetaMorphism(n, n, std::move(m));
}

ThetaMorphism ThetaMorphism::compose_after(const ThetaMorphism& other) const {
    if (other.dst_size != src_size)
        throw StructuralError("ThetaMorphism: not composable");
    std::vector<int> m(other.src_size, -1);
    for (int x = 0; x < other.src_size; ++x)
        if (other.map[x] >= 0 && map[other.map[x]] >= 0) m[x] = map[other.map[x]];
    return ThetaMorphism(other.src_size, dst_size, std::move(m));
}

std::vector<int> ThetaMorphism::domain() const {
    std::vector<int> d;
    for (int i = 0; i < src_size; ++i)
        if (map[i] >= 0) d.push_back(i);
    return d;
}

namespace {

struct JfRewriter {
    const ThetaMorphism& f;

    struct LabelResult {
        std::optional<LabelNode> kept;
        std::vector<LabelNode> hoisted;
    };

    MuteNode process_mute(const MuteNode& m) const {
        MuteNode out;
        for (const auto& l : m.children) {
            LabelResult r = process_label(l);
            if (r.kept) out.children.push_back(std::move(*r.kept));
            for (auto& h : r.hoisted) out.children.push_back(std::move(h));
        }
        return out;
    }

    LabelResult process_label(const LabelNode& ln) const {
        if (f.defined(ln.label)) {
            LabelNode kept{f.map[ln.label], {}};
            for (const auto& m : ln.children) {
                MuteNode pm = process_mute(m);
                if (!pm.children.empty()) kept.children.push_back(std::move(pm));
            }
            return {std::move(kept), {}};
        }
        // fold every edge at this vertex onto the parent edge, then cut it:
        // the grandchildren become siblings
        LabelResult r;
        for (const auto& m : ln.children) {
            MuteNode pm = process_mute(m);
            for (auto& c : pm.children) r.hoisted.push_back(std::move(c));
        }
        return r;
    }
};

}  // namespace

TreeJ jf_map(const ThetaMorphism& f, const TreeJ& a) {
    if (a.label_count() != f.src_size)
        throw StructuralError("jf_map: label set mismatch");
    if (f.dst_size <= 0)
        throw StructuralError("jf_map: empty target label set");
    JfRewriter rw{f};
    MuteNode top = rw.process_mute(a.top());
    std::vector<char> used(f.dst_size, 0);
    for (int e = 0; e < f.src_size; ++e)
        if (f.map[e] >= 0) used[f.map[e]] = 1;
    for (int e = 0; e < f.dst_size; ++e)
        if (!used[e]) top.children.push_back({e, {}});
    return TreeJ(std::move(top), f.dst_size);
}

}  // namespace autfp
