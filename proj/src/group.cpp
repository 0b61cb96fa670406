#include "autfp/group.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace autfp {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> mult)
    : name_(std::move(name)), order_(static_cast<int>(mult.size())), mult_(std::move(mult)) {
    validate();
    inv_.assign(order_, -1);
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mult_[a][b] == 0) inv_[a] = b;
}

void FiniteGroup::validate() const {
    if (order_ <= 0) throw StructuralError("FiniteGroup: empty table");
    for (const auto& row : mult_)
        if (static_cast<int>(row.size()) != order_)
            throw StructuralError("FiniteGroup: ragged table");
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            if (mult_[a][b] < 0 || mult_[a][b] >= order_)
                throw StructuralError("FiniteGroup: entry out of range");
    for (int a = 0; a < order_; ++a)
        if (mult_[0][a] != a || mult_[a][0] != a)
            throw StructuralError("FiniteGroup: identity is not at index 0");
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
                    throw StructuralError("FiniteGroup: table is not associative");
    for (int a = 0; a < order_; ++a) {
        bool has_inv = false;
        for (int b = 0; b < order_; ++b) has_inv |= (mult_[a][b] == 0);
        if (!has_inv) throw StructuralError("FiniteGroup: missing inverse");
    }
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n <= 0) throw StructuralError("cyclic: order must be positive");
    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
    return FiniteGroup(fmt::format("Z{}", n), std::move(mult));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b, std::string name) {
    const int n = a.order() * b.order();
    auto enc = [&](int x, int y) { return x * b.order() + y; };
    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.order(); ++x1)
        for (int y1 = 0; y1 < b.order(); ++y1)
            for (int x2 = 0; x2 < a.order(); ++x2)
                for (int y2 = 0; y2 < b.order(); ++y2)
                    mult[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
    return FiniteGroup(std::move(name), std::move(mult));
}

FiniteGroup FiniteGroup::klein_four() {
    return product(cyclic(2), cyclic(2), "V4");
}

FiniteGroup FiniteGroup::symmetric_3() {
    // permutations of {0,1,2}; identity first
    const std::vector<std::array<int, 3>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw StructuralError("symmetric_3: bad permutation");
    };
    std::vector<std::vector<int>> mult(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
            mult[a][b] = index_of(c);
        }
    return FiniteGroup("S3", std::move(mult));
}

FiniteGroup FiniteGroup::from_stream(std::istream& in, const std::string& name) {
    std::string keyword;
    int n = 0;
    if (!(in >> keyword >> n) || keyword != "order" || n <= 0)
        throw StructuralError("group table: expected header 'order n'");
    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> mult[i][j])) throw StructuralError("group table: truncated table");
    return FiniteGroup(name, std::move(mult));
}

FiniteGroup FiniteGroup::from_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError(fmt::format("group table: cannot open '{}'", path));
    return from_stream(in, path);
}

int FiniteGroup::element_order(int a) const {
    int k = 1, x = a;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

FgAbGroup FiniteGroup::abelianization() const {
    // relators x_a + x_b - x_ab on one generator per element
    IntMatrix rel(order_, order_ * order_);
    int col = 0;
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b, ++col) {
            rel.at(a, col) += 1;
            rel.at(b, col) += 1;
            rel.at(mult_[a][b], col) -= 1;
        }
    return FgAbGroup::cokernel(rel);
}

namespace {

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the subgroup generated so far.
std::vector<int> generating_sequence(const FiniteGroup& g) {
    std::vector<char> in_closure(g.order(), 0);
    in_closure[0] = 1;
    int closure_size = 1;
    std::vector<int> gens;
    while (closure_size < g.order()) {
        int pick = -1;
        for (int x = 1; x < g.order(); ++x)
            if (!in_closure[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        // close under multiplication
        std::vector<int> members;
        for (int x = 0; x < g.order(); ++x)
            if (in_closure[x]) members.push_back(x);
        std::vector<int> frontier = {pick};
        in_closure[pick] = 1;
        ++closure_size;
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            members.push_back(x);
            std::vector<int> fresh;
            for (int m : members) {
                for (int p : {g.mul(m, x), g.mul(x, m)}) {
                    if (!in_closure[p]) {
                        in_closure[p] = 1;
                        ++closure_size;
                        fresh.push_back(p);
                    }
                }
            }
            for (int f : fresh) frontier.push_back(f);
        }
    }
    return gens;
}

// Extend gen |-> image to a full map by closing products; empty on conflict.
std::vector<int> extend_map(const FiniteGroup& g, const std::vector<int>& gens,
                            const std::vector<int>& images) {
    std::vector<int> img(g.order(), -1);
    img[0] = 0;
    std::vector<int> known = {0};
    for (size_t k = 0; k < gens.size(); ++k) {
        if (img[gens[k]] != -1) {
            if (img[gens[k]] != images[k]) return {};
            continue;
        }
        img[gens[k]] = images[k];
        known.push_back(gens[k]);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<int> snapshot = known;
        for (int a : snapshot)
            for (int b : snapshot) {
                int c = g.mul(a, b);
                int ic = g.mul(img[a], img[b]);
                if (img[c] == -1) {
                    img[c] = ic;
                    known.push_back(c);
                    grew = true;
                } else if (img[c] != ic) {
                    return {};
                }
            }
    }
    if (static_cast<int>(known.size()) != g.order()) return {};
    return img;
}

bool is_automorphism(const FiniteGroup& g, const std::vector<int>& img) {
    std::vector<char> seen(g.order(), 0);
    for (int x : img) {
        if (x < 0 || x >= g.order() || seen[x]) return false;
        seen[x] = 1;
    }
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            if (img[g.mul(a, b)] != g.mul(img[a], img[b])) return false;
    return true;
}

}  // namespace

std::vector<std::vector<int>> automorphism_group(const FiniteGroup& g, int max_order) {
    if (g.order() > max_order)
        throw BoundExceeded(fmt::format("automorphism_group: order {} exceeds bound {}",
                                        g.order(), max_order));
    const std::vector<int> gens = generating_sequence(g);
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        int ord = g.element_order(gens[k]);
        for (int x = 0; x < g.order(); ++x)
            if (g.element_order(x) == ord) candidates[k].push_back(x);
    }
    std::vector<std::vector<int>> autos;
    std::vector<int> choice(gens.size(), 0);
    std::vector<int> images(gens.size());
    // iterate the product of candidate lists
    for (;;) {
        for (size_t k = 0; k < gens.size(); ++k) images[k] = candidates[k][choice[k]];
        std::vector<int> img = extend_map(g, gens, images);
        if (!img.empty() && is_automorphism(g, img)) autos.push_back(std::move(img));
        size_t k = 0;
        while (k < gens.size() && ++choice[k] == static_cast<int>(candidates[k].size())) {
            choice[k] = 0;
            ++k;
        }
        if (k == gens.size()) break;
    }
    return autos;
}

GroupFamily GroupFamily::of(std::initializer_list<FiniteGroup> groups) {
    std::vector<std::shared_ptr<const FiniteGroup>> fs;
    for (const auto& g : groups) fs.push_back(std::make_shared<FiniteGroup>(g));
    return GroupFamily(std::move(fs));
}

GroupFamily GroupFamily::subfamily(const std::vector<int>& labels) const {
    std::vector<std::shared_ptr<const FiniteGroup>> fs;
    for (int e : labels) fs.push_back(factors_.at(e));
    return GroupFamily(std::move(fs));
}

std::vector<std::vector<int>> GroupFamily::table_classes() const {
    std::vector<std::vector<int>> classes;
    for (int e = 0; e < size(); ++e) {
        bool placed = false;
        for (auto& cls : classes)
            if (factor(cls.front()).same_table(factor(e))) {
                cls.push_back(e);
                placed = true;
                break;
            }
        if (!placed) classes.push_back({e});
    }
    return classes;
}

std::string GroupFamily::to_string() const {
    std::string s;
    for (int e = 0; e < size(); ++e) {
        if (e) s += ",";
        s += factor(e).name();
    }
    return s;
}

GroupFamily parse_family(const std::string& spec) {
    std::vector<std::shared_ptr<const FiniteGroup>> fs;
    std::vector<std::shared_ptr<const FiniteGroup>> cache;
    auto intern = [&](FiniteGroup g) {
        for (const auto& c : cache)
            if (c->same_table(g) && c->name() == g.name()) return c;
        cache.push_back(std::make_shared<FiniteGroup>(std::move(g)));
        return cache.back();
    };
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "V4" || tok == "Z2xZ2")
            fs.push_back(intern(FiniteGroup::klein_four()));
        else if (tok == "S3")
            fs.push_back(intern(FiniteGroup::symmetric_3()));
        else if (tok.size() > 1 && tok[0] == 'Z' &&
                 std::all_of(tok.begin() + 1, tok.end(), [](char c) { return std::isdigit(c); }))
            fs.push_back(intern(FiniteGroup::cyclic(std::stoi(tok.substr(1)))));
        else
            fs.push_back(intern(FiniteGroup::from_table_file(tok)));
    }
    return GroupFamily(std::move(fs));
}

}  // namespace autfp
