#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "autfp/abgroup.hpp"
#include "autfp/matrix.hpp"

namespace autfp {

/// Finite group given by its multiplication table. Elements are indices
/// 0..order-1 with the identity at index 0.
class FiniteGroup {
public:
    FiniteGroup(std::string name, std::vector<std::vector<int>> mult);

    static FiniteGroup cyclic(int n);
    static FiniteGroup klein_four();     // Z/2 x Z/2
    static FiniteGroup symmetric_3();    // S_3
    /// Direct product of two table groups.
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b, std::string name);
    /// Parse the table file format: first line "order n", then n rows of n
    /// indices; identity must be row/column 0.
    static FiniteGroup from_table_file(const std::string& path);
    static FiniteGroup from_stream(std::istream& in, const std::string& name);

    int order() const { return order_; }
    const std::string& name() const { return name_; }
    int mul(int a, int b) const { return mult_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int element_order(int a) const;

    /// Abelianization, from the Smith form of the multiplication-table
    /// relations g + h - gh.
    FgAbGroup abelianization() const;

    bool same_table(const FiniteGroup& o) const {
        return order_ == o.order_ && mult_ == o.mult_;
    }

private:
    void validate() const;
    std::string name_;
    int order_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> inv_;
};

/// All automorphisms of G as image tables (t[g] = image of g), found by
/// backtracking over generator images. Refuses groups larger than max_order.
std::vector<std::vector<int>> automorphism_group(const FiniteGroup& g, int max_order = 12);

/// Finite ordered family of groups (G_e)_{e in E}; labels are 0..size-1.
class GroupFamily {
public:
    GroupFamily() = default;
    explicit GroupFamily(std::vector<std::shared_ptr<const FiniteGroup>> factors)
        : factors_(std::move(factors)) {}

    static GroupFamily of(std::initializer_list<FiniteGroup> groups);

    int size() const { return static_cast<int>(factors_.size()); }
    const FiniteGroup& factor(int e) const {
        if (e < 0 || e >= size()) throw StructuralError("GroupFamily: unknown label");
        return *factors_[e];
    }
    std::shared_ptr<const FiniteGroup> factor_ptr(int e) const { return factors_.at(e); }

    /// Sub-family on the given labels (relabelled 0..k-1 in the given order).
    GroupFamily subfamily(const std::vector<int>& labels) const;

    /// Partition of labels into classes of equal-table factors; class members
    /// are listed in label order.
    std::vector<std::vector<int>> table_classes() const;

    std::string to_string() const;

private:
    std::vector<std::shared_ptr<const FiniteGroup>> factors_;
};

/// Resolve a comma-separated group list: built-ins Z<n>, V4 (= Z2xZ2), S3,
/// or paths to table files.
GroupFamily parse_family(const std::string& spec);

}  // namespace autfp
