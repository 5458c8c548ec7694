#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dsh {

// Finite abelian group Z/n1 x ... x Z/nk. Factors of order 1 are dropped,
// so the trivial group has the empty sequence as its canonical form.
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<int> cyclic_orders);

    const std::vector<int>& orders() const { return orders_; }
    int size() const;
    bool is_trivial() const { return orders_.empty(); }
    // Product of cyclic groups is cyclic iff the orders are pairwise coprime.
    bool is_cyclic() const;

    // "trivial", "1", "Z3", "Z2xZ4"
    static GroupSpec parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<int> orders_;
};

struct GroupElement {
    GroupSpec spec;
    std::vector<int> residues;

    bool operator==(const GroupElement&) const = default;
};

GroupElement make_element(const GroupSpec& spec, std::vector<int> residues);
GroupElement group_identity(const GroupSpec& spec);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);
// Lexicographic in the residues; the identity comes first.
std::vector<GroupElement> group_elements(const GroupSpec& spec);

// Index-based view used by the series code. Element i is the i-th entry of
// group_elements(spec); index 0 is the identity.
class Group {
public:
    explicit Group(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    int size() const { return size_; }
    int mul(int a, int b) const { return mul_[a * size_ + b]; }
    int inv(int a) const { return inv_[a]; }
    // a * b^{-1}
    int div(int a, int b) const { return mul(a, inv_[b]); }
    int index_of(const GroupElement& g) const;
    GroupElement element(int index) const;
    const std::vector<int>& residues(int index) const { return residues_[index]; }
    // Residues rendered as "1" or "1,0".
    std::string label(int index) const;

private:
    GroupSpec spec_;
    int size_;
    std::vector<int> mul_;
    std::vector<int> inv_;
    std::vector<std::vector<int>> residues_;
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_group(const GroupSpec& spec);

} // namespace dsh
