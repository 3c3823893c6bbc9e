#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace brauer {

/// Element of a product of cyclic groups, stored as a reduced residue vector.
struct GroupElement {
    std::vector<int> residues;

    auto operator<=>(const GroupElement&) const = default;
};

struct CosetPartition {
    GroupElement subgroup_generator;
    // Cosets ordered by their lexicographically minimal element; coset 0
    // contains the identity. Elements inside a coset are sorted.
    std::vector<std::vector<GroupElement>> cosets;
    std::map<GroupElement, int> index_of;
};

// Finite abelian group presented as Z_{n1} x ... x Z_{nk}. The empty product
// is the trivial group. All operations are pure; elements are canonical.
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<int> cyclic_orders);

    int rank() const { return static_cast<int>(orders_.size()); }
    const std::vector<int>& cyclic_orders() const { return orders_; }
    long long order() const;

    GroupElement identity() const;
    bool contains(const GroupElement& g) const;

    GroupElement compose(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, long long k) const;

    /// Least k >= 1 with k*g = identity.
    long long element_order(const GroupElement& g) const;

    /// Standard generator of the k-th cyclic factor.
    GroupElement generator(int k) const;

    /// All elements in lexicographic residue order. Only call when the
    /// order is small enough to enumerate.
    std::vector<GroupElement> elements() const;

    /// Position of g in the lexicographic enumeration.
    long long index_of(const GroupElement& g) const;

    CosetPartition coset_partition(const GroupElement& g) const;

    std::string to_string(const GroupElement& g) const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.orders_ == b.orders_;
    }

private:
    std::vector<int> orders_;

    void check_member(const GroupElement& g) const;
};

} // namespace brauer
