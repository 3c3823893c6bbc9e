#include "brauer/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace brauer {

AbelianGroup::AbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    for (int n : orders_) {
        if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
    }
}

long long AbelianGroup::order() const {
    long long total = 1;
    for (int n : orders_) total *= n;
    return total;
}

GroupElement AbelianGroup::identity() const {
    return GroupElement{std::vector<int>(orders_.size(), 0)};
}

bool AbelianGroup::contains(const GroupElement& g) const {
    if (g.residues.size() != orders_.size()) return false;
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (g.residues[i] < 0 || g.residues[i] >= orders_[i]) return false;
    }
    return true;
}

void AbelianGroup::check_member(const GroupElement& g) const {
    if (!contains(g)) throw std::invalid_argument("group element does not belong to this group");
}

GroupElement AbelianGroup::compose(const GroupElement& a, const GroupElement& b) const {
    check_member(a);
    check_member(b);
    GroupElement out = a;
    for (size_t i = 0; i < orders_.size(); ++i) {
        out.residues[i] = (a.residues[i] + b.residues[i]) % orders_[i];
    }
    return out;
}

GroupElement AbelianGroup::inverse(const GroupElement& a) const {
    check_member(a);
    GroupElement out = a;
    for (size_t i = 0; i < orders_.size(); ++i) {
        out.residues[i] = (orders_[i] - a.residues[i]) % orders_[i];
    }
    return out;
}

GroupElement AbelianGroup::power(const GroupElement& a, long long k) const {
    check_member(a);
    GroupElement out = a;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long long r = (static_cast<long long>(a.residues[i]) * k) % orders_[i];
        if (r < 0) r += orders_[i];
        out.residues[i] = static_cast<int>(r);
    }
    return out;
}

long long AbelianGroup::element_order(const GroupElement& g) const {
    check_member(g);
    long long ord = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long long component = orders_[i] / std::gcd<long long>(g.residues[i], orders_[i]);
        ord = std::lcm(ord, component);
    }
    return ord;
}

GroupElement AbelianGroup::generator(int k) const {
    if (k < 0 || k >= rank()) throw std::out_of_range("generator index out of range");
    GroupElement g = identity();
    if (orders_[k] > 1) g.residues[k] = 1;
    return g;
}

std::vector<GroupElement> AbelianGroup::elements() const {
    std::vector<GroupElement> all;
    all.reserve(static_cast<size_t>(order()));
    GroupElement cur = identity();
    while (true) {
        all.push_back(cur);
        // odometer increment, least significant component last
        int i = rank() - 1;
        while (i >= 0) {
            if (++cur.residues[i] < orders_[i]) break;
            cur.residues[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return all;
}

long long AbelianGroup::index_of(const GroupElement& g) const {
    check_member(g);
    long long idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        idx = idx * orders_[i] + g.residues[i];
    }
    return idx;
}

CosetPartition AbelianGroup::coset_partition(const GroupElement& g) const {
    check_member(g);
    CosetPartition part;
    part.subgroup_generator = g;

    // enumerate the cyclic subgroup <g>
    std::vector<GroupElement> subgroup;
    GroupElement cur = identity();
    do {
        subgroup.push_back(cur);
        cur = compose(cur, g);
    } while (!(cur == identity()));

    std::map<GroupElement, bool> seen;
    std::vector<std::vector<GroupElement>> cosets;
    for (const GroupElement& e : elements()) {
        if (seen.count(e)) continue;
        std::vector<GroupElement> coset;
        for (const GroupElement& h : subgroup) {
            GroupElement x = compose(e, h);
            seen[x] = true;
            coset.push_back(x);
        }
        std::sort(coset.begin(), coset.end());
        cosets.push_back(std::move(coset));
    }
    // Sorting by the minimal element puts the subgroup itself first, since
    // the identity is the global minimum.
    std::sort(cosets.begin(), cosets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    part.cosets = std::move(cosets);
    for (size_t i = 0; i < part.cosets.size(); ++i) {
        for (const GroupElement& e : part.cosets[i]) {
            part.index_of[e] = static_cast<int>(i);
        }
    }
    return part;
}

std::string AbelianGroup::to_string(const GroupElement& g) const {
    std::string s = "[";
    for (size_t i = 0; i < g.residues.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g.residues[i]);
    }
    s += "]";
    return s;
}

} // namespace brauer
