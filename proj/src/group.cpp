#include "dsh/group.hpp"

#include "dsh/errors.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

namespace dsh {

GroupSpec::GroupSpec(std::vector<int> cyclic_orders)
{
    for (int n : cyclic_orders) {
        if (n < 1)
            throw StructuralError("cyclic order must be >= 1, got " + std::to_string(n));
        if (n > 1)
            orders_.push_back(n);
    }
}

int GroupSpec::size() const
{
    int s = 1;
    for (int n : orders_)
        s *= n;
    return s;
}

bool GroupSpec::is_cyclic() const
{
    for (size_t i = 0; i < orders_.size(); ++i)
        for (size_t j = i + 1; j < orders_.size(); ++j)
            if (std::gcd(orders_[i], orders_[j]) != 1)
                return false;
    return true;
}

GroupSpec GroupSpec::parse(std::string_view text)
{
    if (text == "trivial" || text == "1" || text == "Z1")
        return GroupSpec{};
    std::vector<int> orders;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'Z')
            throw StructuralError("bad group spec '" + std::string(text) + "'");
        ++pos;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw StructuralError("bad group spec '" + std::string(text) + "'");
        orders.push_back(std::stoi(std::string(text.substr(start, pos - start))));
        if (pos < text.size()) {
            if (text[pos] != 'x')
                throw StructuralError("bad group spec '" + std::string(text) + "'");
            ++pos;
            if (pos == text.size())
                throw StructuralError("bad group spec '" + std::string(text) + "'");
        }
    }
    return GroupSpec(orders);
}

std::string GroupSpec::to_string() const
{
    if (orders_.empty())
        return "trivial";
    std::string s;
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (i)
            s += 'x';
        s += 'Z' + std::to_string(orders_[i]);
    }
    return s;
}

GroupElement make_element(const GroupSpec& spec, std::vector<int> residues)
{
    if (residues.size() != spec.orders().size())
        throw StructuralError("element has " + std::to_string(residues.size()) + " residues, group has "
                              + std::to_string(spec.orders().size()) + " factors");
    for (size_t i = 0; i < residues.size(); ++i) {
        int n = spec.orders()[i];
        residues[i] = ((residues[i] % n) + n) % n;
    }
    return GroupElement{spec, std::move(residues)};
}

GroupElement group_identity(const GroupSpec& spec)
{
    return GroupElement{spec, std::vector<int>(spec.orders().size(), 0)};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b)
{
    if (!(a.spec == b.spec))
        throw StructuralError("group_mul: elements of " + a.spec.to_string() + " and " + b.spec.to_string());
    std::vector<int> r(a.residues.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (a.residues[i] + b.residues[i]) % a.spec.orders()[i];
    return GroupElement{a.spec, std::move(r)};
}

GroupElement group_inv(const GroupElement& a)
{
    std::vector<int> r(a.residues.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = (a.spec.orders()[i] - a.residues[i]) % a.spec.orders()[i];
    return GroupElement{a.spec, std::move(r)};
}

std::vector<GroupElement> group_elements(const GroupSpec& spec)
{
    std::vector<GroupElement> out;
    std::vector<int> r(spec.orders().size(), 0);
    int n = spec.size();
    for (int k = 0; k < n; ++k) {
        out.push_back(GroupElement{spec, r});
        for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) {
            if (++r[i] < spec.orders()[i])
                break;
            r[i] = 0;
        }
    }
    return out;
}

Group::Group(GroupSpec spec) : spec_(std::move(spec)), size_(spec_.size())
{
    // Letters are stored as single bytes, 0xFF is reserved as a separator.
    if (size_ > 200)
        throw UnsupportedError("groups of order > 200 are not supported");
    for (auto& g : group_elements(spec_))
        residues_.push_back(g.residues);
    mul_.resize(static_cast<size_t>(size_) * size_);
    inv_.resize(size_);
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b)
            mul_[a * size_ + b] = index_of(group_mul(element(a), element(b)));
        inv_[a] = index_of(group_inv(element(a)));
    }
}

int Group::index_of(const GroupElement& g) const
{
    if (!(g.spec == spec_))
        throw StructuralError("element of " + g.spec.to_string() + " used with " + spec_.to_string());
    int idx = 0;
    for (size_t i = 0; i < g.residues.size(); ++i)
        idx = idx * spec_.orders()[i] + g.residues[i];
    return idx;
}

GroupElement Group::element(int index) const
{
    return GroupElement{spec_, residues_.at(index)};
}

std::string Group::label(int index) const
{
    std::string s;
    for (size_t i = 0; i < residues_[index].size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(residues_[index][i]);
    }
    return s;
}

GroupPtr make_group(const GroupSpec& spec)
{
    static std::mutex mutex;
    static std::map<std::vector<int>, GroupPtr> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[spec.orders()];
    if (!slot)
        slot = std::make_shared<const Group>(spec);
    return slot;
}

} // namespace dsh
