#include "rado/smallgroup.hpp"

#include <algorithm>
#include <numeric>

#include "rado/errors.hpp"

namespace rado {

SmallGroup::SmallGroup(const GroupSpec& spec, std::uint64_t max_size)
    : spec_(spec), radices_(spec.factors()) {
    for (auto r : radices_) {
        if (size_ > max_size / static_cast<std::uint64_t>(r))
            throw capacity_error("group of order " + spec.order().get_str() +
                                 " exceeds the dense-arithmetic bound " + std::to_string(max_size));
        size_ *= static_cast<std::uint64_t>(r);
    }
    weights_.assign(radices_.size(), 1);
    for (std::size_t i = radices_.size(); i-- > 1;)
        weights_[i - 1] = weights_[i] * static_cast<std::uint64_t>(radices_[i]);
}

std::vector<std::int64_t> SmallGroup::coords(std::uint64_t rank) const {
    std::vector<std::int64_t> c(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i)
        c[i] = static_cast<std::int64_t>((rank / weights_[i]) %
                                         static_cast<std::uint64_t>(radices_[i]));
    return c;
}

std::uint64_t SmallGroup::rank(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != radices_.size()) throw validation_error("coordinate length mismatch");
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= radices_[i])
            throw validation_error("coordinate out of range");
        r += static_cast<std::uint64_t>(coords[i]) * weights_[i];
    }
    return r;
}

std::uint64_t SmallGroup::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        const std::uint64_t n = static_cast<std::uint64_t>(radices_[i]);
        std::uint64_t s = (a / weights_[i]) % n + (b / weights_[i]) % n;
        if (s >= n) s -= n;
        r += s * weights_[i];
    }
    return r;
}

std::uint64_t SmallGroup::neg(std::uint64_t a) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        const std::uint64_t n = static_cast<std::uint64_t>(radices_[i]);
        std::uint64_t d = (a / weights_[i]) % n;
        if (d) r += (n - d) * weights_[i];
    }
    return r;
}

std::uint64_t SmallGroup::scalar_mul(std::int64_t c, std::uint64_t a) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        const std::int64_t n = radices_[i];
        std::int64_t cr = c % n;
        if (cr < 0) cr += n;
        std::int64_t d = static_cast<std::int64_t>((a / weights_[i]) % static_cast<std::uint64_t>(n));
        r += static_cast<std::uint64_t>((cr * d) % n) * weights_[i];
    }
    return r;
}

std::int64_t SmallGroup::order(std::uint64_t a) const {
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        const std::int64_t n = radices_[i];
        std::int64_t d = static_cast<std::int64_t>((a / weights_[i]) % static_cast<std::uint64_t>(n));
        ord = std::lcm(ord, n / std::gcd(d, n));
    }
    return ord;
}

void SmallGroup::build_add_table() {
    if (!add_table_.empty()) return;
    if (size_ > 2048)
        throw capacity_error("addition table limited to groups of order <= 2048");
    add_table_.resize(size_ * size_);
    for (std::uint64_t a = 0; a < size_; ++a)
        for (std::uint64_t b = a; b < size_; ++b) {
            std::uint16_t s = static_cast<std::uint16_t>(add(a, b));
            add_table_[a * size_ + b] = s;
            add_table_[b * size_ + a] = s;
        }
}

std::vector<std::uint64_t> SmallGroup::elements_of_order(std::int64_t d) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 0; a < size_; ++a)
        if (order(a) == d) out.push_back(a);
    return out;
}

std::vector<std::uint64_t> SmallGroup::span(const std::vector<std::uint64_t>& gens) const {
    std::vector<bool> in(size_, false);
    std::vector<std::uint64_t> queue{0};
    in[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint64_t e = queue[head];
        for (auto g : gens) {
            std::uint64_t s = add(e, g);
            if (!in[s]) {
                in[s] = true;
                queue.push_back(s);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

} // namespace rado
