#ifndef KUMMER_PARTITIONS_HPP
#define KUMMER_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kummer
{

// A weakly decreasing list of positive integers (English notation).
// Cell (row, col) is the col-th box of the row-th part.
class Partition
{
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) {
                throw std::invalid_argument("partition parts must be positive");
            }
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
                throw std::invalid_argument("partition parts must be weakly decreasing");
            }
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts an arbitrary multiset of positive integers into a partition.
    static Partition from_multiset(std::vector<int> parts)
    {
        std::sort(parts.begin(), parts.end(), std::greater<>{});
        return Partition(std::move(parts));
    }

    const std::vector<int> &parts() const noexcept
    {
        return parts_;
    }
    std::size_t length() const noexcept
    {
        return parts_.size();
    }
    bool empty() const noexcept
    {
        return parts_.empty();
    }
    int operator[](std::size_t i) const
    {
        return parts_[i];
    }
    int size() const noexcept
    {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    int largest() const noexcept
    {
        return parts_.empty() ? 0 : parts_.front();
    }

    // mult[j] = number of parts equal to j, for 0 <= j <= largest().
    std::vector<int> multiplicities() const
    {
        std::vector<int> mult(static_cast<std::size_t>(largest()) + 1, 0);
        for (int p : parts_) {
            ++mult[static_cast<std::size_t>(p)];
        }
        return mult;
    }

    bool has_odd_part() const noexcept
    {
        return std::any_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; });
    }

    Partition conjugate() const
    {
        std::vector<int> cols;
        for (int c = 0; c < largest(); ++c) {
            int height = 0;
            while (static_cast<std::size_t>(height) < parts_.size() && parts_[static_cast<std::size_t>(height)] > c) {
                ++height;
            }
            cols.push_back(height);
        }
        return Partition(std::move(cols));
    }

    // Multiset union of the parts.
    Partition concat(const Partition &other) const
    {
        std::vector<int> merged;
        merged.reserve(parts_.size() + other.parts_.size());
        std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(merged),
                   std::greater<>{});
        Partition out;
        out.parts_ = std::move(merged);
        return out;
    }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i != 0) {
                s += ",";
            }
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &a, const Partition &b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

struct CellHook {
    int row;
    int col;
    int arm;
    int leg;

    friend bool operator==(const CellHook &, const CellHook &) = default;
};

namespace detail
{

inline void enumerate_partitions_into(int remaining, int max_part, std::vector<int> &prefix, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate_partitions_into(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

// Every partition of k exactly once, in lexicographically decreasing order.
inline std::vector<Partition> enumerate_partitions(int k)
{
    if (k < 0) {
        throw std::invalid_argument("enumerate_partitions: negative size");
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::enumerate_partitions_into(k, k, prefix, out);
    return out;
}

// Partitions of every size 0..max_size, grouped by size.
inline std::vector<Partition> enumerate_partitions_up_to(int max_size)
{
    std::vector<Partition> out;
    for (int k = 0; k <= max_size; ++k) {
        auto ps = enumerate_partitions(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

// Row-major walk of the Young diagram.
inline std::vector<CellHook> cell_hooks(const Partition &lambda)
{
    std::vector<CellHook> cells;
    cells.reserve(static_cast<std::size_t>(lambda.size()));
    const auto &parts = lambda.parts();
    for (std::size_t row = 0; row < parts.size(); ++row) {
        for (int col = 0; col < parts[row]; ++col) {
            int leg = 0;
            for (std::size_t r = row + 1; r < parts.size() && parts[r] > col; ++r) {
                ++leg;
            }
            cells.push_back({static_cast<int>(row), col, parts[row] - col - 1, leg});
        }
    }
    return cells;
}

// All ordered c-tuples of partitions with total size k. Ordering: by the
// size composition (first slot largest first), then by each slot's canonical
// partition order.
inline std::vector<std::vector<Partition>> multipartitions(int k, int c)
{
    if (k < 0 || c < 1) {
        throw std::invalid_argument("multipartitions: need k >= 0 and c >= 1");
    }
    std::vector<std::vector<Partition>> by_size;
    for (int j = 0; j <= k; ++j) {
        by_size.push_back(enumerate_partitions(j));
    }

    std::vector<std::vector<Partition>> out;
    std::vector<Partition> current;
    std::function<void(int, int)> fill = [&](int slot, int remaining) {
        if (slot == c - 1) {
            for (const auto &p : by_size[static_cast<std::size_t>(remaining)]) {
                current.push_back(p);
                out.push_back(current);
                current.pop_back();
            }
            return;
        }
        for (int j = remaining; j >= 0; --j) {
            for (const auto &p : by_size[static_cast<std::size_t>(j)]) {
                current.push_back(p);
                fill(slot + 1, remaining - j);
                current.pop_back();
            }
        }
    };
    fill(0, k);
    return out;
}

} // namespace kummer

#endif
