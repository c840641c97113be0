#include "ep/grp/primitivity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace ep::grp {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (a > b)
            std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

} // namespace

bool is_transitive(const PermAction& action) {
    const std::size_t n = action.degree;
    std::vector<bool> seen(n, false);
    std::deque<std::uint32_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (const auto& img : action.images)
            if (!seen[img[u]]) {
                seen[img[u]] = true;
                ++count;
                queue.push_back(img[u]);
            }
    }
    return count == n;
}

PrimitivityResult is_primitive(const PermAction& action) {
    const std::size_t n = action.degree;
    if (n == 0)
        throw std::invalid_argument("is_primitive: empty action");
    if (!is_transitive(action))
        throw std::invalid_argument("is_primitive: action is not transitive");
    if (n == 1 || action.images.empty())
        return {true, std::nullopt};

    for (std::uint32_t beta = 1; beta < n; ++beta) {
        // Finest invariant partition merging 0 and beta.
        UnionFind uf(n);
        uf.unite(0, beta);
        std::deque<std::pair<std::uint32_t, std::uint32_t>> queue{{0, beta}};
        std::size_t classes = n - 1;
        while (!queue.empty() && classes > 1) {
            auto [a, b] = queue.front();
            queue.pop_front();
            for (const auto& img : action.images)
                if (uf.unite(img[a], img[b])) {
                    --classes;
                    queue.emplace_back(img[a], img[b]);
                }
        }
        if (classes > 1) {
            // Proper block system found: assemble the certificate.
            std::vector<std::vector<std::uint32_t>> by_root(n);
            for (std::uint32_t x = 0; x < n; ++x)
                by_root[uf.find(x)].push_back(x);
            BlockSystem system;
            for (auto& blk : by_root)
                if (!blk.empty())
                    system.blocks.push_back(std::move(blk));
            std::sort(system.blocks.begin(), system.blocks.end(),
                      [](const auto& a, const auto& b) { return a[0] < b[0]; });
            return {false, std::move(system)};
        }
    }
    return {true, std::nullopt};
}

bool verify_block_system(const PermAction& action, const BlockSystem& system) {
    const std::size_t n = action.degree;
    if (system.blocks.size() < 2)
        return false;
    std::vector<int> block_of(n, -1);
    std::size_t block_size = system.blocks[0].size();
    if (block_size < 2)
        return false;
    for (std::size_t b = 0; b < system.blocks.size(); ++b) {
        if (system.blocks[b].size() != block_size)
            return false;
        for (auto x : system.blocks[b]) {
            if (x >= n || block_of[x] != -1)
                return false;
            block_of[x] = static_cast<int>(b);
        }
    }
    for (auto bo : block_of)
        if (bo == -1)
            return false;
    for (const auto& img : action.images)
        for (const auto& blk : system.blocks) {
            int target = block_of[img[blk[0]]];
            for (auto x : blk)
                if (block_of[img[x]] != target)
                    return false;
        }
    return true;
}

} // namespace ep::grp
