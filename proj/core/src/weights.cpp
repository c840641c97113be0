#include "ep/weights/weights.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ep::weights {

ExponentMultiset ExponentMultiset::canonical() const {
    ExponentMultiset c = *this;
    std::sort(c.entries.begin(), c.entries.end());
    return c;
}

std::string ExponentMultiset::to_string() const {
    std::ostringstream os;
    os << "r=" << r << " {";
    auto c = canonical();
    for (std::size_t i = 0; i < c.entries.size(); ++i) {
        if (i)
            os << ',';
        os << c.entries[i];
    }
    os << '}';
    return os.str();
}

namespace {

void check_multiset(const ExponentMultiset& e) {
    if (e.r < 3 || e.r % 2 == 0)
        throw std::invalid_argument("ExponentMultiset: r must be odd and >= 3");
    for (unsigned v : e.entries)
        if (v >= e.r)
            throw std::invalid_argument("ExponentMultiset: entry out of range");
}

} // namespace

bool validate_f2_realizable(const ExponentMultiset& e) {
    check_multiset(e);
    std::map<unsigned, long> count;
    for (unsigned v : e.entries)
        ++count[v];
    for (auto [v, c] : count)
        if (count[(2 * v) % e.r] != c)
            return false;
    return true;
}

Nat wedge_fixed_dim(const ExponentMultiset& e, unsigned m) {
    check_multiset(e);
    if (m < 1 || m > e.entries.size())
        throw std::invalid_argument("wedge_fixed_dim: m out of range");
    const unsigned r = e.r;
    // dp[j][c]: ways to pick j positions so far with exponent sum c mod r.
    std::vector<std::vector<Nat>> dp(m + 1, std::vector<Nat>(r, Nat(0)));
    dp[0][0] = 1;
    for (unsigned v : e.entries)
        for (unsigned j = m; j >= 1; --j)
            for (unsigned c = 0; c < r; ++c)
                if (dp[j - 1][c] != 0)
                    dp[j][(c + v) % r] += dp[j - 1][c];
    return dp[m][0];
}

Nat spin_fixed_dim(const SpinExponentVector& s) {
    if (s.r < 3 || s.r % 2 == 0)
        throw std::invalid_argument("SpinExponentVector: r must be odd and >= 3");
    if (s.t.empty())
        throw std::invalid_argument("SpinExponentVector: empty coordinate list");
    for (unsigned v : s.t)
        if (v >= s.r)
            throw std::invalid_argument("SpinExponentVector: entry out of range");
    const unsigned r = s.r;
    // dp[c][p]: sign patterns so far with sum c mod r and p = parity of -1s.
    std::vector<std::array<Nat, 2>> dp(r), next(r);
    dp[0][0] = 1;
    for (unsigned v : s.t) {
        for (unsigned c = 0; c < r; ++c)
            next[c] = {Nat(0), Nat(0)};
        for (unsigned c = 0; c < r; ++c)
            for (int p = 0; p < 2; ++p) {
                if (dp[c][p] == 0)
                    continue;
                next[(c + v) % r][p] += dp[c][p];
                next[(c + r - v % r) % r][p ^ 1] += dp[c][p];
            }
        dp.swap(next);
    }
    switch (s.kind) {
    case SpinExponentVector::Kind::B:
        return dp[0][0] + dp[0][1];
    case SpinExponentVector::Kind::DEven:
        return dp[0][0];
    case SpinExponentVector::Kind::DOdd:
        return dp[0][1];
    }
    return Nat(0);
}

std::vector<std::vector<unsigned>> doubling_orbits(unsigned r) {
    if (r < 3 || r % 2 == 0)
        throw std::invalid_argument("doubling_orbits: r must be odd and >= 3");
    std::vector<bool> seen(r, false);
    std::vector<std::vector<unsigned>> orbits;
    for (unsigned a = 0; a < r; ++a) {
        if (seen[a])
            continue;
        std::vector<unsigned> orbit;
        unsigned v = a;
        do {
            seen[v] = true;
            orbit.push_back(v);
            v = (2 * v) % r;
        } while (v != a);
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

MaxWedgeResult max_wedge_dim_over_order_r(unsigned k, unsigned r) {
    if (r != 7 && r != 11 && r != 13)
        throw std::invalid_argument("max_wedge_dim_over_order_r: r must be 7, 11 or 13");
    if (k < 7 || k > 14)
        throw std::invalid_argument("max_wedge_dim_over_order_r: k must be in 7..14");

    auto orbits = doubling_orbits(r);
    // orbits[0] is {0}; the rest are the nonzero doubling orbits.
    std::vector<std::vector<unsigned>> nz(orbits.begin() + 1, orbits.end());

    MaxWedgeResult result;
    std::vector<unsigned> mult(nz.size(), 0);

    // Enumerate multiplicity vectors over nonzero orbits; zeros fill the rest.
    auto consider = [&](const std::vector<unsigned>& mults) {
        unsigned used = 0;
        unsigned nonzero = 0;
        for (std::size_t i = 0; i < nz.size(); ++i) {
            used += mults[i] * static_cast<unsigned>(nz[i].size());
            nonzero += mults[i];
        }
        if (nonzero == 0 || used > k)
            return;
        ExponentMultiset e;
        e.r = r;
        e.entries.assign(k - used, 0);
        for (std::size_t i = 0; i < nz.size(); ++i)
            for (unsigned c = 0; c < mults[i]; ++c)
                e.entries.insert(e.entries.end(), nz[i].begin(), nz[i].end());
        unsigned dim = static_cast<unsigned>(wedge_fixed_dim(e, 3));
        if (!result.has_element || dim > result.max_dim) {
            result.has_element = true;
            result.max_dim = dim;
            result.witnesses.clear();
        }
        if (dim == result.max_dim)
            result.witnesses.push_back(e.canonical());
    };

    // Depth-first over multiplicities; orbit sizes bound the branching.
    std::vector<unsigned> stack_mult(nz.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, unsigned used) -> void {
        if (idx == nz.size()) {
            consider(stack_mult);
            return;
        }
        unsigned size = static_cast<unsigned>(nz[idx].size());
        for (unsigned c = 0; used + c * size <= k; ++c) {
            stack_mult[idx] = c;
            self(self, idx + 1, used + c * size);
        }
        stack_mult[idx] = 0;
    };
    rec(rec, 0, 0);

    std::sort(result.witnesses.begin(), result.witnesses.end(),
              [](const ExponentMultiset& a, const ExponentMultiset& b) {
                  return a.entries < b.entries;
              });
    return result;
}

} // namespace ep::weights
