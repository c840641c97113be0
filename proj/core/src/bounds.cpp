#include "ep/engine/bounds.hpp"

#include <sstream>
#include <stdexcept>

namespace ep::engine {

Verdict corollary_check(const Nat& alpha, std::size_t d) {
    const Nat lhs = pow2_minus_1(d / 2) * alpha;
    const Nat rhs = pow2_minus_1(d);
    std::ostringstream os;
    os << "(2^" << d / 2 << "-1)*" << alpha << (lhs < rhs ? " < " : " >= ") << "2^" << d << "-1";
    Verdict v;
    v.certificate = BoundCertificate{os.str(), lhs, rhs, lhs < rhs};
    if (lhs < rhs) {
        v.kind = Verdict::Kind::NotEP;
        v.detail = os.str();
    } else {
        v.kind = Verdict::Kind::Inconclusive;
        v.detail = "bound does not eliminate: " + os.str();
    }
    return v;
}

Nat refined_bound_sum(const std::vector<std::pair<std::size_t, Nat>>& parts) {
    Nat sum = 0;
    for (const auto& [cap, count] : parts)
        sum += pow2_minus_1(cap) * count;
    return sum;
}

Verdict refined_bound_check(const std::vector<std::pair<std::size_t, Nat>>& parts,
                            std::size_t d) {
    for (const auto& [cap, count] : parts)
        if (cap > d)
            throw std::invalid_argument("refined_bound_check: cap dimension exceeds d");
    const Nat sum = refined_bound_sum(parts);
    const Nat rhs = pow2_minus_1(d);
    std::ostringstream os;
    bool first = true;
    for (const auto& [cap, count] : parts) {
        if (!first)
            os << " + ";
        first = false;
        os << "(2^" << cap << "-1)*" << count;
    }
    os << " = " << sum << (sum < rhs ? " < " : " >= ") << "2^" << d << "-1";
    Verdict v;
    v.certificate = BoundCertificate{os.str(), sum, rhs, sum < rhs};
    if (sum < rhs) {
        v.kind = Verdict::Kind::NotEP;
        v.detail = os.str();
    } else {
        v.kind = Verdict::Kind::Inconclusive;
        v.detail = "bound does not eliminate: " + os.str();
    }
    return v;
}

Nat gaussian_binomial(std::size_t n, std::size_t m) {
    if (m > n)
        throw std::invalid_argument("gaussian_binomial: need 0 <= m <= n");
    Nat acc = 1;
    // Partial products are themselves Gaussian binomials, so each division
    // below is exact.
    for (std::size_t i = 1; i <= m; ++i) {
        acc *= pow2_minus_1(n - m + i);
        acc /= pow2_minus_1(i);
    }
    return acc;
}

} // namespace ep::engine
