#include "ep/poly2.hpp"

#include "ep/gf2/ops.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace ep::poly2 {

using gf2::kWordBits;

void Poly::trim() {
    while (!w_.empty() && w_.back() == 0)
        w_.pop_back();
}

Poly Poly::monomial(std::size_t e) {
    Poly p;
    p.w_.assign(e / kWordBits + 1, 0);
    p.w_.back() = Word(1) << (e % kWordBits);
    return p;
}

Poly Poly::x_pow_r_plus_1(std::size_t r) {
    Poly p = monomial(r);
    p.set(0, true);
    return p;
}

Poly Poly::from_mask(std::uint64_t mask) {
    Poly p;
    if (mask)
        p.w_.push_back(mask);
    return p;
}

int Poly::degree() const {
    if (w_.empty())
        return -1;
    return static_cast<int>((w_.size() - 1) * kWordBits +
                            (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(w_.back()))));
}

bool Poly::get(std::size_t i) const {
    std::size_t k = i / kWordBits;
    if (k >= w_.size())
        return false;
    return (w_[k] >> (i % kWordBits)) & 1u;
}

void Poly::set(std::size_t i, bool value) {
    std::size_t k = i / kWordBits;
    if (k >= w_.size())
        w_.resize(k + 1, 0);
    Word mask = Word(1) << (i % kWordBits);
    if (value)
        w_[k] |= mask;
    else
        w_[k] &= ~mask;
    trim();
}

Poly Poly::operator+(const Poly& other) const {
    Poly out;
    out.w_.resize(std::max(w_.size(), other.w_.size()), 0);
    for (std::size_t k = 0; k < out.w_.size(); ++k) {
        Word a = k < w_.size() ? w_[k] : 0;
        Word b = k < other.w_.size() ? other.w_[k] : 0;
        out.w_[k] = a ^ b;
    }
    out.trim();
    return out;
}

Poly Poly::operator*(const Poly& other) const {
    if (is_zero() || other.is_zero())
        return zero();
    Poly out;
    out.w_.assign(w_.size() + other.w_.size(), 0);
    for (std::size_t k = 0; k < w_.size(); ++k) {
        Word a = w_[k];
        while (a) {
            std::size_t shift = k * kWordBits + static_cast<std::size_t>(std::countr_zero(a));
            a &= a - 1;
            std::size_t wq = shift / kWordBits, wr = shift % kWordBits;
            for (std::size_t j = 0; j < other.w_.size(); ++j) {
                out.w_[j + wq] ^= other.w_[j] << wr;
                if (wr)
                    out.w_[j + wq + 1] ^= other.w_[j] >> (kWordBits - wr);
            }
        }
    }
    out.trim();
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero())
        throw std::invalid_argument("Poly::divmod: division by zero");
    Poly rem = *this;
    Poly quot;
    const int dd = divisor.degree();
    while (!rem.is_zero() && rem.degree() >= dd) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - dd);
        quot.set(shift, true);
        rem = rem + divisor * monomial(shift);
    }
    return {quot, rem};
}

bool Poly::operator<(const Poly& other) const {
    if (degree() != other.degree())
        return degree() < other.degree();
    for (std::size_t k = std::max(w_.size(), other.w_.size()); k-- > 0;) {
        Word a = k < w_.size() ? w_[k] : 0;
        Word b = k < other.w_.size() ? other.w_[k] : 0;
        if (a != b)
            return a < b;
    }
    return false;
}

Poly Poly::derivative() const {
    Poly out;
    for (int i = 1; i <= degree(); i += 2)
        if (get(static_cast<std::size_t>(i)))
            out.set(static_cast<std::size_t>(i - 1), true);
    return out;
}

Poly Poly::sqrt() const {
    Poly out;
    for (int i = 0; i <= degree(); ++i)
        if (get(static_cast<std::size_t>(i))) {
            if (i % 2)
                throw std::invalid_argument("Poly::sqrt: odd-degree term present");
            out.set(static_cast<std::size_t>(i / 2), true);
        }
    return out;
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (!get(static_cast<std::size_t>(i)))
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (i == 0)
            os << "1";
        else if (i == 1)
            os << "x";
        else
            os << "x^" << i;
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly acc = Poly::one() % mod;
    Poly b = base % mod;
    while (e) {
        if (e & 1)
            acc = (acc * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return acc;
}

Poly frobenius_power(std::size_t k, const Poly& f) {
    Poly t = Poly::x() % f;
    for (std::size_t i = 0; i < k; ++i)
        t = (t * t) % f;
    return t;
}

bool is_irreducible(const Poly& f) {
    const int n = f.degree();
    if (n <= 0)
        return false;
    if (n == 1)
        return true;
    if (!f.get(0))
        return false; // divisible by x
    // Rabin: x^(2^n) == x mod f, and x^(2^(n/p)) - x coprime to f for p | n.
    Poly xn = frobenius_power(static_cast<std::size_t>(n), f);
    if (!(xn + Poly::x() % f).is_zero())
        return false;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p)
            continue;
        while (m % p == 0)
            m /= p;
        Poly t = frobenius_power(static_cast<std::size_t>(n / p), f) + Poly::x() % f;
        if (gcd(f, t).degree() > 0)
            return false;
    }
    if (m > 1) {
        Poly t = frobenius_power(static_cast<std::size_t>(n / m), f) + Poly::x() % f;
        if (gcd(f, t).degree() > 0)
            return false;
    }
    return true;
}

namespace {

// Deterministic Berlekamp over F_2 for a squarefree input.
std::vector<Poly> berlekamp_squarefree(const Poly& f) {
    const int n = f.degree();
    if (n == 1)
        return {f};
    // Frobenius matrix: row i = coefficients of x^(2i) mod f; kernel of
    // (Q + I) spans the Berlekamp subalgebra.
    gf2::BitMatrix q(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    Poly x2 = (Poly::x() * Poly::x()) % f;
    Poly cur = Poly::one();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (cur.get(static_cast<std::size_t>(j)))
                q.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), true);
        cur = (cur * x2) % f;
    }
    gf2::Subspace ker = gf2::kernel(q + gf2::BitMatrix::identity(static_cast<std::size_t>(n)));
    const std::size_t nfactors = ker.dim();
    std::vector<Poly> factors{f};
    if (nfactors == 1)
        return factors;
    for (const auto& bv : ker.basis()) {
        Poly v;
        for (int j = 0; j < n; ++j)
            if (bv.get(static_cast<std::size_t>(j)))
                v.set(static_cast<std::size_t>(j), true);
        if (v.degree() <= 0)
            continue; // the constant vector never splits anything
        std::vector<Poly> next;
        for (const auto& g : factors) {
            Poly g1 = gcd(g, v % g);
            if (g1.degree() > 0 && g1.degree() < g.degree()) {
                next.push_back(g1);
                next.push_back(g / g1);
            } else {
                Poly v1 = (v % g) + Poly::one();
                Poly g2 = gcd(g, v1);
                if (g2.degree() > 0 && g2.degree() < g.degree()) {
                    next.push_back(g2);
                    next.push_back(g / g2);
                } else {
                    next.push_back(g);
                }
            }
        }
        factors = std::move(next);
        if (factors.size() == nfactors)
            break;
    }
    return factors;
}

} // namespace

std::vector<Poly> distinct_irreducible_factors(const Poly& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("distinct_irreducible_factors: degree < 1");
    std::vector<Poly> out;
    std::vector<Poly> stack{f};
    while (!stack.empty()) {
        Poly g = stack.back();
        stack.pop_back();
        if (g.degree() < 1)
            continue;
        Poly d = g.derivative();
        if (d.is_zero()) {
            // g = h(x)^2 in characteristic 2
            stack.push_back(g.sqrt());
            continue;
        }
        Poly s = gcd(g, d);
        if (s.degree() > 0) {
            stack.push_back(s);
            stack.push_back(g / s);
            continue;
        }
        for (auto& p : berlekamp_squarefree(g))
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Poly min_poly(const gf2::BitMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("min_poly: non-square matrix");
    const std::size_t n = m.rows();
    Poly acc = Poly::one();
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (acc.degree() == static_cast<int>(n))
            break;
        // Minimal polynomial of the Krylov sequence from e_seed, tracked by
        // carrying the combination polynomial alongside each reduced vector.
        std::vector<gf2::BitVector> basis;
        std::vector<Poly> combo;
        gf2::BitVector v = gf2::BitVector::unit(n, seed);
        Poly p = Poly::one();
        while (true) {
            gf2::BitVector w = v;
            Poly q = p;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                int piv = basis[i].lowest_set();
                if (w.get(static_cast<std::size_t>(piv))) {
                    w ^= basis[i];
                    q = q + combo[i];
                }
            }
            if (w.is_zero()) {
                // q(x) applied to the seed vanishes: local minimal polynomial.
                Poly g = gcd(acc, q);
                acc = acc * (q / g);
                break;
            }
            basis.push_back(w);
            combo.push_back(q);
            v = m.apply(v);
            p = p * Poly::x();
        }
    }
    return acc;
}

gf2::BitMatrix eval_at(const Poly& p, const gf2::BitMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("eval_at: non-square matrix");
    const std::size_t n = m.rows();
    gf2::BitMatrix acc(n, n);
    gf2::BitMatrix power = gf2::BitMatrix::identity(n);
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.get(static_cast<std::size_t>(i)))
            acc = acc + power;
        if (i < p.degree())
            power = power * m;
    }
    return acc;
}

gf2::BitMatrix companion(const Poly& monic) {
    const int deg = monic.degree();
    if (deg < 1)
        throw std::invalid_argument("companion: degree must be >= 1");
    const std::size_t n = static_cast<std::size_t>(deg);
    gf2::BitMatrix c(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        c.set(i, i + 1, true);
    for (std::size_t j = 0; j < n; ++j)
        if (monic.get(j))
            c.set(n - 1, j, true);
    return c;
}

} // namespace ep::poly2
