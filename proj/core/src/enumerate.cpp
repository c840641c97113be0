#include "ep/grp/enumerate.hpp"

#include "ep/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

namespace ep::grp {

using gf2::BitMatrix;

std::vector<BitMatrix> enumerate_elements(MatrixGroup& h, std::size_t cap) {
    h.validate();
    BitMatrix id = BitMatrix::identity(h.dim);
    std::vector<BitMatrix> elems{id};
    std::unordered_map<BitMatrix, std::size_t> seen{{id, 0}};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t u = queue.front();
        queue.pop_front();
        for (const auto& g : h.generators) {
            BitMatrix w = elems[u] * g;
            if (seen.emplace(w, elems.size()).second) {
                elems.push_back(std::move(w));
                if (elems.size() > cap)
                    throw cap_error("enumerate_elements: order exceeds cap " +
                                    std::to_string(cap));
                queue.push_back(elems.size() - 1);
            }
        }
    }
    Nat order(elems.size());
    if (h.order && *h.order != order)
        throw data_error("enumerate_elements: declared order " + h.order->str() +
                         " but group has " + order.str() + " elements");
    h.order = order;
    return elems;
}

namespace {

// Index-based view of a fully enumerated group: elements sorted by raw data,
// multiplication via hash lookup. Keeps the lattice walk below allocation-free
// in the hot paths.
struct GroupTable {
    std::vector<BitMatrix> elems; // sorted, index = id
    std::unordered_map<BitMatrix, std::uint32_t> index;
    std::vector<std::uint32_t> gen_idx; // indices of the original generators
    std::uint32_t id_idx = 0;
    std::vector<std::uint32_t> inv;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return index.at(elems[a] * elems[b]);
    }
    std::uint32_t conj(std::uint32_t s, std::uint32_t g) const {
        return mul(mul(inv[g], s), g);
    }
};

GroupTable build_table(MatrixGroup h, std::size_t cap) {
    GroupTable t;
    t.elems = enumerate_elements(h, cap);
    std::sort(t.elems.begin(), t.elems.end(), [](const BitMatrix& a, const BitMatrix& b) {
        auto da = a.data(), db = b.data();
        return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
    });
    t.index.reserve(t.elems.size() * 2);
    for (std::uint32_t i = 0; i < t.elems.size(); ++i)
        t.index.emplace(t.elems[i], i);
    t.id_idx = t.index.at(BitMatrix::identity(h.dim));
    t.inv.resize(t.elems.size());
    for (std::uint32_t i = 0; i < t.elems.size(); ++i)
        t.inv[i] = t.index.at(t.elems[i].inverse());
    for (const auto& g : h.generators)
        t.gen_idx.push_back(t.index.at(g));
    return t;
}

// Scratch membership flags with epoch stamping, reused across closures.
struct Stamp {
    std::vector<std::uint32_t> mark;
    std::uint32_t epoch = 0;
    explicit Stamp(std::size_t n) : mark(n, 0) {}
    void next() { ++epoch; }
    bool test(std::uint32_t i) const { return mark[i] == epoch; }
    void set(std::uint32_t i) { mark[i] = epoch; }
};

using Indices = std::vector<std::uint32_t>; // sorted element indices

// Closure of <gens> seeded with the elements of a known subgroup; nullopt if
// the result must be the whole group (Lagrange: proper subgroups have order
// <= N/2).
std::optional<Indices> closure(const GroupTable& t, const Indices& seed_elems,
                               const Indices& gens, Stamp& stamp) {
    const std::size_t bail = t.elems.size() / 2;
    stamp.next();
    std::vector<std::uint32_t> out;
    std::deque<std::uint32_t> queue;
    auto push = [&](std::uint32_t v) {
        if (!stamp.test(v)) {
            stamp.set(v);
            out.push_back(v);
            queue.push_back(v);
        }
    };
    if (seed_elems.empty())
        push(t.id_idx);
    for (auto s : seed_elems)
        push(s);
    while (!queue.empty()) {
        if (out.size() > bail)
            return std::nullopt;
        std::uint32_t u = queue.front();
        queue.pop_front();
        for (auto g : gens)
            push(t.mul(u, g));
    }
    if (out.size() > bail)
        return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

// Conjugacy orbit of a subgroup under H; returns (class size, minimal member).
std::pair<Nat, Indices> subgroup_class(const GroupTable& t, const Indices& s) {
    std::set<Indices> orbit;
    std::deque<Indices> queue;
    orbit.insert(s);
    queue.push_back(s);
    while (!queue.empty()) {
        Indices cur = std::move(queue.front());
        queue.pop_front();
        for (auto g : t.gen_idx) {
            Indices img(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                img[i] = t.conj(cur[i], g);
            std::sort(img.begin(), img.end());
            if (orbit.insert(img).second)
                queue.push_back(std::move(img));
        }
    }
    return {Nat(orbit.size()), *orbit.begin()};
}

// Normalizer elements of S in H (S given sorted, with generating set).
Indices normalizer(const GroupTable& t, const Indices& s, const Indices& gens) {
    Indices out;
    for (std::uint32_t n = 0; n < t.elems.size(); ++n) {
        bool ok = true;
        for (auto g : gens.empty() ? s : gens) {
            if (!std::binary_search(s.begin(), s.end(), t.conj(g, n))) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(n);
    }
    return out;
}

} // namespace

std::vector<MaximalSubgroupClass> tiny_maximal_subgroups(const MatrixGroup& h, std::size_t cap) {
    GroupTable t = build_table(h, cap);
    const std::size_t n = t.elems.size();
    std::vector<MaximalSubgroupClass> out;
    if (n == 1)
        return out; // trivial group: no proper subgroups

    Stamp stamp(n);
    Stamp coset(n);

    struct Entry {
        Indices elems;
        Indices gens;
    };
    std::deque<Entry> frontier;
    std::set<Indices> processed; // class-minimal keys
    frontier.push_back({Indices{t.id_idx}, Indices{}});

    struct Found {
        Indices class_key;
        Indices gens;
        Nat order;
        Nat class_size;
    };
    std::vector<Found> maximal;

    while (!frontier.empty()) {
        Entry e = std::move(frontier.front());
        frontier.pop_front();
        auto [class_size, class_key] = subgroup_class(t, e.elems);
        if (!processed.insert(class_key).second)
            continue;

        Indices nrm = normalizer(t, e.elems, e.gens);
        // Expand by one generator over coset-orbit representatives: z and
        // s*z^m (s in S, m in N_H(S)) generate conjugate extensions, so one
        // representative per orbit suffices, both for reachability and for
        // the maximality certificate.
        const bool orbit_mark = e.elems.size() * nrm.size() <= 64 * n;
        coset.next();
        for (auto s : e.elems)
            coset.set(s);

        bool is_max = true;
        std::set<Indices> extension_keys;
        std::vector<Entry> extensions;
        for (std::uint32_t z = 0; z < n; ++z) {
            if (coset.test(z))
                continue;
            Indices gens2 = e.gens;
            gens2.push_back(z);
            auto ext = closure(t, e.elems, gens2, stamp);
            if (orbit_mark) {
                for (auto m : nrm) {
                    std::uint32_t zc = t.conj(z, m);
                    for (auto s : e.elems)
                        coset.set(t.mul(s, zc));
                }
            } else {
                for (auto s : e.elems)
                    coset.set(t.mul(s, z));
            }
            if (!ext) {
                continue; // closes to the whole group
            }
            is_max = false;
            if (extension_keys.insert(*ext).second)
                extensions.push_back({std::move(*ext), std::move(gens2)});
        }

        if (is_max) {
            maximal.push_back({class_key, e.gens, Nat(e.elems.size()), class_size});
        } else {
            for (auto& ext : extensions)
                frontier.push_back(std::move(ext));
        }
    }

    std::sort(maximal.begin(), maximal.end(), [](const Found& a, const Found& b) {
        if (a.order != b.order)
            return a.order > b.order;
        return a.class_key < b.class_key;
    });
    for (auto& m : maximal) {
        MaximalSubgroupClass cls;
        cls.subgroup_order = m.order;
        cls.class_size = m.class_size;
        if (m.gens.empty())
            cls.generators.push_back(t.elems[t.id_idx]);
        else
            for (auto g : m.gens)
                cls.generators.push_back(t.elems[g]);
        out.push_back(std::move(cls));
    }
    return out;
}

} // namespace ep::grp
