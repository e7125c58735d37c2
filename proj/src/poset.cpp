#include "indep/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "indep/tops.hpp"

namespace indep {

Poset::Poset(int size, std::vector<Cover> covers, std::vector<Payload> payloads)
    : size_(size), covers_(std::move(covers)), payloads_(std::move(payloads)) {
    if (payloads_.empty()) payloads_.assign(size_, std::monostate{});
    if (static_cast<int>(payloads_.size()) != size_) {
        throw Error(ErrorKind::InvalidPoset, "payload count does not match element count");
    }
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end()) {
        throw Error(ErrorKind::InvalidPoset, "repeated cover");
    }
    upper_.assign(size_, {});
    lower_.assign(size_, {});
    for (auto [x, y] : covers_) {
        if (x < 0 || y < 0 || x >= size_ || y >= size_ || x == y) {
            throw Error(ErrorKind::InvalidPoset,
                        "bad cover (" + std::to_string(x) + ", " + std::to_string(y) + ")");
        }
        upper_[x].push_back(y);
        lower_[y].push_back(x);
    }

    std::vector<int> pending(size_);
    for (int x = 0; x < size_; ++x) pending[x] = static_cast<int>(lower_[x].size());
    std::vector<int> ready;
    for (int x = size_ - 1; x >= 0; --x)
        if (pending[x] == 0) ready.push_back(x);
    while (!ready.empty()) {
        int x = ready.back();
        ready.pop_back();
        topo_.push_back(x);
        for (int y : upper_[x]) {
            if (--pending[y] == 0) ready.push_back(y);
        }
    }
    if (static_cast<int>(topo_.size()) != size_) {
        throw Error(ErrorKind::InvalidPoset, "cover relation contains a cycle");
    }

    down_.assign(size_, Bits(size_));
    for (int x : topo_) {
        down_[x].set(x);
        for (int l : lower_[x]) down_[x] |= down_[l];
    }
    up_.assign(size_, Bits(size_));
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        int x = *it;
        up_[x].set(x);
        for (int u : upper_[x]) up_[x] |= up_[u];
    }

    for (auto [x, y] : covers_) {
        if ((up_[x] & down_[y]).count() != 2) {
            throw Error(ErrorKind::InvalidPoset, "cover (" + std::to_string(x) + ", " + std::to_string(y) +
                                                     ") is implied by transitivity");
        }
    }
}

Poset Poset::from_order(int size, const std::function<bool(int, int)>& less, std::vector<Payload> payloads) {
    std::vector<Bits> above(size, Bits(size));
    std::vector<Bits> beneath(size, Bits(size));
    for (int x = 0; x < size; ++x) {
        for (int y = 0; y < size; ++y) {
            if (x != y && less(x, y)) {
                above[x].set(y);
                beneath[y].set(x);
            }
        }
    }
    std::vector<Cover> covers;
    for (int x = 0; x < size; ++x) {
        for (auto y = above[x].find_first(); y != Bits::npos; y = above[x].find_next(y)) {
            if (!(above[x] & beneath[y]).any()) covers.emplace_back(x, static_cast<int>(y));
        }
    }
    return Poset(size, std::move(covers), std::move(payloads));
}

bool Poset::is_cover(int x, int y) const {
    return std::binary_search(covers_.begin(), covers_.end(), Cover{x, y});
}

std::optional<int> Poset::minimum() const {
    for (int x = 0; x < size_; ++x)
        if (up_[x].count() == static_cast<std::size_t>(size_)) return x;
    return std::nullopt;
}

std::optional<int> Poset::maximum() const {
    for (int x = 0; x < size_; ++x)
        if (down_[x].count() == static_cast<std::size_t>(size_)) return x;
    return std::nullopt;
}

Poset independence_poset(const Dag& d) {
    const std::vector<Top> tops = enumerate_tops(d);
    std::map<Top, int> index;
    for (std::size_t i = 0; i < tops.size(); ++i) index.emplace(tops[i], static_cast<int>(i));
    std::vector<Cover> covers;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        tops[i].up.for_each([&](Vertex g) {
            covers.emplace_back(static_cast<int>(i), index.at(flip(d, tops[i], g)));
        });
    }
    std::vector<Payload> payloads(tops.begin(), tops.end());
    return Poset(static_cast<int>(tops.size()), std::move(covers), std::move(payloads));
}

LatticeTables lattice_tables(const Poset& p) {
    const int m = p.size();
    if (!p.minimum() || !p.maximum()) {
        throw Error(ErrorKind::NoBounds, "poset lacks a unique minimum or maximum");
    }
    LatticeTables t;
    t.size = m;
    t.join.assign(static_cast<std::size_t>(m) * m, -1);
    t.meet.assign(static_cast<std::size_t>(m) * m, -1);

    auto extremes = [&](const Bits& bounds, bool minimal) {
        std::vector<int> out;
        for (auto z = bounds.find_first(); z != Bits::npos; z = bounds.find_next(z)) {
            const Bits& cone = minimal ? p.down_set(static_cast<int>(z)) : p.up_set(static_cast<int>(z));
            if ((cone & bounds).count() == 1) out.push_back(static_cast<int>(z));
        }
        return out;
    };

    for (int x = 0; x < m; ++x) {
        for (int y = x; y < m; ++y) {
            auto ub = extremes(p.up_set(x) & p.up_set(y), true);
            if (ub.size() != 1) {
                t.witness = LatticeWitness{x, y, true, ub};
                t.join.clear();
                t.meet.clear();
                return t;
            }
            auto lb = extremes(p.down_set(x) & p.down_set(y), false);
            if (lb.size() != 1) {
                t.witness = LatticeWitness{x, y, false, lb};
                t.join.clear();
                t.meet.clear();
                return t;
            }
            t.join[static_cast<std::size_t>(x) * m + y] = t.join[static_cast<std::size_t>(y) * m + x] = ub[0];
            t.meet[static_cast<std::size_t>(x) * m + y] = t.meet[static_cast<std::size_t>(y) * m + x] = lb[0];
        }
    }
    t.is_lattice = true;
    return t;
}

bool is_lattice(const Poset& p) {
    return lattice_tables(p).is_lattice;
}

std::vector<std::vector<long long>> mobius(const Poset& p) {
    const int m = p.size();
    std::vector<std::vector<long long>> mu(m, std::vector<long long>(m, 0));
    for (int x = 0; x < m; ++x) {
        for (int y : p.topological_order()) {
            if (!p.leq(x, y)) continue;
            if (y == x) {
                mu[x][y] = 1;
                continue;
            }
            Bits between = p.up_set(x) & p.down_set(y);
            between.reset(y);
            long long sum = 0;
            for (auto z = between.find_first(); z != Bits::npos; z = between.find_next(z)) sum += mu[x][z];
            mu[x][y] = -sum;
        }
    }
    return mu;
}

int longest_chain(const Poset& p) {
    std::vector<int> height(p.size(), 0);
    int best = 0;
    for (int y : p.topological_order()) {
        for (int l : p.lower_covers(y)) height[y] = std::max(height[y], height[l] + 1);
        best = std::max(best, height[y]);
    }
    return best;
}

Poset dual(const Poset& p) {
    std::vector<Cover> covers;
    covers.reserve(p.covers().size());
    for (auto [x, y] : p.covers()) covers.emplace_back(y, x);
    return Poset(p.size(), std::move(covers), p.payloads());
}

namespace {

using Signature = std::tuple<int, int, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const Poset& p) {
    const int m = p.size();
    std::vector<int> depth(m, 0), height(m, 0);
    const auto& topo = p.topological_order();
    for (int y : topo)
        for (int l : p.lower_covers(y)) depth[y] = std::max(depth[y], depth[l] + 1);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (int u : p.upper_covers(*it)) height[*it] = std::max(height[*it], height[u] + 1);
    std::vector<Signature> sig(m);
    for (int x = 0; x < m; ++x) {
        sig[x] = Signature{depth[x], height[x], p.lower_covers(x).size(), p.upper_covers(x).size(),
                           p.down_set(x).count(), p.up_set(x).count()};
    }
    return sig;
}

}  // namespace

bool poset_isomorphic(const Poset& p, const Poset& q) {
    if (p.size() > kMaxPosetIsomorphismSize || q.size() > kMaxPosetIsomorphismSize) {
        throw Error(ErrorKind::TooLarge, "poset isomorphism limited to " +
                                             std::to_string(kMaxPosetIsomorphismSize) + " elements");
    }
    const int m = p.size();
    if (m != q.size() || p.covers().size() != q.covers().size()) return false;
    const auto sp = signatures(p);
    const auto sq = signatures(q);
    {
        auto a = sp, b = sq;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }

    const std::vector<int>& order = p.topological_order();
    std::vector<int> map(m, -1);
    std::vector<bool> used(m, false);
    std::function<bool(int)> extend = [&](int k) {
        if (k == m) return true;
        const int x = order[k];
        for (int y = 0; y < m; ++y) {
            if (used[y] || sp[x] != sq[y]) continue;
            bool ok = true;
            for (int j = 0; j < k && ok; ++j) {
                const int z = order[j];
                ok = p.leq(z, x) == q.leq(map[z], y) && p.leq(x, z) == q.leq(y, map[z]);
            }
            if (!ok) continue;
            map[x] = y;
            used[y] = true;
            if (extend(k + 1)) return true;
            used[y] = false;
            map[x] = -1;
        }
        return false;
    };
    return extend(0);
}

bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<int>& map) {
    const int m = p.size();
    if (m != q.size() || static_cast<int>(map.size()) != m) return false;
    std::vector<bool> hit(m, false);
    for (int x = 0; x < m; ++x) {
        if (map[x] < 0 || map[x] >= m || hit[map[x]]) return false;
        hit[map[x]] = true;
    }
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            if (p.leq(x, y) != q.leq(map[x], map[y])) return false;
    return true;
}

Irreducibles irreducibles(const Poset& p) {
    Irreducibles r;
    for (int x = 0; x < p.size(); ++x) {
        if (p.lower_covers(x).size() == 1) r.join.push_back(x);
        if (p.upper_covers(x).size() == 1) r.meet.push_back(x);
    }
    return r;
}

Poset boolean_lattice(int atoms) {
    const int m = 1 << atoms;
    std::vector<Cover> covers;
    for (int s = 0; s < m; ++s)
        for (int b = 0; b < atoms; ++b)
            if (!(s & (1 << b))) covers.emplace_back(s, s | (1 << b));
    return Poset(m, std::move(covers));
}

Poset chain_poset(int length) {
    std::vector<Cover> covers;
    for (int i = 0; i < length; ++i) covers.emplace_back(i, i + 1);
    return Poset(length + 1, std::move(covers));
}

}  // namespace indep
