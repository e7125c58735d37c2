#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "indep/dag.hpp"
#include "indep/pairs.hpp"

namespace indep {

using Bits = boost::dynamic_bitset<>;
using Cover = std::pair<int, int>;

/// Per-element payload: a top, a mop, a plain name, or nothing.
using Payload = std::variant<std::monostate, Top, Mop, std::string>;

/// Finite poset given by its cover relations. The order closure is stored as
/// explicit up-set and down-set bit rows. Immutable after construction.
class Poset {
public:
    Poset() = default;

    /// Covers must be acyclic and form a transitive reduction; throws
    /// InvalidPoset otherwise. `payloads` is empty or has one entry per element.
    Poset(int size, std::vector<Cover> covers, std::vector<Payload> payloads = {});

    /// Builds from a strict order relation, computing the transitive reduction.
    static Poset from_order(int size, const std::function<bool(int, int)>& less,
                            std::vector<Payload> payloads = {});

    int size() const { return size_; }
    /// Sorted list of covers (x, y) meaning x is covered by y.
    const std::vector<Cover>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return upper_[x]; }
    const std::vector<int>& lower_covers(int x) const { return lower_[x]; }
    bool is_cover(int x, int y) const;

    bool leq(int x, int y) const { return up_[x].test(y); }
    bool less(int x, int y) const { return x != y && up_[x].test(y); }
    /// Elements y with x <= y.
    const Bits& up_set(int x) const { return up_[x]; }
    /// Elements y with y <= x.
    const Bits& down_set(int x) const { return down_[x]; }

    const Payload& payload(int x) const { return payloads_[x]; }
    const std::vector<Payload>& payloads() const { return payloads_; }

    /// Elements listed so that every element precedes its upper covers.
    const std::vector<int>& topological_order() const { return topo_; }

    std::optional<int> minimum() const;
    std::optional<int> maximum() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.size_ == b.size_ && a.covers_ == b.covers_ && a.payloads_ == b.payloads_;
    }

private:
    int size_ = 0;
    std::vector<Cover> covers_;
    std::vector<Payload> payloads_;
    std::vector<std::vector<int>> upper_;
    std::vector<std::vector<int>> lower_;
    std::vector<Bits> up_;
    std::vector<Bits> down_;
    std::vector<int> topo_;
};

/// Elements of top(G) in flip-tree order with covers t < flip_g(t), g in U_t.
Poset independence_poset(const Dag& d);

struct LatticeWitness {
    int x = -1;
    int y = -1;
    bool join_failed = true;       // false: the meet failed
    std::vector<int> bounds;       // minimal upper (or maximal lower) bounds
};

struct LatticeTables {
    bool is_lattice = false;
    std::optional<LatticeWitness> witness;  // first offending pair
    std::vector<int> join;                  // size*size, row-major; empty unless a lattice
    std::vector<int> meet;
    int size = 0;

    int join_of(int x, int y) const { return join[static_cast<std::size_t>(x) * size + y]; }
    int meet_of(int x, int y) const { return meet[static_cast<std::size_t>(x) * size + y]; }
};

/// Lattice test with full join and meet tables. Throws NoBounds when there is
/// no unique minimum or maximum.
LatticeTables lattice_tables(const Poset& p);
bool is_lattice(const Poset& p);

/// Mobius function as a dense matrix; mu[x][y] = 0 unless x <= y.
std::vector<std::vector<long long>> mobius(const Poset& p);

/// Length r of the longest chain x_0 < ... < x_r.
int longest_chain(const Poset& p);

/// Covers reversed, payloads preserved.
Poset dual(const Poset& p);

inline constexpr int kMaxPosetIsomorphismSize = 200;

/// Order isomorphism exists. Throws TooLarge above 200 elements.
bool poset_isomorphic(const Poset& p, const Poset& q);

/// True iff `map` (p-element -> q-element) is a bijection preserving and
/// reflecting the order.
bool is_order_isomorphism(const Poset& p, const Poset& q, const std::vector<int>& map);

struct Irreducibles {
    std::vector<int> join;  // cover exactly one element
    std::vector<int> meet;  // covered by exactly one element
};

Irreducibles irreducibles(const Poset& p);

/// Boolean lattice on the given number of atoms, elements indexed by subset.
Poset boolean_lattice(int atoms);
/// Chain 0 < 1 < ... < length.
Poset chain_poset(int length);

}  // namespace indep
