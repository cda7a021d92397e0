#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "symfun/partition.hpp"

namespace symfun {

/// Integer-valued expansion in the Schur basis, sorted by partition.
struct ExpTerm {
    Partition part;
    long long coeff;
    bool operator==(const ExpTerm&) const = default;
};
using Expansion = std::vector<ExpTerm>;

/// Memo table with concurrent readers and serialized insertion. Nodes are
/// never erased except by clear(), so returned references stay valid while
/// the table is alive and not cleared.
template <class K, class V>
class MemoTable {
public:
    template <class F>
    const V& get_or_compute(const K& key, F&& make) {
        {
            std::shared_lock lock(mx_);
            auto it = map_.find(key);
            if (it != map_.end())
                return it->second;
        }
        V value = make();
        std::unique_lock lock(mx_);
        auto [it, inserted] = map_.emplace(key, std::move(value));
        return it->second;
    }

    void insert(const K& key, V value) {
        std::unique_lock lock(mx_);
        map_.emplace(key, std::move(value));
    }

    bool contains(const K& key) const {
        std::shared_lock lock(mx_);
        return map_.find(key) != map_.end();
    }

    std::size_t size() const {
        std::shared_lock lock(mx_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mx_);
        map_.clear();
    }

    /// Snapshot for serialization.
    std::map<K, V> snapshot() const {
        std::shared_lock lock(mx_);
        return map_;
    }

private:
    mutable std::shared_mutex mx_;
    std::map<K, V> map_;
};

using PartitionPair = std::pair<Partition, Partition>;

/// Kostka transition data for one degree: partitions of n in canonical
/// order plus the unitriangular matrix K with K[i][j] = <s_{p[i]}, h_{p[j]}>.
struct KostkaData {
    std::vector<Partition> order;
    std::vector<std::vector<long long>> matrix;
};

/// The shared coefficient caches. The four persistable sections (characters,
/// Littlewood-Richardson products, Kronecker products, basis plethysms) hold
/// exact integers keyed by canonical partition tuples; the remaining tables
/// are cheap derived data kept in memory only.
class MemoTables {
public:
    MemoTable<PartitionPair, long long> characters;
    MemoTable<PartitionPair, Expansion> lr_products;
    MemoTable<PartitionPair, Expansion> kron_products;
    MemoTable<PartitionPair, Expansion> pleth_basis;

    MemoTable<PartitionPair, Expansion> skew_expansions;
    MemoTable<int, KostkaData> kostka;
    MemoTable<std::tuple<Partition, int, Partition>, Expansion> iterated_pleth;

    void clear_all() {
        characters.clear();
        lr_products.clear();
        kron_products.clear();
        pleth_basis.clear();
        skew_expansions.clear();
        kostka.clear();
        iterated_pleth.clear();
    }
};

/// The tables used by all coefficient computations on this thread: a
/// process-wide shared instance unless a ScopedMemo override is active.
MemoTables& memo();

/// Shared process-wide tables, regardless of overrides.
MemoTables& global_memo();

/// RAII override installing fresh, thread-local tables; used for cold-cache
/// measurements and isolated parallel runs.
class ScopedMemo {
public:
    ScopedMemo();
    explicit ScopedMemo(MemoTables& tables);
    ~ScopedMemo();
    ScopedMemo(const ScopedMemo&) = delete;
    ScopedMemo& operator=(const ScopedMemo&) = delete;

    MemoTables& tables() { return *active_; }

private:
    MemoTables owned_;
    MemoTables* active_;
    MemoTables* prev_;
};

} // namespace symfun
