#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "symfun/rational.hpp"

namespace symfun {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0. Canonical storage
/// strips trailing zeros.
///
/// The total order used everywhere (term maps, enumeration, printing) is:
/// smaller weight first, then lexicographically larger part sequence first,
/// so partitions of 3 run (3), (2,1), (1,1,1).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    /// Validates: parts weakly decreasing and nonnegative (zeros stripped).
    explicit Partition(std::vector<int> parts);
    /// Sorts the given parts into canonical order; negative parts rejected.
    static Partition from_unsorted(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool is_empty() const { return parts_.empty(); }

    /// 1-based row length; 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }

    Partition conjugate() const;
    /// Diagram inclusion mu subseteq *this.
    bool contains(const Partition& mu) const;
    /// Part multiplicities m_1..m_{lambda_1}; m[i-1] = #parts equal to i.
    std::vector<int> multiplicities() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const Partition& o) const;

    /// Text form "[4,2,2,1]"; "[]" for the empty partition.
    std::string to_string() const;
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

std::ostream& operator<<(std::ostream&, const Partition&);

/// n(lambda) = sum (i-1) lambda_i.
long long n_stat(const Partition& lambda);
/// z_lambda = prod i^{m_i} m_i!.
Integer z_stat(const Partition& lambda);

struct DiagramStats {
    long long n;
    Integer z;
};
DiagramStats diagram_stats(const Partition& lambda);

/// Content c(i,j) = j - i and hook length h(i,j) for a box of the diagram
/// (1-based). Throws DomainError for boxes outside the shape.
std::pair<int, int> content_hook(const Partition& lambda, int i, int j);
Integer hook_product(const Partition& lambda);

/// Hook-content polynomial: prod over boxes of (alpha + c(i,j)) / h(i,j),
/// the GL(n) dimension of the lambda irrep evaluated at n = alpha.
Rational dim_poly(const Partition& lambda, const Rational& alpha);

/// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);
/// All partitions of every weight 0..n, in the canonical total order.
std::vector<Partition> partitions_up_to(int n);
/// All mu with mu subseteq lambda.
std::vector<Partition> subpartitions(const Partition& lambda);

/// All eta obtained from pi by removing a horizontal strip of k boxes
/// (at most one removed box per column); the constituents of s_{pi/(k)}.
std::vector<Partition> horizontal_strips(const Partition& pi, int k);
/// Pieri additions: mu obtained from lambda by adding a horizontal strip
/// of k boxes (for products with h_k).
std::vector<Partition> add_horizontal_strips(const Partition& lambda, int k);
/// Dual Pieri additions: vertical strips of k boxes (products with e_k).
std::vector<Partition> add_vertical_strips(const Partition& lambda, int k);

/// Semistandard (column-strict) tableau: rows weakly increase, columns
/// strictly increase, entries in {1..l}.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    /// Box counts (#1, ..., #l).
    std::vector<int> weight(int l) const;
};

/// Weights of all semistandard tableaux of shape pi with entries in {1..l},
/// one vector per tableau (duplicates kept: this is the monomial multiset
/// of s_pi on l letters). Empty when length(pi) > l.
std::vector<std::vector<int>> ssyt_enumerate(const Partition& pi, int l);
std::vector<Tableau> ssyt_tableaux(const Partition& pi, int l);

} // namespace symfun
