#include "symfun/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>

namespace symfun {

namespace {

int checked_weight(const std::vector<int>& parts) {
    long long w = 0;
    for (int p : parts)
        w += p;
    if (w > (1 << 28))
        throw DomainError("partition weight out of supported range");
    return static_cast<int>(w);
}

} // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw DomainError("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
    weight_ = checked_weight(parts_);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty())
        return {};
    std::vector<int> cols(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++cols[static_cast<size_t>(j)];
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length())
        return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i))
            return false;
    return true;
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 0 : static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        ++m[static_cast<size_t>(p - 1)];
    return m;
}

std::strong_ordering Partition::operator<=>(const Partition& o) const {
    if (weight_ != o.weight_)
        return weight_ <=> o.weight_;
    // same weight: lexicographically larger sequence sorts first
    size_t n = std::min(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (parts_[i] != o.parts_[i])
            return o.parts_[i] <=> parts_[i];
    return o.parts_.size() <=> parts_.size();
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ']';
    return s;
}

Partition Partition::parse(const std::string& text) {
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= n || text[i] != '[')
        throw DomainError("partition literal must start with '[': " + text);
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < n && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (i == start)
                throw DomainError("expected part in partition literal: " + text);
            if (i - start > 6)
                throw DomainError("partition part out of range: " + text);
            parts.push_back(std::stoi(text.substr(start, i - start)));
            skip_ws();
            if (i < n && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < n && text[i] == ']') {
                ++i;
                break;
            }
            throw DomainError("expected ',' or ']' in partition literal: " + text);
        }
    }
    skip_ws();
    if (i != n)
        throw DomainError("trailing characters after partition literal: " + text);
    return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.to_string();
}

long long n_stat(const Partition& lambda) {
    long long n = 0;
    for (int i = 1; i <= lambda.length(); ++i)
        n += static_cast<long long>(i - 1) * lambda.part(i);
    return n;
}

Integer z_stat(const Partition& lambda) {
    Integer z = 1;
    auto mult = lambda.multiplicities();
    for (size_t i = 0; i < mult.size(); ++i) {
        if (mult[i] == 0)
            continue;
        Integer ip;
        mpz_ui_pow_ui(ip.get_mpz_t(), static_cast<unsigned long>(i + 1),
                      static_cast<unsigned long>(mult[i]));
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mult[i]));
        z *= ip * f;
    }
    return z;
}

DiagramStats diagram_stats(const Partition& lambda) {
    return {n_stat(lambda), z_stat(lambda)};
}

std::pair<int, int> content_hook(const Partition& lambda, int i, int j) {
    if (i < 1 || j < 1 || j > lambda.part(i))
        throw DomainError("box (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is outside the diagram of " + lambda.to_string());
    Partition conj = lambda.conjugate();
    int hook = lambda.part(i) + conj.part(j) - i - j + 1;
    return {j - i, hook};
}

Integer hook_product(const Partition& lambda) {
    Integer prod = 1;
    Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            prod *= lambda.part(i) + conj.part(j) - i - j + 1;
    return prod;
}

Rational dim_poly(const Partition& lambda, const Rational& alpha) {
    Rational r(1);
    Partition conj = lambda.conjugate();
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            int hook = lambda.part(i) + conj.part(j) - i - j + 1;
            r *= (alpha + Rational(j - i)) / Rational(hook);
        }
    return r;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw DomainError("partitions_of requires n >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    // descending enumeration yields reverse-lexicographic order
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto pk = partitions_of(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int prev) {
        out.push_back(Partition(cur));
        if (row > lambda.length())
            return;
        int hi = std::min(prev, lambda.part(row));
        for (int v = hi; v >= 1; --v) {
            cur.push_back(v);
            rec(row + 1, v);
            cur.pop_back();
        }
    };
    rec(1, lambda.part(1));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> horizontal_strips(const Partition& pi, int k) {
    if (k < 0 || k > pi.weight())
        throw DomainError("strip size out of range");
    int target = pi.weight() - k;
    std::vector<Partition> out;
    std::vector<int> cur;
    int rows = pi.length();
    // eta_i in [pi_{i+1}, pi_i]; interlacing makes eta a partition and
    // pi/eta a horizontal strip
    std::function<void(int, int)> rec = [&](int row, int rest) {
        if (row > rows) {
            if (rest == 0)
                out.push_back(Partition(cur));
            return;
        }
        int lo = pi.part(row + 1), hi = pi.part(row);
        // remaining rows can hold at most sum of their caps
        for (int v = std::min(hi, rest); v >= lo; --v) {
            if (v > 0)
                cur.push_back(v);
            rec(row + 1, rest - v);
            if (v > 0)
                cur.pop_back();
        }
    };
    rec(1, target);
    return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& lambda, int k) {
    if (k < 0)
        throw DomainError("strip size out of range");
    std::vector<Partition> out;
    std::vector<int> cur;
    int rows = lambda.length() + 1;
    // mu_i in [lambda_i, lambda_{i-1}] with mu_1 unbounded above
    std::function<void(int, int)> rec = [&](int row, int rest) {
        if (row > rows) {
            if (rest == 0)
                out.push_back(Partition(cur));
            return;
        }
        int lo = lambda.part(row);
        int hi = (row == 1) ? lambda.part(1) + k : lambda.part(row - 1);
        for (int v = std::min(hi, lo + rest); v >= lo; --v) {
            if (v > 0)
                cur.push_back(v);
            rec(row + 1, rest - (v - lo));
            if (v > 0)
                cur.pop_back();
        }
    };
    rec(1, k);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> add_vertical_strips(const Partition& lambda, int k) {
    auto conj = lambda.conjugate();
    auto strips = add_horizontal_strips(conj, k);
    std::vector<Partition> out;
    out.reserve(strips.size());
    for (const auto& s : strips)
        out.push_back(s.conjugate());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Tableau::weight(int l) const {
    std::vector<int> w(static_cast<size_t>(l), 0);
    for (const auto& row : rows)
        for (int e : row)
            ++w[static_cast<size_t>(e - 1)];
    return w;
}

namespace {

void ssyt_rec(const Partition& pi, int l, std::vector<std::vector<int>>& rows,
              int r, int c, const std::function<void()>& emit) {
    if (r >= pi.length()) {
        emit();
        return;
    }
    if (c >= pi.part(r + 1)) {
        ssyt_rec(pi, l, rows, r + 1, 0, emit);
        return;
    }
    int lo = 1;
    if (c > 0)
        lo = std::max(lo, rows[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
    if (r > 0)
        lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    for (int v = lo; v <= l; ++v) {
        rows[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        ssyt_rec(pi, l, rows, r, c + 1, emit);
    }
}

} // namespace

std::vector<std::vector<int>> ssyt_enumerate(const Partition& pi, int l) {
    if (l < 0)
        throw DomainError("alphabet size must be nonnegative");
    std::vector<std::vector<int>> out;
    if (pi.length() > l)
        return out;
    if (pi.is_empty())
        return {std::vector<int>(static_cast<size_t>(l), 0)};
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= pi.length(); ++i)
        rows.emplace_back(static_cast<size_t>(pi.part(i)), 0);
    ssyt_rec(pi, l, rows, 0, 0, [&] {
        std::vector<int> w(static_cast<size_t>(l), 0);
        for (const auto& row : rows)
            for (int e : row)
                ++w[static_cast<size_t>(e - 1)];
        out.push_back(std::move(w));
    });
    return out;
}

std::vector<Tableau> ssyt_tableaux(const Partition& pi, int l) {
    std::vector<Tableau> out;
    if (pi.length() > l || l < 0)
        return out;
    if (pi.is_empty())
        return {Tableau{pi, {}}};
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= pi.length(); ++i)
        rows.emplace_back(static_cast<size_t>(pi.part(i)), 0);
    ssyt_rec(pi, l, rows, 0, 0, [&] { out.push_back(Tableau{pi, rows}); });
    return out;
}

} // namespace symfun
