#include "symfun/symfn.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "symfun/character.hpp"

namespace symfun {

char basis_letter(Basis b) {
    switch (b) {
    case Basis::s: return 's';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::p: return 'p';
    case Basis::m: return 'm';
    }
    return '?';
}

Basis basis_from_letter(char c) {
    switch (c) {
    case 's': return Basis::s;
    case 'h': return Basis::h;
    case 'e': return Basis::e;
    case 'p': return Basis::p;
    case 'm': return Basis::m;
    default: throw DomainError(std::string("unknown basis letter '") + c + "'");
    }
}

// --- SymFn basics -----------------------------------------------------------

SymFn SymFn::monomial(Basis b, Partition part, Rational coeff) {
    SymFn f(b);
    if (!coeff.is_zero())
        f.terms_.emplace(std::move(part), std::move(coeff));
    return f;
}

SymFn SymFn::from_terms(Basis b, std::map<Partition, Rational> terms) {
    SymFn f(b);
    for (auto& [part, c] : terms)
        if (!c.is_zero())
            f.terms_.emplace(part, std::move(c));
    return f;
}

SymFn SymFn::from_expansion(const Expansion& exp) {
    SymFn f;
    for (const auto& t : exp)
        if (t.coeff != 0)
            f.terms_.emplace(t.part, Rational(t.coeff));
    return f;
}

Rational SymFn::coeff(const Partition& part) const {
    auto it = terms_.find(part);
    return it == terms_.end() ? Rational(0) : it->second;
}

int SymFn::max_weight() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

SymFn SymFn::component(int weight) const {
    SymFn out(basis_);
    for (const auto& [part, c] : terms_)
        if (part.weight() == weight)
            out.terms_.emplace(part, c);
    return out;
}

Rational SymFn::constant_term() const {
    return canonical().coeff(Partition{});
}

void SymFn::add_term(const Partition& part, const Rational& coeff) {
    auto it = terms_.find(part);
    if (it == terms_.end()) {
        if (!coeff.is_zero())
            terms_.emplace(part, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

SymFn& SymFn::operator+=(const SymFn& o) {
    if (basis_ == o.basis_) {
        for (const auto& [part, c] : o.terms_)
            add_term(part, c);
        return *this;
    }
    *this = canonical();
    SymFn oc = o.canonical();
    for (const auto& [part, c] : oc.terms())
        add_term(part, c);
    return *this;
}

SymFn& SymFn::operator-=(const SymFn& o) {
    return *this += -o;
}

SymFn& SymFn::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [part, v] : terms_)
        v *= c;
    return *this;
}

SymFn SymFn::operator-() const {
    SymFn out(basis_);
    for (const auto& [part, c] : terms_)
        out.terms_.emplace(part, -c);
    return out;
}

SymFn operator*(const SymFn& a, const SymFn& b) {
    return outer_mul(a, b);
}

bool SymFn::operator==(const SymFn& o) const {
    if (basis_ == o.basis_)
        return terms_ == o.terms_;
    return canonical().terms() == o.canonical().terms();
}

std::string SymFn::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [part, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        std::string body;
        if (part.is_empty())
            body = mag.to_string();
        else if (mag == Rational(1))
            body = std::string(1, basis_letter(basis_)) + part.to_string();
        else
            body = mag.to_string() + "*" + basis_letter(basis_) + part.to_string();
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const SymFn& f) {
    return os << f.to_string();
}

// --- TensorFn ---------------------------------------------------------------

Rational TensorFn::coeff(const Partition& left, const Partition& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorFn::add_term(const Partition& left, const Partition& right, const Rational& coeff) {
    auto key = PartitionPair{left, right};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (!coeff.is_zero())
            terms_.emplace(std::move(key), coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero())
        terms_.erase(it);
}

TensorFn& TensorFn::operator+=(const TensorFn& o) {
    for (const auto& [key, c] : o.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

TensorFn& TensorFn::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_)
        v *= c;
    return *this;
}

std::string TensorFn::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        std::string body;
        if (!(mag == Rational(1)))
            body = mag.to_string() + "*";
        body += "s" + key.first.to_string() + " (x) s" + key.second.to_string();
        if (first) {
            out += (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TensorFn& t) {
    return os << t.to_string();
}

// --- Littlewood-Richardson rule ----------------------------------------------

namespace {

// Enumerates all Littlewood-Richardson fillings of lambda/mu (semistandard,
// reverse reading word a lattice word) and tallies contents. Cells are
// visited rows top to bottom, right to left within a row, which is exactly
// reverse reading order, so the lattice property is checked prefix by prefix.
Expansion enumerate_skew(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu))
        return {};
    int nrows = lambda.length();
    int ncells = lambda.weight() - mu.weight();
    if (ncells == 0)
        return {{Partition{}, 1}};

    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= nrows; ++r)
        for (int c = lambda.part(r); c > mu.part(r); --c)
            cells.push_back({r, c});

    std::vector<std::vector<int>> grid(static_cast<size_t>(nrows + 1));
    for (int r = 1; r <= nrows; ++r)
        grid[static_cast<size_t>(r)].assign(static_cast<size_t>(lambda.part(r) + 1), 0);
    std::vector<int> counts(static_cast<size_t>(nrows + 1), 0);

    std::map<Partition, long long> tally;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            std::vector<int> content;
            for (int v = 1; v <= nrows; ++v) {
                if (counts[static_cast<size_t>(v)] == 0)
                    break;
                content.push_back(counts[static_cast<size_t>(v)]);
            }
            ++tally[Partition(std::move(content))];
            return;
        }
        auto [r, c] = cells[idx];
        int hi = r; // lattice words force entry <= row index
        if (c < lambda.part(r))
            hi = std::min(hi, grid[static_cast<size_t>(r)][static_cast<size_t>(c + 1)]);
        int lo = 1;
        if (r > 1 && c > mu.part(r - 1))
            lo = grid[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1;
        for (int v = lo; v <= hi; ++v) {
            if (v > 1 && counts[static_cast<size_t>(v)] + 1 > counts[static_cast<size_t>(v - 1)])
                continue;
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            ++counts[static_cast<size_t>(v)];
            rec(idx + 1);
            --counts[static_cast<size_t>(v)];
        }
    };
    rec(0);

    Expansion out;
    out.reserve(tally.size());
    for (auto& [part, c] : tally)
        out.push_back({part, c});
    return out;
}

} // namespace

const Expansion& skew_expand(const Partition& lambda, const Partition& mu) {
    return memo().skew_expansions.get_or_compute({lambda, mu},
                                                 [&] { return enumerate_skew(lambda, mu); });
}

const Expansion& lr_product_expand(const Partition& mu, const Partition& nu) {
    const Partition& big = (mu.weight() >= nu.weight()) ? mu : nu;
    const Partition& small = (mu.weight() >= nu.weight()) ? nu : mu;
    return memo().lr_products.get_or_compute({big, small}, [&] {
        Expansion out;
        for (const auto& lambda : partitions_of(big.weight() + small.weight())) {
            if (!lambda.contains(big) || !lambda.contains(small))
                continue;
            for (const auto& t : skew_expand(lambda, big))
                if (t.part == small) {
                    out.push_back({lambda, t.coeff});
                    break;
                }
        }
        return out;
    });
}

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() != mu.weight() + nu.weight())
        return 0;
    for (const auto& t : skew_expand(lambda, mu))
        if (t.part == nu)
            return t.coeff;
    return 0;
}

// --- Kronecker products -------------------------------------------------------

const Expansion& kron_product_expand(const Partition& mu, const Partition& nu) {
    const Partition& a = std::min(mu, nu);
    const Partition& b = std::max(mu, nu);
    return memo().kron_products.get_or_compute({a, b}, [&]() -> Expansion {
        if (a.weight() != b.weight())
            return {};
        int n = a.weight();
        Expansion out;
        auto classes = partitions_of(n);
        std::vector<Rational> weights;
        weights.reserve(classes.size());
        for (const auto& rho : classes)
            weights.push_back(Rational(chi(a, rho)) * Rational(chi(b, rho)) /
                              Rational(z_stat(rho)));
        for (const auto& lambda : partitions_of(n)) {
            Rational g(0);
            for (size_t r = 0; r < classes.size(); ++r)
                g += weights[r] * Rational(chi(lambda, classes[r]));
            if (!g.is_zero())
                out.push_back({lambda, g.to_ll()});
        }
        return out;
    });
}

long long kron_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.weight() != mu.weight() || mu.weight() != nu.weight())
        return 0;
    for (const auto& t : kron_product_expand(mu, nu))
        if (t.part == lambda)
            return t.coeff;
    return 0;
}

// --- basis transitions ---------------------------------------------------------

namespace {

std::map<Partition, long long> multiplicative_to_s(const Partition& mu, bool vertical) {
    std::map<Partition, long long> cur{{Partition{}, 1}};
    for (int i = 1; i <= mu.length(); ++i) {
        int k = mu.part(i);
        std::map<Partition, long long> next;
        for (const auto& [lam, c] : cur) {
            auto strips = vertical ? add_vertical_strips(lam, k) : add_horizontal_strips(lam, k);
            for (const auto& kappa : strips)
                next[kappa] += c;
        }
        cur = std::move(next);
    }
    return cur;
}

const KostkaData& kostka_data(int n) {
    return memo().kostka.get_or_compute(n, [&] {
        KostkaData data;
        data.order = partitions_of(n);
        size_t sz = data.order.size();
        std::map<Partition, size_t> index;
        for (size_t i = 0; i < sz; ++i)
            index.emplace(data.order[i], i);
        data.matrix.assign(sz, std::vector<long long>(sz, 0));
        for (size_t j = 0; j < sz; ++j)
            for (const auto& [lam, c] : multiplicative_to_s(data.order[j], false))
                data.matrix[index.at(lam)][j] = c;
        return data;
    });
}

SymFn omega_schur(const SymFn& f) {
    SymFn out;
    for (const auto& [part, c] : f.terms())
        out.add_term(part.conjugate(), c);
    return out;
}

// Groups Schur-basis coefficients of f by degree and solves against the
// Kostka matrix; returns coefficients on the multiplicative h basis.
std::map<Partition, Rational> schur_to_h_coeffs(const SymFn& f) {
    std::map<Partition, Rational> out;
    std::map<int, std::map<Partition, Rational>> by_degree;
    for (const auto& [part, c] : f.terms())
        by_degree[part.weight()][part] = c;
    for (const auto& [n, terms] : by_degree) {
        const auto& kd = kostka_data(n);
        size_t sz = kd.order.size();
        std::vector<Rational> c(sz, Rational(0)), d(sz, Rational(0));
        for (size_t i = 0; i < sz; ++i) {
            auto it = terms.find(kd.order[i]);
            if (it != terms.end())
                c[i] = it->second;
        }
        for (size_t jj = sz; jj-- > 0;) {
            Rational v = c[jj];
            for (size_t k = jj + 1; k < sz; ++k)
                if (kd.matrix[jj][k] != 0)
                    v -= Rational(kd.matrix[jj][k]) * d[k];
            d[jj] = v;
        }
        for (size_t j = 0; j < sz; ++j)
            if (!d[j].is_zero())
                out[kd.order[j]] = d[j];
    }
    return out;
}

std::map<Partition, Rational> m_to_schur_coeffs(const SymFn& f) {
    std::map<Partition, Rational> out;
    std::map<int, std::map<Partition, Rational>> by_degree;
    for (const auto& [part, c] : f.terms())
        by_degree[part.weight()][part] = c;
    for (const auto& [n, terms] : by_degree) {
        const auto& kd = kostka_data(n);
        size_t sz = kd.order.size();
        std::vector<Rational> c(sz, Rational(0)), d(sz, Rational(0));
        for (size_t j = 0; j < sz; ++j) {
            auto it = terms.find(kd.order[j]);
            if (it != terms.end())
                c[j] = it->second;
        }
        for (size_t j = 0; j < sz; ++j) {
            Rational v = c[j];
            for (size_t i = 0; i < j; ++i)
                if (kd.matrix[i][j] != 0)
                    v -= d[i] * Rational(kd.matrix[i][j]);
            d[j] = v;
        }
        for (size_t i = 0; i < sz; ++i)
            if (!d[i].is_zero())
                out[kd.order[i]] = d[i];
    }
    return out;
}

} // namespace

SymFn SymFn::canonical() const {
    if (basis_ == Basis::s)
        return *this;
    SymFn out;
    switch (basis_) {
    case Basis::h:
    case Basis::e:
        for (const auto& [mu, c] : terms_)
            for (const auto& [lam, k] : multiplicative_to_s(mu, basis_ == Basis::e))
                out.add_term(lam, c * Rational(k));
        break;
    case Basis::p:
        for (const auto& [rho, c] : terms_)
            for (const auto& lam : partitions_of(rho.weight())) {
                long long x = chi(lam, rho);
                if (x != 0)
                    out.add_term(lam, c * Rational(x));
            }
        break;
    case Basis::m: {
        SymFn tmp = *this;
        for (auto& [lam, c] : m_to_schur_coeffs(tmp))
            out.add_term(lam, c);
        break;
    }
    default:
        break;
    }
    return out;
}

SymFn to_basis(const SymFn& f, Basis target) {
    SymFn c = f.canonical();
    if (target == Basis::s)
        return c;
    switch (target) {
    case Basis::p: {
        SymFn out(Basis::p);
        for (const auto& [rho, v] : to_p_expansion(c))
            out.add_term(rho, v);
        return out;
    }
    case Basis::h:
        return SymFn::from_terms(Basis::h, schur_to_h_coeffs(c));
    case Basis::e:
        return SymFn::from_terms(Basis::e, schur_to_h_coeffs(omega_schur(c)));
    case Basis::m: {
        SymFn out(Basis::m);
        std::map<int, std::map<Partition, Rational>> by_degree;
        for (const auto& [part, v] : c.terms())
            by_degree[part.weight()][part] = v;
        for (const auto& [n, terms] : by_degree) {
            const auto& kd = kostka_data(n);
            size_t sz = kd.order.size();
            for (size_t j = 0; j < sz; ++j) {
                Rational v(0);
                for (size_t i = 0; i <= j; ++i) {
                    auto it = terms.find(kd.order[i]);
                    if (it != terms.end() && kd.matrix[i][j] != 0)
                        v += it->second * Rational(kd.matrix[i][j]);
                }
                out.add_term(kd.order[j], v);
            }
        }
        return out;
    }
    default:
        return c;
    }
}

// --- ring operations ------------------------------------------------------------

SymFn outer_mul(const SymFn& f, const SymFn& g) {
    SymFn a = f.canonical(), b = g.canonical();
    SymFn out;
    for (const auto& [mu, cf] : a.terms())
        for (const auto& [nu, cg] : b.terms()) {
            Rational c = cf * cg;
            for (const auto& t : lr_product_expand(mu, nu))
                out.add_term(t.part, c * Rational(t.coeff));
        }
    return out;
}

TensorFn outer_coproduct(const SymFn& f) {
    TensorFn out;
    SymFn fc = f.canonical();
    for (const auto& [lam, c] : fc.terms())
        for (const auto& mu : subpartitions(lam))
            for (const auto& t : skew_expand(lam, mu))
                out.add_term(mu, t.part, c * Rational(t.coeff));
    return out;
}

SymFn inner_mul(const SymFn& f, const SymFn& g) {
    SymFn a = f.canonical(), b = g.canonical();
    SymFn out;
    for (const auto& [mu, cf] : a.terms())
        for (const auto& [nu, cg] : b.terms()) {
            if (mu.weight() != nu.weight())
                continue;
            Rational c = cf * cg;
            for (const auto& t : kron_product_expand(mu, nu))
                out.add_term(t.part, c * Rational(t.coeff));
        }
    return out;
}

TensorFn inner_coproduct(const SymFn& f) {
    TensorFn out;
    SymFn fc = f.canonical();
    for (const auto& [lam, c] : fc.terms())
        for (const auto& mu : partitions_of(lam.weight()))
            for (const auto& t : kron_product_expand(lam, mu))
                out.add_term(mu, t.part, c * Rational(t.coeff));
    return out;
}

SymFn skew(const Partition& lambda, const Partition& mu) {
    return SymFn::from_expansion(skew_expand(lambda, mu));
}

Rational scalar_product(const SymFn& f, const SymFn& g) {
    SymFn a = f.canonical(), b = g.canonical();
    const auto& small = a.terms().size() <= b.terms().size() ? a : b;
    const auto& large = a.terms().size() <= b.terms().size() ? b : a;
    Rational out(0);
    for (const auto& [part, c] : small.terms()) {
        auto it = large.terms().find(part);
        if (it != large.terms().end())
            out += c * it->second;
    }
    return out;
}

SymFn perp(const SymFn& f, const SymFn& g) {
    SymFn a = f.canonical(), b = g.canonical();
    SymFn out;
    for (const auto& [mu, cg] : b.terms())
        for (const auto& [lam, cf] : a.terms()) {
            if (lam.weight() > mu.weight())
                continue;
            Rational c = cf * cg;
            for (const auto& t : skew_expand(mu, lam))
                out.add_term(t.part, c * Rational(t.coeff));
        }
    return out;
}

SymFn antipode(const SymFn& f) {
    SymFn out;
    SymFn fc = f.canonical();
    for (const auto& [lam, c] : fc.terms()) {
        Rational v = (lam.weight() % 2 == 0) ? c : -c;
        out.add_term(lam.conjugate(), v);
    }
    return out;
}

// --- specializations --------------------------------------------------------------

namespace {

// sum_{i=0}^{n-1} q^{ik}, exact for every q
Rational geometric_power_sum(const Rational& q, int n, int k) {
    Rational qk = q.pow(k);
    if (qk == Rational(1))
        return Rational(n);
    return (Rational(1) - qk.pow(n)) / (Rational(1) - qk);
}

Rational principal_schur(const Partition& lambda, const Rational& q, int n) {
    // hook content formula (valid whenever no hook denominator vanishes)
    bool pole = false;
    Partition conj = lambda.conjugate();
    Rational num(1), den(1);
    for (int i = 1; i <= lambda.length() && !pole; ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            int hook = lambda.part(i) + conj.part(j) - i - j + 1;
            Rational dh = Rational(1) - q.pow(hook);
            if (dh.is_zero()) {
                pole = true;
                break;
            }
            den *= dh;
            num *= Rational(1) - q.pow(n + j - i);
        }
    if (!pole)
        return q.pow(n_stat(lambda)) * num / den;

    // polynomial evaluation through the power sum expansion; no poles
    Rational out(0);
    for (const auto& rho : partitions_of(lambda.weight())) {
        long long x = chi(lambda, rho);
        if (x == 0)
            continue;
        Rational term = Rational(x) / Rational(z_stat(rho));
        for (int i = 1; i <= rho.length(); ++i)
            term *= geometric_power_sum(q, n, rho.part(i));
        out += term;
    }
    return out;
}

} // namespace

Rational specialize(const SymFn& f, const Spec& spec) {
    SymFn c = f.canonical();
    return std::visit(
        [&](const auto& s) -> Rational {
            using T = std::decay_t<decltype(s)>;
            Rational out(0);
            if constexpr (std::is_same_v<T, FundamentalSpec>) {
                for (const auto& [lam, v] : c.terms())
                    if (lam.length() <= 1)
                        out += v;
            } else if constexpr (std::is_same_v<T, TSpec>) {
                for (const auto& [lam, v] : c.terms())
                    out += v * dim_poly(lam, s.t);
            } else if constexpr (std::is_same_v<T, PrincipalSpec>) {
                if (s.n < 0)
                    throw DomainError("principal specialization requires n >= 0");
                for (const auto& [lam, v] : c.terms())
                    out += v * principal_schur(lam, s.q, s.n);
            } else {
                if (s.n < 0)
                    throw DomainError("specialization requires n >= 0");
                for (const auto& [rho, v] : to_p_expansion(c)) {
                    Rational term = v;
                    for (int i = 1; i <= rho.length(); ++i)
                        term *= s.t * geometric_power_sum(s.q, s.n, rho.part(i));
                    out += term;
                }
            }
            return out;
        },
        spec);
}

// --- power sum utilities -------------------------------------------------------------

PExp s_term_to_p(const Partition& lambda) {
    PExp out;
    for (const auto& rho : partitions_of(lambda.weight())) {
        long long x = chi(lambda, rho);
        if (x != 0)
            out.emplace(rho, Rational(x) / Rational(z_stat(rho)));
    }
    return out;
}

PExp to_p_expansion(const SymFn& f) {
    PExp out;
    SymFn fc = f.canonical();
    for (const auto& [lam, c] : fc.terms())
        for (const auto& [rho, v] : s_term_to_p(lam)) {
            auto it = out.find(rho);
            if (it == out.end()) {
                out.emplace(rho, c * v);
            } else {
                it->second += c * v;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    return out;
}

SymFn from_p_expansion(const PExp& pe) {
    SymFn out;
    for (const auto& [rho, c] : pe)
        for (const auto& lam : partitions_of(rho.weight())) {
            long long x = chi(lam, rho);
            if (x != 0)
                out.add_term(lam, c * Rational(x));
        }
    return out;
}

PExp pexp_mul(const PExp& a, const PExp& b) {
    PExp out;
    for (const auto& [ra, ca] : a)
        for (const auto& [rb, cb] : b) {
            std::vector<int> parts = ra.parts();
            parts.insert(parts.end(), rb.parts().begin(), rb.parts().end());
            Partition key = Partition::from_unsorted(std::move(parts));
            auto it = out.find(key);
            if (it == out.end()) {
                out.emplace(std::move(key), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero())
                    out.erase(it);
            }
        }
    return out;
}

PExp pexp_stretch(const PExp& a, int k) {
    if (k <= 0)
        throw DomainError("power sum stretch requires k >= 1");
    PExp out;
    for (const auto& [rho, c] : a) {
        std::vector<int> parts = rho.parts();
        for (int& part : parts)
            part *= k;
        out.emplace(Partition(std::move(parts)), c);
    }
    return out;
}

} // namespace symfun
