#include "symfun/character.hpp"

#include <algorithm>

#include "symfun/memo.hpp"

namespace symfun {

namespace {

// Beta-numbers {lambda_i + (m - i)} for m = length(lambda): removing a
// border strip of size r is replacing some b by b - r, with sign given by
// the number of beta entries jumped over.
Partition from_betas(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    int m = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int i = 0; i < m; ++i) {
        int p = betas[static_cast<size_t>(i)] - (m - 1 - i);
        if (p > 0)
            parts.push_back(p);
    }
    return Partition(std::move(parts));
}

long long chi_rec(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() == 0)
        return 1;
    return memo().characters.get_or_compute({lambda, rho}, [&]() -> long long {
        int r = rho.part(1);
        std::vector<int> rest_parts(rho.parts().begin() + 1, rho.parts().end());
        Partition rest(std::move(rest_parts));

        int m = lambda.length();
        std::vector<int> betas;
        betas.reserve(static_cast<size_t>(m));
        for (int i = 1; i <= m; ++i)
            betas.push_back(lambda.part(i) + (m - i));

        long long total = 0;
        for (size_t i = 0; i < betas.size(); ++i) {
            int b = betas[i] - r;
            if (b < 0 || std::find(betas.begin(), betas.end(), b) != betas.end())
                continue;
            int jumped = 0;
            for (int other : betas)
                if (other > b && other < betas[i])
                    ++jumped;
            std::vector<int> nb = betas;
            nb[i] = b;
            long long sign = (jumped % 2 == 0) ? 1 : -1;
            total += sign * chi_rec(from_betas(std::move(nb)), rest);
        }
        return total;
    });
}

} // namespace

long long chi(const Partition& lambda, const Partition& rho) {
    if (lambda.weight() != rho.weight())
        throw DomainError("chi requires |lambda| = |rho|, got " + lambda.to_string() +
                          " and " + rho.to_string());
    return chi_rec(lambda, rho);
}

bool check_orthogonality(int n) {
    if (n < 0)
        throw DomainError("check_orthogonality requires n >= 0");
    auto parts = partitions_of(n);
    std::vector<Rational> zinv;
    zinv.reserve(parts.size());
    for (const auto& rho : parts)
        zinv.push_back(Rational(1) / Rational(z_stat(rho)));

    for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = a; b < parts.size(); ++b) {
            Rational row(0);
            for (size_t r = 0; r < parts.size(); ++r)
                row += zinv[r] * Rational(chi(parts[a], parts[r])) *
                       Rational(chi(parts[b], parts[r]));
            if (row != Rational(a == b ? 1 : 0))
                return false;

            Rational col(0);
            for (size_t l = 0; l < parts.size(); ++l)
                col += Rational(chi(parts[l], parts[a])) * Rational(chi(parts[l], parts[b]));
            Rational want = (a == b) ? Rational(z_stat(parts[a])) : Rational(0);
            if (col != want)
                return false;
        }
    return true;
}

} // namespace symfun
