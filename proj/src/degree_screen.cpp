#include "torsion/degree_screen.hpp"

#include "torsion/errors.hpp"
#include "torsion/factor_q.hpp"

#include <algorithm>
#include <thread>

namespace torsion {

bool DegreeScreenCertificate::is_feasible(int d) const {
    return std::binary_search(feasible_degrees.begin(), feasible_degrees.end(), d);
}

DegreeScreenCertificate degree_screen(const UniPolyQ& f, const DegreeScreenOptions& opts) {
    if (f.degree() < 1) throw MathError("degree_screen: constant polynomial");
    Rational content;
    ZPoly prim;
    f.to_primitive(content, prim);
    if (!is_squarefree_q(prim)) throw NotSquarefree();
    const int n = zpoly::degree(prim);

    DegreeScreenCertificate cert;
    cert.degree = n;
    std::vector<fp::Vec> images;
    auto consider = [&](std::uint64_t p) {
        fp::Vec m;
        if (!detail::good_prime(prim, p, m)) return;
        cert.primes_used.push_back(p);
        images.push_back(std::move(m));
    };
    if (!opts.primes.empty()) {
        for (auto p : opts.primes) {
            if (cert.primes_used.size() >= opts.prime_budget) break;
            if (p >= 2 && p < (1ull << 32) && fp::is_prime(p)) consider(p);
        }
    } else {
        for (std::uint64_t p = 2; cert.primes_used.size() < opts.prime_budget; ++p)
            if (fp::is_prime(p)) consider(p);
    }

    cert.per_prime_degrees.resize(images.size());
    auto work = [&](std::size_t i) { cert.per_prime_degrees[i] = fp::factor_degrees(images[i], cert.primes_used[i]); };
    const unsigned threads = std::min<std::size_t>(std::max(1u, opts.threads), images.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < images.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < images.size(); i += threads) work(i);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<char> feasible(n + 1, 1);
    for (const auto& degs : cert.per_prime_degrees) {
        auto sums = detail::subset_sums(degs, n);
        for (int v = 0; v <= n; ++v) feasible[v] = feasible[v] && sums[v];
    }
    for (int v = 0; v <= n; ++v)
        if (feasible[v]) cert.feasible_degrees.push_back(v);
    cert.certified_min = n;
    for (int v = 1; v <= n; ++v)
        if (feasible[v]) {
            cert.certified_min = v;
            break;
        }
    return cert;
}

}  // namespace torsion
