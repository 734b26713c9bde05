#include "specbounds/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace specbounds {

namespace {

using RatPoly = std::vector<BigRat>;  // ascending coefficients, trimmed

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    trim(d);
    return d;
}

BigRat eval(const RatPoly& p, const BigRat& x) {
    BigRat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// polynomial remainder of a by b (b nonzero)
RatPoly remainder(RatPoly a, const RatPoly& b) {
    trim(a);
    while (degree(a) >= degree(b) && !a.empty()) {
        BigRat factor = a.back() / b.back();
        int shift = degree(a) - degree(b);
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
    trim(a);
    RatPoly q(std::max(0, degree(a) - degree(b) + 1));
    while (degree(a) >= degree(b) && !a.empty()) {
        BigRat factor = a.back() / b.back();
        int shift = degree(a) - degree(b);
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return q;
}

RatPoly monic(RatPoly p) {
    trim(p);
    if (p.empty()) return p;
    BigRat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

RatPoly subtract(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), BigRat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

// Yun's squarefree decomposition: p = prod factors[i].first ^ factors[i].second
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly dp = derivative(p);
    RatPoly g = gcd(p, dp);
    if (degree(g) == 0) {
        out.emplace_back(monic(p), 1);
        return out;
    }
    RatPoly b = quotient(p, g);
    RatPoly d = subtract(quotient(dp, g), derivative(b));
    for (int i = 1; degree(b) > 0; ++i) {
        RatPoly a = gcd(b, d);
        if (degree(a) > 0) out.emplace_back(a, i);
        b = quotient(b, a);
        d = subtract(quotient(d, a), derivative(b));
    }
    return out;
}

// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, derivative(p)};
    while (degree(chain.back()) > 0) {
        RatPoly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_changes(const std::vector<RatPoly>& chain, const BigRat& x) {
    int changes = 0, prev = 0;
    for (const auto& poly : chain) {
        BigRat v = eval(poly, x);
        int s = v < 0 ? -1 : (v == 0 ? 0 : 1);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

// Isolate and refine the real roots of a squarefree polynomial whose roots
// all lie strictly inside (-bound, bound) and which has no integer roots
// (those are deflated beforehand, so dyadic bisection points are never
// roots).
void bisect_roots(const RatPoly& p, long bound, std::vector<double>& out) {
    if (degree(p) <= 0) return;
    auto chain = sturm_chain(p);
    auto count = [&](const BigRat& lo, const BigRat& hi) {
        return sign_changes(chain, lo) - sign_changes(chain, hi);
    };
    const BigRat eps(1, BigInt(10000000000000LL));  // 1e-13
    struct Interval {
        BigRat lo, hi;
        int roots;
    };
    std::vector<Interval> stack{{BigRat(-bound), BigRat(bound), count(BigRat(-bound), BigRat(bound))}};
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.roots == 0) continue;
        if (iv.roots == 1 && iv.hi - iv.lo < eps) {
            out.push_back(to_double((iv.lo + iv.hi) / 2));
            continue;
        }
        BigRat mid = (iv.lo + iv.hi) / 2;
        int left = count(iv.lo, mid);
        if (left > 0) stack.push_back({iv.lo, mid, left});
        if (iv.roots - left > 0) stack.push_back({mid, iv.hi, iv.roots - left});
    }
}

}  // namespace

IntPolynomial characteristic_polynomial(const std::vector<std::vector<long>>& m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("characteristic_polynomial: matrix not square");
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = m[i][j];

    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1),
    // M_{k} = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    std::vector<BigInt> coeffs(n + 1);
    coeffs[n] = 1;
    std::vector<BigInt> mk = a;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            std::vector<BigInt> shifted = mk;
            for (int i = 0; i < n; ++i) shifted[i * n + i] += coeffs[n - k + 1];
            std::vector<BigInt> next(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    if (a[i * n + l] == 0) continue;
                    for (int j = 0; j < n; ++j) next[i * n + j] += a[i * n + l] * shifted[l * n + j];
                }
            mk = std::move(next);
        }
        BigInt trace = 0;
        for (int i = 0; i < n; ++i) trace += mk[i * n + i];
        coeffs[n - k] = -trace / k;  // exact by Newton's identities
    }
    return {coeffs};
}

std::vector<std::pair<double, int>> real_roots(const IntPolynomial& p, long root_bound) {
    if (p.coeffs.empty() || p.coeffs.back() == 0)
        throw std::invalid_argument("real_roots: zero or untrimmed polynomial");
    RatPoly rp(p.coeffs.begin(), p.coeffs.end());

    std::vector<std::pair<double, int>> roots;
    for (auto& [factor, multiplicity] : squarefree_decomposition(rp)) {
        // integer roots first, so bisection points below are never roots
        RatPoly f = factor;
        for (long z = -root_bound; z <= root_bound; ++z) {
            if (degree(f) <= 0) break;
            if (eval(f, BigRat(z)) == 0) {
                roots.emplace_back(static_cast<double>(z), multiplicity);
                f = quotient(f, RatPoly{BigRat(-z), BigRat(1)});
            }
        }
        std::vector<double> found;
        bisect_roots(f, root_bound + 1, found);
        for (double r : found) roots.emplace_back(r, multiplicity);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace specbounds
