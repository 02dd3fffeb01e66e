#include "ginertia/inertia.hpp"

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ginertia/rational.hpp"

namespace ginertia {

std::string Inertia::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Inertia& in) {
    return os << "(" << in.p << ", " << in.n_neg << ", " << in.eta << ")";
}

namespace {

struct Overflow {};

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// int64 fraction with checked construction; any overflow aborts the fast
// tier and the reduction reruns on arbitrary-precision rationals.
struct Frac64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Frac64 make(i128 n, i128 d) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) return {};
        i128 g = gcd128(n, d);
        n /= g;
        d /= g;
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw Overflow{};
        return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
    }
    static Frac64 from_int(int v) { return {v, 1}; }
    bool is_zero() const { return num == 0; }
    int sign() const { return (num > 0) - (num < 0); }

    Frac64 operator-(const Frac64& o) const {
        return make(i128(num) * o.den - i128(o.num) * den, i128(den) * o.den);
    }
    Frac64 operator+(const Frac64& o) const {
        return make(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den);
    }
    Frac64 operator*(const Frac64& o) const { return make(i128(num) * o.num, i128(den) * o.den); }
    Frac64 operator/(const Frac64& o) const {
        return make(i128(num) * o.den, i128(den) * o.num);
    }
    // |a| < |b|
    static bool abs_less(const Frac64& a, const Frac64& b) {
        i128 lhs = i128(a.num < 0 ? -a.num : a.num) * b.den;
        i128 rhs = i128(b.num < 0 ? -b.num : b.num) * a.den;
        return lhs < rhs;
    }
};

struct FracBig {
    Rational v;

    static FracBig from_int(int x) { return {Rational(x)}; }
    bool is_zero() const { return v == 0; }
    int sign() const { return v.sign(); }
    FracBig operator-(const FracBig& o) const { return {v - o.v}; }
    FracBig operator+(const FracBig& o) const { return {v + o.v}; }
    FracBig operator*(const FracBig& o) const { return {v * o.v}; }
    FracBig operator/(const FracBig& o) const { return {v / o.v}; }
    static bool abs_less(const FracBig& a, const FracBig& b) { return abs(a.v) < abs(b.v); }
};

template <class F>
Inertia reduce(const Graph& g) {
    const int n = g.order();
    std::vector<F> m(static_cast<std::size_t>(n) * n);
    auto at = [&](int i, int j) -> F& { return m[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j) = F::from_int(g.has_edge(i, j) ? 1 : 0);

    std::vector<int> active;
    active.reserve(n);
    for (int i = 0; i < n; ++i) active.push_back(i);

    Inertia in;
    std::vector<F> row(n), row2(n);
    while (!active.empty()) {
        int piv = -1;
        for (int i : active)
            if (!at(i, i).is_zero() && (piv < 0 || F::abs_less(at(piv, piv), at(i, i))))
                piv = i;
        if (piv >= 0) {
            const F d = at(piv, piv);
            (d.sign() > 0 ? in.p : in.n_neg)++;
            for (int i : active) row[i] = at(piv, i);
            for (int i : active) {
                if (i == piv || row[i].is_zero()) continue;
                const F f = row[i] / d;
                for (int j : active) {
                    if (j == piv || row[j].is_zero()) continue;
                    at(i, j) = at(i, j) - f * row[j];
                }
            }
            std::erase(active, piv);
            continue;
        }
        // active diagonal all zero: first nonzero off-diagonal, else done
        int bi = -1, bj = -1;
        for (std::size_t a = 0; a < active.size() && bi < 0; ++a)
            for (std::size_t b = a + 1; b < active.size(); ++b)
                if (!at(active[a], active[b]).is_zero()) {
                    bi = active[a];
                    bj = active[b];
                    break;
                }
        if (bi < 0) {
            in.eta += static_cast<int>(active.size());
            break;
        }
        // [[0,a],[a,0]] block: one +1 and one -1; eliminate both rows/cols
        const F a = at(bi, bj);
        ++in.p;
        ++in.n_neg;
        for (int l : active) {
            row[l] = at(bi, l);
            row2[l] = at(bj, l);
        }
        for (int l : active) {
            if (l == bi || l == bj) continue;
            for (int j : active) {
                if (j == bi || j == bj) continue;
                const F num = row2[l] * row[j] + row[l] * row2[j];
                if (num.is_zero()) continue;
                at(l, j) = at(l, j) - num / a;
            }
        }
        std::erase(active, bi);
        std::erase(active, bj);
    }
    return in;
}

}  // namespace

Inertia inertia_exact(const Graph& g) {
    try {
        return reduce<Frac64>(g);
    } catch (const Overflow&) {
        return reduce<FracBig>(g);
    }
}

Inertia multipartite_inertia(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("multipartite_inertia: no parts");
    int n = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("multipartite_inertia: part must be positive");
        n += p;
    }
    const int l = static_cast<int>(parts.size());
    if (l == 1) return {0, 0, n};
    return {1, l - 1, n - l};
}

}  // namespace ginertia
