#include "melon/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "melon/errors.hpp"
#include "melon/parallel.hpp"

namespace melon {

namespace {

void check_spec(const WatermelonSpec& spec) {
    if (spec.p < 1)
        throw DomainError("WatermelonSpec: p must be >= 1");
    if (spec.n < 0)
        throw DomainError("WatermelonSpec: n must be >= 0");
}

// Entry of the height-bounded LGV determinant: the reflection-principle sum
// over m(h+1) shifts. All |m|(h+1) <= 2n+2p are included; binomials outside
// [0,2n] vanish anyway.
Int bounded_entry(const WatermelonSpec& spec, long h, int i, int j, const BinomialRow& row) {
    const long n = spec.n;
    Int sum = 0;
    const long period = h + 1;
    for (long m = 0; m * period <= 2 * n + 2 * spec.p; ++m) {
        bool hit = false;
        for (long mm : {m, -m}) {
            if (m == 0 && mm < 0)
                continue;
            const long shift = mm * period;
            const Int& b1 = row(n + shift + i - j);
            const Int& b2 = row(n + shift - 1 - i - j);
            if (b1 != 0 || b2 != 0) {
                sum += b1;
                sum -= b2;
                hit = true;
            }
        }
        if (m > 0 && !hit)
            break;
    }
    return sum;
}

} // namespace

Int ballot_count(long a, long b, long len) {
    if (a < 0 || b < 0 || len < 0)
        throw DomainError("ballot_count: arguments must be non-negative");
    if ((a + b + len) % 2 != 0)
        return 0;
    return binomial(len, (len + b - a) / 2) - binomial(len, (len + a + b) / 2 + 1);
}

Int ballot_count(long a, long b, long len, const BinomialRow& row) {
    if ((a + b + len) % 2 != 0)
        return 0;
    return row((len + b - a) / 2) - row((len + a + b) / 2 + 1);
}

Int count_total(const WatermelonSpec& spec) {
    check_spec(spec);
    const int p = spec.p;
    const long n = spec.n;
    BinomialRow row(2 * n);
    std::vector<std::vector<Int>> m(p, std::vector<Int>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            m[i][j] = row(n + i - j) - row(n - 1 - i - j);
    return det_exact_int(std::move(m));
}

Int count_total_closed(const WatermelonSpec& spec) {
    check_spec(spec);
    Int num = 1, den = 1;
    for (int j = 0; j < spec.p; ++j) {
        num *= binomial(2 * spec.n + 2 * j, spec.n);
        den *= binomial(spec.n + 2 * j + 1, spec.n);
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::logic_error("count_total_closed: product did not reduce to an integer");
    return q;
}

Int count_bounded(const WatermelonSpec& spec, long h) {
    check_spec(spec);
    if (h < 0)
        throw DomainError("count_bounded: h must be >= 0");
    if (h < 2 * spec.p)
        return 0;
    if (h >= spec.n + 2 * spec.p - 1)
        return count_total(spec);
    BinomialRow row(2 * spec.n);
    const int p = spec.p;
    std::vector<std::vector<Int>> m(p, std::vector<Int>(p));
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            m[i][j] = bounded_entry(spec, h, i, j, row);
    return det_exact_int(std::move(m));
}

HeightDistribution height_pmf(const WatermelonSpec& spec) {
    check_spec(spec);
    HeightDistribution dist;
    dist.spec = spec;
    if (spec.n == 0) {
        dist.counts[2 * spec.p - 2] = 1;
        dist.total = 1;
        return dist;
    }
    const long h_lo = 2 * spec.p - 1;
    const long h_hi = spec.n + 2 * spec.p - 2;
    BinomialRow row(2 * spec.n);

    // cumulative[k] = M_{2n, h_lo + k}; counts are first differences
    const std::size_t levels = static_cast<std::size_t>(h_hi - h_lo + 2);
    std::vector<Int> cumulative(levels);
    const int p = spec.p;
    parallel_for(levels, [&](std::size_t k) {
        const long h = h_lo + static_cast<long>(k);
        if (h >= spec.n + 2 * spec.p - 1) {
            std::vector<std::vector<Int>> m(p, std::vector<Int>(p));
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    m[i][j] = row(spec.n + i - j) - row(spec.n - 1 - i - j);
            cumulative[k] = det_exact_int(std::move(m));
            return;
        }
        std::vector<std::vector<Int>> m(p, std::vector<Int>(p));
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j)
                m[i][j] = bounded_entry(spec, h, i, j, row);
        cumulative[k] = det_exact_int(std::move(m));
    });

    for (long h = h_lo; h <= h_hi; ++h) {
        Int c = cumulative[static_cast<std::size_t>(h - h_lo + 1)] -
                cumulative[static_cast<std::size_t>(h - h_lo)];
        if (c != 0)
            dist.counts[h] = std::move(c);
    }
    dist.total = cumulative.back();
    return dist;
}

Rat exact_moment(const WatermelonSpec& spec, int s) {
    check_spec(spec);
    if (s < 1)
        throw DomainError("exact_moment: s must be >= 1");
    if (spec.n == 0) {
        Int h(2 * spec.p - 2), hs;
        mpz_pow_ui(hs.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned>(s));
        return Rat(hs);
    }
    const Int total = count_total(spec);
    BinomialRow row(2 * spec.n);
    const long h_hi = spec.n + 2 * spec.p - 2;
    const int p = spec.p;

    std::vector<Int> partial(static_cast<std::size_t>(h_hi), 0);
    parallel_for(partial.size(), [&](std::size_t idx) {
        const long h = static_cast<long>(idx) + 1;
        Int bounded;
        if (h < 2 * spec.p) {
            bounded = 0;
        } else {
            std::vector<std::vector<Int>> m(p, std::vector<Int>(p));
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j)
                    m[i][j] = bounded_entry(spec, h, i, j, row);
            bounded = det_exact_int(std::move(m));
        }
        Int hp, hm;
        Int hh(h), h1(h - 1);
        mpz_pow_ui(hp.get_mpz_t(), hh.get_mpz_t(), static_cast<unsigned>(s));
        mpz_pow_ui(hm.get_mpz_t(), h1.get_mpz_t(), static_cast<unsigned>(s));
        partial[idx] = (hp - hm) * (total - bounded);
    });
    Int num = 0;
    for (const Int& t : partial)
        num += t;
    Rat r(num, total);
    r.canonicalize();
    return r;
}

Int det_exact_int(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n)
            throw DomainError("det_exact: matrix must be square");
    if (n == 0)
        return 1;
    // fraction-free Bareiss; every division below is exact
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0)
                ++piv;
            if (piv == n)
                return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Int d = a[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

Rat det_exact(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n)
            throw DomainError("det_exact: matrix must be square");
    if (n == 0)
        return Rat(1);
    // clear denominators per row, run integer Bareiss, divide the scales out
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int lcm = 1;
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j].canonicalize();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m[i][j].get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            Int t = m[i][j].get_num() * (lcm / m[i][j].get_den());
            a[i][j] = std::move(t);
        }
        scale *= lcm;
    }
    Rat d(det_exact_int(std::move(a)), scale);
    d.canonicalize();
    return d;
}

bool is_valid(const PathFamily& fam) {
    const int p = fam.spec.p;
    const long n = fam.spec.n;
    if (p < 1 || n < 0)
        return false;
    if (fam.steps.size() != static_cast<std::size_t>(p))
        return false;
    for (const auto& s : fam.steps)
        if (s.size() != static_cast<std::size_t>(2 * n))
            return false;
    std::vector<long> pos(p);
    for (int i = 0; i < p; ++i)
        pos[i] = 2 * i;
    for (long tau = 0; tau < 2 * n; ++tau) {
        for (int i = 0; i < p; ++i) {
            const int s = fam.steps[static_cast<std::size_t>(i)][static_cast<std::size_t>(tau)];
            if (s != 1 && s != -1)
                return false;
            pos[i] += s;
        }
        if (pos[0] < 0)
            return false;
        for (int i = 0; i + 1 < p; ++i)
            if (pos[i] >= pos[i + 1])
                return false;
    }
    for (int i = 0; i < p; ++i)
        if (pos[i] != 2 * i)
            return false;
    return true;
}

long compute_height(const PathFamily& fam) {
    if (!is_valid(fam))
        throw DomainError("compute_height: invalid PathFamily");
    const int p = fam.spec.p;
    long pos = 2 * (p - 1);
    long best = pos;
    for (std::int8_t s : fam.steps[static_cast<std::size_t>(p - 1)]) {
        pos += s;
        best = std::max(best, pos);
    }
    return best;
}

namespace {

struct Enumerator {
    WatermelonSpec spec;
    std::vector<long> pos;
    std::vector<std::vector<std::int8_t>> steps;
    std::vector<PathFamily>* out;
    long long budget;

    void run(long tau) {
        if (--budget < 0)
            throw ResourceLimitError("enumerate_all: search budget exceeded");
        const int p = spec.p;
        if (tau == 2 * spec.n) {
            for (int i = 0; i < p; ++i)
                if (pos[static_cast<std::size_t>(i)] != 2 * i)
                    return;
            out->push_back(PathFamily{spec, steps});
            return;
        }
        const long remaining = 2 * spec.n - tau;
        // masks ascending = lexicographic moves, down (-1) before up (+1),
        // branch 0 most significant
        for (unsigned mask = 0; mask < (1u << p); ++mask) {
            bool ok = true;
            long prev = -2;
            for (int i = 0; i < p && ok; ++i) {
                const int s = (mask >> (p - 1 - i)) & 1u ? 1 : -1;
                const long next = pos[static_cast<std::size_t>(i)] + s;
                if (next < 0 || next <= prev)
                    ok = false;
                else if (std::labs(next - 2 * i) > remaining - 1)
                    ok = false; // cannot return to its endpoint in time
                prev = next;
            }
            if (!ok)
                continue;
            for (int i = 0; i < p; ++i) {
                const int s = (mask >> (p - 1 - i)) & 1u ? 1 : -1;
                pos[static_cast<std::size_t>(i)] += s;
                steps[static_cast<std::size_t>(i)].push_back(static_cast<std::int8_t>(s));
            }
            run(tau + 1);
            for (int i = 0; i < p; ++i) {
                const int s = (mask >> (p - 1 - i)) & 1u ? 1 : -1;
                pos[static_cast<std::size_t>(i)] -= s;
                steps[static_cast<std::size_t>(i)].pop_back();
            }
        }
    }
};

} // namespace

std::vector<PathFamily> enumerate_all(const WatermelonSpec& spec) {
    check_spec(spec);
    std::vector<PathFamily> out;
    Enumerator e;
    e.spec = spec;
    e.pos.resize(static_cast<std::size_t>(spec.p));
    for (int i = 0; i < spec.p; ++i)
        e.pos[static_cast<std::size_t>(i)] = 2 * i;
    e.steps.resize(static_cast<std::size_t>(spec.p));
    e.out = &out;
    e.budget = 200'000'000;
    e.run(0);
    return out;
}

} // namespace melon
