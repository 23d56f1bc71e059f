#include "melon/bigint.hpp"

#include "melon/errors.hpp"

namespace melon {

Int binomial(long n, long k) {
    if (n < 0)
        throw DomainError("binomial: n must be non-negative");
    if (k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    if (n < 0)
        throw DomainError("factorial: n must be non-negative");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BinomialRow::BinomialRow(long n) : n_(n), zero_(0) {
    if (n < 0)
        throw DomainError("BinomialRow: n must be non-negative");
    row_.resize(static_cast<size_t>(n) + 1);
    row_[0] = 1;
    for (long k = 0; k < n; ++k) {
        // C(n,k+1) = C(n,k) (n-k)/(k+1)
        row_[k + 1] = row_[k] * (n - k);
        mpz_divexact_ui(row_[k + 1].get_mpz_t(), row_[k + 1].get_mpz_t(),
                        static_cast<unsigned long>(k + 1));
    }
}

const Int& BinomialRow::operator()(long k) const {
    if (k < 0 || k > n_)
        return zero_;
    return row_[static_cast<size_t>(k)];
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    return c.get_str();
}

double to_double(const Int& v) { return v.get_d(); }

double to_double(const Rat& v) { return v.get_d(); }

} // namespace melon
