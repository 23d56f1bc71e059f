#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace melon {

using Int = mpz_class;
using Rat = mpq_class;

// C(n, k); zero for k < 0 or k > n.
Int binomial(long n, long k);

Int factorial(long n);

// Row C(n, 0..n), built incrementally. Shared by the counting routines so a
// row is computed once per n.
class BinomialRow {
  public:
    explicit BinomialRow(long n);
    long n() const { return n_; }
    const Int& operator()(long k) const;

  private:
    long n_;
    std::vector<Int> row_;
    Int zero_;
};

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

double to_double(const Int& v);
double to_double(const Rat& v);

} // namespace melon
