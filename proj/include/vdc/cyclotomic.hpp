#pragma once

#include <complex>
#include <gmpxx.h>
#include <vector>

#include "vdc/arith.hpp"

// Exact elements of cyclotomic fields, stored as rational coordinate vectors
// over the basis 1, z, ..., z^{m-1} with z = e(1/m).  Values are not unique in
// this basis; equality and zero tests reduce modulo the m-th cyclotomic
// polynomial, which is computed exactly and cached.

namespace vdc {

class Cyclotomic {
  public:
    Cyclotomic() : order_(1), c_(1, 0) {}
    explicit Cyclotomic(const mpq_class &r) : order_(1), c_(1, r) {}

    static Cyclotomic root_of_unity(i64 order, i64 k, const mpq_class &scale = 1);

    i64 order() const { return order_; }

    Cyclotomic &operator+=(const Cyclotomic &o);
    Cyclotomic &operator-=(const Cyclotomic &o);
    Cyclotomic operator*(const Cyclotomic &o) const;
    Cyclotomic operator*(const mpq_class &s) const;
    Cyclotomic operator-() const;
    Cyclotomic conj() const;

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }

    bool is_zero() const;
    bool operator==(const Cyclotomic &o) const;

    // Exact rational part; throws unless the value is rational.
    mpq_class to_rational() const;
    bool is_rational() const;

    std::complex<double> to_complex() const;

    // Reduce modulo the cyclotomic polynomial; coordinates above phi(m) vanish.
    void canonicalize();

  private:
    Cyclotomic lifted(i64 order) const;

    i64 order_;
    std::vector<mpq_class> c_;
};

// Integer coefficients of the m-th cyclotomic polynomial (cached).
const std::vector<mpz_class> &cyclotomic_polynomial(i64 m);

} // namespace vdc
