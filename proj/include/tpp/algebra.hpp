#pragma once

#include <vector>

#include "tpp/group.hpp"
#include "tpp/rational.hpp"
#include "tpp/triple.hpp"

namespace tpp {

// Dense row-major matrix of exact rationals.
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Rational> entries;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {
        if (r <= 0 || c <= 0) throw input_error("matrix dimensions must be positive");
    }

    Rational& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * cols + j];
    }

    static Matrix identity(int k);
    bool operator==(const Matrix& o) const = default;
};

// Reference product, exact rational arithmetic.
Matrix direct_matmul(const Matrix& a, const Matrix& b);

/**
 * Element of the rational group algebra: a coefficient for every group
 * element. Holds a non-owning pointer to its group, which must outlive it.
 */
struct AlgebraElement {
    const Group* group = nullptr;
    std::vector<Rational> coeffs;

    explicit AlgebraElement(const Group& g)
        : group(&g), coeffs(static_cast<std::size_t>(g.order())) {}

    bool operator==(const AlgebraElement& o) const {
        return group == o.group && coeffs == o.coeffs;
    }
};

// Coefficient-wise sum; both operands must live on the same group object.
AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);

// Convolution product: (x*y)[g] = sum over a*b = g of x[a] y[b].
// O(n^2) table walk in a fixed order.
AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y);

/**
 * Matrix multiplication through the group algebra. A is carried into the
 * algebra on the positions s_i^-1 t_j, B on the positions t_j^-1 u_k; one
 * convolution later the product sits on the positions s_i^-1 u_k.
 *
 * embed_left / embed_right require the corresponding index map to be
 * injective (input_error otherwise). extract reads entry (i,k) from the
 * coefficient at s_i^-1 u_k; coefficients outside that image are ignored,
 * but can be collected through `residual` to debug triples for which the
 * realization fails.
 */
AlgebraElement embed_left(const Group& g, const Matrix& a, const Subset& s, const Subset& t);
AlgebraElement embed_right(const Group& g, const Matrix& b, const Subset& t, const Subset& u);
Matrix extract(const Group& g, const AlgebraElement& c, const Subset& s, const Subset& u,
               AlgebraElement* residual = nullptr);

// Full pipeline embed -> convolve -> extract. Requires dimensions
// (m x p) * (p x q) matching the subset sizes and requires the triple to
// satisfy the triple product property, which is exactly the hypothesis
// under which the result equals direct_matmul.
Matrix multiply_via_group(const Group& g, const TppTriple& t, const Matrix& a,
                          const Matrix& b);

}  // namespace tpp
