#include "tpp/algebra.hpp"

#include "tpp/analysis.hpp"

namespace tpp {

namespace {

void require_same_group(const AlgebraElement& x, const AlgebraElement& y) {
    if (x.group != y.group)
        throw input_error("algebra elements belong to different group objects");
}

void require_injective(const Group& g, const Subset& x, const Subset& y, const char* which) {
    if (epsilon_image_size(g, x, y) != x.size() * y.size())
        throw input_error(std::string("the ") + which +
                          " index map (a,b) -> a^-1 b is not injective for these subsets");
}

}  // namespace

Matrix Matrix::identity(int k) {
    Matrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

Matrix direct_matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows)
        throw input_error("matrix dimensions do not chain: " + std::to_string(a.rows) + "x" +
                          std::to_string(a.cols) + " times " + std::to_string(b.rows) + "x" +
                          std::to_string(b.cols));
    Matrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.numerator() == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_group(x, y);
    AlgebraElement out(*x.group);
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = x.coeffs[i] + y.coeffs[i];
    return out;
}

AlgebraElement convolve(const AlgebraElement& x, const AlgebraElement& y) {
    require_same_group(x, y);
    const Group& g = *x.group;
    AlgebraElement out(g);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        if (x.coeffs[a].numerator() == 0) continue;
        for (int b = 0; b < n; ++b) {
            if (y.coeffs[b].numerator() == 0) continue;
            out.coeffs[g.mul_u(a, b)] += x.coeffs[a] * y.coeffs[b];
        }
    }
    return out;
}

AlgebraElement embed_left(const Group& g, const Matrix& a, const Subset& s, const Subset& t) {
    s.validate(g);
    t.validate(g);
    if (a.rows != s.size() || a.cols != t.size())
        throw input_error("left matrix is " + std::to_string(a.rows) + "x" +
                          std::to_string(a.cols) + " but the subsets give " +
                          std::to_string(s.size()) + "x" + std::to_string(t.size()));
    require_injective(g, s, t, "left");
    AlgebraElement out(g);
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < t.size(); ++j)
            out.coeffs[g.mul_u(g.inv_u(s.ids()[i]), t.ids()[j])] = a.at(i, j);
    return out;
}

AlgebraElement embed_right(const Group& g, const Matrix& b, const Subset& t, const Subset& u) {
    t.validate(g);
    u.validate(g);
    if (b.rows != t.size() || b.cols != u.size())
        throw input_error("right matrix is " + std::to_string(b.rows) + "x" +
                          std::to_string(b.cols) + " but the subsets give " +
                          std::to_string(t.size()) + "x" + std::to_string(u.size()));
    require_injective(g, t, u, "right");
    AlgebraElement out(g);
    for (int j = 0; j < t.size(); ++j)
        for (int k = 0; k < u.size(); ++k)
            out.coeffs[g.mul_u(g.inv_u(t.ids()[j]), u.ids()[k])] = b.at(j, k);
    return out;
}

Matrix extract(const Group& g, const AlgebraElement& c, const Subset& s, const Subset& u,
               AlgebraElement* residual) {
    s.validate(g);
    u.validate(g);
    if (c.group == nullptr || !(*c.group == g))
        throw input_error("algebra element does not live on the given group");
    if (residual) *residual = c;
    Matrix out(s.size(), u.size());
    for (int i = 0; i < s.size(); ++i)
        for (int k = 0; k < u.size(); ++k) {
            const int pos = g.mul_u(g.inv_u(s.ids()[i]), u.ids()[k]);
            out.at(i, k) = c.coeffs[pos];
            if (residual) residual->coeffs[pos] = 0;
        }
    return out;
}

Matrix multiply_via_group(const Group& g, const TppTriple& t, const Matrix& a,
                          const Matrix& b) {
    t.validate(g);
    if (a.rows != t.m() || a.cols != t.p() || b.rows != t.p() || b.cols != t.q())
        throw input_error("matrix shapes must be (m x p) and (p x q) for subset sizes m=" +
                          std::to_string(t.m()) + " p=" + std::to_string(t.p()) +
                          " q=" + std::to_string(t.q()));
    if (!check_tpp_quotient(g, t))
        throw input_error(
            "the subset triple does not satisfy the triple product property, so the "
            "group-algebra route is not guaranteed to reproduce the matrix product");
    return extract(g, convolve(embed_left(g, a, t.S, t.T), embed_right(g, b, t.T, t.U)), t.S,
                   t.U);
}

}  // namespace tpp
