#include "g2h/berger.hpp"

#include <stdexcept>

#include "g2h/catalog.hpp"

namespace g2h {

size_t pair_index(size_t i, size_t j) {
    if (i >= j || j > 6) throw std::invalid_argument("pair_index: need 0 <= i < j <= 6");
    // lexicographic position of (i, j) among the 21 pairs
    return i * 7 - i * (i + 1) / 2 + (j - i - 1);
}

CurvatureFamily curvature_space(const LieMatrixAlgebra& h) {
    const size_t n = 7, d = h.dim();
    auto basis = h.basis_matrices();
    CurvatureFamily out;
    out.h_dim = d;
    if (d == 0) return out;

    // unknowns: coordinates of R_pq in the h-basis, pairs in lexicographic order
    Matrix sys(35 * n, 21 * d);
    size_t row = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                // R_ij b_k + R_jk b_i - R_ik b_j = 0, one row per component l
                for (size_t l = 0; l < n; ++l, ++row) {
                    for (size_t m = 0; m < d; ++m) {
                        sys(row, pair_index(i, j) * d + m) += basis[m](l, k);
                        sys(row, pair_index(j, k) * d + m) += basis[m](l, i);
                        sys(row, pair_index(i, k) * d + m) -= basis[m](l, j);
                    }
                }
            }
    out.kernel_basis = kernel(sys).basis();
    return out;
}

Matrix curvature_value(const LieMatrixAlgebra& h, const Vec& kernel_element, size_t i,
                       size_t j) {
    auto basis = h.basis_matrices();
    const size_t d = h.dim();
    Matrix r(7, 7);
    if (i == j) return r;
    Scalar sign(1);
    if (i > j) {
        std::swap(i, j);
        sign = Scalar(-1);
    }
    for (size_t m = 0; m < d; ++m)
        r = r + (sign * kernel_element[pair_index(i, j) * d + m]) * basis[m];
    return r;
}

Subspace derived_span(const LieMatrixAlgebra& h, const CurvatureFamily& k) {
    std::vector<Vec> vals;
    for (const auto& ke : k.kernel_basis)
        for (size_t i = 0; i < 7; ++i)
            for (size_t j = i + 1; j < 7; ++j) vals.push_back(curvature_value(h, ke, i, j).flatten());
    return Subspace::span(49, vals);
}

bool is_berger(const LieMatrixAlgebra& h) {
    return derived_span(h, curvature_space(h)) == h.span;
}

// --------------------------------------------------------------------------
// reference parametrisations of K(h^I) and K(h^II)

namespace {

struct PairTable {
    // 21 matrices indexed by pair_index, display indices are 1-based
    std::array<Matrix, 21> r;
    PairTable() { r.fill(Matrix(7, 7)); }
    void set(size_t i, size_t j, const Matrix& m) { r[pair_index(i - 1, j - 1)] = m; }
    const Matrix& get(size_t i, size_t j) const { return r[pair_index(i - 1, j - 1)]; }
};

Matrix m22(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

// parameter order: a1 a2 a3 r1 r2 r3 x1 x2 x3 x4 b1..b4 c1..c4 u1..u4 j1..j4 v1 v2 t
const std::vector<std::string> kNamesI = {"a1", "a2", "a3", "r1", "r2", "r3", "x1", "x2",
                                          "x3", "x4", "b1", "b2", "b3", "b4", "c1", "c2",
                                          "c3", "c4", "u1", "u2", "u3", "u4", "j1", "j2",
                                          "j3", "j4", "v1", "v2", "t"};

PairTable table1_family(const std::map<std::string, Scalar>& p) {
    auto g = [&](const char* k) { return p.at(k); };
    Scalar z(0);
    auto h = [&](const Matrix& A, const Scalar& v, Scalar u1, Scalar u2, Scalar y1, Scalar y2) {
        return h_type1(TypeIElement(A, v, {u1, u2}, {y1, y2}));
    };
    PairTable t;
    Scalar sq = Scalar::sqrt2();
    t.set(1, 5, h(Matrix(2, 2), z, z, z, g("b1") + g("b4"), g("c1") + g("c4")));
    Matrix T25 = h(m22(g("x2"), -g("x1"), g("x3"), -g("x2")), g("c1") - g("b3"), g("r2"),
                   g("r3"), g("u2"), g("u4"));  // this is -R25 = R47 / sqrt2
    t.set(2, 5, -T25);
    t.set(4, 7, sq * T25);
    t.set(2, 6, h(m22(-g("a1"), -g("a2"), -g("a3"), g("a1")), -g("r2"), g("x1"), g("x2"),
                  g("b1"), g("c1")));
    t.set(2, 7, h(m22(-g("a3"), g("a1"), g("j1"), g("a3")), -g("r3"), g("x2"), g("x3"),
                  g("b3"), g("c3")));
    Matrix R35 = h(m22(g("x1"), g("x4"), g("x2"), -g("x1")), g("b4") - g("c2"), g("r1"),
                   g("r2"), g("u1"), g("u3"));
    t.set(3, 5, R35);
    t.set(4, 6, sq * R35);
    t.set(3, 6, h(m22(-g("a2"), g("j2"), g("a1"), g("a2")), g("r1"), g("x4"), -g("x1"),
                  g("b2"), g("c2")));
    Matrix U67 = h(m22(-g("r2"), g("r1"), -g("r3"), g("r2")), g("u2") - g("u3"),
                   g("b4") - g("c2"), g("c1") - g("b3"), g("v1"), g("v2"));  // -R67
    t.set(6, 7, -U67);
    t.set(4, 5, sq * U67);
    t.set(5, 6, h(m22(g("b1"), g("b2"), g("b3"), g("b4")), g("v1"), g("u1"), g("u2"),
                  g("j3"), g("t")));
    t.set(5, 7, h(m22(g("c1"), g("c2"), g("c3"), g("c4")), g("v2"), g("u3"), g("u4"),
                  g("t"), g("j4")));
    t.set(3, 7, t.get(1, 5) - t.get(2, 6));
    return t;
}

const std::vector<std::string> kNamesII = {"x1", "x2", "x3", "x4", "x5", "y1", "y2",
                                           "y3", "y4", "y5", "r1", "r2", "r3", "r4",
                                           "t",  "t1", "t2", "t3", "t4", "t5", "t6",
                                           "s1", "s2", "j1", "j2"};

PairTable table2_family(const std::map<std::string, Scalar>& p) {
    auto g = [&](const char* k) { return p.at(k); };
    auto h = [&](const Matrix& A, Scalar z1, Scalar z2, Scalar z3, Scalar z4, const Scalar& c) {
        return h_type2(TypeIIElement(A, {z1, z2, z3, z4}, c));
    };
    PairTable t;
    Matrix A0(2, 2);
    Scalar sq = Scalar::sqrt2();
    t.set(1, 6, h(A0, g("x4"), g("x3"), g("x2"), g("x1"), g("t1") + g("t")));
    Matrix R17 = h(A0, g("x5"), g("x4"), g("x3"), g("x2"), g("t4") - g("t5"));
    t.set(1, 7, R17);
    t.set(3, 4, sq * R17);
    Matrix R26 = h(A0, g("y4"), g("y3"), g("y2"), g("y1"), g("t2") - g("t3"));
    t.set(2, 6, R26);
    t.set(4, 5, Scalar(-1) * sq * R26);
    t.set(2, 7, h(A0, g("y5"), g("y4"), g("y3"), g("y2"), g("t6") + g("t")));
    t.set(5, 6, h(m22(g("x1"), g("y1"), g("x2"), g("y2")), g("t6"), g("t2"), g("s2"),
                  g("j2"), g("r1")));
    Matrix R57 = h(m22(g("x2"), g("y2"), g("x3"), g("y3")), g("t5"), g("t1"), g("t3"),
                   g("s2"), g("r2"));
    t.set(5, 7, R57);
    t.set(4, 6, sq * R57);
    Matrix R36 = h(m22(g("x3"), g("y3"), g("x4"), g("y4")), g("s1"), g("t4"), g("t1"),
                   g("t2"), g("r3"));
    t.set(3, 6, R36);
    t.set(4, 7, sq * R36);
    t.set(3, 7, h(m22(g("x4"), g("y4"), g("x5"), g("y5")), g("j1"), g("s1"), g("t5"),
                  g("t6"), g("r4")));
    t.set(6, 7, h(m22(g("t1") + g("t"), g("t2") - g("t3"), g("t4") - g("t5"),
                      g("t6") + g("t")),
                  g("r4"), g("r3"), g("r2"), g("r1"), Scalar(0)));
    t.set(3, 5, t.get(1, 6) - t.get(2, 7));
    return t;
}

}  // namespace

std::vector<std::string> table_relations_check(int which) {
    std::vector<std::string> failures;
    const auto& names = which == 1 ? kNamesI : kNamesII;
    Subspace hspan = which == 1 ? hI_span() : hII_span();
    LieMatrixAlgebra h{7, hspan, true};
    const size_t d = h.dim();

    CurvatureFamily K = curvature_space(h);
    Subspace ksp = Subspace::span(21 * d, K.kernel_basis);

    std::vector<Vec> param_vecs;
    for (const auto& active : names) {
        std::map<std::string, Scalar> p;
        for (const auto& n : names) p[n] = Scalar(n == active ? 1 : 0);
        PairTable t = which == 1 ? table1_family(p) : table2_family(p);
        Vec coords(21 * d, Scalar(0));
        bool member = true;
        for (size_t i = 0; i < 7 && member; ++i)
            for (size_t j = i + 1; j < 7 && member; ++j) {
                auto c = hspan.coordinates(t.r[pair_index(i, j)].flatten());
                if (!c) {
                    failures.push_back("parameter " + active + ": R(" + std::to_string(i + 1) +
                                       "," + std::to_string(j + 1) + ") is not in the family");
                    member = false;
                    break;
                }
                for (size_t m = 0; m < d; ++m) coords[pair_index(i, j) * d + m] = (*c)[m];
            }
        if (!member) continue;
        if (!ksp.contains(coords))
            failures.push_back("parameter " + active + ": tensor violates the Bianchi identity");
        param_vecs.push_back(coords);
    }

    Subspace pspan = Subspace::span(21 * d, param_vecs);
    if (which == 2) {
        // The reference 25-parameter table misses one direction: the c-entry
        // of R(b6,b7) is unconstrained by the Bianchi system (it annihilates
        // b_1..b_5 and never meets the reference subsystems).  The true kernel
        // is the table span plus exactly this line.
        Vec extra(21 * d, Scalar(0));
        auto c = hspan.coordinates(h_type2(TypeIIElement(Matrix(2, 2), {}, Scalar(1))).flatten());
        for (size_t m = 0; m < d; ++m) extra[pair_index(5, 6) * d + m] = (*c)[m];
        if (!ksp.contains(extra))
            failures.push_back("expected extra direction R(6,7) = h(0,0,1) is not a curvature tensor");
        std::vector<Vec> aug = param_vecs;
        aug.push_back(extra);
        if (!(Subspace::span(21 * d, aug) == ksp) || pspan.dim() + 1 != ksp.dim())
            failures.push_back("curvature space is not the tabulated family plus the single c-direction in R(6,7)");
    } else if (!(pspan == ksp)) {
        failures.push_back("parametrised family (dim " + std::to_string(pspan.dim()) +
                           ") differs from the full curvature space (dim " +
                           std::to_string(ksp.dim()) + ")");
    }
    return failures;
}

}  // namespace g2h
