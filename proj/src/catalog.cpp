#include "g2h/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2h {

namespace {

Scalar r2() { return Scalar::sqrt2(); }

std::array<Scalar, 2> apply2(const Matrix& m, const std::array<Scalar, 2>& v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}
std::array<Scalar, 2> add2(const std::array<Scalar, 2>& a, const std::array<Scalar, 2>& b) {
    return {a[0] + b[0], a[1] + b[1]};
}
std::array<Scalar, 2> scale2(const Scalar& c, const std::array<Scalar, 2>& a) {
    return {c * a[0], c * a[1]};
}
std::array<Scalar, 4> apply4(const Matrix& m, const std::array<Scalar, 4>& v) {
    std::array<Scalar, 4> r{};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) r[i] += m(i, j) * v[j];
    return r;
}

Scalar det2(const Matrix& g) { return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0); }

}  // namespace

// --------------------------------------------------------------------------
// Type I

Matrix h_type1(const TypeIElement& e) {
    const Matrix& A = e.A;
    const Scalar &v = e.v, &u1 = e.u[0], &u2 = e.u[1], &y1 = e.y[0], &y2 = e.y[1];
    Scalar tr = A.trace();
    Matrix m(7, 7);
    // first row block
    m(0, 0) = tr;
    m(0, 1) = -u2;
    m(0, 2) = u1;
    m(0, 3) = r2() * v;
    m(0, 5) = -y1;
    m(0, 6) = -y2;
    // rows acting on the socle complement
    m(1, 1) = A(0, 0);
    m(1, 2) = A(0, 1);
    m(1, 3) = r2() * u1;
    m(1, 4) = y1;
    m(1, 6) = v;
    m(2, 1) = A(1, 0);
    m(2, 2) = A(1, 1);
    m(2, 3) = r2() * u2;
    m(2, 4) = y2;
    m(2, 5) = -v;
    // middle row
    m(3, 4) = r2() * v;
    m(3, 5) = r2() * u1;
    m(3, 6) = r2() * u2;
    // dual block
    m(4, 4) = -tr;
    m(5, 4) = u2;
    m(5, 5) = -A(0, 0);
    m(5, 6) = -A(1, 0);
    m(6, 4) = -u1;
    m(6, 5) = -A(0, 1);
    m(6, 6) = -A(1, 1);
    return m;
}

std::optional<TypeIElement> decompose_type1(const Matrix& m) {
    if (m.rows() != 7 || m.cols() != 7) return std::nullopt;
    TypeIElement e;
    e.A(0, 0) = m(1, 1);
    e.A(0, 1) = m(1, 2);
    e.A(1, 0) = m(2, 1);
    e.A(1, 1) = m(2, 2);
    e.v = m(1, 6);
    e.u = {m(0, 2), -m(0, 1)};
    e.y = {m(1, 4), m(2, 4)};
    if (h_type1(e) == m) return e;
    return std::nullopt;
}

// --------------------------------------------------------------------------
// Type II

Matrix sigma_of_z(const std::array<Scalar, 4>& z) {
    Matrix m(2, 3);
    m(0, 0) = z[1];
    m(0, 1) = r2() * z[2];
    m(0, 2) = z[3];
    m(1, 0) = z[0];
    m(1, 1) = r2() * z[1];
    m(1, 2) = z[2];
    return m;
}

Matrix sigma_star_of_z(const std::array<Scalar, 4>& z) {
    Matrix m(3, 2);
    m(0, 0) = -z[3];
    m(0, 1) = -z[2];
    m(1, 0) = r2() * z[2];
    m(1, 1) = r2() * z[1];
    m(2, 0) = -z[1];
    m(2, 1) = -z[0];
    return m;
}

Matrix rho_of_A(const Matrix& a) {
    Matrix m(3, 3);
    m(0, 0) = a(0, 0) - a(1, 1);
    m(0, 1) = -r2() * a(0, 1);
    m(1, 0) = -r2() * a(1, 0);
    m(1, 2) = -r2() * a(0, 1);
    m(2, 1) = -r2() * a(1, 0);
    m(2, 2) = a(1, 1) - a(0, 0);
    return m;
}

Matrix h_type2(const TypeIIElement& e) {
    Matrix m(7, 7);
    Matrix sig = sigma_of_z(e.z), sigs = sigma_star_of_z(e.z), rho = rho_of_A(e.A);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) m(i, j) = e.A(i, j);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j) m(i, 2 + j) = sig(i, j);
    m(0, 6) = -e.c;
    m(1, 5) = e.c;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) m(2 + i, 2 + j) = rho(i, j);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 2; ++j) m(2 + i, 5 + j) = sigs(i, j);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) m(5 + i, 5 + j) = -e.A(j, i);
    return m;
}

std::optional<TypeIIElement> decompose_type2(const Matrix& m) {
    if (m.rows() != 7 || m.cols() != 7) return std::nullopt;
    TypeIIElement e;
    e.A(0, 0) = m(0, 0);
    e.A(0, 1) = m(0, 1);
    e.A(1, 0) = m(1, 0);
    e.A(1, 1) = m(1, 1);
    e.z = {m(1, 2), m(0, 2), m(1, 4), m(0, 4)};
    e.c = m(1, 5);
    if (h_type2(e) == m) return e;
    return std::nullopt;
}

Scalar theta_form(const std::array<Scalar, 2>& u, const std::array<Scalar, 2>& ubar) {
    return u[0] * ubar[1] - u[1] * ubar[0];
}

Scalar eta_form(const std::array<Scalar, 4>& z, const std::array<Scalar, 4>& zhat) {
    return -(z[0] * zhat[3]) + z[3] * zhat[0] + 3 * (z[1] * zhat[2]) - 3 * (z[2] * zhat[1]);
}

// --------------------------------------------------------------------------
// gl(2) subalgebras

Matrix mat2(long a, long b, long c, long d) {
    Matrix m(2, 2);
    m(0, 0) = Scalar(a);
    m(0, 1) = Scalar(b);
    m(1, 0) = Scalar(c);
    m(1, 1) = Scalar(d);
    return m;
}

Matrix mat_C(const Scalar& a) {
    Matrix m = mat2(0, -1, 1, 0);
    m(0, 0) = a;
    m(1, 1) = a;
    return m;
}
Matrix mat_S() { return mat2(1, 1, 0, 1); }
Matrix mat_N() { return mat2(0, 1, 0, 0); }
Matrix mat_diag(const Scalar& a, const Scalar& d) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = d;
    return m;
}

LieMatrixAlgebra gl2_subalgebra(const std::string& name,
                                const std::map<std::string, Scalar>& params) {
    auto need = [&](const char* key) -> const Scalar& {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("gl2_subalgebra '" + name + "' needs parameter '" +
                                        key + "'");
        return it->second;
    };
    std::vector<Matrix> gens;
    if (name == "0") {
        // empty generator set
    } else if (name == "sl2") {
        gens = {mat2(1, 0, 0, -1), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)};
    } else if (name == "gl2") {
        gens = {mat2(1, 0, 0, 0), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(0, 0, 0, 1)};
    } else if (name == "u1") {
        gens = {Matrix::identity(2), mat2(0, -1, 1, 0)};
    } else if (name == "d") {
        gens = {mat2(1, 0, 0, 0), mat2(0, 0, 0, 1)};
    } else if (name == "b2") {
        gens = {mat2(1, 0, 0, 0), mat2(0, 0, 0, 1), mat_N()};
    } else if (name == "b2hat") {
        gens = {Matrix::identity(2), mat_N()};
    } else if (name == "Ca") {
        gens = {mat_C(need("a"))};
    } else if (name == "S") {
        gens = {mat_S()};
    } else if (name == "N") {
        gens = {mat_N()};
    } else if (name == "diag1mu") {
        gens = {mat_diag(Scalar(1), need("mu"))};
    } else if (name == "s_lambda") {
        const Scalar& l = need("lambda");
        gens = {mat_diag(l, l - Scalar(1)), mat_N()};
    } else {
        throw std::invalid_argument("unknown gl(2) subalgebra '" + name + "'");
    }
    return LieMatrixAlgebra::from_matrices(2, gens);
}

// --------------------------------------------------------------------------
// distinguished subspaces (flattened 7x7)

namespace {

Matrix hI(const Matrix& A, const Scalar& v, std::array<Scalar, 2> u, std::array<Scalar, 2> y) {
    return h_type1(TypeIElement(A, v, u, y));
}
Matrix hII(const Matrix& A, std::array<Scalar, 4> z, const Scalar& c) {
    return h_type2(TypeIIElement(A, z, c));
}

std::vector<Matrix> m_gens(int i, int j, int k) {
    std::vector<Matrix> g;
    Matrix z2(2, 2);
    if (i == 1) g.push_back(hI(z2, Scalar(1), {}, {}));
    if (j == 1) g.push_back(hI(z2, Scalar(0), {Scalar(1), Scalar(0)}, {}));
    if (k >= 1) g.push_back(hI(z2, Scalar(0), {}, {Scalar(1), Scalar(0)}));
    if (k == 2) g.push_back(hI(z2, Scalar(0), {}, {Scalar(0), Scalar(1)}));
    return g;
}

// all of m = {h(0,v,u,y)}; note m(1,1,2) only contains the u_1 direction
std::vector<Matrix> m_full_gens() {
    auto g = m_gens(1, 1, 2);
    g.push_back(hI(Matrix(2, 2), Scalar(0), {Scalar(0), Scalar(1)}, {}));
    return g;
}

std::vector<Matrix> gl2_basis_I() {
    std::vector<Matrix> g;
    for (auto& a : {mat2(1, 0, 0, 0), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(0, 0, 0, 1)})
        g.push_back(hI(a, Scalar(0), {}, {}));
    return g;
}

std::vector<Matrix> n_gens(const std::set<int>& z_indices) {
    std::vector<Matrix> g;
    Matrix z2(2, 2);
    for (int i : z_indices) {
        if (i < 1 || i > 4) throw std::invalid_argument("n_subspace: index out of range");
        std::array<Scalar, 4> z{};
        z[i - 1] = Scalar(1);
        g.push_back(hII(z2, z, Scalar(0)));
    }
    g.push_back(hII(z2, {}, Scalar(1)));
    return g;
}

std::vector<Vec> flatten_all(const std::vector<Matrix>& ms) {
    std::vector<Vec> out;
    out.reserve(ms.size());
    for (const auto& m : ms) out.push_back(m.flatten());
    return out;
}

}  // namespace

Subspace m_subspace(int i, int j, int k) { return Subspace::span(49, flatten_all(m_gens(i, j, k))); }
Subspace m_full() { return Subspace::span(49, flatten_all(m_full_gens())); }

Subspace hI_span() {
    auto g = gl2_basis_I();
    for (auto& m : m_full_gens()) g.push_back(m);
    return Subspace::span(49, flatten_all(g));
}

Subspace hs_span() {
    auto g = gl2_basis_I();
    Matrix z2(2, 2);
    g.push_back(hI(z2, Scalar(1), {}, {}));
    g.push_back(hI(z2, Scalar(0), {}, {Scalar(1), Scalar(0)}));
    g.push_back(hI(z2, Scalar(0), {}, {Scalar(0), Scalar(1)}));
    return Subspace::span(49, flatten_all(g));
}

Subspace n_subspace(const std::set<int>& z_indices) {
    return Subspace::span(49, flatten_all(n_gens(z_indices)));
}
Subspace n_full() { return n_subspace({1, 2, 3, 4}); }

Subspace hII_span() {
    std::vector<Matrix> g;
    for (auto& a : {mat2(1, 0, 0, 0), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(0, 0, 0, 1)})
        g.push_back(hII(a, {}, Scalar(0)));
    for (auto& m : n_gens({1, 2, 3, 4})) g.push_back(m);
    return Subspace::span(49, flatten_all(g));
}

// --------------------------------------------------------------------------
// conjugation formulas

TypeIElement ad_exp_v(const Scalar& vbar, const TypeIElement& x) {
    TypeIElement r = x;
    r.v = x.v - x.A.trace() * vbar;
    r.y = add2(x.y, scale2(-3 * vbar, x.u));
    return r;
}

TypeIElement ad_exp_u(const std::array<Scalar, 2>& ubar, const TypeIElement& x) {
    std::array<Scalar, 2> Aubar = apply2(x.A, ubar);
    Scalar th = theta_form(x.u, ubar);
    Scalar thA = theta_form(ubar, Aubar);
    TypeIElement r = x;
    r.v = x.v - 2 * th - thA;
    r.u = add2(x.u, scale2(Scalar(-1), Aubar));
    r.y = add2(x.y, scale2(3 * x.v - 3 * th - thA, ubar));
    return r;
}

TypeIElement ad_exp_y(const std::array<Scalar, 2>& ybar, const TypeIElement& x) {
    TypeIElement r = x;
    std::array<Scalar, 2> ay = apply2(x.A, ybar);
    r.y = add2(x.y, scale2(Scalar(-1), add2(ay, scale2(x.A.trace(), ybar))));
    return r;
}

TypeIElement ad_gl2_type1(const Matrix& g, const TypeIElement& x) {
    Scalar d = det2(g);
    if (d.is_zero()) throw std::invalid_argument("ad_gl2_type1: singular matrix");
    TypeIElement r;
    r.A = g * x.A * inverse(g);
    r.v = d * x.v;
    r.u = apply2(g, x.u);
    r.y = apply2(g, scale2(d, x.y));
    return r;
}

TypeIIElement ad_exp_z(const std::array<Scalar, 4>& zbar, const TypeIIElement& x) {
    std::array<Scalar, 4> Az = gl2_on_R4(x.A, zbar);
    TypeIIElement r = x;
    for (size_t i = 0; i < 4; ++i) r.z[i] = x.z[i] - Az[i];
    r.c = x.c - eta_form(x.z, zbar) - Scalar(1, 2) * eta_form(zbar, Az);
    return r;
}

Matrix embed_gl2_type1(const Matrix& g) {
    Scalar d = det2(g);
    if (d.is_zero()) throw std::invalid_argument("embed_gl2_type1: singular matrix");
    Matrix gi = inverse(g);
    Matrix m(7, 7);
    m(0, 0) = d;
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) m(1 + i, 1 + j) = g(i, j);
    m(3, 3) = Scalar(1);
    m(4, 4) = d.inverse();
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) m(5 + i, 5 + j) = gi(j, i);
    return m;
}

Matrix embed_diag1m1_type2() {
    Matrix m(7, 7);
    long d[7] = {1, -1, -1, 1, -1, 1, -1};
    for (size_t i = 0; i < 7; ++i) m(i, i) = Scalar(d[i]);
    return m;
}

Matrix exp_nilpotent(const Matrix& m) {
    size_t n = m.rows();
    Matrix sum = Matrix::identity(n);
    Matrix power = m;
    Rational fact = 1;
    for (size_t k = 1; k <= n + 1; ++k) {
        if (power.is_zero()) return sum;
        fact *= (long)k;
        sum = sum + Scalar(Rational(1) / fact) * power;
        power = power * m;
    }
    throw std::invalid_argument("exp_nilpotent: matrix is not nilpotent");
}

// --------------------------------------------------------------------------
// the gl(2) representation on R^4 and exterior powers

Matrix gl2_on_R4_matrix(const Matrix& a) {
    // A = alpha I + beta H + a2 X + a3 Y with H = diag(1,-1)
    Scalar alpha = Scalar(1, 2) * (a(0, 0) + a(1, 1));
    Scalar beta = Scalar(1, 2) * (a(0, 0) - a(1, 1));
    Matrix m(4, 4);
    long hw[4] = {-3, -1, 1, 3};
    for (size_t i = 0; i < 4; ++i) m(i, i) = alpha + Scalar(hw[i]) * beta;
    // X . z = (0, z1, 2 z2, 3 z3), Y . z = (3 z2, 2 z3, z4, 0)
    m(1, 0) += a(0, 1);
    m(2, 1) += 2 * a(0, 1);
    m(3, 2) += 3 * a(0, 1);
    m(0, 1) += 3 * a(1, 0);
    m(1, 2) += 2 * a(1, 0);
    m(2, 3) += a(1, 0);
    return m;
}

std::array<Scalar, 4> gl2_on_R4(const Matrix& a, const std::array<Scalar, 4>& z) {
    return apply4(gl2_on_R4_matrix(a), z);
}

Matrix group_diag_on_R4(const Scalar& a, const Scalar& d) {
    if (a.is_zero() || d.is_zero())
        throw std::invalid_argument("group_diag_on_R4: singular matrix");
    Matrix m(4, 4);
    m(0, 0) = d * d / a;
    m(1, 1) = d;
    m(2, 2) = a;
    m(3, 3) = a * a / d;
    return m;
}

Matrix group_shear_upper_on_R4(const Scalar& t) {
    return exp_nilpotent(t * gl2_on_R4_matrix(mat_N()));
}
Matrix group_shear_lower_on_R4(const Scalar& t) {
    return exp_nilpotent(t * gl2_on_R4_matrix(mat2(0, 0, 1, 0)));
}

namespace {

const std::array<std::pair<size_t, size_t>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
const std::array<std::array<size_t, 3>, 4> kTriples = {
    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

Vec wedge2_coords(const Vec& a, const Vec& b) {
    Vec out(6);
    for (size_t p = 0; p < 6; ++p) {
        auto [k, l] = kPairs[p];
        out[p] = a[k] * b[l] - a[l] * b[k];
    }
    return out;
}

Vec wedge3_coords(const Vec& a, const Vec& b, const Vec& c) {
    Vec out(4);
    for (size_t p = 0; p < 4; ++p) {
        auto [k, l, m] = kTriples[p];
        out[p] = a[k] * (b[l] * c[m] - b[m] * c[l]) - a[l] * (b[k] * c[m] - b[m] * c[k]) +
                 a[m] * (b[k] * c[l] - b[l] * c[k]);
    }
    return out;
}

}  // namespace

Matrix induced_lambda2(const Matrix& m4, bool group_level) {
    Matrix out(6, 6);
    for (size_t p = 0; p < 6; ++p) {
        auto [i, j] = kPairs[p];
        Vec ei = basis_vec(4, i), ej = basis_vec(4, j);
        Vec col;
        if (group_level) {
            col = wedge2_coords(m4.apply(ei), m4.apply(ej));
        } else {
            col = vec_add(wedge2_coords(m4.apply(ei), ej), wedge2_coords(ei, m4.apply(ej)));
        }
        for (size_t q = 0; q < 6; ++q) out(q, p) = col[q];
    }
    return out;
}

Matrix induced_lambda3(const Matrix& m4, bool group_level) {
    Matrix out(4, 4);
    for (size_t p = 0; p < 4; ++p) {
        auto [i, j, k] = kTriples[p];
        Vec ei = basis_vec(4, i), ej = basis_vec(4, j), ek = basis_vec(4, k);
        Vec col;
        if (group_level) {
            col = wedge3_coords(m4.apply(ei), m4.apply(ej), m4.apply(ek));
        } else {
            col = vec_add(wedge3_coords(m4.apply(ei), ej, ek),
                          vec_add(wedge3_coords(ei, m4.apply(ej), ek),
                                  wedge3_coords(ei, ej, m4.apply(ek))));
        }
        for (size_t q = 0; q < 4; ++q) out(q, p) = col[q];
    }
    return out;
}

// --------------------------------------------------------------------------
// binary forms

Poly poly_group_action(const Matrix& g, const Poly& p) {
    size_t d = p.size() - 1;
    // x^k y^(d-k) |-> (g11 x + g21 y)^k (g12 x + g22 y)^(d-k)
    Poly out(d + 1);
    for (size_t k = 0; k <= d; ++k) {
        if (p[k].is_zero()) continue;
        // expand the two binomial powers and convolve
        Poly f1(k + 1), f2(d - k + 1);
        Scalar binom(1);
        for (size_t i = 0; i <= k; ++i) {  // coefficient of x^i y^(k-i)
            f1[i] = binom;
            binom = binom * Scalar((long)(k - i)) / Scalar((long)(i + 1));
        }
        for (size_t i = 0; i <= k; ++i) {
            Scalar pw(1);
            for (size_t t = 0; t < i; ++t) pw = pw * g(0, 0);
            for (size_t t = 0; t < k - i; ++t) pw = pw * g(1, 0);
            f1[i] = f1[i] * pw;
        }
        binom = Scalar(1);
        for (size_t i = 0; i <= d - k; ++i) {
            f2[i] = binom;
            binom = binom * Scalar((long)(d - k - i)) / Scalar((long)(i + 1));
        }
        for (size_t i = 0; i <= d - k; ++i) {
            Scalar pw(1);
            for (size_t t = 0; t < i; ++t) pw = pw * g(0, 1);
            for (size_t t = 0; t < d - k - i; ++t) pw = pw * g(1, 1);
            f2[i] = f2[i] * pw;
        }
        for (size_t i = 0; i <= k; ++i)
            for (size_t j = 0; j <= d - k; ++j) out[i + j] += p[k] * f1[i] * f2[j];
    }
    return out;
}

Poly poly_algebra_action(const Matrix& a, const Poly& p) {
    size_t d = p.size() - 1;
    Poly out(d + 1);
    for (size_t k = 0; k <= d; ++k) {
        if (p[k].is_zero()) continue;
        // (a1 x + a3 y) d/dx + (a2 x + a4 y) d/dy on x^k y^(d-k)
        Scalar kk((long)k), dk((long)(d - k));
        out[k] += p[k] * (kk * a(0, 0) + dk * a(1, 1));
        if (k >= 1) out[k - 1] += p[k] * kk * a(1, 0);
        if (k + 1 <= d) out[k + 1] += p[k] * dk * a(0, 1);
    }
    return out;
}

Poly phi1(const std::array<Scalar, 4>& z) {
    return {z[0], 3 * z[1], 3 * z[2], z[3]};
}

std::array<Scalar, 4> phi1_inverse(const Poly& p) {
    if (p.size() != 4) throw std::invalid_argument("phi1_inverse: degree must be 3");
    return {p[0], Scalar(1, 3) * p[1], Scalar(1, 3) * p[2], p[3]};
}

Vec lambda2_to_w_basis(const Vec& s) {
    // standard order e12,e13,e14,e23,e24,e34; w0 = e23 - 3 e14, w' = e23 + 3 e14
    Scalar t0 = Scalar(1, 2) * (s[3] - Scalar(1, 3) * s[2]);
    Scalar tp = Scalar(1, 2) * (s[3] + Scalar(1, 3) * s[2]);
    return {t0, s[0], s[1], tp, s[4], s[5]};
}

Vec w_basis_to_lambda2(const Vec& w) {
    // e14 = 3(t' - t0)... careful: t0 w0 + t' w' = (t0 + t') e23 + 3(t' - t0) e14
    return {w[1], w[2], 3 * (w[3] - w[0]), w[0] + w[3], w[4], w[5]};
}

Poly phi2(const Vec& w) {
    if (!w[0].is_zero()) throw std::invalid_argument("phi2: w0 component must vanish");
    return {w[1], 2 * w[2], 6 * w[3], 2 * w[4], w[5]};
}

Poly phi3(const Vec& c) { return {c[0], c[1], c[2], c[3]}; }

Matrix lambda1_twist(const Matrix& g) { return det2(g) * g; }

std::optional<Matrix> lambda2_twist(const Matrix& g) {
    Scalar d = det2(g);
    int s = d.sign();
    if (s == 0) return std::nullopt;
    Scalar ad = s > 0 ? d : -d;
    auto root = ad.sqrt_in_field();
    if (!root) return std::nullopt;
    return (Scalar(s) * *root) * g;
}

bool plucker_decomposable(const Vec& w) {
    Scalar lhs = w[1] * w[5] - w[2] * w[4];
    Scalar rhs = 3 * (w[0] * w[0] - w[3] * w[3]);
    return lhs == rhs;
}

ScalarSet cross_ratio_set(const std::array<ProjPoint, 4>& roots) {
    auto d = [&](int p, int q) {
        return roots[p].num * roots[q].den - roots[q].num * roots[p].den;
    };
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q)
            if (d(p, q).is_zero())
                throw std::invalid_argument("cross_ratio_set: points must be distinct");
    ScalarSet out;
    int idx[4] = {0, 1, 2, 3};
    std::sort(idx, idx + 4);
    do {
        int i = idx[0], j = idx[1], k = idx[2], l = idx[3];
        out.insert((d(i, k) * d(j, l)) / (d(j, k) * d(i, l)));
    } while (std::next_permutation(idx, idx + 4));
    return out;
}

// --------------------------------------------------------------------------
// theorem catalogs

namespace {

std::string pstr(const Scalar& s) {
    std::string t = s.str();
    std::erase(t, ' ');
    return t;
}

struct CatalogBuilder {
    std::vector<CatalogEntry> entries;

    void add(const std::string& id, const std::string& conv, int type,
             const std::vector<Matrix>& gens, std::map<std::string, Scalar> params = {}) {
        CatalogEntry e;
        e.id = id;
        e.convention = conv;
        e.declared_type = type;
        e.algebra = LieMatrixAlgebra::from_matrices(7, gens);
        e.parameters = std::move(params);
        entries.push_back(std::move(e));
    }

    // Type I / III: gl(2)-part generators embedded via h(A,0,0,0) plus extras.
    void add_I(const std::string& id, int type, const LieMatrixAlgebra& a_part,
               const std::vector<Matrix>& rest, std::map<std::string, Scalar> params = {}) {
        std::vector<Matrix> gens;
        for (const auto& a : a_part.basis_matrices()) gens.push_back(hI(a, Scalar(0), {}, {}));
        for (const auto& m : rest) gens.push_back(m);
        add(id, "C1", type, gens, std::move(params));
    }

    void add_II(const std::string& id, const LieMatrixAlgebra& a_part,
                const std::vector<Matrix>& rest, std::map<std::string, Scalar> params = {}) {
        std::vector<Matrix> gens;
        for (const auto& a : a_part.basis_matrices()) gens.push_back(hII(a, {}, Scalar(0)));
        for (const auto& m : rest) gens.push_back(m);
        add(id, "C2", 2, gens, std::move(params));
    }
};

std::vector<Scalar> grid_with_extra(std::vector<Scalar> base,
                                    const std::map<std::string, Scalar>& extra,
                                    const std::string& key) {
    auto it = extra.find(key);
    if (it != extra.end() &&
        std::find(base.begin(), base.end(), it->second) == base.end())
        base.push_back(it->second);
    return base;
}

// span generators for the Type II subspaces {h(0,z,c) | z in Z, c free}
std::vector<Matrix> z_span_gens(const std::vector<std::array<Scalar, 4>>& zs) {
    std::vector<Matrix> g;
    Matrix z2(2, 2);
    for (const auto& z : zs) g.push_back(hII(z2, z, Scalar(0)));
    g.push_back(hII(z2, {}, Scalar(1)));
    return g;
}

std::vector<CatalogEntry> entries_T1(const std::map<std::string, Scalar>& extra) {
    CatalogBuilder b;
    auto m_all = m_full_gens();

    // (1) a in {0, sl2, gl2, u1, b2, b2hat, d, R.C_a, R.S}, h = a |x m
    for (const char* name : {"0", "sl2", "gl2", "u1", "b2", "b2hat", "d", "S"})
        b.add_I(std::string("T1.1-") + name, 1, gl2_subalgebra(name), m_all);
    for (const Scalar& a : grid_with_extra({Scalar(0), Scalar(1)}, extra, "a"))
        b.add_I("T1.1-Ca(a=" + pstr(a) + ")", 1, gl2_subalgebra("Ca", {{"a", a}}), m_all,
                {{"a", a}});

    // (2) a = s_lambda
    for (const Scalar& l :
         grid_with_extra({Scalar(0), Scalar(1, 2), Scalar(1), Scalar(2)}, extra, "lambda"))
        b.add_I("T1.2a(lambda=" + pstr(l) + ")", 1, gl2_subalgebra("s_lambda", {{"lambda", l}}),
                m_all, {{"lambda", l}});
    {
        // (2b) lambda = 1: R.h(X,0,(0,1),0) |x (R.N |x m(1,1,2))
        Matrix X = mat_diag(Scalar(1), Scalar(0));
        std::vector<Matrix> gens = {hI(X, Scalar(0), {Scalar(0), Scalar(1)}, {}),
                                    hI(mat_N(), Scalar(0), {}, {})};
        for (const auto& m : m_all) gens.push_back(m);
        b.add("T1.2b", "C1", 1, gens, {{"lambda", Scalar(1)}});
    }
    // (2c) lambda = 2: Span{X, h(N,0,(0,1),0)} |x m(i,j,2). The combination
    // (i,j) = (0,1) is omitted: the bracket of h(0,0,(1,0),0) with the u-part
    // of h(N,0,(0,1),0) produces h(0,-2,0,0), which needs i = 1.
    Matrix X2 = mat_diag(Scalar(2), Scalar(1));
    for (auto [i, j] : {std::pair{0, 0}, {1, 0}, {1, 1}}) {
        std::vector<Matrix> gens = {hI(X2, Scalar(0), {}, {}),
                                    hI(mat_N(), Scalar(0), {Scalar(0), Scalar(1)}, {})};
        for (const auto& m : m_gens(i, j, 2)) gens.push_back(m);
        b.add("T1.2c(i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")", "C1", 1, gens,
              {{"lambda", Scalar(2)}});
    }

    // (3) a = R.diag(1, mu)
    for (const Scalar& mu :
         grid_with_extra({Scalar(-1), Scalar(0), Scalar(1, 2), Scalar(1)}, extra, "mu"))
        b.add_I("T1.3a(mu=" + pstr(mu) + ")", 1, gl2_subalgebra("diag1mu", {{"mu", mu}}), m_all,
                {{"mu", mu}});
    {
        std::vector<Matrix> gens = {
            hI(mat_diag(Scalar(1), Scalar(0)), Scalar(0), {Scalar(0), Scalar(1)}, {})};
        for (const auto& m : m_all) gens.push_back(m);
        b.add("T1.3b", "C1", 1, gens, {{"mu", Scalar(0)}});
    }

    // (4) a = R.N
    b.add_I("T1.4a", 1, gl2_subalgebra("N"), m_all);
    for (int j : {0, 1}) {
        std::vector<Matrix> gens = {hI(mat_N(), Scalar(0), {Scalar(0), Scalar(1)}, {})};
        for (const auto& m : m_gens(1, j, 2)) gens.push_back(m);
        b.add("T1.4b(j=" + std::to_string(j) + ")", "C1", 1, gens);
    }
    return b.entries;
}

std::vector<CatalogEntry> entries_T3(const std::map<std::string, Scalar>& extra) {
    (void)extra;
    CatalogBuilder b;
    auto m102 = m_gens(1, 0, 2);
    for (const char* name : {"sl2", "gl2", "u1", "d"})
        b.add_I(std::string("T3.1-") + name, 3, gl2_subalgebra(name), m102);
    for (int k : {1, 2}) {
        b.add_I("T3.2-0(k=" + std::to_string(k) + ")", 3, gl2_subalgebra("0"), m_gens(1, 0, k));
        std::vector<Matrix> gens = {hI(mat_diag(Scalar(1), Scalar(0)), Scalar(0), {}, {})};
        for (const auto& m : m_gens(1, 0, k)) gens.push_back(m);
        b.add("T3.2-diag10(k=" + std::to_string(k) + ")", "C1", 3, gens);
    }
    return b.entries;
}

std::string nset_str(const std::set<int>& s) {
    std::string out = "n(";
    bool first = true;
    for (int i : s) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    return out + ")";
}

std::vector<CatalogEntry> entries_T2(const std::map<std::string, Scalar>& extra) {
    CatalogBuilder b;
    auto n_all = n_gens({1, 2, 3, 4});

    // (1)
    for (const char* name : {"sl2", "gl2"})
        b.add_II(std::string("T2.1-") + name, gl2_subalgebra(name), n_all);

    // (2): a in {u(1), R.C_a}; h = a |x n or a |x {h(0,(3r,s,r,3s),c)}
    std::vector<Matrix> z2span = z_span_gens(
        {{Scalar(3), Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0), Scalar(3)}});
    b.add_II("T2.2-u1-n", gl2_subalgebra("u1"), n_all);
    b.add_II("T2.2-u1-Z2", gl2_subalgebra("u1"), z2span);
    for (const Scalar& a : grid_with_extra({Scalar(0), Scalar(1)}, extra, "a")) {
        auto alg = gl2_subalgebra("Ca", {{"a", a}});
        b.add_II("T2.2-Ca(a=" + pstr(a) + ")-n", alg, n_all, {{"a", a}});
        b.add_II("T2.2-Ca(a=" + pstr(a) + ")-Z2", alg, z2span, {{"a", a}});
    }

    // (3): a = d
    for (const auto& s : std::vector<std::set<int>>{
             {1, 2, 3, 4}, {1, 3}, {2, 3}, {1, 2, 3}, {1, 2, 4}}) {
        std::string tag = s.size() == 4 ? "n" : nset_str(s);
        b.add_II("T2.3-" + tag, gl2_subalgebra("d"), n_gens(s));
    }

    // (4): a = R.diag(1, mu), mu in [-1, 1)
    std::vector<std::set<int>> n4a = {{1, 2, 3, 4}, {2, 3}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    for (const Scalar& mu : grid_with_extra({Scalar(-1), Scalar(-1, 2), Scalar(0), Scalar(1, 2)},
                                            extra, "mu")) {
        if (mu.sign() < 0 && (mu + Scalar(1)).sign() < 0) continue;  // below -1
        if ((mu - Scalar(1)).sign() >= 0) continue;                  // mu must be < 1
        auto alg = gl2_subalgebra("diag1mu", {{"mu", mu}});
        for (const auto& s : n4a) {
            std::string tag = s.size() == 4 ? "n" : nset_str(s);
            b.add_II("T2.4a(mu=" + pstr(mu) + ")-" + tag, alg, n_gens(s), {{"mu", mu}});
        }
    }
    // (4b): mu = 1/2 with shifted generator
    for (const auto& s : std::vector<std::set<int>>{{2, 3}, {2, 3, 4}}) {
        std::vector<Matrix> gens = {hII(mat_diag(Scalar(1), Scalar(1, 2)),
                                        {Scalar(1), Scalar(0), Scalar(0), Scalar(0)}, Scalar(0))};
        for (const auto& m : n_gens(s)) gens.push_back(m);
        b.add("T2.4b-" + nset_str(s), "C2", 2, gens, {{"mu", Scalar(1, 2)}});
    }
    // (4c): mu = 0
    b.add_II("T2.4c-n(2,4)", gl2_subalgebra("diag1mu", {{"mu", Scalar(0)}}), n_gens({2, 4}),
             {{"mu", Scalar(0)}});
    for (const auto& s : std::vector<std::set<int>>{{1, 4}, {3, 4}, {1, 3, 4}}) {
        std::vector<Matrix> gens = {hII(mat_diag(Scalar(1), Scalar(0)),
                                        {Scalar(0), Scalar(1), Scalar(0), Scalar(0)}, Scalar(0))};
        for (const auto& m : n_gens(s)) gens.push_back(m);
        b.add("T2.4c-shift-" + nset_str(s), "C2", 2, gens, {{"mu", Scalar(0)}});
    }

    // (5): a in {0, R.I}
    std::vector<std::pair<std::string, LieMatrixAlgebra>> a5 = {
        {"0", gl2_subalgebra("0")},
        {"I", LieMatrixAlgebra::from_matrices(2, {Matrix::identity(2)})}};
    std::vector<std::set<int>> n5 = {{1, 2, 3, 4}, {1, 3}, {2, 3}, {1, 3, 4}, {2, 3, 4}};
    for (const auto& [aname, alg] : a5) {
        for (const auto& s : n5) {
            std::string tag = s.size() == 4 ? "n" : nset_str(s);
            b.add_II("T2.5-" + aname + "-" + tag, alg, n_gens(s));
        }
        // (a) Z = {(z1, 0, z1, z4)}
        b.add_II("T2.5a-" + aname, alg,
                 z_span_gens({{Scalar(1), Scalar(0), Scalar(1), Scalar(0)},
                              {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}}));
        // (b) Z = {(0, z2, z3, -z2)}
        b.add_II("T2.5b-" + aname, alg,
                 z_span_gens({{Scalar(0), Scalar(1), Scalar(0), Scalar(-1)},
                              {Scalar(0), Scalar(0), Scalar(1), Scalar(0)}}));
        // (c) Z = {(z1, alpha z1, alpha z4, z4)}, 3 alpha^2 - 3 sqrt2 alpha + 1 <= 0
        std::vector<Scalar> alphas = {Scalar(1, 2), Scalar(Rational(0), Rational(1, 2)),
                                      Scalar(1)};
        if (auto it = extra.find("alpha"); it != extra.end()) {
            const Scalar& al = it->second;
            Scalar q = 3 * al * al - 3 * Scalar::sqrt2() * al + Scalar(1);
            if (q.sign() > 0)
                throw std::invalid_argument("alpha outside the admissible interval");
            if (std::find(alphas.begin(), alphas.end(), al) == alphas.end()) alphas.push_back(al);
        }
        for (const Scalar& al : alphas)
            b.add_II("T2.5c-" + aname + "(alpha=" + pstr(al) + ")", alg,
                     z_span_gens({{Scalar(1), al, Scalar(0), Scalar(0)},
                                  {Scalar(0), Scalar(0), al, Scalar(1)}}),
                     {{"alpha", al}});
        // (d) Z = {(s z1, alpha z2, -alpha z1, -z2)}, 3 alpha^2 - (s+1) alpha - s = 0
        std::vector<Scalar> ss = {Scalar(1)};
        if (auto it = extra.find("s"); it != extra.end()) {
            const Scalar& sv = it->second;
            if (sv.sign() <= 0 || (sv - Scalar(1)).sign() > 0)
                throw std::invalid_argument("s must lie in (0, 1]");
            if (std::find(ss.begin(), ss.end(), sv) == ss.end()) ss.push_back(sv);
        }
        for (const Scalar& sv : ss) {
            Scalar disc = (sv + Scalar(1)) * (sv + Scalar(1)) + 12 * sv;
            auto root = disc.sqrt_in_field();
            if (!root)
                throw std::invalid_argument("no field solution for alpha at s = " + sv.str());
            for (const Scalar& al : {Scalar(1, 6) * (sv + Scalar(1) + *root),
                                     Scalar(1, 6) * (sv + Scalar(1) - *root)}) {
                // the root alpha = s = 1 degenerates: Z collapses to
                // {(r, s, -r, -s)}, whose algebra annihilates a non-isotropic
                // vector and is therefore decomposable -- not a valid entry
                if (al == Scalar(1) && sv == Scalar(1)) continue;
                b.add_II("T2.5d-" + aname + "(s=" + pstr(sv) + ",alpha=" + pstr(al) + ")", alg,
                         z_span_gens({{sv, Scalar(0), -al, Scalar(0)},
                                      {Scalar(0), al, Scalar(0), Scalar(-1)}}),
                         {{"s", sv}, {"alpha", al}});
            }
        }
        // (e) Z = {(z1, z2, kappa z1, z4)}, kappa = +-1
        for (long kappa : {1L, -1L})
            b.add_II("T2.5e-" + aname + "(kappa=" + pstr(Scalar(kappa)) + ")", alg,
                     z_span_gens({{Scalar(1), Scalar(0), Scalar(kappa), Scalar(0)},
                                  {Scalar(0), Scalar(1), Scalar(0), Scalar(0)},
                                  {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}}),
                     {{"kappa", Scalar(kappa)}});
    }
    return b.entries;
}

}  // namespace

std::vector<CatalogEntry> theorem_entries(const std::string& which,
                                          const std::map<std::string, Scalar>& extra) {
    if (which == "T1") return entries_T1(extra);
    if (which == "T3") return entries_T3(extra);
    if (which == "T2") return entries_T2(extra);
    throw std::invalid_argument("unknown catalog '" + which + "' (expected T1, T2 or T3)");
}

std::vector<CatalogEntry> full_catalog() {
    std::vector<CatalogEntry> out = theorem_entries("T1");
    for (auto& e : theorem_entries("T3")) out.push_back(std::move(e));
    for (auto& e : theorem_entries("T2")) out.push_back(std::move(e));
    return out;
}

std::optional<CatalogEntry> find_catalog_entry(const std::string& id) {
    for (auto& e : full_catalog())
        if (e.id == id) return e;
    return std::nullopt;
}

}  // namespace g2h
