#include "g2h/liegeom.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "g2h/berger.hpp"
#include "g2h/catalog.hpp"

namespace g2h {

const Convention& LiePresentation::convention() const {
    return convention_by_name(convention_name);
}

Vec LiePresentation::bracket(size_t j, size_t k) const {
    Vec out(7, Scalar(0));
    if (j == k) return out;
    Scalar sign(1);
    if (j > k) {
        std::swap(j, k);
        sign = Scalar(-1);
    }
    for (size_t i = 0; i < 7; ++i) out[i] = sign * c(i, pair_index(j, k));
    return out;
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Is position t the start of a basis-pair token b<j><k>?
bool at_pair_token(const std::string& s, size_t t) {
    if (t + 2 >= s.size() || s[t] != 'b') return false;
    if (!std::isdigit(static_cast<unsigned char>(s[t + 1])) ||
        !std::isdigit(static_cast<unsigned char>(s[t + 2])))
        return false;
    return t + 3 == s.size() || !std::isalnum(static_cast<unsigned char>(s[t + 3]));
}

Scalar parse_coefficient(std::string text, const std::string& line) {
    text = trim(text);
    if (text.empty() || text == "+") return Scalar(1);
    if (text == "-") return Scalar(-1);
    if (text[0] == '+') text = trim(text.substr(1));
    try {
        return Scalar::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument("bad coefficient '" + text + "' in line '" + line + "'");
    }
}

}  // namespace

LiePresentation LiePresentation::parse(const std::string& text) {
    LiePresentation p;
    bool have_convention = false;
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.rfind("convention", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("malformed convention line '" + line + "'");
            p.convention_name = trim(line.substr(colon + 1));
            convention_by_name(p.convention_name);  // validates
            have_convention = true;
            continue;
        }
        size_t pos = 0;
        skip_ws(line, pos);
        if (pos >= line.size() || line[pos] != 'd')
            throw std::invalid_argument("expected 'd b<i> =' in line '" + line + "'");
        ++pos;
        skip_ws(line, pos);
        if (pos >= line.size() || line[pos] != 'b')
            throw std::invalid_argument("expected basis symbol in line '" + line + "'");
        ++pos;
        if (pos >= line.size() || line[pos] < '1' || line[pos] > '7')
            throw std::invalid_argument("basis index out of range in line '" + line + "'");
        size_t i = line[pos] - '1';
        ++pos;
        skip_ws(line, pos);
        if (pos >= line.size() || line[pos] != '=')
            throw std::invalid_argument("expected '=' in line '" + line + "'");
        ++pos;
        std::string rhs = trim(line.substr(pos));
        if (rhs == "0" || rhs.empty()) continue;

        size_t start = 0;
        while (start < rhs.size()) {
            size_t t = start;
            while (t < rhs.size() && !at_pair_token(rhs, t)) ++t;
            if (t >= rhs.size())
                throw std::invalid_argument("dangling term in line '" + line + "'");
            Scalar coeff = parse_coefficient(rhs.substr(start, t - start), line);
            size_t j = rhs[t + 1] - '1', k = rhs[t + 2] - '1';
            if (j > 6 || k > 6 || j == k)
                throw std::invalid_argument("bad basis pair in line '" + line + "'");
            if (j > k) {
                std::swap(j, k);
                coeff = -coeff;
            }
            // db^i = - sum c^i_{jk} b^{jk}
            p.c(i, pair_index(j, k)) -= coeff;
            start = t + 3;
        }
    }
    if (!have_convention)
        throw std::invalid_argument("structure file is missing a 'convention:' line");
    return p;
}

LiePresentation LiePresentation::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string LiePresentation::str() const {
    std::string out = "convention: " + convention_name + "\n";
    for (size_t i = 0; i < 7; ++i) {
        bool any = false;
        std::string line = "d b" + std::to_string(i + 1) + " =";
        for (size_t j = 0; j < 7; ++j)
            for (size_t k = j + 1; k < 7; ++k) {
                Scalar coeff = -c(i, pair_index(j, k));
                if (coeff.is_zero()) continue;
                std::string cs = coeff.str();
                if (cs == "1")
                    line += any ? " +" : "";
                else if (cs == "-1")
                    line += " -";
                else
                    line += (any && cs[0] != '-' ? " + " : " ") + cs;
                line += " b" + std::to_string(j + 1) + std::to_string(k + 1);
                any = true;
            }
        if (any) out += line + "\n";
    }
    return out;
}

namespace {

Vec bracket_of_vectors(const LiePresentation& p, const Vec& u, const Vec& v) {
    Vec out(7, Scalar(0));
    for (size_t a = 0; a < 7; ++a)
        for (size_t b = a + 1; b < 7; ++b) {
            Scalar w = u[a] * v[b] - u[b] * v[a];
            if (w.is_zero()) continue;
            for (size_t i = 0; i < 7; ++i) out[i] += w * p.c(i, pair_index(a, b));
        }
    return out;
}

}  // namespace

JacobiReport jacobi_check(const LiePresentation& p) {
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = i + 1; j < 7; ++j)
            for (size_t k = j + 1; k < 7; ++k) {
                Vec bi = basis_vec(7, i), bj = basis_vec(7, j), bk = basis_vec(7, k);
                Vec sum = vec_add(bracket_of_vectors(p, p.bracket(i, j), bk),
                                  vec_add(bracket_of_vectors(p, p.bracket(j, k), bi),
                                          bracket_of_vectors(p, p.bracket(k, i), bj)));
                if (!vec_is_zero(sum)) return {false, {i, j, k}};
            }
    return {true, {}};
}

ConnectionTable koszul(const LiePresentation& p) {
    const Convention& conv = p.convention();
    const Matrix& G = conv.gram;
    const Matrix& Gi = conv.gram_inv;
    ConnectionTable ct;
    ct.lambda.assign(7, Matrix(7, 7));
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j) {
            // 2 <nabla_i b_j, b_l> = <[b_i,b_j],b_l> - <[b_j,b_l],b_i> + <[b_l,b_i],b_j>
            Vec w(7, Scalar(0));
            Vec bij = p.bracket(i, j);
            for (size_t l = 0; l < 7; ++l) {
                Scalar rhs = pair(G, bij, basis_vec(7, l)) -
                             pair(G, p.bracket(j, l), basis_vec(7, i)) +
                             pair(G, p.bracket(l, i), basis_vec(7, j));
                w[l] = Scalar(1, 2) * rhs;
            }
            Vec col = Gi.apply(w);
            for (size_t l = 0; l < 7; ++l) ct.lambda[i](l, j) = col[l];
        }
    return ct;
}

std::array<Matrix, 21> curvature(const ConnectionTable& ct, const LiePresentation& p) {
    std::array<Matrix, 21> r;
    r.fill(Matrix(7, 7));
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = i + 1; j < 7; ++j) {
            Matrix m = commutator(ct.lambda[i], ct.lambda[j]);
            Vec br = p.bracket(i, j);
            for (size_t l = 0; l < 7; ++l)
                if (!br[l].is_zero()) m = m - br[l] * ct.lambda[l];
            r[pair_index(i, j)] = m;
        }
    return r;
}

namespace {

using PairTensor = std::array<Matrix, 21>;

Matrix tensor_value(const PairTensor& t, size_t a, size_t b) {
    if (a == b) return Matrix(7, 7);
    if (a < b) return t[pair_index(a, b)];
    return -t[pair_index(b, a)];
}

/// (nabla_{b_m} T)(b_i, b_j) for a curvature-like pair tensor.
Matrix derive_tensor(const ConnectionTable& ct, const PairTensor& t, size_t m, size_t i,
                     size_t j) {
    Matrix out = commutator(ct.lambda[m], tensor_value(t, i, j));
    for (size_t l = 0; l < 7; ++l) {
        const Scalar& ci = ct.lambda[m](l, i);
        if (!ci.is_zero()) out = out - ci * tensor_value(t, l, j);
        const Scalar& cj = ct.lambda[m](l, j);
        if (!cj.is_zero()) out = out - cj * tensor_value(t, i, l);
    }
    return out;
}

Vec flatten_tensor(const PairTensor& t) {
    Vec out;
    out.reserve(21 * 49);
    for (const auto& m : t) {
        Vec f = m.flatten();
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

}  // namespace

Matrix covariant_derivative_R(const ConnectionTable& ct, const LiePresentation& p,
                              size_t m, size_t i, size_t j) {
    return derive_tensor(ct, curvature(ct, p), m, i, j);
}

bool parallel_form_check(const ConnectionTable& ct, const Convention& conv) {
    for (const auto& l : ct.lambda)
        if (!derivation_action(l, conv.omega).is_zero()) return false;
    return true;
}

std::vector<std::string> parallel_calibrations(const ConnectionTable& ct,
                                               const LiePresentation& p) {
    std::vector<std::string> out;
    for (const char* name : {"C1", "C2", "C3"}) {
        const Convention& conv = convention_by_name(name);
        if (!(conv.gram == p.convention().gram)) continue;
        if (parallel_form_check(ct, conv)) out.push_back(name);
    }
    return out;
}

HolonomyResult ambrose_singer(const ConnectionTable& ct, const LiePresentation& p) {
    PairTensor r = curvature(ct, p);
    std::vector<Vec> hol_vecs;
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = i + 1; j < 7; ++j) hol_vecs.push_back(r[pair_index(i, j)].flatten());
    Subspace hol = Subspace::span(49, hol_vecs);

    std::vector<PairTensor> generation = {r};
    Subspace tensor_span = Subspace::span(21 * 49, {flatten_tensor(r)});

    size_t generations = 0;
    for (size_t sweep = 0;; ++sweep) {
        if (sweep >= 21)
            throw std::logic_error("ambrose_singer: no fixed point within 21 sweeps");
        std::vector<PairTensor> next;
        Subspace hol_next = hol;
        for (const auto& t : generation)
            for (size_t m = 0; m < 7; ++m) {
                PairTensor dt;
                dt.fill(Matrix(7, 7));
                for (size_t i = 0; i < 7; ++i)
                    for (size_t j = i + 1; j < 7; ++j)
                        dt[pair_index(i, j)] = derive_tensor(ct, t, m, i, j);
                Subspace grown = tensor_span.sum(Subspace::span(21 * 49, {flatten_tensor(dt)}));
                if (grown.dim() == tensor_span.dim()) continue;  // nothing new as a tensor
                tensor_span = grown;
                next.push_back(dt);
                std::vector<Vec> vals;
                for (const auto& mval : dt) vals.push_back(mval.flatten());
                hol_next = hol_next.sum(Subspace::span(49, vals));
            }
        if (hol_next.dim() == hol.dim() && next.empty()) break;
        if (hol_next.dim() > hol.dim()) ++generations;
        hol = hol_next;
        if (next.empty()) break;
        generation = std::move(next);
    }

    HolonomyResult out;
    std::vector<Matrix> basis;
    for (const auto& v : hol.basis()) basis.push_back(Matrix::unflatten(v, 7, 7));
    out.algebra = LieMatrixAlgebra::from_matrices(7, basis);
    out.generations = generations;
    out.matched_catalog = match_catalog(out.algebra, p.convention_name);
    return out;
}

std::optional<std::string> match_catalog(const LieMatrixAlgebra& algebra,
                                         const std::string& convention_name) {
    static const std::vector<CatalogEntry> entries = full_catalog();
    bool type2 = convention_name == "C2";
    for (const auto& e : entries) {
        if ((e.convention == "C2") != type2) continue;
        if (e.algebra.span == algebra.span) return e.id;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// the seven verified examples

namespace {

// b^j_i = b_i (x) b^j; arguments in visual order (superscript, subscript)
Matrix bm(int sup, int sub) {
    Matrix m(7, 7);
    m(sub - 1, sup - 1) = Scalar(1);
    return m;
}

ExampleSpec make_example(std::string id, const char* text, size_t dim,
                         std::vector<Matrix> lambda,
                         std::vector<std::pair<size_t, size_t>> pairs,
                         std::vector<std::array<size_t, 3>> derivs, std::string match) {
    ExampleSpec e;
    e.id = std::move(id);
    e.pres = LiePresentation::parse(text);
    e.expected_dim = dim;
    e.expected_lambda = std::move(lambda);
    e.curvature_spanners = std::move(pairs);
    e.derivative_spanners = std::move(derivs);
    e.expected_match = std::move(match);
    return e;
}

std::vector<ExampleSpec> build_registry() {
    const Scalar q = Scalar::sqrt2_times(1, 2);  // 1/sqrt(2)
    const Scalar s2 = Scalar::sqrt2();
    const Scalar h(1, 2);
    std::vector<ExampleSpec> out;

    {
        const char* text = R"(convention: C3
d b1 = -2 b15 - b56
d b2 = -2 b25 - b35 - b56
d b3 = - b35
d b4 = b45 - r2 b67
d b6 = - b56
d b7 = b36 - b56
)";
        std::vector<Matrix> L(7, Matrix(7, 7));
        L[1] = h * (bm(5, 2) - bm(6, 1));
        L[2] = bm(3, 2) - bm(6, 7) + h * (bm(5, 3) - bm(7, 1));
        L[3] = -bm(4, 1) - bm(5, 4) + q * (bm(6, 3) - bm(7, 2));
        L[4] = Scalar(-2) * (bm(1, 1) - bm(5, 5)) - Scalar(3, 2) * (bm(2, 2) - bm(6, 6)) -
               h * (bm(3, 3) - bm(7, 7)) - bm(3, 2) + bm(6, 7) - bm(5, 2) + bm(6, 1);
        L[5] = -h * (bm(2, 1) - bm(5, 6)) + q * (bm(4, 3) + bm(7, 4)) - bm(5, 2) + bm(6, 1);
        L[6] = -h * (bm(3, 1) - bm(5, 7)) - q * (bm(4, 2) + bm(6, 4));
        out.push_back(make_example("typeI-5", text, 5, std::move(L),
                                   {{1, 4}, {2, 4}, {3, 4}, {4, 5}, {4, 6}}, {}, "T1.1-0"));
    }
    {
        const char* text = R"(convention: C3
d b2 = r2 b25 + r2 b35 - r2 b56 - r2 b57
d b3 = -1/2 r2 b35 - b46 - r2 b56 + 1/2 r2 b57
d b4 = - b36 + b67
d b7 = 1/2 r2 b35 + b46 + r2 b56 - 1/2 r2 b57
)";
        std::vector<Matrix> L(7, Matrix(7, 7));
        L[1] = -q * (bm(5, 2) - bm(6, 1));
        L[2] = q * (bm(3, 1) - bm(5, 7)) + bm(4, 2) + bm(6, 4);
        L[3] = bm(3, 2) - bm(6, 7);
        L[4] = q * (bm(2, 2) - bm(6, 6) - bm(3, 3) + bm(7, 7)) + s2 * (bm(3, 2) - bm(6, 7));
        L[5] = q * (bm(2, 1) - bm(5, 6)) - bm(4, 3) - bm(7, 4) -
               s2 * (bm(5, 2) - bm(6, 1) + bm(5, 3) - bm(7, 1));
        L[6] = -s2 * (bm(5, 2) - bm(6, 1)) + q * (bm(5, 3) - bm(7, 1));
        out.push_back(make_example("typeI-6", text, 6, std::move(L),
                                   {{1, 4}, {2, 4}, {2, 5}, {4, 5}, {5, 6}}, {{5, 2, 5}},
                                   "T1.4a"));
    }
    {
        const char* text = R"(convention: C3
d b1 = - b16 - 1/2 r2 b26 + 1/2 b36 + 1 + 1 r2 b46 + b56 - b67
d b2 = -3/2 b26 + 1/2 + 1/4 r2 b36 + 3 + 1/2 r2 b46 - 1 + 1/2 r2 b56 - 1 - 1/2 r2 b67
d b3 = 1/4 r2 b35 + 1/2 b36 + 1/2 b46 - b56 - 1/2 r2 b57
d b4 = 1/4 b36 + 1 + 1 r2 b56 - 1/2 b67
d b5 = b56
d b7 = -1/8 r2 b35 - 1/2 b36 - 1/4 b46 - 1/2 - 3 r2 b56 + 1/4 r2 b57 + 1/2 b67
)";
        std::vector<Matrix> L(7, Matrix(7, 7));
        const Scalar quarter(1, 4);
        L[1] = -(quarter * s2) * (bm(5, 2) - bm(6, 1));
        L[2] = -(Scalar(1, 8) * s2) * (bm(3, 1) - bm(5, 7)) - h * (bm(3, 2) - bm(6, 7)) -
               quarter * (bm(4, 2) + bm(6, 4)) - (3 * q) * (bm(5, 2) - bm(6, 1));
        L[3] = -quarter * (bm(3, 2) - bm(6, 7));
        L[4] = (quarter * s2) * (-bm(2, 2) + bm(6, 6) + bm(3, 3) - bm(7, 7)) -
               (3 * q) * (bm(3, 2) - bm(6, 7)) + bm(5, 2) - bm(6, 1);
        L[5] = -bm(1, 1) + bm(5, 5) - Scalar(3, 2) * (bm(2, 2) - bm(6, 6)) +
               h * (bm(3, 3) - bm(7, 7)) - (quarter * s2) * (bm(2, 1) - bm(5, 6)) +
               (h + 3 * q) * (bm(3, 1) - bm(5, 7)) +
               (quarter * s2 + h) * (bm(3, 2) - bm(6, 7)) +
               (Scalar(1) + s2) * (bm(4, 1) + bm(5, 4)) +
               (Scalar(3) + q) * (bm(4, 2) + bm(6, 4)) + h * (bm(4, 3) + bm(7, 4)) +
               (q - Scalar(1)) * (bm(5, 2) - bm(6, 1)) - bm(5, 3) + bm(7, 1) -
               (q + Scalar(1)) * (bm(6, 3) - bm(7, 2));
        L[6] = -q * (bm(5, 3) - bm(7, 1));
        out.push_back(make_example("typeI-7", text, 7, std::move(L),
                                   {{1, 4}, {2, 4}, {2, 5}, {3, 4}, {4, 5}, {4, 6}},
                                   {{4, 4, 5}}, "T1.2a(lambda=1/2)"));
    }
    {
        const char* text = R"(convention: C2
d b1 = - b17 + 1/2 r2 b34 + 1 - 1 r2 b37 - b46 - b57 + b67
d b2 = - b27 + b37 - b47 - b67
d b3 = 1 - 1 r2 b67
d b4 = - b47
d b5 = - b37 + 1/2 r2 b46 + b67
d b6 = b67
)";
        std::vector<Matrix> L(7, Matrix(7, 7));
        L[2] = -bm(3, 2) + bm(7, 5) + (Scalar(1) - q) * (bm(6, 2) - bm(7, 1));
        L[3] = q * (bm(3, 1) - bm(6, 5)) + bm(4, 2) + bm(7, 4);
        L[4] = q * (bm(7, 1) - bm(6, 2));
        L[5] = (Scalar(1) - q) * (bm(3, 2) - bm(7, 5)) - q * (bm(5, 2) - bm(7, 3)) +
               bm(6, 2) - bm(7, 1) - bm(4, 1) - bm(6, 4);
        L[6] = bm(3, 2) - bm(7, 5) - q * (bm(3, 1) - bm(6, 5)) - bm(2, 2) + bm(7, 7) -
               bm(1, 1) + bm(6, 6) - bm(4, 2) - bm(7, 4) -
               (Scalar(1) - q) * (bm(5, 1) - bm(6, 3)) - bm(6, 2) + bm(7, 1);
        out.push_back(make_example("typeII-3", text, 3, std::move(L), {{2, 6}, {3, 5}, {5, 6}},
                                   {}, "T2.5-0-n(1,3)"));
    }
    {
        const char* text = R"(convention: C2
d b1 = 2 b15 + 4 b56 + b57
d b2 = b17 + b25 + r2 b34 - r2 b46 - b56 - b57 - b67
d b3 = b35 - 3 b56
d b4 = - r2 b37 - r2 b67
d b6 = 2 b56
d b7 = b57
)";
        std::vector<Matrix> L(7, Matrix(7, 7));
        L[3] = s2 * (bm(3, 2) - bm(7, 5) + bm(6, 2) - bm(7, 1));
        L[4] = Scalar(2) * (bm(1, 1) - bm(6, 6)) + bm(2, 2) - bm(7, 7) + bm(3, 3) -
               bm(5, 5) - Scalar(3) * (bm(5, 1) - bm(6, 3)) + bm(6, 2) - bm(7, 1);
        L[5] = Scalar(4) * (bm(5, 1) - bm(6, 3));
        L[6] = bm(1, 2) - bm(7, 6) - s2 * (bm(3, 4) + bm(4, 1) + bm(4, 5) + bm(6, 4)) -
               bm(5, 2) + bm(7, 3) - bm(6, 2) + bm(7, 1);
        out.push_back(make_example("typeII-5", text, 5, std::move(L),
                                   {{2, 6}, {3, 5}, {4, 5}, {5, 6}}, {{6, 5, 6}}, "T2.5-0-n"));
    }
    {
        const char* text = R"(convention: C2
d b1 = - b17 + b26 - b36 - b37 - b46 + b56 - b57 - b67
d b2 = 5/3 b16 - b27 + 13/3 b36 + 11/9 b37 - 4/3 r2 b46 + 5/3 + 8/3 r2 b47 - 9 b56 - 1/3 b57 - b67
d b3 = b37 - 2 r2 b46 - b57 + 10 - 1 r2 b67
d b4 = 2/3 b47 + 2/3 r2 b67
d b5 = 7/9 b37 - 2/3 r2 b46 - 5/3 b57 - 2 - 5/3 r2 b67
)";
        std::vector<Matrix> L(7, Matrix(7, 7));
        const Scalar third(1, 3);
        L[0] = Scalar(-4, 3) * (bm(6, 2) - bm(7, 1));
        L[2] = Scalar(7, 9) * (bm(3, 2) - bm(7, 5)) - (third * s2) * (bm(4, 1) + bm(6, 4)) -
               third * (bm(5, 2) - bm(7, 3)) -
               (Scalar(11, 3) + Scalar(5, 6) * s2) * (bm(6, 2) - bm(7, 1));
        L[3] = -(third * s2) * (bm(3, 1) - bm(6, 5)) - Scalar(2, 3) * (bm(4, 2) + bm(7, 4)) -
               s2 * (bm(5, 1) - bm(6, 3)) + (third * s2) * (bm(6, 2) - bm(7, 1));
        L[4] = -third * (bm(3, 2) - bm(7, 5)) - s2 * (bm(4, 1) + bm(6, 4)) - bm(5, 2) +
               bm(7, 3) + (Scalar(9) - q) * (bm(6, 2) - bm(7, 1));
        L[5] = third * (bm(1, 2) - bm(7, 6)) + bm(2, 1) - bm(6, 7) - bm(3, 1) + bm(6, 5) +
               (Scalar(2, 3) - Scalar(5, 6) * s2) * (bm(3, 2) - bm(7, 5)) -
               (third * s2) * (bm(3, 4) + bm(4, 5)) - bm(4, 1) - bm(6, 4) -
               s2 * (bm(4, 2) + bm(7, 4) + bm(4, 3) + bm(5, 4)) + bm(5, 1) - bm(6, 3) -
               q * (bm(5, 2) - bm(7, 3)) - bm(6, 2) + bm(7, 1);
        L[6] = third * (bm(1, 1) - bm(6, 6)) - bm(2, 2) + bm(7, 7) +
               Scalar(4, 3) * (bm(3, 3) - bm(5, 5)) +
               (Scalar(8, 3) + Scalar(5, 6) * s2) * (bm(3, 1) - bm(6, 5)) +
               Scalar(11, 9) * (bm(3, 2) - bm(7, 5)) - (third * s2) * (bm(4, 1) + bm(6, 4)) +
               (Scalar(8, 3) * s2 + Scalar(5, 3)) * (bm(4, 2) + bm(7, 4)) -
               (Scalar(10) - q) * (bm(5, 1) - bm(6, 3)) - third * (bm(5, 2) - bm(7, 3)) -
               bm(6, 2) + bm(7, 1);
        out.push_back(make_example("typeII-8", text, 8, std::move(L),
                                   {{0, 6}, {2, 5}, {2, 6}, {4, 5}, {4, 6}, {5, 6}},
                                   {{5, 5, 6}, {6, 5, 6}}, "T2.1-sl2"));
    }
    {
        const char* text = R"(convention: C3
d b1 = - b15 - b45 - b56
d b2 = -1/3 b25 - b35 - b36 - r2 b45 - b56 - 1 + 1 r2 b57 + b67
d b3 = -2/3 b35 - b56 + 4/3 b57
d b4 = - r2 b56
d b6 = -1/3 b56
d b7 = - b56 - 2/3 b57
)";
        std::vector<Matrix> L(7, Matrix(7, 7));
        L[3] = s2 * (bm(5, 2) - bm(6, 1));
        L[4] = -bm(1, 1) + bm(5, 5) - Scalar(1, 3) * (bm(2, 2) - bm(6, 6)) -
               Scalar(2, 3) * (bm(3, 3) - bm(7, 7)) - bm(3, 2) + bm(6, 7) - bm(4, 1) -
               bm(5, 4) - bm(5, 2) + bm(6, 1) + q * (bm(6, 3) - bm(7, 2));
        L[5] = -bm(3, 2) + bm(6, 7) - s2 * (bm(4, 1) + bm(5, 4)) - bm(5, 2) + bm(6, 1) -
               (Scalar(1) - q) * (bm(5, 3) - bm(7, 1)) + bm(6, 3) - bm(7, 2);
        L[6] = -(Scalar(1) - q) * (bm(5, 2) - bm(6, 1)) + Scalar(4, 3) * (bm(5, 3) - bm(7, 1));
        out.push_back(make_example("typeIII-3", text, 3, std::move(L), {{3, 4}, {4, 5}, {4, 6}},
                                   {}, "T3.2-0(k=2)"));
    }
    return out;
}

}  // namespace

const std::vector<ExampleSpec>& examples_registry() {
    static const std::vector<ExampleSpec> reg = build_registry();
    return reg;
}

}  // namespace g2h
