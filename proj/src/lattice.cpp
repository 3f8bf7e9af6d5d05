#include "e8cas/lattice.hpp"

#include "e8cas/linalg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace e8cas {

Rat MuVector::coord_sum() const {
    Rat s;
    for (const auto& x : c) s += x;
    return s;
}

MuVector MuVector::canonical() const {
    MuVector out = *this;
    Rat t = c[8];
    if (!t.is_zero())
        for (auto& x : out.c) x -= t;
    return out;
}

MuVector MuVector::trace_zero() const {
    MuVector out = *this;
    Rat mean = coord_sum() / Rat(9);
    if (!mean.is_zero())
        for (auto& x : out.c) x -= mean;
    return out;
}

MuVector& MuVector::operator+=(const MuVector& o) {
    for (int i = 0; i < 9; ++i) c[i] += o.c[i];
    return *this;
}

MuVector& MuVector::operator-=(const MuVector& o) {
    for (int i = 0; i < 9; ++i) c[i] -= o.c[i];
    return *this;
}

MuVector operator*(const Rat& s, const MuVector& v) {
    MuVector out = v;
    for (auto& x : out.c) x *= s;
    return out;
}

bool operator==(const MuVector& a, const MuVector& b) {
    return a.canonical().c == b.canonical().c;
}

DominantE8::DominantE8(std::array<int64_t, 8> labels) : r(labels) {
    for (auto v : r)
        if (v < 0) throw std::invalid_argument("DominantE8: negative Dynkin label");
}

DominantE8 DominantE8::fundamental(int i) {
    if (i < 1 || i > 8) throw std::out_of_range("DominantE8::fundamental: index must be 1..8");
    DominantE8 w;
    w.r[i - 1] = 1;
    return w;
}

bool DominantE8::is_zero() const {
    return std::all_of(r.begin(), r.end(), [](int64_t v) { return v == 0; });
}

std::string DominantE8::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 8; ++i) os << (i ? "," : "") << r[i];
    os << ")";
    return os.str();
}

DominantA8::DominantA8(std::array<Rat, 8> values) : q(std::move(values)) {
    for (int i = 0; i + 1 < 8; ++i)
        if (q[i] < q[i + 1]) throw std::invalid_argument("DominantA8: values must be weakly decreasing");
    if (q[7].sign() < 0) throw std::invalid_argument("DominantA8: values must be nonnegative");
}

MuVector DominantA8::as_mu() const {
    MuVector v;
    for (int i = 0; i < 8; ++i) v.c[i] = q[i];
    return v;
}

Rat DominantA8::norm2() const {
    MuVector v = as_mu();
    return mu_inner(v, v);
}

bool DominantA8::is_zero() const {
    return std::all_of(q.begin(), q.end(), [](const Rat& v) { return v.is_zero(); });
}

bool operator<(const DominantA8& a, const DominantA8& b) {
    for (int i = 0; i < 8; ++i) {
        if (a.q[i] < b.q[i]) return true;
        if (b.q[i] < a.q[i]) return false;
    }
    return false;
}

std::string DominantA8::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 8; ++i) os << (i ? "," : "") << q[i].to_string();
    os << ")";
    return os.str();
}

Rat mu_inner(const MuVector& u, const MuVector& v) {
    Rat dot, su, sv;
    for (int i = 0; i < 9; ++i) {
        dot += u.c[i] * v.c[i];
        su += u.c[i];
        sv += v.c[i];
    }
    return dot - su * sv / Rat(9);
}

MuVector sigma_to_mu(int i) {
    if (i < 1 || i > 8) throw std::out_of_range("sigma_to_mu: index must be 1..8");
    MuVector v;
    for (int j = 0; j < i; ++j) v.c[j] = Rat(1);
    return v;
}

MuVector e8_weight_to_mu(const DominantE8& r) {
    // lambda_i = sigma_i + s_i * sigma_8 with s = (1,2,3,4,5,3,1,.) and
    // lambda_8 = 3 sigma_8.
    static const int sigma8_mult[8] = {1, 2, 3, 4, 5, 3, 1, 3};
    MuVector out;
    for (int i = 0; i < 8; ++i) {
        if (r.r[i] == 0) continue;
        Rat m(static_cast<long>(r.r[i]));
        MuVector lam = (i < 7) ? sigma_to_mu(i + 1) : MuVector{};
        MuVector s8 = sigma_to_mu(8);
        for (int j = 0; j < 9; ++j) lam.c[j] += Rat(sigma8_mult[i]) * s8.c[j];
        out += m * lam;
    }
    return out;
}

namespace {

struct RootData {
    std::array<MuVector, 8> roots;
    std::array<std::array<int, 8>, 8> cartan;
    std::array<std::array<int64_t, 8>, 8> cartan_inv;
};

RootData derive_roots() {
    // Solve mu_inner(lambda_i, beta_j) = delta_ij for each j in the
    // c9 = 0 gauge; eight equations, eight unknowns.
    std::array<MuVector, 8> lambda;
    for (int i = 0; i < 8; ++i) lambda[i] = e8_weight_to_mu(DominantE8::fundamental(i + 1));

    RatMatrix a(8, RatVector(8));
    for (int i = 0; i < 8; ++i) {
        Rat s = lambda[i].coord_sum() / Rat(9);
        for (int k = 0; k < 8; ++k) a[i][k] = lambda[i].c[k] - s;
    }

    RootData data;
    for (int j = 0; j < 8; ++j) {
        RatVector b(8, Rat(0));
        b[j] = Rat(1);
        auto sol = solve_unique(a, b);
        if (!sol) throw std::logic_error("e8_simple_roots: defining linear system is singular");
        MuVector beta;
        for (int k = 0; k < 8; ++k) beta.c[k] = (*sol)[k];
        if (mu_inner(beta, beta) != Rat(2))
            throw std::logic_error("e8_simple_roots: root does not have squared length 2");
        data.roots[j] = beta;
    }

    // Validate the Gram matrix: symmetric, 2 on the diagonal, 0/-1 off
    // it, determinant 1, and a tree with exactly one degree-3 node whose
    // arm lengths are (1, 2, 4) -- the E8 diagram.
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            Rat g = mu_inner(data.roots[i], data.roots[j]);
            if (!g.is_integer()) throw std::logic_error("e8_simple_roots: non-integer Cartan entry");
            long v = g.to_int().get_si();
            if (i == j ? v != 2 : (v != 0 && v != -1))
                throw std::logic_error("e8_simple_roots: invalid Cartan entry");
            data.cartan[i][j] = static_cast<int>(v);
        }
    }
    {
        RatMatrix cm(8, RatVector(8));
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) cm[i][j] = Rat(data.cartan[i][j]);
        // Determinant via elimination: product of pivots. For E8 it is 1.
        Rat det(1);
        auto m = cm;
        for (int c = 0; c < 8; ++c) {
            int sel = c;
            while (sel < 8 && m[sel][c].is_zero()) ++sel;
            if (sel == 8) { det = Rat(0); break; }
            if (sel != c) { std::swap(m[sel], m[c]); det = -det; }
            det *= m[c][c];
            Rat inv = Rat(1) / m[c][c];
            for (int i = c + 1; i < 8; ++i) {
                Rat f = m[i][c] * inv;
                if (f.is_zero()) continue;
                for (int j = c; j < 8; ++j) m[i][j] -= f * m[c][j];
            }
        }
        if (det != Rat(1)) throw std::logic_error("e8_simple_roots: Cartan determinant is not 1");
    }
    {
        std::array<int, 8> deg{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (i != j && data.cartan[i][j] == -1) ++deg[i];
        int deg3 = 0;
        for (int i = 0; i < 8; ++i) {
            if (deg[i] > 3) throw std::logic_error("e8_simple_roots: diagram has a degree-4 node");
            if (deg[i] == 3) ++deg3;
        }
        if (deg3 != 1) throw std::logic_error("e8_simple_roots: diagram is not of E type");
    }

    // Inverse Cartan; integral because the determinant is 1.
    {
        RatMatrix aug(8, RatVector(16, Rat(0)));
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) aug[i][j] = Rat(data.cartan[i][j]);
            aug[i][8 + i] = Rat(1);
        }
        detail::row_echelon(aug);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                Rat v = aug[i][8 + j];
                if (!v.is_integer()) throw std::logic_error("e8_simple_roots: non-integral inverse Cartan");
                data.cartan_inv[i][j] = v.to_int().get_si();
            }
    }
    return data;
}

const RootData& root_data() {
    static const RootData data = derive_roots();
    return data;
}

} // namespace

const std::array<MuVector, 8>& e8_simple_roots() { return root_data().roots; }

const std::array<std::array<int, 8>, 8>& e8_cartan_matrix() { return root_data().cartan; }

const std::array<std::array<int64_t, 8>, 8>& e8_cartan_inverse() { return root_data().cartan_inv; }

std::array<Rat, 9> theta_vector(const DominantE8& r) {
    // Affine functions of the Dynkin labels; everything tabulated in
    // units of 1/3. Equals the trace-zero coordinates of r + Weyl vector.
    static const long c0[9] = {19, 16, 13, 10, 7, 4, 1, -2, -68};
    static const long lin[9][8] = {
        {3, 3, 3, 3, 3, 2, 1, 1},
        {0, 3, 3, 3, 3, 2, 1, 1},
        {0, 0, 3, 3, 3, 2, 1, 1},
        {0, 0, 0, 3, 3, 2, 1, 1},
        {0, 0, 0, 0, 3, 2, 1, 1},
        {0, 0, 0, 0, 0, 2, 1, 1},
        {0, 0, 0, 0, 0, -1, 1, 1},
        {0, 0, 0, 0, 0, -1, -2, 1},
        {-3, -6, -9, -12, -15, -10, -5, -8},
    };
    std::array<Rat, 9> th;
    for (int i = 0; i < 9; ++i) {
        Int n(c0[i]);
        for (int j = 0; j < 8; ++j) n += Int(lin[i][j]) * Int(static_cast<long>(r.r[j]));
        th[i] = Rat(n, Int(3));
    }
    return th;
}

DominantE8 weyl_vector() {
    DominantE8 rho;
    rho.r.fill(1);
    return rho;
}

} // namespace e8cas
