#include "ci2/picard.hpp"

#include <algorithm>

#include "ci2/linalg.hpp"
#include "ci2/rational.hpp"

namespace ci2 {

DivisorClass::DivisorClass(int d1_, int d2_, long long a_, long long b_, std::vector<long long> m_)
    : d1(d1_), d2(d2_), a(a_), b(b_), m(std::move(m_)) {
    if (d1 < 1 || d2 <= d1) throw DomainError("divisor class needs 1 <= d1 < d2");
    m.resize(std::max(0, d1 - 2), 0);
}

DivisorClass DivisorClass::o(int d1, int d2, long long l1, long long l2) {
    return DivisorClass(d1, d2, l1, l2);
}

DivisorClass DivisorClass::e(int d1, int d2, int k) {
    if (k < 1 || k > d1 - 1) throw DomainError("E_k index out of range");
    DivisorClass c(d1, d2, 0, 0);
    if (k <= d1 - 2) {
        c.m[k - 1] = -1;  // the class E_k itself subtracts -1 of E_k
        return c;
    }
    // derived class: E_{d1-1} = O(d2, d1)(-sum_{j<=d1-2} (d1-j) E_j),
    // forced by the triviality of L_{d1-1}
    c.a = d2;
    c.b = d1;
    for (int j = 1; j <= d1 - 2; ++j) c.m[j - 1] = d1 - j;
    return c;
}

void DivisorClass::check_compatible(const DivisorClass& x) const {
    if (d1 != x.d1 || d2 != x.d2) throw DomainError("divisor classes on different spaces");
}

DivisorClass DivisorClass::operator+(const DivisorClass& x) const {
    check_compatible(x);
    DivisorClass r = *this;
    r.a += x.a;
    r.b += x.b;
    for (std::size_t i = 0; i < m.size(); ++i) r.m[i] += x.m[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& x) const { return *this + (-x); }

DivisorClass DivisorClass::operator-() const {
    DivisorClass r = *this;
    r.a = -r.a;
    r.b = -r.b;
    for (auto& v : r.m) v = -v;
    return r;
}

DivisorClass DivisorClass::operator*(long long c) const {
    DivisorClass r = *this;
    r.a *= c;
    r.b *= c;
    for (auto& v : r.m) v *= c;
    return r;
}

bool DivisorClass::is_zero() const {
    if (d1 == 1) return a - static_cast<long long>(d2 - d1 + 1) * b == 0;
    if (a != 0 || b != 0) return false;
    return std::all_of(m.begin(), m.end(), [](long long v) { return v == 0; });
}

bool DivisorClass::operator==(const DivisorClass& x) const {
    if (d1 != x.d1 || d2 != x.d2) return false;
    return (*this - x).is_zero();
}

std::string DivisorClass::to_string() const {
    std::string s = "O(" + std::to_string(a) + "," + std::to_string(b) + ")";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        s += (m[i] > 0 ? " - " : " + ") + std::to_string(std::llabs(m[i])) + "E" + std::to_string(i + 1);
    }
    return s;
}

DivisorClass class_L(int d1, int d2, int i) {
    if (i < -1 || i > d1 - 1) throw DomainError("L_i index out of range");
    if (i == -1) return DivisorClass::o(d1, d2, 1, 0);
    DivisorClass c = DivisorClass::o(d1, d2, d2 - d1 + 1 + i, 1 + i);
    for (int k = 1; k <= i && k <= d1 - 2; ++k) c.m[k - 1] = i - k + 1;
    if (i == d1 - 1 && d1 >= 2) c = c - DivisorClass::e(d1, d2, d1 - 1);  // coefficient i-k+1 = 1 at k = d1-1
    return c;
}

namespace {

// adds coeff * E_j on the space (d1,d2), expanding j = d1-1 when needed
void add_e(DivisorClass& c, int d1, int d2, int j, long long coeff) {
    if (coeff == 0) return;
    if (j < 1 || j > d1 - 1) throw DomainError("exceptional index out of range");
    c = c + DivisorClass::e(d1, d2, j) * coeff;
}

} // namespace

std::pair<DivisorClass, DivisorClass> restrict_to_E(const DivisorClass& c, int k) {
    int d1 = c.d1, d2 = c.d2;
    if (k < 1 || k > d1 - 1) throw DomainError("restriction index out of range");
    int p1_d1 = d1 - k, p1_d2 = d2 + k;
    int p2_d1 = k, p2_d2 = d2 - d1 + k;
    // conv11 degenerate targets still carry (d1', d2') bookkeeping
    DivisorClass p1 = DivisorClass::o(p1_d1, p1_d2, c.a + c.b, 0);
    DivisorClass p2 = DivisorClass::o(p2_d1, p2_d2, c.a, c.b);
    long long mk = (k <= d1 - 2) ? c.m[k - 1] : 0;
    for (int j = 1; j <= d1 - 2; ++j) {
        long long mj = c.m[j - 1];
        if (mj == 0 || j == k) continue;
        if (j < k) {
            add_e(p2, p2_d1, p2_d2, j, -mj);  // E_j|_{E_k} = p2* E_j
        } else {
            add_e(p1, p1_d1, p1_d2, j - k, -mj);  // E_j|_{E_k} = p1* E_{j-k}
        }
    }
    if (mk != 0) {
        // O(E_k)|_{E_k} = p1* O(1,-1) (x) p2* O(1,1)(-E_1-..-E_{k-1});
        // the input carries E_k with coefficient -mk
        p1 = p1 - DivisorClass::o(p1_d1, p1_d2, 1, -1) * mk;
        p2 = p2 - DivisorClass::o(p2_d1, p2_d2, 1, 1) * mk;
        for (int j = 1; j <= k - 1; ++j) add_e(p2, p2_d1, p2_d2, j, mk);
    }
    return {p1, p2};
}

namespace {

Mat<Rat> l_basis_matrix(int d1, int d2) {
    Mat<Rat> m(d1, d1, {});
    for (int col = 0; col < d1; ++col) {
        DivisorClass L = class_L(d1, d2, col - 1);
        m(0, col) = Rat(L.a, 1);
        if (d1 >= 2) m(1, col) = Rat(L.b, 1);
        for (int j = 0; j < d1 - 2; ++j) m(2 + j, col) = Rat(L.m[j], 1);
    }
    return m;
}

} // namespace

long long l_basis_det(int d1, int d2) {
    if (d1 == 1) {
        // rank 1 under conv11: the basis is the single class L_{-1} = O(1,0),
        // of conv11 degree 1
        return 1;
    }
    Rat det = det_bareiss(l_basis_matrix(d1, d2));
    if (det.den() != 1) throw DomainError("non-integer determinant");
    return static_cast<long long>(det.num().get_si());
}

NefResult nef_test(const DivisorClass& c) {
    NefResult out;
    if (c.d1 == 1) {
        long long v = c.a - static_cast<long long>(c.d2) * c.b;
        out.coords = {v};
        out.is_nef = v >= 0;
        return out;
    }
    Mat<Rat> m = l_basis_matrix(c.d1, c.d2);
    std::vector<Rat> rhs;
    rhs.push_back(Rat(c.a, 1));
    rhs.push_back(Rat(c.b, 1));
    for (int j = 0; j < c.d1 - 2; ++j) rhs.push_back(Rat(c.m[j], 1));
    auto sol = solve(m, rhs);
    if (!sol) throw DomainError("L-basis failed to span: not a basis?");
    out.is_nef = true;
    for (const auto& x : *sol) {
        if (x.den() != 1) throw DomainError("non-integer L-basis coordinate: basis not unimodular?");
        long long v = static_cast<long long>(x.num().get_si());
        out.coords.push_back(v);
        if (v < 0) out.is_nef = false;
    }
    return out;
}

DivisorClass det_tautological(int d1, int d2, int l) {
    if (l < 0) throw DomainError("negative degree");
    if (l < d1 || l >= d1 + d2) return DivisorClass::zero(d1, d2);
    if (l <= d2 - 1) return DivisorClass::o(d1, d2, -(l - d1 + 1), 0);
    return -class_L(d1, d2, l - d2);
}

AmpleClassResult ample_class(int d1, int d2, int d) {
    if (d < d1 + d2 - 1) throw DomainError("ample_class needs d >= d1+d2-1");
    AmpleClassResult res;
    long long w = static_cast<long long>(d2 - d1) * (d2 - d1 + 1) / 2;
    DivisorClass by_product = class_L(d1, d2, -1) * w;
    for (int i = 0; i <= d1 - 2; ++i) by_product = by_product + class_L(d1, d2, i);
    DivisorClass by_taut = DivisorClass::zero(d1, d2);
    for (int l = 0; l <= d; ++l) by_taut = by_taut - det_tautological(d1, d2, l);
    if (!(by_product == by_taut))
        throw DomainError("ample class: the two computations disagree");
    res.by_product = by_product;
    res.by_tautological = by_taut;
    res.nef = nef_test(by_product);
    res.strictly_interior = true;
    for (long long v : res.nef.coords)
        if (v < 1) res.strictly_interior = false;
    return res;
}

bool effective_cone_contains(int d1, int d2, long long a, long long b) {
    // cone spanned by O(1,0) and O(d2,d1): b >= 0 and d1*a >= d2*b
    return b >= 0 && static_cast<long long>(d1) * a >= static_cast<long long>(d2) * b;
}

MmpTimeline mmp_timeline(int d1, int d2) {
    if (d1 < 1 || d2 <= d1) throw DomainError("mmp_timeline needs 1 <= d1 < d2");
    MmpTimeline t;
    t.d1 = d1;
    t.d2 = d2;
    for (int i = 0; i <= d1 - 2; ++i) {
        MmpModel model;
        model.index = i;
        model.nef_lo = class_L(d1, d2, i - 1);
        model.nef_hi = class_L(d1, d2, i);
        for (int r = 0; r <= i; ++r) {
            MmpStratum s;
            s.d1 = d1 - i + r;
            s.d2 = d2 + i - r;
            s.r = r;
            s.label = "Hbar_{" + std::to_string(s.d1) + "," + std::to_string(s.d2) + "}";
            if (r > 0) s.label += " \\ W_" + std::to_string(r);
            model.strata.push_back(s);
        }
        t.models.push_back(model);
    }
    for (int i = 1; i <= d1 - 2; ++i)
        t.flips.push_back({i, i - 1, i, class_L(d1, d2, i - 1)});
    if (d1 >= 2) {
        t.contracts_delta = true;
        t.final_contraction_class = class_L(d1, d2, d1 - 2);
    }
    for (int i = 0; i <= d1 - 1; ++i) t.final_strata.push_back({d1 - i, d2 + i});
    return t;
}

} // namespace ci2
