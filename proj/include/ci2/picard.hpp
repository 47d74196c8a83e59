#ifndef CI2_PICARD_HPP
#define CI2_PICARD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ci2/errors.hpp"

namespace ci2 {

// Integer divisor class O(a,b)(-sum_k m_k E_k) on the iterated blow-up,
// in the basis (O(1,0), O(0,1), E_1..E_{d1-2}); rank d1.  E_{d1-1}, the
// strict transform of the discriminant, is a derived class, not a basis
// element: the last blow-up center is already a divisor.
//
// For d1 = 1 the space is a P^1 of Picard rank 1 and O(l1,l2) is read as
// O(l1 - (d2-d1+1) l2); equality and nef tests apply that convention.
struct DivisorClass {
    int d1 = 0, d2 = 0;
    long long a = 0, b = 0;
    std::vector<long long> m;  // length max(0, d1-2)

    DivisorClass() = default;
    DivisorClass(int d1_, int d2_, long long a_, long long b_, std::vector<long long> m_ = {});

    static DivisorClass o(int d1, int d2, long long l1, long long l2);
    // E_k for 1 <= k <= d1-1 (k = d1-1 expands to the derived class)
    static DivisorClass e(int d1, int d2, int k);
    static DivisorClass zero(int d1, int d2) { return o(d1, d2, 0, 0); }

    DivisorClass operator+(const DivisorClass& x) const;
    DivisorClass operator-(const DivisorClass& x) const;
    DivisorClass operator-() const;
    DivisorClass operator*(long long c) const;
    bool operator==(const DivisorClass& x) const;
    bool is_zero() const;

    std::string to_string() const;

private:
    void check_compatible(const DivisorClass& x) const;
};

// L_i = O(d2-d1+1+i, 1+i)(-sum_{k<=i} (i-k+1) E_k) for 0 <= i <= d1-1,
// L_{-1} = O(1,0).  L_{d1-1} is the zero class.
DivisorClass class_L(int d1, int d2, int i);

// Restriction to E_k = H^_{d1-k,d2+k} x H^_{k,d2-d1+k}: the pair of
// p1- and p2-components, by the blow-up restriction rules.
std::pair<DivisorClass, DivisorClass> restrict_to_E(const DivisorClass& c, int k);

struct NefResult {
    bool is_nef = false;
    std::vector<long long> coords;  // in the basis L_{-1}, L_0, .., L_{d1-2}
};

// Expands c in the L-basis (unimodular) and reads off nefness.
NefResult nef_test(const DivisorClass& c);

// Determinant of the L-basis matrix; +-1 certifies the basis claim.
long long l_basis_det(int d1, int d2);

// The ample class of the Hilbert-scheme polarization, computed two ways:
// the product formula and -sum det(E_l) over 0 <= l <= d.  Throws if the
// two computations disagree; requires d >= d1+d2-1.
struct AmpleClassResult {
    DivisorClass by_product;
    DivisorClass by_tautological;
    NefResult nef;
    bool strictly_interior = false;
};
AmpleClassResult ample_class(int d1, int d2, int d);

// det(E_l) of the degree-l tautological bundle, as a divisor class.
DivisorClass det_tautological(int d1, int d2, int l);

// Effective cone of the base H^_{d1,d2}: generated by O(1,0) and the
// discriminant class O(d2,d1).  Membership test for (a,b)-parts.
bool effective_cone_contains(int d1, int d2, long long a, long long b);

// ---- MMP timeline -----------------------------------------------------

struct MmpStratum {
    int d1, d2;  // the space H^_{d1,d2} the stratum normalizes to
    int r;       // stratum is H^_{d1,d2} minus W_r (r = 0: whole space)
    std::string label;
};

struct MmpModel {
    int index;  // i of H^[i]
    DivisorClass nef_lo;  // L_{i-1}
    DivisorClass nef_hi;  // L_i
    std::vector<MmpStratum> strata;
};

struct MmpFlip {
    int locus;       // flips W_locus
    int from_model;  // H^[locus-1] -> H^[locus]
    int to_model;
    DivisorClass small_contraction_class;  // L_{locus-1}
};

struct MmpTimeline {
    int d1, d2;
    std::vector<MmpModel> models;
    std::vector<MmpFlip> flips;
    bool contracts_delta = false;
    DivisorClass final_contraction_class;          // L_{d1-2} (when d1 >= 2)
    std::vector<std::pair<int, int>> final_strata;  // H_{d1-i, d2+i}, i = 0..d1-1
};

MmpTimeline mmp_timeline(int d1, int d2);

} // namespace ci2

#endif
