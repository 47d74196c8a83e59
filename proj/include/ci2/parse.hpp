#ifndef CI2_PARSE_HPP
#define CI2_PARSE_HPP

#include <map>
#include <string>
#include <vector>

#include "ci2/binary_form.hpp"
#include "ci2/fp.hpp"
#include "ci2/multi_form.hpp"
#include "ci2/ratfunc.hpp"
#include "ci2/rational.hpp"
#include "ci2/upoly.hpp"

namespace ci2 {

// Grammar: terms joined by + and -; a term is
//   [rational or integer coefficient][*]{var^exp}*
// with variables X0..XN and t, e.g. "X0^2 - 3*X0*X1 + 1/2*t*X1^2".
struct PolyTerm {
    Rat coef;
    int texp = 0;
    std::map<int, int> xexp;  // variable index -> exponent
};

struct PolyAst {
    std::vector<PolyTerm> terms;
    int max_var = -1;  // largest X index seen
};

PolyAst parse_poly_text(const std::string& text);

// ---- coefficient injection per domain ----------------------------------

template <class T>
struct is_upoly : std::false_type {};
template <class K0>
struct is_upoly<UPoly<K0>> : std::true_type {
    using base = K0;
};
template <class T>
struct is_ratfunc : std::false_type {};
template <class K0>
struct is_ratfunc<RatFunc<K0>> : std::true_type {
    using base = K0;
};

// Materializes a grammar coefficient c * t^texp in the target domain.
template <class K>
K inject_into(const Rat& c, int texp, const typename K::Ctx& ctx) {
    if constexpr (std::is_same_v<K, Rat>) {
        (void)ctx;
        if (texp != 0) throw DomainError("the field Q has no parameter t");
        return c;
    } else if constexpr (std::is_same_v<K, Fp>) {
        if (texp != 0) throw DomainError("the field F_p has no parameter t");
        Fp num(c.num().get_si() % ctx.p, ctx.p);
        Fp den(c.den().get_si() % ctx.p, ctx.p);
        if (den.is_zero()) throw DomainError("denominator vanishes in F_p");
        return num * den.inv();
    } else if constexpr (is_upoly<K>::value) {
        using K0 = typename is_upoly<K>::base;
        K0 base = inject_into<K0>(c, 0, ctx.base);
        std::vector<K0> v(texp + 1, K0::zero(ctx.base));
        v[texp] = base;
        return K(std::move(v), ctx);
    } else if constexpr (is_ratfunc<K>::value) {
        using K0 = typename is_ratfunc<K>::base;
        return K(inject_into<UPoly<K0>>(c, texp, ctx));
    } else {
        static_assert(std::is_same_v<K, Rat>, "unsupported coefficient domain for the grammar");
    }
}

// ---- materialization ------------------------------------------------------

template <class K, class InjectFn>
BinaryForm<K> binary_form_from_ast(const PolyAst& ast, int degree, const typename K::Ctx& ctx,
                                   InjectFn&& inject) {
    if (ast.max_var > 1) throw DomainError("binary form may only use X0 and X1");
    BinaryForm<K> f(degree, ctx);
    for (const auto& t : ast.terms) {
        int e0 = 0, e1 = 0;
        for (const auto& [v, e] : t.xexp) (v == 0 ? e0 : e1) += e;
        if (e0 + e1 != degree)
            throw DomainError("term degree " + std::to_string(e0 + e1) +
                              " does not match declared degree " + std::to_string(degree));
        f.coeff(e1) += inject(t.coef, t.texp, ctx);
    }
    return f;
}

template <class K, class InjectFn>
MultiForm<K> multi_form_from_ast(const PolyAst& ast, int nvars, int degree,
                                 const typename K::Ctx& ctx, InjectFn&& inject) {
    if (ast.max_var >= nvars) throw DomainError("variable index out of range");
    MultiForm<K> f(nvars, degree, ctx);
    for (const auto& t : ast.terms) {
        std::vector<int> m(nvars, 0);
        int total = 0;
        for (const auto& [v, e] : t.xexp) {
            m[v] += e;
            total += e;
        }
        if (total != degree) throw DomainError("term degree does not match declared degree");
        f.set_coeff(m, f.coeff(m) + inject(t.coef, t.texp, ctx));
    }
    return f;
}

template <class K>
BinaryForm<K> parse_binary_form(const std::string& text, int degree, const typename K::Ctx& ctx) {
    return binary_form_from_ast<K>(parse_poly_text(text), degree, ctx,
                                   [](const Rat& c, int te, const typename K::Ctx& cc) {
                                       return inject_into<K>(c, te, cc);
                                   });
}

template <class K>
MultiForm<K> parse_multi_form(const std::string& text, int nvars, int degree,
                              const typename K::Ctx& ctx) {
    return multi_form_from_ast<K>(parse_poly_text(text), nvars, degree, ctx,
                                  [](const Rat& c, int te, const typename K::Ctx& cc) {
                                      return inject_into<K>(c, te, cc);
                                  });
}

// ---- printing in the same grammar ------------------------------------

// One grammar term per (coefficient, t-power, monomial); expanded so the
// output re-parses even with k[t] coefficients.
std::string print_grammar_terms(const std::vector<std::tuple<std::string, int, std::string>>& terms);

inline std::vector<std::pair<std::string, int>> coefficient_terms(const Rat& c) {
    return {{c.to_string(), 0}};
}
inline std::vector<std::pair<std::string, int>> coefficient_terms(const Fp& c) {
    return {{std::to_string(c.value()), 0}};
}
template <class K>
std::vector<std::pair<std::string, int>> coefficient_terms(const UPoly<K>& c) {
    std::vector<std::pair<std::string, int>> out;
    for (int i = 0; i <= c.degree(); ++i) {
        if (c.coeff(i).is_zero()) continue;
        auto inner = coefficient_terms(c.coeff(i));
        for (auto& [s, te] : inner) out.push_back({s, te + i});
    }
    return out;
}

template <class K>
std::string print_binary_form(const BinaryForm<K>& f) {
    std::vector<std::tuple<std::string, int, std::string>> terms;
    for (int j = 0; j <= f.degree(); ++j) {
        if (f.coeff(j).is_zero()) continue;
        std::string mono;
        int e0 = f.degree() - j;
        if (e0 > 0) mono += "X0" + (e0 > 1 ? "^" + std::to_string(e0) : "");
        if (j > 0) {
            if (!mono.empty()) mono += "*";
            mono += "X1" + (j > 1 ? "^" + std::to_string(j) : "");
        }
        for (const auto& [cs, te] : coefficient_terms(f.coeff(j)))
            terms.push_back({cs, te, mono});
    }
    return print_grammar_terms(terms);
}

template <class K>
std::string print_multi_form(const MultiForm<K>& f) {
    std::vector<std::tuple<std::string, int, std::string>> terms;
    for (const auto& [m, c] : f.terms()) {
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "X" + std::to_string(i) + (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
        }
        for (const auto& [cs, te] : coefficient_terms(c)) terms.push_back({cs, te, mono});
    }
    return print_grammar_terms(terms);
}

} // namespace ci2

#endif
