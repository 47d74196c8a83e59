// ci2: exact-arithmetic toolkit for pencils of binary forms and their
// parameter space.  Subcommands mirror the library modules; every
// command emits a JSON report and exits 0 on success, 1 when a check
// failed, 2 on usage errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ci2/contraction.hpp"
#include "ci2/curves.hpp"
#include "ci2/deformation.hpp"
#include "ci2/euclid.hpp"
#include "ci2/git.hpp"
#include "ci2/hilbert.hpp"
#include "ci2/parse.hpp"
#include "ci2/picard.hpp"
#include "ci2/suites.hpp"

using nlohmann::ordered_json;
using namespace ci2;

namespace {

struct CommonOpts {
    RunConfig cfg;
    void attach(CLI::App* app, bool need_degrees = true) {
        if (need_degrees) {
            app->add_option("--d1", cfg.d1, "lower degree");
            app->add_option("--d2", cfg.d2, "higher degree");
        }
        app->add_option("--field", cfg.field, "q | fp:P | qt | fpt:P");
        app->add_option("--seed", cfg.seed, "RNG seed (reports replay bit for bit)");
        app->add_option("--trials", cfg.trials, "randomized trial count");
        app->add_option("--ext-bound", cfg.ext_bound, "extension-degree budget for certification");
        app->add_option("--out", cfg.out, "write the JSON report to this path");
    }
};

int emit(const ordered_json& j, const std::string& out, bool pass) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        f << j.dump(2) << "\n";
    }
    return pass ? 0 : 1;
}

ordered_json divisor_json(const DivisorClass& c) {
    ordered_json j;
    j["a"] = c.a;
    j["b"] = c.b;
    j["m"] = c.m;
    j["print"] = c.to_string();
    return j;
}

template <class K>
ordered_json run_euclid(const RunConfig& cfg, const std::string& ftext, const std::string& gtext,
                        const std::string& anchors_text, const typename K::Ctx& ctx, bool& pass) {
    auto F = parse_binary_form<K>(ftext, cfg.d1, ctx);
    auto G = parse_binary_form<K>(gtext, cfg.d2, ctx);
    PencilPoint<K> x(F, G);
    AnchorList<K> anchors;
    if (anchors_text.empty()) {
        anchors = choose_anchors(x);
    } else {
        std::vector<std::pair<K, K>> a;
        std::stringstream ss(anchors_text);
        std::string pair_text;
        while (std::getline(ss, pair_text, ';')) {
            auto comma = pair_text.find(',');
            if (comma == std::string::npos) throw DomainError("anchors look like l0,m0;l1,m1;..");
            auto lam = parse_binary_form<K>(pair_text.substr(0, comma), 0, ctx).coeff(0);
            auto mu = parse_binary_form<K>(pair_text.substr(comma + 1), 0, ctx).coeff(0);
            a.push_back({lam, mu});
        }
        anchors = AnchorList<K>(a);
    }
    auto seq = remainder_sequence(x, anchors);
    bool verified = seq.verify(x);
    pass = verified;
    ordered_json j;
    j["command"] = "euclid";
    j["F"] = print_binary_form(F);
    j["G"] = print_binary_form(G);
    ordered_json ja = ordered_json::array();
    for (int u = 0; u < anchors.size(); ++u)
        ja.push_back({{"lambda", anchors.lambda(u).to_string()}, {"mu", anchors.mu(u).to_string()}});
    j["anchors"] = ja;
    ordered_json jr = ordered_json::array(), jq = ordered_json::array();
    for (const auto& r : seq.R) jr.push_back(print_binary_form(r));
    for (const auto& q : seq.Q) jq.push_back(print_binary_form(q));
    j["R"] = jr;
    j["Q"] = jq;
    j["identities_verified"] = verified;
    j["stratum_index"] = stratum_index(x);
    return j;
}

// deform subcommand over Q or F_p
template <class K>
ordered_json run_deform(const RunConfig& cfg, int k, const std::string& p, const std::string& l,
                        const std::string& h, const std::string& phi, const std::string& gamma,
                        const typename K::Ctx& ctx, bool& pass) {
    DeformationDatum<K> datum(cfg.d1, cfg.d2, k, parse_binary_form<K>(p, cfg.d1 - k, ctx),
                              parse_binary_form<K>(l, k, ctx),
                              parse_binary_form<K>(h, cfg.d2 - cfg.d1 + k, ctx),
                              parse_binary_form<K>(phi, cfg.d1, ctx),
                              parse_binary_form<K>(gamma, cfg.d2, ctx));
    Rng rng(cfg.seed);
    auto anchors = random_deformation_anchors(datum, rng);
    auto rep = verify_deformation_laws(datum, anchors);
    pass = rep.pass;
    ordered_json j;
    j["command"] = "deform";
    j["k"] = k;
    j["pass"] = rep.pass;
    j["val_t"] = rep.val_t;
    ordered_json recs = ordered_json::array();
    for (const auto& r : rep.records)
        recs.push_back({{"law", r.law}, {"index", r.index}, {"status", r.pass ? "pass" : "fail"},
                        {"detail", r.detail}});
    j["laws"] = recs;
    ordered_json s = ordered_json::array();
    for (const auto& si : rep.s) s.push_back(print_binary_form(si));
    j["s"] = s;
    return j;
}

ordered_json mmp_json(const MmpTimeline& t) {
    ordered_json j;
    j["command"] = "mmp";
    j["d1"] = t.d1;
    j["d2"] = t.d2;
    ordered_json models = ordered_json::array();
    for (const auto& m : t.models) {
        ordered_json jm;
        jm["index"] = m.index;
        jm["nef"] = {divisor_json(m.nef_lo), divisor_json(m.nef_hi)};
        ordered_json strata = ordered_json::array();
        for (const auto& s : m.strata) strata.push_back(s.label);
        jm["strata"] = strata;
        models.push_back(jm);
    }
    j["models"] = models;
    ordered_json flips = ordered_json::array();
    for (const auto& f : t.flips)
        flips.push_back({{"locus", "W_" + std::to_string(f.locus)},
                         {"from_model", f.from_model},
                         {"to_model", f.to_model},
                         {"class", divisor_json(f.small_contraction_class)}});
    j["flips"] = flips;
    if (t.contracts_delta) {
        j["divisorial_contraction"] = {{"locus", "Delta = W_" + std::to_string(t.d1 - 1)},
                                       {"class", divisor_json(t.final_contraction_class)}};
    } else {
        j["divisorial_contraction"] = nullptr;
    }
    ordered_json strata = ordered_json::array();
    for (const auto& [a, b] : t.final_strata)
        strata.push_back("H_{" + std::to_string(a) + "," + std::to_string(b) + "}");
    j["final_strata"] = strata;
    return j;
}

template <class K>
ordered_json curve_certificate_json(const CompletenessCertificate<K>& cert) {
    ordered_json j;
    j["rho_chartA"] = cert.rho_a.to_string();
    j["rho_chartB"] = cert.rho_b.to_string();
    switch (cert.status) {
        case CertStatus::certified: j["status"] = "certified"; break;
        case CertStatus::counterexample: j["status"] = "counterexample"; break;
        case CertStatus::inconclusive: j["status"] = "inconclusive"; break;
    }
    ordered_json pts = ordered_json::array();
    for (const auto& p : cert.points) {
        ordered_json jp;
        jp["chart"] = p.chart;
        jp["location"] = p.location;
        jp["status"] = p.ok ? "interior" : "degenerate";
        if (!p.gcd_witness.empty()) jp["gcd_witness"] = p.gcd_witness;
        pts.push_back(jp);
    }
    j["points"] = pts;
    if (!cert.inconclusive_factor.empty()) j["inconclusive_factor"] = cert.inconclusive_factor;
    return j;
}

template <class K>
FamilyOverLine<K> family_from_json(const ordered_json& j, const typename UPoly<K>::Ctx& pc) {
    int d1 = j.at("d1").get<int>();
    int d2 = j.at("d2").get<int>();
    auto parse_chart_form = [&](const std::string& text, int deg) {
        return parse_binary_form<UPoly<K>>(text, deg, pc);
    };
    auto fa = parse_chart_form(j.at("chartA").at("F").get<std::string>(), d1);
    auto ga = parse_chart_form(j.at("chartA").at("G").get<std::string>(), d2);
    if (j.contains("chartB")) {
        auto fb = parse_chart_form(j.at("chartB").at("F").get<std::string>(), d1);
        auto gb = parse_chart_form(j.at("chartB").at("G").get<std::string>(), d2);
        return family_from_charts(fa, ga, fb, gb);
    }
    return family_from_affine(fa, ga);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on the parameter space of codimension-2 complete intersections"};
    app.require_subcommand(1);

    CommonOpts runopts;
    std::string suite;
    auto* run = app.add_subcommand("run", "randomized invariant suite for one module");
    run->add_option("--suite", suite, "one of: algebra, euclid, deformation, hilbert, picard, contraction, git, curves")->required();
    runopts.attach(run);

    CommonOpts eopts;
    std::string etext_f, etext_g, etext_anchors;
    auto* euclid_cmd = app.add_subcommand("euclid", "anchored remainder sequence of a pencil point");
    euclid_cmd->add_option("--f", etext_f, "degree-d1 form")->required();
    euclid_cmd->add_option("--g", etext_g, "degree-d2 form")->required();
    euclid_cmd->add_option("--anchors", etext_anchors, "l0,m0;l1,m1;... (default: greedy)");
    eopts.attach(euclid_cmd);

    CommonOpts dopts;
    int dk = 1;
    std::string dp, dl, dh, dphi, dgamma;
    auto* deform_cmd = app.add_subcommand("deform", "verify the t-deformation laws for a datum");
    deform_cmd->add_option("--k", dk, "stratum index of the special fiber")->required();
    deform_cmd->add_option("--P", dp, "P, degree d1-k")->required();
    deform_cmd->add_option("--L", dl, "L, degree k")->required();
    deform_cmd->add_option("--H", dh, "H, degree d2-d1+k")->required();
    deform_cmd->add_option("--Phi", dphi, "Phi, degree d1")->required();
    deform_cmd->add_option("--Gamma", dgamma, "Gamma, degree d2")->required();
    dopts.attach(deform_cmd);

    CommonOpts hopts;
    std::string hf_f, hf_g;
    auto* hf_cmd = app.add_subcommand("hf", "Hilbert function table, closed form vs linear algebra");
    hf_cmd->add_option("--f", hf_f, "optional degree-d1 form");
    hf_cmd->add_option("--g", hf_g, "optional degree-d2 form");
    hopts.attach(hf_cmd);

    CommonOpts bopts;
    int bk = 1;
    std::string bzf, bzg, bwl, bwh;
    auto* boundary_cmd = app.add_subcommand("boundary", "boundary ideal e_k(Z, W) and its recovery");
    boundary_cmd->add_option("--k", bk)->required();
    boundary_cmd->add_option("--zf", bzf, "F_Z, degree d1-k")->required();
    boundary_cmd->add_option("--zg", bzg, "G_Z, degree d2+k")->required();
    boundary_cmd->add_option("--wl", bwl, "L, degree k")->required();
    boundary_cmd->add_option("--wh", bwh, "H, degree d2-d1+k")->required();
    bopts.attach(boundary_cmd);

    CommonOpts popts;
    std::string pclass;
    auto* picard_cmd = app.add_subcommand("picard", "nef test of a divisor class");
    picard_cmd->add_option("--class", pclass, "a,b,m1,m2,... in the standard basis");
    popts.attach(picard_cmd);

    CommonOpts mopts;
    auto* mmp_cmd = app.add_subcommand("mmp", "the MMP timeline of the parameter space");
    mopts.attach(mmp_cmd);

    CommonOpts sopts;
    std::string sf, sg;
    int snvars = 2, sframes = -1;
    auto* sigma_cmd = app.add_subcommand("sigma", "first-contraction sigma vector of a pencil point");
    sigma_cmd->add_option("--f", sf)->required();
    sigma_cmd->add_option("--g", sg)->required();
    sigma_cmd->add_option("--nvars", snvars, "number of variables N+1");
    sigma_cmd->add_option("--frames", sframes, "frame count (default 2(N+1))");
    sopts.attach(sigma_cmd);

    CommonOpts fopts;
    std::string ff1, fg1, ff2, fg2;
    int fnvars = 2;
    auto* fiber_cmd = app.add_subcommand("fiber", "do two points share the contraction image?");
    fiber_cmd->add_option("--f1", ff1)->required();
    fiber_cmd->add_option("--g1", fg1)->required();
    fiber_cmd->add_option("--f2", ff2)->required();
    fiber_cmd->add_option("--g2", fg2)->required();
    fiber_cmd->add_option("--nvars", fnvars, "number of variables N+1");
    fopts.attach(fiber_cmd);

    CommonOpts gopts;
    std::string gf, gmatrix, gweights;
    int gn = 3;
    std::string galpha = "0", gbeta = "1";
    long gbound = 0;
    auto* git_cmd = app.add_subcommand("git-mu", "Hilbert-Mumford weight of (F, M)");
    git_cmd->add_option("--n", gn, "N: F in N variables, M of shape (N+1) x N");
    git_cmd->add_option("--f", gf, "degree-d2 form in X0..X(N-1)")->required();
    git_cmd->add_option("--matrix", gmatrix, "rows a,b,..;c,d,..;...")->required();
    git_cmd->add_option("--weights", gweights, "w1,..,wN sorted, sum 0");
    git_cmd->add_option("--alpha", galpha, "polarization weight of the F factor");
    git_cmd->add_option("--beta", gbeta, "polarization weight of the M factor");
    git_cmd->add_option("--destabilize", gbound, "search a destabilizing 1-PS up to this weight bound");
    gopts.attach(git_cmd);

    CommonOpts copts;
    auto* curve_cmd = app.add_subcommand("curve", "complete one-parameter families");
    curve_cmd->require_subcommand(1);
    int cd1 = 2;
    bool ccertify = false;
    auto* cexp = curve_cmd->add_subcommand("explicit", "the d2 = d1+1 family");
    cexp->add_option("--d1", cd1)->required();
    cexp->add_flag("--certify", ccertify);
    copts.attach(cexp, false);
    long cp = 2;
    int cd2 = 2;
    bool fcertify = false;
    auto* cfro = curve_cmd->add_subcommand("frobenius", "p-th power family over F_p");
    cfro->add_option("--p", cp)->required();
    cfro->add_option("--d2", cd2)->required();
    cfro->add_flag("--certify", fcertify);
    copts.attach(cfro, false);
    std::string cinput;
    auto* ccer = curve_cmd->add_subcommand("certify", "certify a family given as JSON");
    ccer->add_option("--input", cinput, "family file")->required();
    copts.attach(ccer, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run) {
            auto rep = run_suite(runopts.cfg, suite);
            return emit(rep.to_json(), runopts.cfg.out, rep.all_pass());
        }
        if (*euclid_cmd) {
            auto fs = parse_field_spec(eopts.cfg.field);
            bool pass = false;
            ordered_json j;
            if (fs.kind == FieldKind::q)
                j = run_euclid<Rat>(eopts.cfg, etext_f, etext_g, etext_anchors, {}, pass);
            else if (fs.kind == FieldKind::fp)
                j = run_euclid<Fp>(eopts.cfg, etext_f, etext_g, etext_anchors, {fs.p}, pass);
            else
                throw DomainError("euclid runs over q or fp:P");
            return emit(j, eopts.cfg.out, pass);
        }
        if (*deform_cmd) {
            auto fs = parse_field_spec(dopts.cfg.field);
            bool pass = false;
            ordered_json j;
            if (fs.kind == FieldKind::q)
                j = run_deform<Rat>(dopts.cfg, dk, dp, dl, dh, dphi, dgamma, {}, pass);
            else if (fs.kind == FieldKind::fp)
                j = run_deform<Fp>(dopts.cfg, dk, dp, dl, dh, dphi, dgamma, {fs.p}, pass);
            else
                throw DomainError("deform runs over q or fp:P");
            return emit(j, dopts.cfg.out, pass);
        }
        if (*hf_cmd) {
            const auto& cfg = hopts.cfg;
            cfg.validate();
            ordered_json j;
            j["command"] = "hf";
            j["d1"] = cfg.d1;
            j["d2"] = cfg.d2;
            ordered_json table = ordered_json::array();
            bool pass = true;
            for (int l = 0; l <= cfg.d1 + cfg.d2 + 2; ++l) {
                ordered_json row;
                row["l"] = l;
                row["hf"] = hf_closed_form(cfg.d1, cfg.d2, l);
                if (!hf_f.empty() && !hf_g.empty()) {
                    auto F = parse_binary_form<Rat>(hf_f, cfg.d1, {});
                    auto G = parse_binary_form<Rat>(hf_g, cfg.d2, {});
                    long dim = ideal_piece(F, G, l).rows();
                    row["ideal_piece_dim"] = dim;
                    if (gcd_degree(F, G) == 0 && dim != hf_closed_form(cfg.d1, cfg.d2, l)) pass = false;
                }
                table.push_back(row);
            }
            j["table"] = table;
            return emit(j, cfg.out, pass);
        }
        if (*boundary_cmd) {
            const auto& cfg = bopts.cfg;
            cfg.validate();
            PencilPoint<Rat> z(parse_binary_form<Rat>(bzf, cfg.d1 - bk, {}),
                               parse_binary_form<Rat>(bzg, cfg.d2 + bk, {}));
            PencilPoint<Rat> w(parse_binary_form<Rat>(bwl, bk, {}),
                               parse_binary_form<Rat>(bwh, cfg.d2 - cfg.d1 + bk, {}));
            auto I = boundary_ideal(bk, z, w, cfg.d1, cfg.d2);
            auto rec = recover_from_boundary(I, Rat::Ctx{});
            bool pass = I.has_hilbert_function_hf() && I.closed_under_multiplication() &&
                        rec.k == bk && proportional(rec.f_z, z.F());
            ordered_json j;
            j["command"] = "boundary";
            j["k"] = bk;
            ordered_json dims = ordered_json::array();
            for (int l = 0; l <= I.bound; ++l) dims.push_back(I.dim(l));
            j["dims"] = dims;
            j["hilbert_function_ok"] = I.has_hilbert_function_hf();
            j["ideal_closure_ok"] = I.closed_under_multiplication();
            j["recovered_k"] = rec.k;
            j["recovered_F"] = print_binary_form(rec.f_z);
            j["round_trip_ok"] = pass;
            return emit(j, cfg.out, pass);
        }
        if (*picard_cmd) {
            const auto& cfg = popts.cfg;
            cfg.validate();
            ordered_json j;
            j["command"] = "picard";
            j["l_basis_det"] = l_basis_det(cfg.d1, cfg.d2);
            auto amp = ample_class(cfg.d1, cfg.d2, cfg.d1 + cfg.d2 - 1);
            j["ample"] = divisor_json(amp.by_product);
            j["ample_interior"] = amp.strictly_interior;
            bool pass = true;
            if (!pclass.empty()) {
                std::vector<long long> vals;
                std::stringstream ss(pclass);
                std::string tok;
                while (std::getline(ss, tok, ',')) vals.push_back(std::stoll(tok));
                if (vals.size() != static_cast<std::size_t>(std::max(2, cfg.d1)))
                    throw DomainError("class needs d1 coordinates (a,b,m1,..)");
                DivisorClass c(cfg.d1, cfg.d2, vals[0], vals.size() > 1 ? vals[1] : 0,
                               std::vector<long long>(vals.begin() + std::min<std::size_t>(2, vals.size()), vals.end()));
                auto nef = nef_test(c);
                j["class"] = divisor_json(c);
                j["is_nef"] = nef.is_nef;
                j["l_basis_coords"] = nef.coords;
            }
            return emit(j, cfg.out, pass);
        }
        if (*mmp_cmd) {
            const auto& cfg = mopts.cfg;
            cfg.validate();
            return emit(mmp_json(mmp_timeline(cfg.d1, cfg.d2)), cfg.out, true);
        }
        if (*sigma_cmd) {
            const auto& cfg = sopts.cfg;
            auto F = parse_multi_form<Rat>(sf, snvars, cfg.d1, {});
            auto G = parse_multi_form<Rat>(sg, snvars, cfg.d2, {});
            MultiPencil<Rat> x(F, G);
            Rng rng(cfg.seed);
            auto frames = default_frames(x, rng, sframes);
            auto v = sigma_vector(x, frames);
            ordered_json j;
            j["command"] = "sigma";
            j["frames"] = static_cast<int>(frames.size());
            ordered_json blocks = ordered_json::array();
            for (const auto& b : v.blocks) {
                ordered_json jb = ordered_json::array();
                for (const auto& c : b) jb.push_back(c.to_string());
                blocks.push_back(jb);
            }
            j["blocks"] = blocks;
            j["nonzero"] = !v.is_zero();
            return emit(j, cfg.out, !v.is_zero());
        }
        if (*fiber_cmd) {
            const auto& cfg = fopts.cfg;
            auto F1 = parse_multi_form<Rat>(ff1, fnvars, cfg.d1, {});
            auto G1 = parse_multi_form<Rat>(fg1, fnvars, cfg.d2, {});
            auto F2 = parse_multi_form<Rat>(ff2, fnvars, cfg.d1, {});
            auto G2 = parse_multi_form<Rat>(fg2, fnvars, cfg.d2, {});
            MultiPencil<Rat> x(F1, G1), y(F2, G2);
            Rng rng(cfg.seed);
            auto frames = shared_frames(x, y, rng);
            bool same = fiber_probe(x, y, frames);
            ordered_json j;
            j["command"] = "fiber";
            j["same_image"] = same;
            return emit(j, cfg.out, true);
        }
        if (*git_cmd) {
            const auto& cfg = gopts.cfg;
            auto F = parse_multi_form<Rat>(gf, gn, cfg.d2, {});
            Mat<Rat> M(gn + 1, gn, {});
            {
                std::stringstream rows(gmatrix);
                std::string row;
                int i = 0;
                while (std::getline(rows, row, ';')) {
                    std::stringstream cols(row);
                    std::string cell;
                    int jx = 0;
                    while (std::getline(cols, cell, ',')) M(i, jx++) = Rat(std::stol(cell), 1);
                    ++i;
                }
            }
            GitPoint<Rat> x(F, M);
            Rat alpha = parse_binary_form<Rat>(galpha, 0, {}).coeff(0);
            Rat beta = parse_binary_form<Rat>(gbeta, 0, {}).coeff(0);
            ordered_json j;
            j["command"] = "git-mu";
            if (!gweights.empty()) {
                std::vector<long> w;
                std::stringstream ss(gweights);
                std::string tok;
                while (std::getline(ss, tok, ',')) w.push_back(std::stol(tok));
                OnePS<Rat> lam(w, Mat<Rat>::identity(gn, {}));
                j["deg_lambda"] = deg_lambda(F, lam);
                j["mu_matrix"] = mu_matrix(x, lam);
                j["mu"] = mu_weight(x, lam, alpha, beta).to_string();
            }
            if (gbound > 0) {
                auto lam = destabilize(x, alpha, beta, gbound);
                if (lam) {
                    j["destabilizer_weights"] = lam->weights;
                    j["destabilizer_mu"] = mu_weight(x, *lam, alpha, beta).to_string();
                } else {
                    j["destabilizer_weights"] = nullptr;  // not a semistability proof
                }
            }
            return emit(j, cfg.out, true);
        }
        if (*curve_cmd) {
            const auto& cfg = copts.cfg;
            ordered_json j;
            j["command"] = "curve";
            if (*cexp) {
                auto fam = explicit_family<Rat>(cd1, {});
                j["family"] = "explicit";
                j["d1"] = cd1;
                j["chartA"] = {{"F", print_binary_form(fam.FA)}, {"G", print_binary_form(fam.GA)}};
                j["chartB"] = {{"F", print_binary_form(fam.FB)}, {"G", print_binary_form(fam.GB)}};
                bool pass = true;
                if (ccertify) {
                    auto cert = certify_complete(fam, cfg.ext_bound);
                    j["certificate"] = curve_certificate_json(cert);
                    pass = cert.certified();
                }
                return emit(j, cfg.out, pass);
            }
            if (*cfro) {
                auto fam = frobenius_family(cp, cd2, Fp::Ctx{cp});
                j["family"] = "frobenius";
                j["p"] = cp;
                j["d2"] = cd2;
                j["chartA"] = {{"F", print_binary_form(fam.FA)}, {"G", print_binary_form(fam.GA)}};
                j["chartB"] = {{"F", print_binary_form(fam.FB)}, {"G", print_binary_form(fam.GB)}};
                bool pass = true;
                if (fcertify) {
                    auto cert = certify_complete(fam, cfg.ext_bound);
                    j["certificate"] = curve_certificate_json(cert);
                    pass = cert.certified();
                }
                return emit(j, cfg.out, pass);
            }
            if (*ccer) {
                std::ifstream in(cinput);
                if (!in) throw DomainError("cannot open " + cinput);
                ordered_json spec = ordered_json::parse(in);
                std::string field = spec.value("field", "q");
                auto fs = parse_field_spec(field);
                if (fs.kind == FieldKind::q) {
                    typename UPoly<Rat>::Ctx pc{{}, "t"};
                    auto fam = family_from_json<Rat>(spec, pc);
                    auto cert = certify_complete(fam, cfg.ext_bound);
                    j["certificate"] = curve_certificate_json(cert);
                    return emit(j, cfg.out, cert.certified());
                }
                if (fs.kind == FieldKind::fp) {
                    typename UPoly<Fp>::Ctx pc{{fs.p}, "t"};
                    auto fam = family_from_json<Fp>(spec, pc);
                    auto cert = certify_complete(fam, cfg.ext_bound);
                    j["certificate"] = curve_certificate_json(cert);
                    return emit(j, cfg.out, cert.certified());
                }
                throw DomainError("curve certify runs over q or fp:P");
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.pos << ": " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
