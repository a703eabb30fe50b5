// Command-line front end: rho, classify, margins, family, gram, ksdet, oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "slmn/slmn.hpp"

using json = nlohmann::json;
using namespace slmn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string sig = "";
    std::string system = "";
    std::string weight;
    std::string a;
    std::string b;
    std::string lambda;
    std::string x;
    std::string sweep;
    std::string eta;
    std::string variant;
    std::string ks_norm = "coroot";
    int depth = 3;
    int max_depth = 4;
    bool psl = false;
    bool json_out = false;
    bool table_out = false;
};

Signature parse_sig(const std::string& text) {
    Coords v = parse_rational_list(text);
    if (v.size() != 3) throw Error(ErrorCode::Parse, "--sig expects p,q,n");
    for (const auto& c : v)
        if (!is_integer(c) || c < 0) throw Error(ErrorCode::Parse, "--sig entries must be non-negative integers");
    auto as = [](const Rational& r) { return static_cast<std::size_t>(boost::multiprecision::numerator(r)); };
    return make_signature(as(v[0]), as(v[1]), as(v[2]));
}

PositiveSystemKind parse_kind(const std::string& text, const Signature& sig) {
    if (text.empty()) return sig.compact() ? PositiveSystemKind::Standard : PositiveSystemKind::NonStandard;
    if (text == "standard") return PositiveSystemKind::Standard;
    if (text == "antistandard") return PositiveSystemKind::AntiStandard;
    if (text == "nonstandard") return PositiveSystemKind::NonStandard;
    throw Error(ErrorCode::Parse, "unknown --system '" + text + "'");
}

OmegaVariant parse_variant(const std::string& text, const Signature& sig) {
    if (text.empty()) return default_variant(sig);
    if (text == "plus") return OmegaVariant::Plus;
    if (text == "minus") return OmegaVariant::Minus;
    if (text == "minus_plus") return OmegaVariant::MinusPlus;
    if (text == "plus_minus") return OmegaVariant::PlusMinus;
    throw Error(ErrorCode::Parse, "unknown --omega '" + text + "'");
}

std::vector<long> parse_ints(const std::string& text) {
    std::vector<long> out;
    if (text.empty()) return out;
    for (const auto& r : parse_rational_list(text)) {
        if (!is_integer(r)) throw Error(ErrorCode::Parse, "expected integers in '" + text + "'");
        out.push_back(static_cast<long>(boost::multiprecision::numerator(r)));
    }
    return out;
}

// --a/--b accept the short forms (a_2.., ..b_{n-1}) or the full tuples including the fixed zeros.
FDFamily fd_family(const Options& o, const Signature& sig, const Rational& x) {
    FDFamily f{sig.m, sig.n, parse_ints(o.a), parse_ints(o.b), x};
    if (f.a.size() == sig.m) {
        if (f.a.front() != 0) throw Error(ErrorCode::InvalidFamily, "full --a must start with a_1 = 0");
        f.a.erase(f.a.begin());
    }
    if (f.b.size() == sig.n) {
        if (f.b.back() != 0) throw Error(ErrorCode::InvalidFamily, "full --b must end with b_n = 0");
        f.b.pop_back();
    }
    validate(f);
    return f;
}

IFDFamily ifd_family(const Options& o, const Signature& sig, const Rational& x) {
    IFDFamily f{sig.p, sig.q, sig.n, parse_ints(o.a), parse_ints(o.b), Rational(0), x};
    if (!o.lambda.empty()) f.lambda = parse_rational(o.lambda);
    if (f.a.size() == sig.m) {
        if (f.a.front() != 0 || f.a.back() != 0) throw Error(ErrorCode::InvalidFamily, "full --a needs a_1 = a_m = 0");
        f.a = std::vector<long>(f.a.begin() + 1, f.a.end() - 1);
    }
    if (f.b.size() == sig.n) {
        if (f.b.back() != 0) throw Error(ErrorCode::InvalidFamily, "full --b must end with b_n = 0");
        f.b.pop_back();
    }
    validate(f);
    return f;
}

Weight family_point(const Options& o, const Signature& sig, const Rational& x) {
    return sig.compact() ? family_weight(fd_family(o, sig, x)) : family_weight(ifd_family(o, sig, x));
}

// Explicit --weight wins; otherwise the family parameters at --x.
Weight resolve_weight(const Options& o, const Signature& sig) {
    if (!o.weight.empty()) {
        Weight w = parse_weight(o.weight);
        require_shape(w, sig);
        return w;
    }
    if (o.x.empty()) throw Error(ErrorCode::Parse, "need --weight or family parameters with --x");
    return family_point(o, sig, parse_rational(o.x));
}

std::vector<Rational> sweep_points(const std::string& text) {
    auto parts = detail::split(text, ':');
    if (parts.size() != 3) throw Error(ErrorCode::Parse, "--sweep expects from:to:step");
    Rational from = parse_rational(parts[0]), to = parse_rational(parts[1]), step = parse_rational(parts[2]);
    if (step <= 0) throw Error(ErrorCode::Parse, "--sweep step must be positive");
    std::vector<Rational> out;
    for (Rational x = from; x <= to; x += step) out.push_back(x);
    return out;
}

json verdict_json(const Verdict& v) {
    json reasons = json::array();
    for (const auto& r : v.reasons)
        reasons.push_back({{"condition", r.condition},
                           {"root", r.root ? json(to_string(*r.root)) : json(nullptr)},
                           {"margin", r.margin ? json(to_string(*r.margin)) : json(nullptr)}});
    return {{"unitarizable", v.unitarizable}, {"case", case_name(v.case_)}, {"reasons", reasons}};
}

std::string reasons_text(const Verdict& v) {
    std::string s;
    for (const auto& r : v.reasons) {
        if (!s.empty()) s += "; ";
        s += r.condition;
        if (r.root) s += " " + to_string(*r.root);
        if (r.margin) s += "=" + to_string(*r.margin);
    }
    return s;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_string(v));
        rows.push_back(r);
    }
    return rows;
}

Coords resolve_eta(const Options& o, const Signature& sig) {
    if (o.eta.empty()) throw Error(ErrorCode::Parse, "need --eta");
    if (o.eta.find('|') != std::string::npos) {
        Weight w = parse_weight(o.eta);
        require_shape(w, sig);
        return w.coords;
    }
    // a sum of roots such as "e1-d1+e2-d2" is not supported; a single root name is
    return parse_root(sig, o.eta).as_coords();
}

int cmd_rho(const Options& o) {
    Signature sig = parse_sig(o.sig);
    PositiveSystem ps = build_positive_system(sig, parse_kind(o.system, sig));
    if (o.table_out) {
        std::cout << to_string(ps.rho) << "\n";
        return kExitOk;
    }
    json odd = json::array();
    for (const auto& r : ps.odd_positive) odd.push_back(to_string(r));
    std::cout << json{{"rho", to_string(ps.rho)},
                      {"rho0", to_string(ps.rho0)},
                      {"rho1", to_string(ps.rho1)},
                      {"system", kind_name(*ps.kind)},
                      {"odd_positive", odd}}
                     .dump(2)
              << "\n";
    return kExitOk;
}

int cmd_classify(const Options& o) {
    Signature sig = parse_sig(o.sig);
    Weight w = resolve_weight(o, sig);
    Verdict v = classify(w, sig, o.psl);
    if (o.table_out) {
        std::cout << to_string(w) << "  " << (v.unitarizable ? "unitarizable" : "not unitarizable") << "  "
                  << reasons_text(v) << "\n";
        return kExitOk;
    }
    json out = verdict_json(v);
    out["weight"] = to_string(w);
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_margins(const Options& o) {
    Signature sig = parse_sig(o.sig);
    Weight w = resolve_weight(o, sig);
    PositiveSystem ps = build_positive_system(sig, parse_kind(o.system, sig));
    json rows = json::array();
    for (const auto& a : ps.odd_positive) {
        Rational mg = dirac_margin(w, a, ps);
        rows.push_back({{"root", to_string(a)}, {"margin", to_string(mg)}});
        if (o.table_out) std::cout << to_string(a) << "\t" << to_string(mg) << "\n";
    }
    if (o.table_out) return kExitOk;
    std::cout << json{{"weight", to_string(w)},
                      {"system", kind_name(*ps.kind)},
                      {"casimir", to_string(casimir_eigenvalue(w, ps))},
                      {"typical", is_typical(w, ps)},
                      {"margins", rows}}
                     .dump(2)
              << "\n";
    return kExitOk;
}

int cmd_family(const Options& o) {
    Signature sig = parse_sig(o.sig);
    std::vector<Rational> xs = o.sweep.empty() ? std::vector<Rational>{parse_rational(o.x.empty() ? "0" : o.x)}
                                               : sweep_points(o.sweep);
    json rows = json::array();
    json th;
    if (sig.compact()) {
        auto t = thresholds(fd_family(o, sig, xs.front()));
        th = {{"x_min", to_string(t.x_min)}, {"x_max", to_string(t.x_max)}};
    } else {
        auto t = thresholds(ifd_family(o, sig, xs.front()));
        th = {{"xL_min", to_string(t.xL_min)},
              {"xL_max", to_string(t.xL_max)},
              {"xR_min", to_string(t.xR_min)},
              {"xR_max", to_string(t.xR_max)}};
    }
    if (o.table_out) std::cout << "x\tweight\tunitarizable\treasons\n";
    for (const auto& x : xs) {
        Weight w = family_point(o, sig, x);
        Verdict v = classify(w, sig, o.psl);
        if (o.table_out) {
            std::cout << to_string(x) << "\t" << to_string(w) << "\t" << (v.unitarizable ? "yes" : "no") << "\t"
                      << reasons_text(v) << "\n";
            continue;
        }
        json row = verdict_json(v);
        row["x"] = to_string(x);
        row["weight"] = to_string(w);
        rows.push_back(row);
    }
    if (!o.table_out) std::cout << json{{"thresholds", th}, {"points", rows}}.dump(2) << "\n";
    return kExitOk;
}

int cmd_gram(const Options& o) {
    Signature sig = parse_sig(o.sig);
    Weight w = resolve_weight(o, sig);
    PositiveSystem ps = build_positive_system(sig, parse_kind(o.system, sig));
    OmegaVariant var = parse_variant(o.variant, sig);
    GramMatrix g = gram(w, resolve_eta(o, sig), sig, ps, var);
    bool psd = is_psd(g.entries);
    if (o.table_out) {
        for (std::size_t i = 0; i < g.dim(); ++i) {
            std::cout << g.basis_labels[i] << "\t";
            for (const auto& v : g.entries[i]) std::cout << to_string(v) << "\t";
            std::cout << "\n";
        }
        std::cout << "psd=" << (psd ? "yes" : "no") << " rank=" << rank(g.entries) << "\n";
        return kExitOk;
    }
    std::cout << json{{"weight", to_string(w)},
                      {"eta", to_string(Weight(sig.m, Coords(g.eta.begin(), g.eta.end())))},
                      {"omega", variant_name(var)},
                      {"basis", g.basis_labels},
                      {"entries", matrix_json(g.entries)},
                      {"psd", psd},
                      {"rank", rank(g.entries)},
                      {"det", to_string(determinant(g.entries))}}
                     .dump(2)
              << "\n";
    return kExitOk;
}

int cmd_ksdet(const Options& o) {
    Signature sig = parse_sig(o.sig);
    Weight w = resolve_weight(o, sig);
    PositiveSystem ps = build_positive_system(sig, parse_kind(o.system, sig));
    KSNormalization norm;
    if (o.ks_norm == "coroot") norm = KSNormalization::Coroot;
    else if (o.ks_norm == "printed") norm = KSNormalization::Printed;
    else throw Error(ErrorCode::Parse, "unknown --ks-norm '" + o.ks_norm + "'");
    KSDeterminant d = ks_determinant(w, resolve_eta(o, sig), ps, norm);
    json factors = json::array();
    for (const auto& f : d.factors)
        factors.push_back({{"root", to_string(f.root)},
                           {"r", f.r},
                           {"base", to_string(f.base)},
                           {"exponent", f.exponent.str()}});
    if (o.table_out) {
        for (const auto& f : d.factors)
            std::cout << to_string(f.root) << " r=" << f.r << "\t(" << to_string(f.base) << ")^" << f.exponent << "\n";
        std::cout << "value=" << to_string(d.value) << "\n";
        return kExitOk;
    }
    std::cout << json{{"factors", factors}, {"value", to_string(d.value)}}.dump(2) << "\n";
    return kExitOk;
}

int cmd_oracle(const Options& o) {
    Signature sig = parse_sig(o.sig);
    if (o.depth < 1 || o.depth > o.max_depth)
        throw Error(ErrorCode::Parse, "--depth must lie in 1.." + std::to_string(o.max_depth));
    PositiveSystem ps = build_positive_system(sig, sig.compact() ? PositiveSystemKind::Standard
                                                                 : PositiveSystemKind::NonStandard);
    OmegaVariant var = default_variant(sig);
    std::vector<Weight> points;
    if (!o.sweep.empty()) {
        for (const auto& x : sweep_points(o.sweep)) points.push_back(family_point(o, sig, x));
    } else {
        points.push_back(resolve_weight(o, sig));
    }
    bool all_agree = true;
    json rows = json::array();
    for (const auto& w : points) {
        Verdict v = classify(w, sig, o.psl);
        OracleResult r = oracle(w, ps, var, o.depth);
        bool agree = v.unitarizable == r.all_psd;
        all_agree = all_agree && agree;
        json row = {{"weight", to_string(w)},
                    {"unitarizable", v.unitarizable},
                    {"gram_psd", r.all_psd},
                    {"agree", agree},
                    {"blocks", r.blocks}};
        row["witness_eta"] = r.witness ? json(to_string(Weight(sig.m, Coords(r.witness->begin(), r.witness->end()))))
                                       : json(nullptr);
        if (o.table_out)
            std::cout << to_string(w) << "\tclassify=" << (v.unitarizable ? "yes" : "no")
                      << "\tpsd=" << (r.all_psd ? "yes" : "no") << (agree ? "" : "\tDISAGREE") << "\n";
        rows.push_back(row);
    }
    if (!o.table_out) std::cout << json{{"depth", o.depth}, {"agree", all_agree}, {"points", rows}}.dump(2) << "\n";
    return all_agree ? kExitOk : kExitDisagree;
}

void add_common(CLI::App* cmd, Options& o, bool family, bool eta) {
    cmd->add_option("--sig", o.sig, "real form p,q,n (m = p + q)")->required();
    cmd->add_option("--system", o.system, "standard | antistandard | nonstandard");
    cmd->add_option("--weight", o.weight, "highest weight \"l1,..,lm|u1,..,un\"");
    if (family) {
        cmd->add_option("--a", o.a, "family a-parameters, comma separated");
        cmd->add_option("--b", o.b, "family b-parameters, comma separated");
        cmd->add_option("--lambda", o.lambda, "continuous su(p,q) parameter");
        cmd->add_option("--x", o.x, "family parameter x");
        cmd->add_option("--sweep", o.sweep, "from:to:step over x");
    }
    if (eta) {
        cmd->add_option("--eta", o.eta, "depth weight: a tuple or a root name such as e2-d1");
        cmd->add_option("--omega", o.variant, "plus | minus | minus_plus | plus_minus");
    }
    cmd->add_flag("--psl", o.psl, "impose the psl(n|n) supertrace condition");
    auto* j = cmd->add_flag("--json", o.json_out, "JSON output (default)");
    auto* t = cmd->add_flag("--table", o.table_out, "plain table output");
    j->excludes(t);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unitarity of highest weight sl(m|n) supermodules"};
    app.require_subcommand(1);
    Options o;

    auto* rho = app.add_subcommand("rho", "Weyl vectors of a positive system");
    add_common(rho, o, false, false);
    auto* cls = app.add_subcommand("classify", "classify one highest weight");
    add_common(cls, o, true, false);
    auto* mar = app.add_subcommand("margins", "(Lambda+rho, alpha) for the odd positive roots");
    add_common(mar, o, true, false);
    auto* fam = app.add_subcommand("family", "classify a one-parameter family over an x-grid");
    add_common(fam, o, true, false);
    auto* gr = app.add_subcommand("gram", "Shapovalov Gram matrix on one Verma weight space");
    add_common(gr, o, true, true);
    auto* ks = app.add_subcommand("ksdet", "factored Kac-Shapovalov determinant");
    add_common(ks, o, true, true);
    ks->add_option("--ks-norm", o.ks_norm, "coroot | printed");
    auto* orc = app.add_subcommand("oracle", "compare verdicts with Gram positivity up to a depth");
    add_common(orc, o, true, false);
    orc->add_option("--depth", o.depth, "maximal height of eta");
    orc->add_option("--max-depth", o.max_depth, "upper bound accepted for --depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*rho) return cmd_rho(o);
        if (*cls) return cmd_classify(o);
        if (*mar) return cmd_margins(o);
        if (*fam) return cmd_family(o);
        if (*gr) return cmd_gram(o);
        if (*ks) return cmd_ksdet(o);
        if (*orc) return cmd_oracle(o);
    } catch (const Error& e) {
        std::cout << json{{"error", error_code_name(e.code())}, {"message", e.what()}}.dump(2) << "\n";
        std::cerr << e.what() << "\n";
        return e.code() == ErrorCode::Parse ? kExitUsage : kExitInvalid;
    }
    return kExitUsage;
}
