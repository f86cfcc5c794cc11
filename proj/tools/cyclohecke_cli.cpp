#include <CLI11.hpp>
#include <json.hpp>

#include <cyclohecke/alcove.hpp>
#include <cyclohecke/bgg.hpp>
#include <cyclohecke/calibrated.hpp>
#include <cyclohecke/crystal.hpp>
#include <cyclohecke/level1.hpp>
#include <cyclohecke/seminormal.hpp>
#include <cyclohecke/verify.hpp>

#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    std::string code;
    UsageError(std::string c, const std::string& msg) : std::runtime_error(msg), code(std::move(c)) {}
};

struct Options {
    int e = 0;
    int a = 1;
    std::vector<int> charge;
    std::vector<int> hbar;
    int n = -1;
    std::vector<int> partition;
    std::vector<int> weight;
    std::string multipartition;
    std::string format = "json";
    std::string suite = "all";
    std::string c;
    int jobs = 1;
};

json mp_json(const ch::Multipartition& mp) {
    json j = json::array();
    for (const auto& p : mp.comps()) j.push_back(p);
    return j;
}

std::string mp_tsv(const ch::Multipartition& mp) { return mp_json(mp).dump(); }

ch::Charge make_charge(const Options& o, bool need_cylindrical) {
    if (o.e == 0) throw UsageError("MISSING_ARGUMENT", "--e is required");
    if (o.charge.empty()) throw UsageError("MISSING_ARGUMENT", "--charge is required");
    ch::Charge c;
    try {
        c = ch::Charge(o.charge, o.e, o.a);
    } catch (const std::invalid_argument& ex) {
        throw UsageError("INVALID_PARAMETER", ex.what());
    }
    if (need_cylindrical && !c.cylindrical()) throw UsageError("CHARGE_NOT_CYLINDRICAL", "charge is not cylindrical");
    return c;
}

ch::Multipartition parse_mp(const std::string& text, int level) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw UsageError("PARSE_ERROR", std::string("--multipartition: ") + ex.what());
    }
    if (!j.is_array()) throw UsageError("PARSE_ERROR", "--multipartition must be an array of arrays");
    std::vector<ch::Partition> comps;
    for (const auto& part : j) {
        if (!part.is_array()) throw UsageError("PARSE_ERROR", "--multipartition must be an array of arrays");
        ch::Partition p;
        for (const auto& x : part) {
            if (!x.is_number_integer() || x.get<int>() < 0) throw UsageError("PARSE_ERROR", "parts must be nonnegative integers");
            p.push_back(x.get<int>());
        }
        if (!std::is_sorted(p.rbegin(), p.rend())) throw UsageError("PARSE_ERROR", "parts must be weakly decreasing");
        comps.push_back(p);
    }
    if (static_cast<int>(comps.size()) != level) throw UsageError("INVALID_PARAMETER", "multipartition level differs from the charge");
    return ch::Multipartition(comps);
}

void check_partition(const std::vector<int>& p) {
    if (p.empty()) throw UsageError("MISSING_ARGUMENT", "--partition is required");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] <= 0 || (i && p[i] > p[i - 1])) throw UsageError("PARSE_ERROR", "--partition must be positive and weakly decreasing");
}

// Frame of lambda's own heights, when it exists.
std::optional<ch::AlcoveFrame> own_frame(const ch::Multipartition& mp, const ch::Charge& c) {
    auto hb = mp.heights();
    int h = std::accumulate(hb.begin(), hb.end(), 0);
    if (h == 0 || h >= c.e || !ch::is_s_admissible(hb, c)) return std::nullopt;
    return ch::AlcoveFrame(c, hb);
}

int cmd_classify(const Options& o) {
    auto c = make_charge(o, true);
    if (o.n < 0) throw UsageError("MISSING_ARGUMENT", "--n is required");
    auto layers = ch::crystal_layers(o.n, c);
    json rows = json::array();
    for (const auto& mp : layers[o.n]) {
        json r;
        r["multipartition"] = mp_json(mp);
        r["flotw"] = ch::is_flotw(mp, c);
        r["cali"] = ch::is_cali(mp, c);
        auto f = own_frame(mp, c);
        if (f && !ch::on_some_wall(f->embed(mp), *f)) {
            r["alcove_length"] = ch::alcove_length(mp, *f);
            r["paths_F"] = ch::in_fundamental_alcove(f->embed(mp), *f) ? ch::count_fundamental_paths(mp, *f) : 0;
        } else {
            r["alcove_length"] = nullptr;
            r["paths_F"] = nullptr;
        }
        r["std"] = ch::count_standard_tableaux(mp);
        rows.push_back(r);
    }
    if (o.format == "tsv") {
        std::cout << "multipartition\tflotw\tcali\talcove_length\tstd\tpaths_F\n";
        for (const auto& r : rows)
            std::cout << r["multipartition"].dump() << '\t' << r["flotw"].dump() << '\t' << r["cali"].dump() << '\t'
                      << r["alcove_length"].dump() << '\t' << r["std"].dump() << '\t' << r["paths_F"].dump() << '\n';
    } else {
        json out;
        out["e"] = c.e;
        out["charge"] = c.s;
        out["n"] = o.n;
        out["rows"] = rows;
        std::cout << out.dump(2) << '\n';
    }
    return kOk;
}

int cmd_seminormal(const Options& o) {
    if (o.e < 2) throw UsageError("MISSING_ARGUMENT", "--e >= 2 is required");
    if (std::gcd(o.a, o.e) != 1) throw UsageError("INVALID_PARAMETER", "a must be coprime to e");
    std::vector<ch::Weight> cls;
    if (!o.weight.empty()) {
        if (!ch::is_calibrated_weight(ch::normalize_weight(o.weight, o.e), o.e))
            throw UsageError("INVALID_PARAMETER", "weight is not calibrated");
        cls = ch::weight_class(o.weight, o.e);
    } else {
        check_partition(o.partition);
        if (!ch::is_calibrated_crystal(o.partition, o.e))
            throw UsageError("INVALID_PARAMETER", "D(lambda) is not calibrated at this e");
        cls = ch::column_reading_class(o.partition, o.e);
    }
    auto mod = ch::seminormal_module(cls, o.e, o.a);
    auto rel = ch::verify_hecke_relations(mod);
    auto form = ch::form_signs(mod);
    const bool herm = form.consistent && ch::hermitian_invariant(mod, form);
    const bool unitary = ch::is_unitary_class(mod);
    const bool ok = ch::all_relations_hold(rel) && herm;
    if (o.format == "tsv") {
        std::cout << "weight\tsign\n";
        for (int i = 0; i < mod.dim(); ++i) std::cout << json(mod.cls[i]).dump() << '\t' << form.signs[i] << '\n';
        for (const auto& r : rel) std::cout << "# " << r.name << '\t' << (r.ok ? "ok" : "FAIL") << '\n';
        std::cout << "# hermitian\t" << (herm ? "ok" : "FAIL") << "\n# unitary\t" << (unitary ? "yes" : "no") << '\n';
    } else {
        json out;
        out["e"] = o.e;
        out["a"] = o.a;
        out["dim"] = mod.dim();
        json ws = json::array();
        for (int i = 0; i < mod.dim(); ++i) ws.push_back({{"weight", mod.cls[i]}, {"sign", form.signs[i]}});
        out["weights"] = ws;
        json rj;
        for (const auto& r : rel) rj[r.name] = r.ok;
        out["relations"] = rj;
        out["hermitian"] = herm;
        out["unitary"] = unitary;
        std::cout << out.dump(2) << '\n';
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_bgg(const Options& o) {
    auto c = make_charge(o, true);
    if (o.multipartition.empty()) throw UsageError("MISSING_ARGUMENT", "--multipartition is required");
    auto la = parse_mp(o.multipartition, c.level());
    std::vector<int> hb = o.hbar.empty() ? la.heights() : o.hbar;
    if (static_cast<int>(hb.size()) != c.level()) throw UsageError("INVALID_PARAMETER", "--hbar has the wrong length");
    int h = std::accumulate(hb.begin(), hb.end(), 0);
    if (h == 0 || h >= c.e || !ch::is_s_admissible(hb, c))
        throw UsageError("INVALID_PARAMETER", "hbar must be s-admissible with 0 < h < e");
    ch::AlcoveFrame f(c, hb);
    for (int m = 1; m <= c.level(); ++m)
        if (static_cast<int>(la.comp(m).size()) > hb[m - 1]) throw UsageError("INVALID_PARAMETER", "lambda is taller than hbar");
    if (!ch::in_fundamental_alcove(f.embed(la), f))
        throw UsageError("NOT_IN_FUNDAMENTAL_ALCOVE", "lambda is not in the fundamental alcove");

    auto P = ch::block_poset(la, f);
    auto signs = ch::sign_assignment(P);
    auto euler = ch::euler_check(P, la, f);
    auto conv = ch::graded_character_identity(P, la, f);
    auto klr = ch::verify_klr_relations(ch::build_klr_module(la, f));
    bool klr_ok = std::all_of(klr.begin(), klr.end(), [](const ch::KLRCheck& k) { return k.ok; });
    const bool ok = signs.feasible && euler.ok && conv.at(1) && klr_ok;

    if (o.format == "tsv") {
        std::cout << "multipartition\tlength\tstd\tgraded_character\n";
        for (std::size_t i = 0; i < P.nodes.size(); ++i)
            std::cout << mp_tsv(P.nodes[i]) << '\t' << P.length[i] << '\t' << ch::count_standard_tableaux(P.nodes[i]) << '\t'
                      << ch::format_character(ch::graded_specht_character(P.nodes[i], c)) << '\n';
        std::cout << "# edges\t" << P.edges.size() << "\n# diamonds\t" << P.diamonds.size() << "\n# strands\t"
                  << P.strands.size() << "\n# signs\t" << (signs.feasible ? "feasible" : "infeasible") << "\n# euler\t"
                  << euler.alternating_sum << '\t' << euler.fundamental_paths << "\n# klr\t" << (klr_ok ? "ok" : "FAIL") << '\n';
    } else {
        json out;
        out["multipartition"] = mp_json(la);
        out["charge"] = c.s;
        out["e"] = c.e;
        out["hbar"] = hb;
        json nodes = json::array();
        for (std::size_t i = 0; i < P.nodes.size(); ++i)
            nodes.push_back({{"multipartition", mp_json(P.nodes[i])},
                             {"length", P.length[i]},
                             {"std", ch::count_standard_tableaux(P.nodes[i])},
                             {"graded_character", ch::format_character(ch::graded_specht_character(P.nodes[i], c))}});
        out["nodes"] = nodes;
        json edges = json::array();
        for (std::size_t k = 0; k < P.edges.size(); ++k) {
            json e = {P.edges[k].first, P.edges[k].second};
            if (signs.feasible) e.push_back(signs.sign[k]);
            edges.push_back(e);
        }
        out["edges"] = edges;
        out["diamonds"] = P.diamonds.size();
        out["strands"] = P.strands.size();
        out["signs_feasible"] = signs.feasible;
        out["euler"] = {{"alternating_sum", euler.alternating_sum}, {"paths_F", euler.fundamental_paths}, {"ok", euler.ok}};
        out["graded_identity"] = {{"c0", conv.at(0)}, {"c1", conv.at(1)}, {"c2", conv.at(2)}};
        json kj;
        for (const auto& k : klr) kj[k.name] = k.ok;
        out["klr"] = kj;
        std::cout << out.dump(2) << '\n';
    }
    return ok ? kOk : kVerifyFailed;
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("PARSE_ERROR", "bad rational: " + s);
    if (q.get_den() == 0) throw UsageError("PARSE_ERROR", "zero denominator");
    q.canonicalize();
    return q;
}

std::vector<std::string> rat_strings(const std::vector<mpq_class>& v) {
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(q.get_str());
    return out;
}

int cmd_locus(const Options& o) {
    check_partition(o.partition);
    auto U = ch::unitary_locus(o.partition);
    auto hs = ch::hook_stats(o.partition);
    std::optional<bool> contains;
    mpq_class c;
    if (!o.c.empty()) {
        c = parse_rational(o.c);
        if (!ch::in_half_circle(c)) throw UsageError("INVALID_PARAMETER", "c must lie in (-1/2, 1/2]");
        contains = U.contains(c);
    }
    json out;
    out["partition"] = o.partition;
    out["ell"] = hs.ell;
    out["m"] = hs.m;
    if (U.full) {
        out["interval"] = {"-1/2", "1/2"};
        out["left_open"] = true;
        out["excluded"] = rat_strings(U.excluded);
    } else {
        out["interval"] = {mpq_class(-U.radius).get_str(), U.radius.get_str()};
        out["points"] = rat_strings(U.points);
    }
    if (contains) {
        out["c"] = c.get_str();
        out["contains"] = *contains;
    }
    if (o.format == "tsv") {
        for (auto it = out.begin(); it != out.end(); ++it) std::cout << it.key() << '\t' << it.value().dump() << '\n';
    } else {
        std::cout << out.dump(2) << '\n';
    }
    return kOk;
}

int cmd_verify(const Options& o) {
    auto names = ch::suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end() && o.suite != "klr")
        throw UsageError("UNKNOWN_SUITE", "unknown suite: " + o.suite);
    ch::SweepLimits lim;
    if (o.n >= 0) lim = lim.capped(o.n);
    auto results = ch::run_suite(o.suite, lim, o.jobs);
    if (o.suite == "klr")
        results.erase(std::remove_if(results.begin(), results.end(), [](const ch::SweepResult& r) { return r.id != 11; }),
                      results.end());
    bool ok = true;
    json arr = json::array();
    for (const auto& r : results) {
        ok = ok && r.ok;
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"ok", r.ok},
                       {"checked", r.checked},
                       {"failures", r.failures},
                       {"note", r.note},
                       {"examples", r.examples}});
    }
    if (o.format == "tsv") {
        std::cout << "id\tstatus\tname\tchecked\tfailures\n";
        for (const auto& r : results)
            std::cout << r.id << '\t' << (r.ok ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.checked << '\t' << r.failures << '\n';
    } else {
        std::cout << json({{"suite", o.suite}, {"ok", ok}, {"results", arr}}).dump(2) << '\n';
    }
    return ok ? kOk : kVerifyFailed;
}

void emit_error(const std::string& code, const std::string& msg) {
    std::cout << json({{"error", code}, {"message", msg}}).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calibrated representations of cyclotomic Hecke algebras"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    };
    auto add_charge = [&](CLI::App* sub) {
        sub->add_option("--e", o.e, "quantum characteristic")->required();
        sub->add_option("--a", o.a, "q = exp(2 pi i a/e)");
        sub->add_option("--charge", o.charge, "s1,s2,...")->delimiter(',')->required();
    };

    auto* classify = app.add_subcommand("classify", "crystal component of size n with Cali and FLOTW flags");
    add_charge(classify);
    classify->add_option("--n", o.n, "size")->required();
    add_format(classify);

    auto* semi = app.add_subcommand("seminormal", "seminormal module of a weight class");
    semi->add_option("--e", o.e)->required();
    semi->add_option("--a", o.a);
    auto* wopt = semi->add_option("--weight", o.weight, "m1,m2,... (exponents of q)")->delimiter(',');
    auto* popt = semi->add_option("--partition", o.partition, "level-one partition; uses its column-reading class")->delimiter(',');
    wopt->excludes(popt);
    add_format(semi);

    auto* bgg = app.add_subcommand("bgg", "block poset, signs, characters and KLR check");
    add_charge(bgg);
    bgg->add_option("--multipartition", o.multipartition, "JSON, e.g. [[2,1],[1]]")->required();
    bgg->add_option("--hbar", o.hbar, "row bound per component")->delimiter(',');
    add_format(bgg);

    auto* locus = app.add_subcommand("locus", "unitary locus of a partition");
    locus->add_option("--partition", o.partition)->delimiter(',')->required();
    locus->add_option("--c", o.c, "test membership of p/q");
    add_format(locus);

    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->add_option("--suite", o.suite, "classify|seminormal|geometry|degree|bgg|klr|level1|dominance|all");
    verify->add_option("--n", o.n, "cap every size bound");
    verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kUsage;
    }

    try {
        if (*classify) return cmd_classify(o);
        if (*semi) {
            if (o.weight.empty() && o.partition.empty()) throw UsageError("MISSING_ARGUMENT", "--weight or --partition is required");
            return cmd_seminormal(o);
        }
        if (*bgg) return cmd_bgg(o);
        if (*locus) return cmd_locus(o);
        if (*verify) return cmd_verify(o);
    } catch (const UsageError& ex) {
        emit_error(ex.code, ex.what());
        return kUsage;
    } catch (const std::invalid_argument& ex) {
        emit_error("INVALID_PARAMETER", ex.what());
        return kUsage;
    }
    return kUsage;
}
