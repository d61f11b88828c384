#include "catcenter/cli_run.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "catcenter/adjoint.hpp"
#include "catcenter/center.hpp"

namespace catcenter {

namespace {

using nlohmann::json;

[[noreturn]] void usage_error(const std::string& what) { throw std::invalid_argument(what); }

template <class Map>
const typename Map::mapped_type& resolve(const Map& m, const std::string& name,
                                         const std::string& kind) {
    auto it = m.find(name);
    if (it == m.end()) usage_error("unknown " + kind + " '" + name + "'");
    return it->second;
}

std::string flag_value(const std::vector<std::string>& args, const std::string& flag,
                       const std::string& fallback) {
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == flag) return args[i + 1];
    return fallback;
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
    for (const auto& a : args)
        if (a == flag) return true;
    return false;
}

RunResult run_check(const std::vector<std::string>& args, Workspace& ws) {
    if (args.size() < 2) usage_error("check needs a kind and a name");
    const std::string& kind = args[0];
    const std::string& name = args[1];
    RunResult res;
    if (kind == "category") {
        res.report = validate_category(*resolve(ws.categories, name, "category"));
    } else if (kind == "moncat") {
        res.report = validate_moncat(*resolve(ws.moncats, name, "moncat"));
        if (auto it = ws.moncat_braidings.find(name); it != ws.moncat_braidings.end()) {
            const MonCat& m = *ws.moncats.at(name);
            Ybo1 y{&m, it->second};
            res.report.merge(check_ybo1(y));
        }
    } else if (kind == "matcat") {
        const MatTwoCat& k = *resolve(ws.matcats, name, "matcat");
        std::vector<FpMat> pool{FpMat::identity(1, k.p), FpMat::identity(2, k.p),
                                FpMat::kron_swap(2, 2, k.p), FpMat(k.p, {{1, 1}, {0, 1}}),
                                FpMat(k.p, {{1, 0}})};
        res.report = validate_matbackend(MatBackend(k.p), pool);
    } else if (kind == "functor") {
        res.report = check_lax_monoidal(*resolve(ws.monfunctors, name, "monfunctor"));
    } else if (kind == "twocat") {
        res.report = validate_twocat(*resolve(ws.twocats, name, "twocat"));
    } else if (kind == "functor2") {
        res.report = check_functor2(*resolve(ws.functor2s, name, "functor2").f);
    } else if (kind == "transformation2") {
        res.report = check_transformation2(resolve(ws.transformation2s, name, "transformation2").t);
    } else if (kind == "bimonad") {
        res.report = check_bimonad(*resolve(ws.bimonads, name, "bimonad"));
    } else if (kind == "bilax") {
        const BilaxEntry& e = resolve(ws.bilaxen, name, "bilax functor");
        res.report = check_bilax_functor(e.f);
        if (e.f.d) res.report.merge(check_bilax_compatibility(e.f));
    } else if (kind == "yd") {
        const YdModule& v = *resolve(ws.ydmodules, name, "ydmodule");
        const std::string& bname = ws.yd_over.at(name);
        const Bimonad& b = *ws.bimonads.at(bname);
        const MatTwoCat& k = *ws.matcats.at(ws.bimonad_backend.at(bname));
        res.report = check_yd_module(b, v, k);
    } else if (kind == "bilax-transformation") {
        const YdModule& v = *resolve(ws.ydmodules, name, "ydmodule");
        const std::string& bname = ws.yd_over.at(name);
        const Bimonad& b = *ws.bimonads.at(bname);
        const MatTwoCat& k = *ws.matcats.at(ws.bimonad_backend.at(bname));
        TableTwoCat triv = trivial_twocat();
        TwoYbo triv_ybo = identity_two_ybo(triv);
        TwoYbo swap = swap_two_ybo(k);
        BilaxFunctor tb = bimonad_to_bilax(b, triv, triv_ybo, &swap);
        BilaxTransformation t = yd_to_bilax(b, v, k, tb);
        res.report = check_bilax_transformation(t, tb, tb);
    } else {
        usage_error("unknown check kind '" + kind + "'");
    }
    res.human = res.report.summary();
    return res;
}

RunResult run_center(const std::vector<std::string>& args, Workspace& ws) {
    if (args.empty()) usage_error("center needs a moncat name");
    const std::string& name = args[0];
    const MonCat& m = *resolve(ws.moncats, name, "moncat");
    auto& holder = ws.regular_bimodules[name];
    if (!holder) holder = std::make_unique<BimoduleCat>(regular_bimodule(m));
    const BimoduleCat& bim = *holder;

    Side side = flag_value(args, "--side", "left") == "right" ? Side::Right : Side::Left;
    Strength strength =
        flag_value(args, "--strength", "strong") == "weak" ? Strength::Weak : Strength::Strong;
    LaxMonFunctor identity = LaxMonFunctor::identity(m);
    const LaxMonFunctor* F = &identity;
    const LaxMonFunctor* G = &identity;
    // twists are named monfunctors; a NAME.spec argument is loaded first
    auto twist_of = [&](const std::string& arg) -> const LaxMonFunctor* {
        std::string name = arg;
        if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".spec") {
            parse_spec_file(arg, ws);
            name = arg.substr(0, arg.size() - 5);
            auto slash = name.find_last_of('/');
            if (slash != std::string::npos) name = name.substr(slash + 1);
            if (!ws.monfunctors.count(name)) {
                if (ws.monfunctors.empty()) usage_error("no monfunctor in " + arg);
                name = ws.monfunctors.rbegin()->first;
            }
        }
        return resolve(ws.monfunctors, name, "monfunctor").get();
    };
    if (has_flag(args, "--twist")) {
        for (std::size_t i = 0; i + 2 < args.size(); ++i)
            if (args[i] == "--twist") {
                F = twist_of(args[i + 1]);
                G = twist_of(args[i + 2]);
            }
    }

    CenterCategory z = enumerate_center(bim, *F, *G, side, strength);
    RunResult res;
    res.report.begin("center-category-valid");
    Report v = validate_category(z.cat);
    res.report.count(z.cat.num_morphisms());
    if (!v.ok()) res.report.fail("induced category invalid");
    std::ostringstream hs;
    hs << "center objects: " << z.objects.size() << "\n";
    const MonCat& e = *F->src;
    for (std::size_t i = 0; i < z.objects.size(); ++i) {
        hs << "  " << z.cat.object_name(static_cast<int>(i)) << ":";
        for (int x = 0; x < e.base.num_objects(); ++x)
            hs << " sigma[" << e.base.object_name(x) << "]="
               << bim.carrier.mor(z.objects[i].sigma[x]).name;
        hs << "\n";
    }
    if (has_flag(args, "--dualize")) {
        res.report.begin("duals");
        for (const HalfBraiding& h : z.objects) {
            if (h.strength != Strength::Strong) continue;
            Report dr = check_dual_lift(h);
            res.report.count();
            if (!dr.ok()) res.report.fail("dual of " + bim.carrier.object_name(h.M));
            HalfBraiding dual = lift_dual_to_center(h);
            hs << "  dual(" << bim.carrier.object_name(h.M) << ") = "
               << bim.carrier.object_name(dual.M) << "\n";
        }
    }
    res.human = hs.str();
    res.artifact = serialize_category(z.cat, name + "_center");
    return res;
}

RunResult run_adjoints(const std::vector<std::string>& args, Workspace& ws) {
    if (args.empty()) usage_error("adjoints needs a moncat or twocat name");
    const std::string& name = args[0];
    const TableTwoCat* k = nullptr;
    std::unique_ptr<TableTwoCat> own;
    if (ws.twocats.count(name)) {
        k = ws.twocats.at(name).get();
    } else {
        const MonCat& m = *resolve(ws.moncats, name, "moncat");
        own = std::make_unique<TableTwoCat>(deloop_moncat(m));
        k = own.get();
    }
    RunResult res;
    std::ostringstream hs;
    Autonomy a = is_autonomous(*k);
    res.report.begin("adjoints-listed");
    res.report.count();
    hs << (a.autonomous ? "autonomous: yes" : "autonomous: no, witness " + k->one_name(a.witness))
       << "\n";
    for (int x = 0; x < k->zero_cells(); ++x)
        for (int y = 0; y < k->zero_cells(); ++y)
            for (const One& f : k->one_cells(x, y)) {
                auto ls = find_adjoints(*k, f, Handedness::Left);
                auto rs = find_adjoints(*k, f, Handedness::Right);
                hs << "  " << k->one_name(f) << ": left";
                for (const auto& ad : ls) hs << " " << k->one_name(ad.u);
                hs << (ls.empty() ? " (none)" : "") << "; right";
                for (const auto& ad : rs) hs << " " << k->one_name(ad.u);
                hs << (rs.empty() ? " (none)" : "") << "\n";
            }
    res.human = hs.str();
    return res;
}

RunResult run_enumerate(const std::vector<std::string>& args, Workspace& ws) {
    if (args.size() < 2 || args[0] != "yd") usage_error("enumerate yd BIMONAD [--dim-bound N]");
    const std::string& name = args[1];
    const Bimonad& b = *resolve(ws.bimonads, name, "bimonad");
    const MatTwoCat& k = *ws.matcats.at(ws.bimonad_backend.at(name));
    int bound = std::stoi(flag_value(args, "--dim-bound", "2"));
    auto found = enumerate_yd_modules(b, k, bound);
    RunResult res;
    res.report.begin("yd-enumeration");
    res.report.count(static_cast<std::int64_t>(found.size()));
    std::ostringstream hs;
    hs << "yd structures up to dim " << bound << ": " << found.size() << "\n";
    for (const auto& v : found)
        hs << "  dim " << v.dim << " action " << v.action.to_string() << " coaction "
           << v.coaction.to_string() << "\n";
    res.human = hs.str();
    return res;
}

RunResult run_map_to_dist(const std::vector<std::string>& args, Workspace& ws) {
    if (args.empty()) usage_error("map-to-dist needs a bimonad name");
    const Bimonad& b = *resolve(ws.bimonads, args[0], "bimonad");
    DistCell cell = bimonad_to_dist(b);
    RunResult res;
    res.report = check_dist_cell(cell);
    res.report.merge(check_lambda(b, cell.lambda));
    std::ostringstream hs;
    hs << "lambda = " << cell.lambda.m.to_string() << "\n" << res.report.summary();
    res.human = hs.str();
    return res;
}

RunResult run_seed(const std::vector<std::string>&, Workspace&) {
    RunResult res;
    std::ostringstream art;
    for (const auto& [fname, text] : seed_suite_files())
        art << "### " << fname << "\n" << text;
    res.artifact = art.str();
    res.human = "seed suite assembled\n";
    return res;
}

}  // namespace

RunResult run_command(const std::vector<std::string>& args, Workspace& ws) {
    if (args.empty()) usage_error("no command given");
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (args[0] == "check") return run_check(rest, ws);
    if (args[0] == "center") return run_center(rest, ws);
    if (args[0] == "adjoints") return run_adjoints(rest, ws);
    if (args[0] == "enumerate") return run_enumerate(rest, ws);
    if (args[0] == "map-to-dist") return run_map_to_dist(rest, ws);
    if (args[0] == "seed-suite") return run_seed(rest, ws);
    usage_error("unknown command '" + args[0] + "'");
}

std::string report_json(const Report& r, const std::string& command, double timing_ms) {
    json j;
    j["schema_version"] = 1;
    j["tool"] = "catcenter";
    j["tool_version"] = "0.1.0";
    j["command"] = command;
    j["subject"] = r.subject();
    j["pass"] = r.ok();
    j["timing_ms"] = timing_ms;
    j["laws"] = json::array();
    for (const auto& l : r.laws()) {
        json lj;
        lj["law"] = l.law;
        lj["pass"] = l.pass;
        lj["checked"] = l.checked;
        lj["witnesses"] = l.witnesses;
        j["laws"].push_back(lj);
    }
    return j.dump(2) + "\n";
}

}  // namespace catcenter
