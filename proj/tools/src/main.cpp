#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include <hypcheck/group.hpp>
#include <hypcheck/limits.hpp>
#include <hypcheck/parse.hpp>
#include <hypcheck/suite.hpp>
#include <hypcheck/version.hpp>

namespace {

using namespace hypcheck;

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

int cmd_verify(const std::string& ids, int samples, std::uint64_t seed, long nmax,
               const std::string& json_path, int jobs) {
    SuiteConfig cfg;
    cfg.ids = resolve_ids(ids);
    if (cfg.ids.empty()) {
        std::cerr << "verify: empty id list\n";
        return 2;
    }
    cfg.samples = samples;
    cfg.n_max = nmax;
    cfg.seed = seed;
    SuiteReport report = run_suite(cfg, jobs);
    std::cout << report_to_text(report);
    if (!json_path.empty()) write_json(json_path, report_to_json(report));
    return report.total_fails() == 0 ? 0 : 1;
}

int cmd_eval(const std::string& expr, std::optional<long> partial) {
    SeriesSpec<RatFun> s = parse_series(expr);
    RatFun value = partial ? partial_sum(s, *partial) : eval_terminating(s);
    std::cout << value.str() << "\n";
    return 0;
}

nlohmann::ordered_json group_json(Family f) {
    const FamilyData& d = family_data(f);
    GroupTable g = family_group(f);

    nlohmann::ordered_json j;
    j["family"] = d.name;
    j["function"] = named(d.fn).name;
    auto elems = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < g.elements.size(); ++k) {
        nlohmann::ordered_json e;
        e["id"] = d.relation_ids[k];
        e["map"] = g.elements[k].str(d.param_names);
        e["order"] = g.orders[k];
        elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    auto table = nlohmann::ordered_json::array();
    for (const auto& row : g.table) {
        auto r = nlohmann::ordered_json::array();
        for (int v : row) r.push_back(v + 1);
        table.push_back(std::move(r));
    }
    j["table"] = std::move(table);
    j["classification"] = group_label_str(classify_group(g));

    for (const auto& sd : sym_families()) {
        if (sd.base != f) continue;
        nlohmann::ordered_json rj;
        rj["function"] = named(sd.sym).name;
        rj["map"] = sd.rho.str(named(sd.sym).param_names);
        auto perms = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < sd.perms.size(); ++k) {
            nlohmann::ordered_json p;
            p["perm"] = sd.perm_names[k];
            p["relation"] = d.relation_ids[k];
            p["holds"] = verify_reparameterization(sd.sym, static_cast<int>(k)).holds();
            perms.push_back(std::move(p));
        }
        rj["permutations"] = std::move(perms);
        j["reparameterization"] = std::move(rj);
    }
    return j;
}

int cmd_group(const std::string& name, const std::string& json_path) {
    std::vector<Family> selected;
    if (name == "all") {
        for (const auto& d : families()) selected.push_back(d.family);
    } else if (const FamilyData* d = find_family(name)) {
        selected.push_back(d->family);
    } else {
        std::cerr << "group: unknown family " << name
                  << " (expected one of T, Ttilde, R, Rtilde, Q, M, all)\n";
        return 2;
    }
    for (std::size_t i = 0; i < selected.size(); ++i) {
        if (i) std::cout << "\n";
        std::cout << print_group(selected[i]);
    }
    if (!json_path.empty()) {
        if (selected.size() == 1) {
            write_json(json_path, group_json(selected[0]));
        } else {
            auto arr = nlohmann::ordered_json::array();
            for (Family f : selected) arr.push_back(group_json(f));
            write_json(json_path, arr);
        }
    }
    return 0;
}

nlohmann::ordered_json omega_json(const OmegaTable& t) {
    nlohmann::ordered_json j;
    j["label"] = t.label;
    j["gammas"] = t.gammas;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.ns.size(); ++i) {
        nlohmann::ordered_json r;
        r["n"] = t.ns[i];
        auto vals = nlohmann::ordered_json::array();
        for (const auto& v : t.values[i]) vals.push_back(limit_result_str(v));
        r["values"] = std::move(vals);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

int cmd_omega(long nmax, long gmin, long gmax, const std::string& chen_chu_a,
              const std::string& json_path) {
    if (gmin > gmax) {
        std::cerr << "omega: --gmin exceeds --gmax\n";
        return 2;
    }
    OmegaTable t;
    if (chen_chu_a.empty()) {
        t = omega_chu_table(nmax, gmin, gmax);
    } else {
        t = omega_chen_chu_table(nmax, gmin, gmax, parse_rational(chen_chu_a));
    }
    std::cout << omega_table_text(t);
    if (!json_path.empty()) write_json(json_path, omega_json(t));
    return 0;
}

int cmd_catalog(const std::string& json_path) {
    auto rows = list_catalog();
    std::size_t w = 2;
    for (const auto& r : rows) w = std::max(w, r.id.size());
    for (const auto& r : rows)
        std::cout << r.id << std::string(w - r.id.size(), ' ') << "  arity "
                  << r.arity << "  " << r.anchor << "\n";
    if (!json_path.empty()) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json j;
            j["id"] = r.id;
            j["anchor"] = r.anchor;
            j["arity"] = r.arity;
            j["guards"] = r.guards;
            arr.push_back(std::move(j));
        }
        write_json(json_path, arr);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for terminating hypergeometric series identities"};
    app.set_version_flag("--version", hypcheck::version_string);
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "fuzz catalog identities over exact rationals");
    std::string ids;
    int samples = 200;
    std::uint64_t seed = 0;
    long nmax = 8;
    std::string json_path;
    int jobs = 1;
    verify->add_option("--ids", ids, "id selector: 'all', a comma list, or ranges like TI1..TI6")
        ->required();
    verify->add_option("--samples", samples, "samples per identity")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "suite seed");
    verify->add_option("--nmax", nmax, "largest n to sample")->check(CLI::NonNegativeNumber);
    verify->add_option("--json", json_path, "write the JSON report to this path");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* eval = app.add_subcommand("eval", "evaluate one series expression exactly");
    std::string expr;
    std::optional<long> partial;
    eval->add_option("series", expr, "expression like '3F2(-3, 1/2, 1; 1/3, 2; 4)'")->required();
    eval->add_option("--partial", partial, "sum the first n+1 terms instead of to termination");

    auto* group = app.add_subcommand("group", "print an invariance-group certificate");
    std::string family = "all";
    std::string group_json_path;
    group->add_option("family", family, "T, Ttilde, R, Rtilde, Q, M, or all");
    group->add_option("--json", group_json_path, "write the JSON certificate to this path");

    auto* omega = app.add_subcommand("omega", "tabulate series limits at degenerate targets");
    long omega_nmax = 6, gmin = -2, gmax = 2;
    std::string chen_chu_a;
    std::string omega_json_path;
    omega->add_option("--nmax", omega_nmax, "largest n")->check(CLI::NonNegativeNumber);
    omega->add_option("--gmin", gmin, "smallest gamma");
    omega->add_option("--gmax", gmax, "largest gamma");
    omega->add_option("--chen-chu", chen_chu_a,
                      "tabulate the 3F2 limit at this rational a instead of the 2F1 one");
    omega->add_option("--json", omega_json_path, "write the table as JSON to this path");

    auto* catalog = app.add_subcommand("catalog", "list identity ids and anchors");
    std::string catalog_json_path;
    catalog->add_option("--json", catalog_json_path, "write the rows as JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify) return cmd_verify(ids, samples, seed, nmax, json_path, jobs);
        if (*eval) return cmd_eval(expr, partial);
        if (*group) return cmd_group(family, group_json_path);
        if (*omega) return cmd_omega(omega_nmax, gmin, gmax, chen_chu_a, omega_json_path);
        return cmd_catalog(catalog_json_path);
    } catch (const hypcheck::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
