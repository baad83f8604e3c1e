#include "syz/errors.hpp"
#include "syz/instance.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using syz::Instance;
using json = nlohmann::json;

struct Common {
    std::string instance_path;
    std::string out_dir;
    std::string window;
    std::string s_ladder;
    std::string format = "json";
    long long seed = -1;
};

void apply_overrides(Instance& inst, const Common& c) {
    if (!c.window.empty()) {
        std::stringstream ss(c.window);
        std::string tok;
        std::vector<double> vals;
        while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
        if (vals.size() != 4) throw syz::SchemaError("--window: expected x0,y0,x1,y1");
        inst.options.window = {vals[0], vals[1], vals[2], vals[3]};
    }
    if (!c.s_ladder.empty()) {
        std::stringstream ss(c.s_ladder);
        std::string tok;
        inst.options.s_ladder.clear();
        while (std::getline(ss, tok, ',')) inst.options.s_ladder.push_back(std::stod(tok));
        if (inst.options.s_ladder.empty()) throw syz::SchemaError("--s-ladder: expected a,b,c,...");
    }
}

Instance load(const Common& c) {
    if (c.instance_path.empty()) throw syz::SchemaError("--instance is required");
    std::ifstream in(c.instance_path);
    if (!in) throw syz::SchemaError("cannot open instance file: " + c.instance_path);
    json j = json::parse(in, nullptr, true, true);
    if (c.seed >= 0) j["seed"] = c.seed;
    Instance inst = syz::instance_from_json(j);
    apply_overrides(inst, c);
    return inst;
}

void emit(const Common& c, const std::string& name, const std::string& payload) {
    if (c.out_dir.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    } else {
        std::filesystem::create_directories(c.out_dir);
        std::ofstream out(std::filesystem::path(c.out_dir) / name);
        out << payload;
        std::cout << "wrote " << (std::filesystem::path(c.out_dir) / name).string() << "\n";
    }
}

void emit_json(const Common& c, const std::string& name, const json& rep) {
    emit(c, name, rep.dump(2) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SYZ-base toolkit for dual reflexive polytope pairs"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--instance", common.instance_path, "instance JSON file")->expected(1);
    app.add_option("--seed", common.seed, "override the instance seed");
    app.add_option("--out", common.out_dir, "output directory (default: stdout)");
    app.add_option("--window", common.window, "x0,y0,x1,y1 window override");
    app.add_option("--s-ladder", common.s_ladder, "comma-separated s values");
    app.add_option("--format", common.format, "export format: json|csv|off");
    app.fallthrough();

    auto* cmd_check = app.add_subcommand("check", "validate the instance and report genericity");
    auto* cmd_sigma = app.add_subcommand("sigma", "build the base complex, discriminant and graph");
    bool no_homology = false;
    cmd_sigma->add_flag("--no-homology", no_homology, "skip the homology computation");
    auto* cmd_mono = app.add_subcommand("monodromy", "per-vertex local monodromy report");
    std::string loop_text;
    cmd_mono->add_option("--loop", loop_text, "explicit loop x,y;x,y;... alternating v,w");
    auto* cmd_mirror = app.add_subcommand("mirror", "mirror duality checks");
    auto* cmd_spine = app.add_subcommand("spine", "corner-locus cells and their verifications");
    auto* cmd_amoeba = app.add_subcommand("amoeba", "sampling lab and convergence table (d = 2)");
    auto* cmd_export = app.add_subcommand("export", "export complexes (json), sigma (off) or amoeba (csv)");
    std::string proj_text;
    cmd_export->add_option("--proj", proj_text, "18 comma-separated entries of the 3x6 projection");

    CLI11_PARSE(app, argc, argv);

    try {
        Instance inst = load(common);
        if (cmd_check->parsed()) {
            emit_json(common, "check.json", syz::report_check(inst));
        } else if (cmd_sigma->parsed()) {
            emit_json(common, "sigma.json", syz::report_sigma(inst, !no_homology));
        } else if (cmd_mono->parsed()) {
            std::optional<std::vector<syz::VecZ>> loop;
            if (!loop_text.empty()) loop = syz::parse_loop(loop_text, inst.d);
            emit_json(common, "monodromy.json", syz::report_monodromy(inst, loop));
        } else if (cmd_mirror->parsed()) {
            emit_json(common, "mirror.json", syz::report_mirror(inst));
        } else if (cmd_spine->parsed()) {
            emit_json(common, "spine.json", syz::report_spine(inst));
        } else if (cmd_amoeba->parsed()) {
            json rep = syz::report_amoeba(inst);
            emit_json(common, "amoeba.json", rep);
            if (!common.out_dir.empty()) {
                emit(common, "amoeba_cloud.csv", syz::amoeba_cloud_csv(inst));
                emit(common, "amoeba_table.csv", syz::amoeba_table_csv(inst));
                emit(common, "spine_segments.csv", syz::spine_segments_csv(inst));
            }
        } else if (cmd_export->parsed()) {
            if (common.format == "json") {
                emit_json(common, "complexes.json", syz::export_complexes(inst));
            } else if (common.format == "off") {
                std::optional<std::vector<double>> proj;
                if (!proj_text.empty()) {
                    std::vector<double> vals;
                    std::stringstream ss(proj_text);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
                    proj = vals;
                }
                emit(common, "sigma.off", syz::off_export(inst, proj));
            } else if (common.format == "csv") {
                emit(common, "amoeba_cloud.csv", syz::amoeba_cloud_csv(inst));
                emit(common, "amoeba_table.csv", syz::amoeba_table_csv(inst));
                emit(common, "spine_segments.csv", syz::spine_segments_csv(inst));
            } else {
                throw syz::SchemaError("--format: expected json, csv or off");
            }
        }
        return 0;
    } catch (const syz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
