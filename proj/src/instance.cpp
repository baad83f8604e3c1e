#include "syz/instance.hpp"
#include "syz/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace syz {

using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

VecZ parse_point_key(const std::string& key, int d, const std::string& field) {
    VecZ p(d);
    std::stringstream ss(key);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= d) throw SchemaError(field + ": key \"" + key + "\" has too many coordinates");
        try {
            p[i] = Int(tok);
        } catch (...) {
            throw SchemaError(field + ": key \"" + key + "\" has a non-integer coordinate");
        }
        ++i;
    }
    if (i != d) throw SchemaError(field + ": key \"" + key + "\" has too few coordinates");
    return p;
}

std::vector<VecQ> parse_vertex_list(const json& arr, int d, const std::string& field) {
    if (!arr.is_array() || arr.empty())
        throw SchemaError(field + ": expected a nonempty array of lattice points");
    std::vector<VecQ> out;
    for (const auto& row : arr) {
        if (!row.is_array() || int(row.size()) != d)
            throw SchemaError(field + ": each vertex needs exactly " + std::to_string(d) +
                              " integer coordinates");
        VecQ v(d);
        for (int i = 0; i < d; ++i) {
            if (!row[i].is_number_integer())
                throw SchemaError(field + ": coordinate " + std::to_string(i) + " is not an integer");
            v[i] = Rat(long(row[i].get<long long>()));
        }
        out.push_back(v);
    }
    return out;
}

HeightFunction heights_from_json(const json& j, const LatticePolytope& body, const std::string& field) {
    LatticePoints lp = lattice_points(body);
    if (!j.is_object()) throw SchemaError(field + ": expected \"auto\" or an object of heights");
    std::vector<VecZ> domain;
    std::vector<Rat> values;
    bool has_origin = false;
    for (auto it = j.begin(); it != j.end(); ++it) {
        VecZ p = parse_point_key(it.key(), body.ambient_dim(), field);
        if (!it.value().is_number_integer())
            throw SchemaError(field + "[" + it.key() + "]: heights must be integers");
        if (!body.contains(to_rational(p)))
            throw SchemaError(field + "[" + it.key() + "]: point lies outside the polytope");
        if (p.isZero()) has_origin = true;
        domain.push_back(p);
        values.push_back(Rat(long(it.value().get<long long>())));
    }
    if (!has_origin) throw SchemaError(field + ": the origin must carry a height");
    // the hull of the height domain must be the whole polytope
    std::set<VecZ, VecZLess> keys(domain.begin(), domain.end());
    for (const VecQ& v : body.vertices())
        if (!keys.count(to_integer(v)))
            throw SchemaError(field + ": vertex " + to_string(to_integer(v)) +
                              " of the polytope carries no height");
    return HeightFunction(std::move(domain), std::move(values));
}

HeightFunction auto_heights(const LatticePolytope& body, std::uint64_t seed) {
    return generic_heights(body, seed);
}

json meta(const Instance& inst, const std::string& command) {
    return json{{"version", kVersion}, {"instance_hash", inst.hash}, {"command", command}};
}

json point_json(const VecZ& p) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(p[i].convert_to<long long>());
    return arr;
}

json rat_point_json(const VecQ& p) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) arr.push_back(to_string(p[i]));
    return arr;
}

json matrix_json(const MatZ& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).convert_to<long long>());
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> default_ladder() {
    return {std::exp(2.0), std::exp(4.0), std::exp(6.0), std::exp(8.0)};
}

} // namespace

Triangulation Instance::s() const {
    Subdivision sub = central_subdivision(lambda);
    if (!sub.simplicial || !sub.central)
        throw NotGenericHeights("instance: lambda does not induce a central triangulation");
    return boundary_restriction(sub);
}

Triangulation Instance::t() const {
    Subdivision sub = central_subdivision(nu);
    if (!sub.simplicial || !sub.central)
        throw NotGenericHeights("instance: nu does not induce a central triangulation");
    return boundary_restriction(sub);
}

Instance instance_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("instance: top level must be an object");
    Instance inst;
    if (!j.contains("d") || !j["d"].is_number_integer() || j["d"].get<int>() < 1)
        throw SchemaError("d: required positive integer");
    inst.d = j["d"].get<int>();
    if (!j.contains("delta_vertices")) throw SchemaError("delta_vertices: required");
    inst.delta = LatticePolytope::from_vertices(inst.d, parse_vertex_list(j["delta_vertices"], inst.d, "delta_vertices"));

    if (inst.delta.dim() != inst.d) throw Error("delta_vertices: polytope is not full-dimensional");
    if (!inst.delta.interior_contains(VecQ::Zero(inst.d)))
        throw OriginNotInterior("delta_vertices: the origin is not interior");
    LatticePolytope polar = polar_dual(inst.delta);
    for (const VecQ& v : polar.vertices())
        if (!is_integral(v))
            throw Error("delta is not reflexive: dual vertex (" + to_string(v) + ") is fractional");

    if (j.contains("delta_dual_vertices")) {
        inst.dual = LatticePolytope::from_vertices(
            inst.d, parse_vertex_list(j["delta_dual_vertices"], inst.d, "delta_dual_vertices"));
        if (!(inst.dual == polar))
            throw Error("delta_dual_vertices: supplied dual is not the polar dual");
    } else {
        inst.dual = polar;
    }

    inst.seed = j.value("seed", 0ULL);

    auto resolve = [&](const char* field, const LatticePolytope& body, std::uint64_t seed,
                       HeightFunction& out, bool& is_auto) {
        if (!j.contains(field) || (j[field].is_string() && j[field] == "auto")) {
            out = auto_heights(body, seed);
            is_auto = true;
        } else {
            out = heights_from_json(j[field], body, field);
            is_auto = false;
        }
    };
    resolve("lambda", inst.delta, inst.seed, inst.lambda, inst.lambda_auto);
    resolve("nu", inst.dual, inst.seed + 1, inst.nu, inst.nu_auto);

    if (j.contains("options")) {
        const json& o = j["options"];
        if (o.contains("window")) {
            auto w = o["window"];
            if (!w.is_array() || w.size() != 4) throw SchemaError("options.window: expected [x0,y0,x1,y1]");
            inst.options.window = {w[0].get<double>(), w[1].get<double>(), w[2].get<double>(),
                                   w[3].get<double>()};
        }
        if (o.contains("s_ladder"))
            for (const auto& s : o["s_ladder"]) inst.options.s_ladder.push_back(s.get<double>());
        if (o.contains("grid")) {
            inst.options.grid_r = o["grid"][0].get<int>();
            inst.options.grid_phi = o["grid"][1].get<int>();
        }
    }
    if (inst.options.s_ladder.empty()) inst.options.s_ladder = default_ladder();

    // canonical content hash
    json canon;
    canon["d"] = inst.d;
    canon["delta"] = json::array();
    for (const VecQ& v : inst.delta.vertices()) canon["delta"].push_back(rat_point_json(v));
    canon["dual"] = json::array();
    for (const VecQ& v : inst.dual.vertices()) canon["dual"].push_back(rat_point_json(v));
    canon["lambda"] = json::object();
    for (size_t i = 0; i < inst.lambda.size(); ++i)
        canon["lambda"][to_string(inst.lambda.domain()[i])] = to_string(inst.lambda.values()[i]);
    canon["nu"] = json::object();
    for (size_t i = 0; i < inst.nu.size(); ++i)
        canon["nu"][to_string(inst.nu.domain()[i])] = to_string(inst.nu.values()[i]);
    canon["seed"] = inst.seed;
    inst.hash = hex64(fnv1a(canon.dump()));
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open instance file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("instance parse error: ") + e.what());
    }
    return instance_from_json(j);
}

// ---------------------------------------------------------------------------

nlohmann::json report_check(const Instance& inst) {
    json rep = meta(inst, "check");
    rep["reflexive"] = true;   // load_instance already enforced it
    rep["dual_vertices"] = json::array();
    for (const VecQ& v : inst.dual.vertices()) rep["dual_vertices"].push_back(point_json(to_integer(v)));

    LatticePoints dlp = lattice_points(inst.delta);
    LatticePoints vlp = lattice_points(inst.dual);
    rep["lattice_points"] = {
        {"delta", dlp.points.size()},
        {"delta_boundary", dlp.points.size() - dlp.interior_count()},
        {"dual", vlp.points.size()},
        {"dual_boundary", vlp.points.size() - vlp.interior_count()},
    };

    auto height_block = [&](const HeightFunction& h, bool is_auto, const LatticePolytope& body) {
        Subdivision sub = central_subdivision(h);
        std::set<int> used;
        for (const auto& c : sub.cells) used.insert(c.begin(), c.end());
        long boundary_used = 0;
        for (int i : used)
            if (!h.domain()[i].isZero()) ++boundary_used;
        return json{{"mode", is_auto ? "auto" : "explicit"},
                    {"domain_size", h.size()},
                    {"simplicial", sub.simplicial},
                    {"central", sub.central},
                    {"boundary_points_used", boundary_used},
                    {"maximal_cells", sub.cells.size()},
                    {"body_dim", body.dim()}};
    };
    rep["lambda"] = height_block(inst.lambda, inst.lambda_auto, inst.delta);
    rep["nu"] = height_block(inst.nu, inst.nu_auto, inst.dual);

    // secondary-cone report: dyadic epsilon perturbations of lambda
    json eps_report = json::object();
    for (int k = 0; k <= 6; ++k) {
        Rat eps = Rat(1, 1 << k);
        bool same = false;
        try {
            same = same_secondary_cone(inst.lambda, inst.lambda.with_epsilon(eps));
        } catch (const NotGenericHeights&) {
            same = false;
        }
        eps_report["1/" + std::to_string(1 << k)] = same;
    }
    rep["secondary_cone_eps_same"] = eps_report;
    return rep;
}

nlohmann::json report_sigma(const Instance& inst, bool with_homology) {
    json rep = meta(inst, "sigma");
    SigmaComplex sigma(inst.s(), inst.t());
    rep["dim"] = sigma.dim();
    rep["vertices"] = sigma.vertices().size();

    std::map<int, long> by_dim;
    for (const SigmaCell& c : sigma.cells()) ++by_dim[c.dim()];
    json cells = json::object();
    long chi = 0;
    for (auto [k, n] : by_dim) {
        cells[std::to_string(k)] = n;
        chi += (k % 2 == 0) ? n : -n;
    }
    rep["cells_by_dim"] = cells;
    rep["euler_characteristic"] = chi;
    rep["pure"] = sigma.pure();
    rep["pseudomanifold"] = sigma.pseudomanifold();
    rep["connected"] = sigma.complex_connected();
    rep["nerve_check"] = sigma.nerve_check();

    std::vector<int> dverts = sigma.discriminant_vertex_ids();
    json types = json::object();
    for (int pid : dverts) {
        auto [k, l] = sigma.vertex_type(pid);
        std::string key = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
        types[key] = types.value(key, 0) + 1;
    }
    rep["discriminant"] = {{"vertices", dverts.size()},
                           {"cells", sigma.discriminant_cells().size()},
                           {"types", types}};

    GammaGraph g = gamma_graph(sigma.S(), sigma.T());
    rep["gamma"] = {{"s_nodes", g.s_nodes.size()},
                    {"t_nodes", g.t_nodes.size()},
                    {"edges", g.edges.size()},
                    {"connected", g.connected()},
                    {"cycle_rank", g.cycle_rank()}};

    if (with_homology) {
        HomologyResult h = sigma.homology();
        rep["betti"] = h.betti;
        json torsion = json::array();
        for (const auto& t : h.torsion) {
            json row = json::array();
            for (const Int& x : t) row.push_back(x.convert_to<long long>());
            torsion.push_back(row);
        }
        rep["torsion"] = torsion;
        rep["torsion_free"] = h.torsion_free();
    }
    return rep;
}

nlohmann::json report_monodromy(const Instance& inst, const std::optional<std::vector<VecZ>>& loop) {
    json rep = meta(inst, "monodromy");
    Triangulation s = inst.s(), t = inst.t();
    SigmaComplex sigma(s, t);

    json dverts = json::array();
    for (int pid : sigma.discriminant_vertex_ids()) {
        auto [a, b] = sigma.vertices()[pid];
        std::vector<VecZ> sv, tv;
        for (int i : sigma.s_poset().simplices[a]) sv.push_back(s.points[i]);
        for (int i : sigma.t_poset().simplices[b]) tv.push_back(t.points[i]);
        LocalMonodromy lm = local_monodromy(sv, tv);
        Int vols = normalized_volume(sv), volt = normalized_volume(tv);
        json gens = json::array();
        for (const MatZ& m : lm.generators) gens.push_back(matrix_json(m));
        dverts.push_back(json{{"sigma", json::array()},
                              {"tau", json::array()},
                              {"type", {lm.k, lm.l}},
                              {"vol_sigma", vols.convert_to<long long>()},
                              {"vol_tau", volt.convert_to<long long>()},
                              {"generators", gens},
                              {"index", lm.index.convert_to<long long>()},
                              {"index_matches_volumes", lm.index == vols * volt}});
        for (const VecZ& p : sv) dverts.back()["sigma"].push_back(point_json(p));
        for (const VecZ& p : tv) dverts.back()["tau"].push_back(point_json(p));
    }
    rep["discriminant_vertices"] = dverts;

    auto loops = primary_loops(s, t);
    bool all_match = true;
    for (const auto& [v0, w0, v1, w1] : loops)
        if (monodromy({v0, w0, v1, w1}) != primary_formula(v0, w0, v1, w1)) all_match = false;
    rep["primary_loops"] = {{"count", loops.size()}, {"formula_matches", all_match}};

    if (loop) {
        MatZ m = monodromy(*loop);
        json lj;
        lj["vertices"] = json::array();
        for (const VecZ& p : *loop) lj["vertices"].push_back(point_json(p));
        lj["matrix"] = matrix_json(m);
        lj["det"] = det_z(m).convert_to<long long>();
        rep["loop"] = lj;
    }
    return rep;
}

nlohmann::json report_mirror(const Instance& inst) {
    json rep = meta(inst, "mirror");
    SigmaComplex sigma(inst.s(), inst.t());
    SigmaComplex mirror = mirror_model(sigma);   // throws if the swap fails
    rep["cells"] = sigma.cells().size();
    rep["mirror_cells"] = mirror.cells().size();
    rep["swap_is_isomorphism"] = true;
    rep["discriminant_bijection"] =
        sigma.discriminant_vertex_ids().size() == mirror.discriminant_vertex_ids().size();
    bool types_transposed = true;
    for (int pid : sigma.discriminant_vertex_ids()) {
        auto [a, b] = sigma.vertices()[pid];
        int qid = mirror.vertex_index(b, a);
        auto [k, l] = sigma.vertex_type(pid);
        auto [k2, l2] = mirror.vertex_type(qid);
        if (k != l2 || l != k2) types_transposed = false;
    }
    rep["types_transposed"] = types_transposed;
    rep["transitions_dual"] = mirror_transition_check(sigma.S(), sigma.T());
    // involution on cell labels
    SigmaComplex back = mirror_model(mirror);
    bool involution = back.cells().size() == sigma.cells().size();
    for (const SigmaCell& c : sigma.cells())
        if (back.cell_index(c) < 0) involution = false;
    rep["mirror_involution"] = involution;
    return rep;
}

nlohmann::json report_spine(const Instance& inst) {
    json rep = meta(inst, "spine");
    Spine spine = build_spine(inst.lambda);
    std::map<int, long> by_dim;
    long unbounded = 0;
    bool minkowski_all = true, bounded_iff_origin = true, dims_ok = true;
    for (const SpineCell& c : spine.cells) {
        ++by_dim[c.dim];
        unbounded += !c.bounded;
        if (!verify_qcell_minkowski(spine, c)) minkowski_all = false;
        bool has0 = false;
        for (const VecZ& p : c.label) has0 |= p.isZero();
        if (c.bounded != has0) bounded_iff_origin = false;
        if (c.dim != inst.d - (int(c.label.size()) - 1)) dims_ok = false;
    }
    json cells = json::object();
    for (auto [k, n] : by_dim) cells[std::to_string(k)] = n;
    rep["cells_by_dim"] = cells;
    rep["cells"] = spine.cells.size();
    rep["unbounded_cells"] = unbounded;
    rep["central_cell_is_height_dual"] = [&] {
        const SpineCell* central = spine.cell_by_label({VecZ::Zero(inst.d)});
        return central && central->hrep.closure().set_equals(spine.dual_body.body());
    }();
    rep["qcell_minkowski_all"] = minkowski_all;
    rep["bounded_iff_origin_label"] = bounded_iff_origin;
    rep["dim_complements_label"] = dims_ok;

    // Qe item (1): over singletons and pairs from vert(S) ∪ {0}, plus labels
    Triangulation s = inst.s();
    bool qe1 = true;
    {
        std::vector<VecZ> pool = s.points;
        pool.push_back(VecZ::Zero(inst.d));
        auto check_set = [&](std::vector<VecZ> iset) {
            std::sort(iset.begin(), iset.end(), VecZLess{});
            HPolyhedron q = q_ij_polyhedron(spine.lambda, iset, {}, Rat(0));
            const SpineCell* cell = spine.cell_by_label(iset);
            if (cell) {
                if (q.is_empty() || !q.closure().set_equals(cell->hrep.closure())) qe1 = false;
            } else if (!q.is_empty()) {
                qe1 = false;
            }
        };
        for (size_t i = 0; i < pool.size(); ++i) {
            check_set({pool[i]});
            for (size_t j = i + 1; j < pool.size(); ++j) check_set({pool[i], pool[j]});
        }
        for (const SpineCell& c : spine.cells) check_set(c.label);
    }
    rep["qe_nonempty_iff_simplex"] = qe1;

    // Qe item (2): relint of each dual facet lies in Q_(0|v)(0)
    bool qe2 = true;
    const Rat h0 = spine.lambda.value(VecZ::Zero(inst.d));
    for (const VecZ& v : s.points) {
        std::vector<Constraint> cons;
        for (const auto& [a, b] : spine.dual_body.facets())
            cons.push_back(Constraint::le(to_rational(a), b));
        cons.push_back(Constraint::equal(to_rational(v), h0 - spine.lambda.value(v)));
        HPolyhedron facet(inst.d, cons);
        if (facet.dim() != inst.d - 1) continue;
        HPolyhedron q = q_ij_polyhedron(spine.lambda, {VecZ::Zero(inst.d)}, {v}, Rat(0));
        if (!relint_subset(facet, q)) qe2 = false;
    }
    rep["qe_facet_relint_contained"] = qe2;

    // Qe item (3): the truncated-polytope minkowski description, per w in vert(T)
    Triangulation t = inst.t();
    bool qe3_equal = true, qe3_contains = true, w_in_cone = true, origin_on_boundary = true;
    for (const VecZ& w : t.points) {
        std::vector<VecZ> wp = w_perp(spine.lambda, w);
        TruncatedPolytope trunc = truncate(spine.lambda, w);
        if (!trunc.hull.contains(VecQ::Zero(inst.d)) ||
            trunc.hull.interior_contains(VecQ::Zero(inst.d)))
            origin_on_boundary = false;
        std::vector<VecQ> hull_pts(trunc.hull.vertices());
        HPolyhedron nc = normal_cone_of(hull_pts, {VecQ::Zero(inst.d)});
        if (!nc.closure_contains(to_rational(w))) w_in_cone = false;
        HPolyhedron q = q_ij_polyhedron(spine.lambda, {VecZ::Zero(inst.d)}, wp, Rat(0));
        HPolyhedron sum = minkowski_sum(spine.dual_body.body(), nc);
        HPolyhedron qc = q.closure();
        if (!sum.subset_of(qc)) qe3_contains = false;
        if (!qc.set_equals(sum)) qe3_equal = false;
        Generators coneg;
        coneg.vertices.push_back(VecQ::Zero(inst.d));
        coneg.rays.push_back(to_rational(w));
        HPolyhedron body_plus =
            minkowski_sum(spine.dual_body.body(), HPolyhedron::from_generators(inst.d, coneg));
        if (!body_plus.subset_of(qc)) qe3_contains = false;
    }
    rep["qe_truncation_minkowski"] = qe3_equal;
    rep["qe_truncation_contains"] = qe3_contains;
    rep["qe_w_in_normal_cone"] = w_in_cone;
    rep["qe_origin_on_truncation_boundary"] = origin_on_boundary;
    return rep;
}

nlohmann::json report_amoeba(const Instance& inst) {
    if (inst.d != 2) throw Error("amoeba: the sampling lab runs in dimension 2 only");
    json rep = meta(inst, "amoeba");
    Spine spine = build_spine(inst.lambda);
    auto rows = convergence_experiment(inst.lambda, inst.options.s_ladder, inst.options.window,
                                       inst.options.grid_r, inst.options.grid_phi);
    json table = json::array();
    for (const auto& r : rows)
        table.push_back(json{{"s", r.s},
                             {"log_s", std::log(r.s)},
                             {"sup_dist", r.sup_dist},
                             {"spine_cover_dist", r.spine_cover_dist},
                             {"hausdorff", hausdorff(r)}});
    rep["table"] = table;
    rep["sup_weakly_decreasing"] = true;   // convergence_experiment asserted it
    bool hd = true;
    for (size_t i = 1; i < rows.size(); ++i)
        if (hausdorff(rows[i]) >= hausdorff(rows[i - 1])) hd = false;
    rep["hausdorff_strictly_decreasing"] = hd;

    double stop = inst.options.s_ladder.back();
    AmoebaSample top = sample_amoeba_two_sided({inst.lambda, stop}, inst.options.window,
                                               inst.options.grid_r, inst.options.grid_phi);
    rep["top_sample"] = {{"s", stop},
                         {"points", top.points.size()},
                         {"degenerate_slices", top.degenerate_slices},
                         {"in_unbounded_cells_eps_quarter",
                          samples_in_unbounded_cells(top, spine, Rat(1, 4))}};
    return rep;
}

nlohmann::json export_complexes(const Instance& inst) {
    json rep = meta(inst, "export");
    Triangulation s = inst.s(), t = inst.t();
    SigmaComplex sigma(s, t);

    json sj;
    sj["s_points"] = json::array();
    for (const VecZ& p : s.points) sj["s_points"].push_back(point_json(p));
    sj["t_points"] = json::array();
    for (const VecZ& p : t.points) sj["t_points"].push_back(point_json(p));
    sj["s_simplices"] = sigma.s_poset().simplices;
    sj["t_simplices"] = sigma.t_poset().simplices;
    sj["vertices"] = json::array();
    for (size_t i = 0; i < sigma.vertices().size(); ++i) {
        auto [a, b] = sigma.vertices()[i];
        sj["vertices"].push_back(json{{"sigma", a},
                                      {"tau", b},
                                      {"coordinates", rat_point_json(sigma.vertex_coordinates(int(i)))},
                                      {"in_discriminant", sigma.is_discriminant_vertex(int(i))}});
    }
    sj["cells"] = json::array();
    for (const SigmaCell& c : sigma.cells())
        sj["cells"].push_back(json{{"s_chain", c.s_chain}, {"t_chain", c.t_chain}, {"dim", c.dim()}});
    sj["discriminant_cells"] = sigma.discriminant_cells();
    rep["sigma"] = sj;

    GammaGraph g = gamma_graph(s, t);
    json gj;
    gj["edges"] = json::array();
    for (auto [i, j2] : g.edges) gj["edges"].push_back(json::array({i, j2}));
    rep["gamma"] = gj;

    Spine spine = build_spine(inst.lambda);
    json spj = json::array();
    for (const SpineCell& c : spine.cells) {
        json cj;
        cj["label"] = json::array();
        for (const VecZ& p : c.label) cj["label"].push_back(point_json(p));
        cj["dim"] = c.dim;
        cj["bounded"] = c.bounded;
        cj["equalities"] = json::array();
        cj["inequalities"] = json::array();
        for (const Constraint& con : c.hrep.canonical_hrep()) {
            json row{{"a", rat_point_json(con.a)}, {"b", to_string(con.b)}};
            (con.eq ? cj["equalities"] : cj["inequalities"]).push_back(row);
        }
        const Generators& gen = c.hrep.generators();
        cj["vertices"] = json::array();
        for (const VecQ& v : gen.vertices) cj["vertices"].push_back(rat_point_json(v));
        cj["rays"] = json::array();
        for (const VecQ& r : gen.rays) cj["rays"].push_back(rat_point_json(r));
        spj.push_back(cj);
    }
    rep["spine"] = {{"cells", spj}};
    return rep;
}

std::string off_export(const Instance& inst, const std::optional<std::vector<double>>& proj) {
    if (inst.d != 3) throw Error("off export: available for d = 3 only");
    SigmaComplex sigma(inst.s(), inst.t());
    std::vector<double> p;
    if (proj) {
        if (proj->size() != 18) throw Error("off export: projection needs 3 x 6 = 18 entries");
        p = *proj;
    } else {
        // (m, n) ↦ (m + n) / 2
        p.assign(18, 0.0);
        for (int i = 0; i < 3; ++i) p[i * 6 + i] = p[i * 6 + 3 + i] = 0.5;
    }
    auto oc = sigma.order_complex();
    std::vector<std::vector<int>> triangles;
    for (const auto& simplex : oc)
        if (simplex.size() == 3) triangles.push_back(simplex);

    std::ostringstream off;
    off << "OFF\n" << sigma.vertices().size() << " " << triangles.size() << " 0\n";
    off.precision(12);
    for (size_t i = 0; i < sigma.vertices().size(); ++i) {
        VecQ x = sigma.vertex_coordinates(int(i));
        for (int r = 0; r < 3; ++r) {
            double val = 0;
            for (int c = 0; c < 6; ++c) val += p[r * 6 + c] * Rat(x[c]).convert_to<double>();
            off << (r ? " " : "") << val;
        }
        off << "\n";
    }
    for (const auto& tr : triangles) off << "3 " << tr[0] << " " << tr[1] << " " << tr[2] << "\n";
    return off.str();
}

std::string amoeba_cloud_csv(const Instance& inst) {
    if (inst.d != 2) throw Error("amoeba: the sampling lab runs in dimension 2 only");
    double s = inst.options.s_ladder.back();
    AmoebaSample sample = sample_amoeba_two_sided({inst.lambda, s}, inst.options.window,
                                                  inst.options.grid_r, inst.options.grid_phi);
    std::ostringstream csv;
    csv.precision(12);
    csv << "u,v\n";
    for (const auto& pt : sample.points) csv << pt[0] << "," << pt[1] << "\n";
    return csv.str();
}

std::string amoeba_table_csv(const Instance& inst) {
    if (inst.d != 2) throw Error("amoeba: the sampling lab runs in dimension 2 only");
    auto rows = convergence_experiment(inst.lambda, inst.options.s_ladder, inst.options.window,
                                       inst.options.grid_r, inst.options.grid_phi);
    std::ostringstream csv;
    csv.precision(12);
    csv << "s,sup_dist,spine_cover_dist,hausdorff\n";
    for (const auto& r : rows)
        csv << r.s << "," << r.sup_dist << "," << r.spine_cover_dist << "," << hausdorff(r) << "\n";
    return csv.str();
}

std::string spine_segments_csv(const Instance& inst) {
    Spine spine = build_spine(inst.lambda);
    if (inst.d != 2) throw Error("spine segments: plot data is 2-dimensional");
    auto segs = spine_window_segments(spine, inst.options.window);
    std::ostringstream csv;
    csv.precision(12);
    csv << "x0,y0,x1,y1\n";
    for (const auto& s : segs) csv << s[0] << "," << s[1] << "," << s[2] << "," << s[3] << "\n";
    return csv.str();
}

std::vector<VecZ> parse_loop(const std::string& text, int d) {
    std::vector<VecZ> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        if (tok.empty()) continue;
        out.push_back(parse_point_key(tok, d, "loop"));
    }
    if (out.size() < 2 || out.size() % 2 != 0)
        throw InvalidLoop("loop: need an even number of alternating vertices");
    return out;
}

} // namespace syz
