#ifndef SYZ_INSTANCE_HPP
#define SYZ_INSTANCE_HPP

#include "syz/amoeba.hpp"
#include "syz/charts.hpp"
#include "syz/sigma.hpp"
#include "syz/spine.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace syz {

inline constexpr const char* kVersion = "0.1.0";

struct InstanceOptions {
    Window window{-4, -4, 3, 3};
    std::vector<double> s_ladder;   // defaults to e^2, e^4, e^6, e^8
    int grid_r = 80;
    int grid_phi = 80;
};

/// A dual reflexive pair with heights, loaded from a JSON instance file.
struct Instance {
    int d = 0;
    LatticePolytope delta;
    LatticePolytope dual;
    HeightFunction lambda;   // on the lattice points of delta
    HeightFunction nu;       // on the lattice points of the dual
    bool lambda_auto = true;
    bool nu_auto = true;
    std::uint64_t seed = 0;
    std::string hash;        // canonical content hash of the instance
    InstanceOptions options;

    Triangulation s() const;   // boundary triangulation from lambda
    Triangulation t() const;   // boundary triangulation from nu
};

Instance load_instance(const std::string& path);
Instance instance_from_json(const nlohmann::json& j);

// --- reports; all JSON objects embed the instance hash and tool version ---

nlohmann::json report_check(const Instance& inst);
nlohmann::json report_sigma(const Instance& inst, bool with_homology);
nlohmann::json report_monodromy(const Instance& inst,
                                const std::optional<std::vector<VecZ>>& loop);
nlohmann::json report_mirror(const Instance& inst);
nlohmann::json report_spine(const Instance& inst);
nlohmann::json report_amoeba(const Instance& inst);

/// Σ, D, Γ and the spine in the documented export schema.
nlohmann::json export_complexes(const Instance& inst);

/// OFF file of the triangulated Σ for d = 3; proj maps R^{2d} to R^3 and
/// defaults to (m, n) ↦ (m + n) / 2.
std::string off_export(const Instance& inst, const std::optional<std::vector<double>>& proj);

std::string amoeba_cloud_csv(const Instance& inst);
std::string amoeba_table_csv(const Instance& inst);
std::string spine_segments_csv(const Instance& inst);

/// Parses "x,y;x,y;..." into an alternating loop vertex list.
std::vector<VecZ> parse_loop(const std::string& text, int d);

} // namespace syz

#endif
